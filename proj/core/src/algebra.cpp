#include "astute/algebra.hpp"

#include "astute/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace astute {

namespace {

std::uint32_t reduce(std::int64_t v, std::uint32_t b) {
  std::int64_t r = v % static_cast<std::int64_t>(b);
  if (r < 0) r += b;
  return static_cast<std::uint32_t>(r);
}

// Extended gcd on nonnegative integers: returns g with g == x*a + y*c.
std::int64_t ext_gcd(std::int64_t a, std::int64_t c, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (c != 0) {
    const std::int64_t q = a / c;
    std::tie(a, c) = std::pair(c, a - q * c);
    std::tie(x0, x1) = std::pair(x1, x0 - q * x1);
    std::tie(y0, y1) = std::pair(y1, y0 - q * y1);
  }
  x = x0;
  y = y0;
  return a;
}

// Order of the quotient of (Z/bZ)^rows by the span of the columns of `a`.
// This is the Smith normal form of [a | b I] over Z: every entry is kept in
// [0, b), which amounts to column operations against the b I block.
BigInt quotient_order_mod(std::vector<std::vector<std::int64_t>> a, std::uint32_t b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  const std::int64_t mod = b;
  auto norm = [mod](std::int64_t v) {
    v %= mod;
    return v < 0 ? v + mod : v;
  };

  // new_r1 = x r1 + y r2, new_r2 = u r1 + v r2 applied to rows (or columns).
  auto combine_rows = [&](std::size_t r1, std::size_t r2, std::int64_t x, std::int64_t y,
                          std::int64_t u, std::int64_t v) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::int64_t p = a[r1][j], q = a[r2][j];
      a[r1][j] = norm(norm(x) * p + norm(y) * q);
      a[r2][j] = norm(norm(u) * p + norm(v) * q);
    }
  };
  auto combine_cols = [&](std::size_t c1, std::size_t c2, std::int64_t x, std::int64_t y,
                          std::int64_t u, std::int64_t v) {
    for (std::size_t i = 0; i < rows; ++i) {
      const std::int64_t p = a[i][c1], q = a[i][c2];
      a[i][c1] = norm(norm(x) * p + norm(y) * q);
      a[i][c2] = norm(norm(u) * p + norm(v) * q);
    }
  };

  BigInt order = 1;
  std::size_t rank = 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pr = rows, pc = cols;
    std::int64_t best = mod;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && a[i][j] < best) {
          best = a[i][j];
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][t], a[i][pc]);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const std::int64_t p = a[t][t], q = a[i][t];
        if (q == 0) continue;
        if (q % p == 0) {
          combine_rows(t, i, 1, 0, -(q / p), 1);
        } else {
          std::int64_t x = 0, y = 0;
          const std::int64_t g = ext_gcd(p, q, x, y);
          combine_rows(t, i, x, y, -(q / g), p / g);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const std::int64_t p = a[t][t], q = a[t][j];
        if (q == 0) continue;
        if (q % p == 0) {
          combine_cols(t, j, 1, 0, -(q / p), 1);
        } else {
          std::int64_t x = 0, y = 0;
          const std::int64_t g = ext_gcd(p, q, x, y);
          combine_cols(t, j, x, y, -(q / g), p / g);
        }
      }
      for (std::size_t i = t + 1; i < rows && !dirty; ++i) dirty = a[i][t] != 0;
    }
    order *= std::gcd(a[t][t], mod);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i) order *= b;
  return order;
}

std::vector<std::vector<std::int64_t>> circulant_mod(const ModPoly& lambda, std::size_t d) {
  std::vector<std::vector<std::int64_t>> a(d, std::vector<std::int64_t>(d, 0));
  const auto& co = lambda.coefficients();
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < co.size(); ++i) {
      auto& cell = a[(i + j) % d][j];
      cell = (cell + co[i]) % lambda.modulus();
    }
  return a;
}

}  // namespace

void check_modulus(std::uint32_t b) {
  if (b < 2 || b > kMaxModulus)
    throw Error(ErrorKind::InvalidArgument,
                "modulus must lie in [2, 65536], got " + std::to_string(b));
}

// ModInt

ModInt::ModInt(std::int64_t value, std::uint32_t modulus) : value_(0), modulus_(modulus) {
  check_modulus(modulus);
  value_ = reduce(value, modulus);
}

bool ModInt::is_unit() const noexcept { return std::gcd(value_, modulus_) == 1; }

ModInt ModInt::operator+(const ModInt& o) const {
  return ModInt(std::int64_t{value_} + o.value_, modulus_);
}
ModInt ModInt::operator-(const ModInt& o) const {
  return ModInt(std::int64_t{value_} - o.value_, modulus_);
}
ModInt ModInt::operator*(const ModInt& o) const {
  return ModInt(std::int64_t{value_} * o.value_, modulus_);
}
ModInt ModInt::operator-() const { return ModInt(-std::int64_t{value_}, modulus_); }

ModInt mod_inverse(const ModInt& a) {
  std::int64_t x = 0, y = 0;
  const std::int64_t g = ext_gcd(a.value(), a.modulus(), x, y);
  if (g != 1)
    throw Error(ErrorKind::NotInvertible, std::to_string(a.value()) + " has no inverse mod " +
                                              std::to_string(a.modulus()));
  return ModInt(x, a.modulus());
}

// ModPoly

ModPoly::ModPoly(std::uint32_t modulus) : modulus_(modulus) { check_modulus(modulus); }

ModPoly::ModPoly(std::vector<std::int64_t> coefficients, std::uint32_t modulus)
    : modulus_(modulus) {
  check_modulus(modulus);
  coeffs_.reserve(coefficients.size());
  for (auto c : coefficients) coeffs_.push_back(reduce(c, modulus));
  trim();
}

ModPoly ModPoly::monomial(std::uint32_t coefficient, std::size_t degree, std::uint32_t modulus) {
  ModPoly p(modulus);
  p.coeffs_.assign(degree + 1, 0);
  p.coeffs_[degree] = coefficient % modulus;
  p.trim();
  return p;
}

std::size_t ModPoly::degree() const {
  if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "zero polynomial has no degree");
  return coeffs_.size() - 1;
}

void ModPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void ModPoly::require_same_modulus(const ModPoly& o) const {
  if (o.modulus_ != modulus_)
    throw Error(ErrorKind::InvalidArgument, "polynomials over different moduli");
}

ModPoly ModPoly::operator+(const ModPoly& o) const {
  require_same_modulus(o);
  ModPoly r(modulus_);
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] = (coefficient(i) + o.coefficient(i)) % modulus_;
  r.trim();
  return r;
}

ModPoly ModPoly::operator-(const ModPoly& o) const {
  require_same_modulus(o);
  ModPoly r(modulus_);
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] = (coefficient(i) + modulus_ - o.coefficient(i)) % modulus_;
  r.trim();
  return r;
}

ModPoly ModPoly::operator*(const ModPoly& o) const {
  require_same_modulus(o);
  ModPoly r(modulus_);
  if (is_zero() || o.is_zero()) return r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] = static_cast<std::uint32_t>(
          (r.coeffs_[i + j] + std::uint64_t{coeffs_[i]} * o.coeffs_[j]) % modulus_);
  r.trim();
  return r;
}

ModPoly ModPoly::scaled(std::uint32_t factor) const {
  ModPoly r(modulus_);
  r.coeffs_.reserve(coeffs_.size());
  for (auto c : coeffs_)
    r.coeffs_.push_back(static_cast<std::uint32_t>(std::uint64_t{c} * factor % modulus_));
  r.trim();
  return r;
}

std::string ModPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || coeffs_[i] != 1) os << coeffs_[i];
    if (i >= 1) os << "X";
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

ModPoly u_poly(std::uint64_t m, std::uint32_t b) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "U_m needs m >= 1");
  return ModPoly(std::vector<std::int64_t>(m, 1), b);
}

ModPoly x_pow_minus_one(std::uint64_t m, std::uint32_t b) {
  std::vector<std::int64_t> c(m + 1, 0);
  c[0] = -1;
  c[m] += 1;
  return ModPoly(std::move(c), b);
}

ModPoly poly_rem(const ModPoly& p, const ModPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (p.modulus() != q.modulus())
    throw Error(ErrorKind::InvalidArgument, "polynomials over different moduli");
  const std::uint32_t b = q.modulus();
  const ModInt lead(q.leading(), b);
  if (!lead.is_unit())
    throw Error(ErrorKind::LeadingNotInvertible,
                "leading coefficient " + std::to_string(q.leading()) + " of divisor mod " +
                    std::to_string(b));
  const std::uint64_t inv = mod_inverse(lead).value();
  const std::size_t dq = q.degree();

  std::vector<std::uint64_t> r(p.coefficients().begin(), p.coefficients().end());
  for (std::size_t i = r.size(); i-- > dq;) {
    const std::uint64_t f = r[i] * inv % b;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= dq; ++j)
      r[i - dq + j] = (r[i - dq + j] + (b - f) * q.coefficient(j)) % b;
  }
  r.resize(std::min(r.size(), dq));
  return ModPoly(std::vector<std::int64_t>(r.begin(), r.end()), b);
}

ModPoly poly_gcd_field(const ModPoly& p, const ModPoly& q) {
  const std::uint32_t b = p.modulus();
  if (!is_prime(b))
    throw Error(ErrorKind::CompositeModulus,
                "Euclidean gcd needs a prime modulus, got " + std::to_string(b));
  ModPoly x = p, y = q;
  while (!y.is_zero()) {
    ModPoly r = poly_rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.scaled(mod_inverse(ModInt(x.leading(), b)).value());
}

bool is_prime(std::uint64_t m) noexcept {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

std::uint64_t euler_phi(std::uint64_t m) {
  if (m == 0) throw Error(ErrorKind::InvalidArgument, "euler_phi needs m >= 1");
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw Error(ErrorKind::InvalidArgument, "empty matrix");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : IntMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix");
    std::size_t c = 0;
    for (auto v : row) (*this)(r, c++) = v;
    ++r;
  }
}

std::vector<BigInt> smith_normal_form(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t steps = std::min(rows, cols);
  std::vector<BigInt> diag(steps, 0);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(a, j), m(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, a), m(i, b));
  };

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero magnitude in the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m(i, j) != 0 && (pr == rows || abs(m(i, j)) < abs(m(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) return diag;
      swap_rows(t, pr);
      swap_cols(t, pc);
      const BigInt pivot = m(t, t);

      bool residue = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        const BigInt q = m(i, t) / pivot;
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        residue = residue || m(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        const BigInt q = m(t, j) / pivot;
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        residue = residue || m(t, j) != 0;
      }
      if (residue) continue;

      // Enforce the divisibility chain: fold an offending row into row t.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m(i, j) % pivot != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m(t, j) += m(bad, j);
    }
    diag[t] = abs(m(t, t));
  }
  return diag;
}

IntMatrix circulant(const ModPoly& lambda, std::size_t d) {
  const auto a = circulant_mod(lambda, d);
  IntMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = a[i][j];
  return m;
}

IntMatrix ideal_lattice(const ModPoly& lambda, std::size_t d) {
  const auto a = circulant_mod(lambda, d);
  IntMatrix m(d, 2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i, j) = a[i][j];
    m(i, d + i) = lambda.modulus();
  }
  return m;
}

BigInt ideal_quotient_size(const ModPoly& lambda, std::uint64_t d) {
  if (lambda.is_zero()) throw Error(ErrorKind::InvalidArgument, "lambda must be nonzero");
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "d must be positive");
  return quotient_order_mod(circulant_mod(lambda, d), lambda.modulus());
}

std::uint64_t order_of_x(const ModPoly& lambda) {
  if (lambda.is_zero()) throw Error(ErrorKind::NotInvertible, "lambda is zero");
  const std::uint32_t b = lambda.modulus();
  const ModInt lead(lambda.leading(), b), constant(lambda.coefficient(0), b);
  if (!lead.is_unit())
    throw Error(ErrorKind::NotInvertible, "leading coefficient of lambda is not a unit");
  if (!constant.is_unit())
    throw Error(ErrorKind::NotInvertible, "constant term of lambda is not a unit");

  const std::size_t deg = lambda.degree();
  if (deg == 0) return 1;

  // X^deg == -(lead^-1) * (lower part of lambda) in Z/bZ[X]/(lambda).
  const std::uint64_t inv = mod_inverse(lead).value();
  std::vector<std::uint64_t> tail(deg);
  for (std::size_t i = 0; i < deg; ++i) tail[i] = (b - lambda.coefficient(i) * inv % b) % b;

  BigInt bound_big = boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(deg));
  const std::uint64_t bound = bound_big > BigInt(std::uint64_t{1} << 40)
                                  ? std::uint64_t{1} << 40
                                  : static_cast<std::uint64_t>(bound_big);

  std::vector<std::uint64_t> cur(deg, 0), one(deg, 0);
  cur[0] = one[0] = 1;
  for (std::uint64_t w = 1; w <= bound; ++w) {
    const std::uint64_t top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < deg; ++i) cur[i] = (cur[i] + top * tail[i]) % b;
    if (cur == one) return w;
  }
  throw Error(ErrorKind::BudgetExceeded, "order of X exceeded b^deg(lambda)");
}

bool membership_cUs(const ModPoly& lambda, const ModInt& c, std::uint64_t s) {
  if (s == 0) throw Error(ErrorKind::InvalidArgument, "s must be positive");
  if (c.is_zero()) return true;
  if (c.modulus() != lambda.modulus())
    throw Error(ErrorKind::InvalidArgument, "constant and lambda over different moduli");
  auto base = circulant_mod(lambda, s);
  auto extended = base;
  for (auto& row : extended) row.push_back(c.value());
  return quotient_order_mod(std::move(base), lambda.modulus()) ==
         quotient_order_mod(std::move(extended), lambda.modulus());
}

std::uint64_t smallest_cycle_length(const ModPoly& lambda, const ModInt& c, std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  const std::uint64_t omega = order_of_x(lambda);
  const std::uint64_t bound = std::lcm(k, std::uint64_t{lambda.modulus()} * omega);
  for (std::uint64_t s = k; s <= bound; s += k)
    if (membership_cUs(lambda, c, s)) return s;
  throw Error(ErrorKind::BudgetExceeded,
              "no cycle length found up to lcm(k, b * order) = " + std::to_string(bound));
}

}  // namespace astute
