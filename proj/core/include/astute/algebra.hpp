#pragma once

// Exact arithmetic over Z/bZ and Z/bZ[X], integer Smith normal form, and the
// ideal computations used by the cycle-count formula.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace astute {

using BigInt = boost::multiprecision::cpp_int;

/// Largest supported alphabet size.
inline constexpr std::uint32_t kMaxModulus = 1u << 16;

/// Throws InvalidArgument unless 2 <= b <= kMaxModulus.
void check_modulus(std::uint32_t b);

class ModInt {
 public:
  ModInt(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_unit() const noexcept;

  ModInt operator+(const ModInt& o) const;
  ModInt operator-(const ModInt& o) const;
  ModInt operator*(const ModInt& o) const;
  ModInt operator-() const;
  bool operator==(const ModInt&) const = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

ModInt mod_inverse(const ModInt& a);

/// Polynomial over Z/bZ. coefficient(i) is the coefficient of X^i. The zero
/// polynomial has no coefficients and no degree.
class ModPoly {
 public:
  explicit ModPoly(std::uint32_t modulus);
  ModPoly(std::vector<std::int64_t> coefficients, std::uint32_t modulus);
  ModPoly(std::initializer_list<std::int64_t> coefficients, std::uint32_t modulus)
      : ModPoly(std::vector<std::int64_t>(coefficients), modulus) {}

  static ModPoly monomial(std::uint32_t coefficient, std::size_t degree, std::uint32_t modulus);

  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Throws InvalidArgument on the zero polynomial.
  std::size_t degree() const;
  std::uint32_t coefficient(std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  std::uint32_t leading() const { return coeffs_.at(degree()); }
  const std::vector<std::uint32_t>& coefficients() const noexcept { return coeffs_; }

  ModPoly operator+(const ModPoly& o) const;
  ModPoly operator-(const ModPoly& o) const;
  ModPoly operator*(const ModPoly& o) const;
  ModPoly scaled(std::uint32_t factor) const;
  bool operator==(const ModPoly&) const = default;

  std::string to_string() const;

 private:
  void trim();
  void require_same_modulus(const ModPoly& o) const;

  std::vector<std::uint32_t> coeffs_;
  std::uint32_t modulus_;
};

/// 1 + X + ... + X^{m-1}.
ModPoly u_poly(std::uint64_t m, std::uint32_t b);
/// X^m - 1.
ModPoly x_pow_minus_one(std::uint64_t m, std::uint32_t b);

ModPoly poly_rem(const ModPoly& p, const ModPoly& q);
/// Monic gcd over the field Z/bZ; b must be prime.
ModPoly poly_gcd_field(const ModPoly& p, const ModPoly& q);

bool is_prime(std::uint64_t m) noexcept;
std::uint64_t euler_phi(std::uint64_t m);
/// Ascending list of the positive divisors of m.
std::vector<std::uint64_t> divisors(std::uint64_t m);

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

/// Elementary divisors d_1 | d_2 | ... (min(rows, cols) entries, trailing
/// zeros for rank deficiency), all nonnegative.
std::vector<BigInt> smith_normal_form(IntMatrix m);

/// d x d integer matrix whose column j holds the coefficients of
/// X^j * lambda reduced mod X^d - 1.
IntMatrix circulant(const ModPoly& lambda, std::size_t d);
/// The d x 2d lattice presentation [circulant(lambda, d) | b I] of the ideal
/// (lambda, X^d - 1) inside Z^d.
IntMatrix ideal_lattice(const ModPoly& lambda, std::size_t d);

/// |Z/bZ[X] / (lambda, X^d - 1)|.
BigInt ideal_quotient_size(const ModPoly& lambda, std::uint64_t d);

/// Smallest w >= 1 with X^w = 1 mod lambda.
std::uint64_t order_of_x(const ModPoly& lambda);

/// Whether c * (1 + X + ... + X^{s-1}) lies in (lambda, X^s - 1).
bool membership_cUs(const ModPoly& lambda, const ModInt& c, std::uint64_t s);

/// Least multiple s of k with membership_cUs(lambda, c, s).
std::uint64_t smallest_cycle_length(const ModPoly& lambda, const ModInt& c, std::uint64_t k);

}  // namespace astute
