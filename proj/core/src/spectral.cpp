#include "astute/spectral.hpp"

#include "astute/error.hpp"
#include "astute/rules.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace astute {

namespace {

using IntPoly = std::vector<std::int64_t>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder and quotient of p by a monic divisor.
IntPoly divide_monic(IntPoly p, const IntPoly& divisor, IntPoly* quotient = nullptr) {
  trim(p);
  const std::size_t dd = divisor.size() - 1;
  if (quotient) quotient->assign(p.size() > dd ? p.size() - dd : 0, 0);
  for (std::size_t i = p.size(); i-- > dd;) {
    const std::int64_t f = p[i];
    if (f == 0) continue;
    if (quotient) (*quotient)[i - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) p[i - dd + j] -= f * divisor[j];
  }
  p.resize(std::min(p.size(), dd));
  trim(p);
  return p;
}

std::complex<double> mu_power(std::uint64_t i, std::uint32_t n) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i % n) / n);
}

Word word_of(const Vertex& v, const GraphParams& p) { return unpack_word(v.word, p.b, p.n); }

}  // namespace

std::vector<std::int64_t> cyclotomic(std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclotomic index must be positive");
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    IntPoly q;
    divide_monic(p, cyclotomic(d), &q);
    p = std::move(q);
  }
  return p;
}

std::vector<std::int64_t> reduce_mod_cyclotomic(std::vector<std::int64_t> poly, std::uint32_t n) {
  return divide_monic(std::move(poly), cyclotomic(n));
}

Transform transform(const Word& s) {
  const auto n = static_cast<std::uint32_t>(s.size());
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty word");
  Transform t{{0.0, 0.0}, {}};
  for (std::uint32_t i = 0; i < n; ++i) t.approx += static_cast<double>(s[i]) * mu_power(i, n);
  t.exact = reduce_mod_cyclotomic(IntPoly(s.begin(), s.end()), n);
  return t;
}

Word rotate(const Word& s) {
  Word r(s);
  if (!r.empty()) std::rotate(r.begin(), r.begin() + 1, r.end());
  return r;
}

Word rotate_inverse(const Word& s) {
  Word r(s);
  if (!r.empty()) std::rotate(r.rbegin(), r.rbegin() + 1, r.rend());
  return r;
}

bool is_real_exact(const Word& s) {
  const std::size_t n = s.size();
  // conj C(s) = sum a_{(n-i) mod n} mu^i.
  IntPoly diff(n);
  for (std::size_t i = 0; i < n; ++i)
    diff[i] = static_cast<std::int64_t>(s[i]) - static_cast<std::int64_t>(s[(n - i) % n]);
  return reduce_mod_cyclotomic(std::move(diff), static_cast<std::uint32_t>(n)).empty();
}

bool is_zero_exact(const Word& s) {
  return reduce_mod_cyclotomic(IntPoly(s.begin(), s.end()), static_cast<std::uint32_t>(s.size()))
      .empty();
}

int imag_sign(const Word& s) {
  if (is_real_exact(s)) return 0;
  const double im = transform(s).approx.imag();
  if (im == 0.0) throw Error(ErrorKind::InvalidArgument, "nonreal transform with zero imaginary part");
  return im > 0 ? 1 : -1;
}

bool rotation_identity_check(const Word& s) {
  const auto n = static_cast<std::uint32_t>(s.size());
  const auto lhs = transform(rotate(s)).approx;
  const auto rhs = std::conj(mu_power(1, n)) * transform(s).approx;
  return std::abs(lhs - rhs) < 1e-9;
}

bool cycle_sum_check(const Cycle& cycle, const GraphParams& p) {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& v : cycle) sum += transform(word_of(v, p)).approx;
  return std::abs(sum) < 1e-6 * static_cast<double>(cycle.size());
}

ArcDifference arc_difference(const Word& s, const Word& t) {
  const std::size_t n = s.size();
  if (t.size() != n) throw Error(ErrorKind::InvalidArgument, "words of different length");
  if (!std::equal(s.begin() + 1, s.end(), t.begin()))
    throw Error(ErrorKind::InvalidArgument, "words are not joined by a de Bruijn arc");
  const Word back = rotate_inverse(t);
  IntPoly diff(n);
  for (std::size_t i = 0; i < n; ++i)
    diff[i] = static_cast<std::int64_t>(s[i]) - static_cast<std::int64_t>(back[i]);
  IntPoly conj_diff(n);
  for (std::size_t i = 0; i < n; ++i) conj_diff[i] = diff[i] - diff[(n - i) % n];

  ArcDifference r;
  r.real = reduce_mod_cyclotomic(std::move(conj_diff), static_cast<std::uint32_t>(n)).empty();
  r.zero = reduce_mod_cyclotomic(std::move(diff), static_cast<std::uint32_t>(n)).empty();
  r.matches_rotation = s == back;
  return r;
}

Vertex distinguished_vertex(const Cycle& pcr_cycle, const GraphParams& p) {
  if (pcr_cycle.empty()) throw Error(ErrorKind::NotPcrOrbit, "empty cycle");
  const AffineRule pcr = make_pcr(p.b, p.n).affine;
  for (std::size_t i = 0; i < pcr_cycle.size(); ++i) {
    const Vertex& v = pcr_cycle[i];
    if (!is_valid_vertex(v, p) || act(pcr, p.k, v) != pcr_cycle[(i + 1) % pcr_cycle.size()])
      throw Error(ErrorKind::NotPcrOrbit, "cycle is not an orbit of the pure cycling register");
  }

  std::vector<int> signs;
  signs.reserve(pcr_cycle.size());
  for (const auto& v : pcr_cycle) signs.push_back(imag_sign(word_of(v, p)));

  const auto smaller = [&](const Vertex& a, const Vertex& b) {
    return vertex_index(a, p) < vertex_index(b, p);
  };
  if (std::all_of(signs.begin(), signs.end(), [](int s) { return s == 0; }))
    return *std::min_element(pcr_cycle.begin(), pcr_cycle.end(), smaller);

  std::vector<Vertex> crossings;
  for (std::size_t i = 0; i < pcr_cycle.size(); ++i) {
    const std::size_t prev = (i + pcr_cycle.size() - 1) % pcr_cycle.size();
    if (signs[i] < 0 && signs[prev] >= 0) crossings.push_back(pcr_cycle[i]);
  }
  return *std::min_element(crossings.begin(), crossings.end(), smaller);
}

std::vector<Vertex> distinguished_vertices(const GraphParams& p) {
  const Factor orbits = enumerate_factor(make_pcr(p.b, p.n).affine, p.k);
  std::vector<Vertex> out;
  out.reserve(orbits.size());
  for (const auto& c : orbits.cycles) out.push_back(distinguished_vertex(c, p));
  return out;
}

bool covering_check(const Factor& factor) {
  const GraphParams& p = factor.params;
  if (p.n % p.k != 0 && p.k % p.n != 0)
    throw Error(ErrorKind::PreconditionViolated,
                "covering property needs k | n or n | k (n=" + std::to_string(p.n) +
                    ", k=" + std::to_string(p.k) + ")");
  if (auto v = validate_factor(factor); !v)
    throw Error(ErrorKind::InvalidArgument, "invalid factor: " + v.diagnostic);

  std::vector<bool> marked(p.vertex_count(), false);
  for (const auto& v : distinguished_vertices(p)) marked[vertex_index(v, p)] = true;
  return std::all_of(factor.cycles.begin(), factor.cycles.end(), [&](const Cycle& c) {
    return std::any_of(c.begin(), c.end(),
                       [&](const Vertex& v) { return marked[vertex_index(v, p)]; });
  });
}

}  // namespace astute
