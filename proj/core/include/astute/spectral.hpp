#pragma once

// Finite Fourier transform C(a_0...a_{n-1}) = sum a_i mu^i, mu = exp(2 pi i / n),
// and the distinguished vertices of pure-cycling-register orbits.
//
// Realness and vanishing of C are decided exactly by divisibility by the n-th
// cyclotomic polynomial over Z; only the sign of a provably nonzero imaginary
// part is read from the floating-point value.

#include "astute/graph.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace astute {

using Word = std::vector<Symbol>;

/// Phi_n with ascending integer coefficients.
std::vector<std::int64_t> cyclotomic(std::uint32_t n);

/// Remainder of an integer polynomial modulo Phi_n.
std::vector<std::int64_t> reduce_mod_cyclotomic(std::vector<std::int64_t> poly, std::uint32_t n);

struct Transform {
  std::complex<double> approx;
  std::vector<std::int64_t> exact;  // sum a_i X^i mod Phi_n; empty when C(s) = 0
};

Transform transform(const Word& s);

Word rotate(const Word& s);          // a_1 ... a_{n-1} a_0
Word rotate_inverse(const Word& s);  // a_{n-1} a_0 ... a_{n-2}

bool is_real_exact(const Word& s);
bool is_zero_exact(const Word& s);
/// -1, 0 or +1; 0 exactly when C(s) is real.
int imag_sign(const Word& s);

/// |C(rotate(s)) - mu^{-1} C(s)| < 1e-9.
bool rotation_identity_check(const Word& s);

/// |sum over the cycle of C(word)| < 1e-6 * length. Meaningful for n >= 2.
bool cycle_sum_check(const Cycle& cycle, const GraphParams& p);

/// For an arc s -> t of the de Bruijn graph: C(s) - C(rotate_inverse(t)) is
/// real, and it vanishes exactly when s == rotate_inverse(t).
struct ArcDifference {
  bool real = false;
  bool zero = false;
  bool matches_rotation = false;  // s == rotate_inverse(t)

  bool holds() const noexcept { return real && zero == matches_rotation; }
};
ArcDifference arc_difference(const Word& s, const Word& t);

/// The vertex where Im C crosses from >= 0 to < 0 along a PCR orbit, or the
/// smallest vertex when every transform on the orbit is real. When the orbit
/// winds around the polygon several times (k > n) the smallest crossing vertex
/// is returned. Throws NotPcrOrbit if the cycle is not an orbit of the PCR action.
Vertex distinguished_vertex(const Cycle& pcr_cycle, const GraphParams& p);

/// One distinguished vertex per PCR orbit of Gamma(n, k), in orbit order.
std::vector<Vertex> distinguished_vertices(const GraphParams& p);

/// Whether every cycle of the factor contains a distinguished vertex.
/// Throws PreconditionViolated unless k | n or n | k.
bool covering_check(const Factor& factor);

}  // namespace astute
