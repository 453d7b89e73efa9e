#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "llq/lamp_config.hpp"

namespace llq {

struct not_in_kernel : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Image of a configuration in Z_2^{Z_d}. d = 0 means Z itself (the paper's
/// Z_0 = Z convention), represented by a plain LampConfig.
struct Residues {
  long long modulus = 0;
  LampConfig line;                  // d == 0
  std::vector<bitops::Word> ring;   // d > 0: exactly d bits, clear tail

  bool is_zero() const;
  bool test(long long r) const;  // d > 0
  std::size_t weight() const;
  /// Image of x^s * f, i.e. the ring vector rotated: out[t] = in[(t-s) mod d].
  Residues rotated(long long s) const;
  void add(const Residues& other);  // GF(2); moduli must match

  friend bool operator==(const Residues& a, const Residues& b);
};

/// pi_d(f): parity of f summed over residue classes mod d; identity for d=0.
Residues project(const LampConfig& f, long long d);

/// Bezout data for binomials: sum_i coeffs[i] * (x^{moduli[i]} - 1)
/// = x^gcd - 1 over GF(2) (gcd of the absolute moduli; 0 iff all zero).
struct BezoutCombination {
  std::vector<long long> moduli;
  std::vector<LampConfig> coeffs;
  long long gcd = 0;
};

/// Euclidean elimination on binomial exponents with coefficient tracking.
/// The defining identity is re-expanded and checked before returning.
/// Throws std::invalid_argument when every modulus is zero.
BezoutCombination bezout_binomials(std::span<const long long> moduli);

/// Quotient q with (x^d - 1) q = h, d > 0, computed by cancelling from m(h)
/// upward. Throws not_in_kernel when h is not divisible.
LampConfig divide_by_binomial(const LampConfig& h, long long d);

/// Parts f_i with sum_i (1 - x^{moduli[i]}) f_i = target, given
/// pi_gcd(target) = 0 (for gcd = 0 this forces target = 0).
/// Throws not_in_kernel on precondition violation.
std::vector<LampConfig> lift_certificate(std::span<const long long> moduli,
                                         const LampConfig& target);

/// Plain GF(2) Laurent product.
LampConfig mul_poly(const LampConfig& a, const LampConfig& b);

}  // namespace llq
