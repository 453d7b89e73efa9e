#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "llq/element.hpp"
#include "llq/equation.hpp"

namespace llq {

struct missing_variable : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct budget_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Tuple (d; d_1..d_k) witnessing the lamp-cancellation condition:
/// sum_i x^{d_i} f_{c_i} = 0 in Z_2^{Z_d} (d = 0 meaning Z).
struct ShiftCertificate {
  long long modulus = 0;
  std::vector<long long> shifts;
};

/// Variable assignment, in equation order (x1,y1,...,z1,...).
struct Witness {
  std::vector<std::pair<std::string, GroupWord>> assignment;
  bool verified = false;

  const GroupWord* find(std::string_view name) const;
};

struct SolveStats {
  std::uint64_t enumerated = 0;  // certificate tuples examined (canonical order)
  double millis = 0.0;
};

struct SolveResult {
  bool decision = false;
  std::optional<ShiftCertificate> certificate;
  std::optional<Witness> witness;  // present and verified whenever decision
  SolveStats stats;
};

struct SolveOptions {
  unsigned threads = 1;  // parallel workers for the d > 0 tuple enumeration
};

/// Exact substitution check: evaluates the equation under the assignment.
bool verify(const QuadEquation& eq, const Witness& w);

SolveResult solve_spherical(const QuadEquation& eq, const SolveOptions& opts = {});
SolveResult solve_orientable(const QuadEquation& eq, const SolveOptions& opts = {});
SolveResult solve_nonorientable(const QuadEquation& eq, const SolveOptions& opts = {});
/// Dispatch on eq.form.
SolveResult solve(const QuadEquation& eq, const SolveOptions& opts = {});

/// Independent bounded brute force used to cross-check the solvers: searches
/// shift tuples within [-2B, 2B] (reduced mod d when d > 0, plus handle
/// displacements within [-B, B]) and decides lamp-part solvability per tuple
/// by exact residue vanishing. Sound unconditionally; complete whenever a
/// solution with shifts bounded by B exists. Throws budget_exceeded if the
/// tuple space exceeds an internal cap.
bool oracle_solve(const QuadEquation& eq, long long bound);

}  // namespace llq
