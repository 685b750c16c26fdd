#pragma once

#include <array>
#include <utility>

#include "braidlab/braided_map.hpp"
#include "braidlab/caps.hpp"
#include "braidlab/mod_matrix.hpp"

namespace braidlab {

/// S(x,y) = (ax + by, cx + dy) on X = (Z_m)^k. The struct is a plain
/// carrier; operations that need a genuine solution call require_valid.
struct LinearSolution {
  ModMatrix a, b, c, d;

  int64_t mod() const { return a.mod(); }
  int dim() const { return a.dim(); }
};

/// S(x,y) = (ax + by + z, cx + dy + t).
struct AffineSolution {
  LinearSolution lin;
  ModVec zvec, tvec;
};

/// The quadruple side of the linear classification.
struct QuadrupleABDS {
  ModMatrix a, b, d, s;
};

/// The (p, q, z) side of the injective classification. zauto is the paper's
/// z, renamed to avoid clashing with the affine translation vector.
struct TriplePQZ {
  ModMatrix p, q, zauto;
};

/// b, c invertible and the seven braid identities over Z_m.
bool check_linear_relations(const LinearSolution& l);
void require_valid(const LinearSolution& l);  // throws NotASolution

/// s = bc - (1-d+ad)(1-a); the defect vanishing exactly for injective
/// solutions. Requires a valid solution.
ModMatrix s_of(const LinearSolution& l);

void validate_quadruple(const QuadrupleABDS& q);  // InvariantViolation, names the condition
LinearSolution quadruple_to_solution(const QuadrupleABDS& q);
QuadrupleABDS quadruple_of(const LinearSolution& l);

bool is_injective_linear(const LinearSolution& l);

/// Coefficients of the closed form phi(y,z) = (1-(1-d)(1-a)) z + ((1-d)(1-a)+s) y,
/// returned as (coefficient of z, coefficient of y).
std::pair<ModMatrix, ModMatrix> phi_closed_form(const LinearSolution& l);

/// The injective companion (a, b, c, d - s).
LinearSolution hat_solution(const LinearSolution& l);

/// Perturbation of an injective solution to (a, b, c, d + s); s must satisfy
/// sa = as = 0, sb = bs, sd = ds = -s^2, sc = cs (BadPerturbation otherwise).
LinearSolution breve_solution(const LinearSolution& l, const ModMatrix& s);

void validate_triple(const TriplePQZ& t);  // InvariantViolation
TriplePQZ pqz_from_abd(const ModMatrix& a, const ModMatrix& b, const ModMatrix& d);
std::array<ModMatrix, 3> abd_from_pqz(const TriplePQZ& t);
/// The injective solution determined by (a, b, d): c = b^{-1}(1-d+ad)(1-a).
LinearSolution solution_from_abd(const ModMatrix& a, const ModMatrix& b, const ModMatrix& d);

/// The affine compatibility system: cdz + dt = 0, az + bat = 0,
/// (c+d-ad-1)z + (da+1-a-b)t = 0, on top of the linear relations.
bool check_affine_relations(const AffineSolution& s);

/// Builds the affine solution with t = -c(1-a)^{-1} z + k. The defect vector
/// k must satisfy ak = dk = 0 and (b-1)k = sz (ConstraintViolation otherwise).
AffineSolution affine_extend(const LinearSolution& l, const ModVec& zvec, const ModVec& kvec);

/// Recovers the defect k = t + c(1-a)^{-1} z.
ModVec affine_kvec(const AffineSolution& s);

bool is_injective_affine(const AffineSolution& s);

/// Set-level table on X = (Z_m)^k in lexicographic order (first coordinate
/// most significant). Works on raw coefficient data so that invalid inputs
/// can be cross-examined with the set-level predicates.
BraidedMap materialize(const LinearSolution& l, const Caps& caps = {});
BraidedMap materialize(const AffineSolution& s, const Caps& caps = {});

/// Tuple <-> index helpers for the materialized domain.
ModVec decode_point(int64_t mod, int dim, long index);
long encode_point(int64_t mod, const ModVec& v);

}  // namespace braidlab
