#pragma once

#include "braidlab/braided_map.hpp"
#include "braidlab/caps.hpp"
#include "braidlab/int_lattice.hpp"
#include "braidlab/perm_group.hpp"

namespace braidlab {

/// Cheap necessary conditions for injectivity:
///   (a) phi(x,x) = x for all x;
///   (b) phi(y,x) = y iff phi(x,y) = x.
/// A failure certifies non-injectivity.
bool necessary_conditions(const BraidedMap& m);

/// The module deciding injectivity, flattened to an abelian presentation:
/// one basis vector e(a, x) per pair (a in A0, x in X), and one relation row
///   e(a p(y)^{-1}, x) + e(a, y) - e(a p(x)^{-1}, phi(y,x)) - e(a, x)
/// for every a in A0 and every (y, x).
struct MModule {
  int n = 0;
  long a0Order = 0;
  long dim = 0;  // a0Order * n
  IntLattice relations;
};

MModule build_m_module(const BraidedMap& m, const Caps& caps = {});

/// Injectivity of the natural map X -> M_X: fast-path via the necessary
/// conditions, then exact lattice membership for every pair of basis vectors.
bool is_injective(const BraidedMap& m, const Caps& caps = {});

/// Self-check of the derived-solution equivalence: expected always true.
bool injectivity_agrees_with_derived(const BraidedMap& m, const Caps& caps = {});

struct InjectReport {
  bool injective = false;
  bool necessaryOnly = false;  // verdict reached by the fast path alone
  long mDim = 0;               // 0 when the module was never built
};

InjectReport inject_report(const BraidedMap& m, const Caps& caps = {});

}  // namespace braidlab
