#include "braidlab/m_module.hpp"

#include <map>
#include <string>
#include <utility>

namespace braidlab {

bool necessary_conditions(const BraidedMap& m) {
  const auto phi = phi_table(m);
  const int n = m.size();
  for (int x = 0; x < n; ++x)
    if (phi.at(x, x) != x) return false;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if ((phi.at(y, x) == y) != (phi.at(x, y) == x)) return false;
  return true;
}

namespace {

MModule build_from_quotient(const AQuotient& aq, const Caps& caps) {
  const int n = aq.phi.n;
  const long order = aq.group.order();
  const long dim = order * n;
  if (dim > caps.moduleDim)
    throw Error("CapExceeded", "module dimension " + std::to_string(dim) + " exceeds cap of " +
                                   std::to_string(caps.moduleDim));

  std::vector<int> pInv(n);
  for (int x = 0; x < n; ++x) pInv[x] = aq.group.inv(aq.genIndex[x]);

  IntLattice lattice(static_cast<int>(dim));
  std::map<long, long> sparse;
  std::vector<mpz_class> row(dim, 0);
  for (long a = 0; a < order; ++a) {
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) {
        sparse.clear();
        const long aPy = aq.group.mul(static_cast<int>(a), pInv[y]);
        const long aPx = aq.group.mul(static_cast<int>(a), pInv[x]);
        sparse[aPy * n + x] += 1;
        sparse[a * n + y] += 1;
        sparse[aPx * n + aq.phi.at(y, x)] -= 1;
        sparse[a * n + x] -= 1;
        bool zero = true;
        for (const auto& [idx, coeff] : sparse)
          if (coeff != 0) {
            zero = false;
            break;
          }
        if (zero) continue;
        for (const auto& [idx, coeff] : sparse) row[idx] = coeff;
        lattice.addRow(row);
        for (const auto& [idx, coeff] : sparse) row[idx] = 0;
      }
  }
  lattice.finalize();
  return MModule{n, order, dim, std::move(lattice)};
}

bool injective_given(const MModule& module, const AQuotient& aq) {
  const long id = aq.group.identityIndex();
  const int n = module.n;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      std::vector<mpz_class> v(module.dim, 0);
      v[id * n + x] = 1;
      v[id * n + y] = -1;
      if (module.relations.contains(std::move(v))) return false;
    }
  return true;
}

}  // namespace

MModule build_m_module(const BraidedMap& m, const Caps& caps) {
  return build_from_quotient(a0_quotient(m, caps), caps);
}

bool is_injective(const BraidedMap& m, const Caps& caps) {
  if (!necessary_conditions(m)) return false;
  const auto aq = a0_quotient(m, caps);
  return injective_given(build_from_quotient(aq, caps), aq);
}

bool injectivity_agrees_with_derived(const BraidedMap& m, const Caps& caps) {
  return is_injective(m, caps) == is_injective(derived_solution(m), caps);
}

InjectReport inject_report(const BraidedMap& m, const Caps& caps) {
  InjectReport rep;
  if (!necessary_conditions(m)) {
    rep.injective = false;
    rep.necessaryOnly = true;
    rep.mDim = 0;
    return rep;
  }
  const auto aq = a0_quotient(m, caps);
  const auto module = build_from_quotient(aq, caps);
  rep.mDim = module.dim;
  rep.necessaryOnly = false;
  rep.injective = injective_given(module, aq);
  return rep;
}

}  // namespace braidlab
