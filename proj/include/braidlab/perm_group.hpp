#pragma once

#include <unordered_map>
#include <vector>

#include "braidlab/braided_map.hpp"
#include "braidlab/caps.hpp"

namespace braidlab {

using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& p, const Perm& q);  // (p.q)(i) = p[q[i]]
Perm perm_inverse(const Perm& p);

struct PermHash {
  size_t operator()(const Perm& p) const noexcept {
    size_t h = p.size();
    for (int v : p) h = h * 1000003u + static_cast<size_t>(v) + 0x9e3779b9u;
    return h;
  }
};

/// A finite permutation group materialized by breadth-first closure of its
/// generators. No stabilizer chains: degrees here are tiny and a plain
/// closure is easy to audit. Elements get a deterministic canonical order
/// (lexicographic on the permutation tables).
class PermGroup {
public:
  PermGroup(int degree, std::vector<Perm> generators, long cap = Caps{}.groupElements);

  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool contains(const Perm& p) const { return index_.count(p) > 0; }
  int indexOf(const Perm& p) const;  // throws BadIndex if absent
  int identityIndex() const { return idIndex_; }
  int mul(int i, int j) const;  // index of elements[i] . elements[j]
  int inv(int i) const;

private:
  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, int, PermHash> index_;
  int idIndex_ = 0;
};

/// The image of the structure group inside Permut(X) x Permut(X): generator
/// x acts by (circ row of x, star row of x) on a doubled domain of size 2n.
/// This image is the finite quotient by the intersection of the two action
/// kernels.
struct GQuotient {
  PermGroup group;           // degree 2n
  std::vector<int> genIndex; // x -> element index of its generator pair
};

GQuotient g_quotient(const BraidedMap& m, const Caps& caps = {});

/// The image A0 of the derived structure group in Permut(X): generator x acts
/// by y -> phi(y, x).
struct AQuotient {
  PermGroup group;           // degree n
  std::vector<int> genIndex; // x -> element index of p(x)
  PhiTable phi;
};

AQuotient a0_quotient(const BraidedMap& m, const Caps& caps = {});

/// Number of classes of the minimum equivalence relation with y ~ phi(y,x).
int rank(const BraidedMap& m);

/// The classes themselves, each sorted, ordered by smallest member.
std::vector<std::vector<int>> rank_classes(const BraidedMap& m);

/// Self-check: rank(m) == n must hold exactly for involutive braided maps.
bool rank_equality_is_symmetric(const BraidedMap& m);

}  // namespace braidlab
