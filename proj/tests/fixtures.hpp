#pragma once

// Shared fixtures for the test suites. Everything here is constructed by
// direct means (permutation composition, explicit formulas), independent of
// the library operations under test.

#include <algorithm>
#include <vector>

#include "braidlab/braided_map.hpp"
#include "braidlab/finite_group.hpp"

namespace fixtures {

using braidlab::BraidedMap;
using Perm = std::vector<int>;

inline Perm composePerm(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Perm invertPerm(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline BraidedMap flip(int n) {
  std::vector<int> flat(2 * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      flat[2 * (x * n + y)] = y;
      flat[2 * (x * n + y) + 1] = x;
    }
  return BraidedMap(n, std::move(flat));
}

inline BraidedMap identityTable(int n) {
  std::vector<int> flat(2 * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      flat[2 * (x * n + y)] = x;
      flat[2 * (x * n + y) + 1] = y;
    }
  return BraidedMap(n, std::move(flat));
}

inline BraidedMap constantTable(int n) {
  return BraidedMap(n, std::vector<int>(2 * n * n, 0));
}

/// S(x,y) = (b(y), c(x)).
inline BraidedMap permutationSolution(const Perm& b, const Perm& c) {
  const int n = static_cast<int>(b.size());
  std::vector<int> flat(2 * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      flat[2 * (x * n + y)] = b[y];
      flat[2 * (x * n + y) + 1] = c[x];
    }
  return BraidedMap(n, std::move(flat));
}

/// S(x,y) = (x y x^{-1}, x) over an explicit list of permutations, by direct
/// group multiplication. Throws if a conjugate falls outside the list.
inline BraidedMap conjugateFromPerms(const std::vector<Perm>& xs) {
  const int n = static_cast<int>(xs.size());
  auto indexOf = [&](const Perm& p) {
    for (int i = 0; i < n; ++i)
      if (xs[i] == p) return i;
    throw braidlab::Error("InvariantViolation", "conjugate leaves the fixture set");
  };
  std::vector<int> flat(2 * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Perm conj = composePerm(composePerm(xs[x], xs[y]), invertPerm(xs[x]));
      flat[2 * (x * n + y)] = indexOf(conj);
      flat[2 * (x * n + y) + 1] = x;
    }
  return BraidedMap(n, std::move(flat));
}

inline std::vector<Perm> transpositionsS3() {
  return {Perm{1, 0, 2}, Perm{2, 1, 0}, Perm{0, 2, 1}};  // (01), (02), (12)
}

/// The conjugate solution on the three transpositions of S_3, in the
/// (01), (02), (12) labeling.
inline BraidedMap conjugateOnTranspositions() {
  return conjugateFromPerms(transpositionsS3());
}

/// The same table, frozen by hand from the group multiplications.
inline BraidedMap conjugateFixtureLiteral() {
  return BraidedMap::fromPairs(3, {{{0, 0}, {2, 0}, {1, 0}},
                                   {{2, 1}, {1, 1}, {0, 1}},
                                   {{1, 2}, {0, 2}, {2, 2}}});
}

/// All permutations of {0..n-1} in lexicographic order.
inline std::vector<Perm> allPerms(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Multiplication table of the full symmetric group on `letters` letters,
/// elements indexed in lexicographic order; mul[a][b] = a after b.
inline braidlab::FiniteGroup symmetricGroup(int letters) {
  const auto perms = allPerms(letters);
  const int n = static_cast<int>(perms.size());
  auto indexOf = [&](const Perm& p) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = indexOf(composePerm(perms[a], perms[b]));
  return braidlab::FiniteGroup(std::move(mul));
}

inline braidlab::FiniteGroup cyclicGroup(int n) {
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return braidlab::FiniteGroup(std::move(mul));
}

/// Trivial action of G on A: every element acts as the identity map.
inline std::vector<std::vector<int>> trivialAction(int gOrder, int aOrder) {
  std::vector<int> id(aOrder);
  for (int i = 0; i < aOrder; ++i) id[i] = i;
  return std::vector<std::vector<int>>(gOrder, id);
}

/// Conjugation action of a group on itself: rho[g][a] = g a g^{-1}.
inline std::vector<std::vector<int>> conjugationAction(const braidlab::FiniteGroup& g) {
  std::vector<std::vector<int>> rho(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) rho[a][b] = g.mul(g.mul(a, b), g.inv(a));
  return rho;
}

inline std::vector<int> identityCocycle(int order) {
  std::vector<int> pi(order);
  for (int i = 0; i < order; ++i) pi[i] = i;
  return pi;
}

/// Indices of the transpositions within the lex-ordered elements of S_3.
inline std::vector<int> transpositionIdsS3() {
  const auto perms = allPerms(3);
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) {
    int moved = 0;
    for (int j = 0; j < 3; ++j)
      if (perms[i][j] != j) ++moved;
    if (moved == 2) ids.push_back(i);
  }
  return ids;
}

}  // namespace fixtures
