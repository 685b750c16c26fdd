#pragma once

#include <array>
#include <utility>
#include <vector>

#include "braidlab/caps.hpp"
#include "braidlab/errors.hpp"

namespace braidlab {

/// A candidate solution S : X x X -> X x X on X = {0,...,n-1}, stored as the
/// full table S(x,y) = (g_x(y), f_y(x)). Entries are range-checked at
/// construction; all further predicates are pure and exhaustive.
class BraidedMap {
public:
  /// flat layout: flat[2*(x*n+y)] = g_x(y), flat[2*(x*n+y)+1] = f_y(x).
  BraidedMap(int n, std::vector<int> flat);

  static BraidedMap fromPairs(int n, const std::vector<std::vector<std::pair<int, int>>>& table);

  int size() const { return n_; }
  int g(int x, int y) const { return flat_[2 * (x * n_ + y)]; }
  int f(int y, int x) const { return flat_[2 * (x * n_ + y) + 1]; }
  std::pair<int, int> apply(int x, int y) const {
    return {g(x, y), f(y, x)};
  }
  const std::vector<int>& flat() const { return flat_; }

  bool operator==(const BraidedMap& o) const { return n_ == o.n_ && flat_ == o.flat_; }

  /// True iff the n^2 output pairs are pairwise distinct.
  bool isBijective() const;
  /// True iff every y -> g_x(y) and every x -> f_y(x) is a permutation.
  bool isNondegenerate() const;
  /// Braid relation S1 S2 S1 = S2 S1 S2 checked over all of X^3.
  bool isBraided() const;
  /// Self-check: the QYBE for R = sigma S, evaluated directly on X^3, must
  /// agree with isBraided(). Returns the agreement bit.
  bool qybeAgrees() const;
  bool isInvolutive() const;
  bool isSymmetric() const { return isBraided() && isInvolutive(); }

  /// The three output components of the braid relation compared separately.
  /// The middle flag is the linking relation; the outer two are the
  /// compatibility of g and f with the defining relations. All three hold
  /// iff isBraided(). Requires a nondegenerate map.
  std::array<bool, 3> braidComponents() const;

private:
  int n_;
  std::vector<int> flat_;
};

/// Left-action tables of a nondegenerate map:
///   star[x][z]    = x * z     = f_x^{-1}(z)
///   circ[x][z]    = x o z     = g_x(z)
///   starInv[x][z] = x^{-1} * z = f_x(z)
struct ActionTables {
  std::vector<std::vector<int>> star, circ, starInv;

  static ActionTables build(const BraidedMap& m);  // throws Degenerate
};

/// phi(y,x) = x^{-1} * ((y * x) o y), tabulated as at(y, x).
struct PhiTable {
  int n = 0;
  std::vector<int> flat;  // flat[y*n + x] = phi(y, x)

  int at(int y, int x) const { return flat[y * n + x]; }
};

PhiTable phi_table(const BraidedMap& m);

/// The derived solution S'(x,y) = (phi(y,x), x). Input must be braided.
BraidedMap derived_solution(const BraidedMap& m);

/// Checks t^{-1} * phi(y,z) = phi(t^{-1}*y, t^{-1}*z) for all generators t.
/// Guaranteed true for braided inputs.
bool phi_invariance_check(const BraidedMap& m);

/// The conjugating bijection J_k of X^k with J_k S^{i,i+1} J_k^{-1} = S'^{i,i+1},
/// returned as a table over lexicographically encoded k-tuples
/// (index = x_1 n^{k-1} + ... + x_k). Guarded by caps.tupleSpace.
std::vector<int> j_map(const BraidedMap& m, int k, const Caps& caps = {});

/// Applies a braid word to a tuple in X^k, left to right. Word letters are
/// signed 1-based positions: +i applies S at (i-1, i), -i applies S^{-1}.
std::vector<int> apply_braid_word(const BraidedMap& m, const std::vector<int>& word,
                                  std::vector<int> tuple);

}  // namespace braidlab
