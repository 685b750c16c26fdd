#pragma once

#include <vector>

#include "braidlab/braided_map.hpp"
#include "braidlab/perm_group.hpp"

namespace braidlab {

/// An explicit finite group: a dense multiplication table validated for the
/// full group laws at construction.
class FiniteGroup {
public:
  explicit FiniteGroup(std::vector<std::vector<int>> mul);  // throws MalformedTables

  int order() const { return order_; }
  int id() const { return id_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  const std::vector<std::vector<int>>& table() const { return mul_; }

private:
  int order_;
  int id_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
};

/// Data for the synthetic construction of solutions: groups G and A, an
/// action of G on A by automorphisms, a bijective 1-cocycle pi : G -> A, and
/// an invariant subset X of A's elements. The remaining two maps of the
/// 7-tuple are induced (the adjoint action on X, and the inclusion X -> A).
struct SevenTuple {
  FiniteGroup G;
  FiniteGroup A;
  std::vector<std::vector<int>> rhoGA;  // rhoGA[g][a]: automorphism tables
  std::vector<int> pi;                  // pi[g] in A
  std::vector<int> X;                   // strictly increasing element ids of A
};

/// True iff pi is a bijection satisfying pi(g1 g2) = (g2^{-1} * pi(g1)) . pi(g2)
/// for all pairs. Shape errors and non-action tables raise MalformedTables.
bool verify_cocycle(const FiniteGroup& G, const FiniteGroup& A,
                    const std::vector<std::vector<int>>& rhoGA, const std::vector<int>& pi);

/// Checks every 7-tuple invariant, raising InvariantViolation naming the
/// first one that fails.
void validate_seven_tuple(const SevenTuple& t);

/// The solution on X induced by a valid 7-tuple:
///   S(x,y) = ( pi( pi^{-1}(x) pi^{-1}(y) pi^{-1}(rho(pi^{-1}(y)^{-1})(x))^{-1} ),
///              rho(pi^{-1}(y)^{-1})(x) )
/// indexed by positions within X.
BraidedMap seven_tuple_to_solution(const SevenTuple& t);

/// The star action of a structure-group word on A0, realized as conjugation
/// by the word's star permutation; sends p(x) to p(word * x).
struct A0Automorphism {
  Perm sigma;                      // the star permutation of the word on X
  std::vector<int> elementImage;   // group element index -> element index

  Perm apply(const Perm& a) const {
    return perm_compose(perm_compose(sigma, a), perm_inverse(sigma));
  }
};

/// word: signed 1-based letters over X (+(x+1) for x, -(x+1) for x^{-1}).
/// Verified on the whole closure; throws NotAnAutomorphism if conjugation
/// leaves the group or disagrees with p(x) -> p(word * x) on a generator.
A0Automorphism star_action_on_a0(const BraidedMap& m, const AQuotient& aq,
                                 const std::vector<int>& word);

/// The 1-cocycle of the structure group evaluated on a word, at the finite
/// image A0:
///   Pi(empty)    = id
///   Pi(w . x)    = (x^{-1} * Pi(w)) . p(x)
///   Pi(w . x^{-1}) = (x * Pi(w)) . (x * p(x))^{-1}
Perm word_cocycle(const BraidedMap& m, const std::vector<int>& word);

}  // namespace braidlab
