#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "braidlab/perm_group.hpp"
#include "fixtures.hpp"

using namespace braidlab;
using fixtures::Perm;

namespace {

int permOrder(const Perm& p) {
  Perm cur = p;
  int ord = 1;
  const Perm id = fixtures::composePerm(p, fixtures::invertPerm(p));
  while (cur != id) {
    cur = fixtures::composePerm(cur, p);
    ++ord;
  }
  return ord;
}

int cycleCount(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int cycles = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = p[j];
    }
  }
  return cycles;
}

}  // namespace

TEST_CASE("closure basics") {
  PermGroup s3(3, {Perm{1, 0, 2}, Perm{0, 2, 1}});
  CHECK(s3.order() == 6);
  CHECK(s3.contains(Perm{2, 0, 1}));
  CHECK(s3.elements()[s3.identityIndex()] == Perm{0, 1, 2});

  // composition and inverse round trips through the index
  for (int i = 0; i < s3.order(); ++i) {
    CHECK(s3.mul(i, s3.inv(i)) == s3.identityIndex());
    CHECK(s3.mul(s3.inv(i), i) == s3.identityIndex());
  }

  // closure is independent of generator order
  PermGroup s3b(3, {Perm{0, 2, 1}, Perm{1, 0, 2}});
  CHECK(s3.elements() == s3b.elements());

  CHECK_THROWS_AS(PermGroup(3, {Perm{1, 0, 2}, Perm{0, 2, 1}}, 4), Error);
  CHECK_THROWS_AS(PermGroup(3, {Perm{1, 1, 2}}), Error);
}

TEST_CASE("structure-group quotient") {
  // flip: both actions are trivial
  CHECK(g_quotient(fixtures::flip(4)).group.order() == 1);

  // conjugation pairs generate the full symmetric group on the indices
  const auto conj = fixtures::conjugateOnTranspositions();
  const auto gq = g_quotient(conj);
  CHECK(gq.group.order() == 6);
  CHECK(gq.group.degree() == 6);
  CHECK(static_cast<int>(gq.genIndex.size()) == 3);

  // permutation solution: one generator pair (b, c^{-1}), order = lcm of orders
  std::mt19937_64 rng(11);
  const auto perms4 = fixtures::allPerms(4);
  for (int trial = 0; trial < 40; ++trial) {
    const Perm& b = perms4[rng() % perms4.size()];
    const Perm& c = perms4[rng() % perms4.size()];
    if (fixtures::composePerm(b, c) != fixtures::composePerm(c, b)) continue;
    const auto m = fixtures::permutationSolution(b, c);
    REQUIRE(m.isBraided());
    CHECK(g_quotient(m).group.order() == std::lcm(permOrder(b), permOrder(c)));
  }
}

TEST_CASE("A0 quotient") {
  CHECK(a0_quotient(fixtures::flip(5)).group.order() == 1);

  // permutation solution: cyclic group generated by bc
  const Perm b{1, 2, 0, 3}, c{2, 0, 1, 3};
  const auto m = fixtures::permutationSolution(b, c);
  const auto aq = a0_quotient(m);
  CHECK(aq.group.order() == permOrder(fixtures::composePerm(b, c)));

  // conjugation action on the three transpositions is the full S_3
  CHECK(a0_quotient(fixtures::conjugateOnTranspositions()).group.order() == 6);

  // genIndex points at p(x) = phi(., x)
  const auto conj = fixtures::conjugateOnTranspositions();
  const auto caq = a0_quotient(conj);
  for (int x = 0; x < 3; ++x) {
    Perm expected(3);
    for (int y = 0; y < 3; ++y) expected[y] = caq.phi.at(y, x);
    CHECK(caq.group.elements()[caq.genIndex[x]] == expected);
  }
}

TEST_CASE("rank") {
  for (int n = 1; n <= 5; ++n) CHECK(rank(fixtures::flip(n)) == n);

  CHECK(rank(fixtures::conjugateOnTranspositions()) == 1);

  // permutation solution: number of cycles of bc, fixed points included
  std::mt19937_64 rng(23);
  const auto perms4 = fixtures::allPerms(4);
  for (int trial = 0; trial < 60; ++trial) {
    const Perm& b = perms4[rng() % perms4.size()];
    const Perm& c = perms4[rng() % perms4.size()];
    if (fixtures::composePerm(b, c) != fixtures::composePerm(c, b)) continue;
    const auto m = fixtures::permutationSolution(b, c);
    CHECK(rank(m) == cycleCount(fixtures::composePerm(b, c)));
    CHECK(rank_equality_is_symmetric(m));
    CHECK(rank(m) == rank(derived_solution(m)));
  }

  // a single n-cycle for bc collapses everything into one class
  const Perm cyc{1, 2, 3, 0};
  const auto single = fixtures::permutationSolution(cyc, fixtures::allPerms(4)[0]);
  CHECK(rank(single) == 1);
  CHECK(rank_equality_is_symmetric(single));

  const auto classes = rank_classes(fixtures::conjugateOnTranspositions());
  REQUIRE(classes.size() == 1);
  CHECK(classes[0] == std::vector<int>{0, 1, 2});
}
