#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidlab/braided_map.hpp"
#include "fixtures.hpp"

using namespace braidlab;
using fixtures::Perm;

namespace {

BraidedMap randomBijectiveTable(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> outputs;
  outputs.reserve(n * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) outputs.push_back({u, v});
  std::shuffle(outputs.begin(), outputs.end(), rng);
  std::vector<int> flat;
  flat.reserve(2 * n * n);
  for (const auto& [u, v] : outputs) {
    flat.push_back(u);
    flat.push_back(v);
  }
  return BraidedMap(n, std::move(flat));
}

}  // namespace

TEST_CASE("table validation") {
  CHECK(fixtures::flip(3).isBijective());
  CHECK_FALSE(fixtures::constantTable(2).isBijective());
  CHECK(fixtures::conjugateOnTranspositions().isBijective());
  CHECK_THROWS_AS(BraidedMap(2, {0, 0, 0, 0, 0, 0, 0, 5}), Error);
  CHECK_THROWS_AS(BraidedMap(2, {0, 0}), Error);
}

TEST_CASE("conjugate fixture matches the hand-computed table") {
  CHECK(fixtures::conjugateOnTranspositions() == fixtures::conjugateFixtureLiteral());
}

TEST_CASE("nondegeneracy") {
  CHECK_FALSE(fixtures::identityTable(2).isNondegenerate());
  CHECK(fixtures::flip(2).isNondegenerate());
  CHECK(fixtures::flip(5).isNondegenerate());
  CHECK(fixtures::permutationSolution({1, 2, 0}, {0, 2, 1}).isNondegenerate());
  CHECK(fixtures::conjugateOnTranspositions().isNondegenerate());
}

TEST_CASE("braid relation") {
  CHECK(fixtures::flip(4).isBraided());
  // b = (01), c = (12) do not commute
  const auto nonCommuting = fixtures::permutationSolution({1, 0, 2}, {0, 2, 1});
  CHECK_FALSE(nonCommuting.isBraided());
  // commuting pair: b = c = 3-cycle
  CHECK(fixtures::permutationSolution({1, 2, 0}, {1, 2, 0}).isBraided());
  CHECK(fixtures::conjugateOnTranspositions().isBraided());
}

TEST_CASE("the QYBE for R = sigma S always agrees with the braid predicate") {
  CHECK(fixtures::flip(3).qybeAgrees());
  CHECK(fixtures::permutationSolution({1, 2, 0}, {1, 2, 0}).qybeAgrees());
  CHECK(fixtures::permutationSolution({1, 0, 2}, {0, 2, 1}).qybeAgrees());
  std::mt19937_64 rng(20240901);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    CHECK(randomBijectiveTable(n, rng).qybeAgrees());
  }
}

TEST_CASE("involutivity") {
  CHECK(fixtures::flip(3).isInvolutive());
  const auto conj = fixtures::conjugateOnTranspositions();
  CHECK_FALSE(conj.isInvolutive());
  // frozen values: S((01),(02)) = ((12),(01)), S((12),(01)) = ((02),(12))
  CHECK(conj.apply(0, 1) == std::pair<int, int>{2, 0});
  CHECK(conj.apply(2, 0) == std::pair<int, int>{1, 2});
  // c = b^{-1} gives a symmetric permutation solution
  const Perm b{1, 2, 0};
  CHECK(fixtures::permutationSolution(b, fixtures::invertPerm(b)).isInvolutive());
  CHECK_FALSE(fixtures::permutationSolution(b, b).isInvolutive());
}

TEST_CASE("braid components split the braid relation") {
  const auto allTrue = fixtures::flip(3).braidComponents();
  CHECK(allTrue == std::array<bool, 3>{true, true, true});

  const auto bad = fixtures::permutationSolution({1, 0, 2}, {0, 2, 1});
  const auto flags = bad.braidComponents();
  CHECK_FALSE((flags[0] && flags[1] && flags[2]));

  CHECK_THROWS_AS(fixtures::identityTable(2).braidComponents(), Error);

  // the linking relation, written out, is the middle component
  const auto conj = fixtures::conjugateOnTranspositions();
  const int n = conj.size();
  bool linking = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int lhs = conj.f(conj.g(conj.f(y, x), z), conj.g(x, y));
        const int rhs = conj.g(conj.f(conj.g(y, z), x), conj.f(z, y));
        if (lhs != rhs) linking = false;
      }
  CHECK(linking);
  CHECK(conj.braidComponents() == std::array<bool, 3>{true, true, true});

  // all three flags together match the full predicate on an assortment
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto perms = fixtures::allPerms(3);
    const Perm& b = perms[rng() % perms.size()];
    const Perm& c = perms[rng() % perms.size()];
    const auto m = fixtures::permutationSolution(b, c);
    const auto comps = m.braidComponents();
    CHECK((comps[0] && comps[1] && comps[2]) == m.isBraided());
  }
}

TEST_CASE("phi tables") {
  const auto flipPhi = phi_table(fixtures::flip(4));
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x) CHECK(flipPhi.at(y, x) == y);

  const Perm b{1, 2, 0}, c{2, 0, 1};  // commuting: both powers of the 3-cycle
  const auto perm = fixtures::permutationSolution(b, c);
  const auto permPhi = phi_table(perm);
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x) CHECK(permPhi.at(y, x) == b[c[y]]);

  const auto conj = fixtures::conjugateOnTranspositions();
  const auto conjPhi = phi_table(conj);
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x) CHECK(conjPhi.at(y, x) == conj.g(x, y));

  CHECK_THROWS_AS(phi_table(fixtures::identityTable(2)), Error);
}

TEST_CASE("derived solutions") {
  CHECK(derived_solution(fixtures::flip(3)) == fixtures::flip(3));

  // any symmetric set derives to the flip
  const Perm b{1, 2, 0};
  const auto symmetric = fixtures::permutationSolution(b, fixtures::invertPerm(b));
  CHECK(derived_solution(symmetric) == fixtures::flip(3));

  const auto conj = fixtures::conjugateOnTranspositions();
  CHECK(derived_solution(conj) == conj);

  const auto perm = fixtures::permutationSolution(b, b);
  const auto derived = derived_solution(perm);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      CHECK(derived.g(x, y) == b[b[y]]);
      CHECK(derived.f(y, x) == x);
    }
  CHECK(derived.isBraided());
  CHECK(derived.isNondegenerate());

  CHECK_THROWS_AS(derived_solution(fixtures::permutationSolution({1, 0, 2}, {0, 2, 1})), Error);
}

TEST_CASE("phi invariance under the star action") {
  CHECK(phi_invariance_check(fixtures::conjugateOnTranspositions()));
  CHECK(phi_invariance_check(fixtures::flip(4)));
  CHECK(phi_invariance_check(fixtures::permutationSolution({1, 2, 0}, {1, 2, 0})));
}

TEST_CASE("J maps") {
  const auto conj = fixtures::conjugateOnTranspositions();
  const int n = conj.size();

  const auto j1 = j_map(conj, 1);
  for (int i = 0; i < n; ++i) CHECK(j1[i] == i);

  const auto tables = ActionTables::build(conj);
  const auto j2 = j_map(conj, 2);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      CHECK(j2[x * n + y] == tables.starInv[y][x] * n + y);

  // conjugation identity J_k S_i J_k^{-1} = S'_i, exhaustively for k = 2, 3
  for (const auto& m :
       {conj, fixtures::flip(3), fixtures::permutationSolution({1, 2, 0}, {1, 2, 0})}) {
    const auto derived = derived_solution(m);
    for (int k = 2; k <= 3; ++k) {
      const auto jk = j_map(m, k);
      std::vector<int> jkInv(jk.size());
      for (size_t i = 0; i < jk.size(); ++i) jkInv[jk[i]] = static_cast<int>(i);
      long space = 1;
      for (int i = 0; i < k; ++i) space *= m.size();
      for (int i = 1; i <= k - 1; ++i) {
        for (long t = 0; t < space; ++t) {
          std::vector<int> tuple(k);
          long rest = t;
          for (int pos = k - 1; pos >= 0; --pos) {
            tuple[pos] = static_cast<int>(rest % m.size());
            rest /= m.size();
          }
          // lhs = J_k S_i J_k^{-1} (tuple)
          std::vector<int> preimage(k);
          rest = jkInv[t];
          for (int pos = k - 1; pos >= 0; --pos) {
            preimage[pos] = static_cast<int>(rest % m.size());
            rest /= m.size();
          }
          auto lhsTuple = apply_braid_word(m, {i}, preimage);
          long lhsIdx = 0;
          for (int v : lhsTuple) lhsIdx = lhsIdx * m.size() + v;
          const long lhs = jk[lhsIdx];
          auto rhsTuple = apply_braid_word(derived, {i}, tuple);
          long rhs = 0;
          for (int v : rhsTuple) rhs = rhs * m.size() + v;
          CHECK(lhs == rhs);
        }
      }
    }
  }

  Caps tiny;
  tiny.tupleSpace = 10;
  CHECK_THROWS_AS(j_map(conj, 3, tiny), Error);
}

TEST_CASE("braid words") {
  const auto conj = fixtures::conjugateOnTranspositions();
  const int n = conj.size();

  CHECK(apply_braid_word(conj, {}, {0, 1, 2}) == std::vector<int>{0, 1, 2});

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        CHECK(apply_braid_word(conj, {1, 2, 1}, {x, y, z}) ==
              apply_braid_word(conj, {2, 1, 2}, {x, y, z}));

  // [i, -i] and [-i, i] cancel
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      CHECK(apply_braid_word(conj, {1, -1}, {x, y}) == std::vector<int>{x, y});
      CHECK(apply_braid_word(conj, {-1, 1}, {x, y}) == std::vector<int>{x, y});
    }

  // [1,1] is the identity exactly for involutive maps
  auto squareIsIdentity = [](const BraidedMap& m) {
    for (int x = 0; x < m.size(); ++x)
      for (int y = 0; y < m.size(); ++y)
        if (apply_braid_word(m, {1, 1}, {x, y}) != std::vector<int>{x, y}) return false;
    return true;
  };
  CHECK(squareIsIdentity(fixtures::flip(3)));
  CHECK_FALSE(squareIsIdentity(conj));

  // applying w then w' equals applying the concatenation
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> w1, w2;
    for (int i = 0; i < 4; ++i) {
      w1.push_back((rng() % 2 ? 1 : -1) * (1 + static_cast<int>(rng() % 2)));
      w2.push_back((rng() % 2 ? 1 : -1) * (1 + static_cast<int>(rng() % 2)));
    }
    std::vector<int> tuple{static_cast<int>(rng() % n), static_cast<int>(rng() % n),
                           static_cast<int>(rng() % n)};
    auto concat = w1;
    concat.insert(concat.end(), w2.begin(), w2.end());
    CHECK(apply_braid_word(conj, w2, apply_braid_word(conj, w1, tuple)) ==
          apply_braid_word(conj, concat, tuple));
  }

  CHECK_THROWS_AS(apply_braid_word(conj, {3}, {0, 1, 2}), Error);
  CHECK_THROWS_AS(apply_braid_word(conj, {0}, {0, 1, 2}), Error);
}
