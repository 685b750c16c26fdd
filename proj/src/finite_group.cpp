#include "braidlab/finite_group.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace braidlab {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> mul) : mul_(std::move(mul)) {
  order_ = static_cast<int>(mul_.size());
  if (order_ == 0) throw Error("MalformedTables", "empty multiplication table");
  for (const auto& row : mul_) {
    if (static_cast<int>(row.size()) != order_)
      throw Error("MalformedTables", "multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= order_) throw Error("MalformedTables", "table entry out of range");
  }
  id_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool isId = true;
    for (int a = 0; a < order_; ++a)
      if (mul_[e][a] != a || mul_[a][e] != a) {
        isId = false;
        break;
      }
    if (isId) {
      id_ = e;
      break;
    }
  }
  if (id_ < 0) throw Error("MalformedTables", "no identity element");
  inv_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b)
      if (mul_[a][b] == id_ && mul_[b][a] == id_) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0) throw Error("MalformedTables", "element without inverse");
  }
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
          throw Error("MalformedTables", "multiplication is not associative");
}

namespace {

void checkActionTables(const FiniteGroup& G, const FiniteGroup& A,
                       const std::vector<std::vector<int>>& rhoGA) {
  if (static_cast<int>(rhoGA.size()) != G.order())
    throw Error("MalformedTables", "rhoGA must have one table per element of G");
  for (const auto& table : rhoGA) {
    if (static_cast<int>(table.size()) != A.order())
      throw Error("MalformedTables", "rhoGA table degree mismatch");
    std::vector<char> seen(A.order(), 0);
    for (int v : table) {
      if (v < 0 || v >= A.order() || seen[v])
        throw Error("MalformedTables", "rhoGA table is not a permutation of A");
      seen[v] = 1;
    }
  }
  for (int g = 0; g < G.order(); ++g)
    for (int a = 0; a < A.order(); ++a)
      for (int b = 0; b < A.order(); ++b)
        if (rhoGA[g][A.mul(a, b)] != A.mul(rhoGA[g][a], rhoGA[g][b]))
          throw Error("MalformedTables", "rhoGA[g] is not an automorphism of A");
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      const int gh = G.mul(g, h);
      for (int a = 0; a < A.order(); ++a)
        if (rhoGA[gh][a] != rhoGA[g][rhoGA[h][a]])
          throw Error("MalformedTables", "rhoGA is not a homomorphism G -> Aut(A)");
    }
}

}  // namespace

bool verify_cocycle(const FiniteGroup& G, const FiniteGroup& A,
                    const std::vector<std::vector<int>>& rhoGA, const std::vector<int>& pi) {
  checkActionTables(G, A, rhoGA);
  if (static_cast<int>(pi.size()) != G.order())
    throw Error("MalformedTables", "pi must map every element of G");
  for (int v : pi)
    if (v < 0 || v >= A.order()) throw Error("MalformedTables", "pi entry out of range");
  if (G.order() != A.order()) return false;
  std::vector<char> hit(A.order(), 0);
  for (int v : pi) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  for (int g1 = 0; g1 < G.order(); ++g1)
    for (int g2 = 0; g2 < G.order(); ++g2) {
      const int lhs = pi[G.mul(g1, g2)];
      const int rhs = A.mul(rhoGA[G.inv(g2)][pi[g1]], pi[g2]);
      if (lhs != rhs) return false;
    }
  return true;
}

void validate_seven_tuple(const SevenTuple& t) {
  checkActionTables(t.G, t.A, t.rhoGA);
  if (static_cast<int>(t.pi.size()) != t.G.order())
    throw Error("InvariantViolation", "pi must map every element of G");
  for (int v : t.pi)
    if (v < 0 || v >= t.A.order())
      throw Error("InvariantViolation", "pi entry out of range");
  if (t.G.order() != t.A.order())
    throw Error("InvariantViolation", "pi cannot be a bijection: |G| != |A|");
  {
    std::vector<char> hit(t.A.order(), 0);
    for (int v : t.pi) {
      if (hit[v]) throw Error("InvariantViolation", "pi is not a bijection");
      hit[v] = 1;
    }
  }
  for (int g1 = 0; g1 < t.G.order(); ++g1)
    for (int g2 = 0; g2 < t.G.order(); ++g2) {
      const int lhs = t.pi[t.G.mul(g1, g2)];
      const int rhs = t.A.mul(t.rhoGA[t.G.inv(g2)][t.pi[g1]], t.pi[g2]);
      if (lhs != rhs) throw Error("InvariantViolation", "cocycle identity fails");
    }
  if (t.X.empty()) throw Error("InvariantViolation", "X is empty");
  for (size_t i = 0; i < t.X.size(); ++i) {
    if (t.X[i] < 0 || t.X[i] >= t.A.order())
      throw Error("InvariantViolation", "X contains a non-element of A");
    if (i > 0 && t.X[i] <= t.X[i - 1])
      throw Error("InvariantViolation", "X must be strictly increasing");
  }
  std::unordered_set<int> inX(t.X.begin(), t.X.end());
  // Adjoint invariance of X under G x| A reduces to the G-action and
  // A-conjugation separately.
  for (int x : t.X) {
    for (int g = 0; g < t.G.order(); ++g)
      if (!inX.count(t.rhoGA[g][x]))
        throw Error("InvariantViolation", "X is not invariant under the G-action");
    for (int h = 0; h < t.A.order(); ++h)
      if (!inX.count(t.A.mul(t.A.mul(h, x), t.A.inv(h))))
        throw Error("InvariantViolation", "X is not closed under A-conjugation");
  }
}

BraidedMap seven_tuple_to_solution(const SevenTuple& t) {
  validate_seven_tuple(t);
  const int n = static_cast<int>(t.X.size());
  std::vector<int> piInv(t.A.order(), -1);
  for (int g = 0; g < t.G.order(); ++g) piInv[t.pi[g]] = g;
  std::vector<int> pos(t.A.order(), -1);
  for (int i = 0; i < n; ++i) pos[t.X[i]] = i;

  std::vector<int> flat(2 * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int x = t.X[i], y = t.X[j];
      const int gy = piInv[y];
      const int xActed = t.rhoGA[t.G.inv(gy)][x];  // rho(pi^{-1}(y)^{-1})(x)
      const int gx = piInv[x];
      const int gxActed = piInv[xActed];
      const int garg = t.G.mul(t.G.mul(gx, gy), t.G.inv(gxActed));
      const int u = t.pi[garg];
      if (pos[u] < 0 || pos[xActed] < 0)
        throw Error("InvariantViolation", "constructed map leaves X");
      flat[2 * (i * n + j)] = pos[u];
      flat[2 * (i * n + j) + 1] = pos[xActed];
    }
  return BraidedMap(n, std::move(flat));
}

A0Automorphism star_action_on_a0(const BraidedMap& m, const AQuotient& aq,
                                 const std::vector<int>& word) {
  const auto tab = ActionTables::build(m);
  const int n = m.size();
  Perm sigma = perm_identity(n);
  for (int letter : word) {
    const int x = (letter > 0 ? letter : -letter) - 1;
    if (x < 0 || x >= n) throw Error("BadIndex", "word letter out of range");
    const auto& step = letter > 0 ? tab.star[x] : tab.starInv[x];
    sigma = perm_compose(sigma, step);
  }
  A0Automorphism result;
  result.sigma = sigma;
  const Perm sigmaInv = perm_inverse(sigma);
  result.elementImage.resize(aq.group.order());
  for (long i = 0; i < aq.group.order(); ++i) {
    Perm image = perm_compose(perm_compose(sigma, aq.group.elements()[i]), sigmaInv);
    if (!aq.group.contains(image))
      throw Error("NotAnAutomorphism", "conjugation leaves the A0 closure");
    result.elementImage[i] = aq.group.indexOf(image);
  }
  for (int x = 0; x < n; ++x) {
    const int mapped = result.elementImage[aq.genIndex[x]];
    if (mapped != aq.genIndex[sigma[x]])
      throw Error("NotAnAutomorphism", "generator image disagrees with p(word * x)");
  }
  return result;
}

Perm word_cocycle(const BraidedMap& m, const std::vector<int>& word) {
  const auto tab = ActionTables::build(m);
  const auto phi = phi_table(m);
  const int n = m.size();
  auto pGen = [&](int x) {
    Perm p(n);
    for (int y = 0; y < n; ++y) p[y] = phi.at(y, x);
    return p;
  };
  auto conj = [](const Perm& s, const Perm& a) {
    return perm_compose(perm_compose(s, a), perm_inverse(s));
  };
  Perm acc = perm_identity(n);
  for (int letter : word) {
    const int x = (letter > 0 ? letter : -letter) - 1;
    if (x < 0 || x >= n) throw Error("BadIndex", "word letter out of range");
    if (letter > 0) {
      acc = perm_compose(conj(tab.starInv[x], acc), pGen(x));
    } else {
      const Perm moved = conj(tab.star[x], acc);
      const Perm px = conj(tab.star[x], pGen(x));
      acc = perm_compose(moved, perm_inverse(px));
    }
  }
  return acc;
}

}  // namespace braidlab
