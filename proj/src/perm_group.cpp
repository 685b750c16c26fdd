#include "braidlab/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace braidlab {

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

PermGroup::PermGroup(int degree, std::vector<Perm> generators, long cap)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& gen : generators_) {
    if (static_cast<int>(gen.size()) != degree)
      throw Error("MalformedTables", "generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (int v : gen) {
      if (v < 0 || v >= degree || seen[v])
        throw Error("MalformedTables", "generator is not a permutation");
      seen[v] = 1;
    }
  }
  // Breadth-first closure under right multiplication by generators. In a
  // finite group this also closes under inverses.
  std::unordered_map<Perm, int, PermHash> found;
  std::deque<Perm> frontier;
  Perm id = perm_identity(degree);
  found.emplace(id, 0);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Perm cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& gen : generators_) {
      Perm next = perm_compose(cur, gen);
      if (found.emplace(next, 0).second) {
        if (static_cast<long>(found.size()) > cap)
          throw Error("CapExceeded",
                      "group closure exceeds cap of " + std::to_string(cap) + " elements");
        frontier.push_back(std::move(next));
      }
    }
  }
  elements_.reserve(found.size());
  for (const auto& [perm, unused] : found) elements_.push_back(perm);
  std::sort(elements_.begin(), elements_.end());
  index_.reserve(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], static_cast<int>(i));
  idIndex_ = index_.at(id);
}

int PermGroup::indexOf(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw Error("BadIndex", "permutation not in group");
  return it->second;
}

int PermGroup::mul(int i, int j) const { return indexOf(perm_compose(elements_[i], elements_[j])); }

int PermGroup::inv(int i) const { return indexOf(perm_inverse(elements_[i])); }

GQuotient g_quotient(const BraidedMap& m, const Caps& caps) {
  const auto t = ActionTables::build(m);
  const int n = m.size();
  std::vector<Perm> gens(n, Perm(2 * n));
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      gens[x][z] = t.circ[x][z];
      gens[x][n + z] = n + t.star[x][z];
    }
  }
  PermGroup group(2 * n, gens, caps.groupElements);
  std::vector<int> genIndex(n);
  for (int x = 0; x < n; ++x) genIndex[x] = group.indexOf(gens[x]);
  return GQuotient{std::move(group), std::move(genIndex)};
}

AQuotient a0_quotient(const BraidedMap& m, const Caps& caps) {
  auto phi = phi_table(m);
  const int n = m.size();
  std::vector<Perm> gens(n, Perm(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) gens[x][y] = phi.at(y, x);
  PermGroup group(n, gens, caps.groupElements);
  std::vector<int> genIndex(n);
  for (int x = 0; x < n; ++x) genIndex[x] = group.indexOf(gens[x]);
  return AQuotient{std::move(group), std::move(genIndex), std::move(phi)};
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

}  // namespace

int rank(const BraidedMap& m) { return static_cast<int>(rank_classes(m).size()); }

std::vector<std::vector<int>> rank_classes(const BraidedMap& m) {
  const auto phi = phi_table(m);
  const int n = m.size();
  UnionFind uf(n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) uf.unite(y, phi.at(y, x));
  std::vector<std::vector<int>> byRoot(n);
  for (int i = 0; i < n; ++i) byRoot[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> classes;
  for (auto& cls : byRoot)
    if (!cls.empty()) classes.push_back(std::move(cls));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

bool rank_equality_is_symmetric(const BraidedMap& m) {
  return (rank(m) == m.size()) == m.isInvolutive();
}

}  // namespace braidlab
