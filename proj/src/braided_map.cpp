#include "braidlab/braided_map.hpp"

#include <algorithm>
#include <string>

namespace braidlab {

namespace {

bool isPermutation(const std::vector<int>& row) {
  std::vector<char> seen(row.size(), 0);
  for (int v : row) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

BraidedMap::BraidedMap(int n, std::vector<int> flat) : n_(n), flat_(std::move(flat)) {
  if (n <= 0) throw Error("MalformedTable", "n must be positive");
  if (flat_.size() != static_cast<size_t>(2 * n * n))
    throw Error("MalformedTable", "table has " + std::to_string(flat_.size() / 2) +
                                      " entries, expected " + std::to_string(n * n));
  for (int v : flat_)
    if (v < 0 || v >= n)
      throw Error("MalformedTable", "entry " + std::to_string(v) + " out of [0," +
                                        std::to_string(n) + ")");
}

BraidedMap BraidedMap::fromPairs(int n,
                                 const std::vector<std::vector<std::pair<int, int>>>& table) {
  if (static_cast<int>(table.size()) != n)
    throw Error("MalformedTable", "expected " + std::to_string(n) + " rows");
  std::vector<int> flat;
  flat.reserve(2 * n * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error("MalformedTable", "ragged row in table");
    for (const auto& [u, v] : row) {
      flat.push_back(u);
      flat.push_back(v);
    }
  }
  return BraidedMap(n, std::move(flat));
}

bool BraidedMap::isBijective() const {
  std::vector<char> seen(n_ * n_, 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      int code = g(x, y) * n_ + f(y, x);
      if (seen[code]) return false;
      seen[code] = 1;
    }
  return true;
}

bool BraidedMap::isNondegenerate() const {
  std::vector<int> row(n_);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) row[y] = g(x, y);
    if (!isPermutation(row)) return false;
  }
  for (int y = 0; y < n_; ++y) {
    for (int x = 0; x < n_; ++x) row[x] = f(y, x);
    if (!isPermutation(row)) return false;
  }
  return true;
}

bool BraidedMap::isBraided() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      const int a = g(x, y), b = f(y, x);
      for (int z = 0; z < n_; ++z) {
        // S1 S2 S1
        const int c = g(b, z), d = f(z, b);
        const int e = g(a, c), h = f(c, a);
        // S2 S1 S2
        const int p = g(y, z), q = f(z, y);
        const int r = g(x, p), s = f(p, x);
        const int t = g(s, q), u = f(q, s);
        if (e != r || h != t || d != u) return false;
      }
    }
  return true;
}

bool BraidedMap::qybeAgrees() const {
  // R = sigma S: R(x,y) = (f_y(x), g_x(y)).
  auto r1 = [&](int x, int y) { return f(y, x); };
  auto r2 = [&](int x, int y) { return g(x, y); };
  bool qybe = true;
  for (int x = 0; x < n_ && qybe; ++x)
    for (int y = 0; y < n_ && qybe; ++y)
      for (int z = 0; z < n_; ++z) {
        // R12 R13 R23, rightmost applied first
        int a0 = x, a1 = r1(y, z), a2 = r2(y, z);
        int b0 = r1(a0, a2), b1 = a1, b2 = r2(a0, a2);
        int l0 = r1(b0, b1), l1 = r2(b0, b1), l2 = b2;
        // R23 R13 R12
        int c0 = r1(x, y), c1 = r2(x, y), c2 = z;
        int d0 = r1(c0, c2), d1 = c1, d2 = r2(c0, c2);
        int rr0 = d0, rr1 = r1(d1, d2), rr2 = r2(d1, d2);
        if (l0 != rr0 || l1 != rr1 || l2 != rr2) {
          qybe = false;
          break;
        }
      }
  return qybe == isBraided();
}

bool BraidedMap::isInvolutive() const {
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      auto [u, v] = apply(x, y);
      if (apply(u, v) != std::make_pair(x, y)) return false;
    }
  return true;
}

std::array<bool, 3> BraidedMap::braidComponents() const {
  if (!isNondegenerate()) throw Error("Degenerate", "braidComponents needs a nondegenerate map");
  std::array<bool, 3> ok = {true, true, true};
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      const int a = g(x, y), b = f(y, x);
      for (int z = 0; z < n_; ++z) {
        const int c = g(b, z), d = f(z, b);
        const int e = g(a, c), h = f(c, a);
        const int p = g(y, z), q = f(z, y);
        const int r = g(x, p), s = f(p, x);
        const int t = g(s, q), u = f(q, s);
        if (e != r) ok[0] = false;
        if (h != t) ok[1] = false;
        if (d != u) ok[2] = false;
      }
    }
  return ok;
}

ActionTables ActionTables::build(const BraidedMap& m) {
  if (!m.isNondegenerate())
    throw Error("Degenerate", "action tables are defined only for nondegenerate maps");
  const int n = m.size();
  ActionTables t;
  t.star.assign(n, std::vector<int>(n));
  t.circ.assign(n, std::vector<int>(n));
  t.starInv.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      t.circ[x][z] = m.g(x, z);
      t.starInv[x][z] = m.f(x, z);
    }
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) t.star[x][t.starInv[x][z]] = z;
  return t;
}

PhiTable phi_table(const BraidedMap& m) {
  const auto t = ActionTables::build(m);
  const int n = m.size();
  PhiTable phi;
  phi.n = n;
  phi.flat.resize(n * n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      phi.flat[y * n + x] = t.starInv[x][t.circ[t.star[y][x]][y]];
  return phi;
}

BraidedMap derived_solution(const BraidedMap& m) {
  const auto phi = phi_table(m);
  if (!m.isBraided()) throw Error("NotBraided", "derived solution needs a braided input");
  const int n = m.size();
  std::vector<int> flat(2 * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      flat[2 * (x * n + y)] = phi.at(y, x);
      flat[2 * (x * n + y) + 1] = x;
    }
  return BraidedMap(n, std::move(flat));
}

bool phi_invariance_check(const BraidedMap& m) {
  const auto tab = ActionTables::build(m);
  if (!m.isBraided()) throw Error("NotBraided", "phi invariance is stated for braided maps");
  const auto phi = phi_table(m);
  const int n = m.size();
  for (int t = 0; t < n; ++t)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const auto& act = tab.starInv[t];  // z -> t^{-1} * z
        if (act[phi.at(y, z)] != phi.at(act[y], act[z])) return false;
      }
  return true;
}

std::vector<int> j_map(const BraidedMap& m, int k, const Caps& caps) {
  if (k < 1) throw Error("BadIndex", "J_k needs k >= 1");
  const auto tab = ActionTables::build(m);
  const int n = m.size();
  long space = 1;
  for (int i = 0; i < k; ++i) {
    space *= n;
    if (space > caps.tupleSpace)
      throw Error("TooLarge", "n^k exceeds the tuple-space cap of " +
                                  std::to_string(caps.tupleSpace));
  }
  std::vector<int> prev(n);
  for (int i = 0; i < n; ++i) prev[i] = i;  // J_1 = id
  long sz = n;
  std::vector<int> digits(k);
  for (int j = 2; j <= k; ++j) {
    const long szj = sz * n;
    std::vector<int> cur(szj);
    for (long idx = 0; idx < szj; ++idx) {
      const long prefix = idx / n;
      const int last = static_cast<int>(idx % n);
      long img = prev[prefix];
      for (int pos = j - 2; pos >= 0; --pos) {
        digits[pos] = static_cast<int>(img % n);
        img /= n;
      }
      long out = 0;
      for (int pos = 0; pos < j - 1; ++pos) out = out * n + tab.starInv[last][digits[pos]];
      cur[idx] = static_cast<int>(out * n + last);
    }
    prev = std::move(cur);
    sz = szj;
  }
  return prev;
}

std::vector<int> apply_braid_word(const BraidedMap& m, const std::vector<int>& word,
                                  std::vector<int> tuple) {
  const int n = m.size();
  const int k = static_cast<int>(tuple.size());
  for (int v : tuple)
    if (v < 0 || v >= n) throw Error("BadIndex", "tuple entry out of range");
  std::vector<int> inverse;
  auto ensureInverse = [&]() {
    if (!inverse.empty()) return;
    inverse.assign(2 * n * n, -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto [u, v] = m.apply(x, y);
        int slot = 2 * (u * n + v);
        if (inverse[slot] != -1) throw Error("MalformedTable", "map is not a bijection");
        inverse[slot] = x;
        inverse[slot + 1] = y;
      }
  };
  for (int w : word) {
    const int i = w > 0 ? w : -w;
    if (i < 1 || i > k - 1)
      throw Error("BadIndex", "generator index " + std::to_string(w) + " out of [1," +
                                  std::to_string(k - 1) + "]");
    int& a = tuple[i - 1];
    int& b = tuple[i];
    if (w > 0) {
      auto [u, v] = m.apply(a, b);
      a = u;
      b = v;
    } else {
      ensureInverse();
      int slot = 2 * (a * n + b);
      int u = inverse[slot], v = inverse[slot + 1];
      a = u;
      b = v;
    }
  }
  return tuple;
}

}  // namespace braidlab
