#include "braidlab/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <thread>

#include "braidlab/m_module.hpp"
#include "braidlab/perm_group.hpp"

namespace braidlab {

namespace {

std::vector<std::vector<int>> allPermutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> relabelFlat(const BraidedMap& m, const std::vector<int>& sigma,
                             const std::vector<int>& sigmaInv) {
  const int n = m.size();
  std::vector<int> flat(2 * n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      flat[2 * (x * n + y)] = sigma[m.g(sigmaInv[x], sigmaInv[y])];
      flat[2 * (x * n + y) + 1] = sigma[m.f(sigmaInv[y], sigmaInv[x])];
    }
  return flat;
}

// Incremental search over per-element (g-row, f-column) choices.
class Search {
public:
  Search(int n, const std::vector<std::vector<int>>& perms)
      : n_(n), perms_(perms), gRow_(n, -1), fCol_(n, -1), seen_(n * n, 0) {}

  // Runs the DFS with the top-level (g_0, f_0) choice fixed to (gi, fi).
  void run(int gi, int fi, std::set<std::vector<int>>& out) {
    out_ = &out;
    assign(0, gi, fi);
  }

private:
  // g_x(y) / f_y(x) when the needed row/column is assigned, else -1.
  // Unknown arguments propagate as -1.
  int g(int x, int y) const {
    return (x < 0 || y < 0 || gRow_[x] < 0) ? -1 : perms_[gRow_[x]][y];
  }
  int f(int y, int x) const {
    return (y < 0 || x < 0 || fCol_[y] < 0) ? -1 : perms_[fCol_[y]][x];
  }

  // Tri-state braid check over {0..depth}^3: a fully evaluable component that
  // differs refutes the branch; components touching unassigned rows are
  // skipped and rechecked at greater depth. At full depth every lookup is
  // known, so this becomes the exact braid predicate.
  bool braidConsistent(int depth) const {
    for (int x = 0; x <= depth; ++x)
      for (int y = 0; y <= depth; ++y) {
        const int a = g(x, y), b = f(y, x);
        for (int z = 0; z <= depth; ++z) {
          const int c = g(b, z), d = f(z, b);
          const int e = g(a, c), h = f(c, a);
          const int p = g(y, z), q = f(z, y);
          const int r = g(x, p), s = f(p, x);
          const int t = g(s, q), u = f(q, s);
          if (e >= 0 && r >= 0 && e != r) return false;
          if (h >= 0 && t >= 0 && h != t) return false;
          if (d >= 0 && u >= 0 && d != u) return false;
        }
      }
    return true;
  }

  void assign(int k, int gi, int fi) {
    gRow_[k] = gi;
    fCol_[k] = fi;
    // new bijectivity cells: (k, y) for y <= k and (x, k) for x < k
    std::vector<int> marked;
    bool ok = true;
    auto tryMark = [&](int x, int y) {
      const int code = g(x, y) * n_ + f(y, x);
      if (seen_[code]) return false;
      seen_[code] = 1;
      marked.push_back(code);
      return true;
    };
    for (int y = 0; y <= k && ok; ++y) ok = tryMark(k, y);
    for (int x = 0; x < k && ok; ++x) ok = tryMark(x, k);
    if (ok) ok = braidConsistent(k);
    if (ok) {
      if (k == n_ - 1) {
        emit();
      } else {
        for (size_t ngi = 0; ngi < perms_.size(); ++ngi)
          for (size_t nfi = 0; nfi < perms_.size(); ++nfi)
            assign(k + 1, static_cast<int>(ngi), static_cast<int>(nfi));
      }
    }
    for (int code : marked) seen_[code] = 0;
    gRow_[k] = -1;
    fCol_[k] = -1;
  }

  void emit() {
    std::vector<int> flat(2 * n_ * n_);
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        flat[2 * (x * n_ + y)] = g(x, y);
        flat[2 * (x * n_ + y) + 1] = f(y, x);
      }
    BraidedMap m(n_, std::move(flat));
    if (!m.isBraided()) return;  // cannot fire: full-depth check is exact
    out_->insert(canonical_form(m).flat());
  }

  int n_;
  const std::vector<std::vector<int>>& perms_;
  std::vector<int> gRow_, fCol_;
  std::vector<char> seen_;
  std::set<std::vector<int>>* out_ = nullptr;
};

}  // namespace

BraidedMap canonical_form(const BraidedMap& m) {
  const int n = m.size();
  const auto perms = allPermutations(n);
  std::vector<int> best;
  for (const auto& sigma : perms) {
    std::vector<int> sigmaInv(n);
    for (int i = 0; i < n; ++i) sigmaInv[sigma[i]] = i;
    auto flat = relabelFlat(m, sigma, sigmaInv);
    if (best.empty() || flat < best) best = std::move(flat);
  }
  return BraidedMap(n, std::move(best));
}

long orbit_size(const BraidedMap& m) {
  const int n = m.size();
  const auto perms = allPermutations(n);
  std::set<std::vector<int>> orbit;
  for (const auto& sigma : perms) {
    std::vector<int> sigmaInv(n);
    for (int i = 0; i < n; ++i) sigmaInv[sigma[i]] = i;
    orbit.insert(relabelFlat(m, sigma, sigmaInv));
  }
  return static_cast<long>(orbit.size());
}

std::vector<CensusRecord> enumerate_solutions(int n, CensusFilter filter, int workers,
                                              const Caps& caps) {
  if (n < 1 || n > 4)
    throw Error("Unsupported", "enumeration supports 1 <= n <= 4, got " + std::to_string(n));
  if (workers < 1) throw Error("MalformedInput", "workers must be >= 1");

  const auto perms = allPermutations(n);
  const long top = static_cast<long>(perms.size()) * static_cast<long>(perms.size());
  const int w = static_cast<int>(std::min<long>(workers, top));

  std::vector<std::set<std::vector<int>>> partial(w);
  std::vector<std::thread> pool;
  for (int t = 0; t < w; ++t)
    pool.emplace_back([&, t]() {
      Search search(n, perms);
      for (long combo = t; combo < top; combo += w) {
        const int gi = static_cast<int>(combo / static_cast<long>(perms.size()));
        const int fi = static_cast<int>(combo % static_cast<long>(perms.size()));
        search.run(gi, fi, partial[t]);
      }
    });
  for (auto& th : pool) th.join();

  std::set<std::vector<int>> canonicals;
  for (auto& part : partial) canonicals.merge(part);

  std::vector<CensusRecord> records;
  for (const auto& flat : canonicals) {
    BraidedMap canon(n, flat);
    CensusRecord rec{canon,
                     orbit_size(canon),
                     canon.isInvolutive(),
                     is_injective(canon, caps),
                     rank(canon),
                     a0_quotient(canon, caps).group.order(),
                     g_quotient(canon, caps).group.order()};
    const bool keep = filter == CensusFilter::All ||
                      (filter == CensusFilter::Symmetric && rec.symmetric) ||
                      (filter == CensusFilter::Injective && rec.injective);
    if (keep) records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace braidlab
