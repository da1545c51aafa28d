#include "poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace latfact {

void Poset::finish(std::vector<std::string> names) {
  const std::size_t n = up_.size();
  down_.assign(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    up_[a].for_each([&](std::size_t b) { down_[b].set(a); });
  if (names.empty()) {
    names_.resize(n);
    for (std::size_t i = 0; i < n; ++i) names_[i] = "n" + std::to_string(i + 1);
  } else {
    if (names.size() != n) throw InputError("poset: name count does not match size");
    names_ = std::move(names);
  }
}

Poset Poset::from_covers(std::size_t n, const std::vector<std::pair<int, int>>& covers,
                         std::vector<std::string> names) {
  Poset p;
  p.up_.assign(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) p.up_[i].set(i);
  for (auto [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || lo >= static_cast<int>(n) || hi >= static_cast<int>(n) || lo == hi)
      throw InputError("poset: cover pair out of range");
    p.up_[lo].set(hi);
  }
  // Warshall closure over the up-sets.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (p.up_[a].test(k)) p.up_[a] |= p.up_[k];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (p.up_[a].test(b) && p.up_[b].test(a))
        throw StructuralError("poset: cover list induces a cycle");
  p.finish(std::move(names));
  return p;
}

Poset Poset::from_leq(std::vector<Bitset> leq, std::vector<std::string> names) {
  const std::size_t n = leq.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (leq[a].size() != n) throw InputError("poset: relation matrix is not square");
    if (!leq[a].test(a)) throw StructuralError("poset: relation is not reflexive");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a].test(b) && leq[b].test(a))
        throw StructuralError("poset: relation is not antisymmetric");
      if (leq[a].test(b) && !leq[b].is_subset_of(leq[a]))
        throw StructuralError("poset: relation is not transitive");
    }
  Poset p;
  p.up_ = std::move(leq);
  p.finish(std::move(names));
  return p;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  const int n = static_cast<int>(size());
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      Bitset between = up_[a] & down_[b];
      if (between.count() == 2) out.emplace_back(a, b);
    }
  return out;
}

std::vector<std::vector<int>> Poset::upper_covers() const {
  std::vector<std::vector<int>> out(size());
  for (auto [lo, hi] : cover_pairs()) out[lo].push_back(hi);
  return out;
}

std::vector<std::vector<int>> Poset::lower_covers() const {
  std::vector<std::vector<int>> out(size());
  for (auto [lo, hi] : cover_pairs()) out[hi].push_back(lo);
  return out;
}

std::optional<int> Poset::join(int a, int b) const {
  Bitset ub = up_[a] & up_[b];
  std::optional<int> least;
  ub.for_each([&](std::size_t c) {
    if (ub.is_subset_of(up_[c])) least = static_cast<int>(c);
  });
  return least;
}

std::optional<int> Poset::meet(int a, int b) const {
  Bitset lb = down_[a] & down_[b];
  std::optional<int> greatest;
  lb.for_each([&](std::size_t c) {
    if (lb.is_subset_of(down_[c])) greatest = static_cast<int>(c);
  });
  return greatest;
}

std::optional<int> Poset::top() const {
  for (std::size_t a = 0; a < size(); ++a)
    if (down_[a].count() == size()) return static_cast<int>(a);
  return std::nullopt;
}

std::optional<int> Poset::bottom() const {
  for (std::size_t a = 0; a < size(); ++a)
    if (up_[a].count() == size()) return static_cast<int>(a);
  return std::nullopt;
}

int Poset::height(int a) const {
  std::vector<int> h(size(), -1);
  // Longest chain ending at each element, restricted to the down-set of a.
  std::vector<int> order(size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return down_[x].count() < down_[y].count(); });
  for (int x : order) {
    if (!down_[a].test(x)) continue;
    int best = 0;
    down_[x].for_each([&](std::size_t y) {
      if (static_cast<int>(y) != x && h[y] >= 0) best = std::max(best, h[y] + 1);
    });
    h[x] = best;
  }
  return h[a];
}

Bitset Poset::interval_members(Interval iv) const {
  if (iv.bottom < 0 || iv.top < 0 || iv.bottom >= static_cast<int>(size()) ||
      iv.top >= static_cast<int>(size()))
    throw InputError("interval: endpoint index out of range");
  if (!leq(iv.bottom, iv.top))
    throw InputError("interval: bottom is not below top");
  return up_[iv.bottom] & down_[iv.top];
}

std::vector<int> Poset::maximal_of(const Bitset& set) const {
  std::vector<int> out;
  set.for_each([&](std::size_t a) {
    bool maximal = true;
    set.for_each([&](std::size_t b) {
      if (a != b && leq(static_cast<int>(a), static_cast<int>(b))) maximal = false;
    });
    if (maximal) out.push_back(static_cast<int>(a));
  });
  return out;
}

std::vector<int> Poset::minimal_of(const Bitset& set) const {
  std::vector<int> out;
  set.for_each([&](std::size_t a) {
    bool minimal = true;
    set.for_each([&](std::size_t b) {
      if (a != b && leq(static_cast<int>(b), static_cast<int>(a))) minimal = false;
    });
    if (minimal) out.push_back(static_cast<int>(a));
  });
  return out;
}

LatticeCheck Poset::lattice_check() const {
  const int n = static_cast<int>(size());
  LatticeCheck res;
  if (n == 0) {
    res.ok = false;
    return res;
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!join(a, b)) {
        Bitset ub = up_[a] & up_[b];
        res.ok = false;
        res.join_side = true;
        res.x = a;
        res.y = b;
        res.candidates = minimal_of(ub);
        return res;
      }
      if (!meet(a, b)) {
        Bitset lb = down_[a] & down_[b];
        res.ok = false;
        res.join_side = false;
        res.x = a;
        res.y = b;
        res.candidates = maximal_of(lb);
        return res;
      }
    }
  return res;
}

namespace {

std::vector<std::uint64_t> order_signatures(const Poset& p) {
  const std::size_t n = p.size();
  auto ups = p.upper_covers();
  auto downs = p.lower_covers();
  std::vector<std::uint64_t> sig(n);
  for (std::size_t a = 0; a < n; ++a)
    sig[a] = (p.up_set(static_cast<int>(a)).count() << 24) ^
             (p.down_set(static_cast<int>(a)).count() << 16) ^ (ups[a].size() << 8) ^
             downs[a].size();
  // Refine by neighbour signature multisets until stable.
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    bool changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      std::vector<std::uint64_t> upsig, dnsig;
      for (int b : ups[a]) upsig.push_back(sig[b]);
      for (int b : downs[a]) dnsig.push_back(sig[b]);
      std::sort(upsig.begin(), upsig.end());
      std::sort(dnsig.begin(), dnsig.end());
      std::uint64_t h = sig[a];
      for (auto v : upsig) h = h * 0x100000001b3ull + v + 1;
      for (auto v : dnsig) h = h * 0x9e3779b97f4a7c15ull + v + 3;
      next[a] = h;
      if (h != sig[a]) changed = true;
    }
    sig = std::move(next);
    if (!changed) break;
  }
  return sig;
}

bool extend_iso(const Poset& a, const Poset& b, const std::vector<std::uint64_t>& sa,
                const std::vector<std::uint64_t>& sb, std::vector<int>& map,
                std::vector<bool>& used, std::size_t next) {
  const std::size_t n = a.size();
  if (next == n) return true;
  int x = static_cast<int>(next);
  for (std::size_t yc = 0; yc < n; ++yc) {
    int y = static_cast<int>(yc);
    if (used[yc] || sa[next] != sb[yc]) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < next && ok; ++prev) {
      int px = static_cast<int>(prev), py = map[prev];
      if (a.leq(px, x) != b.leq(py, y) || a.leq(x, px) != b.leq(y, py)) ok = false;
    }
    if (!ok) continue;
    map[next] = y;
    used[yc] = true;
    if (extend_iso(a, b, sa, sb, map, used, next + 1)) return true;
    used[yc] = false;
  }
  return false;
}

}  // namespace

bool lattices_isomorphic(const Poset& a, const Poset& b) {
  if (a.size() != b.size()) return false;
  auto sa = order_signatures(a);
  auto sb = order_signatures(b);
  auto msa = sa, msb = sb;
  std::sort(msa.begin(), msa.end());
  std::sort(msb.begin(), msb.end());
  if (msa != msb) return false;
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(a.size(), false);
  return extend_iso(a, b, sa, sb, map, used, 0);
}

namespace {

// Backtracking crown search in choice order x_0, y_0, x_1, y_1, ... The
// target suborder pattern: x_i <= y_j iff j == i or j == (i+1) mod k, and
// no other comparabilities among the 2k elements.
struct CrownSearch {
  const Poset& p;
  int k;
  std::vector<int> xs, ys;

  // Choosing x_i with i = xs.size(); placed are x_0..x_{i-1}, y_0..y_{i-1}.
  bool x_compatible(int cand) const {
    const int i = static_cast<int>(xs.size());
    for (int x : xs)
      if (x == cand || p.leq(x, cand) || p.leq(cand, x)) return false;
    for (int j = 0; j < static_cast<int>(ys.size()); ++j) {
      int y = ys[j];
      if (y == cand || p.leq(y, cand)) return false;
      bool want = (i == k - 1 && j == 0);  // wrap link x_{k-1} <= y_0
      if (p.leq(cand, y) != want) return false;
    }
    return true;
  }

  // Choosing y_i with i = ys.size(); placed are x_0..x_i, y_0..y_{i-1}.
  bool y_compatible(int cand) const {
    const int i = static_cast<int>(ys.size());
    for (int y : ys)
      if (y == cand || p.leq(y, cand) || p.leq(cand, y)) return false;
    for (int j = 0; j <= i; ++j) {
      int x = xs[j];
      if (x == cand || p.leq(cand, x)) return false;
      bool want = (j == i) || (j == i - 1);
      if (p.leq(x, cand) != want) return false;
    }
    return true;
  }

  bool verify() const {
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        bool want = (j == i) || (j == (i + 1) % k);
        if (p.leq(xs[i], ys[j]) != want) return false;
        if (p.leq(ys[j], xs[i])) return false;
      }
    return true;
  }

  bool step() {
    const int n = static_cast<int>(p.size());
    if (static_cast<int>(ys.size()) == k) return verify();
    bool pick_x = xs.size() == ys.size();
    for (int cand = 0; cand < n; ++cand) {
      if (pick_x) {
        if (!x_compatible(cand)) continue;
        xs.push_back(cand);
        if (step()) return true;
        xs.pop_back();
      } else {
        if (!y_compatible(cand)) continue;
        ys.push_back(cand);
        if (step()) return true;
        ys.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

std::optional<CrownWitness> find_crown(const Poset& p, int k) {
  if (k < 3) throw InputError("crown order must be at least 3");
  if (2 * static_cast<std::size_t>(k) > p.size()) return std::nullopt;
  CrownSearch s{p, k, {}, {}};
  if (s.step()) return CrownWitness{s.xs, s.ys};
  return std::nullopt;
}

bool has_any_crown(const Poset& p) {
  for (int k = 3; 2 * k <= static_cast<int>(p.size()); ++k)
    if (find_crown(p, k)) return true;
  return false;
}

}  // namespace latfact
