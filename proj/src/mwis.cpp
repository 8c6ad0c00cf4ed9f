#include "sepenum/mwis.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "sepenum/classc.hpp"
#include "sepenum/errors.hpp"

namespace sepenum {

namespace {

using Value = __int128;

// Exact integer keys. Scaled weights are shifted left by n and vertex v gets
// an extra 2^(n-1-v): the sum over a set then orders sets by weight first
// and, on ties, by the smallest vertex where they differ.
std::vector<Value> keys_for(const WeightedGraph& wg) {
  ScaledWeights sw(wg.weights);
  const int n = wg.graph.order();
  const bool perturb = n <= 62;
  std::vector<Value> key(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    Value w = sw.value[static_cast<std::size_t>(v)];
    key[v] = perturb ? (w << n) + (Value(1) << (n - 1 - v)) : w;
  }
  return key;
}

MwisResult finish(const WeightedGraph& wg, VertexSet set) {
  if (!is_independent(wg.graph, set)) throw std::logic_error("MWIS result is not independent");
  Weight w = wg.total(set);
  return MwisResult{std::move(set), std::move(w)};
}

}  // namespace

MwisResult brute_force_mwis(const WeightedGraph& wg) {
  const Graph& g = wg.graph;
  const int n = g.order();
  if (n > kBruteMwisLimit)
    throw SizeGuardError("brute-force MWIS limited to n <= " + std::to_string(kBruteMwisLimit));
  auto key = keys_for(wg);
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint32_t{1} << v;
    g.neighbors(v).for_each([&](Vertex u) { closed[v] |= std::uint32_t{1} << u; });
  }
  Value best = -1;
  std::uint32_t best_set = 0;
  std::function<void(std::uint32_t, std::uint32_t, Value)> dfs = [&](std::uint32_t cand,
                                                                     std::uint32_t cur, Value val) {
    if (cand == 0) {
      if (val > best) {
        best = val;
        best_set = cur;
      }
      return;
    }
    Value bound = val;
    for (std::uint32_t c = cand; c; c &= c - 1) bound += key[static_cast<std::size_t>(__builtin_ctz(c))];
    if (bound <= best) return;
    int v = __builtin_ctz(cand);
    dfs(cand & ~closed[v], cur | (std::uint32_t{1} << v), val + key[v]);
    dfs(cand & ~(std::uint32_t{1} << v), cur, val);
  };
  const std::uint32_t all = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
  dfs(all, 0, 0);
  VertexSet s(n);
  for (std::uint32_t c = best_set; c; c &= c - 1) s.insert(__builtin_ctz(c));
  return finish(wg, std::move(s));
}

bool is_pmc(const Graph& g, const VertexSet& k) {
  if (k.empty()) return false;
  auto comps = connected_components(g, k);
  std::vector<VertexSet> nbhd;
  nbhd.reserve(comps.size());
  for (const auto& d : comps) {
    VertexSet nd = g.neighborhood(d);
    if (nd == k) return false;
    nbhd.push_back(std::move(nd));
  }
  bool ok = true;
  k.for_each([&](Vertex x) {
    if (!ok) return;
    VertexSet need = k - g.closed_neighbors(x);
    if (need.empty()) return;
    VertexSet covered(g.order());
    for (const auto& nd : nbhd)
      if (nd.contains(x)) covered |= nd;
    if (!need.is_subset_of(covered)) ok = false;
  });
  return ok;
}

namespace {

// The same predicates inside the induced subgraph g[alive].
bool is_pmc_within(const Graph& g, const VertexSet& alive, const VertexSet& k) {
  if (k.empty() || !k.is_subset_of(alive)) return false;
  auto comps = components_within(g, alive - k);
  std::vector<VertexSet> nbhd;
  for (const auto& d : comps) {
    VertexSet nd = g.neighborhood(d) & alive;
    if (nd == k) return false;
    nbhd.push_back(std::move(nd));
  }
  bool ok = true;
  k.for_each([&](Vertex x) {
    if (!ok) return;
    VertexSet need = k - g.closed_neighbors(x);
    if (need.empty()) return;
    VertexSet covered(g.order());
    for (const auto& nd : nbhd)
      if (nd.contains(x)) covered |= nd;
    if (!need.is_subset_of(covered)) ok = false;
  });
  return ok;
}

bool is_minimal_separator_within(const Graph& g, const VertexSet& alive, const VertexSet& s) {
  if (s.empty()) return false;
  int full = 0;
  for (const auto& d : components_within(g, alive - s))
    if (s.is_subset_of(g.neighborhood(d)) && ++full >= 2) return true;
  return false;
}

std::vector<Vertex> bfs_order(const Graph& g, const VertexSet& comp) {
  std::vector<Vertex> order{comp.first()};
  VertexSet seen(g.order());
  seen.insert(order[0]);
  for (std::size_t head = 0; head < order.size(); ++head)
    g.neighbors(order[head]).for_each([&](Vertex w) {
      if (comp.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        order.push_back(w);
      }
    });
  return order;
}

}  // namespace

std::vector<VertexSet> enumerate_pmcs(const Graph& g, const SeparatorSet& seps) {
  const int n = g.order();
  std::set<VertexSet> result;
  for (const VertexSet& comp : connected_components(g, VertexSet(n))) {
    std::vector<Vertex> order = bfs_order(g, comp);
    std::vector<VertexSet> local_seps;
    for (const auto& r : seps)
      if (r.set.is_subset_of(comp)) local_seps.push_back(r.set);

    VertexSet alive(n);
    alive.insert(order[0]);
    std::set<VertexSet> pmcs{alive};
    for (std::size_t i = 1; i < order.size(); ++i) {
      const Vertex a = order[i];
      alive.insert(a);
      std::set<VertexSet> delta;
      for (const auto& s : local_seps) {
        VertexSet t = s & alive;
        if (!delta.count(t) && is_minimal_separator_within(g, alive, t)) delta.insert(t);
      }
      std::set<VertexSet> cands;
      for (const auto& p : pmcs) {
        cands.insert(p);
        VertexSet q = p;
        q.insert(a);
        cands.insert(q);
      }
      for (const auto& s : delta) {
        if (!s.contains(a)) {
          VertexSet q = s;
          q.insert(a);
          cands.insert(q);
        }
        for (const auto& c : components_within(g, alive - s))
          for (const auto& t : delta) cands.insert(s | (t & c));
      }
      std::set<VertexSet> next;
      for (const auto& c : cands)
        if (is_pmc_within(g, alive, c)) next.insert(c);
      pmcs = std::move(next);
    }
    result.insert(pmcs.begin(), pmcs.end());
  }
  return {result.begin(), result.end()};
}

std::vector<VertexSet> enumerate_pmcs_exhaustive(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw SizeGuardError("exhaustive PMC scan limited to n <= 20");
  std::vector<VertexSet> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    VertexSet s(n);
    for (int v = 0; v < n; ++v)
      if ((m >> v) & 1U) s.insert(v);
    if (is_pmc(g, s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class PmcDp {
 public:
  PmcDp(const WeightedGraph& wg, const std::vector<VertexSet>& pmcs, const SeparatorSet& seps)
      : g_(wg.graph), key_(keys_for(wg)), pmcs_(pmcs) {
    for (const auto& r : seps) seps_.insert(r.set);
  }

  VertexSet solve_all() {
    VertexSet out(g_.order());
    for (const auto& comp : connected_components(g_, VertexSet(g_.order()))) {
      int b = block_of(comp);
      solve(b, VertexSet(g_.order()));
      collect(b, VertexSet(g_.order()), out);
    }
    return out;
  }

 private:
  struct Block {
    VertexSet s, d;
    std::vector<std::size_t> pmcs;
    std::vector<std::vector<int>> children;  // per PMC
  };
  struct Entry {
    Value value = -1;
    std::size_t pmc = 0;
    VertexSet y;
  };

  int block_of(const VertexSet& d) {
    auto it = block_ids_.find(d);
    if (it != block_ids_.end()) return it->second;
    Block blk;
    blk.d = d;
    blk.s = g_.neighborhood(d);
    if (!blk.s.empty() && !seps_.count(blk.s))
      throw IntegrityError("separator list is missing N(D) for a block of the decomposition");
    VertexSet cover = blk.s | d;
    for (std::size_t i = 0; i < pmcs_.size(); ++i) {
      const VertexSet& p = pmcs_[i];
      if (p.is_subset_of(cover) && blk.s.is_subset_of(p) && !(p == blk.s)) blk.pmcs.push_back(i);
    }
    if (blk.pmcs.empty()) throw IntegrityError("no potential maximal clique covers a block");
    int id = static_cast<int>(blocks_.size());
    block_ids_.emplace(d, id);
    blocks_.push_back(blk);
    std::vector<std::vector<int>> children;
    for (std::size_t i : blk.pmcs) {
      std::vector<int> ch;
      for (const auto& c : components_within(g_, d - pmcs_[i])) ch.push_back(block_of(c));
      children.push_back(std::move(ch));
    }
    blocks_[static_cast<std::size_t>(id)].children = std::move(children);
    return id;
  }

  template <typename F>
  void independent_subsets(const std::vector<Vertex>& cand, std::size_t from, VertexSet& cur,
                           Value val, F&& f) {
    f(cur, val);
    for (std::size_t i = from; i < cand.size(); ++i) {
      Vertex v = cand[i];
      if (g_.neighbors(v).intersects(cur)) continue;
      cur.insert(v);
      independent_subsets(cand, i + 1, cur, val + key_[static_cast<std::size_t>(v)], f);
      cur.erase(v);
    }
  }

  Value solve(int b, const VertexSet& x) {
    auto mk = std::make_pair(b, x);
    if (auto it = memo_.find(mk); it != memo_.end()) return it->second.value;
    Entry best;
    const std::size_t npmc = blocks_[static_cast<std::size_t>(b)].pmcs.size();
    for (std::size_t j = 0; j < npmc; ++j) {
      const Block& blk = blocks_[static_cast<std::size_t>(b)];
      std::size_t pi = blk.pmcs[j];
      std::vector<int> children = blk.children[j];
      VertexSet free = pmcs_[pi] - blk.s;
      free -= g_.neighborhood(x);
      std::vector<Vertex> cand = free.to_vector();
      VertexSet cur(g_.order());
      independent_subsets(cand, 0, cur, 0, [&](const VertexSet& y, Value val) {
        VertexSet chosen = x | y;
        Value total = val;
        for (int c : children) {
          const VertexSet& cs = blocks_[static_cast<std::size_t>(c)].s;
          total += solve(c, chosen & cs);
        }
        if (total > best.value) {
          best.value = total;
          best.pmc = j;
          best.y = y;
        }
      });
    }
    memo_[mk] = best;
    return best.value;
  }

  void collect(int b, const VertexSet& x, VertexSet& out) {
    const Entry& e = memo_.at({b, x});
    out |= e.y;
    const Block& blk = blocks_[static_cast<std::size_t>(b)];
    VertexSet chosen = x | e.y;
    for (int c : blk.children[e.pmc]) {
      VertexSet cx = chosen & blocks_[static_cast<std::size_t>(c)].s;
      collect(c, cx, out);
    }
  }

  const Graph& g_;
  std::vector<Value> key_;
  const std::vector<VertexSet>& pmcs_;
  std::set<VertexSet> seps_;
  std::map<VertexSet, int> block_ids_;
  std::vector<Block> blocks_;
  std::map<std::pair<int, VertexSet>, Entry> memo_;
};

}  // namespace

MwisResult mwis_via_pmc(const WeightedGraph& wg, const std::vector<VertexSet>& pmcs,
                        const SeparatorSet& seps) {
  PmcDp dp(wg, pmcs, seps);
  return finish(wg, dp.solve_all());
}

MwisResult mwis_classC(const WeightedGraph& wg, int jobs) {
  ClasscOptions opts;
  opts.jobs = jobs;
  SeparatorSet seps = enumerate_all_minimal_separators_classC(wg.graph, opts).separators;
  return mwis_via_pmc(wg, enumerate_pmcs(wg.graph, seps), seps);
}

}  // namespace sepenum
