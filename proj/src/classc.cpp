#include "sepenum/classc.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "sepenum/hole_analysis.hpp"

namespace sepenum {

const char* to_string(Variant v) { return v == Variant::LL ? "LL" : "LR"; }

ClasscStats& ClasscStats::operator+=(const ClasscStats& o) {
  pairs += o.pairs;
  tuples += o.tuples;
  discard_hole += o.discard_hole;
  discard_cliques += o.discard_cliques;
  leaves += o.leaves;
  rejected += o.rejected;
  emitted += o.emitted;
  return *this;
}

VertexSet step3_heavy_closure(const Graph& g, Vertex c1, Vertex c2) {
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == c1 || v == c2) continue;
    VertexSet alive = g.closed_neighbors(v).complement();
    alive.insert(c1);
    alive.insert(c2);
    if (!component_of(g, alive, c1).contains(c2)) out.insert(v);
  }
  return out;
}

std::optional<CleanHole> step4_clean_hole(const Graph& g, const VertexSet& C, Vertex c1,
                                          Vertex c2, Vertex l1, Vertex r1, Vertex l2, Vertex r2) {
  VertexSet forbidden = C | g.neighbors(c1) | g.neighbors(c2);
  for (Vertex t : {l1, r1, l2, r2}) forbidden.erase(t);
  auto hl = shortest_path(g, l1, l2, forbidden);
  if (!hl) return std::nullopt;
  auto hr = shortest_path(g, r1, r2, forbidden);
  if (!hr) return std::nullopt;
  std::vector<Vertex> cycle{c1};
  cycle.insert(cycle.end(), hr->begin(), hr->end());
  cycle.push_back(c2);
  cycle.insert(cycle.end(), hl->rbegin(), hl->rend());
  if (!is_hole(g, cycle)) return std::nullopt;
  return CleanHole{Hole{std::move(cycle)}, std::move(*hl), std::move(*hr)};
}

namespace {

class Engine {
 public:
  Engine(const Graph& g, const ClasscOptions& opts, std::mutex& obs_mutex)
      : g_(g), opts_(opts), obs_mutex_(obs_mutex), n_(g.order()) {}

  void run_first(Vertex c1) {
    for (Vertex c2 = 0; c2 < n_; ++c2)
      if (c2 != c1 && !g_.adjacent(c1, c2)) pair(c1, c2);
  }

  std::set<VertexSet> found;
  ClasscStats stats;

 private:
  void pair(Vertex c1, Vertex c2) {
    ++stats.pairs;
    CHoleContext ctx;
    ctx.c1 = c1;
    ctx.c2 = c2;
    ctx.heavy = step3_heavy_closure(g_, c1, c2);
    VertexSet c0 = ctx.heavy;
    c0.insert(c1);
    c0.insert(c2);
    // tuples meeting C are discarded by the heavy-closure test, so they are never generated
    std::vector<Vertex> n1 = (g_.neighbors(c1) - c0).to_vector();
    std::vector<Vertex> n2 = (g_.neighbors(c2) - c0).to_vector();
    for (Vertex l1 : n1)
      for (Vertex r1 : n1) {
        if (r1 == l1 || g_.adjacent(l1, r1)) continue;
        for (Vertex l2 : n2) {
          if (l2 == r1 || g_.adjacent(l2, r1)) continue;
          for (Vertex r2 : n2) {
            if (r2 == l2 || r2 == l1 || g_.adjacent(l2, r2) || g_.adjacent(l1, r2)) continue;
            ++stats.tuples;
            ctx.C = c0;
            ctx.l1 = l1;
            ctx.r1 = r1;
            ctx.l2 = l2;
            ctx.r2 = r2;
            tuple(ctx);
          }
        }
      }
  }

  void tuple(CHoleContext& ctx) {
    auto clean = step4_clean_hole(g_, ctx.C, ctx.c1, ctx.c2, ctx.l1, ctx.r1, ctx.l2, ctx.r2);
    if (!clean) {
      ++stats.discard_hole;
      return;
    }
    ctx.hole = std::move(clean->hole);
    ctx.hl = std::move(clean->hl);
    ctx.hr = std::move(clean->hr);
    const Hole& h = ctx.hole;
    const int k = h.length();
    VertexSet on = h.vertex_set(n_);
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    for (int i = 0; i < k; ++i) pos[h.cycle[i]] = i;

    // majors, then clones grouped by centre
    ctx.majors = VertexSet(n_);
    std::vector<Vertex> clone_center(static_cast<std::size_t>(n_), -1);
    for (Vertex v = 0; v < n_; ++v) {
      if (on.contains(v)) continue;
      VertexSet nh = g_.neighbors(v) & on;
      int c = nh.size();
      if (c > 3 || !inside_three_path(h, nh)) {
        ctx.majors.insert(v);
      } else if (c == 3) {
        nh.for_each([&](Vertex y) {
          int i = pos[y];
          if (nh.contains(h.at(i - 1)) && nh.contains(h.at(i + 1))) clone_center[v] = y;
        });
      }
    }
    ctx.C |= ctx.majors;
    auto clone_set = [&](Vertex y) {
      VertexSet s(n_);
      s.insert(y);
      for (Vertex v = 0; v < n_; ++v)
        if (clone_center[v] == y) s.insert(v);
      return s;
    };
    ctx.L1 = clone_set(ctx.l1);
    ctx.R1 = clone_set(ctx.r1);
    ctx.L2 = clone_set(ctx.l2);
    ctx.R2 = clone_set(ctx.r2);

    // C_i: non-major vertices seeing both L_i and R_i
    auto middle = [&](const VertexSet& a, const VertexSet& b) {
      VertexSet s(n_);
      for (Vertex v = 0; v < n_; ++v)
        if (!ctx.majors.contains(v) && g_.neighbors(v).intersects(a) &&
            g_.neighbors(v).intersects(b))
          s.insert(v);
      return s;
    };
    ctx.C1 = middle(ctx.L1, ctx.R1);
    ctx.C2 = middle(ctx.L2, ctx.R2);

    if (!cliques_disjoint(ctx)) {
      ++stats.discard_cliques;
      return;
    }
    if (opts_.observer) {
      std::lock_guard<std::mutex> lock(obs_mutex_);
      opts_.observer->on_context(ctx);
    }
    if (opts_.run_ll) leaves(ctx, Variant::LL);
    if (opts_.run_lr) leaves(ctx, Variant::LR);
  }

  bool cliques_disjoint(const CHoleContext& ctx) const {
    const VertexSet* sets[6] = {&ctx.L1, &ctx.C1, &ctx.R1, &ctx.L2, &ctx.C2, &ctx.R2};
    for (const VertexSet* s : sets)
      if (!is_clique(g_, *s)) return false;
    const bool l_equal = ctx.L1 == ctx.L2;
    const bool r_equal = ctx.R1 == ctx.R2;
    if (l_equal && r_equal) return false;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        if (i == 0 && j == 3 && l_equal) continue;
        if (i == 2 && j == 5 && r_equal) continue;
        if (sets[i]->intersects(*sets[j])) return false;
      }
    return true;
  }

  // Viaduct paths: adds every c in `from` (outside C) that starts a path to
  // `to` minus C whose interior avoids C, the hole and the clone sets and
  // has no neighbour on the hole other than `anchor`.
  VertexSet via_paths(const CHoleContext& ctx, const VertexSet& C, const VertexSet& from,
                      const VertexSet& to, const VertexSet& li, const VertexSet& ri,
                      Vertex anchor, std::vector<Path>* paths) const {
    VertexSet added(n_);
    VertexSet targets = to - C;
    if (targets.empty()) return added;
    VertexSet on = ctx.hole.vertex_set(n_);
    VertexSet hole_rest = on;
    hole_rest.erase(anchor);
    // the path may end on the hole at r_i (or l_i), so touching it is fine;
    // a path that touches it elsewhere can be cut short there
    VertexSet end_on_hole = targets & on;
    hole_rest -= end_on_hole;
    VertexSet interior = (C | on | li | ri).complement();
    interior.for_each([&](Vertex w) {
      if (g_.neighbors(w).intersects(hole_rest)) interior.erase(w);
    });
    // interior vertices joined to a target through interior vertices
    VertexSet reach = g_.neighborhood(targets) & interior;
    VertexSet frontier = reach;
    while (frontier.any()) {
      VertexSet next = g_.neighborhood(frontier) & interior;
      next -= reach;
      reach |= next;
      frontier = std::move(next);
    }
    VertexSet goal = targets | reach;
    (from - C).for_each([&](Vertex c) {
      if (!g_.neighbors(c).intersects(goal)) return;
      added.insert(c);
      if (!paths) return;
      // a witness path for instrumented runs
      VertexSet alive = interior | targets;
      alive.insert(c);
      auto dist = bfs_distances(g_, c, alive);
      Vertex best = -1;
      targets.for_each([&](Vertex t) {
        if (dist[t] >= 0 && (best < 0 || dist[t] < dist[best])) best = t;
      });
      VertexSet forbidden = interior.complement();
      auto q = shortest_path(g_, c, best, forbidden);
      if (q && end_on_hole.any()) {
        Vertex t0 = end_on_hole.first();
        for (std::size_t j = 1; j + 1 < q->size(); ++j)
          if (g_.adjacent((*q)[j], t0)) {
            q->resize(j + 1);
            q->push_back(t0);
            break;
          }
      }
      paths->push_back(q ? *q : Path{});
    });
    return added;
  }

  void leaves(const CHoleContext& ctx, Variant variant) {
    const bool lr = variant == Variant::LR;
    const VertexSet& side2 = lr ? ctx.R2 : ctx.L2;
    ctx.C1.for_each([&](Vertex c1p) {
      VertexSet need1 = g_.neighbors(c1p) & ctx.L1;
      ctx.C2.for_each([&](Vertex c2p) {
        ++stats.leaves;
        VertexSet C = ctx.C;
        ctx.C1.for_each([&](Vertex x) {
          if (need1.is_subset_of(g_.neighbors(x))) C.insert(x);
        });
        VertexSet need2 = g_.neighbors(c2p) & side2;
        ctx.C2.for_each([&](Vertex x) {
          if (need2.is_subset_of(g_.neighbors(x))) C.insert(x);
        });
        LeafEvent ev{variant, c1p, c2p, C, {}, {}, VertexSet(n_), false};
        const bool observe = opts_.observer != nullptr;
        C |= via_paths(ctx, C, ctx.L1, ctx.R1, ctx.L1, ctx.R1, ctx.c1,
                       observe ? &ev.paths_first : nullptr);
        if (lr)
          C |= via_paths(ctx, C, ctx.R2, ctx.L2, ctx.L2, ctx.R2, ctx.c2,
                         observe ? &ev.paths_second : nullptr);
        else
          C |= via_paths(ctx, C, ctx.L2, ctx.R2, ctx.L2, ctx.R2, ctx.c2,
                         observe ? &ev.paths_second : nullptr);
        bool kept = proper(C);
        if (kept) {
          ++stats.emitted;
          found.insert(C);
        } else {
          ++stats.rejected;
        }
        if (observe) {
          ev.final_set = C;
          ev.kept = kept;
          std::lock_guard<std::mutex> lock(obs_mutex_);
          opts_.observer->on_leaf(ctx, ev);
        }
      });
    });
  }

  bool proper(const VertexSet& C) {
    auto it = proper_cache_.find(C);
    if (it != proper_cache_.end()) return it->second;
    bool r = is_proper_separator(g_, C);
    proper_cache_.emplace(C, r);
    return r;
  }

  const Graph& g_;
  const ClasscOptions& opts_;
  std::mutex& obs_mutex_;
  const int n_;
  std::unordered_map<VertexSet, bool, VertexSetHash> proper_cache_;
};

}  // namespace

ClasscResult run_classc(const Graph& g, const ClasscOptions& opts) {
  const int jobs = std::max(1, opts.jobs);
  std::mutex obs_mutex;
  std::vector<Engine> engines;
  engines.reserve(static_cast<std::size_t>(jobs));
  for (int i = 0; i < jobs; ++i) engines.emplace_back(g, opts, obs_mutex);
  std::atomic<int> next{0};
  auto work = [&](int id) {
    for (int c1 = next++; c1 < g.order(); c1 = next++) engines[static_cast<std::size_t>(id)].run_first(c1);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(work, i);
    for (auto& t : pool) t.join();
  }
  ClasscResult out;
  std::set<VertexSet> all;
  for (auto& e : engines) {
    all.merge(e.found);
    out.stats += e.stats;
  }
  out.separators = records_for(g, std::vector<VertexSet>(all.begin(), all.end()));
  if (out.separators.size() != all.size())
    throw std::logic_error("classc emitted a set that is not a minimal separator");
  return out;
}

SeparatorSet run_A(const Graph& g, Variant variant, int jobs) {
  ClasscOptions opts;
  opts.jobs = jobs;
  opts.run_ll = variant == Variant::LL;
  opts.run_lr = variant == Variant::LR;
  return run_classc(g, opts).separators;
}

ClasscResult enumerate_all_minimal_separators_classC(const Graph& g, const ClasscOptions& opts) {
  ClasscResult out = run_classc(g, opts);
  for (auto& r : clique_minimal_separators(g)) out.separators.insert(r);
  const long double bound = std::pow(static_cast<long double>(g.order()), 8.0L);
  if (static_cast<long double>(out.separators.size()) > bound)
    throw std::logic_error("classc output exceeds n^8 separators");
  return out;
}

}  // namespace sepenum
