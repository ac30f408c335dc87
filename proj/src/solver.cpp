// Copyright 2026 The psteiner Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "psteiner/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "psteiner/reachability.hpp"

namespace psteiner {

namespace {

// Incremental relaxed-reachability engine. For every pair p it caches the
// forward set S_p (reached from the source) and backward set T_p (reaches the
// target) under the current partial orientation.
//
// Orienting an edge removes exactly one traversal (a, b). Pair p can lose
// connectivity only if that traversal lay on some live source-target walk,
// i.e. a in S_p and b in T_p -- so pairs failing that test need no BFS. The
// cached sets are allowed to go stale as supersets of the true sets (a
// removal that passes the filter for p but is committed without recomputing p
// leaves S_p too big); supersets only make the filter fire spuriously, never
// miss, so the feasibility verdicts stay exact.
class ReachEngine {
 public:
  explicit ReachEngine(const Instance& instance)
      : inst_(instance),
        n_(instance.graph().num_vertices()),
        po_(instance.graph().num_edges()) {
    const MixedGraph& g = inst_.graph();
    // CSR adjacency, arcs both ways plus undirected incidences.
    std::vector<int> out_cnt(static_cast<std::size_t>(n_), 0);
    std::vector<int> in_cnt(static_cast<std::size_t>(n_), 0);
    std::vector<int> und_cnt(static_cast<std::size_t>(n_), 0);
    for (const Arc& a : g.arcs()) {
      ++out_cnt[static_cast<std::size_t>(a.tail)];
      ++in_cnt[static_cast<std::size_t>(a.head)];
    }
    for (const UndirectedEdge& e : g.edges()) {
      ++und_cnt[static_cast<std::size_t>(e.u)];
      ++und_cnt[static_cast<std::size_t>(e.w)];
    }
    auto prefix = [](const std::vector<int>& cnt) {
      std::vector<int> ptr(cnt.size() + 1, 0);
      for (std::size_t i = 0; i < cnt.size(); ++i) ptr[i + 1] = ptr[i] + cnt[i];
      return ptr;
    };
    arc_out_ptr_ = prefix(out_cnt);
    arc_in_ptr_ = prefix(in_cnt);
    und_ptr_ = prefix(und_cnt);
    arc_out_.resize(static_cast<std::size_t>(g.num_arcs()));
    arc_in_.resize(static_cast<std::size_t>(g.num_arcs()));
    und_other_.resize(und_ptr_.back());
    und_eid_.resize(und_ptr_.back());
    und_from_u_.resize(und_ptr_.back());
    std::vector<int> pos_out(arc_out_ptr_.begin(), arc_out_ptr_.end() - 1);
    std::vector<int> pos_in(arc_in_ptr_.begin(), arc_in_ptr_.end() - 1);
    std::vector<int> pos_und(und_ptr_.begin(), und_ptr_.end() - 1);
    for (const Arc& a : g.arcs()) {
      arc_out_[static_cast<std::size_t>(pos_out[static_cast<std::size_t>(a.tail)]++)] = a.head;
      arc_in_[static_cast<std::size_t>(pos_in[static_cast<std::size_t>(a.head)]++)] = a.tail;
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const UndirectedEdge& ue = g.edge(e);
      int pu = pos_und[static_cast<std::size_t>(ue.u)]++;
      und_other_[static_cast<std::size_t>(pu)] = ue.w;
      und_eid_[static_cast<std::size_t>(pu)] = e;
      und_from_u_[static_cast<std::size_t>(pu)] = 1;
      int pw = pos_und[static_cast<std::size_t>(ue.w)]++;
      und_other_[static_cast<std::size_t>(pw)] = ue.u;
      und_eid_[static_cast<std::size_t>(pw)] = e;
      und_from_u_[static_cast<std::size_t>(pw)] = 0;
    }

    auto np = inst_.pairs().size();
    fwd_.assign(np, std::vector<char>(static_cast<std::size_t>(n_), 0));
    bwd_.assign(np, std::vector<char>(static_cast<std::size_t>(n_), 0));
    feasible_.assign(np, 1);
    stamp_.assign(static_cast<std::size_t>(n_), 0);
    queue_.reserve(static_cast<std::size_t>(n_));
  }

  void reset(const PartialOrientation& partial) {
    if (partial.size() != po_.size()) {
      throw std::invalid_argument("orientation length mismatch");
    }
    po_ = partial;
    infeasible_ = 0;
    for (std::size_t p = 0; p < fwd_.size(); ++p) recompute_pair(p);
  }

  const PartialOrientation& partial() const { return po_; }
  bool all_feasible() const { return infeasible_ == 0; }

  // Would committing e := s leave every pair relaxed-feasible? Pure query.
  bool feasible_after(EdgeId e, EdgeState s) {
    if (infeasible_ > 0) return false;  // already dead, removals cannot help
    auto [a, b] = removed_traversal(e, s);
    for (std::size_t p = 0; p < fwd_.size(); ++p) {
      if (!fwd_[p][static_cast<std::size_t>(a)] ||
          !bwd_[p][static_cast<std::size_t>(b)]) {
        continue;  // traversal not on any live walk of p
      }
      const TerminalPair& tp = inst_.pairs()[p];
      if (!scratch_reaches(tp.source, tp.target, e, s)) return false;
    }
    return true;
  }

  void commit(EdgeId e, EdgeState s) {
    auto [a, b] = removed_traversal(e, s);
    po_.set(e, s);
    for (std::size_t p = 0; p < fwd_.size(); ++p) {
      if (fwd_[p][static_cast<std::size_t>(a)] &&
          bwd_[p][static_cast<std::size_t>(b)]) {
        recompute_pair(p);
      }
    }
  }

  struct Snapshot {
    PartialOrientation po{0};
    std::vector<std::vector<char>> fwd, bwd;
    std::vector<char> feasible;
    int infeasible = 0;
  };

  Snapshot save() const { return {po_, fwd_, bwd_, feasible_, infeasible_}; }

  void restore(Snapshot&& snap) {
    po_ = std::move(snap.po);
    fwd_ = std::move(snap.fwd);
    bwd_ = std::move(snap.bwd);
    feasible_ = std::move(snap.feasible);
    infeasible_ = snap.infeasible;
  }

 private:
  // The traversal that committing e := s removes from the relaxed graph.
  std::pair<VertexId, VertexId> removed_traversal(EdgeId e, EdgeState s) const {
    const UndirectedEdge& ue = inst_.graph().edge(e);
    return s == EdgeState::Forward ? std::pair{ue.w, ue.u}
                                   : std::pair{ue.u, ue.w};
  }

  // May vertex `at` leave along incidence slot i (forward sense), given the
  // state of the edge in that slot?
  static bool edge_open(EdgeState st, bool from_u) {
    return st == EdgeState::Unset ||
           (st == EdgeState::Forward ? from_u : !from_u);
  }

  template <bool Forward>
  void bfs(VertexId start, std::vector<char>* into, EdgeId override_e,
           EdgeState override_s, VertexId* stop_at_hit) {
    ++epoch_;
    queue_.clear();
    queue_.push_back(start);
    stamp_[static_cast<std::size_t>(start)] = epoch_;
    if (into) {
      std::fill(into->begin(), into->end(), 0);
      (*into)[static_cast<std::size_t>(start)] = 1;
    }
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      VertexId v = queue_[qi];
      if (stop_at_hit && v == *stop_at_hit) return;
      auto vis = [&](VertexId nxt) {
        if (stamp_[static_cast<std::size_t>(nxt)] != epoch_) {
          stamp_[static_cast<std::size_t>(nxt)] = epoch_;
          queue_.push_back(nxt);
          if (into) (*into)[static_cast<std::size_t>(nxt)] = 1;
        }
      };
      const auto& ptr = Forward ? arc_out_ptr_ : arc_in_ptr_;
      const auto& lst = Forward ? arc_out_ : arc_in_;
      for (int i = ptr[static_cast<std::size_t>(v)];
           i < ptr[static_cast<std::size_t>(v) + 1]; ++i) {
        vis(lst[static_cast<std::size_t>(i)]);
      }
      for (int i = und_ptr_[static_cast<std::size_t>(v)];
           i < und_ptr_[static_cast<std::size_t>(v) + 1]; ++i) {
        EdgeId eid = und_eid_[static_cast<std::size_t>(i)];
        EdgeState st = eid == override_e ? override_s : po_.state(eid);
        bool from_u = und_from_u_[static_cast<std::size_t>(i)] != 0;
        // Backward search walks the reversed graph: flip the sense.
        if (edge_open(st, Forward ? from_u : !from_u)) {
          vis(und_other_[static_cast<std::size_t>(i)]);
        }
      }
    }
  }

  bool scratch_reaches(VertexId s, VertexId t, EdgeId e, EdgeState st) {
    bfs<true>(s, nullptr, e, st, &t);
    return stamp_[static_cast<std::size_t>(t)] == epoch_;
  }

  void recompute_pair(std::size_t p) {
    const TerminalPair& tp = inst_.pairs()[p];
    bfs<true>(tp.source, &fwd_[p], -1, EdgeState::Unset, nullptr);
    bfs<false>(tp.target, &bwd_[p], -1, EdgeState::Unset, nullptr);
    char now = fwd_[p][static_cast<std::size_t>(tp.target)];
    if (feasible_[p] && !now) ++infeasible_;
    if (!feasible_[p] && now) --infeasible_;
    feasible_[p] = now;
  }

  const Instance& inst_;
  int n_;
  PartialOrientation po_;

  std::vector<int> arc_out_ptr_, arc_in_ptr_, und_ptr_;
  std::vector<VertexId> arc_out_, arc_in_, und_other_;
  std::vector<EdgeId> und_eid_;
  std::vector<char> und_from_u_;

  std::vector<std::vector<char>> fwd_, bwd_;
  std::vector<char> feasible_;
  int infeasible_ = 0;

  int epoch_ = 0;
  std::vector<int> stamp_;
  std::vector<VertexId> queue_;
};

// Runs propagation to fixpoint on the engine's current state. Returns false
// on contradiction. Forced edges are appended to *forced when non-null.
bool propagate_fixpoint(ReachEngine& engine, std::vector<EdgeId>* forced,
                        long long* propagations) {
  if (!engine.all_feasible()) return false;
  int m = engine.partial().size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (EdgeId e = 0; e < m; ++e) {
      if (engine.partial().state(e) != EdgeState::Unset) continue;
      bool fwd_ok = engine.feasible_after(e, EdgeState::Forward);
      bool rev_ok = engine.feasible_after(e, EdgeState::Reverse);
      if (!fwd_ok && !rev_ok) return false;
      if (fwd_ok == rev_ok) continue;  // unconstrained either way
      EdgeState pick = fwd_ok ? EdgeState::Forward : EdgeState::Reverse;
      engine.commit(e, pick);
      if (forced) forced->push_back(e);
      if (propagations) ++*propagations;
      changed = true;
    }
  }
  return true;
}

struct Searcher {
  ReachEngine& engine;
  const SolveOptions& options;
  SolveStats stats;

  bool dfs(int depth) {
    ++stats.nodes;
    stats.peak_depth = std::max(stats.peak_depth, depth);
    if (options.use_propagation) {
      if (!propagate_fixpoint(engine, nullptr, &stats.propagations)) {
        return false;
      }
    } else if (!engine.all_feasible()) {
      return false;
    }
    EdgeId e = engine.partial().first_unset();
    if (e < 0) return true;  // total and feasible: relaxed == exact here
    for (EdgeState s : {EdgeState::Forward, EdgeState::Reverse}) {
      auto snap = engine.save();
      engine.commit(e, s);
      if (dfs(depth + 1)) return true;
      engine.restore(std::move(snap));
    }
    return false;
  }
};

}  // namespace

bool relaxed_feasible(const Instance& instance,
                      const PartialOrientation& partial) {
  for (const TerminalPair& tp : instance.pairs()) {
    std::vector<VertexId> reach =
        reachable_set(instance.graph(), partial, tp.source, true);
    if (!std::binary_search(reach.begin(), reach.end(), tp.target)) {
      return false;
    }
  }
  return true;
}

PropagateResult propagate(const Instance& instance,
                          const PartialOrientation& partial) {
  ReachEngine engine(instance);
  engine.reset(partial);
  PropagateResult result;
  result.conflict = !propagate_fixpoint(engine, &result.forced, nullptr);
  result.partial = engine.partial();
  return result;
}

SolveResult solve(const Instance& instance, const SolveOptions& options) {
  ReachEngine engine(instance);
  engine.reset(PartialOrientation(instance.graph().num_edges()));
  Searcher searcher{engine, options, {}};
  SolveResult result;
  if (searcher.dfs(0)) {
    result.status = Status::Satisfiable;
    result.witness = engine.partial();
  }
  result.stats = searcher.stats;
  return result;
}

long enumerate_valid(const Instance& instance, long cap) {
  int m = instance.graph().num_edges();
  if (m > kEnumerateEdgeLimit) {
    throw std::invalid_argument("enumerate_valid: " + std::to_string(m) +
                                " edges exceeds the limit of " +
                                std::to_string(kEnumerateEdgeLimit));
  }
  long count = 0;
  PartialOrientation po(m);
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    for (EdgeId e = 0; e < m; ++e) {
      po.set(e, (mask >> e & 1UL) != 0 ? EdgeState::Reverse
                                       : EdgeState::Forward);
    }
    if (verify_orientation(instance, po)) {
      if (++count > cap) {
        throw std::runtime_error("enumerate_valid: count exceeded cap " +
                                 std::to_string(cap));
      }
    }
  }
  return count;
}

}  // namespace psteiner
