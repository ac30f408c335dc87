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

#include "psteiner/planarity.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

// Left-right planarity criterion (Brandes' formulation of de Fraysseix /
// Rosenstiehl). Decision-only port: the embedding phase and the side/sign
// bookkeeping that exists purely to reconstruct an embedding are omitted.
// ref[] chains are kept -- back-edge trimming follows them and the trimmed
// stack feeds later conflict checks, so they do affect the verdict.

namespace psteiner {

namespace {

constexpr int kNone = -1;

// Interval of back edges on one side of a conflict pair, threaded via ref[].
struct Interval {
  int low = kNone;
  int high = kNone;
  bool empty() const { return low == kNone && high == kNone; }
};

struct ConflictPair {
  Interval left;
  Interval right;
};

class LRPlanarity {
 public:
  LRPlanarity(int n, const std::vector<std::pair<int, int>>& simple_edges)
      : n_(n),
        adj_(static_cast<std::size_t>(n)),
        adj_eid_(static_cast<std::size_t>(n)),
        height_(static_cast<std::size_t>(n), kNone),
        parent_edge_(static_cast<std::size_t>(n), kNone),
        pending_(static_cast<std::size_t>(n), kNone),
        ind_(static_cast<std::size_t>(n), 0) {
    out_.resize(static_cast<std::size_t>(n));
    // Undirected adjacency with the simple-edge index alongside, so the
    // orientation pass can mark an edge handled from either endpoint.
    oriented_.assign(simple_edges.size(), false);
    for (std::size_t i = 0; i < simple_edges.size(); ++i) {
      auto [u, w] = simple_edges[i];
      adj_[static_cast<std::size_t>(u)].push_back(w);
      adj_eid_[static_cast<std::size_t>(u)].push_back(static_cast<int>(i));
      adj_[static_cast<std::size_t>(w)].push_back(u);
      adj_eid_[static_cast<std::size_t>(w)].push_back(static_cast<int>(i));
    }
    int m = static_cast<int>(simple_edges.size());
    tail_.reserve(static_cast<std::size_t>(m));
    head_.reserve(static_cast<std::size_t>(m));
    lowpt_.reserve(static_cast<std::size_t>(m));
    lowpt2_.reserve(static_cast<std::size_t>(m));
    nesting_.reserve(static_cast<std::size_t>(m));
  }

  bool run() {
    for (int v = 0; v < n_; ++v) {
      if (height_[static_cast<std::size_t>(v)] == kNone) {
        height_[static_cast<std::size_t>(v)] = 0;
        roots_.push_back(v);
        dfs_orientation(v);
      }
    }
    // Sort each vertex's outgoing DFS edges by nesting depth; stable so
    // creation order breaks ties, keeping the run deterministic.
    ordered_.assign(static_cast<std::size_t>(n_), {});
    for (int v = 0; v < n_; ++v) {
      auto& lst = ordered_[static_cast<std::size_t>(v)];
      lst = out_[static_cast<std::size_t>(v)];
      std::stable_sort(lst.begin(), lst.end(), [this](int a, int b) {
        return nesting_[static_cast<std::size_t>(a)] <
               nesting_[static_cast<std::size_t>(b)];
      });
    }
    int m = static_cast<int>(tail_.size());
    ref_.assign(static_cast<std::size_t>(m), kNone);
    lowpt_edge_.assign(static_cast<std::size_t>(m), kNone);
    stack_bottom_.assign(static_cast<std::size_t>(m), 0);
    tind_.assign(static_cast<std::size_t>(n_), 0);
    tpending_.assign(static_cast<std::size_t>(n_), kNone);
    for (int r : roots_) {
      if (!dfs_testing(r)) return false;
    }
    return true;
  }

 private:
  // --- phase 1: DFS orientation, lowpoints, nesting depth ---

  int new_edge(int v, int w) {
    tail_.push_back(v);
    head_.push_back(w);
    lowpt_.push_back(height_[static_cast<std::size_t>(v)]);
    lowpt2_.push_back(height_[static_cast<std::size_t>(v)]);
    nesting_.push_back(0);
    int eid = static_cast<int>(tail_.size()) - 1;
    out_[static_cast<std::size_t>(v)].push_back(eid);
    return eid;
  }

  // Runs once an edge's final lowpoint is known: immediately for back edges,
  // after the subtree returns for tree edges.
  void finish_edge(int v, int parent, int vw) {
    auto e = static_cast<std::size_t>(vw);
    nesting_[e] = 2 * lowpt_[e];
    if (lowpt2_[e] < height_[static_cast<std::size_t>(v)]) {
      ++nesting_[e];  // chordal edges nest deeper
    }
    if (parent == kNone) return;
    auto pe = static_cast<std::size_t>(parent);
    if (lowpt_[e] < lowpt_[pe]) {
      lowpt2_[pe] = std::min(lowpt_[pe], lowpt2_[e]);
      lowpt_[pe] = lowpt_[e];
    } else if (lowpt_[e] > lowpt_[pe]) {
      lowpt2_[pe] = std::min(lowpt2_[pe], lowpt_[e]);
    } else {
      lowpt2_[pe] = std::min(lowpt2_[pe], lowpt2_[e]);
    }
  }

  void dfs_orientation(int root) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      int parent = parent_edge_[static_cast<std::size_t>(v)];
      if (pending_[static_cast<std::size_t>(v)] != kNone) {
        // Child subtree finished; its tree edge now carries final lowpoints.
        int vw = pending_[static_cast<std::size_t>(v)];
        pending_[static_cast<std::size_t>(v)] = kNone;
        finish_edge(v, parent, vw);
        ++ind_[static_cast<std::size_t>(v)];
      }
      bool descended = false;
      while (ind_[static_cast<std::size_t>(v)] <
             static_cast<int>(adj_[static_cast<std::size_t>(v)].size())) {
        int i = ind_[static_cast<std::size_t>(v)];
        int w = adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
        int ue = adj_eid_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
        if (oriented_[static_cast<std::size_t>(ue)]) {
          ++ind_[static_cast<std::size_t>(v)];
          continue;
        }
        oriented_[static_cast<std::size_t>(ue)] = true;
        int vw = new_edge(v, w);
        if (height_[static_cast<std::size_t>(w)] == kNone) {  // tree edge
          parent_edge_[static_cast<std::size_t>(w)] = vw;
          height_[static_cast<std::size_t>(w)] =
              height_[static_cast<std::size_t>(v)] + 1;
          pending_[static_cast<std::size_t>(v)] = vw;
          stack.push_back(v);
          stack.push_back(w);
          descended = true;
          break;
        }
        // back edge: its only return point is its head
        lowpt_[static_cast<std::size_t>(vw)] =
            height_[static_cast<std::size_t>(w)];
        finish_edge(v, parent, vw);
        ++ind_[static_cast<std::size_t>(v)];
      }
      (void)descended;
    }
  }

  // --- phase 2: conflict-pair test ---

  int lowest(const ConflictPair& p) const {
    if (p.left.empty()) return lowpt_[static_cast<std::size_t>(p.right.low)];
    if (p.right.empty()) return lowpt_[static_cast<std::size_t>(p.left.low)];
    return std::min(lowpt_[static_cast<std::size_t>(p.left.low)],
                    lowpt_[static_cast<std::size_t>(p.right.low)]);
  }

  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[static_cast<std::size_t>(i.high)] >
                             lowpt_[static_cast<std::size_t>(b)];
  }

  void set_ref(int e, int value) {
    if (e != kNone) ref_[static_cast<std::size_t>(e)] = value;
  }

  bool add_constraints(int ei, int e) {
    ConflictPair p;
    // Merge the return edges of ei into p.right.
    while (true) {
      ConflictPair q = S_.back();
      S_.pop_back();
      if (!q.left.empty()) std::swap(q.left, q.right);
      if (!q.left.empty()) return false;  // both sides occupied
      if (lowpt_[static_cast<std::size_t>(q.right.low)] >
          lowpt_[static_cast<std::size_t>(e)]) {
        // merge
        if (p.right.empty()) {
          p.right = q.right;
        } else {
          set_ref(p.right.low, q.right.high);
        }
        p.right.low = q.right.low;
      } else {
        // align with the lowest return edge of the parent
        set_ref(q.right.low, lowpt_edge_[static_cast<std::size_t>(e)]);
      }
      if (S_.size() == stack_bottom_[static_cast<std::size_t>(ei)]) break;
    }
    // Merge conflicting return edges of the earlier siblings into p.left.
    while (!S_.empty() &&
           (conflicting(S_.back().left, ei) || conflicting(S_.back().right, ei))) {
      ConflictPair q = S_.back();
      S_.pop_back();
      if (conflicting(q.right, ei)) std::swap(q.left, q.right);
      if (conflicting(q.right, ei)) return false;  // both sides conflict
      set_ref(p.right.low, q.right.high);
      if (q.right.low != kNone) p.right.low = q.right.low;
      if (p.left.empty()) {
        p.left = q.left;
      } else {
        set_ref(p.left.low, q.left.high);
      }
      p.left.low = q.left.low;
    }
    if (!(p.left.empty() && p.right.empty())) S_.push_back(p);
    return true;
  }

  void remove_back_edges(int e) {
    int u = tail_[static_cast<std::size_t>(e)];
    // Pairs whose lowest return point is u return only to the parent: drop.
    while (!S_.empty() && lowest(S_.back()) == height_[static_cast<std::size_t>(u)]) {
      S_.pop_back();
    }
    if (!S_.empty()) {
      ConflictPair p = S_.back();
      S_.pop_back();
      // trim left interval
      while (p.left.high != kNone &&
             head_[static_cast<std::size_t>(p.left.high)] == u) {
        p.left.high = ref_[static_cast<std::size_t>(p.left.high)];
      }
      if (p.left.high == kNone && p.left.low != kNone) {
        set_ref(p.left.low, p.right.low);
        p.left.low = kNone;
      }
      // trim right interval
      while (p.right.high != kNone &&
             head_[static_cast<std::size_t>(p.right.high)] == u) {
        p.right.high = ref_[static_cast<std::size_t>(p.right.high)];
      }
      if (p.right.high == kNone && p.right.low != kNone) {
        set_ref(p.right.low, p.left.low);
        p.right.low = kNone;
      }
      S_.push_back(p);
    }
  }

  // Post-processing of an out-edge ei of v once its return edges are on the
  // stack (immediately for a back edge, after the subtree for a tree edge).
  bool integrate(int v, int e, int ei) {
    if (lowpt_[static_cast<std::size_t>(ei)] <
        height_[static_cast<std::size_t>(v)]) {  // ei has a return edge
      if (ei == ordered_[static_cast<std::size_t>(v)][0]) {
        // Lowest-nesting child: its lowest return edge becomes the parent's.
        if (e != kNone) {
          lowpt_edge_[static_cast<std::size_t>(e)] =
              lowpt_edge_[static_cast<std::size_t>(ei)];
        }
      } else if (!add_constraints(ei, e)) {
        return false;
      }
    }
    return true;
  }

  bool dfs_testing(int root) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      int e = parent_edge_[static_cast<std::size_t>(v)];
      bool skip_final = false;
      if (tpending_[static_cast<std::size_t>(v)] != kNone) {
        int ei = tpending_[static_cast<std::size_t>(v)];
        tpending_[static_cast<std::size_t>(v)] = kNone;
        if (!integrate(v, e, ei)) return false;
        ++tind_[static_cast<std::size_t>(v)];
      }
      while (tind_[static_cast<std::size_t>(v)] <
             static_cast<int>(ordered_[static_cast<std::size_t>(v)].size())) {
        int ei = ordered_[static_cast<std::size_t>(v)]
                         [static_cast<std::size_t>(tind_[static_cast<std::size_t>(v)])];
        stack_bottom_[static_cast<std::size_t>(ei)] = S_.size();
        int w = head_[static_cast<std::size_t>(ei)];
        if (ei == parent_edge_[static_cast<std::size_t>(w)]) {  // tree edge
          stack.push_back(v);
          stack.push_back(w);
          tpending_[static_cast<std::size_t>(v)] = ei;
          skip_final = true;
          break;
        }
        // back edge: it is its own return edge
        lowpt_edge_[static_cast<std::size_t>(ei)] = ei;
        S_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
        if (!integrate(v, e, ei)) return false;
        ++tind_[static_cast<std::size_t>(v)];
      }
      if (!skip_final && e != kNone) {
        remove_back_edges(e);
      }
    }
    return true;
  }

  int n_;
  std::vector<std::vector<int>> adj_;      // neighbor vertices
  std::vector<std::vector<int>> adj_eid_;  // parallel: simple-edge index
  std::vector<bool> oriented_;             // per simple edge
  std::vector<int> height_;
  std::vector<int> parent_edge_;
  std::vector<int> pending_;  // tree edge awaiting post-processing (phase 1)
  std::vector<int> ind_;      // adjacency cursor (phase 1)
  std::vector<int> roots_;

  // per directed DFS edge
  std::vector<int> tail_, head_, lowpt_, lowpt2_, nesting_;
  std::vector<std::vector<int>> out_;      // DFS out-edges per vertex
  std::vector<std::vector<int>> ordered_;  // same, sorted by nesting depth

  std::vector<int> ref_;
  std::vector<int> lowpt_edge_;
  std::vector<std::size_t> stack_bottom_;
  std::vector<int> tind_;      // adjacency cursor (phase 2)
  std::vector<int> tpending_;  // tree edge awaiting post-processing (phase 2)
  std::vector<ConflictPair> S_;
};

}  // namespace

bool check_planarity(const MixedGraph& graph) {
  int n = graph.num_vertices();
  if (n <= 4) return true;  // every simple graph on <= 4 vertices embeds

  std::set<std::pair<int, int>> simple;
  auto add = [&simple](VertexId a, VertexId b) {
    if (a == b) return;  // self-loops never obstruct an embedding
    simple.emplace(std::min(a, b), std::max(a, b));
  };
  for (const Arc& a : graph.arcs()) add(a.tail, a.head);
  for (const UndirectedEdge& e : graph.edges()) add(e.u, e.w);

  if (simple.size() > static_cast<std::size_t>(3 * n - 6)) {
    return false;  // violates the Euler bound, no DFS needed
  }

  std::vector<std::pair<int, int>> edges(simple.begin(), simple.end());
  LRPlanarity state(n, edges);
  return state.run();
}

}  // namespace psteiner
