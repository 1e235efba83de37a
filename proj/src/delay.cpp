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
//
// Copyright 2026 The transdist Authors.

#include "transdist/delay.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>

#include "transdist/transducer.hpp"

namespace transdist {

namespace {

std::int64_t walk_weight(const std::vector<WeightedEdge>& edges,
                         const std::vector<std::size_t>& walk) {
  std::int64_t w = 0;
  for (std::size_t e : walk) w += edges[e].weight;
  return w;
}

}  // namespace

GapProfile gap_profile(std::size_t n, const std::vector<WeightedEdge>& edges,
                       const std::vector<StateId>& initial) {
  GapProfile g;
  g.reachable.assign(n, false);
  g.min_gap.assign(n, 0);
  g.max_gap.assign(n, 0);
  std::vector<std::vector<std::size_t>> out(n), in(n);
  std::vector<std::vector<StateId>> succ(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    out[edges[e].src].push_back(e);
    in[edges[e].dst].push_back(e);
    succ[edges[e].src].push_back(edges[e].dst);
  }
  {
    std::deque<StateId> queue(initial.begin(), initial.end());
    for (StateId s : initial) g.reachable[s] = true;
    while (!queue.empty()) {
      StateId s = queue.front();
      queue.pop_front();
      for (StateId t : succ[s]) {
        if (!g.reachable[t]) {
          g.reachable[t] = true;
          queue.push_back(t);
        }
      }
    }
  }
  const SccDecomposition scc = scc_decompose(succ);
  // Potentials inside each component; any inconsistency is a cycle of
  // nonzero weight.
  std::vector<std::int64_t> phi(n, 0);
  std::vector<bool> assigned(n, false);
  std::vector<std::size_t> tree_edge(n, 0);
  for (int c = 0; c < scc.num_components(); ++c) {
    const auto& members = scc.members[c];
    if (!g.reachable[members.front()]) continue;
    const StateId root = members.front();
    assigned[root] = true;
    std::deque<StateId> queue{root};
    while (!queue.empty()) {
      StateId s = queue.front();
      queue.pop_front();
      for (std::size_t e : out[s]) {
        const StateId d = edges[e].dst;
        if (scc.component[d] != c) continue;
        const std::int64_t want = phi[s] + edges[e].weight;
        if (!assigned[d]) {
          assigned[d] = true;
          phi[d] = want;
          tree_edge[d] = e;
          queue.push_back(d);
          continue;
        }
        if (phi[d] == want) continue;
        // Closed walks root->s->d->root and root->d->root differ in weight
        // by want - phi[d] != 0, so one of them is nonzero.
        auto tree_path = [&](StateId x) {
          std::vector<std::size_t> p;
          while (x != root) {
            p.push_back(tree_edge[x]);
            x = edges[tree_edge[x]].src;
          }
          std::reverse(p.begin(), p.end());
          return p;
        };
        std::vector<std::size_t> back;
        {
          std::vector<long> via(n, -1);
          std::vector<bool> seen(n, false);
          std::deque<StateId> bq{root};
          seen[root] = true;
          while (!bq.empty()) {
            StateId x = bq.front();
            bq.pop_front();
            for (std::size_t f : in[x]) {
              StateId y = edges[f].src;
              if (scc.component[y] != c || seen[y]) continue;
              seen[y] = true;
              via[y] = static_cast<long>(f);
              bq.push_back(y);
            }
          }
          for (StateId x = d; x != root; x = edges[via[x]].dst) {
            back.push_back(static_cast<std::size_t>(via[x]));
          }
        }
        std::vector<std::size_t> walk1 = tree_path(s);
        walk1.push_back(e);
        walk1.insert(walk1.end(), back.begin(), back.end());
        std::vector<std::size_t> walk2 = tree_path(d);
        walk2.insert(walk2.end(), back.begin(), back.end());
        g.bounded = false;
        g.cycle = walk_weight(edges, walk1) != 0 ? walk1 : walk2;
        return g;
      }
    }
  }
  // Offsets per component along the topological order.
  constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::min();
  std::vector<std::int64_t> cmin(scc.num_components(), kUnset),
      cmax(scc.num_components(), kUnset);
  auto offer = [&](int c, std::int64_t lo, std::int64_t hi) {
    if (cmin[c] == kUnset) {
      cmin[c] = lo;
      cmax[c] = hi;
    } else {
      cmin[c] = std::min(cmin[c], lo);
      cmax[c] = std::max(cmax[c], hi);
    }
  };
  for (StateId s : initial) offer(scc.component[s], -phi[s], -phi[s]);
  for (int c : scc.order) {
    if (cmin[c] == kUnset) continue;
    for (StateId s : scc.members[c]) {
      g.min_gap[s] = cmin[c] + phi[s];
      g.max_gap[s] = cmax[c] + phi[s];
    }
    for (StateId s : scc.members[c]) {
      for (std::size_t e : out[s]) {
        const StateId d = edges[e].dst;
        const int cd = scc.component[d];
        if (cd == c) continue;
        offer(cd, g.min_gap[s] + edges[e].weight - phi[d],
              g.max_gap[s] + edges[e].weight - phi[d]);
      }
    }
  }
  return g;
}

namespace {

std::vector<WeightedEdge> pair_weights(const PairAutomaton& p) {
  std::vector<WeightedEdge> w;
  w.reserve(p.num_edges());
  for (const auto& e : p.edges()) {
    w.push_back({e.src, e.dst,
                 static_cast<std::int64_t>(e.label.left.size()) -
                     static_cast<std::int64_t>(e.label.right.size())});
  }
  return w;
}

}  // namespace

GapProfile gap_profile(const PairAutomaton& p) {
  return gap_profile(p.num_states(), pair_weights(p), p.initial());
}

std::optional<std::vector<std::int64_t>> compute_delays(const PairAutomaton& p) {
  const GapProfile g = gap_profile(p);
  if (!g.bounded) return std::nullopt;
  for (std::size_t s = 0; s < p.num_states(); ++s) {
    if (g.reachable[s] && g.min_gap[s] != g.max_gap[s]) return std::nullopt;
  }
  return g.min_gap;
}

bool bounded_delay(const PairAutomaton& p) { return gap_profile(p).bounded; }

std::optional<std::uint64_t> max_abs_gap(const PairAutomaton& p) {
  const GapProfile g = gap_profile(p);
  if (!g.bounded) return std::nullopt;
  std::uint64_t m = 0;
  for (std::size_t s = 0; s < p.num_states(); ++s) {
    if (!g.reachable[s]) continue;
    m = std::max<std::uint64_t>(m, std::llabs(g.min_gap[s]));
    m = std::max<std::uint64_t>(m, std::llabs(g.max_gap[s]));
  }
  return m;
}

ExtendedNat length_close(const Transducer& t1, const Transducer& t2) {
  if (!same_domain(t1, t2)) return ExtendedNat::infinity();
  // Final outputs are folded into edges, so the final gaps already include
  // them.
  const PairAutomaton p = pair_automaton(joint_product(t1, t2));
  const GapProfile g = gap_profile(p);
  if (!g.bounded) return ExtendedNat::infinity();
  std::uint64_t best = 0;
  for (StateId s : p.finals()) {
    if (!g.reachable[s]) continue;
    best = std::max<std::uint64_t>(best, std::llabs(g.min_gap[s]));
    best = std::max<std::uint64_t>(best, std::llabs(g.max_gap[s]));
  }
  return best;
}

}  // namespace transdist
