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

#ifndef TRANSDIST_NFA_HPP_
#define TRANSDIST_NFA_HPP_

#include <algorithm>
#include <cstddef>
#include <deque>
#include <utility>
#include <vector>

#include "transdist/errors.hpp"

namespace transdist {

using StateId = int;
using EdgeId = int;
inline constexpr StateId kNoState = -1;

// Finite automaton with arbitrary edge labels. States and edges are dense
// indices; several initial states are allowed.
template <class L>
class Nfa {
 public:
  using Label = L;
  struct Edge {
    StateId src;
    L label;
    StateId dst;
  };

  StateId add_state() {
    out_.emplace_back();
    in_.emplace_back();
    final_.push_back(false);
    initial_flag_.push_back(false);
    return static_cast<StateId>(out_.size()) - 1;
  }

  EdgeId add_edge(StateId src, L label, StateId dst) {
    EdgeId e = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{src, std::move(label), dst});
    out_.at(src).push_back(e);
    in_.at(dst).push_back(e);
    return e;
  }

  void add_initial(StateId s) {
    if (!initial_flag_.at(s)) {
      initial_flag_[s] = true;
      initial_.push_back(s);
    }
  }
  void set_final(StateId s, bool f = true) { final_.at(s) = f; }

  std::size_t num_states() const { return out_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  Edge& mutable_edge(EdgeId e) { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<EdgeId>& out(StateId s) const { return out_[s]; }
  const std::vector<EdgeId>& in(StateId s) const { return in_[s]; }
  const std::vector<StateId>& initial() const { return initial_; }
  bool is_initial(StateId s) const { return initial_flag_[s]; }
  bool is_final(StateId s) const { return final_[s]; }
  std::vector<StateId> finals() const {
    std::vector<StateId> f;
    for (StateId s = 0; s < static_cast<StateId>(final_.size()); ++s) {
      if (final_[s]) f.push_back(s);
    }
    return f;
  }
  bool empty() const { return initial_.empty() || finals().empty(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> out_, in_;
  std::vector<StateId> initial_;
  std::vector<bool> initial_flag_, final_;
};

// Correspondence between an automaton and its trimmed copy.
struct TrimMap {
  std::vector<StateId> old_to_new;  // kNoState for removed states
  std::vector<StateId> new_to_old;
  std::vector<EdgeId> edge_new_to_old;
};

template <class L>
std::vector<bool> accessible_states(const Nfa<L>& a) {
  std::vector<bool> seen(a.num_states(), false);
  std::deque<StateId> queue(a.initial().begin(), a.initial().end());
  for (StateId s : a.initial()) seen[s] = true;
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (EdgeId e : a.out(s)) {
      StateId d = a.edge(e).dst;
      if (!seen[d]) {
        seen[d] = true;
        queue.push_back(d);
      }
    }
  }
  return seen;
}

template <class L>
std::vector<bool> coaccessible_states(const Nfa<L>& a) {
  std::vector<bool> seen(a.num_states(), false);
  std::deque<StateId> queue;
  for (StateId s = 0; s < static_cast<StateId>(a.num_states()); ++s) {
    if (a.is_final(s)) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    for (EdgeId e : a.in(s)) {
      StateId p = a.edge(e).src;
      if (!seen[p]) {
        seen[p] = true;
        queue.push_back(p);
      }
    }
  }
  return seen;
}

// Keeps the states that are both accessible and coaccessible. State and edge
// order is preserved.
template <class L>
Nfa<L> trim(const Nfa<L>& a, TrimMap* map = nullptr) {
  const auto acc = accessible_states(a);
  const auto coacc = coaccessible_states(a);
  TrimMap local;
  TrimMap& m = map ? *map : local;
  m.old_to_new.assign(a.num_states(), kNoState);
  m.new_to_old.clear();
  m.edge_new_to_old.clear();
  Nfa<L> r;
  for (StateId s = 0; s < static_cast<StateId>(a.num_states()); ++s) {
    if (acc[s] && coacc[s]) {
      m.old_to_new[s] = r.add_state();
      m.new_to_old.push_back(s);
      r.set_final(m.old_to_new[s], a.is_final(s));
    }
  }
  for (StateId s : a.initial()) {
    if (m.old_to_new[s] != kNoState) r.add_initial(m.old_to_new[s]);
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(a.num_edges()); ++e) {
    const auto& ed = a.edge(e);
    if (m.old_to_new[ed.src] != kNoState && m.old_to_new[ed.dst] != kNoState) {
      r.add_edge(m.old_to_new[ed.src], ed.label, m.old_to_new[ed.dst]);
      m.edge_new_to_old.push_back(e);
    }
  }
  return r;
}

// Strongly connected components. `order` lists component ids so that every
// edge goes from an earlier to a later (or the same) component.
struct SccDecomposition {
  std::vector<int> component;
  std::vector<int> order;
  std::vector<std::vector<StateId>> members;
  // Component contains a cycle (size > 1 or a self-loop).
  std::vector<bool> nontrivial;
  int num_components() const { return static_cast<int>(members.size()); }
};

// Iterative Tarjan over adjacency lists of successor states.
SccDecomposition scc_decompose(const std::vector<std::vector<StateId>>& succ);

template <class L, class Keep>
std::vector<std::vector<StateId>> successor_lists(const Nfa<L>& a, Keep keep) {
  std::vector<std::vector<StateId>> succ(a.num_states());
  for (EdgeId e = 0; e < static_cast<EdgeId>(a.num_edges()); ++e) {
    if (keep(e)) succ[a.edge(e).src].push_back(a.edge(e).dst);
  }
  return succ;
}

template <class L>
SccDecomposition scc_decompose(const Nfa<L>& a) {
  return scc_decompose(successor_lists(a, [](EdgeId) { return true; }));
}

}  // namespace transdist

#endif  // TRANSDIST_NFA_HPP_
