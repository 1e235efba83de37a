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

#include "transdist/automata.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <deque>
#include <utility>

namespace transdist {

SccDecomposition scc_decompose(const std::vector<std::vector<StateId>>& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<int> index(n, -1), low(n, 0), emitted(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> stack;
  std::vector<std::pair<StateId, std::size_t>> calls;
  std::vector<std::vector<StateId>> components;
  int counter = 0;
  for (StateId root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    calls.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!calls.empty()) {
      auto& [v, i] = calls.back();
      if (i < succ[v].size()) {
        StateId w = succ[v][i++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          calls.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      StateId done = v;
      calls.pop_back();
      if (low[done] == index[done]) {
        std::vector<StateId> comp;
        StateId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          emitted[w] = static_cast<int>(components.size());
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
      if (!calls.empty()) {
        StateId parent = calls.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  // Tarjan emits sinks first; renumber so ids follow a topological order.
  const int c = static_cast<int>(components.size());
  SccDecomposition d;
  d.component.assign(n, 0);
  d.members.resize(c);
  d.nontrivial.assign(c, false);
  for (int k = 0; k < c; ++k) {
    d.members[c - 1 - k] = std::move(components[k]);
    d.order.push_back(k);
  }
  for (StateId s = 0; s < n; ++s) d.component[s] = c - 1 - emitted[s];
  for (StateId s = 0; s < n; ++s) {
    for (StateId t : succ[s]) {
      if (d.component[s] == d.component[t]) d.nontrivial[d.component[s]] = true;
    }
  }
  return d;
}

bool accepts(const Automaton& a, std::u32string_view w) {
  std::vector<bool> cur(a.num_states(), false);
  for (StateId s : a.initial()) cur[s] = true;
  for (Letter c : w) {
    std::vector<bool> next(a.num_states(), false);
    for (StateId s = 0; s < static_cast<StateId>(a.num_states()); ++s) {
      if (!cur[s]) continue;
      for (EdgeId e : a.out(s)) {
        if (a.edge(e).label == c) next[a.edge(e).dst] = true;
      }
    }
    cur = std::move(next);
  }
  for (StateId s = 0; s < static_cast<StateId>(a.num_states()); ++s) {
    if (cur[s] && a.is_final(s)) return true;
  }
  return false;
}

bool is_deterministic(const Automaton& a) {
  if (a.initial().size() > 1) return false;
  for (StateId s = 0; s < static_cast<StateId>(a.num_states()); ++s) {
    std::set<Letter> labels;
    for (EdgeId e : a.out(s)) {
      if (!labels.insert(a.edge(e).label).second) return false;
    }
  }
  return true;
}

std::vector<Word> enumerate_language(const Automaton& a, std::size_t max_len) {
  // Breadth-first over (word, state set) keeps shortlex order.
  std::set<Letter> letters;
  for (const auto& e : a.edges()) letters.insert(e.label);
  std::vector<Word> out;
  std::vector<std::pair<Word, std::set<StateId>>> layer;
  layer.emplace_back(Word(), std::set<StateId>(a.initial().begin(),
                                               a.initial().end()));
  for (std::size_t len = 0; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::pair<Word, std::set<StateId>>> next;
    for (auto& [w, states] : layer) {
      for (StateId s : states) {
        if (a.is_final(s)) {
          out.push_back(w);
          break;
        }
      }
      if (len == max_len) continue;
      for (Letter c : letters) {
        std::set<StateId> t;
        for (StateId s : states) {
          for (EdgeId e : a.out(s)) {
            if (a.edge(e).label == c) t.insert(a.edge(e).dst);
          }
        }
        if (!t.empty()) next.emplace_back(w + c, std::move(t));
      }
    }
    layer = std::move(next);
  }
  return out;
}

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rational>;

struct Row {
  Vec v;
  std::size_t pivot;
};

// Reduces v against the echelon rows; returns false when v lies in their span.
bool reduce(Vec& v, const std::vector<Row>& basis) {
  for (const Row& r : basis) {
    if (v[r.pivot] == 0) continue;
    Rational f = v[r.pivot] / r.v[r.pivot];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (r.v[i] != 0) v[i] -= f * r.v[i];
    }
  }
  for (const auto& x : v) {
    if (x != 0) return true;
  }
  return false;
}

}  // namespace

EquivResult equiv_unambiguous(const Automaton& a, const Automaton& b) {
  if (!is_unambiguous(a) || !is_unambiguous(b)) {
    throw InputError("equiv_unambiguous: automaton is ambiguous");
  }
  const std::size_t na = a.num_states(), n = na + b.num_states();
  std::set<Letter> letters;
  for (const auto& e : a.edges()) letters.insert(e.label);
  for (const auto& e : b.edges()) letters.insert(e.label);

  Vec start(n, 0), final_weight(n, 0);
  for (StateId s : a.initial()) start[s] = 1;
  for (StateId s : b.initial()) start[na + s] = 1;
  for (StateId s = 0; s < static_cast<StateId>(na); ++s) {
    if (a.is_final(s)) final_weight[s] = 1;
  }
  for (StateId s = 0; s < static_cast<StateId>(b.num_states()); ++s) {
    if (b.is_final(s)) final_weight[na + s] = -1;
  }

  auto step = [&](const Vec& v, Letter c) {
    Vec r(n, 0);
    for (StateId s = 0; s < static_cast<StateId>(na); ++s) {
      if (v[s] == 0) continue;
      for (EdgeId e : a.out(s)) {
        if (a.edge(e).label == c) r[a.edge(e).dst] += v[s];
      }
    }
    for (StateId s = 0; s < static_cast<StateId>(b.num_states()); ++s) {
      if (v[na + s] == 0) continue;
      for (EdgeId e : b.out(s)) {
        if (b.edge(e).label == c) r[na + b.edge(e).dst] += v[na + s];
      }
    }
    return r;
  };
  auto value = [&](const Vec& v) {
    Rational sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += v[i] * final_weight[i];
    return sum;
  };

  std::vector<Row> basis;
  std::deque<std::pair<Vec, Word>> queue;
  auto offer = [&](Vec v, Word w) -> bool {
    Vec r = v;
    if (!reduce(r, basis)) return true;
    if (value(v) != 0) return false;
    std::size_t p = 0;
    while (r[p] == 0) ++p;
    basis.push_back(Row{std::move(r), p});
    queue.emplace_back(std::move(v), std::move(w));
    return true;
  };
  if (!offer(start, Word())) return {false, Word()};
  while (!queue.empty()) {
    auto [v, w] = std::move(queue.front());
    queue.pop_front();
    for (Letter c : letters) {
      if (!offer(step(v, c), w + c)) return {false, w + c};
    }
  }
  return {true, std::nullopt};
}

}  // namespace transdist
