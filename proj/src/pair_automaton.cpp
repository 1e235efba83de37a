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

#include "transdist/pair_automaton.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <tuple>

#include "transdist/delay.hpp"

namespace transdist {

PairAutomaton normalize_pair_automaton(const PairAutomaton& raw,
                                       const std::vector<PairLabel>& final_output) {
  PairAutomaton r;
  for (std::size_t s = 0; s < raw.num_states(); ++s) r.add_state();
  for (StateId s : raw.initial()) r.add_initial(s);
  for (StateId s = 0; s < static_cast<StateId>(raw.num_states()); ++s) {
    r.set_final(s, raw.is_final(s));
  }
  auto add_split = [&r](StateId src, const PairLabel& l, StateId dst) {
    const std::size_t n = std::max(l.left.size(), l.right.size());
    if (n <= 1) {
      r.add_edge(src, l, dst);
      return;
    }
    StateId prev = src;
    for (std::size_t i = 0; i < n; ++i) {
      StateId next = i + 1 == n ? dst : r.add_state();
      PairLabel piece;
      if (i < l.left.size()) piece.left = l.left.substr(i, 1);
      if (i < l.right.size()) piece.right = l.right.substr(i, 1);
      if (i == 0) piece.input = l.input;
      r.add_edge(prev, std::move(piece), next);
      prev = next;
    }
  };
  for (const auto& e : raw.edges()) add_split(e.src, e.label, e.dst);
  for (StateId s = 0; s < static_cast<StateId>(raw.num_states()); ++s) {
    if (!raw.is_final(s) || static_cast<std::size_t>(s) >= final_output.size()) {
      continue;
    }
    const PairLabel& f = final_output[s];
    if (f.left.empty() && f.right.empty()) continue;
    r.set_final(s, false);
    StateId t = r.add_state();
    r.set_final(t);
    add_split(s, PairLabel{f.left, f.right, Word()}, t);
  }
  return trim(r);
}

bool is_normalized(const PairAutomaton& p) {
  return std::all_of(p.edges().begin(), p.edges().end(), [](const auto& e) {
    return e.label.left.size() <= 1 && e.label.right.size() <= 1;
  });
}

std::set<WordPair> enumerate_pairs(const PairAutomaton& p, std::size_t max_len) {
  std::set<WordPair> out;
  std::set<std::tuple<StateId, Word, Word>> seen;
  std::deque<std::tuple<StateId, Word, Word>> queue;
  for (StateId s : p.initial()) {
    if (seen.emplace(s, Word(), Word()).second) queue.emplace_back(s, Word(), Word());
  }
  while (!queue.empty()) {
    auto [s, l, r] = queue.front();
    queue.pop_front();
    if (p.is_final(s)) out.emplace(l, r);
    for (EdgeId e : p.out(s)) {
      const auto& ed = p.edge(e);
      Word nl = l + ed.label.left, nr = r + ed.label.right;
      if (nl.size() > max_len || nr.size() > max_len) continue;
      if (seen.emplace(ed.dst, nl, nr).second) {
        queue.emplace_back(ed.dst, std::move(nl), std::move(nr));
      }
    }
  }
  return out;
}

PairLabel path_label(const PairAutomaton& p, const std::vector<EdgeId>& path) {
  PairLabel out;
  for (EdgeId e : path) {
    out.left += p.edge(e).label.left;
    out.right += p.edge(e).label.right;
    out.input += p.edge(e).label.input;
  }
  return out;
}

namespace {

std::vector<EdgeId> unwind(const std::vector<EdgeId>& via,
                           const std::vector<StateId>& from, StateId s,
                           bool forward) {
  std::vector<EdgeId> path;
  while (via[s] != -1) {
    path.push_back(via[s]);
    s = from[s];
  }
  if (forward) std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<std::vector<EdgeId>> path_from_initial(const PairAutomaton& p,
                                                     StateId target) {
  const std::size_t n = p.num_states();
  std::vector<EdgeId> via(n, -1);
  std::vector<StateId> from(n, kNoState);
  std::vector<bool> seen(n, false);
  std::deque<StateId> queue;
  for (StateId s : p.initial()) {
    seen[s] = true;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    if (s == target) return unwind(via, from, s, true);
    for (EdgeId e : p.out(s)) {
      StateId d = p.edge(e).dst;
      if (seen[d]) continue;
      seen[d] = true;
      via[d] = e;
      from[d] = s;
      queue.push_back(d);
    }
  }
  return std::nullopt;
}

std::optional<std::vector<EdgeId>> path_to_final(const PairAutomaton& p,
                                                 StateId source) {
  const std::size_t n = p.num_states();
  std::vector<EdgeId> via(n, -1);
  std::vector<StateId> to(n, kNoState);
  std::vector<bool> seen(n, false);
  std::deque<StateId> queue;
  // Backward search from the finals yields a shortest path forward.
  for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
    if (p.is_final(s)) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    if (s == source) return unwind(via, to, s, false);
    for (EdgeId e : p.in(s)) {
      StateId q = p.edge(e).src;
      if (seen[q]) continue;
      seen[q] = true;
      via[q] = e;
      to[q] = s;
      queue.push_back(q);
    }
  }
  return std::nullopt;
}

std::optional<PairLabel> find_distinct_pair(const PairAutomaton& p) {
  using Key = std::tuple<StateId, Word, Word>;
  const std::size_t cap = 3 * p.num_states() + 2;
  std::map<Key, int> index;
  std::vector<Key> configs;
  std::vector<int> parent;
  std::vector<EdgeId> via;
  std::deque<int> queue;
  auto push = [&](Key k, int par, EdgeId e) {
    auto [it, fresh] = index.emplace(k, static_cast<int>(configs.size()));
    if (!fresh) return;
    configs.push_back(std::move(k));
    parent.push_back(par);
    via.push_back(e);
    queue.push_back(it->second);
  };
  auto finish = [&](int c, EdgeId last, StateId at) -> std::optional<PairLabel> {
    std::vector<EdgeId> path;
    if (last != -1) path.push_back(last);
    for (int x = c; parent[x] != -1; x = parent[x]) path.push_back(via[x]);
    std::reverse(path.begin(), path.end());
    auto tail = path_to_final(p, at);
    if (!tail) return std::nullopt;
    path.insert(path.end(), tail->begin(), tail->end());
    return path_label(p, path);
  };
  for (StateId s : p.initial()) push(Key{s, Word(), Word()}, -1, -1);
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    const auto [q, l, r] = configs[c];
    if (p.is_final(q) && (!l.empty() || !r.empty())) {
      if (auto found = finish(c, -1, q)) return found;
    }
    for (EdgeId e : p.out(q)) {
      const auto& ed = p.edge(e);
      Word nl = l + ed.label.left, nr = r + ed.label.right;
      std::size_t k = 0;
      while (k < nl.size() && k < nr.size() && nl[k] == nr[k]) ++k;
      if (k < nl.size() && k < nr.size()) {
        if (auto found = finish(c, e, ed.dst)) return found;
        continue;
      }
      nl.erase(0, k);
      nr.erase(0, k);
      if (nl.size() > cap || nr.size() > cap) continue;
      push(Key{ed.dst, std::move(nl), std::move(nr)}, c, e);
    }
  }
  return std::nullopt;
}

bool is_length_preserving(const PairAutomaton& input) {
  const PairAutomaton p = trim(input);
  const GapProfile g = gap_profile(p);
  if (!g.bounded) return false;
  for (StateId s : p.finals()) {
    if (g.reachable[s] && (g.min_gap[s] != 0 || g.max_gap[s] != 0)) {
      return false;
    }
  }
  return true;
}

bool is_identity_relation(const PairAutomaton& input) {
  const PairAutomaton p = trim(input);
  if (p.empty()) return true;
  if (!is_length_preserving(p)) return false;
  const PairAutomaton n = is_normalized(p) ? p : normalize_pair_automaton(p);
  const SyncAutomaton s = trim(synchronize(n, *max_abs_gap(n)));
  return std::all_of(s.edges().begin(), s.edges().end(), [](const auto& e) {
    return e.label.silent || e.label.left == e.label.right;
  });
}

SyncAutomaton synchronize(const PairAutomaton& input, std::size_t max_leftover) {
  const PairAutomaton p =
      is_normalized(input) ? input : normalize_pair_automaton(input);
  using Key = std::tuple<StateId, Word, Word>;
  SyncAutomaton s;
  std::map<Key, StateId> ids;
  std::deque<Key> queue;
  auto intern = [&](const Key& k) {
    auto [it, fresh] = ids.emplace(k, kNoState);
    if (fresh) {
      it->second = s.add_state();
      check_ceiling(s.num_states(), "synchronize");
      queue.push_back(k);
    }
    return it->second;
  };
  // Flush states emit the leftover of one side against pad letters.
  std::map<std::pair<bool, Word>, StateId> flush_ids;
  StateId accept = kNoState;
  std::function<StateId(bool, const Word&)> flush = [&](bool left_side,
                                                        const Word& rest) {
    if (rest.empty()) {
      if (accept == kNoState) {
        accept = s.add_state();
        s.set_final(accept);
      }
      return accept;
    }
    auto it = flush_ids.find({left_side, rest});
    if (it != flush_ids.end()) return it->second;
    StateId st = s.add_state();
    flush_ids[{left_side, rest}] = st;
    StateId next = flush(left_side, rest.substr(1));
    SyncLabel l;
    l.silent = false;
    l.left = left_side ? rest[0] : kPadLetter;
    l.right = left_side ? kPadLetter : rest[0];
    s.add_edge(st, l, next);
    return st;
  };
  for (StateId q : p.initial()) s.add_initial(intern(Key{q, Word(), Word()}));
  while (!queue.empty()) {
    Key k = queue.front();
    queue.pop_front();
    const StateId from = ids[k];
    const auto& [q, l, r] = k;
    if (p.is_final(q)) {
      if (l.empty() && r.empty()) {
        s.set_final(from);
      } else {
        const bool left_side = !l.empty();
        const Word& rest = left_side ? l : r;
        SyncLabel lab;
        lab.silent = false;
        lab.left = left_side ? rest[0] : kPadLetter;
        lab.right = left_side ? kPadLetter : rest[0];
        StateId next = flush(left_side, rest.substr(1));
        s.add_edge(from, lab, next);
      }
    }
    for (EdgeId e : p.out(q)) {
      const auto& ed = p.edge(e);
      Word nl = l + ed.label.left, nr = r + ed.label.right;
      SyncLabel lab;
      lab.origin = e;
      if (!nl.empty() && !nr.empty()) {
        lab.silent = false;
        lab.left = nl[0];
        lab.right = nr[0];
        nl.erase(0, 1);
        nr.erase(0, 1);
      }
      if (nl.size() > max_leftover || nr.size() > max_leftover) {
        throw UnsupportedError(
            "synchronize: leftover exceeds the delay bound " +
            std::to_string(max_leftover));
      }
      StateId to = intern(Key{ed.dst, std::move(nl), std::move(nr)});
      s.add_edge(from, lab, to);
    }
  }
  return s;
}

namespace {

using StateSet = std::vector<StateId>;

StateSet silent_closure(const SyncAutomaton& b, StateSet set) {
  std::vector<bool> in(b.num_states(), false);
  for (StateId s : set) in[s] = true;
  std::vector<StateId> stack = set;
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (EdgeId e : b.out(s)) {
      const auto& ed = b.edge(e);
      if (ed.label.silent && !in[ed.dst]) {
        in[ed.dst] = true;
        set.push_back(ed.dst);
        stack.push_back(ed.dst);
      }
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

}  // namespace

InclusionResult sync_included(const SyncAutomaton& a, const SyncAutomaton& b) {
  using Node = std::pair<StateId, StateSet>;
  std::map<Node, int> index;
  std::vector<Node> nodes;
  std::vector<int> parent;
  std::vector<EdgeId> via;
  std::deque<int> queue;
  auto push = [&](Node n, int par, EdgeId e) {
    auto [it, fresh] = index.emplace(n, static_cast<int>(nodes.size()));
    if (!fresh) return;
    nodes.push_back(std::move(n));
    parent.push_back(par);
    via.push_back(e);
    queue.push_back(it->second);
    check_ceiling(nodes.size(), "inclusion check");
  };
  const StateSet b0 = silent_closure(b, StateSet(b.initial().begin(),
                                                 b.initial().end()));
  for (StateId s : a.initial()) push(Node{s, b0}, -1, -1);
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    const StateId s = nodes[c].first;
    const StateSet set = nodes[c].second;
    if (a.is_final(s) &&
        std::none_of(set.begin(), set.end(),
                     [&](StateId t) { return b.is_final(t); })) {
      InclusionResult r;
      r.included = false;
      for (int x = c; parent[x] != -1; x = parent[x]) {
        r.counterexample.push_back(via[x]);
      }
      std::reverse(r.counterexample.begin(), r.counterexample.end());
      return r;
    }
    for (EdgeId e : a.out(s)) {
      const auto& ed = a.edge(e);
      if (ed.label.silent) {
        push(Node{ed.dst, set}, c, e);
        continue;
      }
      StateSet next;
      for (StateId t : set) {
        for (EdgeId f : b.out(t)) {
          const auto& fd = b.edge(f);
          if (!fd.label.silent && fd.label.left == ed.label.left &&
              fd.label.right == ed.label.right) {
            next.push_back(fd.dst);
          }
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      push(Node{ed.dst, silent_closure(b, std::move(next))}, c, e);
    }
  }
  return {};
}

WordPair sync_path_pair(const SyncAutomaton& s, const std::vector<EdgeId>& path) {
  WordPair out;
  for (EdgeId e : path) {
    const auto& l = s.edge(e).label;
    if (l.silent) continue;
    if (l.left != kPadLetter) out.first.push_back(l.left);
    if (l.right != kPadLetter) out.second.push_back(l.right);
  }
  return out;
}

}  // namespace transdist
