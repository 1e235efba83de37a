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

#include "transdist/substitution.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "transdist/delay.hpp"

namespace transdist {

namespace {

void check_loop_pair(std::u32string_view u, std::u32string_view v,
                     std::int64_t d) {
  const auto ad = static_cast<std::size_t>(std::llabs(d));
  if (u.size() != v.size() || u.size() <= ad) {
    throw InputError("interior: need |u| = |v| > |delay|");
  }
}

}  // namespace

WordPair interior(std::u32string_view u, std::u32string_view v, std::int64_t d) {
  check_loop_pair(u, v, d);
  const std::size_t n = u.size(), a = static_cast<std::size_t>(std::llabs(d));
  if (d >= 0) return {Word(u.substr(0, n - a)), Word(v.substr(a))};
  return {Word(u.substr(a)), Word(v.substr(0, n - a))};
}

Word lborder(std::u32string_view u, std::u32string_view v, std::int64_t d) {
  check_loop_pair(u, v, d);
  const std::size_t a = static_cast<std::size_t>(std::llabs(d));
  return d >= 0 ? Word(v.substr(0, a)) : Word(u.substr(0, a));
}

Word rborder(std::u32string_view u, std::u32string_view v, std::int64_t d) {
  check_loop_pair(u, v, d);
  const std::size_t n = u.size(), a = static_cast<std::size_t>(std::llabs(d));
  return d >= 0 ? Word(u.substr(n - a)) : Word(v.substr(n - a));
}

PairAutomaton interior_gadget(const PairAutomaton& p, StateId q,
                              std::int64_t delay) {
  const SccDecomposition scc = scc_decompose(p);
  const int comp = scc.component[q];
  const int d = static_cast<int>(std::llabs(delay));
  // The head side loses its first d letters, the tail side its last d.
  const bool head_is_right = delay >= 0;
  using Key = std::tuple<StateId, int, int, int>;
  PairAutomaton g;
  std::map<Key, StateId> ids;
  std::deque<Key> queue;
  auto intern = [&](const Key& k) {
    auto [it, fresh] = ids.emplace(k, kNoState);
    if (fresh) {
      it->second = g.add_state();
      const auto& [s, i, phase, j] = k;
      if (s == q && i == d && j == d) g.set_final(it->second);
      queue.push_back(k);
    }
    return it->second;
  };
  g.add_initial(intern(Key{q, 0, 0, 0}));
  while (!queue.empty()) {
    const Key k = queue.front();
    queue.pop_front();
    const auto [s, i, phase, j] = k;
    const StateId from = ids[k];
    for (EdgeId e : p.out(s)) {
      const auto& ed = p.edge(e);
      if (scc.component[ed.dst] != comp) continue;
      const Word& head = head_is_right ? ed.label.right : ed.label.left;
      const Word& tail = head_is_right ? ed.label.left : ed.label.right;
      int ni = i;
      Word head_out;
      if (!head.empty()) {
        if (i < d) {
          ++ni;
        } else {
          head_out = head;
        }
      }
      // Options for the tail letter: emit it, or drop it as one of the last d.
      std::vector<std::tuple<Word, int, int>> tails;
      if (tail.empty()) {
        tails.emplace_back(Word(), phase, j);
      } else {
        if (phase == 0) tails.emplace_back(tail, 0, j);
        if (j < d) tails.emplace_back(Word(), 1, j + 1);
      }
      for (auto& [tail_out, nphase, nj] : tails) {
        PairLabel l;
        l.left = head_is_right ? tail_out : head_out;
        l.right = head_is_right ? head_out : tail_out;
        l.input = ed.label.input;
        g.add_edge(from, std::move(l), intern(Key{ed.dst, ni, nphase, nj}));
      }
    }
  }
  return trim(g);
}

PumpCertificate pump_from_cycle(const PairAutomaton& p,
                                const std::vector<EdgeId>& cycle) {
  PumpCertificate c;
  if (cycle.empty()) return c;
  const StateId start = p.edge(cycle.front()).src;
  const auto head = path_from_initial(p, start).value();
  const auto tail = path_to_final(p, start).value();
  auto gap = [&](const std::vector<EdgeId>& path) {
    const PairLabel l = path_label(p, path);
    return static_cast<std::int64_t>(l.left.size()) -
           static_cast<std::int64_t>(l.right.size());
  };
  const PairLabel loop = path_label(p, cycle);
  c.prefix = path_label(p, head).input;
  c.loop = loop.input;
  c.suffix = path_label(p, tail).input;
  const std::int64_t g = gap(cycle);
  std::int64_t base = gap(head) + gap(tail);
  // Move the base to the side of the loop gap.
  while (g != 0 && base != 0 && (base < 0) != (g < 0)) {
    c.prefix += c.loop;
    base += g;
  }
  return c;
}

std::optional<Word> unequal_length_input(const PairAutomaton& p) {
  const auto bound = max_abs_gap(p);
  if (!bound) {
    const GapProfile g = gap_profile(p);
    return pump_from_cycle(p, std::vector<EdgeId>(g.cycle.begin(), g.cycle.end()))
        .instance(1);
  }
  const auto lim = static_cast<std::int64_t>(*bound);
  using Key = std::pair<StateId, std::int64_t>;
  std::map<Key, std::pair<Key, EdgeId>> parent;
  std::deque<Key> queue;
  for (StateId s : p.initial()) {
    if (parent.emplace(Key{s, 0}, std::make_pair(Key{kNoState, 0}, -1)).second) {
      queue.push_back(Key{s, 0});
    }
  }
  while (!queue.empty()) {
    const Key k = queue.front();
    queue.pop_front();
    if (p.is_final(k.first) && k.second != 0) {
      std::vector<EdgeId> path;
      for (Key x = k; parent.at(x).second != -1; x = parent.at(x).first) {
        path.push_back(parent.at(x).second);
      }
      std::reverse(path.begin(), path.end());
      return path_label(p, path).input;
    }
    for (EdgeId e : p.out(k.first)) {
      const auto& l = p.edge(e).label;
      const std::int64_t g = k.second + static_cast<std::int64_t>(l.left.size()) -
                             static_cast<std::int64_t>(l.right.size());
      if (std::llabs(g) > lim) continue;
      const Key next{p.edge(e).dst, g};
      if (parent.emplace(next, std::make_pair(k, e)).second) queue.push_back(next);
    }
  }
  return std::nullopt;
}

namespace {

struct Prepared {
  PairAutomaton p;
  std::vector<std::int64_t> delay;
};

// Shared front end of both deciders: same domain, bounded and zero final
// gaps. Returns a NotClose verdict in `out` when one of them fails.
std::optional<Prepared> prepare(const Transducer& t1, const Transducer& t2,
                                Closeness* out) {
  const EquivResult dom = domain_equivalence(t1, t2);
  if (!dom) {
    *out = Closeness::not_close(PumpCertificate{*dom.counterexample, {}, {}},
                                "domains differ");
    return std::nullopt;
  }
  Prepared r{pair_automaton(joint_product_unchecked(t1, t2)), {}};
  const GapProfile g = gap_profile(r.p);
  if (auto w = unequal_length_input(r.p)) {
    *out = Closeness::not_close(PumpCertificate{*w, {}, {}},
                                "outputs of different length");
    return std::nullopt;
  }
  r.delay = g.min_gap;
  return r;
}

// First state whose loops have a nontrivial interior, as a certificate.
std::optional<PumpCertificate> nontrivial_interior(const Prepared& pr) {
  const SccDecomposition scc = scc_decompose(pr.p);
  for (StateId q = 0; q < static_cast<StateId>(pr.p.num_states()); ++q) {
    if (!scc.nontrivial[scc.component[q]]) continue;
    const PairAutomaton g = interior_gadget(pr.p, q, pr.delay[q]);
    if (is_identity_relation(g)) continue;
    const auto pair = find_distinct_pair(g);
    if (!pair) throw IntegrityError("interior gadget: no distinct pair found");
    PumpCertificate c;
    c.prefix = path_label(pr.p, path_from_initial(pr.p, q).value()).input;
    c.loop = pair->input;
    c.suffix = path_label(pr.p, path_to_final(pr.p, q).value()).input;
    return c;
  }
  return std::nullopt;
}

using Vec = std::vector<std::int64_t>;

Alphabet output_letters(const PairAutomaton& p) {
  std::vector<Letter> all;
  for (const auto& e : p.edges()) {
    all.insert(all.end(), e.label.left.begin(), e.label.left.end());
    all.insert(all.end(), e.label.right.begin(), e.label.right.end());
  }
  return Alphabet(std::move(all));
}

Vec difference(const PairLabel& l, const Alphabet& a) {
  Vec v = alphabetic_vector(l.left, a);
  Vec w = alphabetic_vector(l.right, a);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[i];
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace

Closeness close_hamming(const Transducer& t1, const Transducer& t2) {
  Closeness out;
  auto pr = prepare(t1, t2, &out);
  if (!pr) return out;
  if (auto c = nontrivial_interior(*pr)) {
    return Closeness::not_close(c, "loop with nontrivial interior");
  }
  return Closeness::close(ExtendedNat::infinity());
}

Closeness close_transposition(const Transducer& t1, const Transducer& t2) {
  Closeness out;
  auto pr = prepare(t1, t2, &out);
  if (!pr) return out;
  const PairAutomaton& p = pr->p;
  const Alphabet letters = output_letters(p);

  // Condition 1: one difference vector per state, zero at the finals.
  const std::size_t n = p.num_states();
  std::vector<std::optional<Vec>> vec(n);
  std::vector<EdgeId> tree(n, -1);
  std::deque<StateId> queue;
  auto tree_path = [&](StateId s) {
    std::vector<EdgeId> path;
    for (; tree[s] != -1; s = p.edge(tree[s]).src) path.push_back(tree[s]);
    std::reverse(path.begin(), path.end());
    return path;
  };
  auto non_permutation = [&](std::vector<EdgeId> path) {
    auto tail = path_to_final(p, path.empty() ? p.initial().front()
                                              : p.edge(path.back()).dst);
    path.insert(path.end(), tail->begin(), tail->end());
    return path_label(p, path);
  };
  for (StateId s : p.initial()) {
    vec[s] = Vec(letters.size(), 0);
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    for (EdgeId e : p.out(s)) {
      const StateId d = p.edge(e).dst;
      Vec v = *vec[s];
      const Vec delta = difference(p.edge(e).label, letters);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += delta[i];
      if (!vec[d]) {
        vec[d] = std::move(v);
        tree[d] = e;
        queue.push_back(d);
        continue;
      }
      if (*vec[d] == v) continue;
      // Two paths into d with different vectors; the same completion makes
      // one of them a non-permutation pair.
      std::vector<EdgeId> alt = tree_path(s);
      alt.push_back(e);
      PairLabel a = non_permutation(tree_path(d)), b = non_permutation(alt);
      const PairLabel& bad =
          alphabetic_vector(a.left, letters) != alphabetic_vector(a.right, letters)
              ? a
              : b;
      return Closeness::not_close(PumpCertificate{bad.input, {}, {}},
                                  "output pair is not a permutation");
    }
  }
  for (StateId f : p.finals()) {
    if (!is_zero(*vec[f])) {
      return Closeness::not_close(
          PumpCertificate{path_label(p, tree_path(f)).input, {}, {}},
          "output pair is not a permutation");
    }
  }

  // Condition 2: the Hamming interior condition.
  if (auto c = nontrivial_interior(*pr)) {
    return Closeness::not_close(c, "loop with nontrivial interior");
  }

  // Condition 3: borders must be balanced by the vector leading to q.
  const SccDecomposition scc = scc_decompose(p);
  for (StateId q = 0; q < static_cast<StateId>(n); ++q) {
    const int comp = scc.component[q];
    if (!scc.nontrivial[comp]) continue;
    const std::int64_t d = pr->delay[q];
    const std::size_t width = static_cast<std::size_t>(std::llabs(d));
    const Vec& dq = *vec[q];
    // Paths from q inside the component collecting `width` letters of the
    // head side; for width 0 any path with some letter.
    using Key = std::pair<StateId, Word>;
    std::map<Key, std::pair<Key, EdgeId>> parent;
    std::deque<Key> bfs{Key{q, Word()}};
    parent.emplace(Key{q, Word()}, std::make_pair(Key{kNoState, Word()}, -1));
    std::optional<Key> violation;
    while (!bfs.empty() && !violation) {
      const Key k = bfs.front();
      bfs.pop_front();
      for (EdgeId e : p.out(k.first)) {
        const auto& ed = p.edge(e);
        if (scc.component[ed.dst] != comp) continue;
        const Word& head = d >= 0 ? ed.label.right : ed.label.left;
        Word w = k.second;
        bool done = false;
        if (width == 0) {
          done = !ed.label.left.empty() || !ed.label.right.empty();
        } else {
          w += head;
          done = w.size() >= width;
          if (w.size() > width) w.resize(width);
        }
        const Key next{ed.dst, w};
        if (!parent.emplace(next, std::make_pair(k, e)).second) continue;
        if (!done) {
          if (parent.size() > state_ceiling()) {
            throw ResourceError("border enumeration: exceeded state ceiling");
          }
          bfs.push_back(next);
          continue;
        }
        const Vec lb = alphabetic_vector(w, letters);
        bool bad = false;
        if (d >= 0) {
          bad = dq != lb;
        } else {
          for (std::size_t i = 0; i < lb.size(); ++i) bad |= dq[i] + lb[i] != 0;
        }
        if (bad) {
          violation = next;
          break;
        }
      }
    }
    if (!violation) continue;
    std::vector<EdgeId> loop;
    for (Key x = *violation; parent.at(x).second != -1; x = parent.at(x).first) {
      loop.push_back(parent.at(x).second);
    }
    std::reverse(loop.begin(), loop.end());
    // Close the loop back at q inside the component.
    {
      const StateId from = p.edge(loop.back()).dst;
      std::map<StateId, EdgeId> via;
      std::deque<StateId> back{from};
      via[from] = -1;
      while (!back.empty() && !via.count(q)) {
        StateId s = back.front();
        back.pop_front();
        for (EdgeId e : p.out(s)) {
          StateId t = p.edge(e).dst;
          if (scc.component[t] != comp || via.count(t)) continue;
          via[t] = e;
          back.push_back(t);
        }
      }
      std::vector<EdgeId> ret;
      for (StateId s = q; s != from; s = p.edge(via.at(s)).src) {
        ret.push_back(via.at(s));
      }
      std::reverse(ret.begin(), ret.end());
      loop.insert(loop.end(), ret.begin(), ret.end());
    }
    PumpCertificate c;
    c.prefix = path_label(p, path_from_initial(p, q).value()).input;
    c.loop = path_label(p, loop).input;
    c.suffix = path_label(p, path_to_final(p, q).value()).input;
    return Closeness::not_close(c, "loop border not balanced");
  }
  return Closeness::close(ExtendedNat::infinity());
}

namespace {

class SubstSearch {
 public:
  SubstSearch(MetricId m, const PairAutomaton& p, const SyncAutomaton& s)
      : m_(m), p_(p), s_(s), scc_(scc_decompose(s)), letters_(letters_of(s)) {
    for (const auto& e : s_.edges()) {
      if (scc_.component[e.src] == scc_.component[e.dst] && !e.label.silent &&
          e.label.left != e.label.right) {
        throw IntegrityError("distance_subst: cycle through an unequal pair");
      }
    }
  }

  struct Best {
    std::int64_t value = -1;  // -1: no accepting continuation
    StateId via_state = kNoState;
    EdgeId via_edge = -1;  // -1 with via_state set: accept at via_state
  };

  std::int64_t solve(std::vector<StateId> starts) {
    std::int64_t best = -1;
    for (StateId s : starts) best = std::max(best, visit(s, Word(), Word()).value);
    return best;
  }

  Word witness(StateId start) {
    Word input;
    StateId s = start;
    Word l, r;
    while (true) {
      const Best& b = memo_.at(std::make_tuple(s, l, r));
      if (scc_.nontrivial[scc_.component[s]]) {
        append_inner_path(s, b.via_state, &input);
        l.clear();
        r.clear();
      }
      if (b.via_edge == -1) break;
      const auto& ed = s_.edge(b.via_edge);
      if (ed.label.origin != -1) input += p_.edge(ed.label.origin).label.input;
      advance(ed.label, &l, &r);
      s = ed.dst;
    }
    return input;
  }

  StateId best_start(const std::vector<StateId>& starts) {
    StateId arg = starts.front();
    std::int64_t best = -2;
    for (StateId s : starts) {
      std::int64_t v = memo_.at(std::make_tuple(s, Word(), Word())).value;
      if (v > best) {
        best = v;
        arg = s;
      }
    }
    return arg;
  }

 private:
  static Alphabet letters_of(const SyncAutomaton& s) {
    std::vector<Letter> all;
    for (const auto& e : s.edges()) {
      if (e.label.silent) continue;
      all.push_back(e.label.left);
      all.push_back(e.label.right);
    }
    return Alphabet(std::move(all));
  }

  bool balanced(const Word& l, const Word& r) const {
    if (m_ == MetricId::kHamming) return l.size() == r.size();
    return alphabetic_vector(l, letters_) == alphabetic_vector(r, letters_);
  }

  std::int64_t cost(const Word& l, const Word& r) const {
    const ExtendedNat c = word_distance(m_, l, r);
    if (c.is_infinite()) throw IntegrityError("distance_subst: infinite block");
    return static_cast<std::int64_t>(c.value());
  }

  // Appends the letters of a sync edge and commits at balance points.
  std::int64_t advance(const SyncLabel& lab, Word* l, Word* r) const {
    if (lab.silent) return 0;
    l->push_back(lab.left);
    r->push_back(lab.right);
    if (!balanced(*l, *r)) return 0;
    const std::int64_t c = cost(*l, *r);
    l->clear();
    r->clear();
    return c;
  }

  const Best& visit(StateId s, Word l, Word r) {
    auto key = std::make_tuple(s, l, r);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int comp = scc_.component[s];
    std::vector<StateId> sources{s};
    std::int64_t base = 0;
    if (scc_.nontrivial[comp]) {
      if (!balanced(l, r)) {
        throw IntegrityError("distance_subst: unbalanced entry into a cycle");
      }
      base = l.empty() ? 0 : cost(l, r);
      l.clear();
      r.clear();
      sources = scc_.members[comp];
    }
    Best best;
    for (StateId t : sources) {
      if (s_.is_final(t)) {
        if (!l.empty() || !r.empty()) {
          throw IntegrityError("distance_subst: unbalanced final leftover");
        }
        if (best.value < 0) best = Best{0, t, -1};
      }
      for (EdgeId e : s_.out(t)) {
        const auto& ed = s_.edge(e);
        if (scc_.component[ed.dst] == comp) continue;
        Word nl = l, nr = r;
        const std::int64_t c = advance(ed.label, &nl, &nr);
        const Best& sub = visit(ed.dst, std::move(nl), std::move(nr));
        if (sub.value < 0) continue;
        if (c + sub.value > best.value) best = Best{c + sub.value, t, e};
      }
    }
    if (best.value >= 0) best.value += base;
    return memo_.emplace(std::move(key), best).first->second;
  }

  void append_inner_path(StateId from, StateId to, Word* input) const {
    if (from == to) return;
    const int comp = scc_.component[from];
    std::map<StateId, EdgeId> via{{from, -1}};
    std::deque<StateId> queue{from};
    while (!queue.empty() && !via.count(to)) {
      StateId x = queue.front();
      queue.pop_front();
      for (EdgeId e : s_.out(x)) {
        StateId y = s_.edge(e).dst;
        if (scc_.component[y] != comp || via.count(y)) continue;
        via[y] = e;
        queue.push_back(y);
      }
    }
    std::vector<EdgeId> path;
    for (StateId x = to; x != from; x = s_.edge(via.at(x)).src) {
      path.push_back(via.at(x));
    }
    std::reverse(path.begin(), path.end());
    for (EdgeId e : path) {
      const EdgeId o = s_.edge(e).label.origin;
      if (o != -1) *input += p_.edge(o).label.input;
    }
  }

  MetricId m_;
  const PairAutomaton& p_;
  const SyncAutomaton& s_;
  SccDecomposition scc_;
  Alphabet letters_;
  std::map<std::tuple<StateId, Word, Word>, Best> memo_;
};

}  // namespace

SubstDistance distance_subst(MetricId m, const Transducer& t1,
                             const Transducer& t2) {
  if (m != MetricId::kHamming && m != MetricId::kTransposition) {
    throw InputError("distance_subst: metric must be hamming or transposition");
  }
  SubstDistance r;
  r.closeness = m == MetricId::kHamming ? close_hamming(t1, t2)
                                        : close_transposition(t1, t2);
  if (r.closeness.verdict != Verdict::kClose) return r;
  const PairAutomaton p = pair_automaton(joint_product_unchecked(t1, t2));
  if (p.empty()) {
    r.value = 0;
    r.closeness.bound = 0;
    return r;
  }
  const SyncAutomaton s = trim(synchronize(p, max_abs_gap(p).value()));
  SubstSearch search(m, p, s);
  const std::int64_t v = search.solve(s.initial());
  if (v < 0) throw IntegrityError("distance_subst: no accepting path");
  r.value = static_cast<std::uint64_t>(v);
  r.closeness.bound = r.value;
  r.witness = search.witness(search.best_start(s.initial()));
  return r;
}

bool kclose_subst(MetricId m, const Transducer& t1, const Transducer& t2,
                  std::uint64_t k) {
  return distance_subst(m, t1, t2).value <= ExtendedNat(k);
}

}  // namespace transdist
