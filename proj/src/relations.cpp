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

#include "transdist/relations.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "transdist/delay.hpp"
#include "transdist/transducer.hpp"

namespace transdist {

namespace {

void check_letters(const PairAutomaton& p, const Alphabet& left,
                   const Alphabet& right) {
  for (const auto& e : p.edges()) {
    if (!left.contains_all(e.label.left)) {
      throw InputError("relation: left letter outside the alphabet in '" +
                       to_utf8(e.label.left) + "'");
    }
    if (!right.contains_all(e.label.right)) {
      throw InputError("relation: right letter outside the alphabet in '" +
                       to_utf8(e.label.right) + "'");
    }
  }
}

PairLabel pair(Word l, Word r) { return PairLabel{std::move(l), std::move(r), {}}; }

Alphabet all_letters(const RationalRelation& r) {
  return r.left_alphabet.merged(r.right_alphabet);
}

}  // namespace

RationalRelation make_relation(const PairAutomaton& raw, Alphabet left,
                               Alphabet right) {
  check_letters(raw, left, right);
  RationalRelation r;
  r.left_alphabet = std::move(left);
  r.right_alphabet = std::move(right);
  r.pairs = normalize_pair_automaton(raw);
  return r;
}

RationalRelation identity_relation(const Alphabet& alphabet) {
  PairAutomaton p;
  const StateId s = p.add_state();
  p.add_initial(s);
  p.set_final(s);
  for (Letter a : alphabet) p.add_edge(s, pair(Word(1, a), Word(1, a)), s);
  return make_relation(p, alphabet, alphabet);
}

RationalRelation relation_union(const RationalRelation& r,
                                const RationalRelation& s) {
  PairAutomaton p = r.pairs;
  const StateId offset = static_cast<StateId>(p.num_states());
  for (std::size_t i = 0; i < s.pairs.num_states(); ++i) {
    const StateId n = p.add_state();
    p.set_final(n, s.pairs.is_final(static_cast<StateId>(i)));
  }
  for (StateId i : s.pairs.initial()) p.add_initial(i + offset);
  for (const auto& e : s.pairs.edges()) {
    p.add_edge(e.src + offset, e.label, e.dst + offset);
  }
  return make_relation(p, r.left_alphabet.merged(s.left_alphabet),
                       r.right_alphabet.merged(s.right_alphabet));
}

RationalRelation make_distance_relation(MetricId m, const Alphabet& alphabet) {
  if (m == MetricId::kDiscrete) {
    throw UnsupportedError("the discrete metric has no unit sphere");
  }
  PairAutomaton p;
  const StateId start = p.add_state();
  const StateId done = p.add_state();
  p.add_initial(start);
  p.set_final(done);
  auto copy_loop = [&](StateId s) {
    for (Letter a : alphabet) p.add_edge(s, pair(Word(1, a), Word(1, a)), s);
  };
  const bool substitute = m == MetricId::kHamming || m == MetricId::kLevenshtein ||
                          m == MetricId::kDamerauLevenshtein;
  const bool indel = m == MetricId::kLevenshtein || m == MetricId::kLcs ||
                     m == MetricId::kDamerauLevenshtein;
  const bool swap = m == MetricId::kTransposition ||
                    m == MetricId::kDamerauLevenshtein;
  switch (m) {
    case MetricId::kLength:
      for (Letter a : alphabet) {
        for (Letter b : alphabet) {
          p.add_edge(start, pair(Word(1, a), Word(1, b)), start);
        }
        p.add_edge(start, pair(Word(1, a), Word()), done);
        p.add_edge(start, pair(Word(), Word(1, a)), done);
      }
      break;
    case MetricId::kConjugacy:
      // One rotation by a single letter in either direction. A rotation
      // fixes the word exactly when it is a power of the moved letter, so
      // the rest must contain some other letter.
      for (Letter a : alphabet) {
        for (int dir = 0; dir < 2; ++dir) {
          const StateId same = p.add_state();
          const StateId mixed = p.add_state();
          const PairLabel open = dir == 0 ? pair(Word(1, a), Word())
                                          : pair(Word(), Word(1, a));
          const PairLabel close = dir == 0 ? pair(Word(), Word(1, a))
                                           : pair(Word(1, a), Word());
          p.add_edge(start, open, same);
          p.add_edge(same, pair(Word(1, a), Word(1, a)), same);
          for (Letter b : alphabet) {
            if (b != a) p.add_edge(same, pair(Word(1, b), Word(1, b)), mixed);
          }
          copy_loop(mixed);
          p.add_edge(mixed, close, done);
        }
      }
      break;
    default:
      copy_loop(start);
      copy_loop(done);
      for (Letter a : alphabet) {
        if (indel) {
          p.add_edge(start, pair(Word(1, a), Word()), done);
          p.add_edge(start, pair(Word(), Word(1, a)), done);
        }
        for (Letter b : alphabet) {
          if (a == b) continue;
          if (substitute) p.add_edge(start, pair(Word(1, a), Word(1, b)), done);
          if (swap) p.add_edge(start, pair(Word{a, b}, Word{b, a}), done);
        }
      }
      break;
  }
  RationalRelation r = make_relation(p, alphabet, alphabet);
  r.generated_by = m;
  return r;
}

RationalRelation compose(const RationalRelation& r, const RationalRelation& s) {
  for (Letter a : r.right_alphabet) {
    if (!s.left_alphabet.contains(a)) {
      throw InputError("compose: letter '" + to_utf8(a) +
                       "' of the first relation is not read by the second");
    }
  }
  const PairAutomaton& a = r.pairs;
  const PairAutomaton& b = s.pairs;
  PairAutomaton p;
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::deque<std::pair<StateId, StateId>> queue;
  auto intern = [&](StateId x, StateId y) {
    auto [it, fresh] = ids.emplace(std::make_pair(x, y), kNoState);
    if (fresh) {
      it->second = p.add_state();
      check_ceiling(p.num_states(), "composition");
      p.set_final(it->second, a.is_final(x) && b.is_final(y));
      queue.emplace_back(x, y);
    }
    return it->second;
  };
  for (StateId x : a.initial()) {
    for (StateId y : b.initial()) p.add_initial(intern(x, y));
  }
  while (!queue.empty()) {
    const auto [x, y] = queue.front();
    queue.pop_front();
    const StateId from = ids.at({x, y});
    for (EdgeId e : a.out(x)) {
      const auto& l = a.edge(e).label;
      if (l.right.empty()) {
        p.add_edge(from, pair(l.left, Word()), intern(a.edge(e).dst, y));
        continue;
      }
      for (EdgeId f : b.out(y)) {
        const auto& m = b.edge(f).label;
        if (m.left == l.right) {
          p.add_edge(from, pair(l.left, m.right),
                     intern(a.edge(e).dst, b.edge(f).dst));
        }
      }
    }
    for (EdgeId f : b.out(y)) {
      const auto& m = b.edge(f).label;
      if (m.left.empty()) {
        p.add_edge(from, pair(Word(), m.right), intern(x, b.edge(f).dst));
      }
    }
  }
  return make_relation(p, r.left_alphabet, s.right_alphabet);
}

RationalRelation power(const RationalRelation& s, std::size_t n) {
  RationalRelation r = identity_relation(all_letters(s));
  for (std::size_t i = 0; i < n; ++i) r = compose(r, s);
  return r;
}

RationalRelation power_upto(const RationalRelation& s, std::size_t n) {
  return power(relation_union(s, identity_relation(all_letters(s))), n);
}

ContainmentResult contained(const RationalRelation& r,
                            const RationalRelation& s) {
  const auto gr = max_abs_gap(r.pairs);
  const auto gs = max_abs_gap(s.pairs);
  if (!gr || !gs) {
    throw UnsupportedError(std::string("containment: the ") +
                           (!gr ? "first" : "second") +
                           " relation does not have bounded delay");
  }
  const SyncAutomaton a = synchronize(r.pairs, *gr);
  const SyncAutomaton b = synchronize(s.pairs, *gs);
  const InclusionResult inc = sync_included(a, b);
  ContainmentResult c;
  c.contained = inc.included;
  if (!inc.included) c.counterexample = sync_path_pair(a, inc.counterexample);
  return c;
}

DiameterResult diameter(const RationalRelation& r, MetricId m) {
  const auto [t1, t2] = nivat_split(r.pairs);
  DiameterResult d;
  d.distance = distance(m, t1, t2);
  if (d.distance.witness) {
    d.witness = WordPair{eval(t1, *d.distance.witness).value(),
                         eval(t2, *d.distance.witness).value()};
  }
  return d;
}

std::string IndexResult::to_string() const {
  if (verdict == Verdict::kUnknown) return "unknown";
  return value.to_string();
}

IndexResult index(const RationalRelation& r, const RationalRelation& s,
                  MetricId declared, const IndexOptions& options) {
  if (!options.assert_metrizable && s.generated_by != declared) {
    throw InputError(
        "index: the second relation is not the unit sphere of the declared "
        "metric; metrizability must be asserted explicitly");
  }
  IndexResult res;
  res.experimental = declared == MetricId::kLength;
  res.diameter = diameter(r, declared);
  const DistanceResult& d = res.diameter.distance;
  if (d.unknown()) {
    res.diagnostic = "diameter unknown: " + d.reason();
    return res;
  }
  if (d.value.is_infinite()) {
    res.verdict = Verdict::kNotClose;
    res.diagnostic = d.closeness.diagnostic;
    return res;
  }
  const std::size_t limit =
      std::max<std::size_t>(d.value.value(), options.max_index);
  const Alphabet letters = all_letters(r).merged(all_letters(s));
  const RationalRelation step = relation_union(s, identity_relation(letters));
  RationalRelation closure = identity_relation(letters);
  for (std::size_t k = 0; k <= limit; ++k) {
    if (k > 0) closure = compose(closure, step);
    if (contained(r, closure).contained) {
      res.verdict = Verdict::kClose;
      res.value = k;
      return res;
    }
  }
  res.diagnostic = "no containment up to power " + std::to_string(limit);
  return res;
}

}  // namespace transdist
