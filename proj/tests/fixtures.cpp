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

#include "fixtures.hpp"

#include <deque>
#include <map>

#include "transdist/delay.hpp"

namespace fixtures {

using namespace transdist;

namespace {

Transducer two_phase(bool output_first) {
  Transducer t(Alphabet{U'a', U'b'}, Alphabet{U'a', U'b'});
  const StateId q0 = t.add_state(), q1 = t.add_state();
  t.add_initial(q0);
  t.set_final(q0);
  t.set_final(q1);
  for (Letter a : {U'a', U'b'}) {
    t.add_transition(q0, a, output_first ? Word(1, a) : Word(), q1);
    t.add_transition(q1, a, output_first ? Word() : Word(1, a), q0);
  }
  return t;
}

Transducer blocks(bool complement) {
  Transducer t(Alphabet{U'0', U'1'}, Alphabet{U'0', U'1'});
  const StateId q0 = t.add_state(), q1 = t.add_state(), q2 = t.add_state();
  t.add_initial(q0);
  t.set_final(q1);
  t.set_final(q2);
  const Word zero = complement ? U"1" : U"0";
  const Word one = complement ? U"0" : U"1";
  t.add_transition(q0, U'0', zero, q1);
  t.add_transition(q0, U'1', one, q2);
  t.add_transition(q1, U'1', one, q2);
  t.add_transition(q1, U'0', Word(), q1);
  t.add_transition(q2, U'0', zero, q1);
  t.add_transition(q2, U'1', Word(), q2);
  return t;
}

PairLabel pl(Word l, Word r) { return PairLabel{std::move(l), std::move(r), {}}; }

}  // namespace

Transducer odd_positions() { return two_phase(true); }
Transducer even_positions() { return two_phase(false); }

Transducer erase_b() {
  Transducer t(Alphabet{U'a', U'b'}, Alphabet{U'a', U'b'});
  const StateId q = t.add_state();
  t.add_initial(q);
  t.set_final(q);
  t.add_transition(q, U'a', U"a", q);
  t.add_transition(q, U'b', Word(), q);
  return t;
}

Transducer block_letters() { return blocks(false); }
Transducer block_letters_complement() { return blocks(true); }

std::string data_dir() { return TRANSDIST_TEST_DATA; }

std::vector<Word> all_words(const Alphabet& a, std::size_t max_len) {
  std::vector<Word> out{Word()};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Letter c : a) out.push_back(out[i] + c);
    }
    begin = end;
  }
  return out;
}

ExtendedNat enumerated_distance(MetricId m, const Transducer& t1,
                                const Transducer& t2, std::size_t max_len,
                                Word* argmax) {
  ExtendedNat best = 0;
  bool found = false;
  const Alphabet in = t1.in_alphabet().merged(t2.in_alphabet());
  for (const Word& w : all_words(in, max_len)) {
    const auto a = eval(t1, w);
    const auto b = eval(t2, w);
    if (!a && !b) continue;
    const ExtendedNat d =
        a && b ? word_distance(m, *a, *b) : ExtendedNat::infinity();
    if (!found || d > best) {
      best = d;
      found = true;
      if (argmax) *argmax = w;
    }
  }
  return best;
}

RationalRelation delete_first_a(int k) {
  PairAutomaton p;
  for (int i = 0; i <= k; ++i) p.add_state();
  p.add_initial(0);
  p.set_final(k);
  for (int i = 0; i < k; ++i) {
    p.add_edge(i, pl(U"b", U"b"), i);
    p.add_edge(i, pl(U"a", Word()), i + 1);
  }
  p.add_edge(k, pl(U"a", U"a"), k);
  p.add_edge(k, pl(U"b", U"b"), k);
  return make_relation(p, Alphabet{U'a', U'b'}, Alphabet{U'a', U'b'});
}

RationalRelation delete_all_a() {
  PairAutomaton p;
  p.add_state();
  p.add_initial(0);
  p.set_final(0);
  p.add_edge(0, pl(U"a", Word()), 0);
  p.add_edge(0, pl(U"b", U"b"), 0);
  return make_relation(p, Alphabet{U'a', U'b'}, Alphabet{U'a', U'b'});
}

Word PairGenerator::random_word(std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  Word w(len(rng_), U'0');
  for (Letter& c : w) c = bit(rng_) ? U'1' : U'0';
  return w;
}

Transducer PairGenerator::random_machine() {
  std::uniform_int_distribution<std::size_t> count(1, o_.max_states);
  std::bernoulli_distribution edge(o_.edge_probability), fin(0.4);
  while (true) {
    const std::size_t n = count(rng_);
    std::uniform_int_distribution<StateId> target(0, static_cast<StateId>(n) - 1);
    Transducer t(Alphabet{U'a', U'b'}, Alphabet{U'0', U'1'});
    for (std::size_t i = 0; i < n; ++i) t.add_state();
    t.add_initial(0);
    bool any_final = false;
    for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
      if (fin(rng_)) {
        t.set_final(s, random_word(0, 1));
        any_final = true;
      }
    }
    if (!any_final) t.set_final(target(rng_), random_word(0, 1));
    for (StateId s = 0; s < static_cast<StateId>(n); ++s) {
      for (Letter a : {U'a', U'b'}) {
        if (edge(rng_)) t.add_transition(s, a, random_word(0, o_.max_output), target(rng_));
      }
    }
    Transducer trimmed = t.trimmed();
    if (trimmed.num_states() > 0) return trimmed;
  }
}

Word PairGenerator::mutate(const Word& w) {
  std::uniform_int_distribution<int> op(0, 5);
  std::uniform_int_distribution<int> bit(0, 1);
  const Letter fresh = bit(rng_) ? U'1' : U'0';
  for (int tries = 0; tries < 16; ++tries) {
    const int k = op(rng_);
    if (w.empty() && k != 2) continue;
    std::uniform_int_distribution<std::size_t> pos(0, w.empty() ? 0 : w.size() - 1);
    Word r = w;
    switch (k) {
      case 0:  // substitute
        r[pos(rng_)] = fresh;
        break;
      case 1:  // delete
        r.erase(pos(rng_), 1);
        break;
      case 2: {  // insert
        std::uniform_int_distribution<std::size_t> at(0, w.size());
        r.insert(r.begin() + static_cast<std::ptrdiff_t>(at(rng_)), fresh);
        break;
      }
      case 3: {  // adjacent swap
        if (w.size() < 2) continue;
        std::uniform_int_distribution<std::size_t> at(0, w.size() - 2);
        const std::size_t i = at(rng_);
        std::swap(r[i], r[i + 1]);
        break;
      }
      case 4:  // rotate
        r = w.substr(1) + w[0];
        break;
      case 5:  // scramble
        r = random_word(w.size(), w.size());
        break;
    }
    return r;
  }
  return w;
}

Transducer PairGenerator::mutated(const Transducer& t) {
  std::bernoulli_distribution pick(o_.mutation_probability);
  Transducer r(t.in_alphabet(), t.out_alphabet());
  const Automaton& a = t.automaton();
  for (std::size_t s = 0; s < t.num_states(); ++s) r.add_state();
  for (StateId s : a.initial()) r.add_initial(s);
  for (StateId s : a.finals()) r.set_final(s, t.final_output(s));
  for (EdgeId e = 0; e < static_cast<EdgeId>(a.num_edges()); ++e) {
    const Word out = pick(rng_) ? mutate(t.output(e)) : t.output(e);
    r.add_transition(a.edge(e).src, a.edge(e).label, out, a.edge(e).dst);
  }
  return r;
}

Transducer PairGenerator::delayed(const Transducer& t) {
  const Automaton& a = t.automaton();
  Transducer r(t.in_alphabet(), t.out_alphabet());
  std::map<std::pair<StateId, Word>, StateId> ids;
  std::deque<std::pair<StateId, Word>> queue;
  auto intern = [&](StateId s, const Word& pending) {
    auto [it, fresh] = ids.emplace(std::make_pair(s, pending), kNoState);
    if (fresh) {
      it->second = r.add_state();
      if (a.is_final(s)) r.set_final(it->second, pending + t.final_output(s));
      queue.emplace_back(s, pending);
    }
    return it->second;
  };
  for (StateId s : a.initial()) r.add_initial(intern(s, Word()));
  while (!queue.empty()) {
    const auto [s, pending] = queue.front();
    queue.pop_front();
    const StateId from = ids.at({s, pending});
    for (EdgeId e : a.out(s)) {
      r.add_transition(from, a.edge(e).label, pending,
                       intern(a.edge(e).dst, t.output(e)));
    }
  }
  return r;
}

Pair PairGenerator::next(PairKind kind) {
  Transducer t1 = random_machine();
  switch (kind) {
    case PairKind::kSameOutputs:
      return Pair{"same", t1, t1};
    case PairKind::kMutated:
      return Pair{"mutated", t1, mutated(t1)};
    case PairKind::kDelayed:
      return Pair{"delayed", t1, delayed(t1)};
    case PairKind::kDelayedMutated:
      return Pair{"delayed-mutated", t1, mutated(delayed(t1))};
    case PairKind::kRandom: {
      GeneratorOptions saved = o_;
      o_.mutation_probability = 1.0;
      Transducer t2 = mutated(t1);
      o_ = saved;
      return Pair{"random", t1, t2};
    }
  }
  return Pair{"same", t1, t1};
}

Pair PairGenerator::next_bounded_joint() {
  std::bernoulli_distribution coin(0.5);
  while (true) {
    Pair p = next(coin(rng_) ? PairKind::kMutated : PairKind::kRandom);
    const auto j = joint_product(p.t1, p.t2);
    if (max_abs_gap(pair_automaton(j))) return p;
  }
}

std::vector<Pair> PairGenerator::corpus(std::size_t n) {
  static constexpr PairKind kKinds[] = {
      PairKind::kMutated, PairKind::kDelayed, PairKind::kDelayedMutated,
      PairKind::kRandom, PairKind::kSameOutputs, PairKind::kMutated,
      PairKind::kDelayedMutated};
  std::vector<Pair> out;
  for (std::size_t i = 0; i < n; ++i) {
    Pair p = next(kKinds[i % std::size(kKinds)]);
    p.name += "#" + std::to_string(i);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace fixtures
