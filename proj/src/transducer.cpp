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

#include "transdist/transducer.hpp"

#include <deque>
#include <map>

namespace transdist {

StateId Transducer::add_state() {
  final_outputs_.emplace_back();
  return automaton_.add_state();
}

void Transducer::set_final(StateId s, Word output) {
  automaton_.set_final(s);
  final_outputs_.at(s) = std::move(output);
}

EdgeId Transducer::add_transition(StateId src, Letter input, Word output,
                                  StateId dst) {
  outputs_.push_back(std::move(output));
  return automaton_.add_edge(src, input, dst);
}

void Transducer::validate() const {
  for (const auto& e : automaton_.edges()) {
    if (!in_.contains(e.label)) {
      throw InputError("transition reads letter '" + to_utf8(e.label) +
                       "' outside the input alphabet");
    }
  }
  for (const Word& w : outputs_) {
    if (!out_.contains_all(w)) {
      throw InputError("transition writes '" + to_utf8(w) +
                       "' outside the output alphabet");
    }
  }
  for (StateId s = 0; s < static_cast<StateId>(num_states()); ++s) {
    if (automaton_.is_final(s) && !out_.contains_all(final_outputs_[s])) {
      throw InputError("final output outside the output alphabet");
    }
  }
  if (!is_unambiguous(automaton_)) {
    throw InputError("transducer is ambiguous; only unambiguous machines are "
                     "supported");
  }
}

Transducer Transducer::trimmed() const {
  TrimMap m;
  Automaton a = trim(automaton_, &m);
  Transducer t(in_, out_);
  for (std::size_t s = 0; s < a.num_states(); ++s) t.add_state();
  for (StateId s : a.initial()) t.add_initial(s);
  for (StateId s : a.finals()) t.set_final(s, final_outputs_[m.new_to_old[s]]);
  for (EdgeId e = 0; e < static_cast<EdgeId>(a.num_edges()); ++e) {
    t.add_transition(a.edge(e).src, a.edge(e).label,
                     outputs_[m.edge_new_to_old[e]], a.edge(e).dst);
  }
  return t;
}

std::optional<Word> eval(const Transducer& t, std::u32string_view w) {
  const Automaton& a = t.automaton();
  const std::vector<bool> live = coaccessible_states(a);
  std::map<StateId, Word> cur;
  for (StateId s : a.initial()) {
    if (live[s]) cur.emplace(s, Word());
  }
  for (Letter c : w) {
    std::map<StateId, Word> next;
    for (const auto& [s, out] : cur) {
      for (EdgeId e : a.out(s)) {
        const auto& ed = a.edge(e);
        if (ed.label != c || !live[ed.dst]) continue;
        if (!next.emplace(ed.dst, out + t.output(e)).second) {
          throw IntegrityError("eval: two runs reach the same state");
        }
      }
    }
    cur = std::move(next);
  }
  std::optional<Word> result;
  for (const auto& [s, out] : cur) {
    if (!a.is_final(s)) continue;
    if (result) throw IntegrityError("eval: two accepting runs");
    result = out + t.final_output(s);
  }
  return result;
}

EquivResult domain_equivalence(const Transducer& t1, const Transducer& t2) {
  return equiv_unambiguous(t1.automaton(), t2.automaton());
}

bool same_domain(const Transducer& t1, const Transducer& t2) {
  return domain_equivalence(t1, t2).equivalent;
}

JointMachine joint_product_unchecked(const Transducer& t1,
                                     const Transducer& t2) {
  const Automaton& a1 = t1.automaton();
  const Automaton& a2 = t2.automaton();
  JointMachine raw;
  std::map<std::pair<StateId, StateId>, StateId> ids;
  std::deque<std::pair<StateId, StateId>> queue;
  auto intern = [&](StateId p, StateId q) {
    auto [it, fresh] = ids.emplace(std::make_pair(p, q), kNoState);
    if (fresh) {
      it->second = raw.dfa.add_state();
      check_ceiling(raw.dfa.num_states(), "joint product");
      raw.origin.emplace_back(p, q);
      const bool fin = a1.is_final(p) && a2.is_final(q);
      raw.dfa.set_final(it->second, fin);
      raw.fin1.push_back(fin ? t1.final_output(p) : Word());
      raw.fin2.push_back(fin ? t2.final_output(q) : Word());
      queue.emplace_back(p, q);
    }
    return it->second;
  };
  for (StateId p : a1.initial()) {
    for (StateId q : a2.initial()) raw.dfa.add_initial(intern(p, q));
  }
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    const StateId from = ids[{p, q}];
    for (EdgeId e1 : a1.out(p)) {
      for (EdgeId e2 : a2.out(q)) {
        if (a1.edge(e1).label != a2.edge(e2).label) continue;
        const StateId to = intern(a1.edge(e1).dst, a2.edge(e2).dst);
        raw.dfa.add_edge(from, JointLabel{a1.edge(e1).label, e1, e2}, to);
        raw.out1.push_back(t1.output(e1));
        raw.out2.push_back(t2.output(e2));
      }
    }
  }
  TrimMap m;
  JointMachine j;
  j.dfa = trim(raw.dfa, &m);
  for (StateId old : m.new_to_old) {
    j.fin1.push_back(raw.fin1[old]);
    j.fin2.push_back(raw.fin2[old]);
    j.origin.push_back(raw.origin[old]);
  }
  for (EdgeId old : m.edge_new_to_old) {
    j.out1.push_back(raw.out1[old]);
    j.out2.push_back(raw.out2[old]);
  }
  j.in_alphabet = t1.in_alphabet().merged(t2.in_alphabet());
  j.out_alphabet = t1.out_alphabet().merged(t2.out_alphabet());
  return j;
}

JointMachine joint_product(const Transducer& t1, const Transducer& t2) {
  if (!same_domain(t1, t2)) {
    throw InputError("joint_product: the transducers have different domains");
  }
  return joint_product_unchecked(t1, t2);
}

PairAutomaton pair_automaton(const JointMachine& j) {
  PairAutomaton raw;
  for (std::size_t s = 0; s < j.dfa.num_states(); ++s) raw.add_state();
  for (StateId s : j.dfa.initial()) raw.add_initial(s);
  std::vector<PairLabel> finals(j.dfa.num_states());
  for (StateId s = 0; s < static_cast<StateId>(j.dfa.num_states()); ++s) {
    raw.set_final(s, j.dfa.is_final(s));
    finals[s] = PairLabel{j.fin1[s], j.fin2[s], Word()};
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(j.dfa.num_edges()); ++e) {
    const auto& ed = j.dfa.edge(e);
    raw.add_edge(ed.src, PairLabel{j.out1[e], j.out2[e], Word(1, ed.label.input)},
                 ed.dst);
  }
  return normalize_pair_automaton(raw, finals);
}

Letter nivat_letter(EdgeId e) { return static_cast<Letter>(0xF0000 + e); }

namespace {

// Equivalent automaton with one initial state, so that the empty edge word
// has at most one run.
PairAutomaton single_initial(const PairAutomaton& a) {
  if (a.initial().size() <= 1) return a;
  PairAutomaton r = a;
  const StateId s0 = r.add_state();
  r.add_initial(s0);
  for (StateId i : a.initial()) {
    if (a.is_final(i)) r.set_final(s0);
    for (EdgeId e : a.out(i)) r.add_edge(s0, a.edge(e).label, a.edge(e).dst);
  }
  PairAutomaton out;
  for (std::size_t s = 0; s < r.num_states(); ++s) {
    out.add_state();
    out.set_final(static_cast<StateId>(s), r.is_final(static_cast<StateId>(s)));
  }
  out.add_initial(s0);
  for (const auto& e : r.edges()) out.add_edge(e.src, e.label, e.dst);
  return out;
}

}  // namespace

std::pair<Transducer, Transducer> nivat_split(const PairAutomaton& input) {
  const PairAutomaton p = trim(single_initial(trim(input)));
  std::vector<Letter> edge_letters, left, right;
  for (EdgeId e = 0; e < static_cast<EdgeId>(p.num_edges()); ++e) {
    edge_letters.push_back(nivat_letter(e));
    const auto& l = p.edge(e).label;
    left.insert(left.end(), l.left.begin(), l.left.end());
    right.insert(right.end(), l.right.begin(), l.right.end());
  }
  const Alphabet in(edge_letters);
  Transducer t1(in, Alphabet(left)), t2(in, Alphabet(right));
  for (std::size_t s = 0; s < p.num_states(); ++s) {
    t1.add_state();
    t2.add_state();
  }
  for (StateId s : p.initial()) {
    t1.add_initial(s);
    t2.add_initial(s);
  }
  for (StateId s : p.finals()) {
    t1.set_final(s);
    t2.set_final(s);
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(p.num_edges()); ++e) {
    const auto& ed = p.edge(e);
    t1.add_transition(ed.src, nivat_letter(e), ed.label.left, ed.dst);
    t2.add_transition(ed.src, nivat_letter(e), ed.label.right, ed.dst);
  }
  return {std::move(t1), std::move(t2)};
}

}  // namespace transdist
