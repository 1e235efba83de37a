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

#ifndef TRANSDIST_TRANSDUCER_HPP_
#define TRANSDIST_TRANSDUCER_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "transdist/automata.hpp"
#include "transdist/pair_automaton.hpp"
#include "transdist/words.hpp"

namespace transdist {

// One-way transducer: an automaton over input letters with an output word
// on every transition and on every final state. Only unambiguous machines
// are accepted by validate(); sequential ones are those whose automaton is
// deterministic.
class Transducer {
 public:
  Transducer() = default;
  Transducer(Alphabet in, Alphabet out)
      : in_(std::move(in)), out_(std::move(out)) {}

  StateId add_state();
  void add_initial(StateId s) { automaton_.add_initial(s); }
  void set_final(StateId s, Word output = Word());
  EdgeId add_transition(StateId src, Letter input, Word output, StateId dst);

  const Automaton& automaton() const { return automaton_; }
  const Word& output(EdgeId e) const { return outputs_[e]; }
  const Word& final_output(StateId s) const { return final_outputs_[s]; }
  const Alphabet& in_alphabet() const { return in_; }
  const Alphabet& out_alphabet() const { return out_; }
  std::size_t num_states() const { return automaton_.num_states(); }
  bool is_sequential() const { return is_deterministic(automaton_); }

  // Throws InputError when a letter lies outside the declared alphabets or
  // the underlying automaton is ambiguous.
  void validate() const;

  // Copy restricted to accessible and coaccessible states.
  Transducer trimmed() const;

 private:
  Alphabet in_, out_;
  Automaton automaton_;
  std::vector<Word> outputs_;
  std::vector<Word> final_outputs_;
};

// Output on w, or nullopt when w is outside the domain. Throws IntegrityError
// if two accepting runs are found.
std::optional<Word> eval(const Transducer& t, std::u32string_view w);

EquivResult domain_equivalence(const Transducer& t1, const Transducer& t2);
bool same_domain(const Transducer& t1, const Transducer& t2);

struct JointLabel {
  Letter input;
  EdgeId e1;
  EdgeId e2;
  friend bool operator==(const JointLabel&, const JointLabel&) = default;
};

// Common deterministic skeleton of two transducers: states are pairs of
// states, one transition per pair of same-letter transitions, so it is a DFA
// over pairs of transitions. Both output functions are carried along.
struct JointMachine {
  Nfa<JointLabel> dfa;
  std::vector<Word> out1, out2;  // per edge
  std::vector<Word> fin1, fin2;  // per state, meaningful on finals
  std::vector<std::pair<StateId, StateId>> origin;
  Alphabet in_alphabet, out_alphabet;
};

// Throws InputError when the domains differ.
JointMachine joint_product(const Transducer& t1, const Transducer& t2);
// Product on the intersection of the domains, no domain check.
JointMachine joint_product_unchecked(const Transducer& t1,
                                     const Transducer& t2);

// Pair automaton of the two output functions, normalized and trimmed.
PairAutomaton pair_automaton(const JointMachine& j);

// Input letter standing for edge e in nivat_split.
Letter nivat_letter(EdgeId e);

// Two transducers reading the edges of p as input letters and writing the
// left and right components respectively.
std::pair<Transducer, Transducer> nivat_split(const PairAutomaton& p);

}  // namespace transdist

#endif  // TRANSDIST_TRANSDUCER_HPP_
