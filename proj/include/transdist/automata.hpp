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

#ifndef TRANSDIST_AUTOMATA_HPP_
#define TRANSDIST_AUTOMATA_HPP_

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "transdist/nfa.hpp"
#include "transdist/words.hpp"

namespace transdist {

// Automaton over input letters.
using Automaton = Nfa<Letter>;

bool accepts(const Automaton& a, std::u32string_view w);
bool is_deterministic(const Automaton& a);
// Accepted words of length <= max_len in shortlex order.
std::vector<Word> enumerate_language(const Automaton& a, std::size_t max_len);

// True iff no word has two accepting runs. Decided on the self-product: a run
// pair that has diverged at least once and reaches a pair of final states
// witnesses ambiguity.
template <class L>
bool is_unambiguous(const Nfa<L>& input) {
  const Nfa<L> a = trim(input);
  using Key = std::tuple<StateId, StateId, bool>;
  std::set<Key> seen;
  std::vector<Key> stack;
  for (StateId p : a.initial()) {
    for (StateId q : a.initial()) {
      Key k{p, q, p != q};
      if (seen.insert(k).second) stack.push_back(k);
    }
  }
  while (!stack.empty()) {
    auto [p, q, diverged] = stack.back();
    stack.pop_back();
    if (diverged && a.is_final(p) && a.is_final(q)) return false;
    for (EdgeId e1 : a.out(p)) {
      for (EdgeId e2 : a.out(q)) {
        if (!(a.edge(e1).label == a.edge(e2).label)) continue;
        Key k{a.edge(e1).dst, a.edge(e2).dst, diverged || e1 != e2};
        if (seen.insert(k).second) stack.push_back(k);
      }
    }
  }
  return true;
}

struct EquivResult {
  bool equivalent = true;
  // Shortest word accepted by exactly one side, when not equivalent.
  std::optional<Word> counterexample;
  explicit operator bool() const { return equivalent; }
};

// Language equality of two unambiguous automata by comparing their exact
// rational path-counting series. Throws InputError if either is ambiguous.
EquivResult equiv_unambiguous(const Automaton& a, const Automaton& b);

}  // namespace transdist

#endif  // TRANSDIST_AUTOMATA_HPP_
