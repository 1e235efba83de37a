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

#ifndef TRANSDIST_PAIR_AUTOMATON_HPP_
#define TRANSDIST_PAIR_AUTOMATON_HPP_

#include <compare>
#include <optional>
#include <set>
#include <vector>

#include "transdist/nfa.hpp"
#include "transdist/words.hpp"

namespace transdist {

// Edge label of a pair automaton. `input` records the input letters read on
// the edge (empty on the helper edges that normalization inserts); it never
// takes part in the relation itself.
struct PairLabel {
  Word left;
  Word right;
  Word input;
  friend bool operator==(const PairLabel&, const PairLabel&) = default;
  friend auto operator<=>(const PairLabel&, const PairLabel&) = default;
};

// Automaton over pairs of words. Normalized automata have at most one letter
// per component on every edge and no final outputs.
using PairAutomaton = Nfa<PairLabel>;

// Splits every edge into single-letter components (left-aligned, input kept
// on the first piece), folds the final outputs into a fresh terminal state
// reached through an edge carrying the final pair, and trims. `final_output`
// is indexed by state; missing entries mean (ε, ε).
PairAutomaton normalize_pair_automaton(
    const PairAutomaton& raw, const std::vector<PairLabel>& final_output = {});

bool is_normalized(const PairAutomaton& p);

// Every accepted pair with both sides of length <= max_len.
std::set<WordPair> enumerate_pairs(const PairAutomaton& p, std::size_t max_len);

// Concatenated labels along a path of edges.
PairLabel path_label(const PairAutomaton& p, const std::vector<EdgeId>& path);

// Shortest edge path from an initial state to `target`, and from `source` to
// a final state. Empty optional if none exists.
std::optional<std::vector<EdgeId>> path_from_initial(const PairAutomaton& p,
                                                     StateId target);
std::optional<std::vector<EdgeId>> path_to_final(const PairAutomaton& p,
                                                 StateId source);

// Accepted pair (u, v) with u != v, found by breadth-first search over the
// unmatched leftover, together with the input it was read on.
std::optional<PairLabel> find_distinct_pair(const PairAutomaton& p);

// True iff every accepted pair has equal components.
bool is_identity_relation(const PairAutomaton& p);

// True iff |u| = |v| for every accepted pair.
bool is_length_preserving(const PairAutomaton& p);

// Letter-to-letter form of a normalized pair automaton. Each edge carries one
// aligned letter pair or is silent; after the last letter of the shorter side
// the pad letter fills in. Every accepted pair has exactly one aligned
// encoding, so inclusion of encodings is inclusion of relations.
struct SyncLabel {
  Letter left = 0;
  Letter right = 0;
  bool silent = true;
  EdgeId origin = -1;  // pair-automaton edge, -1 on padding edges
  friend bool operator==(const SyncLabel&, const SyncLabel&) = default;
};
using SyncAutomaton = Nfa<SyncLabel>;

// Throws UnsupportedError when the unmatched leftover would exceed
// max_leftover, i.e. the relation does not have delay bounded by it.
SyncAutomaton synchronize(const PairAutomaton& p, std::size_t max_leftover);

struct InclusionResult {
  bool included = true;
  // Silent edges included; a path of `a` whose encoding `b` rejects.
  std::vector<EdgeId> counterexample;
};

// L(a) ⊆ L(b) by on-the-fly subset construction over `b`.
InclusionResult sync_included(const SyncAutomaton& a, const SyncAutomaton& b);

// Decodes a path of a synchronized automaton back to the pair it encodes.
WordPair sync_path_pair(const SyncAutomaton& s, const std::vector<EdgeId>& path);

}  // namespace transdist

#endif  // TRANSDIST_PAIR_AUTOMATON_HPP_
