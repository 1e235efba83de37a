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

#ifndef TRANSDIST_SUBSTITUTION_HPP_
#define TRANSDIST_SUBSTITUTION_HPP_

#include <cstdint>
#include <optional>

#include "transdist/closeness.hpp"
#include "transdist/metrics.hpp"
#include "transdist/pair_automaton.hpp"
#include "transdist/transducer.hpp"

namespace transdist {

// Delay-aligned core and borders of a loop pair (u, v) with |u| = |v| > |d|.
// For d >= 0: interior = (u[1..n-d], v[d+1..n]), lborder = v[1..d],
// rborder = u[n-d+1..n]; mirrored for d < 0. Throws InputError otherwise.
WordPair interior(std::u32string_view u, std::u32string_view v, std::int64_t d);
Word lborder(std::u32string_view u, std::u32string_view v, std::int64_t d);
Word rborder(std::u32string_view u, std::u32string_view v, std::int64_t d);

// Pair automaton accepting interior_d(u, v) for every loop (u, v) at q that
// stays inside the strongly connected component of q. `p` must be
// normalized.
PairAutomaton interior_gadget(const PairAutomaton& p, StateId q, std::int64_t d);

// Hamming distance is bounded iff outputs always have equal length and every
// loop interior is trivial.
Closeness close_hamming(const Transducer& t1, const Transducer& t2);

// Transposition distance is bounded iff all output pairs are permutations,
// every loop interior is trivial, and the borders of each loop are balanced
// by the outputs leading to its state.
Closeness close_transposition(const Transducer& t1, const Transducer& t2);

struct SubstDistance {
  ExtendedNat value = ExtendedNat::infinity();
  // Input realizing the value when it is finite.
  std::optional<Word> witness;
  Closeness closeness;
};

// Exact Hamming or transposition distance. When close, the synchronized pair
// automaton loops only through equal letter pairs, so its condensation is
// acyclic and the maximum cost path is found by memoized search over the
// unbalanced leftovers.
SubstDistance distance_subst(MetricId m, const Transducer& t1,
                             const Transducer& t2);

bool kclose_subst(MetricId m, const Transducer& t1, const Transducer& t2,
                  std::uint64_t k);

// Certificates shared with the generic deciders. For a closed walk through
// the pair automaton: shortest prefix and suffix around its first state,
// with the prefix extended by copies of the loop until the output-length
// difference grows strictly with every pump, starting at the first
// instance.
PumpCertificate pump_from_cycle(const PairAutomaton& p,
                                const std::vector<EdgeId>& cycle);
// Single input on which the two outputs have different lengths, if any.
std::optional<Word> unequal_length_input(const PairAutomaton& p);

}  // namespace transdist

#endif  // TRANSDIST_SUBSTITUTION_HPP_
