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

#ifndef TRANSDIST_DELAY_HPP_
#define TRANSDIST_DELAY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "transdist/nfa.hpp"
#include "transdist/pair_automaton.hpp"
#include "transdist/words.hpp"

namespace transdist {

class Transducer;

struct WeightedEdge {
  StateId src;
  StateId dst;
  std::int64_t weight;
};

// Range of path weights from the initial states to each state. When some
// reachable cycle has nonzero weight the profile is unbounded and `cycle`
// lists the edge indices of one such closed walk.
struct GapProfile {
  bool bounded = true;
  std::vector<bool> reachable;
  std::vector<std::int64_t> min_gap;
  std::vector<std::int64_t> max_gap;
  std::vector<std::size_t> cycle;
};

GapProfile gap_profile(std::size_t num_states,
                       const std::vector<WeightedEdge>& edges,
                       const std::vector<StateId>& initial);

// Edge weight |left| - |right|.
GapProfile gap_profile(const PairAutomaton& p);

// Delay at every state when all paths to it agree; nullopt otherwise.
std::optional<std::vector<std::int64_t>> compute_delays(const PairAutomaton& p);

// Every cycle has zero delay.
bool bounded_delay(const PairAutomaton& p);

// Largest |gap| over all states, or nullopt when unbounded.
std::optional<std::uint64_t> max_abs_gap(const PairAutomaton& p);

// sup over the common domain of ||T1(w)| - |T2(w)||; infinity when the
// domains differ or the gap is unbounded.
ExtendedNat length_close(const Transducer& t1, const Transducer& t2);

}  // namespace transdist

#endif  // TRANSDIST_DELAY_HPP_
