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

#ifndef TRANSDIST_KAPPROX_HPP_
#define TRANSDIST_KAPPROX_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "transdist/closeness.hpp"
#include "transdist/metrics.hpp"
#include "transdist/nfa.hpp"
#include "transdist/transducer.hpp"
#include "transdist/words.hpp"

namespace transdist {

// Unmatched output of a run of the k-approximation. For the edit metrics
// `left` and `right` are the pending parts of the two outputs; at most one
// is nonempty for the metrics whose alignments can be cut one side at a
// time. For conjugacy `mode` records the phase and `stored` the rotated
// block.
struct KConfig {
  enum Mode : std::uint8_t { kEdit, kStore, kMatchLeft, kMatchRight };
  Mode mode = kEdit;
  Word stored;
  Word left;
  Word right;
  friend auto operator<=>(const KConfig&, const KConfig&) = default;
  friend bool operator==(const KConfig&, const KConfig&) = default;
};

struct DistanceLabel {
  Letter input = 0;
  std::uint64_t weight = 0;
  EdgeId joint_edge = -1;
};

// Weighted automaton over (N, min, +). States pair a joint-machine state
// with a configuration and the budget spent so far.
struct DistanceAutomaton {
  MetricId metric = MetricId::kLevenshtein;
  std::uint64_t k = 0;
  Nfa<DistanceLabel> automaton;
  std::vector<std::optional<std::uint64_t>> final_weight;
  std::vector<StateId> joint_state;
  std::vector<KConfig> config;
  std::vector<std::uint64_t> spent;

  // Least weight of an accepting run on w, nullopt when there is none.
  std::optional<std::uint64_t> min_weight(std::u32string_view w) const;
};

// Throws UnsupportedError when the outputs of j have unbounded length
// difference, and ResourceError past the state ceiling.
DistanceAutomaton build_kapprox(MetricId m, const JointMachine& j,
                                std::uint64_t k);

struct KCloseResult {
  bool close = false;
  // Input on which the outputs are more than k apart (or outside one of the
  // domains).
  std::optional<Word> counterexample;
};

KCloseResult kclose_check(MetricId m, const Transducer& t1,
                          const Transducer& t2, std::uint64_t k);
bool kclose(MetricId m, const Transducer& t1, const Transducer& t2,
            std::uint64_t k);

struct DistanceResult {
  Verdict verdict = Verdict::kUnknown;  // kClose iff value is finite
  ExtendedNat value = ExtendedNat::infinity();
  // Input on which the distance is attained, when finite and nonzero.
  std::optional<Word> witness;
  Closeness closeness;
  // Set when the search ran out of resources.
  std::string diagnostic;

  bool unknown() const { return verdict == Verdict::kUnknown; }
  // The resource diagnostic if any, else the closeness diagnostic.
  const std::string& reason() const {
    return diagnostic.empty() ? closeness.diagnostic : diagnostic;
  }
  // "inf", "unknown" or the value.
  std::string to_string() const;
};

// Closeness first, through the metric's own decider, then the least k with
// kclose by exponential and binary search.
DistanceResult distance(MetricId m, const Transducer& t1, const Transducer& t2);

// The closeness decider distance() uses for m.
Closeness decide_closeness(MetricId m, const Transducer& t1,
                           const Transducer& t2);

}  // namespace transdist

#endif  // TRANSDIST_KAPPROX_HPP_
