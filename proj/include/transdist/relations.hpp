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

#ifndef TRANSDIST_RELATIONS_HPP_
#define TRANSDIST_RELATIONS_HPP_

#include <cstdint>
#include <optional>

#include "transdist/kapprox.hpp"
#include "transdist/metrics.hpp"
#include "transdist/pair_automaton.hpp"
#include "transdist/words.hpp"

namespace transdist {

// Rational relation given by a normalized, trimmed pair automaton.
// `generated_by` is set on the unit spheres built by make_distance_relation.
struct RationalRelation {
  Alphabet left_alphabet;
  Alphabet right_alphabet;
  PairAutomaton pairs;
  std::optional<MetricId> generated_by;
};

// Normalizes and trims `raw`. Throws InputError when a label uses a letter
// outside the given alphabets.
RationalRelation make_relation(const PairAutomaton& raw, Alphabet left,
                               Alphabet right);

RationalRelation identity_relation(const Alphabet& alphabet);
RationalRelation relation_union(const RationalRelation& r,
                                const RationalRelation& s);

// The pairs at distance exactly 1. Throws UnsupportedError for the discrete
// metric.
RationalRelation make_distance_relation(MetricId m, const Alphabet& alphabet);

// Pairs (u, w) with (u, v) in r and (v, w) in s, i.e. s after r. Throws
// InputError when the right alphabet of r is not contained in the left
// alphabet of s.
RationalRelation compose(const RationalRelation& r, const RationalRelation& s);
// s composed n times; the identity for n = 0.
RationalRelation power(const RationalRelation& s, std::size_t n);
// (s ∪ identity) composed n times.
RationalRelation power_upto(const RationalRelation& s, std::size_t n);

struct ContainmentResult {
  bool contained = true;
  std::optional<WordPair> counterexample;  // in r, not in s
};

// r ⊆ s for relations of bounded delay, through their padded letter-to-letter
// encodings. Throws UnsupportedError when either delay is unbounded.
ContainmentResult contained(const RationalRelation& r, const RationalRelation& s);

struct DiameterResult {
  DistanceResult distance;
  std::optional<WordPair> witness;  // a pair at the diameter
};

DiameterResult diameter(const RationalRelation& r, MetricId m);

struct IndexOptions {
  // Required when s was not built by make_distance_relation(declared).
  bool assert_metrizable = false;
  // The search stops at max(diameter, max_index).
  std::size_t max_index = 8;
};

struct IndexResult {
  Verdict verdict = Verdict::kUnknown;  // kClose iff the index is finite
  ExtendedNat value = ExtendedNat::infinity();
  DiameterResult diameter;
  bool experimental = false;  // declared metric is the length metric
  std::string diagnostic;
  std::string to_string() const;
};

// Least k with r ⊆ (s ∪ identity)^k, or infinity when the diameter of r
// under the declared metric is infinite.
IndexResult index(const RationalRelation& r, const RationalRelation& s,
                  MetricId declared, const IndexOptions& options = {});

}  // namespace transdist

#endif  // TRANSDIST_RELATIONS_HPP_
