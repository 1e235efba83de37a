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

#ifndef TRANSDIST_METRICS_HPP_
#define TRANSDIST_METRICS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transdist/words.hpp"

namespace transdist {

enum class MetricId {
  kHamming,
  kTransposition,
  kConjugacy,
  kLevenshtein,
  kLcs,
  kDamerauLevenshtein,
  kLength,
  kDiscrete,
};

// All metrics, in declaration order.
const std::vector<MetricId>& all_metrics();
// The seven metrics with a finite edit-operation set (all but discrete).
const std::vector<MetricId>& edit_graph_metrics();

std::string_view metric_name(MetricId m);
// Accepts the names printed by metric_name plus the short aliases
// "damerau", "dl", "lev", "ham", "trans", "conj", "len".
MetricId parse_metric(std::string_view name);

// Exact distance between two words. Infinity when no edit sequence exists.
ExtendedNat word_distance(MetricId m, std::u32string_view u,
                          std::u32string_view v);
// Same, after checking both words are over `alphabet`.
ExtendedNat word_distance(MetricId m, std::u32string_view u,
                          std::u32string_view v, const Alphabet& alphabet);

ExtendedNat hamming_distance(std::u32string_view u, std::u32string_view v);
ExtendedNat transposition_distance(std::u32string_view u,
                                   std::u32string_view v);
ExtendedNat conjugacy_distance(std::u32string_view u, std::u32string_view v);
std::uint64_t levenshtein_distance(std::u32string_view u,
                                   std::u32string_view v);
std::uint64_t lcs_distance(std::u32string_view u, std::u32string_view v);
// Unrestricted variant: adjacent transpositions may be interleaved with
// insertions and deletions.
std::uint64_t damerau_levenshtein_distance(std::u32string_view u,
                                           std::u32string_view v);

// Breadth-first search over the metric's edit graph. Intermediate words are
// limited to length max_len (default: max(|u|,|v|) + 2) and to letters of u,
// v, and `extra`. Returns nullopt when the distance exceeds `budget`.
std::optional<std::uint64_t> oracle_distance(MetricId m, std::u32string_view u,
                                             std::u32string_view v,
                                             std::uint64_t budget,
                                             std::optional<std::size_t> max_len =
                                                 std::nullopt,
                                             const Alphabet& extra = {});

// Every word within `budget` edits of `source`, with its distance. Words are
// over `alphabet` and of length at most max_len.
std::map<Word, std::uint64_t> oracle_ball(MetricId m, const Word& source,
                                          const Alphabet& alphabet,
                                          std::uint64_t budget,
                                          std::size_t max_len);

// Occurrence count of each alphabet letter. Throws InputError on a letter
// outside the alphabet.
std::vector<std::int64_t> alphabetic_vector(std::u32string_view u,
                                            const Alphabet& alphabet);

struct MetricOrderReport {
  bool ok = true;
  std::size_t checked = 0;
  // First violated inequality and the pair it failed on.
  std::string violation;
  WordPair pair;
};

// Checks d_len <= d <= d_discrete for every edit metric d, together with
//   d_l <= d_lcs <= 2 d_l,   d_dl <= d_l <= 2 d_dl,
//   d_l <= d_h <= 2 d_t,     d_l <= 2 d_c
// on every sample.
MetricOrderReport metric_order_check(const std::vector<WordPair>& samples);

}  // namespace transdist

#endif  // TRANSDIST_METRICS_HPP_
