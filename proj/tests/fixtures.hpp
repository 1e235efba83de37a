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

// Shared test fixtures: the worked-example machines, word enumeration,
// brute-force distances, and a seeded generator of transducer pairs.

#ifndef TRANSDIST_TESTS_FIXTURES_HPP_
#define TRANSDIST_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "transdist/metrics.hpp"
#include "transdist/relations.hpp"
#include "transdist/transducer.hpp"

namespace fixtures {

using transdist::Alphabet;
using transdist::ExtendedNat;
using transdist::MetricId;
using transdist::RationalRelation;
using transdist::Transducer;
using transdist::Word;

// T1 keeps the letters at odd positions, T2 those at even positions, T3
// erases b. T4 writes one letter per block of equal input letters, T5 the
// complemented letter.
Transducer odd_positions();
Transducer even_positions();
Transducer erase_b();
Transducer block_letters();
Transducer block_letters_complement();

// Directory holding the .fst and .rel files.
std::string data_dir();

// All words of length <= max_len, shortlex order.
std::vector<Word> all_words(const Alphabet& a, std::size_t max_len);

// sup over inputs of length <= max_len in either domain of the output
// distance; infinity if some input lies in only one domain.
ExtendedNat enumerated_distance(MetricId m, const Transducer& t1,
                                const Transducer& t2, std::size_t max_len,
                                Word* argmax = nullptr);

// Deletes the first k occurrences of a (defined on words with at least k).
RationalRelation delete_first_a(int k);
RationalRelation delete_all_a();

struct Pair {
  std::string name;
  Transducer t1;
  Transducer t2;
};

enum class PairKind {
  kSameOutputs,   // identical functions on the same automaton
  kMutated,       // a few outputs edited
  kDelayed,       // second machine emits each output one step late
  kDelayedMutated,
  kRandom,        // independent outputs
};

struct GeneratorOptions {
  std::size_t max_states = 5;
  std::size_t max_output = 2;
  double edge_probability = 0.8;
  double mutation_probability = 0.3;
};

class PairGenerator {
 public:
  explicit PairGenerator(std::uint64_t seed, GeneratorOptions o = {})
      : rng_(seed), o_(o) {}

  Pair next(PairKind kind);
  // Pairs on one shared automaton with bounded output-length difference.
  Pair next_bounded_joint();
  // Mixed corpus; the kinds cycle so every kind is represented.
  std::vector<Pair> corpus(std::size_t n);

  std::mt19937_64& rng() { return rng_; }

 private:
  Transducer random_machine();
  Word random_word(std::size_t min_len, std::size_t max_len);
  Word mutate(const Word& w);
  Transducer mutated(const Transducer& t);
  static Transducer delayed(const Transducer& t);

  std::mt19937_64 rng_;
  GeneratorOptions o_;
};

}  // namespace fixtures

#endif  // TRANSDIST_TESTS_FIXTURES_HPP_
