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

#ifndef TRANSDIST_WITNESS_HPP_
#define TRANSDIST_WITNESS_HPP_

#include <optional>
#include <vector>

#include "transdist/closeness.hpp"
#include "transdist/expression.hpp"
#include "transdist/metrics.hpp"
#include "transdist/pair_automaton.hpp"

namespace transdist {

// Inner witnesses satisfy u z = z v, outer ones z u = v z.
enum class WitnessSide { kInner, kOuter };

struct Witness {
  Word z;
  WitnessSide side = WitnessSide::kInner;
};

// The words x (period x)^k, k >= 0, or every word when `universal`.
struct WitnessFamily {
  Word x;
  Word period;
  WitnessSide side = WitnessSide::kInner;
  bool universal = false;

  Word member(std::size_t k) const;
};

struct PairWitnesses {
  bool conjugate = false;
  std::vector<WitnessFamily> inner;
  std::vector<WitnessFamily> outer;
};

// All witnesses of one pair, grouped into families. For u = xy, v = yx the
// inner family is x (yx)*; outer families come from v = xy, u = yx. Equal
// nonempty words give rho* with rho the primitive root.
PairWitnesses pair_witnesses(std::u32string_view u, std::u32string_view v);

Word primitive_root(std::u32string_view w);

// Exact check that z witnesses every pair of the relation: the relation
// (ε,z)·E·(z,ε) (inner) or (z,ε)·E·(ε,z) (outer) must be the identity.
bool verify_witness(const PairAutomaton& e, const Word& z, WitnessSide side);
bool verify_witness(const SumfreeExpr& e, const Word& z, WitnessSide side);

struct WitnessSearch {
  enum class Status { kWitness, kNone, kUnknown };
  Status status = Status::kUnknown;
  Witness witness;
  // kNone: a generated pair that is not conjugate. Otherwise the pair whose
  // families were searched.
  std::optional<PairLabel> pair;
  // kUnknown: the shortest family that had no verified member.
  std::optional<WitnessFamily> unverified;
  // Largest repetition count tried.
  std::size_t cutoff = 0;
};

// Common inner or outer witness of L(e). Candidates are members of the
// families of one generated pair u != v with repetition count up to
// 1 + (constant letters) + (stars), each verified exactly. When none
// verifies, short generated pairs are scanned for one that is not conjugate
// before giving up with kUnknown.
WitnessSearch common_witness(const SumfreeExpr& e);

// Close iff every sum-free summand has a common witness; the bound is the
// longest witness.
Closeness close_conjugacy(const ExprPtr& e);

// Close iff every starred body of every sum-free summand has a common
// witness. Bound per summand: the edit distance of its constants plus twice
// the witness lengths (doubled again for lcs).
Closeness close_levenshtein(const ExprPtr& e,
                            MetricId m = MetricId::kLevenshtein);

}  // namespace transdist

#endif  // TRANSDIST_WITNESS_HPP_
