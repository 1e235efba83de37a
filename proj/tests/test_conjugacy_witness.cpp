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

#include <set>
#include <vector>

#include "doctest.h"
#include "transdist/closeness.hpp"
#include "transdist/expression.hpp"
#include "transdist/metrics.hpp"
#include "transdist/pair_automaton.hpp"
#include "transdist/witness.hpp"

using namespace transdist;

namespace {

ExprPtr at(const char32_t* l, const char32_t* r) { return PairExpr::atom(l, r); }

std::set<WordPair> pairs_of(const ExprPtr& e, std::size_t n) {
  return enumerate_pairs(normalize_pair_automaton(expr_automaton(e)), n);
}

}  // namespace

TEST_CASE("expression constructors simplify") {
  const ExprPtr e = PairExpr::concat(
      {at(U"a", U"b"), PairExpr::star(PairExpr::sum({at(U"ab", U"ba"),
                                                    PairExpr::one()}))});
  CHECK(to_string(e) == "(a,b) ((ab,ba) + ())*");
  CHECK(expr_size(e) == 6);
  CHECK(PairExpr::concat({at(U"a", U"b"), PairExpr::empty()})->kind() ==
        PairExpr::Kind::kEmpty);
  CHECK(PairExpr::concat({at(U"a", U"b"), at(U"c", U"")})->label().left ==
        U"ac");
  CHECK(PairExpr::sum({at(U"a", U"b"), PairExpr::empty()})->kind() ==
        PairExpr::Kind::kAtom);
  CHECK(PairExpr::star(PairExpr::one())->is_one());
}

TEST_CASE("state elimination preserves the relation") {
  PairAutomaton raw;
  const StateId s = raw.add_state(), t = raw.add_state();
  raw.add_initial(s);
  raw.set_final(t);
  raw.add_edge(s, PairLabel{U"a", U"", {}}, t);
  raw.add_edge(t, PairLabel{U"b", U"bb", {}}, t);
  raw.add_edge(t, PairLabel{U"", U"a", {}}, s);
  const PairAutomaton p = normalize_pair_automaton(raw);
  const ExprPtr e = state_elimination(p);
  CHECK(pairs_of(e, 6) == enumerate_pairs(p, 6));
}

TEST_CASE("sum-free decomposition preserves the relation") {
  const ExprPtr e = PairExpr::star(
      PairExpr::sum({at(U"a", U"b"), PairExpr::concat({at(U"b", U""),
                                                       at(U"", U"a")})}));
  const auto parts = sumfree_decompose(e);
  REQUIRE_FALSE(parts.empty());
  std::vector<ExprPtr> summands;
  for (const auto& s : parts) {
    CHECK(s->constants.size() == s->star_bodies.size() + 1);
    summands.push_back(to_expr(*s));
    CHECK(enumerate_pairs(sumfree_automaton(*s), 4) == pairs_of(to_expr(*s), 4));
  }
  CHECK(pairs_of(PairExpr::sum(summands), 5) == pairs_of(e, 5));
  CHECK_THROWS_AS(sumfree_decompose(e, 1), ResourceError);
}

TEST_CASE("sum-free measures") {
  const auto parts = sumfree_decompose(PairExpr::concat(
      {at(U"ab", U"c"), PairExpr::star(at(U"a", U"aa")), at(U"", U"b")}));
  REQUIRE(parts.size() == 1);
  CHECK(star_count(*parts[0]) == 1);
  // (ab,c), the body (a,aa) and (,b).
  CHECK(constant_length(*parts[0]) == 7);
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root(U"abab") == U"ab");
  CHECK(primitive_root(U"aaa") == U"a");
  CHECK(primitive_root(U"aba") == U"aba");
}

TEST_CASE("witness families of a conjugate pair") {
  const PairWitnesses w = pair_witnesses(U"ab", U"ba");
  CHECK(w.conjugate);
  REQUIRE(w.inner.size() == 1);
  REQUIRE(w.outer.size() == 1);
  for (std::size_t k = 0; k < 4; ++k) {
    const Word z = w.inner[0].member(k);
    CHECK(Word(U"ab") + z == z + Word(U"ba"));
    const Word y = w.outer[0].member(k);
    CHECK(y + Word(U"ab") == Word(U"ba") + y);
  }
  CHECK_FALSE(pair_witnesses(U"ab", U"aa").conjugate);
  const PairWitnesses eq = pair_witnesses(U"abab", U"abab");
  REQUIRE_FALSE(eq.inner.empty());
  CHECK(eq.inner[0].period == U"ab");
}

TEST_CASE("witness verification is exact") {
  const auto parts = sumfree_decompose(PairExpr::star(at(U"ab", U"ba")));
  REQUIRE(parts.size() == 1);
  CHECK(verify_witness(*parts[0], U"a", WitnessSide::kInner));
  CHECK(verify_witness(*parts[0], U"aba", WitnessSide::kInner));
  CHECK_FALSE(verify_witness(*parts[0], U"b", WitnessSide::kInner));
  CHECK(verify_witness(*parts[0], U"b", WitnessSide::kOuter));
  const WitnessSearch s = common_witness(*parts[0]);
  CHECK(s.status == WitnessSearch::Status::kWitness);
  CHECK(verify_witness(*parts[0], s.witness.z, s.witness.side));
}

TEST_CASE("no common witness across different rotations") {
  // (ab, ba) and (abc, cab) share no witness.
  const auto parts = sumfree_decompose(
      PairExpr::concat({PairExpr::star(at(U"ab", U"ba")), at(U"abc", U"cab")}));
  REQUIRE(parts.size() == 1);
  const WitnessSearch s = common_witness(*parts[0]);
  REQUIRE(s.status == WitnessSearch::Status::kNone);
  REQUIRE(s.pair.has_value());
  CHECK_FALSE(pair_witnesses(s.pair->left, s.pair->right).conjugate);
}

TEST_CASE("conjugacy closeness") {
  const Closeness c = close_conjugacy(PairExpr::star(at(U"ab", U"ba")));
  CHECK(c.verdict == Verdict::kClose);
  CHECK(c.bound == ExtendedNat(1));
  const Closeness shifted = close_conjugacy(PairExpr::concat(
      {at(U"a", U""), PairExpr::star(at(U"ab", U"ab")), at(U"", U"a")}));
  CHECK(shifted.verdict == Verdict::kClose);
  const Closeness n = close_conjugacy(PairExpr::star(at(U"a", U"b")));
  CHECK(n.verdict == Verdict::kNotClose);
}

TEST_CASE("levenshtein closeness bounds") {
  const ExprPtr swap = PairExpr::star(at(U"ab", U"ba"));
  const Closeness l = close_levenshtein(swap);
  CHECK(l.verdict == Verdict::kClose);
  CHECK(l.bound == ExtendedNat(2));
  const Closeness lcs = close_levenshtein(swap, MetricId::kLcs);
  CHECK(lcs.verdict == Verdict::kClose);
  CHECK(lcs.bound == ExtendedNat(4));
  // Pairs ((ab)^n, (ba)^n) are at levenshtein distance 2 for n >= 1.
  CHECK(levenshtein_distance(U"ababab", U"bababa") <= l.bound.value());
  const Closeness n = close_levenshtein(PairExpr::star(at(U"a", U"b")));
  CHECK(n.verdict == Verdict::kNotClose);
  CHECK_FALSE(n.diagnostic.empty());
}
