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
#include "fixtures.hpp"
#include "transdist/automata.hpp"
#include "transdist/delay.hpp"
#include "transdist/nfa.hpp"
#include "transdist/pair_automaton.hpp"

using namespace transdist;

namespace {

// Words over {a, b} with an even number of a.
Automaton even_a() {
  Automaton a;
  const StateId e = a.add_state(), o = a.add_state();
  a.add_initial(e);
  a.set_final(e);
  a.add_edge(e, U'a', o);
  a.add_edge(o, U'a', e);
  a.add_edge(e, U'b', e);
  a.add_edge(o, U'b', o);
  return a;
}

PairLabel pl(Word l, Word r) { return PairLabel{std::move(l), std::move(r), {}}; }

// One state looping on each label.
PairAutomaton loops(const std::vector<PairLabel>& labels) {
  PairAutomaton p;
  const StateId q = p.add_state();
  p.add_initial(q);
  p.set_final(q);
  for (const auto& l : labels) p.add_edge(q, l, q);
  return p;
}

}  // namespace

TEST_CASE("acceptance and enumeration") {
  const Automaton a = even_a();
  CHECK(accepts(a, U""));
  CHECK(accepts(a, U"abab"));
  CHECK_FALSE(accepts(a, U"ab"));
  CHECK(is_deterministic(a));
  const auto words = enumerate_language(a, 2);
  CHECK(words == std::vector<Word>{U"", U"b", U"aa", U"bb"});
}

TEST_CASE("trim drops useless states and keeps the map") {
  Automaton a = even_a();
  const StateId dead = a.add_state();
  const StateId unreachable = a.add_state();
  a.add_edge(0, U'c', dead);
  a.add_edge(unreachable, U'a', 0);
  TrimMap map;
  const Automaton t = trim(a, &map);
  CHECK(t.num_states() == 2);
  CHECK(t.num_edges() == 4);
  CHECK(map.old_to_new[dead] == kNoState);
  CHECK(map.old_to_new[unreachable] == kNoState);
  CHECK(map.new_to_old.size() == 2);
}

TEST_CASE("strongly connected components") {
  // 0 -> 1 <-> 2 -> 3, self-loop on 3.
  const std::vector<std::vector<StateId>> succ{{1}, {2}, {1, 3}, {3}};
  const auto scc = scc_decompose(succ);
  CHECK(scc.num_components() == 3);
  CHECK(scc.component[1] == scc.component[2]);
  CHECK(scc.component[0] != scc.component[1]);
  CHECK_FALSE(scc.nontrivial[scc.component[0]]);
  CHECK(scc.nontrivial[scc.component[1]]);
  CHECK(scc.nontrivial[scc.component[3]]);
}

TEST_CASE("ambiguity") {
  Automaton a;
  const StateId s = a.add_state(), x = a.add_state(), f = a.add_state();
  a.add_initial(s);
  a.set_final(f);
  a.add_edge(s, U'a', x);
  a.add_edge(x, U'b', f);
  CHECK(is_unambiguous(a));
  const StateId y = a.add_state();
  a.add_edge(s, U'a', y);
  a.add_edge(y, U'b', f);
  CHECK_FALSE(is_unambiguous(a));
}

TEST_CASE("equivalence of unambiguous automata") {
  const Automaton a = even_a();
  // Same language with a redundant copy of the even state.
  Automaton b;
  const StateId e1 = b.add_state(), o = b.add_state(), e2 = b.add_state();
  b.add_initial(e1);
  b.set_final(e1);
  b.set_final(e2);
  b.add_edge(e1, U'a', o);
  b.add_edge(e1, U'b', e2);
  b.add_edge(e2, U'a', o);
  b.add_edge(e2, U'b', e2);
  b.add_edge(o, U'a', e2);
  b.add_edge(o, U'b', o);
  CHECK(equiv_unambiguous(a, b).equivalent);

  Automaton c = even_a();
  c.set_final(1);  // now every word
  const auto r = equiv_unambiguous(a, c);
  CHECK_FALSE(r.equivalent);
  REQUIRE(r.counterexample.has_value());
  CHECK(*r.counterexample == U"a");
}

TEST_CASE("normalization splits labels and folds final outputs") {
  PairAutomaton raw;
  const StateId q = raw.add_state();
  raw.add_initial(q);
  raw.set_final(q);
  raw.add_edge(q, PairLabel{U"ab", U"c", U"x"}, q);
  const PairAutomaton p = normalize_pair_automaton(raw, {pl(U"", U"dd")});
  CHECK(is_normalized(p));
  CHECK_FALSE(is_normalized(raw));
  const auto pairs = enumerate_pairs(p, 5);
  const std::set<WordPair> expected{{U"", U"dd"}, {U"ab", U"cdd"},
                                    {U"abab", U"ccdd"}};
  CHECK(pairs == expected);
}

TEST_CASE("distinct pairs and identity") {
  const PairAutomaton id =
      normalize_pair_automaton(loops({pl(U"a", U"a"), pl(U"b", U"b")}));
  CHECK(is_identity_relation(id));
  CHECK_FALSE(find_distinct_pair(id).has_value());
  CHECK(is_length_preserving(id));

  const PairAutomaton swap =
      normalize_pair_automaton(loops({pl(U"a", U"a"), pl(U"ab", U"ba")}));
  CHECK_FALSE(is_identity_relation(swap));
  const auto d = find_distinct_pair(swap);
  REQUIRE(d.has_value());
  CHECK(d->left != d->right);
  CHECK(d->left == U"ab");
  CHECK(is_length_preserving(swap));

  const PairAutomaton grow = normalize_pair_automaton(loops({pl(U"a", U"aa")}));
  CHECK_FALSE(is_length_preserving(grow));
}

TEST_CASE("paths through a pair automaton") {
  const PairAutomaton p = normalize_pair_automaton(loops({pl(U"ab", U"ba")}));
  for (StateId s = 0; s < static_cast<StateId>(p.num_states()); ++s) {
    const auto in = path_from_initial(p, s);
    const auto out = path_to_final(p, s);
    REQUIRE(in.has_value());
    REQUIRE(out.has_value());
    std::vector<EdgeId> full = *in;
    full.insert(full.end(), out->begin(), out->end());
    const PairLabel l = path_label(p, full);
    CHECK(l.left.size() == l.right.size());
  }
}

TEST_CASE("gap profiles") {
  const PairAutomaton delayed =
      normalize_pair_automaton(loops({pl(U"ab", U"ba")}));
  const GapProfile g = gap_profile(delayed);
  CHECK(g.bounded);
  CHECK(bounded_delay(delayed));
  CHECK(max_abs_gap(delayed) == 0u);  // labels are left-aligned
  CHECK(compute_delays(delayed).has_value());

  const PairAutomaton grow = normalize_pair_automaton(loops({pl(U"a", U"aa")}));
  const GapProfile h = gap_profile(grow);
  CHECK_FALSE(h.bounded);
  CHECK_FALSE(h.cycle.empty());
  CHECK_FALSE(max_abs_gap(grow).has_value());
  CHECK_FALSE(bounded_delay(grow));
}

TEST_CASE("gap profile on weighted edges") {
  // 0 -(+2)-> 1 -(-1)-> 2, and 0 -(+1)-> 2.
  const GapProfile g =
      gap_profile(3, {{0, 1, 2}, {1, 2, -1}, {0, 2, 1}}, {0});
  CHECK(g.bounded);
  CHECK(g.min_gap[2] == 1);
  CHECK(g.max_gap[2] == 1);
  CHECK(g.max_gap[1] == 2);
  const GapProfile h = gap_profile(2, {{0, 1, 0}, {1, 1, -1}}, {0});
  CHECK_FALSE(h.bounded);
}

TEST_CASE("length closeness of the worked examples") {
  CHECK(length_close(fixtures::odd_positions(), fixtures::even_positions()) ==
        ExtendedNat(1));
  CHECK(length_close(fixtures::block_letters(),
                     fixtures::block_letters_complement()) == ExtendedNat(0));
  CHECK(length_close(fixtures::odd_positions(), fixtures::erase_b())
            .is_infinite());
}

TEST_CASE("synchronized inclusion") {
  const PairAutomaton ab = normalize_pair_automaton(loops({pl(U"a", U"b")}));
  PairAutomaton both_raw;
  const StateId s = both_raw.add_state(), x = both_raw.add_state(),
                y = both_raw.add_state();
  both_raw.add_initial(s);
  both_raw.set_final(s);
  both_raw.set_final(x);
  both_raw.set_final(y);
  both_raw.add_edge(s, pl(U"a", U"b"), x);
  both_raw.add_edge(x, pl(U"a", U"b"), x);
  both_raw.add_edge(s, pl(U"a", U"a"), y);
  both_raw.add_edge(y, pl(U"a", U"a"), y);
  const PairAutomaton both = normalize_pair_automaton(both_raw);

  const SyncAutomaton sa = synchronize(ab, 0);
  const SyncAutomaton sb = synchronize(both, 0);
  CHECK(sync_included(sa, sb).included);
  const InclusionResult r = sync_included(sb, sa);
  REQUIRE_FALSE(r.included);
  const WordPair w = sync_path_pair(sb, r.counterexample);
  CHECK(w.first == w.second);
  CHECK_FALSE(w.first.empty());
}

TEST_CASE("synchronization pads the shorter side") {
  const PairAutomaton p = normalize_pair_automaton(loops({pl(U"ab", U"b")}));
  CHECK_THROWS_AS(synchronize(p, 3), UnsupportedError);
  PairAutomaton raw;
  const StateId s = raw.add_state(), f = raw.add_state();
  raw.add_initial(s);
  raw.set_final(f);
  raw.add_edge(s, pl(U"abc", U"a"), f);
  const SyncAutomaton sync = synchronize(normalize_pair_automaton(raw), 2);
  CHECK_THROWS_AS(synchronize(normalize_pair_automaton(raw), 1),
                  UnsupportedError);
  const SyncAutomaton again = synchronize(normalize_pair_automaton(raw), 2);
  CHECK(sync_included(sync, again).included);
}
