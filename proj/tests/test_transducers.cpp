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

#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "transdist/automata.hpp"
#include "transdist/delay.hpp"
#include "transdist/pair_automaton.hpp"
#include "transdist/transducer.hpp"

using namespace transdist;
using fixtures::all_words;

TEST_CASE("evaluation of the worked examples") {
  CHECK(eval(fixtures::odd_positions(), U"abba") == Word(U"ab"));
  CHECK(eval(fixtures::even_positions(), U"abba") == Word(U"ba"));
  CHECK(eval(fixtures::erase_b(), U"abba") == Word(U"aa"));
  CHECK(eval(fixtures::block_letters(), U"001110") == Word(U"010"));
  CHECK(eval(fixtures::block_letters_complement(), U"001110") ==
        Word(U"101"));
  CHECK_FALSE(eval(fixtures::block_letters(), U"").has_value());
  CHECK_FALSE(eval(fixtures::odd_positions(), U"abc").has_value());
}

TEST_CASE("validation") {
  Transducer t(Alphabet{U'a'}, Alphabet{U'x'});
  const StateId q = t.add_state();
  t.add_initial(q);
  t.set_final(q);
  t.add_transition(q, U'a', U"x", q);
  CHECK_NOTHROW(t.validate());
  CHECK(t.is_sequential());

  Transducer bad_out = t;
  bad_out.add_transition(q, U'a', U"y", q);
  CHECK_THROWS_AS(bad_out.validate(), InputError);

  Transducer ambiguous(Alphabet{U'a'}, Alphabet{U'x'});
  const StateId s = ambiguous.add_state(), f1 = ambiguous.add_state(),
                f2 = ambiguous.add_state();
  ambiguous.add_initial(s);
  ambiguous.set_final(f1);
  ambiguous.set_final(f2);
  ambiguous.add_transition(s, U'a', U"x", f1);
  ambiguous.add_transition(s, U'a', U"", f2);
  CHECK_THROWS_AS(ambiguous.validate(), InputError);
}

TEST_CASE("unambiguous but nondeterministic machines evaluate") {
  // Guesses at each a whether it is the last letter and doubles it then.
  Transducer t(Alphabet{U'a', U'b'}, Alphabet{U'a', U'b'});
  const StateId s = t.add_state(), mid = t.add_state(), last = t.add_state();
  t.add_initial(s);
  t.set_final(s);
  t.set_final(last);
  for (StateId q : {s, mid}) {
    t.add_transition(q, U'a', U"a", mid);
    t.add_transition(q, U'a', U"aa", last);
    t.add_transition(q, U'b', U"b", s);
  }
  CHECK_NOTHROW(t.validate());
  CHECK_FALSE(t.is_sequential());
  CHECK(eval(t, U"ba") == Word(U"baa"));
  CHECK(eval(t, U"ab") == Word(U"ab"));
  CHECK(eval(t, U"aa") == Word(U"aaa"));
}

TEST_CASE("trimming keeps the function") {
  Transducer t = fixtures::erase_b();
  const StateId dead = t.add_state();
  t.add_transition(0, U'a', U"b", dead);
  // The dead state makes the raw automaton nondeterministic.
  const Transducer tt = t.trimmed();
  CHECK(tt.num_states() == 1);
  for (const Word& w : all_words(tt.in_alphabet(), 5)) {
    CHECK(eval(tt, w) == eval(fixtures::erase_b(), w));
  }
}

TEST_CASE("domain equivalence") {
  CHECK(same_domain(fixtures::odd_positions(), fixtures::even_positions()));
  CHECK(same_domain(fixtures::block_letters(),
                    fixtures::block_letters_complement()));
  const auto r = domain_equivalence(fixtures::block_letters(),
                                    fixtures::block_letters_complement());
  CHECK(r.equivalent);

  Transducer partial(Alphabet{U'a', U'b'}, Alphabet{U'a', U'b'});
  const StateId q = partial.add_state();
  partial.add_initial(q);
  partial.set_final(q);
  partial.add_transition(q, U'a', U"a", q);
  const auto d = domain_equivalence(fixtures::erase_b(), partial);
  CHECK_FALSE(d.equivalent);
  REQUIRE(d.counterexample.has_value());
  CHECK(*d.counterexample == U"b");
  CHECK_THROWS_AS(joint_product(fixtures::erase_b(), partial), InputError);
  CHECK_NOTHROW(joint_product_unchecked(fixtures::erase_b(), partial));
}

TEST_CASE("joint product carries both outputs") {
  const Transducer t1 = fixtures::odd_positions(), t2 = fixtures::even_positions();
  const JointMachine j = joint_product(t1, t2);
  const PairAutomaton p = pair_automaton(j);
  CHECK(is_normalized(p));
  CHECK(max_abs_gap(p) == 1u);
  const auto pairs = enumerate_pairs(p, 3);
  for (const Word& w : all_words(t1.in_alphabet(), 6)) {
    const WordPair expected{*eval(t1, w), *eval(t2, w)};
    CHECK(pairs.count(expected) == 1);
  }
}

TEST_CASE("nivat split reproduces the relation") {
  const JointMachine j = joint_product(fixtures::block_letters(),
                                       fixtures::block_letters_complement());
  const PairAutomaton p = pair_automaton(j);
  const auto [left, right] = nivat_split(p);
  CHECK_NOTHROW(left.validate());
  CHECK_NOTHROW(right.validate());
  CHECK(left.in_alphabet().size() == p.num_edges());
  // Every edge path spells a Nivat word; its images form an accepted pair.
  const auto pairs = enumerate_pairs(p, 4);
  for (const Word& w : enumerate_language(left.automaton(), 5)) {
    const auto u = eval(left, w);
    const auto v = eval(right, w);
    REQUIRE(u.has_value());
    REQUIRE(v.has_value());
    if (u->size() <= 4 && v->size() <= 4) CHECK(pairs.count({*u, *v}) == 1);
  }
  CHECK(nivat_letter(0) != nivat_letter(1));
}
