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

// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact; the only tolerances are the
// wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "transdist/delay.hpp"
#include "transdist/io.hpp"
#include "transdist/kapprox.hpp"
#include "transdist/relations.hpp"
#include "transdist/substitution.hpp"

namespace {

using namespace transdist;
using fixtures::all_words;

constexpr double kWorkedExamplesSeconds = 5.0;
constexpr double kIndexExamplesSeconds = 10.0;
constexpr std::size_t kOrderMaxLen = 6;
constexpr std::size_t kOracleMaxLen = 8;
constexpr std::size_t kKapproxMachines = 20;
constexpr std::size_t kKapproxMaxLen = 8;
constexpr std::uint64_t kKapproxMaxK = 3;
constexpr std::size_t kCorpusSize = 50;
constexpr std::size_t kEnumerationMaxLen = 12;
constexpr std::size_t kPumpIterations = 3;
constexpr std::uint64_t kCorpusSeed = 20260607;
constexpr std::uint64_t kKapproxSeed = 777;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

struct NamedPair {
  std::string name;
  Transducer t1, t2;
};

std::vector<NamedPair> worked_pairs() {
  const std::string d = fixtures::data_dir() + "/";
  const Transducer t1 = load_transducer(d + "T1.fst");
  const Transducer t2 = load_transducer(d + "T2.fst");
  const Transducer t3 = load_transducer(d + "T3.fst");
  const Transducer t4 = load_transducer(d + "T4.fst");
  const Transducer t5 = load_transducer(d + "T5.fst");
  return {{"T1/T2", t1, t2}, {"T1/T3", t1, t3}, {"T2/T3", t2, t3},
          {"T4/T5", t4, t5}, {"T4/T4", t4, t4}, {"T1/T1", t1, t1}};
}

std::vector<NamedPair> full_corpus() {
  std::vector<NamedPair> out = worked_pairs();
  fixtures::PairGenerator gen(kCorpusSeed);
  for (auto& p : gen.corpus(kCorpusSize)) {
    out.push_back({p.name, std::move(p.t1), std::move(p.t2)});
  }
  return out;
}

std::string s(ExtendedNat n) { return n.to_string(); }

void criterion_worked_examples(Outcome& o) {
  const auto start = Clock::now();
  const auto pairs = worked_pairs();
  const NamedPair& a = pairs[0];
  const NamedPair& b = pairs[3];
  struct Case {
    MetricId m;
    const NamedPair* p;
    ExtendedNat expected;
  };
  const Case cases[] = {
      {MetricId::kLength, &a, 1},
      {MetricId::kHamming, &a, ExtendedNat::infinity()},
      {MetricId::kLevenshtein, &a, ExtendedNat::infinity()},
      {MetricId::kHamming, &b, ExtendedNat::infinity()},
      {MetricId::kLevenshtein, &b, 2},
  };
  for (const Case& c : cases) {
    const DistanceResult r = distance(c.m, c.p->t1, c.p->t2);
    o.require(!r.unknown() && r.value == c.expected,
              std::string(metric_name(c.m)) + "(" + c.p->name + ") = " +
                  r.to_string() + ", expected " + s(c.expected));
    o.detail << metric_name(c.m) << "(" << c.p->name << ")=" << r.to_string() << " ";
  }
  const double t = seconds_since(start);
  o.require(t < kWorkedExamplesSeconds, "runtime " + std::to_string(t) + " s");
  o.detail << "in " << t << " s";
}

void criterion_metric_order(Outcome& o) {
  const Alphabet bin{U'0', U'1'};
  std::vector<WordPair> pairs;
  const auto words = all_words(bin, kOrderMaxLen);
  for (const Word& u : words) {
    for (const Word& v : words) pairs.emplace_back(u, v);
  }
  const MetricOrderReport rep = metric_order_check(pairs);
  o.require(rep.ok, "inequality " + rep.violation + " on (" +
                        to_utf8(rep.pair.first) + "," + to_utf8(rep.pair.second) + ")");
  o.detail << rep.checked << " pairs; ";
  auto oracle = [](MetricId m, const Word& u, const Word& v) -> ExtendedNat {
    const auto d = oracle_distance(m, u, v, 64);
    return d ? ExtendedNat(*d) : ExtendedNat::infinity();
  };
  for (std::size_t k = 1; k <= 4; ++k) {
    Word u, v;
    for (std::size_t i = 0; i < k; ++i) {
      u += U"01";
      v += U"10";
    }
    for (MetricId m : {MetricId::kConjugacy, MetricId::kHamming}) {
      const ExtendedNat expected = m == MetricId::kConjugacy ? 1 : 2 * k;
      o.require(word_distance(m, u, v) == expected && oracle(m, u, v) == expected,
                std::string(metric_name(m)) + "((01)^" + std::to_string(k) + ")");
    }
    const Word x = U"1" + Word(k, U'0') + U"1";
    const Word y = U"01" + Word(k - 1, U'0') + U"1";
    o.require(word_distance(MetricId::kTransposition, x, y) == 1 &&
                  oracle(MetricId::kTransposition, x, y) == 1,
              "d_t(10^k1) k=" + std::to_string(k));
    o.require(word_distance(MetricId::kHamming, x, y) == 2 &&
                  oracle(MetricId::kHamming, x, y) == 2,
              "d_h(10^k1) k=" + std::to_string(k));
    // For k = 1 the two words are 101 and 011, which are rotations of each
    // other; the conjugacy distance is infinite from k = 2 on.
    const ExtendedNat dc = k == 1 ? ExtendedNat(1) : ExtendedNat::infinity();
    o.require(word_distance(MetricId::kConjugacy, x, y) == dc &&
                  oracle(MetricId::kConjugacy, x, y) == dc,
              "d_c(10^k1) k=" + std::to_string(k));
  }
  o.detail << "incomparability families k=1..4 exact (d_c(101,011)=1 at k=1)";
}

void criterion_oracle(Outcome& o) {
  const Alphabet bin{U'0', U'1'};
  const auto words = all_words(bin, kOracleMaxLen);
  std::size_t checked = 0;
  for (MetricId m : edit_graph_metrics()) {
    for (const Word& u : words) {
      const auto ball = oracle_ball(m, u, bin, ~std::uint64_t{0}, kOracleMaxLen + 2);
      for (const Word& v : words) {
        auto it = ball.find(v);
        const ExtendedNat expected =
            it == ball.end() ? ExtendedNat::infinity() : ExtendedNat(it->second);
        ++checked;
        if (word_distance(m, u, v) != expected) {
          o.require(false, std::string(metric_name(m)) + "(" + to_utf8(u) + "," +
                               to_utf8(v) + ")");
        }
      }
    }
  }
  o.detail << checked << " metric/pair checks";
}

void criterion_kapprox(Outcome& o) {
  fixtures::PairGenerator gen(kKapproxSeed);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < kKapproxMachines; ++i) {
    const fixtures::Pair p = gen.next_bounded_joint();
    const JointMachine j = joint_product(p.t1, p.t2);
    const auto inputs = all_words(j.in_alphabet, kKapproxMaxLen);
    for (MetricId m : all_metrics()) {
      for (std::uint64_t k = 0; k <= kKapproxMaxK; ++k) {
        const DistanceAutomaton a = build_kapprox(m, j, k);
        for (const Word& w : inputs) {
          const auto o1 = eval(p.t1, w);
          const auto got = a.min_weight(w);
          std::optional<std::uint64_t> want;
          if (o1) {
            const ExtendedNat d = word_distance(m, *o1, *eval(p.t2, w));
            if (d <= ExtendedNat(k)) want = d.value();
          }
          ++checked;
          if (got != want) {
            o.require(false, "machine " + std::to_string(i) + " " +
                                 std::string(metric_name(m)) + " k=" +
                                 std::to_string(k) + " input " + to_utf8(w));
          }
        }
      }
    }
  }
  o.detail << checked << " (machine, metric, k, input) checks";
}

// Outputs of both machines on every short input, computed once per pair.
struct Table {
  std::vector<std::pair<std::optional<Word>, std::optional<Word>>> rows;
  ExtendedNat max(MetricId m) const {
    ExtendedNat best = 0;
    for (const auto& [a, b] : rows) {
      if (!a && !b) continue;
      best = transdist::max(best, a && b ? word_distance(m, *a, *b)
                                         : ExtendedNat::infinity());
    }
    return best;
  }
};

ExtendedNat at(MetricId m, const NamedPair& p, const Word& w) {
  const auto a = eval(p.t1, w);
  const auto b = eval(p.t2, w);
  if (!a || !b) return ExtendedNat::infinity();
  return word_distance(m, *a, *b);
}

void criterion_closeness(Outcome& o) {
  const auto corpus = full_corpus();
  std::size_t close = 0, not_close = 0, unknown = 0, total = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const NamedPair& p = corpus[i];
    Table table;
    for (const Word& w : all_words(p.t1.in_alphabet().merged(p.t2.in_alphabet()),
                                   kEnumerationMaxLen)) {
      table.rows.emplace_back(eval(p.t1, w), eval(p.t2, w));
    }
    for (MetricId m : all_metrics()) {
      ++total;
      const std::string tag = p.name + " " + std::string(metric_name(m));
      const DistanceResult r = distance(m, p.t1, p.t2);
      switch (r.verdict) {
        case Verdict::kUnknown:
          ++unknown;
          o.require(i >= worked_pairs().size(), tag + " is UNKNOWN");
          break;
        case Verdict::kClose: {
          ++close;
          const ExtendedNat seen = table.max(m);
          o.require(seen <= r.value, tag + " enumeration " + s(seen) +
                                         " exceeds distance " + s(r.value));
          o.require(r.closeness.bound.is_infinite() || r.value <= r.closeness.bound,
                    tag + " distance above closeness bound");
          if (r.value > ExtendedNat(0)) {
            o.require(r.witness && at(m, p, *r.witness) == r.value,
                      tag + " witness does not attain the distance");
          }
          break;
        }
        case Verdict::kNotClose: {
          ++not_close;
          const auto& cert = r.closeness.certificate;
          o.require(cert.has_value(), tag + " without certificate");
          if (!cert) break;
          if (cert->loop.empty()) {
            o.require(at(m, p, cert->instance(0)).is_infinite(),
                      tag + " single-input certificate at finite distance");
            break;
          }
          ExtendedNat prev = at(m, p, cert->instance(0));
          for (std::size_t n = 1; n <= kPumpIterations; ++n) {
            const ExtendedNat cur = at(m, p, cert->instance(n));
            o.require(prev.is_finite() ? prev < cur : cur.is_infinite(),
                      tag + " pump " + std::to_string(n) + " does not increase (" +
                          s(prev) + " -> " + s(cur) + ")");
            prev = cur;
          }
          break;
        }
      }
    }
  }
  o.detail << corpus.size() << " pairs x " << all_metrics().size() << " metrics: "
           << close << " close, " << not_close << " not close, " << unknown
           << " unknown (rate " << (100.0 * static_cast<double>(unknown) / static_cast<double>(total)) << "%)";
}

void criterion_index(Outcome& o) {
  const auto start = Clock::now();
  IndexOptions opt;
  opt.assert_metrizable = true;
  const RationalRelation s = fixtures::delete_first_a(1);
  for (int k = 1; k <= 3; ++k) {
    const IndexResult r = index(fixtures::delete_first_a(k), s, MetricId::kLcs, opt);
    o.require(r.verdict == Verdict::kClose && r.value == ExtendedNat(k),
              "index(delete first " + std::to_string(k) + ") = " + r.to_string());
    o.detail << "k=" << k << ":" << r.to_string() << " ";
  }
  const IndexResult all = index(fixtures::delete_all_a(), s, MetricId::kLcs, opt);
  o.require(all.verdict == Verdict::kNotClose && all.value.is_infinite(),
            "index(delete all) = " + all.to_string());
  o.detail << "all:" << all.to_string() << " ";
  const double t = seconds_since(start);
  o.require(t < kIndexExamplesSeconds, "runtime " + std::to_string(t) + " s");
  o.detail << "in " << t << " s";
}

PairLabel pl(Word l, Word r) { return PairLabel{std::move(l), std::move(r), {}}; }

std::vector<std::pair<std::string, RationalRelation>> bounded_relations() {
  const Alphabet ab{U'a', U'b'};
  std::vector<std::pair<std::string, RationalRelation>> out;
  out.emplace_back("identity", identity_relation(ab));
  out.emplace_back("hamming sphere", make_distance_relation(MetricId::kHamming, ab));
  out.emplace_back("levenshtein sphere",
                   make_distance_relation(MetricId::kLevenshtein, ab));
  out.emplace_back("two substitutions",
                   power(make_distance_relation(MetricId::kHamming, ab), 2));
  out.emplace_back("delete first a", fixtures::delete_first_a(1));
  out.emplace_back("delete first two a", fixtures::delete_first_a(2));
  out.emplace_back("rotate by one", make_distance_relation(MetricId::kConjugacy, ab));
  {
    PairAutomaton p;  // swap the first two letters, copy the rest
    const StateId s0 = p.add_state(), s1 = p.add_state();
    p.add_initial(s0);
    p.set_final(s1);
    p.add_edge(s0, pl(U"ab", U"ba"), s1);
    p.add_edge(s0, pl(U"ba", U"ab"), s1);
    p.add_edge(s1, pl(U"a", U"a"), s1);
    p.add_edge(s1, pl(U"b", U"b"), s1);
    out.emplace_back("swap first two", make_relation(p, ab, ab));
  }
  {
    PairAutomaton p;  // rewrite the last letter, then flip the one before
    const StateId s0 = p.add_state(), s1 = p.add_state();
    p.add_initial(s0);
    p.set_final(s1);
    p.add_edge(s0, pl(U"a", U"a"), s0);
    p.add_edge(s0, pl(U"b", U"b"), s0);
    p.add_edge(s0, pl(U"ab", U"ba"), s1);
    p.add_edge(s0, pl(U"aa", U"bb"), s1);
    p.add_edge(s0, pl(U"bb", U"aab"), s1);
    out.emplace_back("edit the suffix", make_relation(p, ab, ab));
  }
  {
    PairAutomaton p;  // a^n to b^n
    const StateId s0 = p.add_state();
    p.add_initial(s0);
    p.set_final(s0);
    p.add_edge(s0, pl(U"a", U"b"), s0);
    out.emplace_back("a^n to b^n", make_relation(p, ab, ab));
  }
  return out;
}

void criterion_diameter_index(Outcome& o) {
  const Alphabet ab{U'a', U'b'};
  for (MetricId m : {MetricId::kHamming, MetricId::kLevenshtein}) {
    const RationalRelation sphere = make_distance_relation(m, ab);
    for (const auto& [name, r] : bounded_relations()) {
      const DiameterResult d = diameter(r, m);
      const IndexResult i = index(r, sphere, m);
      o.require(!d.distance.unknown() && i.verdict != Verdict::kUnknown &&
                    d.distance.value == i.value,
                std::string(metric_name(m)) + " " + name + ": diameter " +
                    d.distance.to_string() + ", index " + i.to_string());
      o.detail << metric_name(m)[0] << ":" << name << "=" << i.to_string() << " ";
    }
  }
}

void criterion_subst(Outcome& o) {
  std::size_t checked = 0;
  for (const NamedPair& p : full_corpus()) {
    for (MetricId m : {MetricId::kHamming, MetricId::kTransposition}) {
      const SubstDistance a = distance_subst(m, p.t1, p.t2);
      const DistanceResult b = distance(m, p.t1, p.t2);
      ++checked;
      o.require(!b.unknown() && a.value == b.value,
                p.name + " " + std::string(metric_name(m)) + ": " + s(a.value) +
                    " vs " + b.to_string());
    }
  }
  o.detail << checked << " comparisons";
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<void(Outcome&)> run;
  };
  const Criterion criteria[] = {
      {"C1", "worked examples reproduce", criterion_worked_examples},
      {"C2", "metric inequalities and incomparability families", criterion_metric_order},
      {"C3", "word_distance equals the edit-graph BFS", criterion_oracle},
      {"C4", "k-approximation weights equal word distances", criterion_kapprox},
      {"C5", "closeness verdicts agree with enumeration and pumping", criterion_closeness},
      {"C6", "index of the deletion relations", criterion_index},
      {"C7", "diameter equals index in the unit-sphere closure", criterion_diameter_index},
      {"C8", "substitution distance equals generic distance", criterion_subst},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::printf("%s %s %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                seconds_since(start), o.detail.str().c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
