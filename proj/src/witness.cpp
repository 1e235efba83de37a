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

#include "transdist/witness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

namespace transdist {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kClose: return "CLOSE";
    case Verdict::kNotClose: return "NOT_CLOSE";
    case Verdict::kUnknown: return "UNKNOWN";
  }
  return "?";
}

Word WitnessFamily::member(std::size_t k) const {
  Word z = x;
  for (std::size_t i = 0; i < k; ++i) z += period + x;
  return z;
}

Word primitive_root(std::u32string_view w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return Word(w.substr(0, p));
  }
  return Word(w);
}

PairWitnesses pair_witnesses(std::u32string_view u, std::u32string_view v) {
  PairWitnesses r;
  if (u.size() != v.size()) return r;
  if (u == v) {
    r.conjugate = true;
    WitnessFamily f;
    if (u.empty()) {
      f.universal = true;
    } else {
      f.period = primitive_root(u);
    }
    r.inner.push_back(f);
    f.side = WitnessSide::kOuter;
    r.outer.push_back(f);
    return r;
  }
  const std::size_t n = u.size();
  for (std::size_t i = 0; i <= n; ++i) {
    // u = xy, v = yx
    Word x(u.substr(0, i)), y(u.substr(i));
    if (y + x == v) r.inner.push_back({x, y, WitnessSide::kInner, false});
    // v = xy, u = yx
    Word xv(v.substr(0, i)), yv(v.substr(i));
    if (yv + xv == u) r.outer.push_back({xv, yv, WitnessSide::kOuter, false});
  }
  r.conjugate = !r.inner.empty();
  return r;
}

bool verify_witness(const PairAutomaton& e, const Word& z, WitnessSide side) {
  const PairAutomaton src = trim(e);
  if (src.empty()) return true;
  PairAutomaton a;
  for (std::size_t s = 0; s < src.num_states(); ++s) a.add_state();
  const StateId start = a.add_state(), stop = a.add_state();
  a.add_initial(start);
  a.set_final(stop);
  const bool inner = side == WitnessSide::kInner;
  for (const auto& ed : src.edges()) a.add_edge(ed.src, ed.label, ed.dst);
  for (StateId s : src.initial()) {
    a.add_edge(start, inner ? PairLabel{Word(), z, Word()}
                            : PairLabel{z, Word(), Word()}, s);
  }
  for (StateId s : src.finals()) {
    a.add_edge(s, inner ? PairLabel{z, Word(), Word()}
                        : PairLabel{Word(), z, Word()}, stop);
  }
  return is_identity_relation(normalize_pair_automaton(a));
}

bool verify_witness(const SumfreeExpr& e, const Word& z, WitnessSide side) {
  return verify_witness(sumfree_automaton(e), z, side);
}

namespace {

bool witnesses_pair(const WordPair& p, const Word& z, WitnessSide side) {
  return side == WitnessSide::kInner ? p.first + z == z + p.second
                                     : z + p.first == p.second + z;
}

// Limits of the fallback scan for a generated pair that is not conjugate.
constexpr std::size_t kScanLength = 8;
constexpr std::size_t kScanNodes = 200000;

// Breadth-first over (state, left, right) with both sides of length at most
// kScanLength; the input track of the first path reaching each node is kept.
std::optional<PairLabel> non_conjugate_pair(const PairAutomaton& a) {
  using Node = std::tuple<StateId, Word, Word>;
  std::set<Node> seen;
  std::deque<PairLabel> labels;
  std::deque<StateId> states;
  for (StateId s : a.initial()) {
    if (seen.insert({s, Word(), Word()}).second) {
      states.push_back(s);
      labels.push_back(PairLabel{});
    }
  }
  while (!states.empty() && seen.size() < kScanNodes) {
    const StateId s = states.front();
    PairLabel l = std::move(labels.front());
    states.pop_front();
    labels.pop_front();
    if (a.is_final(s) && !pair_witnesses(l.left, l.right).conjugate) return l;
    for (EdgeId e : a.out(s)) {
      const PairLabel& el = a.edge(e).label;
      PairLabel n{l.left + el.left, l.right + el.right, l.input + el.input};
      if (n.left.size() > kScanLength || n.right.size() > kScanLength) continue;
      const StateId d = a.edge(e).dst;
      if (!seen.insert({d, n.left, n.right}).second) continue;
      states.push_back(d);
      labels.push_back(std::move(n));
    }
  }
  return std::nullopt;
}

}  // namespace

WitnessSearch common_witness(const SumfreeExpr& e) {
  WitnessSearch r;
  const PairAutomaton a = normalize_pair_automaton(sumfree_automaton(e));
  if (is_identity_relation(a)) {
    r.status = WitnessSearch::Status::kWitness;
    return r;
  }
  r.pair = find_distinct_pair(a);
  if (!r.pair) {
    r.status = WitnessSearch::Status::kUnknown;
    return r;
  }
  const PairWitnesses fams = pair_witnesses(r.pair->left, r.pair->right);
  if (!fams.conjugate) {
    r.status = WitnessSearch::Status::kNone;
    return r;
  }
  r.cutoff = 1 + constant_length(e) + star_count(e);

  // A few short pairs screen out most candidates before the exact check.
  std::vector<WordPair> samples;
  for (const auto& p : enumerate_pairs(a, 6)) {
    if (samples.size() >= 256) break;
    samples.push_back(p);
  }
  std::vector<std::tuple<std::size_t, int, Word>> candidates;
  std::vector<WitnessFamily> all = fams.inner;
  all.insert(all.end(), fams.outer.begin(), fams.outer.end());
  for (const auto& f : all) {
    for (std::size_t k = 0; k <= r.cutoff; ++k) {
      Word z = f.member(k);
      candidates.emplace_back(z.size(), static_cast<int>(f.side), std::move(z));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const auto& [len, side_id, z] : candidates) {
    const auto side = static_cast<WitnessSide>(side_id);
    const bool plausible =
        std::all_of(samples.begin(), samples.end(),
                    [&](const WordPair& p) { return witnesses_pair(p, z, side); });
    if (plausible && verify_witness(a, z, side)) {
      r.status = WitnessSearch::Status::kWitness;
      r.witness = Witness{z, side};
      return r;
    }
  }
  // No candidate verified. A generated pair that is not conjugate still
  // settles the question.
  if (auto bad = non_conjugate_pair(a)) {
    r.status = WitnessSearch::Status::kNone;
    r.pair = std::move(bad);
    return r;
  }
  r.status = WitnessSearch::Status::kUnknown;
  auto shortest = std::min_element(
      all.begin(), all.end(), [](const WitnessFamily& p, const WitnessFamily& q) {
        return p.x.size() + p.period.size() < q.x.size() + q.period.size();
      });
  if (shortest != all.end()) r.unverified = *shortest;
  return r;
}

namespace {

std::string family_text(const WitnessFamily& f) {
  return (f.side == WitnessSide::kInner ? "inner " : "outer ") +
         format_word(f.x, "ε") + "(" + format_word(f.period + f.x, "ε") + ")*";
}

std::vector<SumfreePtr> decompose_or_note(const ExprPtr& e, std::string* why) {
  try {
    return sumfree_decompose(e);
  } catch (const ResourceError& err) {
    *why = err.what();
    return {};
  }
}

}  // namespace

Closeness close_conjugacy(const ExprPtr& e) {
  std::string why;
  const auto summands = decompose_or_note(e, &why);
  if (!why.empty()) return Closeness::unknown(why);
  std::uint64_t bound = 0;
  std::string unknown;
  for (const auto& s : summands) {
    const WitnessSearch w = common_witness(*s);
    switch (w.status) {
      case WitnessSearch::Status::kWitness:
        bound = std::max<std::uint64_t>(bound, w.witness.z.size());
        break;
      case WitnessSearch::Status::kNone:
        return Closeness::not_close(
            PumpCertificate{w.pair->input, Word(), Word()},
            "pair (" + to_utf8(w.pair->left) + "," + to_utf8(w.pair->right) +
                ") is not conjugate");
      case WitnessSearch::Status::kUnknown:
        if (unknown.empty()) {
          unknown = "no common witness up to repetition " +
                    std::to_string(w.cutoff) + " for " + to_string(*s);
          if (w.unverified) unknown += "; family " + family_text(*w.unverified);
        }
        break;
    }
  }
  if (!unknown.empty()) return Closeness::unknown(unknown);
  return Closeness::close(bound);
}

Closeness close_levenshtein(const ExprPtr& e, MetricId m) {
  std::string why;
  const auto summands = decompose_or_note(e, &why);
  if (!why.empty()) return Closeness::unknown(why);
  std::map<const SumfreeExpr*, WitnessSearch> cache;
  std::uint64_t bound = 0;
  std::string unknown;
  for (const auto& s : summands) {
    std::uint64_t b = 0;
    for (const auto& c : s->constants) b += levenshtein_distance(c.left, c.right);
    for (std::size_t i = 0; i < s->star_bodies.size(); ++i) {
      const SumfreeExpr* body = s->star_bodies[i].get();
      auto it = cache.find(body);
      if (it == cache.end()) it = cache.emplace(body, common_witness(*body)).first;
      const WitnessSearch& w = it->second;
      if (w.status == WitnessSearch::Status::kNone) {
        PumpCertificate cert;
        for (std::size_t j = 0; j <= i; ++j) cert.prefix += s->constants[j].input;
        cert.loop = w.pair->input;
        for (std::size_t j = i + 1; j < s->constants.size(); ++j) {
          cert.suffix += s->constants[j].input;
        }
        return Closeness::not_close(
            cert, "loop pair (" + to_utf8(w.pair->left) + "," +
                      to_utf8(w.pair->right) + ") is not conjugate");
      }
      if (w.status == WitnessSearch::Status::kUnknown) {
        if (unknown.empty()) {
          unknown = "no common witness up to repetition " +
                    std::to_string(w.cutoff) + " for starred body " +
                    to_string(*body);
          if (w.unverified) unknown += "; family " + family_text(*w.unverified);
        }
        continue;
      }
      b += 2 * w.witness.z.size();
    }
    bound = std::max(bound, b);
  }
  if (!unknown.empty()) return Closeness::unknown(unknown);
  if (m == MetricId::kLcs) bound *= 2;
  return Closeness::close(bound);
}

}  // namespace transdist
