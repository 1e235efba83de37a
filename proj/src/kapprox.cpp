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

#include "transdist/kapprox.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

#include "transdist/delay.hpp"
#include "transdist/expression.hpp"
#include "transdist/pair_automaton.hpp"
#include "transdist/substitution.hpp"
#include "transdist/witness.hpp"

namespace transdist {

namespace {

// Removes the common prefix of a and b. False when neither is a prefix of
// the other.
bool cancel(Word* a, Word* b) {
  const std::size_t n = std::min(a->size(), b->size());
  if (a->compare(0, n, *b, 0, n) != 0) return false;
  a->erase(0, n);
  b->erase(0, n);
  return true;
}

void common_prefix_cancel(Word* a, Word* b) {
  std::size_t n = 0;
  while (n < a->size() && n < b->size() && (*a)[n] == (*b)[n]) ++n;
  a->erase(0, n);
  b->erase(0, n);
}

bool two_sided(MetricId m) {
  return m == MetricId::kTransposition || m == MetricId::kDamerauLevenshtein;
}

// Transition and acceptance rules of the k-approximation.
class Stepper {
 public:
  Stepper(MetricId m, std::uint64_t k, std::size_t cap)
      : m_(m), k_(k), cap_(cap) {}

  KConfig initial() const {
    KConfig c;
    if (m_ == MetricId::kConjugacy) c.mode = KConfig::kStore;
    return c;
  }

  using Successors = std::map<KConfig, std::uint64_t>;

  void step(const KConfig& c, std::uint64_t spent, const Word& o1,
            const Word& o2, Successors* out) const {
    if (m_ == MetricId::kConjugacy) {
      conjugacy_step(c, spent, o1, o2, out);
      return;
    }
    const Word u = c.left + o1;
    const Word v = c.right + o2;
    auto commit = [&](std::size_t i, std::size_t j) {
      if (std::max(u.size() - i, v.size() - j) > cap_) return;
      const ExtendedNat d = word_distance(m_, Word(u, 0, i), Word(v, 0, j));
      if (d.is_infinite() || spent + d.value() > k_) return;
      KConfig n;
      n.left = u.substr(i);
      n.right = v.substr(j);
      // A common first letter is matched for free by an optimal script, so
      // configurations are kept with the common prefix removed.
      common_prefix_cancel(&n.left, &n.right);
      // Both sides stay pending only inside a transposition block that
      // crosses the current frontier; such a block costs at least the
      // shorter pending side.
      if (m_ == MetricId::kDamerauLevenshtein &&
          std::min(n.left.size(), n.right.size()) > k_ - spent - d.value()) {
        return;
      }
      offer(out, std::move(n), spent + d.value());
    };
    if (two_sided(m_)) {
      for (std::size_t i = 0; i <= u.size(); ++i) {
        for (std::size_t j = 0; j <= v.size(); ++j) commit(i, j);
      }
      return;
    }
    for (std::size_t j = 0; j <= v.size(); ++j) commit(u.size(), j);
    for (std::size_t i = 0; i < u.size(); ++i) commit(i, v.size());
  }

  std::optional<std::uint64_t> final_cost(const KConfig& c, std::uint64_t spent,
                                          const Word& f1, const Word& f2) const {
    Word u = c.left + f1;
    Word v = c.right + f2;
    std::uint64_t total = spent;
    switch (c.mode) {
      case KConfig::kEdit:
      case KConfig::kStore: {
        const ExtendedNat d = word_distance(m_, u, v);
        if (d.is_infinite()) return std::nullopt;
        total += d.value();
        break;
      }
      case KConfig::kMatchLeft:
        if (!cancel(&u, &v) || !u.empty() || v != c.stored) return std::nullopt;
        break;
      case KConfig::kMatchRight:
        if (!cancel(&u, &v) || !v.empty() || u != c.stored) return std::nullopt;
        break;
    }
    if (total > k_) return std::nullopt;
    return total;
  }

 private:
  static void offer(Successors* out, KConfig c, std::uint64_t spent) {
    auto [it, fresh] = out->emplace(std::move(c), spent);
    if (!fresh) it->second = std::min(it->second, spent);
  }

  // Outputs u = x y and v = y x cost min(|x|, |y|). While storing, the
  // run still holds both outputs; switching to a match phase fixes the
  // rotated block, taken from the left output (kMatchLeft, block x) or the
  // right output (kMatchRight, block y), and pays its length.
  void conjugacy_step(const KConfig& c, std::uint64_t spent, const Word& o1,
                      const Word& o2, Successors* out) const {
    Word u = c.left + o1;
    Word v = c.right + o2;
    if (c.mode == KConfig::kMatchLeft || c.mode == KConfig::kMatchRight) {
      if (!cancel(&u, &v) || std::max(u.size(), v.size()) > cap_) return;
      offer(out, KConfig{c.mode, c.stored, std::move(u), std::move(v)}, spent);
      return;
    }
    for (std::size_t i = 0; i <= std::min<std::uint64_t>(u.size(), k_); ++i) {
      if (spent + i > k_) break;
      Word a = u.substr(i), b = v;
      if (!cancel(&a, &b) || std::max(a.size(), b.size()) > cap_) continue;
      offer(out, KConfig{KConfig::kMatchLeft, u.substr(0, i), a, b}, spent + i);
    }
    for (std::size_t j = 0; j <= std::min<std::uint64_t>(v.size(), k_); ++j) {
      if (spent + j > k_) break;
      Word a = u, b = v.substr(j);
      if (!cancel(&a, &b) || std::max(a.size(), b.size()) > cap_) continue;
      offer(out, KConfig{KConfig::kMatchRight, v.substr(0, j), a, b}, spent + j);
    }
    if (std::min(u.size(), v.size()) <= k_) {
      offer(out, KConfig{KConfig::kStore, Word(), u, v}, spent);
    }
  }

  MetricId m_;
  std::uint64_t k_;
  std::size_t cap_;
};

std::size_t leftover_cap(const JointMachine& j, std::uint64_t k) {
  const auto gap = max_abs_gap(pair_automaton(j));
  if (!gap) {
    throw UnsupportedError(
        "k-approximation: output lengths differ by unbounded amounts");
  }
  return static_cast<std::size_t>(*gap + 2 * k + 2);
}

// Input letters of a shortest path from s to a final state of j.
Word completion(const JointMachine& j, StateId s) {
  std::map<StateId, EdgeId> via{{s, -1}};
  std::deque<StateId> queue{s};
  StateId goal = j.dfa.is_final(s) ? s : kNoState;
  while (!queue.empty() && goal == kNoState) {
    const StateId x = queue.front();
    queue.pop_front();
    for (EdgeId e : j.dfa.out(x)) {
      const StateId y = j.dfa.edge(e).dst;
      if (!via.emplace(y, e).second) continue;
      if (j.dfa.is_final(y)) {
        goal = y;
        break;
      }
      queue.push_back(y);
    }
  }
  if (goal == kNoState) throw IntegrityError("joint machine is not trim");
  Word w;
  for (StateId x = goal; via.at(x) != -1; x = j.dfa.edge(via.at(x)).src) {
    w.push_back(j.dfa.edge(via.at(x)).label.input);
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

std::optional<std::uint64_t> DistanceAutomaton::min_weight(
    std::u32string_view w) const {
  std::map<StateId, std::uint64_t> cur;
  for (StateId s : automaton.initial()) cur[s] = 0;
  for (Letter a : w) {
    std::map<StateId, std::uint64_t> next;
    for (const auto& [s, c] : cur) {
      for (EdgeId e : automaton.out(s)) {
        const auto& ed = automaton.edge(e);
        if (ed.label.input != a) continue;
        const std::uint64_t n = c + ed.label.weight;
        auto [it, fresh] = next.emplace(ed.dst, n);
        if (!fresh) it->second = std::min(it->second, n);
      }
    }
    cur = std::move(next);
  }
  std::optional<std::uint64_t> best;
  for (const auto& [s, c] : cur) {
    if (!final_weight[s]) continue;
    const std::uint64_t total = c + *final_weight[s];
    if (!best || total < *best) best = total;
  }
  return best;
}

DistanceAutomaton build_kapprox(MetricId m, const JointMachine& j,
                                std::uint64_t k) {
  const Stepper stepper(m, k, leftover_cap(j, k));
  DistanceAutomaton a;
  a.metric = m;
  a.k = k;
  using Key = std::tuple<StateId, KConfig, std::uint64_t>;
  std::map<Key, StateId> ids;
  std::deque<StateId> queue;
  auto intern = [&](StateId js, const KConfig& c, std::uint64_t spent) {
    auto [it, fresh] = ids.emplace(Key{js, c, spent}, kNoState);
    if (fresh) {
      it->second = a.automaton.add_state();
      check_ceiling(a.automaton.num_states(), "k-approximation");
      a.joint_state.push_back(js);
      a.config.push_back(c);
      a.spent.push_back(spent);
      a.final_weight.push_back(std::nullopt);
      if (j.dfa.is_final(js)) {
        if (auto f = stepper.final_cost(c, spent, j.fin1[js], j.fin2[js])) {
          a.final_weight.back() = *f - spent;
          a.automaton.set_final(it->second);
        }
      }
      queue.push_back(it->second);
    }
    return it->second;
  };
  for (StateId s : j.dfa.initial()) {
    a.automaton.add_initial(intern(s, stepper.initial(), 0));
  }
  while (!queue.empty()) {
    const StateId from = queue.front();
    queue.pop_front();
    const StateId js = a.joint_state[from];
    const KConfig c = a.config[from];
    const std::uint64_t spent = a.spent[from];
    for (EdgeId e : j.dfa.out(js)) {
      Stepper::Successors next;
      stepper.step(c, spent, j.out1[e], j.out2[e], &next);
      for (const auto& [nc, ns] : next) {
        const StateId to = intern(j.dfa.edge(e).dst, nc, ns);
        a.automaton.add_edge(
            from, DistanceLabel{j.dfa.edge(e).label.input, ns - spent, e}, to);
      }
    }
  }
  return a;
}

KCloseResult kclose_check(MetricId m, const Transducer& t1,
                          const Transducer& t2, std::uint64_t k) {
  KCloseResult r;
  const EquivResult dom = domain_equivalence(t1, t2);
  if (!dom) {
    r.counterexample = *dom.counterexample;
    return r;
  }
  const JointMachine j = joint_product_unchecked(t1, t2);
  const PairAutomaton p = pair_automaton(j);
  const GapProfile gap = gap_profile(p);
  if (!gap.bounded) {
    const std::vector<EdgeId> cycle(gap.cycle.begin(), gap.cycle.end());
    const PumpCertificate cert = pump_from_cycle(p, cycle);
    for (std::size_t i = 0;; ++i) {
      const Word w = cert.instance(i);
      if (word_distance(m, *eval(t1, w), *eval(t2, w)) > ExtendedNat(k)) {
        r.counterexample = w;
        return r;
      }
    }
  }

  const Stepper stepper(m, k, leftover_cap(j, k));
  using Macro = std::map<StateId, Stepper::Successors>;
  std::vector<Macro> macros;
  std::vector<std::pair<std::size_t, Letter>> parent;
  std::map<Macro, std::size_t> seen;
  auto word_of = [&](std::size_t i) {
    Word w;
    for (; i != 0; i = parent[i].first) w.push_back(parent[i].second);
    std::reverse(w.begin(), w.end());
    return w;
  };
  Macro init;
  for (StateId s : j.dfa.initial()) init[s].emplace(stepper.initial(), 0);
  macros.push_back(init);
  parent.emplace_back(0, 0);
  seen.emplace(init, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < macros.size(); ++i) {
    for (const auto& [s, configs] : macros[i]) {
      bool accepted = !j.dfa.is_final(s);
      for (const auto& [c, spent] : configs) {
        if (accepted) break;
        accepted = stepper.final_cost(c, spent, j.fin1[s], j.fin2[s]).has_value();
      }
      if (configs.empty()) {
        r.counterexample = word_of(i) + completion(j, s);
        return r;
      }
      if (!accepted) {
        r.counterexample = word_of(i);
        return r;
      }
    }
    for (Letter a : j.in_alphabet) {
      Macro next;
      for (const auto& [s, configs] : macros[i]) {
        for (EdgeId e : j.dfa.out(s)) {
          if (j.dfa.edge(e).label.input != a) continue;
          auto& slot = next[j.dfa.edge(e).dst];
          for (const auto& [c, spent] : configs) {
            stepper.step(c, spent, j.out1[e], j.out2[e], &slot);
          }
        }
      }
      if (next.empty()) continue;
      auto [it, fresh] = seen.emplace(next, macros.size());
      if (!fresh) continue;
      for (const auto& [s, configs] : next) total += configs.size() + 1;
      check_ceiling(total, "k-closeness subset construction");
      macros.push_back(std::move(next));
      parent.emplace_back(i, a);
    }
  }
  r.close = true;
  return r;
}

bool kclose(MetricId m, const Transducer& t1, const Transducer& t2,
            std::uint64_t k) {
  return kclose_check(m, t1, t2, k).close;
}

Closeness decide_closeness(MetricId m, const Transducer& t1,
                           const Transducer& t2) {
  const EquivResult dom = domain_equivalence(t1, t2);
  if (!dom) {
    return Closeness::not_close(PumpCertificate{*dom.counterexample, {}, {}},
                                "domains differ");
  }
  if (m == MetricId::kHamming) return close_hamming(t1, t2);
  if (m == MetricId::kTransposition) return close_transposition(t1, t2);
  const PairAutomaton p = pair_automaton(joint_product_unchecked(t1, t2));
  if (m == MetricId::kDiscrete) {
    if (is_identity_relation(p)) return Closeness::close(0);
    return Closeness::not_close(
        PumpCertificate{find_distinct_pair(p).value().input, {}, {}},
        "outputs differ");
  }
  if (m == MetricId::kConjugacy) {
    if (auto w = unequal_length_input(p)) {
      return Closeness::not_close(PumpCertificate{*w, {}, {}},
                                  "outputs of different length");
    }
    return close_conjugacy(state_elimination(p));
  }
  const GapProfile gap = gap_profile(p);
  if (!gap.bounded) {
    const std::vector<EdgeId> cycle(gap.cycle.begin(), gap.cycle.end());
    return Closeness::not_close(pump_from_cycle(p, cycle),
                                "loop with nonzero delay");
  }
  switch (m) {
    case MetricId::kLength:
      return Closeness::close(length_close(t1, t2));
    default:
      return close_levenshtein(state_elimination(p), m);
  }
}

std::string DistanceResult::to_string() const {
  if (unknown()) return "unknown";
  return value.to_string();
}

DistanceResult distance(MetricId m, const Transducer& t1, const Transducer& t2) {
  DistanceResult r;
  auto probe = [&](std::uint64_t k) { return kclose_check(m, t1, t2, k); };
  try {
    r.closeness = decide_closeness(m, t1, t2);
    r.verdict = r.closeness.verdict;
    if (r.verdict != Verdict::kClose) return r;
    if (probe(0).close) {
      r.value = 0;
      return r;
    }
    // Invariant: kclose fails at lo and holds at hi. The closeness bound is
    // a proven upper bound, so the search stops there without probing it.
    std::uint64_t lo = 0, hi = 0;
    const ExtendedNat bound = r.closeness.bound;
    for (std::uint64_t k = 1;; k *= 2) {
      if (bound.is_finite() && k >= bound.value()) {
        hi = bound.value();
        break;
      }
      if (k > (std::uint64_t{1} << 40)) {
        throw ResourceError("distance: exponential search did not terminate");
      }
      if (probe(k).close) {
        hi = k;
        break;
      }
      lo = k;
    }
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (probe(mid).close) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    r.value = hi;
    r.witness = probe(lo).counterexample;
  } catch (const ResourceError& e) {
    r.verdict = Verdict::kUnknown;
    r.value = ExtendedNat::infinity();
    r.diagnostic = e.what();
  }
  return r;
}

}  // namespace transdist
