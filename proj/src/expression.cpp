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

#include "transdist/expression.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace transdist {

namespace {

PairLabel join(const PairLabel& a, const PairLabel& b) {
  return PairLabel{a.left + b.left, a.right + b.right, a.input + b.input};
}

bool is_unit(const PairLabel& l) { return l.left.empty() && l.right.empty(); }

}  // namespace

ExprPtr PairExpr::empty() {
  static const ExprPtr kEmpty(new PairExpr(Kind::kEmpty, {}, {}));
  return kEmpty;
}

ExprPtr PairExpr::one() {
  static const ExprPtr kOne(new PairExpr(Kind::kAtom, {}, {}));
  return kOne;
}

ExprPtr PairExpr::atom(PairLabel label) {
  if (is_unit(label) && label.input.empty()) return one();
  return ExprPtr(new PairExpr(Kind::kAtom, std::move(label), {}));
}

ExprPtr PairExpr::concat(std::vector<ExprPtr> parts) {
  std::vector<ExprPtr> flat;
  for (auto& p : parts) {
    if (p->kind() == Kind::kEmpty) return empty();
    if (p->kind() == Kind::kConcat) {
      flat.insert(flat.end(), p->children().begin(), p->children().end());
    } else {
      flat.push_back(p);
    }
  }
  std::vector<ExprPtr> merged;
  for (auto& p : flat) {
    if (p->kind() == Kind::kAtom) {
      if (is_unit(p->label()) && p->label().input.empty()) continue;
      if (!merged.empty() && merged.back()->kind() == Kind::kAtom) {
        merged.back() = atom(join(merged.back()->label(), p->label()));
        continue;
      }
    }
    merged.push_back(p);
  }
  if (merged.empty()) return one();
  if (merged.size() == 1) return merged.front();
  return ExprPtr(new PairExpr(Kind::kConcat, {}, std::move(merged)));
}

ExprPtr PairExpr::sum(std::vector<ExprPtr> parts) {
  std::vector<ExprPtr> flat;
  std::set<std::string> seen;
  auto add = [&](const ExprPtr& p) {
    if (p->kind() == Kind::kEmpty) return;
    if (seen.insert(to_string(p)).second) flat.push_back(p);
  };
  for (auto& p : parts) {
    if (p->kind() == Kind::kSum) {
      for (const auto& c : p->children()) add(c);
    } else {
      add(p);
    }
  }
  if (flat.empty()) return empty();
  if (flat.size() == 1) return flat.front();
  return ExprPtr(new PairExpr(Kind::kSum, {}, std::move(flat)));
}

ExprPtr PairExpr::star(ExprPtr body) {
  if (body->kind() == Kind::kEmpty || body->is_one()) return one();
  if (body->kind() == Kind::kStar) return body;
  return ExprPtr(new PairExpr(Kind::kStar, {}, {std::move(body)}));
}

std::string to_string(const ExprPtr& e) {
  using Kind = PairExpr::Kind;
  switch (e->kind()) {
    case Kind::kEmpty:
      return "0";
    case Kind::kAtom:
      if (is_unit(e->label())) return "()";
      return "(" + to_utf8(e->label().left) + "," + to_utf8(e->label().right) +
             ")";
    case Kind::kConcat: {
      std::string s;
      for (const auto& c : e->children()) {
        if (!s.empty()) s += " ";
        s += c->kind() == Kind::kSum ? "(" + to_string(c) + ")" : to_string(c);
      }
      return s;
    }
    case Kind::kSum: {
      std::string s;
      for (const auto& c : e->children()) {
        if (!s.empty()) s += " + ";
        s += to_string(c);
      }
      return s;
    }
    case Kind::kStar: {
      const auto& c = e->children().front();
      if (c->kind() == Kind::kAtom) return to_string(c) + "*";
      return "(" + to_string(c) + ")*";
    }
  }
  return "?";
}

std::size_t expr_size(const ExprPtr& e) {
  std::size_t n = 1;
  for (const auto& c : e->children()) n += expr_size(c);
  return n;
}

ExprPtr state_elimination(const PairAutomaton& input) {
  const PairAutomaton p = trim(input);
  if (p.empty()) return PairExpr::empty();
  const int n = static_cast<int>(p.num_states());
  const int start = n, stop = n + 1;
  std::vector<std::map<int, ExprPtr>> out(n + 2);
  std::vector<std::set<int>> in(n + 2);
  auto add = [&](int i, int j, const ExprPtr& e) {
    auto it = out[i].find(j);
    if (it == out[i].end()) {
      out[i].emplace(j, e);
      in[j].insert(i);
    } else {
      it->second = PairExpr::sum({it->second, e});
    }
  };
  for (const auto& e : p.edges()) add(e.src, e.dst, PairExpr::atom(e.label));
  for (StateId s : p.initial()) add(start, s, PairExpr::one());
  for (StateId s : p.finals()) add(s, stop, PairExpr::one());

  std::set<int> remaining;
  for (int s = 0; s < n; ++s) remaining.insert(s);
  while (!remaining.empty()) {
    int best = -1;
    std::size_t best_cost = 0;
    for (int q : remaining) {
      std::size_t ins = in[q].size() - in[q].count(q);
      std::size_t outs = out[q].size() - out[q].count(q);
      std::size_t cost = ins * outs;
      if (best == -1 || cost < best_cost) {
        best = q;
        best_cost = cost;
      }
    }
    const int q = best;
    remaining.erase(q);
    ExprPtr loop = PairExpr::one();
    if (auto it = out[q].find(q); it != out[q].end()) {
      loop = PairExpr::star(it->second);
    }
    std::vector<std::pair<int, ExprPtr>> preds, succs;
    for (int i : in[q]) {
      if (i != q) preds.emplace_back(i, out[i].at(q));
    }
    for (auto& [j, e] : out[q]) {
      if (j != q) succs.emplace_back(j, e);
    }
    for (auto& [i, ei] : preds) {
      out[i].erase(q);
      for (auto& [j, ej] : succs) add(i, j, PairExpr::concat({ei, loop, ej}));
    }
    for (auto& [j, ej] : succs) in[j].erase(q);
    out[q].clear();
    in[q].clear();
  }
  auto it = out[start].find(stop);
  return it == out[start].end() ? PairExpr::empty() : it->second;
}

namespace {

PairLabel silent() { return PairLabel{}; }

void build(PairAutomaton& a, const ExprPtr& e, StateId from, StateId to) {
  using Kind = PairExpr::Kind;
  switch (e->kind()) {
    case Kind::kEmpty:
      return;
    case Kind::kAtom:
      a.add_edge(from, e->label(), to);
      return;
    case Kind::kConcat: {
      StateId cur = from;
      const auto& cs = e->children();
      for (std::size_t i = 0; i < cs.size(); ++i) {
        StateId next = i + 1 == cs.size() ? to : a.add_state();
        build(a, cs[i], cur, next);
        cur = next;
      }
      return;
    }
    case Kind::kSum:
      for (const auto& c : e->children()) build(a, c, from, to);
      return;
    case Kind::kStar: {
      StateId hub = a.add_state(), back = a.add_state();
      a.add_edge(from, silent(), hub);
      a.add_edge(hub, silent(), to);
      build(a, e->children().front(), hub, back);
      a.add_edge(back, silent(), hub);
      return;
    }
  }
}

StateId build_sumfree(PairAutomaton& a, const SumfreeExpr& s, StateId from) {
  StateId cur = from;
  for (std::size_t i = 0; i < s.constants.size(); ++i) {
    StateId next = a.add_state();
    a.add_edge(cur, s.constants[i], next);
    cur = next;
    if (i < s.star_bodies.size()) {
      StateId hub = a.add_state();
      a.add_edge(cur, silent(), hub);
      StateId end = build_sumfree(a, *s.star_bodies[i], hub);
      a.add_edge(end, silent(), hub);
      StateId after = a.add_state();
      a.add_edge(hub, silent(), after);
      cur = after;
    }
  }
  return cur;
}

}  // namespace

PairAutomaton expr_automaton(const ExprPtr& e) {
  PairAutomaton a;
  StateId s = a.add_state(), f = a.add_state();
  a.add_initial(s);
  a.set_final(f);
  build(a, e, s, f);
  return a;
}

PairAutomaton sumfree_automaton(const SumfreeExpr& s) {
  PairAutomaton a;
  StateId init = a.add_state();
  a.add_initial(init);
  a.set_final(build_sumfree(a, s, init));
  return a;
}

std::string to_string(const SumfreeExpr& s) {
  std::string out;
  auto sep = [&out] {
    if (!out.empty()) out += " ";
  };
  for (std::size_t i = 0; i < s.constants.size(); ++i) {
    if (!is_unit(s.constants[i]) || s.constants.size() == 1) {
      sep();
      out += is_unit(s.constants[i])
                 ? std::string("()")
                 : "(" + to_utf8(s.constants[i].left) + "," +
                       to_utf8(s.constants[i].right) + ")";
    }
    if (i < s.star_bodies.size()) {
      sep();
      const SumfreeExpr& b = *s.star_bodies[i];
      const bool simple = b.star_bodies.empty();
      out += simple ? to_string(b) + "*" : "(" + to_string(b) + ")*";
    }
  }
  return out;
}

ExprPtr to_expr(const SumfreeExpr& s) {
  std::vector<ExprPtr> parts;
  for (std::size_t i = 0; i < s.constants.size(); ++i) {
    parts.push_back(PairExpr::atom(s.constants[i]));
    if (i < s.star_bodies.size()) {
      parts.push_back(PairExpr::star(to_expr(*s.star_bodies[i])));
    }
  }
  return PairExpr::concat(std::move(parts));
}

std::size_t constant_length(const SumfreeExpr& s) {
  std::size_t n = 0;
  for (const auto& c : s.constants) n += c.left.size() + c.right.size();
  for (const auto& b : s.star_bodies) n += constant_length(*b);
  return n;
}

std::size_t star_count(const SumfreeExpr& s) {
  std::size_t n = s.star_bodies.size();
  for (const auto& b : s.star_bodies) n += star_count(*b);
  return n;
}

namespace {

class Decomposer {
 public:
  explicit Decomposer(std::size_t limit) : limit_(limit) {}

  std::vector<SumfreePtr> run(const ExprPtr& e) {
    if (auto it = memo_.find(e.get()); it != memo_.end()) return it->second;
    std::vector<SumfreePtr> r = compute(e);
    memo_.emplace(e.get(), r);
    return r;
  }

 private:
  using Kind = PairExpr::Kind;

  static SumfreePtr unit() {
    static const SumfreePtr kUnit =
        std::make_shared<const SumfreeExpr>(SumfreeExpr{{PairLabel{}}, {}});
    return kUnit;
  }

  static bool is_unit_expr(const SumfreeExpr& s) {
    return s.star_bodies.empty() && is_unit(s.constants.front());
  }

  static SumfreePtr concat(const SumfreeExpr& a, const SumfreeExpr& b) {
    SumfreeExpr r;
    r.constants.assign(a.constants.begin(), a.constants.end() - 1);
    r.constants.push_back(join(a.constants.back(), b.constants.front()));
    r.constants.insert(r.constants.end(), b.constants.begin() + 1,
                       b.constants.end());
    r.star_bodies = a.star_bodies;
    r.star_bodies.insert(r.star_bodies.end(), b.star_bodies.begin(),
                         b.star_bodies.end());
    return std::make_shared<const SumfreeExpr>(std::move(r));
  }

  static SumfreePtr star_single(const SumfreePtr& body) {
    if (is_unit_expr(*body)) return unit();
    // (E*)* = E*
    if (body->star_bodies.size() == 1 && is_unit(body->constants[0]) &&
        is_unit(body->constants[1])) {
      return body;
    }
    return std::make_shared<const SumfreeExpr>(
        SumfreeExpr{{PairLabel{}, PairLabel{}}, {body}});
  }

  // (S1 + R)* = (S1* R)* S1*, applied until one summand is left.
  SumfreePtr star_of(std::vector<SumfreePtr> list) {
    std::erase_if(list, [](const SumfreePtr& s) { return is_unit_expr(*s); });
    if (list.empty()) return unit();
    if (list.size() == 1) return star_single(list.front());
    SumfreePtr first = star_single(list.front());
    std::vector<SumfreePtr> rest;
    for (std::size_t i = 1; i < list.size(); ++i) {
      rest.push_back(concat(*first, *list[i]));
    }
    return concat(*star_of(std::move(rest)), *first);
  }

  std::vector<SumfreePtr> dedupe(std::vector<SumfreePtr> list) {
    std::vector<SumfreePtr> out;
    std::set<std::string> seen;
    for (auto& s : list) {
      if (seen.insert(to_string(*s)).second) out.push_back(std::move(s));
    }
    if (out.size() > limit_) {
      throw ResourceError("sumfree_decompose: more than " +
                          std::to_string(limit_) + " summands");
    }
    return out;
  }

  std::vector<SumfreePtr> compute(const ExprPtr& e) {
    switch (e->kind()) {
      case Kind::kEmpty:
        return {};
      case Kind::kAtom:
        return {std::make_shared<const SumfreeExpr>(
            SumfreeExpr{{e->label()}, {}})};
      case Kind::kSum: {
        std::vector<SumfreePtr> all;
        for (const auto& c : e->children()) {
          auto part = run(c);
          all.insert(all.end(), part.begin(), part.end());
          if (all.size() > limit_) all = dedupe(std::move(all));
        }
        return dedupe(std::move(all));
      }
      case Kind::kConcat: {
        std::vector<SumfreePtr> acc{unit()};
        for (const auto& c : e->children()) {
          auto part = run(c);
          if (acc.size() * part.size() > limit_ * 4) {
            throw ResourceError("sumfree_decompose: more than " +
                                std::to_string(limit_) + " summands");
          }
          std::vector<SumfreePtr> next;
          for (const auto& a : acc) {
            for (const auto& b : part) next.push_back(concat(*a, *b));
          }
          acc = dedupe(std::move(next));
        }
        return acc;
      }
      case Kind::kStar:
        return {star_of(run(e->children().front()))};
    }
    return {};
  }

  std::size_t limit_;
  std::unordered_map<const PairExpr*, std::vector<SumfreePtr>> memo_;
};

}  // namespace

std::vector<SumfreePtr> sumfree_decompose(const ExprPtr& e, std::size_t limit) {
  return Decomposer(limit).run(e);
}

}  // namespace transdist
