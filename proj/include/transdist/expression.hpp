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

#ifndef TRANSDIST_EXPRESSION_HPP_
#define TRANSDIST_EXPRESSION_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "transdist/pair_automaton.hpp"

namespace transdist {

class PairExpr;
using ExprPtr = std::shared_ptr<const PairExpr>;

// Rational expression over pairs of words. Nodes are immutable and shared.
// Atoms carry the input track of the edges they came from.
class PairExpr {
 public:
  enum class Kind { kEmpty, kAtom, kConcat, kSum, kStar };

  static ExprPtr empty();
  static ExprPtr one();  // (ε, ε)
  static ExprPtr atom(PairLabel label);
  static ExprPtr atom(Word left, Word right) {
    return atom(PairLabel{std::move(left), std::move(right), Word()});
  }
  // The constructors below flatten nested nodes, merge adjacent atoms,
  // and apply the unit and zero laws.
  static ExprPtr concat(std::vector<ExprPtr> parts);
  static ExprPtr sum(std::vector<ExprPtr> parts);
  static ExprPtr star(ExprPtr body);

  Kind kind() const { return kind_; }
  const PairLabel& label() const { return label_; }
  const std::vector<ExprPtr>& children() const { return children_; }
  bool is_one() const {
    return kind_ == Kind::kAtom && label_.left.empty() && label_.right.empty();
  }

 private:
  PairExpr(Kind k, PairLabel l, std::vector<ExprPtr> c)
      : kind_(k), label_(std::move(l)), children_(std::move(c)) {}
  Kind kind_;
  PairLabel label_;
  std::vector<ExprPtr> children_;
};

// Parenthesized text: `(a,b)`, `E F`, `E + F`, `E*`, `()` for (ε,ε), `0` for
// the empty expression.
std::string to_string(const ExprPtr& e);

std::size_t expr_size(const ExprPtr& e);

// Expression for L(p) by state elimination. States are removed in ascending
// order of in-degree times out-degree, ties by index.
ExprPtr state_elimination(const PairAutomaton& p);

// Automaton for an expression (silent edges allowed, not normalized).
PairAutomaton expr_automaton(const ExprPtr& e);

// Sum-free expression (a0) E1* (a1) ... Ek* (ak): constants[i] sits between
// the stars, so constants.size() == star_bodies.size() + 1.
struct SumfreeExpr {
  std::vector<PairLabel> constants;
  std::vector<std::shared_ptr<const SumfreeExpr>> star_bodies;
};
using SumfreePtr = std::shared_ptr<const SumfreeExpr>;

std::string to_string(const SumfreeExpr& s);
ExprPtr to_expr(const SumfreeExpr& s);
PairAutomaton sumfree_automaton(const SumfreeExpr& s);

// Total letters in all constants, nested bodies included.
std::size_t constant_length(const SumfreeExpr& s);
// Number of star nodes, nested ones included.
std::size_t star_count(const SumfreeExpr& s);

inline constexpr std::size_t kDefaultSummandLimit = 4096;

// Sum of sum-free expressions with the same language. Throws ResourceError
// once more than `limit` summands would be produced at any node.
std::vector<SumfreePtr> sumfree_decompose(const ExprPtr& e,
                                          std::size_t limit = kDefaultSummandLimit);

}  // namespace transdist

#endif  // TRANSDIST_EXPRESSION_HPP_
