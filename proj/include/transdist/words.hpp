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

#ifndef TRANSDIST_WORDS_HPP_
#define TRANSDIST_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "transdist/errors.hpp"

namespace transdist {

// A letter is a single Unicode code point. Words are sequences of letters.
using Letter = char32_t;
using Word = std::u32string;
using WordPair = std::pair<Word, Word>;

// Reserved out-of-alphabet marker used to pad the shorter side of a pair
// when relations are resynchronized letter-to-letter.
inline constexpr Letter kPadLetter = static_cast<Letter>(0xFFFF);

// Ordered finite set of letters. index() gives the dense id 0..size()-1.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<Letter> letters);
  explicit Alphabet(std::vector<Letter> letters);

  // Collects every letter occurring in the given words.
  static Alphabet of(std::initializer_list<std::u32string_view> words);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool contains(Letter a) const;
  std::optional<std::size_t> index(Letter a) const;
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  bool contains_all(std::u32string_view w) const;
  Alphabet merged(const Alphabet& other) const;

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Letter> letters_;  // sorted, unique
};

// Factor w[i..j] with 1-based inclusive bounds; empty when i > j.
Word factor(std::u32string_view w, std::size_t i, std::size_t j);

// Value in N ∪ {∞}. Addition saturates at infinity.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(std::uint64_t v) : value_(v) {}  // NOLINT(runtime/explicit)

  static constexpr ExtendedNat infinity() {
    ExtendedNat r;
    r.infinite_ = true;
    return r;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  // Precondition: finite.
  std::uint64_t value() const;

  friend constexpr ExtendedNat operator+(ExtendedNat a, ExtendedNat b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return ExtendedNat(a.value_ + b.value_);
  }
  friend constexpr ExtendedNat operator*(std::uint64_t c, ExtendedNat a) {
    if (a.infinite_) return c == 0 ? ExtendedNat(0) : infinity();
    return ExtendedNat(c * a.value_);
  }
  ExtendedNat& operator+=(ExtendedNat o) { return *this = *this + o; }

  friend constexpr bool operator==(ExtendedNat a, ExtendedNat b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtendedNat a,
                                                    ExtendedNat b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, ExtendedNat n);

inline ExtendedNat min(ExtendedNat a, ExtendedNat b) { return b < a ? b : a; }
inline ExtendedNat max(ExtendedNat a, ExtendedNat b) { return a < b ? b : a; }

// UTF-8 conversion. Throws InputError on malformed input.
Word from_utf8(std::string_view s);
std::string to_utf8(std::u32string_view w);
std::string to_utf8(Letter a);

// UTF-8 rendering; the empty word prints as `empty`.
std::string format_word(std::u32string_view w, std::string_view empty = "");

}  // namespace transdist

#endif  // TRANSDIST_WORDS_HPP_
