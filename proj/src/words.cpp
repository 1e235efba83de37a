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

#include "transdist/words.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>

namespace transdist {

namespace {

std::size_t ceiling_from_env() {
  if (const char* env = std::getenv("TRANSDIST_STATE_CEILING")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2000000;
}

std::atomic<std::size_t>& ceiling_slot() {
  static std::atomic<std::size_t> slot{ceiling_from_env()};
  return slot;
}

}  // namespace

std::size_t state_ceiling() { return ceiling_slot().load(); }

void set_state_ceiling(std::size_t ceiling) {
  if (ceiling == 0) throw InputError("state ceiling must be positive");
  ceiling_slot().store(ceiling);
}

void check_ceiling(std::size_t count, const char* what) {
  if (count > state_ceiling()) {
    throw ResourceError(std::string(what) + ": exceeded state ceiling of " +
                        std::to_string(state_ceiling()));
  }
}

Alphabet::Alphabet(std::initializer_list<Letter> letters)
    : Alphabet(std::vector<Letter>(letters)) {}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::sort(letters_.begin(), letters_.end());
  letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
}

Alphabet Alphabet::of(std::initializer_list<std::u32string_view> words) {
  std::vector<Letter> all;
  for (auto w : words) all.insert(all.end(), w.begin(), w.end());
  return Alphabet(std::move(all));
}

bool Alphabet::contains(Letter a) const {
  return std::binary_search(letters_.begin(), letters_.end(), a);
}

std::optional<std::size_t> Alphabet::index(Letter a) const {
  auto it = std::lower_bound(letters_.begin(), letters_.end(), a);
  if (it == letters_.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

bool Alphabet::contains_all(std::u32string_view w) const {
  return std::all_of(w.begin(), w.end(), [&](Letter a) { return contains(a); });
}

Alphabet Alphabet::merged(const Alphabet& other) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), other.letters_.begin(), other.letters_.end());
  return Alphabet(std::move(all));
}

Word factor(std::u32string_view w, std::size_t i, std::size_t j) {
  if (i == 0) throw InputError("factor: positions are 1-based");
  if (i > j) return Word();
  if (j > w.size()) throw InputError("factor: upper bound past end of word");
  return Word(w.substr(i - 1, j - i + 1));
}

std::uint64_t ExtendedNat::value() const {
  if (infinite_) throw IntegrityError("value() of infinite ExtendedNat");
  return value_;
}

std::string ExtendedNat::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

std::ostream& operator<<(std::ostream& os, ExtendedNat n) {
  return os << n.to_string();
}

Word from_utf8(std::string_view s) {
  Word out;
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (c < 0x80) {
      len = 1;
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      throw InputError("malformed UTF-8 at byte " + std::to_string(i));
    }
    if (i + len > s.size()) {
      throw InputError("truncated UTF-8 at byte " + std::to_string(i));
    }
    for (std::size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) {
        throw InputError("malformed UTF-8 at byte " + std::to_string(i + k));
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string to_utf8(Letter a) {
  std::string out;
  auto cp = static_cast<std::uint32_t>(a);
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

std::string to_utf8(std::u32string_view w) {
  std::string out;
  for (Letter a : w) out += to_utf8(a);
  return out;
}

std::string format_word(std::u32string_view w, std::string_view empty) {
  if (w.empty()) return std::string(empty);
  return to_utf8(w);
}

}  // namespace transdist
