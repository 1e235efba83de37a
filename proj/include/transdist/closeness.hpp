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

#ifndef TRANSDIST_CLOSENESS_HPP_
#define TRANSDIST_CLOSENESS_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "transdist/words.hpp"

namespace transdist {

enum class Verdict { kClose, kNotClose, kUnknown };

std::string_view verdict_name(Verdict v);  // CLOSE, NOT_CLOSE, UNKNOWN

// Input family prefix · loop^i · suffix on which the output distance grows
// without bound. An empty loop denotes a single input whose outputs are at
// infinite distance.
struct PumpCertificate {
  Word prefix;
  Word loop;
  Word suffix;

  Word instance(std::size_t i) const {
    Word w = prefix;
    for (std::size_t k = 0; k < i; ++k) w += loop;
    return w + suffix;
  }
};

struct Closeness {
  Verdict verdict = Verdict::kUnknown;
  // Upper bound on the distance when close.
  ExtendedNat bound = ExtendedNat::infinity();
  std::optional<PumpCertificate> certificate;
  std::string diagnostic;

  static Closeness close(ExtendedNat bound) {
    Closeness c;
    c.verdict = Verdict::kClose;
    c.bound = bound;
    return c;
  }
  static Closeness not_close(std::optional<PumpCertificate> cert,
                             std::string why) {
    Closeness c;
    c.verdict = Verdict::kNotClose;
    c.certificate = std::move(cert);
    c.diagnostic = std::move(why);
    return c;
  }
  static Closeness unknown(std::string why) {
    Closeness c;
    c.diagnostic = std::move(why);
    return c;
  }
};

}  // namespace transdist

#endif  // TRANSDIST_CLOSENESS_HPP_
