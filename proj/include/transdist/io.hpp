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

#ifndef TRANSDIST_IO_HPP_
#define TRANSDIST_IO_HPP_

#include <cstddef>
#include <string>
#include <string_view>

#include "transdist/errors.hpp"
#include "transdist/relations.hpp"
#include "transdist/transducer.hpp"

namespace transdist {

// Text format, one directive per line, `#` starts a comment:
//
//   kind: transducer            (or relation; transducer when omitted)
//   alphabet_in: a b
//   alphabet_out: a b
//   states: q0 q1
//   initial: q0
//   final: q1 "b"               (relations: no output word)
//   transition: q0 a "a" q1     (relations: src left right dst)
//
// Words are bare tokens or double-quoted strings with \" and \\ escapes;
// the empty word is "". Letters are Unicode code points.

class ParseError : public InputError {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column,
             const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Transducer parse_transducer(std::string_view text,
                            const std::string& source = "<input>");
RationalRelation parse_relation(std::string_view text,
                                const std::string& source = "<input>");

// Read a file and parse it; the path is used as the source name.
Transducer load_transducer(const std::string& path);
RationalRelation load_relation(const std::string& path);

std::string write_transducer(const Transducer& t);
std::string write_relation(const RationalRelation& r);

// Word in the token syntax: bare when that is unambiguous, quoted otherwise.
std::string quote_word(std::u32string_view w);

}  // namespace transdist

#endif  // TRANSDIST_IO_HPP_
