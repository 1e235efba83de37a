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

#ifndef TRANSDIST_ERRORS_HPP_
#define TRANSDIST_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transdist {

// Malformed or inconsistent user input (bad alphabet, unknown state, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction exceeded its configured state or summand ceiling.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug or an ambiguous machine.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The request is outside the supported fragment.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ceiling on the number of states any on-the-fly construction may create.
// Defaults to 2000000; the TRANSDIST_STATE_CEILING environment variable and
// set_state_ceiling() override it.
std::size_t state_ceiling();
void set_state_ceiling(std::size_t ceiling);

// Throws ResourceError naming `what` when `count` exceeds the ceiling.
void check_ceiling(std::size_t count, const char* what);

}  // namespace transdist

#endif  // TRANSDIST_ERRORS_HPP_
