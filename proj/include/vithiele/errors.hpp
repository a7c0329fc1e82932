// Copyright 2026 The vithiele Authors
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

#ifndef VITHIELE_ERRORS_HPP_
#define VITHIELE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace vithiele {

// Malformed or out-of-contract input: bad files, bad flags, argument ranges.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The profile is not Voter Interval (or its declared voter order does not
// realize the property). `candidate()` is the offending candidate's original
// 0-based id when a specific one can be named, -1 otherwise.
class NotViError : public std::runtime_error {
 public:
  explicit NotViError(const std::string& message, int candidate = -1)
      : std::runtime_error(message), candidate_(candidate) {}
  int candidate() const { return candidate_; }

 private:
  int candidate_;
};

// Internal consistency failure: a bug, never an input problem. Checks are
// always on, independent of NDEBUG.
[[noreturn]] void internal_check_failed(const char* what);

inline void internal_check(bool ok, const char* what) {
  if (!ok) internal_check_failed(what);
}

}  // namespace vithiele

#endif  // VITHIELE_ERRORS_HPP_
