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

#ifndef VITHIELE_IO_HPP_
#define VITHIELE_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "vithiele/core.hpp"
#include "vithiele/solver.hpp"
#include "vithiele/structure.hpp"

namespace vithiele {

// Profile files: a header "n m", then one ballot line per voter holding the
// 1-based indices of the approved candidates (a blank line is an empty
// ballot). '#' starts a comment; comment-only lines are skipped.
ApprovalProfile parse_profile(std::istream& input);
ApprovalProfile load_profile(const std::string& path);
std::string serialize_profile(const ApprovalProfile& profile);

// Weight specifications: av | pav | cc | geom:<rational> | trunc:<integer> |
// file:<path>. Weight files carry one line of rationals per voter; short
// lines are padded with zeros.
WeightScheme weights_from_spec(const std::string& spec, int voters, int entries);

// Committee files: one 1-based candidate index per line, '#' comments.
// Returns sorted internal ids; rejects duplicates, out-of-universe indices
// and candidates without approvals.
Committee load_committee(const std::string& path, const ApprovalProfile& profile);

// JSON renderings. Scores and multipliers are exact "p/q" strings.
std::string certificate_json(const SolveCertificate& certificate);
std::string report_json(const DomainReport& report, const ApprovalProfile& profile);
std::string curve_json(const std::vector<Rational>& scores);

}  // namespace vithiele

#endif  // VITHIELE_IO_HPP_
