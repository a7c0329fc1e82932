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

#include "vithiele/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vithiele/errors.hpp"

namespace vithiele {

namespace {

// Lines with the comment suffix removed. `had_content` distinguishes a line
// that was blank from one that only carried a comment.
struct SourceLine {
  std::string text;
  bool comment_only = false;
};

std::vector<SourceLine> read_lines(std::istream& input) {
  std::vector<SourceLine> lines;
  std::string raw;
  while (std::getline(input, raw)) {
    SourceLine line;
    const std::size_t hash = raw.find('#');
    line.text = raw.substr(0, hash == std::string::npos ? raw.size() : hash);
    const bool blank = line.text.find_first_not_of(" \t\r") == std::string::npos;
    if (blank) line.text.clear();
    line.comment_only = blank && hash != std::string::npos;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<std::string> tokens_of(const std::string& text) {
  std::istringstream stream(text);
  std::vector<std::string> tokens;
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

long parse_long(const std::string& token, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw InputError(std::string("malformed ") + what + ": '" + token + "'");
  }
  if (used != token.size()) {
    throw InputError(std::string("malformed ") + what + ": '" + token + "'");
  }
  return value;
}

}  // namespace

ApprovalProfile parse_profile(std::istream& input) {
  const std::vector<SourceLine> lines = read_lines(input);
  std::size_t cursor = 0;
  while (cursor < lines.size() && lines[cursor].text.empty()) ++cursor;
  if (cursor == lines.size()) throw InputError("profile file has no header line");

  const std::vector<std::string> header = tokens_of(lines[cursor].text);
  if (header.size() != 2) throw InputError("profile header must be 'n m'");
  const long n = parse_long(header[0], "voter count");
  const long m = parse_long(header[1], "candidate count");
  if (n < 0 || m < 0) throw InputError("negative counts in profile header");
  ++cursor;

  std::vector<std::vector<int>> ballots;
  ballots.reserve(n);
  while (static_cast<long>(ballots.size()) < n && cursor < lines.size()) {
    const SourceLine& line = lines[cursor++];
    if (line.comment_only) continue;
    std::vector<int> ballot;
    for (const std::string& token : tokens_of(line.text)) {
      const long index = parse_long(token, "candidate index");
      if (index < 1 || index > m) {
        throw InputError("candidate index " + token + " outside 1.." + std::to_string(m));
      }
      ballot.push_back(static_cast<int>(index - 1));
    }
    ballots.push_back(std::move(ballot));
  }
  if (static_cast<long>(ballots.size()) < n) {
    throw InputError("profile file ends before all ballots are read");
  }
  for (; cursor < lines.size(); ++cursor) {
    if (!lines[cursor].text.empty()) throw InputError("unexpected content after the last ballot");
  }
  return ApprovalProfile::from_ballots(static_cast<int>(n), static_cast<int>(m), ballots);
}

ApprovalProfile load_profile(const std::string& path) {
  std::ifstream input(path);
  if (!input) throw InputError("cannot open profile file: " + path);
  return parse_profile(input);
}

std::string serialize_profile(const ApprovalProfile& profile) {
  std::ostringstream out;
  out << profile.num_voters << ' ' << profile.universe << '\n';
  for (int v = 0; v < profile.num_voters; ++v) {
    bool first = true;
    for (int c : profile.ballots[v]) {
      if (!first) out << ' ';
      out << profile.original_id[c] + 1;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

WeightScheme weights_from_file(const std::string& path, int voters, int entries) {
  std::ifstream input(path);
  if (!input) throw InputError("cannot open weights file: " + path);
  const std::vector<SourceLine> lines = read_lines(input);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(voters);
  for (const SourceLine& line : lines) {
    if (line.comment_only) continue;
    if (static_cast<int>(rows.size()) == voters) {
      if (!line.text.empty()) throw InputError("weights file has more rows than voters");
      continue;
    }
    std::vector<Rational> row;
    for (const std::string& token : tokens_of(line.text)) row.push_back(parse_rational(token));
    // Entries past the consulted prefix are ignored.
    if (static_cast<int>(row.size()) > entries) row.resize(entries);
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != voters) {
    throw InputError("weights file needs one row per voter");
  }
  return WeightScheme::per_voter(entries, std::move(rows));
}

}  // namespace

WeightScheme weights_from_spec(const std::string& spec, int voters, int entries) {
  if (spec == "av") return WeightScheme::av(voters, entries);
  if (spec == "pav") return WeightScheme::pav(voters, entries);
  if (spec == "cc") return WeightScheme::cc(voters, entries);
  if (spec.rfind("geom:", 0) == 0) {
    return WeightScheme::geometric(voters, entries, parse_rational(spec.substr(5)));
  }
  if (spec.rfind("trunc:", 0) == 0) {
    return WeightScheme::truncated(voters, entries,
                                   static_cast<int>(parse_long(spec.substr(6), "truncation")));
  }
  if (spec.rfind("file:", 0) == 0) return weights_from_file(spec.substr(5), voters, entries);
  throw InputError("unknown weight specification: '" + spec + "'");
}

Committee load_committee(const std::string& path, const ApprovalProfile& profile) {
  std::ifstream input(path);
  if (!input) throw InputError("cannot open committee file: " + path);
  Committee committee;
  for (const SourceLine& line : read_lines(input)) {
    if (line.text.empty()) continue;
    const std::vector<std::string> tokens = tokens_of(line.text);
    if (tokens.size() != 1) throw InputError("committee files hold one candidate per line");
    const long original = parse_long(tokens[0], "candidate index");
    if (original < 1 || original > profile.universe) {
      throw InputError("candidate index " + tokens[0] + " outside the universe");
    }
    const auto it = std::lower_bound(profile.original_id.begin(), profile.original_id.end(),
                                     static_cast<int>(original - 1));
    if (it == profile.original_id.end() || *it != original - 1) {
      throw InputError("candidate " + tokens[0] + " has no approvals");
    }
    committee.push_back(static_cast<int>(it - profile.original_id.begin()));
  }
  std::sort(committee.begin(), committee.end());
  if (std::adjacent_find(committee.begin(), committee.end()) != committee.end()) {
    throw InputError("committee file lists a candidate twice");
  }
  return committee;
}

namespace {

nlohmann::json ids_json(const std::vector<int>& zero_based) {
  nlohmann::json array = nlohmann::json::array();
  for (int id : zero_based) array.push_back(id + 1);
  return array;
}

}  // namespace

std::string certificate_json(const SolveCertificate& certificate) {
  nlohmann::json out;
  out["k"] = certificate.k;
  out["committee"] = ids_json(certificate.committee);
  out["score"] = to_string(certificate.score);
  out["mode"] = certificate.mode == SolveCertificate::Mode::DirectHit ? "direct-hit" : "combined";
  out["lambda"] = to_string(certificate.lambda_bar);
  out["iterations"] = certificate.iterations;
  if (certificate.audit) {
    nlohmann::json audit;
    audit["small"] = ids_json(certificate.audit->small_committee);
    audit["large"] = ids_json(certificate.audit->large_committee);
    audit["theta"] = to_string(certificate.audit->theta);
    audit["value_small"] = to_string(certificate.audit->value_small);
    audit["value_large"] = to_string(certificate.audit->value_large);
    out["combined"] = std::move(audit);
  }
  return out.dump(2);
}

std::string report_json(const DomainReport& report, const ApprovalProfile& profile) {
  nlohmann::json out;
  out["voter_interval"] = report.is_vi;
  out["endpoint_nested"] = report.is_en;
  out["dominancy_free"] = report.is_dominancy_free;
  out["inclusion_free"] = report.is_inclusion_free;
  if (report.vi_voter_order) out["vi_voter_order"] = ids_json(*report.vi_voter_order);
  if (report.ci_candidate_order) {
    std::vector<int> original;
    original.reserve(report.ci_candidate_order->size());
    for (int c : *report.ci_candidate_order) original.push_back(profile.original_id[c]);
    out["ci_candidate_order"] = ids_json(original);
  }
  return out.dump(2);
}

std::string curve_json(const std::vector<Rational>& scores) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t k = 0; k < scores.size(); ++k) {
    nlohmann::json row;
    row["k"] = k;
    row["score"] = to_string(scores[k]);
    rows.push_back(std::move(row));
  }
  return rows.dump(2);
}

}  // namespace vithiele
