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

#include <algorithm>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vithiele/concavity.hpp"
#include "vithiele/core.hpp"
#include "vithiele/errors.hpp"
#include "vithiele/io.hpp"
#include "vithiele/oracle.hpp"
#include "vithiele/solver.hpp"
#include "vithiele/structure.hpp"

namespace {

using namespace vithiele;

std::string join_ids(const std::vector<int>& zero_based) {
  std::string out;
  for (std::size_t i = 0; i < zero_based.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(zero_based[i] + 1);
  }
  return out;
}

WeightScheme resolve_weights(const std::string& rule, const std::string& weights_path,
                             const ApprovalProfile& profile) {
  if (rule.empty() == weights_path.empty()) {
    throw InputError("give exactly one of --rule and --weights");
  }
  const std::string spec = rule.empty() ? "file:" + weights_path : rule;
  return weights_from_spec(spec, profile.num_voters, profile.num_candidates);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Thiele committee elections on voter-interval approval profiles"};
  app.require_subcommand(1);

  std::string profile_path, rule, weights_path, order = "auto";
  std::string committee_a, committee_b, density = "1/2", output_path;
  int k = 0, gen_voters = 0, gen_candidates = 0;
  std::uint64_t seed = 1;
  bool as_json = false, shuffle = false;

  CLI::App* solve = app.add_subcommand("solve", "Optimal committee of size k");
  solve->add_option("-p,--profile", profile_path, "profile file")->required();
  solve->add_option("-k", k, "committee size")->required();
  solve->add_option("-r,--rule", rule, "av | pav | cc | geom:<p> | trunc:<l>");
  solve->add_option("-w,--weights", weights_path, "per-voter weights file");
  solve->add_option("--order", order, "auto | given")->check(CLI::IsMember({"auto", "given"}));
  solve->add_flag("--json", as_json, "machine-readable output");

  CLI::App* check = app.add_subcommand("check", "Classify the profile's domain");
  check->add_option("-p,--profile", profile_path, "profile file")->required();
  check->add_flag("--json", as_json, "machine-readable output");

  CLI::App* curve = app.add_subcommand("curve", "Score for every committee size");
  curve->add_option("-p,--profile", profile_path, "profile file")->required();
  curve->add_option("-r,--rule", rule, "av | pav | cc | geom:<p> | trunc:<l>");
  curve->add_option("-w,--weights", weights_path, "per-voter weights file");
  curve->add_flag("--json", as_json, "machine-readable output");

  CLI::App* combine_cmd = app.add_subcommand("combine", "Interpolate two committees to size k");
  combine_cmd->add_option("-p,--profile", profile_path, "profile file")->required();
  combine_cmd->add_option("-a", committee_a, "first committee file")->required();
  combine_cmd->add_option("-b", committee_b, "second committee file")->required();
  combine_cmd->add_option("-k", k, "target size")->required();
  combine_cmd->add_option("-r,--rule", rule, "av | pav | cc | geom:<p> | trunc:<l>");
  combine_cmd->add_option("-w,--weights", weights_path, "per-voter weights file");
  combine_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* gen = app.add_subcommand("gen", "Random voter-interval profile");
  gen->add_option("-n", gen_voters, "voters")->required();
  gen->add_option("-m", gen_candidates, "candidates")->required();
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--density", density, "expected interval length as a fraction of n");
  gen->add_flag("--shuffle", shuffle, "shuffle the voters afterwards");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (solve->parsed()) {
    ApprovalProfile profile = load_profile(profile_path);
    if (order == "given") profile.voter_order = identity_order(profile.num_voters);
    const WeightScheme weights = resolve_weights(rule, weights_path, profile);
    const SolveCertificate certificate = solve_thiele_vi(profile, weights, k);
    if (as_json) {
      std::cout << certificate_json(certificate) << '\n';
    } else {
      std::cout << "committee: " << join_ids(certificate.committee) << '\n'
                << "score: " << to_string(certificate.score) << '\n'
                << "mode: "
                << (certificate.mode == SolveCertificate::Mode::DirectHit ? "direct-hit"
                                                                          : "combined")
                << '\n'
                << "lambda: " << to_string(certificate.lambda_bar) << '\n'
                << "iterations: " << certificate.iterations << '\n';
    }
    return 0;
  }

  if (check->parsed()) {
    const ApprovalProfile profile = load_profile(profile_path);
    const DomainReport report = classify_profile(profile);
    if (as_json) {
      std::cout << report_json(report, profile) << '\n';
    } else {
      const auto yesno = [](bool b) { return b ? "yes" : "no"; };
      std::cout << "voter-interval: " << yesno(report.is_vi) << '\n'
                << "endpoint-nested: " << yesno(report.is_en) << '\n'
                << "dominancy-free: " << yesno(report.is_dominancy_free) << '\n'
                << "inclusion-free: " << yesno(report.is_inclusion_free) << '\n';
      if (report.vi_voter_order) {
        std::cout << "vi-voter-order: " << join_ids(*report.vi_voter_order) << '\n';
      }
      if (report.ci_candidate_order) {
        std::vector<int> original;
        for (int c : *report.ci_candidate_order) original.push_back(profile.original_id[c]);
        std::cout << "ci-candidate-order: " << join_ids(original) << '\n';
      }
    }
    return 0;
  }

  if (curve->parsed()) {
    const ApprovalProfile profile = load_profile(profile_path);
    const WeightScheme weights = resolve_weights(rule, weights_path, profile);
    const std::vector<Rational> scores = solve_curve(profile, weights);
    if (as_json) {
      std::cout << curve_json(scores) << '\n';
    } else {
      std::cout << "k,score\n";
      for (std::size_t i = 0; i < scores.size(); ++i) {
        std::cout << i << ',' << to_string(scores[i]) << '\n';
      }
    }
    return 0;
  }

  if (combine_cmd->parsed()) {
    const ApprovalProfile profile = load_profile(profile_path);
    const WeightScheme weights = resolve_weights(rule, weights_path, profile);
    Committee first = load_committee(committee_a, profile);
    Committee second = load_committee(committee_b, profile);
    if (first.size() > second.size()) std::swap(first, second);
    if (static_cast<int>(first.size()) >= k || k >= static_cast<int>(second.size())) {
      throw InputError("target size must lie strictly between the committee sizes");
    }
    const std::vector<int> vi_order = require_vi_order(profile);
    const IntervalFamily candidates = profile_to_family(profile, vi_order);
    const PointValuation valuation =
        valuation_from_weights(profile, weights, profile.num_candidates, vi_order);
    const CombineResult result = combine_to_size(committee_family(candidates, first),
                                                 committee_family(candidates, second), k,
                                                 valuation);
    std::vector<int> combined;
    for (const Interval& interval : result.combined) combined.push_back(interval.tag);
    std::sort(combined.begin(), combined.end());
    const std::vector<int> original = committee_to_original(profile, combined);
    const Rational bound =
        (Rational(1) - result.theta) * result.value_small + result.theta * result.value_large;
    if (as_json) {
      nlohmann::json out;
      out["committee"] = nlohmann::json::array();
      for (int id : original) out["committee"].push_back(id + 1);
      out["value"] = to_string(result.value_combined);
      out["bound"] = to_string(bound);
      out["theta"] = to_string(result.theta);
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "committee: " << join_ids(original) << '\n'
                << "value: " << to_string(result.value_combined) << '\n'
                << "bound: " << to_string(bound) << '\n'
                << "theta: " << to_string(result.theta) << '\n';
    }
    return 0;
  }

  if (gen->parsed()) {
    ApprovalProfile profile = random_vi_profile(seed, gen_voters, gen_candidates,
                                                parse_rational(density));
    if (shuffle) profile = shuffle_voters(profile, seed + 1).profile;
    std::cout << serialize_profile(profile);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NotViError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}
