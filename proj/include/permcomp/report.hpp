#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace permcomp {

/// Outcome of checking one claim.
struct Report {
  Report() = default;
  Report(std::string claim_id, std::string text) : claim(std::move(claim_id)), description(std::move(text)) {}

  std::string claim;
  std::string description;
  bool pass = true;
  std::vector<std::string> witnesses;
  /// Non-empty whenever pass is false.
  std::vector<std::string> counterexamples;
  nlohmann::json params = nlohmann::json::object();
  double runtime_seconds = 0;

  /// Marks the report failed. `counterexample` names the offending permutation or graph.
  void fail(std::string counterexample);
  /// fail(counterexample) unless ok.
  void require(bool ok, const std::string& counterexample);

  /// Runtime is left out unless asked for, so equal inputs give equal documents.
  nlohmann::json to_json(bool include_runtime = false) const;
  /// "PASS claim: description" plus indented counterexamples.
  std::string to_text(bool include_runtime = false) const;

  /// Inverse of to_json; throws nlohmann::json::exception on malformed input.
  static Report from_json(const nlohmann::json& doc);
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace permcomp
