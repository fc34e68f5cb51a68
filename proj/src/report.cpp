#include "permcomp/report.hpp"

#include <cstdio>

namespace permcomp {

void Report::fail(std::string counterexample) {
  pass = false;
  counterexamples.push_back(counterexample.empty() ? "(unnamed)" : std::move(counterexample));
}

void Report::require(bool ok, const std::string& counterexample) {
  if (!ok) fail(counterexample);
}

nlohmann::json Report::to_json(bool include_runtime) const {
  nlohmann::json doc;
  doc["claim"] = claim;
  doc["description"] = description;
  doc["status"] = pass ? "PASS" : "FAIL";
  doc["params"] = params;
  doc["witnesses"] = witnesses;
  doc["counterexamples"] = counterexamples;
  if (include_runtime) doc["runtime_seconds"] = runtime_seconds;
  return doc;
}

Report Report::from_json(const nlohmann::json& doc) {
  Report r(doc.at("claim").get<std::string>(), doc.at("description").get<std::string>());
  r.pass = doc.at("status").get<std::string>() == "PASS";
  r.params = doc.at("params");
  r.witnesses = doc.at("witnesses").get<std::vector<std::string>>();
  r.counterexamples = doc.at("counterexamples").get<std::vector<std::string>>();
  if (doc.contains("runtime_seconds")) r.runtime_seconds = doc["runtime_seconds"].get<double>();
  return r;
}

std::string Report::to_text(bool include_runtime) const {
  std::string out = (pass ? "PASS " : "FAIL ") + claim + ": " + description;
  if (include_runtime) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, " (%.2fs)", runtime_seconds);
    out += buffer;
  }
  out += '\n';
  for (const auto& c : counterexamples) out += "  counterexample: " + c + '\n';
  return out;
}

}  // namespace permcomp
