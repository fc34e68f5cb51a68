#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>

#include "permcomp/cli.hpp"

namespace permcomp::cli {

using nlohmann::json;

std::string checksum(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

ResultCache::ResultCache(std::filesystem::path file) : file_(std::move(file)) {
  std::ifstream in(file_);
  if (!in) return;
  try {
    json doc = json::parse(in);
    if (doc.is_object() && doc.contains("entries") && doc["entries"].is_object()) entries_ = doc["entries"];
  } catch (const json::exception&) {
    // An unreadable cache is treated as empty and rewritten on the next store.
  }
}

std::string ResultCache::key(const std::string& op, const json& params) { return op + " " + params.dump(); }

std::optional<json> ResultCache::lookup(const std::string& op, const json& params) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key(op, params));
  if (it == entries_.end()) return std::nullopt;
  try {
    if (it->at("version").get<std::string>() != kToolVersion) return std::nullopt;
    const json& result = it->at("result");
    if (it->at("checksum").get<std::string>() != checksum(result.dump())) return std::nullopt;
    ++hits_;
    return result;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& op, const json& params, const json& result) {
  std::lock_guard lock(mutex_);
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  entries_[key(op, params)] = {
      {"version", kToolVersion},
      {"op", op},
      {"params", params},
      {"result", result},
      {"checksum", checksum(result.dump())},
      {"timestamp", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
  };
  save();
}

void ResultCache::save() const {
  if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path());
  const auto temp = std::filesystem::path(file_.string() + ".tmp");
  {
    std::ofstream out(temp);
    out << json{{"format", 1}, {"entries", entries_}}.dump(1) << '\n';
  }
  std::filesystem::rename(temp, file_);
}

}  // namespace permcomp::cli
