#pragma once

#include <filesystem>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "permcomp/enumeration.hpp"
#include "permcomp/report.hpp"

namespace permcomp::cli {

inline constexpr const char* kToolVersion = "permcomp 1.0.0";

/// On-disk store of results keyed by (operation, parameters). The file format
/// is internal and may change between versions. Entries from another tool
/// version, or whose checksum no longer matches, are ignored.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path file);

  std::optional<nlohmann::json> lookup(const std::string& op, const nlohmann::json& params) const;
  /// Writes through to disk.
  void store(const std::string& op, const nlohmann::json& params, const nlohmann::json& result);

  const std::filesystem::path& file() const { return file_; }
  std::size_t hits() const { return hits_; }

 private:
  static std::string key(const std::string& op, const nlohmann::json& params);
  void save() const;

  std::filesystem::path file_;
  nlohmann::json entries_ = nlohmann::json::object();
  mutable std::mutex mutex_;
  mutable std::size_t hits_ = 0;
};

/// FNV-1a over the bytes of `text`, as 16 hex digits.
std::string checksum(const std::string& text);

/// Every acceptance claim at default scale. Cached reports are reused when
/// `cache` is given.
std::vector<Report> reproduce_all(const SweepOptions& options, ResultCache* cache = nullptr);

/// Entry point behind the permcomp executable; `args` excludes the program
/// name. Returns 0 on success or PASS, 1 on FAIL, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permcomp::cli
