#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include <json.hpp>

namespace ringlab {

/// Environment variable naming the verdict cache file.
inline constexpr const char* kCacheEnvVar = "RINGLAB_CACHE";

struct CacheEntry {
  std::string key;       // canonical ring expression
  std::string property;  // e.g. "weakly_nil_neat"
  bool verdict = false;
  nlohmann::json witness;  // null, {"element": i} or {"ideal": [...]}
};

/// Append-only, line-delimited JSON store of verdicts. Lines written by another
/// tool version are ignored; unreadable lines are skipped with a warning.
/// Safe for concurrent get/put from several threads of one process.
class VerdictCache {
 public:
  explicit VerdictCache(std::filesystem::path path, std::string version = RINGLAB_VERSION);

  std::optional<CacheEntry> get(const std::string& key, const std::string& property) const;
  void put(const CacheEntry& entry);

  const std::filesystem::path& path() const noexcept { return path_; }
  std::size_t skipped_lines() const noexcept { return skipped_; }
  std::size_t size() const;

 private:
  void load();

  std::filesystem::path path_;
  std::string version_;
  std::size_t skipped_ = 0;
  mutable std::mutex mutex_;
  std::map<std::pair<std::string, std::string>, CacheEntry> entries_;
};

/// The path from RINGLAB_CACHE, if set and non-empty.
std::optional<std::filesystem::path> cache_path_from_env();

}  // namespace ringlab
