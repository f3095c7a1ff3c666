#include "ringlab/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace ringlab {

VerdictCache::VerdictCache(std::filesystem::path path, std::string version)
    : path_(std::move(path)), version_(std::move(version)) {
  load();
}

void VerdictCache::load() {
  std::ifstream in(path_);
  if (!in) return;  // a missing file is an empty cache
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      if (j.at("version").get<std::string>() != version_) continue;
      CacheEntry e;
      e.key = j.at("key").get<std::string>();
      e.property = j.at("property").get<std::string>();
      e.verdict = j.at("verdict").get<bool>();
      e.witness = j.value("witness", nlohmann::json());
      entries_[{e.key, e.property}] = std::move(e);
    } catch (const nlohmann::json::exception&) {
      ++skipped_;
      std::cerr << "warning: skipping unreadable cache line " << line_no << " in " << path_
                << "\n";
    }
  }
}

std::optional<CacheEntry> VerdictCache::get(const std::string& key,
                                            const std::string& property) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find({key, property});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void VerdictCache::put(const CacheEntry& entry) {
  nlohmann::json j = {{"version", version_},
                      {"key", entry.key},
                      {"property", entry.property},
                      {"verdict", entry.verdict},
                      {"witness", entry.witness}};
  std::lock_guard lock(mutex_);
  const auto it = entries_.find({entry.key, entry.property});
  if (it != entries_.end() && it->second.verdict == entry.verdict &&
      it->second.witness == entry.witness) {
    return;
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to cache file " + path_.string());
  out << j.dump() << "\n";
  entries_[{entry.key, entry.property}] = entry;
}

std::size_t VerdictCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::optional<std::filesystem::path> cache_path_from_env() {
  const char* value = std::getenv(kCacheEnvVar);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::filesystem::path(value);
}

}  // namespace ringlab
