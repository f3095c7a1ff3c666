#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ringlab/cache.hpp"

using namespace ringlab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "ringlab_cache_tests";
  fs::create_directories(dir);
  const auto p = dir / name;
  fs::remove(p);
  return p;
}

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) ++n;
  return n;
}

}  // namespace

TEST(Cache, MissingFileIsEmpty) {
  VerdictCache cache(scratch("missing.jsonl"), "1.0");
  EXPECT_EQ(cache.size(), 0u);
  EXPECT_FALSE(cache.get("Z3", "weakly_nil_clean").has_value());
}

TEST(Cache, RoundTrip) {
  const auto path = scratch("roundtrip.jsonl");
  {
    VerdictCache cache(path, "1.0");
    cache.put({"Z3 x Z3", "weakly_nil_clean", false, {{"element", 5}}});
    cache.put({"Z3 x Z3", "weakly_nil_neat", true, nullptr});
  }
  VerdictCache again(path, "1.0");
  EXPECT_EQ(again.size(), 2u);
  const auto hit = again.get("Z3 x Z3", "weakly_nil_clean");
  ASSERT_TRUE(hit.has_value());
  EXPECT_FALSE(hit->verdict);
  EXPECT_EQ(hit->witness["element"], 5);
  EXPECT_TRUE(again.get("Z3 x Z3", "weakly_nil_neat")->verdict);
  EXPECT_FALSE(again.get("Z3 x Z3", "nil_clean").has_value());
}

TEST(Cache, VersionBumpMisses) {
  const auto path = scratch("version.jsonl");
  {
    VerdictCache cache(path, "1.0");
    cache.put({"Z2", "nil_clean", true, nullptr});
  }
  VerdictCache bumped(path, "1.1");
  EXPECT_FALSE(bumped.get("Z2", "nil_clean").has_value());
  EXPECT_EQ(bumped.skipped_lines(), 0u);
}

TEST(Cache, CorruptMiddleLineSkipped) {
  const auto path = scratch("corrupt.jsonl");
  {
    VerdictCache cache(path, "1.0");
    cache.put({"Z2", "nil_clean", true, nullptr});
  }
  {
    std::ofstream out(path, std::ios::app);
    out << "{\"key\": \"Z4\", \"prop\n";
    out << "[1, 2, 3]\n";
  }
  {
    VerdictCache cache(path, "1.0");
    cache.put({"Z3", "nil_clean", false, {{"element", 2}}});
  }
  testing::internal::CaptureStderr();
  VerdictCache cache(path, "1.0");
  const auto err = testing::internal::GetCapturedStderr();
  EXPECT_EQ(cache.skipped_lines(), 2u);
  EXPECT_NE(err.find("warning"), std::string::npos);
  EXPECT_TRUE(cache.get("Z2", "nil_clean")->verdict);
  EXPECT_FALSE(cache.get("Z3", "nil_clean")->verdict);
}

TEST(Cache, AppendOnly) {
  const auto path = scratch("append.jsonl");
  VerdictCache cache(path, "1.0");
  cache.put({"Z2", "nil_clean", true, nullptr});
  cache.put({"Z2", "nil_clean", true, nullptr});
  cache.put({"Z5", "nil_clean", false, nullptr});
  EXPECT_EQ(cache.size(), 2u);
  EXPECT_EQ(line_count(path), 2u);
}
