#include <doctest.h>

#include <filesystem>
#include <cstdlib>
#include <fstream>
#include <unistd.h>

#include "minkowski/cache.hpp"

using namespace minkowski;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("minkowski-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cache") {

TEST_CASE("cache keys are stable and distinct") {
  const MomentProvenance a{MomentSource::kSystemA, 500, 400, 400};
  MomentProvenance b = a;
  b.source = MomentSource::kSystemB;
  const std::string key = moment_cache_key(a);
  CHECK(key.size() == 16);
  CHECK(key == moment_cache_key(a));
  CHECK(key != moment_cache_key(b));
  b = a;
  b.digits = 401;
  CHECK(key != moment_cache_key(b));
}

TEST_CASE("store then lookup returns identical bytes") {
  const fs::path dir = fresh_dir("store");
  const MomentCache cache(dir);
  const PrecisionContext ctx(40);
  const MomentVector m = solve_moments({MomentSystem::kA, 10, 50}, ctx);
  CHECK_FALSE(cache.lookup(m.provenance).has_value());
  const std::string bytes = cache.store(m);
  const auto hit = cache.lookup(m.provenance);
  REQUIRE(hit.has_value());
  CHECK(*hit == bytes);
  CHECK(fs::exists(cache.path_for(m.provenance)));

  MomentProvenance other = m.provenance;
  other.size = 11;
  CHECK_FALSE(cache.lookup(other).has_value());
  fs::remove_all(dir);
}

TEST_CASE("a file with mismatched provenance is ignored") {
  const fs::path dir = fresh_dir("mismatch");
  fs::create_directories(dir);
  const MomentCache cache(dir);
  const MomentProvenance p{MomentSource::kSystemB, 30, 60, 50};
  std::ofstream(cache.path_for(p)) << R"({"provenance": {"source": "B", "size": 31, "series_terms": 60, "digits": 50}, "values": []})";
  CHECK_FALSE(cache.lookup(p).has_value());
  std::ofstream(cache.path_for(p)) << "not json";
  CHECK_FALSE(cache.lookup(p).has_value());
  fs::remove_all(dir);
}

TEST_CASE("atomic writes leave no temporary files") {
  const fs::path dir = fresh_dir("atomic");
  fs::create_directories(dir);
  write_file_atomically(dir / "out.txt", "hello\n");
  write_file_atomically(dir / "out.txt", "again\n");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& entry : fs::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  std::ifstream in(dir / "out.txt");
  std::string line;
  std::getline(in, line);
  CHECK(line == "again");
  fs::remove_all(dir);
}

TEST_CASE("cache directory override") {
  ::setenv(kCacheDirEnv, "/tmp/minkowski-override", 1);
  CHECK(default_cache_dir() == fs::path("/tmp/minkowski-override"));
  ::unsetenv(kCacheDirEnv);
  CHECK(default_cache_dir() != fs::path("/tmp/minkowski-override"));
}

}  // TEST_SUITE
