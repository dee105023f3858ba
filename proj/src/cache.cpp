#include "minkowski/cache.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unistd.h>

namespace minkowski {

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv(kCacheDirEnv); env != nullptr && *env != '\0') return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return std::filesystem::path(xdg) / "minkowski";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return std::filesystem::path(home) / ".cache" / "minkowski";
  }
  return ".minkowski-cache";
}

std::string moment_cache_key(const MomentProvenance& provenance) {
  const std::string text = to_string(provenance.source) + "|K=" + std::to_string(provenance.size) +
                           "|terms=" + std::to_string(provenance.series_terms) +
                           "|digits=" + std::to_string(provenance.digits);
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kHex[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

MomentCache::MomentCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path MomentCache::path_for(const MomentProvenance& provenance) const {
  return dir_ / ("moments-" + to_string(provenance.source) + "-" + moment_cache_key(provenance) + ".json");
}

std::optional<std::string> MomentCache::lookup(const MomentProvenance& provenance) const {
  std::ifstream in(path_for(provenance), std::ios::binary);
  if (!in) return std::nullopt;
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  // Guard against hash collisions and hand-edited files.
  try {
    const auto doc = nlohmann::json::parse(bytes);
    const auto& prov = doc.at("provenance");
    if (prov.at("source").get<std::string>() != to_string(provenance.source) ||
        prov.at("size").get<int>() != provenance.size ||
        prov.at("series_terms").get<int>() != provenance.series_terms ||
        prov.at("digits").get<int>() != provenance.digits) {
      return std::nullopt;
    }
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  return bytes;
}

std::string MomentCache::store(const MomentVector& m) const {
  std::ostringstream out;
  write_moments_json(out, m);
  std::string bytes = out.str();
  std::filesystem::create_directories(dir_);
  write_file_atomically(path_for(m.provenance), bytes);
  return bytes;
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  const std::filesystem::path tmp =
      path.parent_path() / (path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw InvalidArgument("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace minkowski
