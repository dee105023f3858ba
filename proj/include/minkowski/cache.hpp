#pragma once

// On-disk cache of solved moment vectors, keyed by a hash of
// (variant, K, terms, digits). Files are written via temp-file + rename.

#include <filesystem>
#include <optional>
#include <string>

#include "minkowski/moments.hpp"

namespace minkowski {

/// Environment variable overriding the cache location.
inline constexpr const char* kCacheDirEnv = "MINKOWSKI_CACHE_DIR";

/// $MINKOWSKI_CACHE_DIR, else $XDG_CACHE_HOME/minkowski, else
/// $HOME/.cache/minkowski, else ./.minkowski-cache.
std::filesystem::path default_cache_dir();

/// Stable 64-bit FNV-1a hash of the canonical key text, as 16 hex digits.
std::string moment_cache_key(const MomentProvenance& provenance);

class MomentCache {
 public:
  explicit MomentCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const MomentProvenance& provenance) const;

  /// Cached file contents, if present and their provenance matches.
  std::optional<std::string> lookup(const MomentProvenance& provenance) const;
  /// Writes the serialized vector and returns the bytes written.
  std::string store(const MomentVector& m) const;

 private:
  std::filesystem::path dir_;
};

/// Writes `contents` to `path` atomically (same-directory temp file, rename).
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace minkowski
