#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "nilmult/hall/hall_basis.hpp"

namespace nilmult {

inline constexpr const char* kCacheDirEnv = "NILMULT_CACHE_DIR";

/// The flag if given, else $NILMULT_CACHE_DIR, else no cache.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

/// Hall bases stored as JSON, one file per (n, w), tagged with
/// kHallOrderVersion. Files with another tag or that fail validation are
/// ignored and overwritten. Readers take a shared flock on the directory's
/// lock file, writers an exclusive one; writes go through a rename.
class HallCache {
 public:
  explicit HallCache(std::filesystem::path dir);

  std::optional<HallBasis> load(std::size_t n, int w) const;
  void store(const HallBasis& basis) const;
  /// load, or generate and store.
  HallBasis get(std::size_t n, int w, std::size_t cap = kDefaultBasisCap) const;

  std::filesystem::path file_for(std::size_t n, int w) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace nilmult
