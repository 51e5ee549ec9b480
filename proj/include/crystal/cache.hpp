#pragma once

#include <filesystem>
#include <string>

#include "crystal/rmatrix.hpp"

namespace crystal {

// Disk cache for computed tables under a directory; empty dir disables
// caching. Files are JSON, written atomically (temp + rename), keyed by the
// crystal parameters and anchor. A loaded table is revalidated against the
// crystal before use; stale or foreign files are recomputed and replaced.

struct CacheKey {
  std::string family;
  int n = 0;
  int l = 0;
  int m = 0;           // 0 when the factor is not a pair
  std::string kind;    // "pair", "square", ...
  nlohmann::json to_json() const;
  std::string slug() const;
  bool matches(const nlohmann::json& j) const;
};

// H table on a homogeneous square, BFS-built (identity R) and anchored at the
// canonical anchor with value 0; served from cache when valid.
HTable cached_square_H(TensorPtr square, const CacheKey& key,
                       const std::filesystem::path& cache_dir);

// Combinatorial R-matrix with the same cache discipline.
RMap cached_R(TensorPtr t12, TensorPtr t21, const CacheKey& key,
              const std::filesystem::path& cache_dir);

}  // namespace crystal
