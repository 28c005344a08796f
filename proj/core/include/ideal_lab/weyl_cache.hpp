#pragma once

#include "ideal_lab/weyl.hpp"

#include <string>

namespace ideal_lab {

// Binary cache of an enumerated Weyl group, one file per (type, rank),
// versioned and checksummed.  A missing, stale or corrupt file is never an
// error: the group is recomputed and the file rewritten.
WeylGroup load_or_enumerate_weyl(const RootSystem& rs, uint64_t cap, const std::string& cache_dir);

// Cache file path used for (type, rank) under cache_dir.
std::string weyl_cache_path(const RootSystem& rs, const std::string& cache_dir);

}  // namespace ideal_lab
