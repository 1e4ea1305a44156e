#ifndef WBOSON_CACHE_HPP
#define WBOSON_CACHE_HPP

#include <optional>
#include <string>

#include "wboson/walgebra.hpp"

namespace wb {

inline constexpr const char* kCacheFormatVersion = "1";
inline constexpr const char* kCodeRevision = "wboson-1.0.0";

// Line-oriented cache file: "key: value" header lines, a blank line, then
// one canonical vector line per basis element. A header mismatch
// invalidates the payload; corrupt files are ignored with a warning.
std::string cacheFileName(int p, ScreeningOp op, int level);
std::optional<KernelBasis> cacheLoad(const std::string& dir, int p,
                                     ScreeningOp op, int level);
bool cacheStore(const std::string& dir, const KernelBasis& basis, int p);

// kernel() with a read-through disk cache; empty dir disables caching.
KernelBasis kernelCached(const std::string& dir, int p, ScreeningOp op,
                         int level, int jobs = 1);

}  // namespace wb

#endif
