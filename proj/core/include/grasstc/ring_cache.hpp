#pragma once

#include "grasstc/grassmann_ring.hpp"

#include <filesystem>
#include <string>

namespace grasstc {

// Environment variable naming the default cache directory.
inline constexpr const char* kCacheDirEnvVar = "GRASSTC_CACHE_DIR";

// Explicit directory if nonempty, else the environment variable's value,
// else empty (meaning: caching disabled).
std::filesystem::path cache_dir_or_default(const std::string& explicit_dir);

// File that holds the ring for (k, n) under the current format version.
std::filesystem::path cache_file_path(const std::filesystem::path& dir,
                                      unsigned k, unsigned n);

// Serialize every degree block the ring has built so far, atomically
// (temporary file + rename). Returns the final path.
//
// Format: one header line "GRASSTC-NF v1 k=<k> n=<n>", then for each stored
// degree a section
//     degree <d> monomials <C> basis <B>
//     <B lines: basis monomials in canonical text form>
//     <C lines: normal forms of the degree's monomials, canonical text form>
// with the monomials implied by their canonical in-degree enumeration order.
std::filesystem::path cache_store(const GrassmannRing& ring,
                                  const std::filesystem::path& dir);

struct CacheLoadResult {
    bool loaded = false;   // a compatible file was found and fully accepted
    unsigned degrees = 0;  // number of degree blocks injected
    std::string warning;   // set when a file existed but was skipped
};

// Inject cached degree blocks into the ring. A missing file is a clean miss;
// a version mismatch or any structural damage yields a warning and no
// injection — callers recompute as if there were no cache.
CacheLoadResult cache_load(const GrassmannRing& ring,
                           const std::filesystem::path& dir);

} // namespace grasstc
