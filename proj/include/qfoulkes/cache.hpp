#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

namespace qfoulkes {

/// Outcome of cache_load().  A missing file is a cold start, not an error.
struct CacheStatus {
    bool found = false;
    bool loaded = false;
    std::size_t character_degrees = 0;
    std::size_t kostka_entries = 0;
    /// Set when a file was present but discarded.
    std::string warning;
};

/// Header line of the cache format; bump on any layout change.
inline constexpr const char* cache_header = "qfoulkes-cache v1";

/// $QFOULKES_CACHE, else ~/.cache/qfoulkes/tables.cache.
std::filesystem::path default_cache_path();

/// Reads character tables and Kostka-Foulkes polynomials into the global
/// memo tables.  A wrong header, bad checksum or parse error discards the
/// whole file and leaves the tables untouched.
CacheStatus cache_load(const std::filesystem::path& path);

/// Writes character tables up to `max_degree` and all Kostka-Foulkes
/// entries.  Throws std::runtime_error on I/O failure.
void cache_store(const std::filesystem::path& path, int max_degree = 20);

}  // namespace qfoulkes
