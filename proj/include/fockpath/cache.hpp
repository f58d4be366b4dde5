#pragma once

// On-disk cache of canonical basis elements: one JSON-lines file per (e, n).
// The first line is a header carrying the record count and an FNV-1a 64-bit
// checksum of everything after it. Files are replaced atomically.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "fockpath/fockspace.hpp"

namespace fockpath {

struct CacheError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a64(std::string_view bytes);

std::filesystem::path cache_file(const std::filesystem::path& dir, int e, int n);

/// Writes through a temporary file and a rename; creates dir on demand.
/// Throws CacheError on I/O failure.
void write_cache(const std::filesystem::path& dir, int e, int n, const std::map<Partition, FockVector>& elements);

/// nullopt if the file does not exist; CacheError if it is unreadable,
/// malformed, for another (e, n), or fails its checksum.
std::optional<std::map<Partition, FockVector>> read_cache(const std::filesystem::path& dir, int e, int n);

}  // namespace fockpath
