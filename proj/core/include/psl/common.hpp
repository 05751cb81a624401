// Copyright 2026 The psl authors
//
// Licensed under the Apache License, Version 2.0 http://www.apache.org/licenses/LICENSE-2.0
//
// This code is provided *as is* basis, without warranties or conditions of any kind.

#ifndef PSL_COMMON_HPP
#define PSL_COMMON_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace psl {

// Raised for invalid configuration or usage. The CLI maps this to exit
// code 2; every other exception maps to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// FNV-1a, 64 bit. Used for config hashes and feature-cache keys.
inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline uint64_t fnv1a64(std::string_view s, uint64_t h = 0xcbf29ce484222325ULL) {
  return fnv1a64(s.data(), s.size(), h);
}

// Streaming hash of a file's bytes. Throws std::runtime_error if unreadable.
uint64_t file_hash(const std::filesystem::path& path);

std::string hash_hex(uint64_t h);

// Runs fn(i) for i in [0, n). workers <= 1 executes inline. Items are
// statically chunked; the first exception thrown by any worker is rethrown
// after all threads join.
void parallel_for(size_t n, int workers, const std::function<void(size_t)>& fn);

// Writes content to path atomically (temp file + rename).
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace psl

#endif  // PSL_COMMON_HPP
