#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tgdec {

inline constexpr const char* kVersion = "0.1.0";

// Error taxonomy. Every failure mode surfaced by the toolkit maps onto one
// of these so callers (and the CLI) can report precisely what went wrong.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };
struct ContractError : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct VocabError : Error { using Error::Error; };
struct NumericError : Error { using Error::Error; };
struct TrainError : Error { using Error::Error; };
struct PathError : Error { using Error::Error; };

// FNV-1a, used for vocab-file fingerprints and frozen-parameter checks.
inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::uint64_t fnv1a64(std::string_view s) {
  return fnv1a64(s.data(), s.size());
}

std::string to_hex(std::uint64_t v);

}  // namespace tgdec
