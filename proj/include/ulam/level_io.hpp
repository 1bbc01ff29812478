#pragma once

#include <cstdint>
#include <filesystem>

#include "ulam/engine.hpp"
#include "ulam/level_set.hpp"

namespace ulam {

/// On-disk level container, version 1. Layout (little endian):
///   bytes 0..3   magic "ULMW"
///   byte  4      format version (1)
///   bytes 5..8   word length n (u32)
///   bytes 9..16  member count (u64)
///   bytes 17..   bitset payload, ceil(2^n / 8) bytes, LSB first
/// Total size is exactly 17 + ceil(2^n / 8) bytes.
inline constexpr char kLevelMagic[4] = {'U', 'L', 'M', 'W'};
inline constexpr unsigned char kLevelFormatVersion = 1;

/// Number of payload bytes for word length n.
[[nodiscard]] constexpr std::size_t level_payload_bytes(int n) noexcept {
  return n >= 3 ? (std::size_t{1} << (n - 3)) : std::size_t{1};
}

/// Writes `level` to `path`, replacing any existing file.
/// Throws IoError when the file cannot be created or written.
void save_level(const LevelSet& level, const std::filesystem::path& path);

/// Reads a level back. Throws IoError when the file cannot be opened,
/// FormatError on a bad magic, version, or length field, and
/// CorruptionError on a size mismatch, stray bits beyond the universe, or
/// a header count that disagrees with the payload.
[[nodiscard]] LevelSet load_level(const std::filesystem::path& path);

/// Canonical file name for level n inside a store directory:
/// `<dir>/level_NN.ulw` (two digits, zero padded).
[[nodiscard]] std::filesystem::path level_store_path(
    const std::filesystem::path& dir, int n);

/// Saves every computed level of `table` into `dir` (created if missing).
void save_store(const UlamTable& table, const std::filesystem::path& dir);

/// Rebuilds a table from consecutive level files in `dir`, starting at
/// level 1. Throws IoError when no level file is present, and
/// CorruptionError when the stored level 1 disagrees with the axiomatic
/// base level.
[[nodiscard]] UlamTable load_store(
    const std::filesystem::path& dir,
    std::uint64_t memory_budget_bytes = kDefaultMemoryBudget);

}  // namespace ulam
