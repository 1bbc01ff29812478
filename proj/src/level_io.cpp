#include "ulam/level_io.hpp"

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <vector>

#include "ulam/errors.hpp"

namespace ulam {

namespace {

constexpr std::size_t kHeaderBytes = 17;

void put_u32_le(unsigned char* out, std::uint32_t value) {
  for (int i = 0; i < 4; ++i) out[i] = static_cast<unsigned char>(value >> (8 * i));
}

void put_u64_le(unsigned char* out, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(value >> (8 * i));
}

std::uint32_t get_u32_le(const unsigned char* in) {
  std::uint32_t value = 0;
  for (int i = 0; i < 4; ++i) value |= std::uint32_t{in[i]} << (8 * i);
  return value;
}

std::uint64_t get_u64_le(const unsigned char* in) {
  std::uint64_t value = 0;
  for (int i = 0; i < 8; ++i) value |= std::uint64_t{in[i]} << (8 * i);
  return value;
}

}  // namespace

void save_level(const LevelSet& level, const std::filesystem::path& path) {
  const std::size_t payload = level_payload_bytes(level.length());
  std::vector<unsigned char> buffer(kHeaderBytes + payload, 0);
  std::memcpy(buffer.data(), kLevelMagic, sizeof kLevelMagic);
  buffer[4] = kLevelFormatVersion;
  put_u32_le(buffer.data() + 5, static_cast<std::uint32_t>(level.length()));
  put_u64_le(buffer.data() + 9, level.count());
  // The bitset words are little endian on disk, so the payload is simply
  // the first `payload` bytes of the word array.
  const auto words = level.words();
  std::size_t written = 0;
  for (std::uint64_t word : words) {
    unsigned char chunk[8];
    put_u64_le(chunk, word);
    const std::size_t take = std::min<std::size_t>(8, payload - written);
    std::memcpy(buffer.data() + kHeaderBytes + written, chunk, take);
    written += take;
    if (written == payload) break;
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("save_level: cannot open " + path.string() +
                  " for writing");
  }
  out.write(reinterpret_cast<const char*>(buffer.data()),
            static_cast<std::streamsize>(buffer.size()));
  if (!out) {
    throw IoError("save_level: write failed for " + path.string());
  }
}

LevelSet load_level(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("load_level: cannot open " + path.string());
  }
  std::vector<unsigned char> buffer(
      (std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("load_level: read failed for " + path.string());
  }

  if (buffer.size() < kHeaderBytes) {
    throw CorruptionError("load_level: truncated header in " + path.string());
  }
  if (std::memcmp(buffer.data(), kLevelMagic, sizeof kLevelMagic) != 0) {
    throw FormatError("load_level: bad magic in " + path.string());
  }
  if (buffer[4] != kLevelFormatVersion) {
    throw FormatError("load_level: unsupported version " +
                      std::to_string(buffer[4]) + " in " + path.string());
  }
  const std::uint32_t length = get_u32_le(buffer.data() + 5);
  if (length < 1 || length > static_cast<std::uint32_t>(kMaxLevelLength)) {
    throw FormatError("load_level: word length " + std::to_string(length) +
                      " out of range in " + path.string());
  }
  const std::uint64_t count = get_u64_le(buffer.data() + 9);

  const std::size_t payload = level_payload_bytes(static_cast<int>(length));
  if (buffer.size() < kHeaderBytes + payload) {
    throw CorruptionError("load_level: truncated payload in " + path.string());
  }
  if (buffer.size() > kHeaderBytes + payload) {
    throw CorruptionError("load_level: trailing data in " + path.string());
  }

  std::vector<std::uint64_t> words(LevelSet::word_count(static_cast<int>(length)),
                                   0);
  for (std::size_t i = 0; i < payload; ++i) {
    words[i / 8] |= std::uint64_t{buffer[kHeaderBytes + i]} << (8 * (i % 8));
  }

  const int n = static_cast<int>(length);
  if (n < 6) {
    const std::uint64_t mask = (std::uint64_t{1} << (1u << n)) - 1;
    if ((words[0] & ~mask) != 0) {
      throw CorruptionError("load_level: stray bits beyond the universe in " +
                            path.string());
    }
  }
  std::uint64_t popcount = 0;
  for (std::uint64_t word : words) popcount += std::popcount(word);
  if (popcount != count) {
    throw CorruptionError(
        "load_level: header count " + std::to_string(count) +
        " disagrees with payload population " + std::to_string(popcount) +
        " in " + path.string());
  }
  return LevelSet(n, std::move(words));
}

std::filesystem::path level_store_path(const std::filesystem::path& dir,
                                       int n) {
  char name[32];
  std::snprintf(name, sizeof name, "level_%02d.ulw", n);
  return dir / name;
}

void save_store(const UlamTable& table, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    throw IoError("save_store: cannot create " + dir.string() + ": " +
                  ec.message());
  }
  for (int n = 1; n <= table.computed_length(); ++n) {
    save_level(table.level(n), level_store_path(dir, n));
  }
}

UlamTable load_store(const std::filesystem::path& dir,
                     std::uint64_t memory_budget_bytes) {
  int highest = 0;
  while (highest < kMaxLevelLength &&
         std::filesystem::exists(level_store_path(dir, highest + 1))) {
    ++highest;
  }
  if (highest == 0) {
    throw IoError("load_store: no level files under " + dir.string());
  }
  UlamTable table(highest, memory_budget_bytes);
  const LevelSet first = load_level(level_store_path(dir, 1));
  if (!(first == table.level(1))) {
    throw CorruptionError("load_store: stored level 1 disagrees with the " +
                          std::string("axiomatic base level"));
  }
  for (int n = 2; n <= highest; ++n) {
    table.adopt(load_level(level_store_path(dir, n)));
  }
  return table;
}

}  // namespace ulam
