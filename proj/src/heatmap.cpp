#include "ulam/heatmap.hpp"

#include <cstring>
#include <fstream>
#include <string>

#include "ulam/errors.hpp"

namespace ulam {

PgmImage render_heatmap(const LevelSet& level) {
  const int n = level.length();
  const std::uint64_t rows = level.zero_leading_count();
  if (rows == 0) {
    throw DomainError("render_heatmap: level has no member starting with 0");
  }
  PgmImage image;
  image.width = n;
  image.height = static_cast<int>(rows);
  image.pixels.resize(static_cast<std::size_t>(n) * rows);

  // Members starting with '0' are exactly the codes below 2^(n-1); the
  // member scan is ascending, so rows come out in code order.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  std::size_t at = 0;
  level.for_each_member([&](std::uint64_t code) {
    if (code >= limit) return;
    for (int i = n - 1; i >= 0; --i) {
      image.pixels[at++] = ((code >> i) & 1) ? kOneShade : kZeroShade;
    }
  });
  return image;
}

std::vector<unsigned char> encode_pgm(const PgmImage& image) {
  const std::string header = "P5\n" + std::to_string(image.width) + " " +
                             std::to_string(image.height) + "\n255\n";
  std::vector<unsigned char> bytes(header.size() + image.pixels.size());
  std::memcpy(bytes.data(), header.data(), header.size());
  std::memcpy(bytes.data() + header.size(), image.pixels.data(),
              image.pixels.size());
  return bytes;
}

void save_pgm(const PgmImage& image, const std::filesystem::path& path) {
  const std::vector<unsigned char> bytes = encode_pgm(image);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("save_pgm: cannot open " + path.string() + " for writing");
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw IoError("save_pgm: write failed for " + path.string());
  }
}

}  // namespace ulam
