#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "ulam/level_set.hpp"

namespace ulam {

/// Grayscale shades used in rendered level images.
inline constexpr unsigned char kZeroShade = 230;  ///< letter '0'
inline constexpr unsigned char kOneShade = 25;    ///< letter '1'

/// An 8-bit grayscale raster, row major.
struct PgmImage {
  int width = 0;
  int height = 0;
  std::vector<unsigned char> pixels;  ///< width * height bytes
};

/// Renders one level as a letter raster: one row per member whose word
/// starts with '0', in ascending code order; one column per letter
/// position, left to right. Throws DomainError when the level has no such
/// member.
[[nodiscard]] PgmImage render_heatmap(const LevelSet& level);

/// Serializes the image as binary PGM (P5, maximum value 255).
[[nodiscard]] std::vector<unsigned char> encode_pgm(const PgmImage& image);

/// Writes the image to `path` in binary PGM. Throws IoError on failure.
void save_pgm(const PgmImage& image, const std::filesystem::path& path);

}  // namespace ulam
