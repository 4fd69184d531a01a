#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "hpauth/bipolar.hpp"
#include "hpauth/codec.hpp"

namespace hpauth {

/// Decoded 8-bit RGB raster, row-major.
struct Raster {
  struct Pixel {
    std::uint8_t r = 0, g = 0, b = 0;
    friend bool operator==(const Pixel&, const Pixel&) = default;
  };

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Pixel> pixels;

  const Pixel& at(std::size_t r, std::size_t c) const { return pixels[r * cols + c]; }
};

/// Grid of 24-bit (R<<16 | G<<8 | B) integers.
struct ImageMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> pixels;

  std::uint32_t at(std::size_t r, std::size_t c) const { return pixels[r * cols + c]; }
  friend bool operator==(const ImageMatrix&, const ImageMatrix&) = default;
};

/// Decodes a PNG or BMP file. Error(IoFailure) if unreadable,
/// Error(EmptyImage) if it decodes to nothing.
Raster load_raster(const std::filesystem::path& path);
/// Writes a raster as PNG or BMP, chosen by extension.
void save_raster(const std::filesystem::path& path, const Raster& raster);

/// Nearest-neighbour resample to out_rows x out_cols, then pack each pixel.
ImageMatrix image_to_rgb_matrix(const Raster& image, std::size_t out_rows, std::size_t out_cols);
/// Row-major concatenation of big-endian 24-bit expansions.
BitString rgb_matrix_to_binary(const ImageMatrix& mat);
BipolarPattern image_to_bipolar(const Raster& image, std::size_t out_rows, std::size_t out_cols);

enum class MatrixView { Rgb, Binary, Bipolar };

/// One line per matrix row, cells separated by single spaces. The binary
/// view prints each pixel as 24 bits; the bipolar view prints 24 signed
/// values per pixel.
std::string format_matrix(const ImageMatrix& mat, MatrixView view);

}  // namespace hpauth
