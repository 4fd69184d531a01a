#include <filesystem>
#include <fstream>

#include "doctest.h"

#include "hpauth/error.hpp"
#include "hpauth/image.hpp"
#include "hpauth/random.hpp"

using namespace hpauth;

namespace {

Raster solid(std::size_t rows, std::size_t cols, Raster::Pixel p) {
  return {rows, cols, std::vector<Raster::Pixel>(rows * cols, p)};
}

Raster random_raster(std::size_t rows, std::size_t cols, Rng& rng) {
  Raster r{rows, cols, {}};
  for (std::size_t k = 0; k < rows * cols; ++k) {
    r.pixels.push_back({static_cast<std::uint8_t>(rng.below(256)), static_cast<std::uint8_t>(rng.below(256)),
                        static_cast<std::uint8_t>(rng.below(256))});
  }
  return r;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("hpauth_image_test_" + name);
}

}  // namespace

TEST_CASE("image_to_rgb_matrix packs pixels") {
  CHECK(image_to_rgb_matrix(solid(1, 1, {255, 255, 255}), 1, 1).pixels == std::vector<std::uint32_t>{16777215});
  CHECK(image_to_rgb_matrix(solid(1, 1, {0, 0, 0}), 1, 1).pixels == std::vector<std::uint32_t>{0});
  CHECK(image_to_rgb_matrix(solid(1, 1, {1, 2, 3}), 1, 1).pixels == std::vector<std::uint32_t>{0x010203});

  Rng rng(1);
  const Raster src = random_raster(5, 7, rng);
  const ImageMatrix same = image_to_rgb_matrix(src, 5, 7);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 7; ++c) {
      const auto& p = src.at(r, c);
      CHECK(same.at(r, c) == ((std::uint32_t{p.r} << 16) | (std::uint32_t{p.g} << 8) | p.b));
    }
}

TEST_CASE("nearest-neighbour resampling") {
  // 2x2 quadrants upsampled to 4x4 replicate each source pixel into a 2x2 block
  Raster src{2, 2, {{1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {4, 0, 0}}};
  const ImageMatrix up = image_to_rgb_matrix(src, 4, 4);
  CHECK(up.at(0, 0) == 0x010000);
  CHECK(up.at(1, 1) == 0x010000);
  CHECK(up.at(0, 2) == 0x020000);
  CHECK(up.at(3, 0) == 0x030000);
  CHECK(up.at(3, 3) == 0x040000);
  // downsampling picks the top-left sample of each block
  Raster big{4, 4, {}};
  for (std::size_t k = 0; k < 16; ++k) big.pixels.push_back({static_cast<std::uint8_t>(k), 0, 0});
  const ImageMatrix down = image_to_rgb_matrix(big, 2, 2);
  CHECK(down.pixels == std::vector<std::uint32_t>{0x000000, 0x020000, 0x080000, 0x0A0000});
}

TEST_CASE("image_to_rgb_matrix errors") {
  CHECK_THROWS_AS(image_to_rgb_matrix(Raster{}, 1, 1), Error);
  try {
    image_to_rgb_matrix(solid(2, 2, {}), 0, 3);
    FAIL("expected BadDimensions");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadDimensions);
  }
  try {
    image_to_rgb_matrix(Raster{}, 1, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyImage);
  }
}

TEST_CASE("rgb_matrix_to_binary") {
  CHECK(rgb_matrix_to_binary({1, 1, {0}}) == std::string(24, '0'));
  CHECK(rgb_matrix_to_binary({1, 1, {16777215}}) == std::string(24, '1'));
  CHECK(rgb_matrix_to_binary({1, 1, {5}}) == "000000000000000000000101");
  CHECK(rgb_matrix_to_binary({1, 2, {1, 0x800000}}) ==
        std::string(23, '0') + "1" + "1" + std::string(23, '0'));
}

TEST_CASE("image_to_bipolar") {
  CHECK(image_to_bipolar(solid(1, 1, {0, 0, 0}), 1, 1) == BipolarPattern(std::vector<std::int8_t>(24, -1)));
  CHECK(image_to_bipolar(solid(1, 1, {255, 255, 255}), 1, 1) == BipolarPattern(std::vector<std::int8_t>(24, 1)));

  Rng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const Raster src = random_raster(1 + rng.below(12), 1 + rng.below(12), rng);
    const std::size_t rows = 1 + rng.below(8), cols = 1 + rng.below(8);
    const BipolarPattern x = image_to_bipolar(src, rows, cols);
    CHECK(x.size() == rows * cols * 24);
    CHECK(x == image_to_bipolar(src, rows, cols));
  }
}

TEST_CASE("PNG and BMP files decode to the written pixels") {
  Rng rng(8);
  const Raster src = random_raster(6, 9, rng);
  for (const char* ext : {"png", "bmp"}) {
    const auto path = temp_file(std::string("roundtrip.") + ext);
    save_raster(path, src);
    const Raster back = load_raster(path);
    CHECK(back.rows == 6);
    CHECK(back.cols == 9);
    CHECK(back.pixels == src.pixels);
    CHECK(image_to_bipolar(load_raster(path), 4, 4) == image_to_bipolar(back, 4, 4));
    std::filesystem::remove(path);
  }
}

TEST_CASE("load_raster errors") {
  try {
    load_raster(temp_file("missing.png"));
    FAIL("expected IoFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoFailure);
  }
  const auto junk = temp_file("junk.png");
  {
    std::ofstream(junk) << "not an image";
  }
  try {
    load_raster(junk);
    FAIL("expected EmptyImage");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyImage);
  }
  std::filesystem::remove(junk);
}

TEST_CASE("format_matrix views") {
  const ImageMatrix mat{2, 2, {0, 16777215, 5, 1}};
  CHECK(format_matrix(mat, MatrixView::Rgb) == "0 16777215\n5 1\n");
  const std::string binary = format_matrix(mat, MatrixView::Binary);
  CHECK(binary.substr(0, 25) == std::string(24, '0') + " ");
  const std::string bipolar = format_matrix({1, 1, {1}}, MatrixView::Bipolar);
  std::string expected;
  for (int k = 0; k < 23; ++k) expected += "-1 ";
  CHECK(bipolar == expected + "1\n");
}
