#include "hpauth/image.hpp"

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "hpauth/error.hpp"

namespace hpauth {

namespace {

BitString pixel_bits(std::uint32_t px) {
  BitString out(24, '0');
  for (int bit = 0; bit < 24; ++bit) {
    if ((px >> (23 - bit)) & 1u) out[static_cast<std::size_t>(bit)] = '1';
  }
  return out;
}

}  // namespace

Raster load_raster(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::IoFailure, "cannot read image " + path.string());
  }
  const cv::Mat bgr = cv::imread(path.string(), cv::IMREAD_COLOR);
  if (bgr.empty() || bgr.rows <= 0 || bgr.cols <= 0) {
    throw Error(ErrorCode::EmptyImage, "image " + path.string() + " decodes to no pixels");
  }
  Raster raster;
  raster.rows = static_cast<std::size_t>(bgr.rows);
  raster.cols = static_cast<std::size_t>(bgr.cols);
  raster.pixels.reserve(raster.rows * raster.cols);
  for (int r = 0; r < bgr.rows; ++r) {
    const auto* row = bgr.ptr<cv::Vec3b>(r);
    for (int c = 0; c < bgr.cols; ++c) {
      raster.pixels.push_back({row[c][2], row[c][1], row[c][0]});
    }
  }
  return raster;
}

void save_raster(const std::filesystem::path& path, const Raster& raster) {
  cv::Mat bgr(static_cast<int>(raster.rows), static_cast<int>(raster.cols), CV_8UC3);
  for (std::size_t r = 0; r < raster.rows; ++r) {
    auto* row = bgr.ptr<cv::Vec3b>(static_cast<int>(r));
    for (std::size_t c = 0; c < raster.cols; ++c) {
      const auto& p = raster.at(r, c);
      row[c] = cv::Vec3b(p.b, p.g, p.r);
    }
  }
  bool ok = false;
  try {
    ok = cv::imwrite(path.string(), bgr);
  } catch (const cv::Exception&) {
    ok = false;
  }
  if (!ok) throw Error(ErrorCode::IoFailure, "cannot write image " + path.string());
}

ImageMatrix image_to_rgb_matrix(const Raster& image, std::size_t out_rows, std::size_t out_cols) {
  if (image.rows == 0 || image.cols == 0 || image.pixels.size() != image.rows * image.cols) {
    throw Error(ErrorCode::EmptyImage, "source image has no pixels");
  }
  if (out_rows == 0 || out_cols == 0) {
    throw Error(ErrorCode::BadDimensions, "output matrix size must be at least 1x1");
  }
  ImageMatrix mat{out_rows, out_cols, {}};
  mat.pixels.reserve(out_rows * out_cols);
  for (std::size_t r = 0; r < out_rows; ++r) {
    const std::size_t sr = r * image.rows / out_rows;
    for (std::size_t c = 0; c < out_cols; ++c) {
      const auto& p = image.at(sr, c * image.cols / out_cols);
      mat.pixels.push_back((std::uint32_t{p.r} << 16) | (std::uint32_t{p.g} << 8) | p.b);
    }
  }
  return mat;
}

BitString rgb_matrix_to_binary(const ImageMatrix& mat) {
  BitString out;
  out.reserve(mat.pixels.size() * 24);
  for (std::uint32_t px : mat.pixels) out += pixel_bits(px);
  return out;
}

BipolarPattern image_to_bipolar(const Raster& image, std::size_t out_rows, std::size_t out_cols) {
  return binary_to_bipolar(rgb_matrix_to_binary(image_to_rgb_matrix(image, out_rows, out_cols)));
}

std::string format_matrix(const ImageMatrix& mat, MatrixView view) {
  std::string out;
  for (std::size_t r = 0; r < mat.rows; ++r) {
    for (std::size_t c = 0; c < mat.cols; ++c) {
      if (c > 0) out += ' ';
      const std::uint32_t px = mat.at(r, c);
      switch (view) {
        case MatrixView::Rgb:
          out += std::to_string(px);
          break;
        case MatrixView::Binary:
          out += pixel_bits(px);
          break;
        case MatrixView::Bipolar: {
          const BitString bits = pixel_bits(px);
          for (std::size_t k = 0; k < bits.size(); ++k) {
            if (k > 0) out += ' ';
            out += bits[k] == '1' ? "1" : "-1";
          }
          break;
        }
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace hpauth
