#pragma once

#include <cstddef>
#include <vector>

namespace sfod {

/// Planar RGB image, channel-major (3, H, W), values in [0,1].
struct Image {
  int h = 0, w = 0;
  std::vector<double> px;  // size 3*h*w

  Image() = default;
  Image(int height, int width, double fill = 0.0)
      : h(height), w(width), px(static_cast<size_t>(3) * height * width, fill) {}

  double& at(int c, int y, int x) { return px[(static_cast<size_t>(c) * h + y) * w + x]; }
  double at(int c, int y, int x) const { return px[(static_cast<size_t>(c) * h + y) * w + x]; }
  size_t size() const { return px.size(); }
  bool empty() const { return px.empty(); }
};

/// Bilinear resample to (out_h, out_w), pixel-center aligned.
Image resize_bilinear(const Image& im, int out_h, int out_w);

/// Separable Gaussian blur with clamped borders. sigma <= 0 returns a copy.
Image gaussian_blur(const Image& im, double sigma);

/// Per-pixel luma (0.299 R + 0.587 G + 0.114 B), returned as a 3-channel
/// image with equal channels.
Image to_grayscale(const Image& im);

/// Mean of the luma channel.
double mean_luma(const Image& im);

/// Clamp all pixels into [0,1] in place.
void clamp01(Image& im);

}  // namespace sfod
