#include "sfod/image.hpp"

#include <algorithm>
#include <cmath>

namespace sfod {

Image resize_bilinear(const Image& im, int out_h, int out_w) {
  Image out(out_h, out_w);
  if (im.empty() || out_h <= 0 || out_w <= 0) return out;
  const double sy = static_cast<double>(im.h) / out_h;
  const double sx = static_cast<double>(im.w) / out_w;
  for (int y = 0; y < out_h; ++y) {
    double fy = (y + 0.5) * sy - 0.5;
    fy = std::clamp(fy, 0.0, static_cast<double>(im.h - 1));
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, im.h - 1);
    const double wy = fy - y0;
    for (int x = 0; x < out_w; ++x) {
      double fx = (x + 0.5) * sx - 0.5;
      fx = std::clamp(fx, 0.0, static_cast<double>(im.w - 1));
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, im.w - 1);
      const double wx = fx - x0;
      for (int c = 0; c < 3; ++c) {
        const double top = im.at(c, y0, x0) * (1 - wx) + im.at(c, y0, x1) * wx;
        const double bot = im.at(c, y1, x0) * (1 - wx) + im.at(c, y1, x1) * wx;
        out.at(c, y, x) = top * (1 - wy) + bot * wy;
      }
    }
  }
  return out;
}

Image gaussian_blur(const Image& im, double sigma) {
  if (sigma <= 0 || im.empty()) return im;
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  std::vector<double> kernel(2 * radius + 1);
  double ksum = 0;
  for (int i = -radius; i <= radius; ++i) {
    kernel[i + radius] = std::exp(-0.5 * (i * i) / (sigma * sigma));
    ksum += kernel[i + radius];
  }
  for (auto& k : kernel) k /= ksum;

  Image tmp(im.h, im.w), out(im.h, im.w);
  // horizontal pass
  for (int c = 0; c < 3; ++c)
    for (int y = 0; y < im.h; ++y)
      for (int x = 0; x < im.w; ++x) {
        double acc = 0;
        for (int i = -radius; i <= radius; ++i) {
          const int xx = std::clamp(x + i, 0, im.w - 1);
          acc += kernel[i + radius] * im.at(c, y, xx);
        }
        tmp.at(c, y, x) = acc;
      }
  // vertical pass
  for (int c = 0; c < 3; ++c)
    for (int y = 0; y < im.h; ++y)
      for (int x = 0; x < im.w; ++x) {
        double acc = 0;
        for (int i = -radius; i <= radius; ++i) {
          const int yy = std::clamp(y + i, 0, im.h - 1);
          acc += kernel[i + radius] * tmp.at(c, yy, x);
        }
        out.at(c, y, x) = acc;
      }
  return out;
}

Image to_grayscale(const Image& im) {
  Image out(im.h, im.w);
  for (int y = 0; y < im.h; ++y)
    for (int x = 0; x < im.w; ++x) {
      const double g =
          0.299 * im.at(0, y, x) + 0.587 * im.at(1, y, x) + 0.114 * im.at(2, y, x);
      out.at(0, y, x) = out.at(1, y, x) = out.at(2, y, x) = g;
    }
  return out;
}

double mean_luma(const Image& im) {
  if (im.empty()) return 0;
  double acc = 0;
  for (int y = 0; y < im.h; ++y)
    for (int x = 0; x < im.w; ++x)
      acc += 0.299 * im.at(0, y, x) + 0.587 * im.at(1, y, x) + 0.114 * im.at(2, y, x);
  return acc / (static_cast<double>(im.h) * im.w);
}

void clamp01(Image& im) {
  for (auto& v : im.px) v = std::clamp(v, 0.0, 1.0);
}

}  // namespace sfod
