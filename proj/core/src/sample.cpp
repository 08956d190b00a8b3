#include "sfod/sample.hpp"

#include <cmath>

#include "sfod/errors.hpp"

namespace sfod {

LabeledSample flip_horizontal(const LabeledSample& s) {
  LabeledSample out;
  out.classes = s.classes;
  out.weight = s.weight;
  out.image = Image(s.image.h, s.image.w);
  const int w = s.image.w;
  for (int c = 0; c < 3; ++c)
    for (int y = 0; y < s.image.h; ++y)
      for (int x = 0; x < w; ++x) out.image.at(c, y, x) = s.image.at(c, y, w - 1 - x);
  out.boxes.reserve(s.boxes.size());
  for (const auto& b : s.boxes)
    out.boxes.push_back({w - b.x2, b.y1, w - b.x1, b.y2});
  return out;
}

LabeledSample resize_short_edge(const LabeledSample& s, int target) {
  if (target < 32) throw ValidationError("resize_short_edge: target must be >= 32");
  const int short_edge = std::min(s.image.h, s.image.w);
  if (short_edge == target) return s;
  const double scale = static_cast<double>(target) / short_edge;
  const int oh = static_cast<int>(std::lround(s.image.h * scale));
  const int ow = static_cast<int>(std::lround(s.image.w * scale));
  LabeledSample out;
  out.image = resize_bilinear(s.image, oh, ow);
  out.classes = s.classes;
  out.weight = s.weight;
  out.boxes.reserve(s.boxes.size());
  // Uniform scale keeps boxes similar to the originals; output dims may be
  // rounded by up to half a pixel relative to scale * dim.
  for (const auto& b : s.boxes)
    out.boxes.push_back({b.x1 * scale, b.y1 * scale, b.x2 * scale, b.y2 * scale});
  return out;
}

}  // namespace sfod
