#pragma once

#include <vector>

#include "sfod/geometry.hpp"
#include "sfod/image.hpp"

namespace sfod {

/// An image with its (possibly pseudo) labels. `weight` follows the 0/1
/// sample-gating convention: samples with no confident labels carry
/// weight 0 and contribute nothing to a loss.
struct LabeledSample {
  Image image;
  std::vector<BoundingBox> boxes;
  std::vector<int> classes;
  double weight = 1.0;
};

/// Mirror the image on the width axis and remap boxes:
/// (x1', x2') = (W - x2, W - x1). Classes are untouched.
LabeledSample flip_horizontal(const LabeledSample& s);

/// Scale so the short edge equals `target` (>= 32), aspect preserved.
/// Boxes scale by the same uniform factor.
LabeledSample resize_short_edge(const LabeledSample& s, int target);

}  // namespace sfod
