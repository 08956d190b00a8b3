#pragma once

#include <optional>
#include <vector>

namespace sfod {

/// Axis-aligned box in continuous pixel coordinates, origin top-left,
/// corner-coded (x1,y1) top-left / (x2,y2) bottom-right.
/// Valid boxes have strictly positive area and finite coordinates.
struct BoundingBox {
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;

  double width() const { return x2 - x1; }
  double height() const { return y2 - y1; }
  double area() const { return width() * height(); }
  double cx() const { return 0.5 * (x1 + x2); }
  double cy() const { return 0.5 * (y1 + y2); }
  bool valid() const;
};

/// A scored class prediction. class_id 0 is reserved for background and
/// never appears on an emitted detection.
struct Detection {
  BoundingBox box;
  int class_id = 1;
  double score = 0;
};

/// Intersection over union. Symmetric, in [0,1], 0 for disjoint boxes.
double iou(const BoundingBox& a, const BoundingBox& b);

/// Clamp a box to [0,W]x[0,H]. Returns nullopt when nothing with positive
/// area remains.
std::optional<BoundingBox> clip_box(const BoundingBox& b, int image_h, int image_w);

/// Greedy per-class non-maximum suppression by descending score.
/// Survivors keep score order within each class; across classes the output
/// is ordered by descending score. iou_thresh must lie in (0,1).
std::vector<Detection> nms(std::vector<Detection> dets, double iou_thresh);

}  // namespace sfod
