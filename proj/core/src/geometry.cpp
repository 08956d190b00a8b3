#include "sfod/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "sfod/errors.hpp"

namespace sfod {

bool BoundingBox::valid() const {
  return std::isfinite(x1) && std::isfinite(y1) && std::isfinite(x2) &&
         std::isfinite(y2) && x2 > x1 && y2 > y1;
}

double iou(const BoundingBox& a, const BoundingBox& b) {
  const double ix1 = std::max(a.x1, b.x1);
  const double iy1 = std::max(a.y1, b.y1);
  const double ix2 = std::min(a.x2, b.x2);
  const double iy2 = std::min(a.y2, b.y2);
  const double iw = ix2 - ix1;
  const double ih = iy2 - iy1;
  if (iw <= 0 || ih <= 0) return 0.0;
  const double inter = iw * ih;
  const double uni = a.area() + b.area() - inter;
  return uni > 0 ? inter / uni : 0.0;
}

std::optional<BoundingBox> clip_box(const BoundingBox& b, int image_h, int image_w) {
  BoundingBox c;
  c.x1 = std::clamp(b.x1, 0.0, static_cast<double>(image_w));
  c.y1 = std::clamp(b.y1, 0.0, static_cast<double>(image_h));
  c.x2 = std::clamp(b.x2, 0.0, static_cast<double>(image_w));
  c.y2 = std::clamp(b.y2, 0.0, static_cast<double>(image_h));
  if (c.x2 <= c.x1 || c.y2 <= c.y1) return std::nullopt;
  return c;
}

std::vector<Detection> nms(std::vector<Detection> dets, double iou_thresh) {
  if (!(iou_thresh > 0.0 && iou_thresh < 1.0))
    throw ValidationError("nms: iou_thresh must lie in (0,1)");
  // Stable sort keeps input order on score ties, so results do not depend
  // on how callers happened to batch their detections.
  std::stable_sort(dets.begin(), dets.end(), [](const Detection& a, const Detection& b) {
    return a.score > b.score;
  });
  std::vector<Detection> kept;
  kept.reserve(dets.size());
  for (const auto& d : dets) {
    bool suppressed = false;
    for (const auto& k : kept) {
      if (k.class_id == d.class_id && iou(k.box, d.box) > iou_thresh) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) kept.push_back(d);
  }
  return kept;
}

}  // namespace sfod
