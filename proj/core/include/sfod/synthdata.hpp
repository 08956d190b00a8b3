#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sfod/sample.hpp"

namespace sfod {

/// Rendering recipe for one domain. Two domains share scene geometry and
/// differ only in imaging: a per-channel affine on the final pixels, additive
/// Gaussian noise, and an optional blur. That isolates exactly the
/// color/noise/style axes a detector should learn to ignore.
struct DomainSpec {
  enum class Background { flat, noise, gradient };

  std::string name = "source";
  std::vector<std::array<double, 3>> palette = {
      {0.75, 0.30, 0.25}, {0.25, 0.40, 0.70}, {0.70, 0.65, 0.25}};
  Background background = Background::flat;
  std::array<double, 3> gain = {1.0, 1.0, 1.0};
  std::array<double, 3> bias = {0.0, 0.0, 0.0};
  double noise_sigma = 0.0;   // in [0, 0.2]
  double blur_radius = 0.0;   // gaussian sigma, pixels

  void validate() const;
};

/// Scene content: how many objects of which shapes, at which sizes.
/// Class 1 renders as a filled rectangle ("vehicle"), class 2 as an ellipse
/// with a cross bar ("airplane").
struct SceneSpec {
  int image_h = 128, image_w = 128;
  int min_objects = 2, max_objects = 8;
  double min_size = 18.0, max_size = 56.0;  // box edge, pixels
  double max_overlap_iou = 0.3;             // rejection-sampling bound
  uint64_t seed = 0;

  void validate() const;
};

struct DatasetManifest {
  std::string dir;
  std::vector<std::string> ids;
  DomainSpec domain;
  SceneSpec scene;
};

/// Render one scene deterministically from (domain, scene, image_index).
/// Exposed for tests; generate_domain() is the production entry point.
LabeledSample render_scene(const DomainSpec& domain, const SceneSpec& scene,
                           uint64_t image_index);

/// Generate n images + annotations + manifest under out_dir:
///   out_dir/images/<id>.png
///   out_dir/annotations/<id>.json   {"boxes": [[x1,y1,x2,y2],..], "classes": [..]}
///   out_dir/manifest.json           ordered id list + spec echo
/// Fully deterministic given (domain, scene, scene.seed, n).
DatasetManifest generate_domain(const DomainSpec& domain, const SceneSpec& scene,
                                int n_images, const std::string& out_dir);

DatasetManifest read_manifest(const std::string& dir);

/// Load every sample in manifest order. Boxes are validated and clipped to
/// the image; a missing or mismatched file raises an error naming it.
std::vector<LabeledSample> load_dataset(const std::string& dir);

/// Load images only (no annotation reads). This is the adaptation-side
/// loader: target labels must never be touched by training.
std::vector<Image> load_images(const std::string& dir);

/// Named domain presets for the CLI: source, target-color, target-noise,
/// target-style. Throws ValidationError on unknown names.
DomainSpec domain_preset(const std::string& name);

}  // namespace sfod
