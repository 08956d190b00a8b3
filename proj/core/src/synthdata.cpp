#include "sfod/synthdata.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "sfod/errors.hpp"
#include "sfod/fsguard.hpp"
#include "sfod/png_io.hpp"
#include "sfod/rng.hpp"

namespace sfod {

namespace fs = std::filesystem;
using nlohmann::json;

void DomainSpec::validate() const {
  for (double g : gain)
    if (!(g > 0)) throw ValidationError("DomainSpec: channel gains must be > 0");
  if (noise_sigma < 0 || noise_sigma > 0.2)
    throw ValidationError("DomainSpec: noise_sigma must lie in [0, 0.2]");
  if (blur_radius < 0) throw ValidationError("DomainSpec: blur_radius must be >= 0");
  if (palette.empty()) throw ValidationError("DomainSpec: palette must be non-empty");
}

void SceneSpec::validate() const {
  if (image_h < 32 || image_w < 32)
    throw ValidationError("SceneSpec: image size must be >= 32");
  if (min_objects < 0 || max_objects < min_objects)
    throw ValidationError("SceneSpec: bad objects_per_image range");
  if (!(min_size > 2) || max_size < min_size)
    throw ValidationError("SceneSpec: bad object size range");
  if (max_size > std::min(image_h, image_w) - 4)
    throw ValidationError("SceneSpec: max_size too large for the image");
}

namespace {

const char* background_name(DomainSpec::Background b) {
  switch (b) {
    case DomainSpec::Background::flat: return "flat";
    case DomainSpec::Background::noise: return "noise";
    case DomainSpec::Background::gradient: return "gradient";
  }
  return "flat";
}

DomainSpec::Background background_from(const std::string& s) {
  if (s == "flat") return DomainSpec::Background::flat;
  if (s == "noise") return DomainSpec::Background::noise;
  if (s == "gradient") return DomainSpec::Background::gradient;
  throw ValidationError("unknown background kind: " + s);
}

void render_background(Image& im, const DomainSpec& d, Rng& rng) {
  const int h = im.h, w = im.w;
  switch (d.background) {
    case DomainSpec::Background::flat: {
      double base[3];
      for (int c = 0; c < 3; ++c) base[c] = 0.40 + rng.uniform(-0.04, 0.04);
      for (int c = 0; c < 3; ++c)
        for (int y = 0; y < h; ++y)
          for (int x = 0; x < w; ++x) im.at(c, y, x) = base[c];
      break;
    }
    case DomainSpec::Background::noise: {
      // value noise: coarse random grid, smooth bilinear upsample
      const int g = 9;
      std::vector<double> grid(g * g);
      for (auto& v : grid) v = rng.uniform(0.28, 0.55);
      double tint[3];
      for (int c = 0; c < 3; ++c) tint[c] = rng.uniform(-0.03, 0.03);
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
          const double fy = static_cast<double>(y) / (h - 1) * (g - 1);
          const double fx = static_cast<double>(x) / (w - 1) * (g - 1);
          const int y0 = std::min(static_cast<int>(fy), g - 2);
          const int x0 = std::min(static_cast<int>(fx), g - 2);
          const double wy = fy - y0, wx = fx - x0;
          const double v = grid[y0 * g + x0] * (1 - wy) * (1 - wx) +
                           grid[y0 * g + x0 + 1] * (1 - wy) * wx +
                           grid[(y0 + 1) * g + x0] * wy * (1 - wx) +
                           grid[(y0 + 1) * g + x0 + 1] * wy * wx;
          for (int c = 0; c < 3; ++c) im.at(c, y, x) = v + tint[c];
        }
      break;
    }
    case DomainSpec::Background::gradient: {
      double a = rng.uniform(0.28, 0.45), b = rng.uniform(0.35, 0.55);
      const double theta = rng.uniform(0.0, 6.283185307179586);
      const double dx = std::cos(theta), dy = std::sin(theta);
      for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
          double t = (dx * x / w + dy * y / h + 1.0) * 0.5;
          t = std::clamp(t, 0.0, 1.0);
          const double v = a * (1 - t) + b * t;
          for (int c = 0; c < 3; ++c) im.at(c, y, x) = v;
        }
      break;
    }
  }
}

struct SceneObject {
  BoundingBox box;
  int class_id;
  std::array<double, 3> color;
};

void fill_rect(Image& im, double x1, double y1, double x2, double y2,
               const std::array<double, 3>& col) {
  const int ya = std::max(0, static_cast<int>(std::ceil(y1 - 0.5)));
  const int yb = std::min(im.h - 1, static_cast<int>(std::floor(y2 - 0.5)));
  const int xa = std::max(0, static_cast<int>(std::ceil(x1 - 0.5)));
  const int xb = std::min(im.w - 1, static_cast<int>(std::floor(x2 - 0.5)));
  for (int y = ya; y <= yb; ++y)
    for (int x = xa; x <= xb; ++x)
      for (int c = 0; c < 3; ++c) im.at(c, y, x) = col[c];
}

void render_object(Image& im, const SceneObject& o) {
  const auto& b = o.box;
  if (o.class_id == 1) {
    // vehicle: solid body with a darker cabin block
    fill_rect(im, b.x1, b.y1, b.x2, b.y2, o.color);
    std::array<double, 3> roof{o.color[0] * 0.55, o.color[1] * 0.55, o.color[2] * 0.55};
    const double mw = b.width() * 0.25, mh = b.height() * 0.25;
    fill_rect(im, b.x1 + mw, b.y1 + mh, b.x2 - mw, b.y2 - mh, roof);
  } else {
    // airplane: ellipse body plus full-span wing and fuselage bars
    const double cx = b.cx(), cy = b.cy();
    const double a = b.width() * 0.5, bb = b.height() * 0.5;
    const int ya = std::max(0, static_cast<int>(std::floor(b.y1)));
    const int yb = std::min(im.h - 1, static_cast<int>(std::ceil(b.y2)));
    const int xa = std::max(0, static_cast<int>(std::floor(b.x1)));
    const int xb = std::min(im.w - 1, static_cast<int>(std::ceil(b.x2)));
    for (int y = ya; y <= yb; ++y)
      for (int x = xa; x <= xb; ++x) {
        const double px = x + 0.5, py = y + 0.5;
        const double ex = (px - cx) / (a * 0.62), ey = (py - cy) / (bb * 0.62);
        const bool in_ellipse = ex * ex + ey * ey <= 1.0;
        const bool in_wing = std::abs(py - cy) <= bb * 0.16 && px >= b.x1 && px <= b.x2;
        const bool in_fuselage = std::abs(px - cx) <= a * 0.16 && py >= b.y1 && py <= b.y2;
        if (in_ellipse || in_wing || in_fuselage)
          for (int c = 0; c < 3; ++c) im.at(c, y, x) = o.color[c];
      }
  }
}

std::vector<SceneObject> place_objects(const SceneSpec& scene, const DomainSpec& domain,
                                       Rng& rng) {
  std::vector<SceneObject> objs;
  const int n = rng.uniform_int(scene.min_objects, scene.max_objects);
  for (int i = 0; i < n; ++i) {
    SceneObject o;
    o.class_id = rng.uniform_int(1, 2);
    bool placed = false;
    for (int attempt = 0; attempt < 40 && !placed; ++attempt) {
      double bw, bh;
      if (o.class_id == 1) {
        bw = rng.uniform(scene.min_size, scene.max_size);
        bh = std::max(scene.min_size * 0.5, bw * rng.uniform(0.45, 0.75));
        if (rng.bernoulli(0.5)) std::swap(bw, bh);
      } else {
        bw = rng.uniform(scene.min_size, scene.max_size);
        bh = std::clamp(bw * rng.uniform(0.8, 1.25), scene.min_size * 0.8, scene.max_size);
      }
      const double x1 = rng.uniform(1.0, scene.image_w - 1.0 - bw);
      const double y1 = rng.uniform(1.0, scene.image_h - 1.0 - bh);
      o.box = {x1, y1, x1 + bw, y1 + bh};
      placed = true;
      for (const auto& prev : objs)
        if (iou(prev.box, o.box) > scene.max_overlap_iou) {
          placed = false;
          break;
        }
    }
    if (!placed) continue;  // crowded scene; fewer objects is fine
    const auto& base = domain.palette[rng.uniform_int(0, static_cast<int>(domain.palette.size()) - 1)];
    for (int c = 0; c < 3; ++c) o.color[c] = std::clamp(base[c] + rng.uniform(-0.05, 0.05), 0.0, 1.0);
    objs.push_back(o);
  }
  return objs;
}

json domain_to_json(const DomainSpec& d) {
  json j;
  j["name"] = d.name;
  j["palette"] = d.palette;
  j["background"] = background_name(d.background);
  j["gain"] = d.gain;
  j["bias"] = d.bias;
  j["noise_sigma"] = d.noise_sigma;
  j["blur_radius"] = d.blur_radius;
  return j;
}

DomainSpec domain_from_json(const json& j) {
  DomainSpec d;
  d.name = j.at("name").get<std::string>();
  d.palette = j.at("palette").get<std::vector<std::array<double, 3>>>();
  d.background = background_from(j.at("background").get<std::string>());
  d.gain = j.at("gain").get<std::array<double, 3>>();
  d.bias = j.at("bias").get<std::array<double, 3>>();
  d.noise_sigma = j.at("noise_sigma").get<double>();
  d.blur_radius = j.at("blur_radius").get<double>();
  return d;
}

json scene_to_json(const SceneSpec& s) {
  json j;
  j["image_h"] = s.image_h;
  j["image_w"] = s.image_w;
  j["min_objects"] = s.min_objects;
  j["max_objects"] = s.max_objects;
  j["min_size"] = s.min_size;
  j["max_size"] = s.max_size;
  j["max_overlap_iou"] = s.max_overlap_iou;
  j["seed"] = s.seed;
  return j;
}

SceneSpec scene_from_json(const json& j) {
  SceneSpec s;
  s.image_h = j.at("image_h").get<int>();
  s.image_w = j.at("image_w").get<int>();
  s.min_objects = j.at("min_objects").get<int>();
  s.max_objects = j.at("max_objects").get<int>();
  s.min_size = j.at("min_size").get<double>();
  s.max_size = j.at("max_size").get<double>();
  s.max_overlap_iou = j.at("max_overlap_iou").get<double>();
  s.seed = j.at("seed").get<uint64_t>();
  return s;
}

std::string image_id(int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%06d", index);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << text;
  if (!out) throw IoError("write failure: " + path);
}

}  // namespace

LabeledSample render_scene(const DomainSpec& domain, const SceneSpec& scene,
                           uint64_t image_index) {
  Rng img_rng = Rng(scene.seed).derive(image_index);
  Rng place_rng = img_rng.derive(1);
  Rng noise_rng = img_rng.derive(2);

  LabeledSample s;
  s.image = Image(scene.image_h, scene.image_w);
  render_background(s.image, domain, place_rng);
  const auto objs = place_objects(scene, domain, place_rng);
  for (const auto& o : objs) {
    render_object(s.image, o);
    s.boxes.push_back(o.box);
    s.classes.push_back(o.class_id);
  }

  // Imaging shift: channel affine, then sensor noise, then optics blur.
  for (int c = 0; c < 3; ++c) {
    const double g = domain.gain[c], b = domain.bias[c];
    double* plane = s.image.px.data() + static_cast<size_t>(c) * scene.image_h * scene.image_w;
    const size_t n = static_cast<size_t>(scene.image_h) * scene.image_w;
    for (size_t i = 0; i < n; ++i) plane[i] = g * plane[i] + b;
  }
  if (domain.noise_sigma > 0)
    for (auto& v : s.image.px) v += noise_rng.normal(0.0, domain.noise_sigma);
  if (domain.blur_radius > 0) s.image = gaussian_blur(s.image, domain.blur_radius);
  clamp01(s.image);
  return s;
}

DatasetManifest generate_domain(const DomainSpec& domain, const SceneSpec& scene,
                                int n_images, const std::string& out_dir) {
  domain.validate();
  scene.validate();
  if (n_images < 1) throw ValidationError("generate_domain: n_images must be >= 1");

  std::error_code ec;
  fs::create_directories(fs::path(out_dir) / "images", ec);
  fs::create_directories(fs::path(out_dir) / "annotations", ec);
  if (ec) throw IoError("cannot create dataset directories under: " + out_dir);

  DatasetManifest m;
  m.dir = out_dir;
  m.domain = domain;
  m.scene = scene;
  for (int i = 0; i < n_images; ++i) {
    const std::string id = image_id(i);
    const LabeledSample s = render_scene(domain, scene, static_cast<uint64_t>(i));
    io::write_png((fs::path(out_dir) / "images" / (id + ".png")).string(), s.image);
    json ann;
    ann["boxes"] = json::array();
    for (const auto& b : s.boxes) ann["boxes"].push_back({b.x1, b.y1, b.x2, b.y2});
    ann["classes"] = s.classes;
    write_text((fs::path(out_dir) / "annotations" / (id + ".json")).string(), ann.dump());
    m.ids.push_back(id);
  }
  json mj;
  mj["ids"] = m.ids;
  mj["domain"] = domain_to_json(domain);
  mj["scene"] = scene_to_json(scene);
  mj["count"] = n_images;
  write_text((fs::path(out_dir) / "manifest.json").string(), mj.dump(2));
  return m;
}

DatasetManifest read_manifest(const std::string& dir) {
  const std::string path = (fs::path(dir) / "manifest.json").string();
  json j;
  try {
    j = json::parse(io::read_file(path));
  } catch (const json::exception& e) {
    throw IoError("corrupt manifest " + path + ": " + e.what());
  }
  DatasetManifest m;
  m.dir = dir;
  m.ids = j.at("ids").get<std::vector<std::string>>();
  m.domain = domain_from_json(j.at("domain"));
  m.scene = scene_from_json(j.at("scene"));
  return m;
}

std::vector<LabeledSample> load_dataset(const std::string& dir) {
  const DatasetManifest m = read_manifest(dir);
  std::vector<LabeledSample> out;
  out.reserve(m.ids.size());
  for (const auto& id : m.ids) {
    const std::string img_path = (fs::path(dir) / "images" / (id + ".png")).string();
    const std::string ann_path = (fs::path(dir) / "annotations" / (id + ".json")).string();
    LabeledSample s;
    s.image = io::read_png(img_path);
    json ann;
    try {
      ann = json::parse(io::read_file(ann_path));
    } catch (const json::exception& e) {
      throw IoError("corrupt annotation " + ann_path + ": " + e.what());
    }
    const auto raw_boxes = ann.at("boxes").get<std::vector<std::array<double, 4>>>();
    const auto classes = ann.at("classes").get<std::vector<int>>();
    if (raw_boxes.size() != classes.size())
      throw IoError("annotation/boxes class count mismatch in " + ann_path);
    for (size_t i = 0; i < raw_boxes.size(); ++i) {
      BoundingBox b{raw_boxes[i][0], raw_boxes[i][1], raw_boxes[i][2], raw_boxes[i][3]};
      if (!b.valid()) throw IoError("invalid box in " + ann_path);
      auto clipped = clip_box(b, s.image.h, s.image.w);
      if (!clipped) continue;  // fully outside after clipping
      s.boxes.push_back(*clipped);
      s.classes.push_back(classes[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Image> load_images(const std::string& dir) {
  const DatasetManifest m = read_manifest(dir);
  std::vector<Image> out;
  out.reserve(m.ids.size());
  for (const auto& id : m.ids)
    out.push_back(io::read_png((fs::path(dir) / "images" / (id + ".png")).string()));
  return out;
}

DomainSpec domain_preset(const std::string& name) {
  DomainSpec d;
  d.name = name;
  if (name == "source") {
    return d;
  }
  if (name == "target-color") {
    d.gain = {1.4, 1.0, 0.7};
    d.bias = {0.02, 0.0, -0.02};
    return d;
  }
  if (name == "target-noise") {
    d.noise_sigma = 0.10;
    return d;
  }
  if (name == "target-style") {
    d.background = DomainSpec::Background::noise;
    d.gain = {1.15, 1.05, 0.90};
    d.noise_sigma = 0.02;
    d.blur_radius = 0.8;
    return d;
  }
  throw ValidationError("unknown domain preset: " + name);
}

}  // namespace sfod
