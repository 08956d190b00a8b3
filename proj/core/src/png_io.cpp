#include "sfod/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

#include "sfod/errors.hpp"
#include "sfod/fsguard.hpp"

namespace sfod::io {

namespace {

struct FileCloser {
  void operator()(FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

// libpng reads from an in-memory buffer so decoding shares the recorded
// read_file() path with every other loader.
struct MemReader {
  const unsigned char* data;
  size_t size;
  size_t pos;
};

void mem_read_fn(png_structp png, png_bytep out, png_size_t n) {
  auto* r = static_cast<MemReader*>(png_get_io_ptr(png));
  if (r->pos + n > r->size) png_error(png, "truncated PNG stream");
  std::memcpy(out, r->data + r->pos, n);
  r->pos += n;
}

}  // namespace

void write_png(const std::string& path, const Image& im) {
  if (im.empty()) throw ValidationError("write_png: empty image: " + path);
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) throw IoError("cannot open for writing: " + path);

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG encode failure: " + path);
  }
  png_init_io(png, fp.get());
  // Fixed settings: deterministic output bytes for identical pixels.
  png_set_compression_level(png, 6);
  png_set_filter(png, 0, PNG_FILTER_NONE);
  png_set_IHDR(png, info, im.w, im.h, 8, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  std::vector<unsigned char> row(static_cast<size_t>(im.w) * 3);
  for (int y = 0; y < im.h; ++y) {
    for (int x = 0; x < im.w; ++x)
      for (int c = 0; c < 3; ++c) {
        double v = im.at(c, y, x);
        v = v < 0 ? 0 : (v > 1 ? 1 : v);
        row[static_cast<size_t>(x) * 3 + c] =
            static_cast<unsigned char>(std::lround(v * 255.0));
      }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

Image read_png(const std::string& path) {
  const std::string bytes = read_file(path);
  if (png_sig_cmp(reinterpret_cast<png_const_bytep>(bytes.data()), 0,
                  std::min<size_t>(8, bytes.size())))
    throw IoError("not a PNG file: " + path);

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw IoError("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw IoError("png_create_info_struct failed");
  }
  MemReader reader{reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), 0};
  std::vector<png_bytep> rows;
  std::vector<unsigned char> raster;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("corrupt PNG: " + path);
  }
  png_set_read_fn(png, &reader, mem_read_fn);
  png_read_info(png, info);

  png_set_expand(png);                // palettes, low bit depth, tRNS
  png_set_strip_16(png);              // 16-bit -> 8-bit
  png_set_strip_alpha(png);
  png_set_gray_to_rgb(png);
  png_read_update_info(png, info);

  const int w = static_cast<int>(png_get_image_width(png, info));
  const int h = static_cast<int>(png_get_image_height(png, info));
  const size_t stride = png_get_rowbytes(png, info);
  raster.resize(stride * h);
  rows.resize(h);
  for (int y = 0; y < h; ++y) rows[y] = raster.data() + stride * y;
  png_read_image(png, rows.data());
  png_destroy_read_struct(&png, &info, nullptr);

  Image im(h, w);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < 3; ++c)
        im.at(c, y, x) = raster[stride * y + static_cast<size_t>(x) * 3 + c] / 255.0;
  return im;
}

}  // namespace sfod::io
