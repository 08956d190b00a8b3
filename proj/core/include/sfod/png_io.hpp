#pragma once

#include <string>

#include "sfod/image.hpp"

namespace sfod::io {

/// Write an 8-bit RGB PNG. Values quantized by round(v * 255) after
/// clamping to [0,1]. Encoder settings are fixed so identical pixel data
/// produces identical bytes.
void write_png(const std::string& path, const Image& im);

/// Decode a PNG into a [0,1] RGB image. Gray and alpha inputs are expanded
/// to RGB. Reads are routed through the access recorder.
Image read_png(const std::string& path);

}  // namespace sfod::io
