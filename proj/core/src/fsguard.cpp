#include "sfod/fsguard.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sfod/errors.hpp"

namespace sfod::io {

AccessRecorder& AccessRecorder::instance() {
  static AccessRecorder rec;
  return rec;
}

void AccessRecorder::watch(const std::string& prefix) {
  std::lock_guard<std::mutex> lock(mutex_);
  entries_.push_back({canonical_path(prefix), false, 0});
}

void AccessRecorder::forbid(const std::string& prefix) {
  std::lock_guard<std::mutex> lock(mutex_);
  entries_.push_back({canonical_path(prefix), true, 0});
}

void AccessRecorder::reset() {
  std::lock_guard<std::mutex> lock(mutex_);
  entries_.clear();
  total_ = 0;
}

uint64_t AccessRecorder::reads_under(const std::string& prefix) const {
  const std::string canon = canonical_path(prefix);
  std::lock_guard<std::mutex> lock(mutex_);
  uint64_t n = 0;
  for (const auto& e : entries_)
    if (e.prefix == canon) n += e.count;
  return n;
}

uint64_t AccessRecorder::total_reads() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return total_;
}

void AccessRecorder::note_read(const std::string& canonical) {
  std::lock_guard<std::mutex> lock(mutex_);
  ++total_;
  for (auto& e : entries_) {
    if (canonical.rfind(e.prefix, 0) == 0) {
      ++e.count;
      if (e.forbidden)
        throw SourceAccessError("forbidden read under '" + e.prefix + "': " + canonical);
    }
  }
}

std::string canonical_path(const std::string& path) {
  std::error_code ec;
  auto canon = std::filesystem::weakly_canonical(path, ec);
  if (ec) return std::filesystem::absolute(path).lexically_normal().string();
  return canon.string();
}

std::string read_file(const std::string& path) {
  AccessRecorder::instance().note_read(canonical_path(path));
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failure: " + path);
  return ss.str();
}

}  // namespace sfod::io
