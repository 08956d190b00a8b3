#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

namespace sfod::io {

/// Process-wide read recorder backing the source-free guarantee. Every file
/// read in this library goes through read_file(); the recorder keeps a count
/// per registered prefix and can turn reads under a forbidden prefix into a
/// hard error.
///
/// Thread-safe. Recording is cheap (prefix match on canonicalized paths).
class AccessRecorder {
 public:
  static AccessRecorder& instance();

  /// Count every read whose canonical path starts with `prefix`.
  void watch(const std::string& prefix);
  /// As watch(), but a matching read throws SourceAccessError.
  void forbid(const std::string& prefix);
  /// Drop all registered prefixes and counts.
  void reset();

  uint64_t reads_under(const std::string& prefix) const;
  uint64_t total_reads() const;

  /// Called by read_file(). Public so alternative I/O paths can opt in.
  void note_read(const std::string& canonical_path);

 private:
  AccessRecorder() = default;
  struct Entry {
    std::string prefix;
    bool forbidden = false;
    uint64_t count = 0;
  };
  std::vector<Entry> entries_;
  uint64_t total_ = 0;
  mutable std::mutex mutex_;
};

/// Read a whole file through the recorder. Throws IoError naming the path
/// when the file is missing or unreadable, SourceAccessError when the path
/// falls under a forbidden prefix.
std::string read_file(const std::string& path);

/// Canonicalize without requiring the path to exist.
std::string canonical_path(const std::string& path);

}  // namespace sfod::io
