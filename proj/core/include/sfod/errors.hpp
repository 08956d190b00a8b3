#pragma once

#include <stdexcept>
#include <string>

namespace sfod {

/// Base error for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad user input: invalid spec values, malformed config, missing paths.
/// CLI maps this to exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

/// Persistent-state mismatch: checkpoint fingerprint, shape drift between
/// saved and live models. CLI maps this to exit code 3.
struct StateError : Error {
  using Error::Error;
};

/// I/O failure naming the offending path. CLI maps this to exit code 2.
struct IoError : Error {
  using Error::Error;
};

/// A read touched a path registered as forbidden (source-free guard).
struct SourceAccessError : Error {
  using Error::Error;
};

}  // namespace sfod
