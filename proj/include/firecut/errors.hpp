#pragma once

#include <stdexcept>
#include <string>

namespace firecut {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent graph/instance description.
class SpecError : public Error {
 public:
  using Error::Error;
};

/// Query on a vertex that is absent, removed, or not enumerable.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (node cap, enumeration cap) was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace firecut
