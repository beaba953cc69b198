#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quasitree {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph input or a vertex id out of range.
class GraphError : public Error {
 public:
  using Error::Error;
};

// A vertex set that is not a valid cut side, or a cutset missing a required property.
class CutError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An enumeration limit was hit. Never silently truncated.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap, std::int64_t anchor, const std::string& what)
      : Error(what), cap_(std::move(cap)), anchor_(anchor) {}

  const std::string& cap() const { return cap_; }
  // Anchor vertex of the enumeration step that overflowed, -1 if not vertex-specific.
  std::int64_t anchor() const { return anchor_; }

 private:
  std::string cap_;
  std::int64_t anchor_;
};

class QuasiIsometryError : public Error {
 public:
  using Error::Error;
};

// A postcondition of the decomposition pipeline did not hold.
class CertificateError : public Error {
 public:
  using Error::Error;
};

}  // namespace quasitree
