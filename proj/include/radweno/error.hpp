#pragma once

#include <stdexcept>
#include <string>

namespace radweno {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: invalid geometry, malformed config, impossible grid.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A cell holds nonpositive density or pressure.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

// Time marching failed: invalid state mid-run or step cap exceeded.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace radweno
