#pragma once

#include <stdexcept>
#include <string>

namespace sar {

enum class ErrorKind {
  argument,   // bad user input / CLI usage
  io,         // filesystem failure
  format,     // malformed file contents
  invariant,  // parameter or type invariant violated
  domain,     // raster domain tag does not match the operation
  estimate,   // estimator could not produce a value
  misfocus,   // point-target analysis found no usable peak
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace sar
