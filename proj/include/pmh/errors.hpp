#pragma once

#include <stdexcept>
#include <string>

namespace pmh {

enum class ErrorClass {
  io,      // file missing, unreadable, unwritable
  format,  // malformed or corrupted file contents
  config,  // inconsistent parameters (seed/m mismatch, bad ranges)
  budget,  // sampling attempt cap exceeded
  clip,    // polygon clipping failed on pathological input
};

const char* error_class_name(ErrorClass c);

/// Library-wide exception. The class tag is machine-parseable and is what
/// the CLI prints on its one-line error output.
class Error : public std::runtime_error {
 public:
  Error(ErrorClass c, const std::string& message)
      : std::runtime_error(std::string(error_class_name(c)) + ": " + message),
        class_(c) {}

  ErrorClass error_class() const { return class_; }

 private:
  ErrorClass class_;
};

}  // namespace pmh
