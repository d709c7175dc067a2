#pragma once

#include <stdexcept>
#include <string>

namespace antsched {

enum class ErrorKind {
  config,
  parse,
  integrity,
  quantization,
  model,
  decode,
  backend,
  generation,
  usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::config: return "configuration error";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::integrity: return "integrity error";
    case ErrorKind::quantization: return "quantization error";
    case ErrorKind::model: return "model error";
    case ErrorKind::decode: return "decode error";
    case ErrorKind::backend: return "backend error";
    case ErrorKind::generation: return "generation error";
    case ErrorKind::usage: return "usage error";
  }
  return "error";
}

}  // namespace antsched
