#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tpb {

// Error categories, aligned with the CLI exit-code contract:
//   Input   -> exit 3 (malformed files, schema violations, type mismatches)
//   Invalid -> exit 1 (well-formed data failing a semantic invariant)
//   Internal-> never expected; signals a bug in this library
enum class Err {
  Input,
  Invalid,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Err kind, std::string name, const std::string& msg)
      : std::runtime_error(name + ": " + msg), kind_(kind), name_(std::move(name)) {}

  Err kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  Err kind_;
  std::string name_;  // stable identifier, e.g. "NonPrimitiveRay"
};

[[noreturn]] inline void fail(Err kind, const std::string& name, const std::string& msg) {
  throw Error(kind, name, msg);
}

}  // namespace tpb
