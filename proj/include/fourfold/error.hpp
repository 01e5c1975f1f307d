#pragma once
#include <stdexcept>
#include <string>

namespace fourfold {

// Exit-code buckets used by the CLI: Usage -> 2, Math -> 1, Internal -> 3.
enum class Err { Usage, Math, Internal };

struct Error : std::runtime_error {
  Err kind;
  Error(Err k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(Err k, const std::string& msg) { throw Error(k, msg); }

inline void check(bool ok, Err k, const std::string& msg) {
  if (!ok) fail(k, msg);
}

}  // namespace fourfold
