#pragma once

#include <stdexcept>
#include <string>

namespace cyconv {

// Bad input: malformed files, violated preconditions, out-of-range ids.
// The CLI maps this to exit code 1.
class graph_error : public std::runtime_error {
 public:
  explicit graph_error(const std::string& what) : std::runtime_error(what) {}
};

// A state the algorithms promise can never happen (e.g. every lifting
// fallback failing). The CLI maps this to exit code 2.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cyconv
