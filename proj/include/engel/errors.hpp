#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace engel {

/// Domain errors: bad inputs, mismatched carriers, non-invertible elements.
class domain_error : public std::runtime_error {
public:
  explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Syntax errors from the text parsers; `position` is a byte offset into the
/// offending input.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Breach of an internal invariant; maps to exit status 3 in the CLI.
class internal_error : public std::logic_error {
public:
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

#define ENGEL_CHECK(cond, msg)                         \
  do {                                                 \
    if (!(cond)) throw ::engel::internal_error(msg);   \
  } while (0)

} // namespace engel
