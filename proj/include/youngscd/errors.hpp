#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace youngscd {

/// A partition does not fit the shape it is used with.
class invalid_element : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A weak composition has the wrong length or total for its context.
class invalid_composition : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class not_a_cover : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A key was looked up in a poset that does not contain it.
class unknown_element : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

/// Rendering limit exceeded.
class size_error : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Malformed text input; line numbers are 1-based, 0 when not applicable.
class parse_error : public std::runtime_error {
  public:
    parse_error(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace youngscd
