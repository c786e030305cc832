#pragma once

#include <stdexcept>
#include <string>

namespace toxspan {

// Categories map to distinct CLI exit codes (see toxspan --help).
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class validation_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Thrown when training hits a non-finite loss.
class diverged_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace toxspan
