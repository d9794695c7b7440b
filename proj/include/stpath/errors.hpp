#pragma once

#include <stdexcept>

namespace stpath {

/// An instance is beyond the size an exhaustive routine supports.
class ScaleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stpath
