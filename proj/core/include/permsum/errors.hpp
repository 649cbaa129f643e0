#pragma once

#include <stdexcept>
#include <string>

namespace permsum {

// Malformed input document (matrix or decomposition JSON). Kept distinct
// from std::invalid_argument so callers can map parse failures and domain
// validation failures to different process exit codes.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace permsum
