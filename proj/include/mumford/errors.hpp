#pragma once

#include <stdexcept>
#include <string>

namespace mumford {

// Raised when a comparison or digit extraction cannot be decided at the
// current truncation level.  Callers may retry at higher precision.
struct precision_error : std::runtime_error {
  explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised for structurally invalid inputs (division by exact zero,
// out-of-catalog parameters, malformed trees, ...).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when regenerated table data disagrees with the shipped golden data.
struct table_mismatch_error : std::runtime_error {
  explicit table_mismatch_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mumford
