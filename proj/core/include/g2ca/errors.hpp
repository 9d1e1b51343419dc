#pragma once

#include <stdexcept>
#include <string>

namespace g2ca {

// Bad user-supplied data: non-member coordinates, invalid tableaux, ...
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A state has too little trailing vacuum for the requested evolution.
struct PaddingError : std::runtime_error {
  int cell;  // index of the offending cell
  PaddingError(const std::string& msg, int cell_) : std::runtime_error(msg), cell(cell_) {}
};

// Replaying a lowering path hit 0, or an internal table failed verification.
// Always a bug, never a data error.
struct ReplayError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace g2ca
