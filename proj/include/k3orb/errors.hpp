#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k3orb {

// A Gram matrix with det == 0; discriminant-group machinery needs a
// nondegenerate form.
struct DegenerateLatticeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Gram input whose matrix is not symmetric; bilinear forms on lattices are.
struct NonSymmetricMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A requested invariant pair (m, a) outside the classification. Carries the
// offending pair so callers can suggest nearby valid ones.
struct InadmissiblePairError : std::runtime_error {
  InadmissiblePairError(std::string msg, int m, int a)
      : std::runtime_error(std::move(msg)), m(m), a(a) {}
  int m;
  int a;
};

// Malformed Gram file. Positions are 1-based; line 0 means the position is
// given by entry path in the message instead (semantic errors located by
// matrix entry rather than byte).
struct GramParseError : std::runtime_error {
  GramParseError(std::string msg, int line, int column)
      : std::runtime_error(std::move(msg)), line(line), column(column) {}
  int line;
  int column;
};

}  // namespace k3orb
