#pragma once

#include <string>
#include <vector>

#include "ellweyl/criterion.hpp"

namespace ellweyl {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // empty when passed
};

// Runs the structural invariant suite on one instance: root-set closure and
// indexing laws, Weyl group laws, grading partition and additivity,
// stabilizer against the reflection subgroup, coset counting and length
// polynomials, cell identities, coloring parity laws, and criterion
// cross-checks (chamber count, integralization and coloring-shift
// invariance). All checks are exact.
std::vector<CheckResult> verify_instance(const RootSystem& rs, const WeylGroup& W,
                                         const EllipticVector& t, const InvolutionColoring& z);

}  // namespace ellweyl
