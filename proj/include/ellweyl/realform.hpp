#pragma once

#include <string>
#include <vector>

#include "ellweyl/coweight.hpp"
#include "ellweyl/root_system.hpp"

namespace ellweyl {

// Equal-rank real form given by an inner involution exp(pi ad iZ): the
// integer coweight z = (alpha_i(Z)) two-colors the roots by parity, and the
// even (compact) roots form a closed symmetric subsystem. Only these inner
// colorings are modeled; outer involutions do not reduce to a parity test.
struct InvolutionColoring {
  std::vector<long long> z;
  friend bool operator==(const InvolutionColoring&, const InvolutionColoring&) = default;
};

// True iff the coordinate sum of alpha against z is even.
bool is_compact(const RootSystem& rs, const InvolutionColoring& z, Root alpha);

std::vector<Root> compact_subsystem(const RootSystem& rs, const InvolutionColoring& z);

// True iff some compact root is graded nonzero by t, i.e. the compact part
// meets u. When false, the criterion of criterion.hpp cannot hold in any
// chamber (the bounded-domain obstruction).
bool k_cap_u_obstruction(const RootSystem& rs, const EllipticVector& t,
                         const InvolutionColoring& z);

// Best-effort type name for a closed symmetric root subset, e.g. "A1 x A1"
// or "B2"; "0" for the empty set, "?" when not recognized.
std::string describe_subsystem(const RootSystem& rs, const std::vector<Root>& roots);

}  // namespace ellweyl
