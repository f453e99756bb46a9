#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellweyl/kostant.hpp"
#include "ellweyl/realform.hpp"

namespace ellweyl {

/****************************************************************************

  The finiteness criterion.

  A chamber candidate is a Weyl element w whose transported fundamental
  system makes t dominant (condition (s1)); there are exactly as many of
  these as stabilizer elements, so enumerating them all is complete. A
  candidate passes (s2) when every one of its simple roots graded nonzero
  by t is compact under the given coloring. The criterion holds when some
  candidate passes; when none passes and no compact root meets the graded
  part at all, the failure is structural (no coloring-independent chamber
  search could ever succeed) and is reported as OBSTRUCTED.

 ****************************************************************************/

struct ChamberCandidate {
  ElementId w;                    // the system is the w-image of the standard one
  std::vector<Root> simple_roots; // images of the standard simple roots, in order
  EllipticVector t_in_chamber;    // t transported by w^{-1}; dominant
};

enum class Verdict { Holds, Fails, Obstructed };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& name);

struct ChamberFailure {
  ChamberCandidate candidate;
  std::vector<Root> violators;  // graded simple roots that are not compact
};

struct CriterionReport {
  Verdict verdict = Verdict::Fails;
  std::vector<ChamberCandidate> witnesses;  // candidates passing (s2)
  std::vector<ChamberFailure> failures;
  bool k_meets_u = false;  // false means the structural obstruction applies
  std::optional<KostantDecomposition> kostant;  // for the first witness chamber
};

// All chamber candidates for t, sorted by the word of w. Requires t != 0.
std::vector<ChamberCandidate> s1_chambers(const RootSystem& rs, const WeylGroup& W,
                                          const EllipticVector& t);

// Violating simple roots of the candidate; empty means the candidate passes.
std::vector<Root> check_s2(const RootSystem& rs, const ChamberCandidate& candidate,
                           const EllipticVector& t, const InvolutionColoring& z);

CriterionReport check_condition_S(const RootSystem& rs, const WeylGroup& W,
                                  const EllipticVector& t, const InvolutionColoring& z);

// Solutions m >= 0 of n.m = target, lexicographically sorted; empty unless
// the target is a nonnegative integer. Every weight n_j must be >= 1.
std::vector<std::vector<long long>> taylor_support(const std::vector<long long>& weights,
                                                   const Rat& target);

}  // namespace ellweyl
