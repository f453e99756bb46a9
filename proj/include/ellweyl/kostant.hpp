#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ellweyl/coweight.hpp"
#include "ellweyl/weyl.hpp"

namespace ellweyl {

/****************************************************************************

  Grading and coset data attached to a nonzero coweight.

  A coweight t splits the root set into the positively graded part u+, the
  zero part (the Levi roots) and u- = -u+. For dominant t the machinery of
  minimal coset representatives applies: the stabilizer subgroup W_1, the
  transversal W^1 of elements whose inversion sets lie inside the grading
  of u+, the unique W_1 x W^1 factorization, and the cell data whose
  dimensions are r - n per representative. Operations taking a dominant
  coweight treat dominance as a hard precondition; chamber changes are the
  caller's job (see criterion.hpp), which keeps the witness chamber
  explicit in reports.

  Everything here is a pure function of immutable inputs; outputs are
  deterministically ordered.

 ****************************************************************************/

struct GradingData {
  std::vector<Root> u_plus;   // eval > 0
  std::vector<Root> u_minus;  // eval < 0
  std::vector<Root> levi;     // eval = 0
  std::size_t r = 0;          // |u_plus| = complex dimension of u+
};

struct KostantCell {
  ElementId sigma;                // member of the transversal W^1
  std::vector<Root> phi;          // inversion set of sigma
  std::size_t n = 0;              // |phi| = length(sigma)
  std::vector<Root> delta_sigma;  // cell root set; |delta_sigma| = r - n
  std::size_t cell_dim = 0;       // r - n
};

struct KostantDecomposition {
  std::vector<KostantCell> entries;  // sorted by (cell_dim desc, word lex)
  std::size_t w1_order = 0;
};

// Sign partition of the whole root set. Requires t != 0.
GradingData grading_sets(const RootSystem& rs, const EllipticVector& t);

// The stabilizer subgroup of t, as sorted element ids. Coincides with the
// subgroup generated by the reflections along the Levi roots.
std::vector<ElementId> levi_weyl(const RootSystem& rs, const WeylGroup& W,
                                 const EllipticVector& t);

// The transversal W^1 = { sigma : inversion_set(sigma) inside grading of u+ },
// sorted by (length, word lex). Requires dominant nonzero t.
std::vector<ElementId> minimal_reps(const RootSystem& rs, const WeylGroup& W,
                                    const EllipticVector& t);

// The unique factorization w = tau * sigma with tau in the stabilizer and
// sigma in the transversal. Requires dominant nonzero t.
std::pair<ElementId, ElementId> factorize(const RootSystem& rs, const WeylGroup& W,
                                          const EllipticVector& t, ElementId w);

// Full cell table for a dominant nonzero t.
KostantDecomposition bruhat_cells(const RootSystem& rs, const WeylGroup& W,
                                  const EllipticVector& t);

// Least n over the transversal after removing the identity and the simple
// reflections along nonzero-graded simple roots; nullopt when nothing
// remains (the whole space is exhausted by the retained cells).
std::optional<std::size_t> complement_codimension(const RootSystem& rs, const WeylGroup& W,
                                                  const EllipticVector& t);

// The least positive integer multiple of t with integer entries. Preserves
// the sign of every root evaluation.
EllipticVector integralize(const EllipticVector& t);

// Coefficient k counts transversal elements of length k.
std::vector<std::size_t> poincare_profile(const RootSystem& rs, const WeylGroup& W,
                                          const EllipticVector& t);

// Subgroup generated by the reflections along the given roots, as sorted
// element ids. Used to cross-check the stabilizer computation.
std::vector<ElementId> reflection_subgroup(const WeylGroup& W, std::span<const Root> roots);

// Length generating polynomial (coefficient k = number of elements of
// length k) of a set of elements.
std::vector<std::size_t> length_polynomial(const WeylGroup& W, std::span<const ElementId> ids);

}  // namespace ellweyl
