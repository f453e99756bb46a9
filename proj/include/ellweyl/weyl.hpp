#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ellweyl/coweight.hpp"
#include "ellweyl/root_system.hpp"

namespace ellweyl {

/****************************************************************************

  The Weyl group as permutations of root indices.

  The action on the root set is faithful, so each element is keyed by its
  permutation; this gives canonical deduplication without any matrix
  arithmetic. Enumeration is a breadth-first search over right products
  with the simple reflections, layered by length, so every element carries
  a reduced word and the words within each length are discovered in
  lexicographic order. The group table is immutable after enumeration and
  queries are safe for concurrent reads.

 ****************************************************************************/

using ElementId = std::uint32_t;
using RootPermutation = std::vector<std::uint16_t>;

struct WeylElement {
  RootPermutation perm;   // perm[r] = image of root index r
  std::vector<int> word;  // reduced word, 0-based generator indices
  int length = 0;
};

class WeylGroup {
 public:
  static constexpr std::uint64_t kDefaultCap = 10'000'000;

  // Enumerates the whole group. The theoretical order is computed from the
  // component families first; if it exceeds `cap` a ResourceError is thrown
  // before any element is generated (no silent truncation). The group keeps
  // a pointer to `rs`, which must stay alive and unmoved.
  static WeylGroup enumerate(const RootSystem& rs, std::uint64_t cap = kDefaultCap);

  // Closed-form group order for a spec (saturates at 2^64-1 on overflow).
  static std::uint64_t theoretical_order(const RootSystemSpec& spec);

  const RootSystem& root_system() const { return *rs_; }
  std::size_t order() const { return elements_.size(); }
  const WeylElement& operator[](ElementId id) const { return elements_[id]; }
  ElementId identity() const { return 0; }
  ElementId simple_reflection(int i) const;

  ElementId compose(ElementId a, ElementId b) const;  // acts as a after b
  ElementId inverse(ElementId a) const;
  std::optional<ElementId> find(const RootPermutation& perm) const;

  // The reflection along an arbitrary root.
  ElementId reflection(Root beta) const;

  // The unique maximal-length element; its inversion set is all of the
  // positive roots.
  ElementId longest() const { return longest_; }

  Root act(ElementId w, Root a) const { return Root{elements_[w].perm[a.index]}; }

  // Positive roots sent negative by the inverse action; size equals length.
  std::vector<Root> inversion_set(ElementId w) const;

  // The transported coweight w.t, defined by alpha(w.t) = (w^{-1} alpha)(t)
  // for every root alpha.
  EllipticVector act_on_coweight(ElementId w, const EllipticVector& t) const;

 private:
  struct PermHash {
    std::size_t operator()(const RootPermutation& p) const;
  };

  const RootSystem* rs_ = nullptr;
  std::vector<WeylElement> elements_;
  std::unordered_map<RootPermutation, ElementId, PermHash> index_;
  ElementId longest_ = 0;
};

}  // namespace ellweyl
