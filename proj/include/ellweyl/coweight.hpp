#pragma once

#include <vector>

#include "ellweyl/rational.hpp"
#include "ellweyl/root_system.hpp"

namespace ellweyl {

// Exact coweight data for a nonzero elliptic element T: entry i holds the
// value alpha_i(-iT) on the i-th simple root. Every root then evaluates by
// linearity, and the whole grading machinery reduces to sign tests.
struct EllipticVector {
  std::vector<Rat> t;

  bool is_zero() const {
    for (const auto& x : t)
      if (x != 0) return false;
    return true;
  }
  bool is_dominant() const {
    for (const auto& x : t)
      if (x < 0) return false;
    return true;
  }
  friend bool operator==(const EllipticVector&, const EllipticVector&) = default;
};

inline Rat eval_root(const RootSystem& rs, Root a, const EllipticVector& t) {
  const auto v = rs.coords(a);
  Rat total(0);
  for (int i = 0; i < rs.rank(); ++i) {
    if (v[static_cast<std::size_t>(i)] != 0) total += Rat(v[static_cast<std::size_t>(i)]) * t.t[static_cast<std::size_t>(i)];
  }
  return total;
}

// Throws PreconditionError when t = 0 (T must be a nonzero elliptic element).
void require_nonzero(const EllipticVector& t);

// Throws PreconditionError naming the first simple root with a negative value.
void require_dominant(const RootSystem& rs, const EllipticVector& t);

}  // namespace ellweyl
