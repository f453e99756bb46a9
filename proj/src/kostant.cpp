#include "ellweyl/kostant.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace ellweyl {

void require_nonzero(const EllipticVector& t) {
  if (t.is_zero()) throw PreconditionError("T must be a non-zero elliptic element");
}

void require_dominant(const RootSystem& rs, const EllipticVector& t) {
  require_nonzero(t);
  for (int i = 0; i < rs.rank(); ++i) {
    if (t.t[static_cast<std::size_t>(i)] < 0) {
      throw PreconditionError("coweight is not dominant: entry for alpha_" +
                              std::to_string(i + 1) + " is " +
                              format_rational(t.t[static_cast<std::size_t>(i)]));
    }
  }
}

GradingData grading_sets(const RootSystem& rs, const EllipticVector& t) {
  require_nonzero(t);
  GradingData g;
  for (std::size_t r = 0; r < rs.root_count(); ++r) {
    const Root root{static_cast<std::uint32_t>(r)};
    const Rat value = eval_root(rs, root, t);
    if (value > 0) {
      g.u_plus.push_back(root);
    } else if (value < 0) {
      g.u_minus.push_back(root);
    } else {
      g.levi.push_back(root);
    }
  }
  g.r = g.u_plus.size();
  return g;
}

std::vector<ElementId> levi_weyl(const RootSystem& rs, const WeylGroup& W,
                                 const EllipticVector& t) {
  require_nonzero(t);
  if (static_cast<int>(t.t.size()) != rs.rank()) {
    throw PreconditionError("coweight rank does not match the root system rank");
  }
  std::vector<ElementId> stabilizer;
  for (ElementId id = 0; id < W.order(); ++id) {
    if (W.act_on_coweight(id, t) == t) stabilizer.push_back(id);
  }
  return stabilizer;
}

namespace {

// Membership mask over root indices for the positively graded roots.
std::vector<char> u_plus_mask(const RootSystem& rs, const GradingData& g) {
  std::vector<char> mask(rs.root_count(), 0);
  for (const Root r : g.u_plus) mask[r.index] = 1;
  return mask;
}

bool inversions_inside(const WeylGroup& W, ElementId id, const std::vector<char>& mask) {
  for (const Root beta : W.inversion_set(id)) {
    if (!mask[beta.index]) return false;
  }
  return true;
}

}  // namespace

std::vector<ElementId> minimal_reps(const RootSystem& rs, const WeylGroup& W,
                                    const EllipticVector& t) {
  require_dominant(rs, t);
  const GradingData g = grading_sets(rs, t);
  const std::vector<char> mask = u_plus_mask(rs, g);
  std::vector<ElementId> reps;
  for (ElementId id = 0; id < W.order(); ++id) {
    if (inversions_inside(W, id, mask)) reps.push_back(id);
  }
  // BFS ids are already ordered by (length, word lex).
  const std::size_t stabilizer_order = levi_weyl(rs, W, t).size();
  if (reps.size() * stabilizer_order != W.order()) {
    throw InternalError("coset transversal size " + std::to_string(reps.size()) +
                        " does not divide the group order as expected");
  }
  return reps;
}

std::pair<ElementId, ElementId> factorize(const RootSystem& rs, const WeylGroup& W,
                                          const EllipticVector& t, ElementId w) {
  require_dominant(rs, t);
  const GradingData g = grading_sets(rs, t);
  const std::vector<char> mask = u_plus_mask(rs, g);
  std::optional<std::pair<ElementId, ElementId>> found;
  for (const ElementId tau : levi_weyl(rs, W, t)) {
    const ElementId sigma = W.compose(W.inverse(tau), w);
    if (!inversions_inside(W, sigma, mask)) continue;
    if (found) throw InternalError("coset factorization is not unique");
    found = {tau, sigma};
  }
  if (!found) throw InternalError("coset factorization does not exist");
  return *found;
}

KostantDecomposition bruhat_cells(const RootSystem& rs, const WeylGroup& W,
                                  const EllipticVector& t) {
  require_dominant(rs, t);
  const GradingData g = grading_sets(rs, t);
  const std::vector<char> mask = u_plus_mask(rs, g);

  KostantDecomposition out;
  out.w1_order = levi_weyl(rs, W, t).size();
  const std::vector<ElementId> reps = minimal_reps(rs, W, t);
  const ElementId longest = W.longest();
  out.entries.reserve(reps.size());
  for (const ElementId sigma : reps) {
    KostantCell cell;
    cell.sigma = sigma;
    cell.phi = W.inversion_set(sigma);
    cell.n = cell.phi.size();
    // Roots gamma inverted by longest-after-sigma whose sigma-image lands in
    // the graded part; the image set is exactly u+ minus the inversion set.
    const ElementId sigma_inv_longest = W.compose(W.inverse(sigma), longest);
    for (const Root gamma : W.inversion_set(sigma_inv_longest)) {
      if (mask[W.act(sigma, gamma).index]) cell.delta_sigma.push_back(gamma);
    }
    if (cell.n > g.r || cell.delta_sigma.size() != g.r - cell.n) {
      throw InternalError("cell root count does not match r - n");
    }
    cell.cell_dim = g.r - cell.n;
    out.entries.push_back(std::move(cell));
  }
  // reps are (length, word lex) ordered, which is (cell_dim desc, word lex).
  return out;
}

std::optional<std::size_t> complement_codimension(const RootSystem& rs, const WeylGroup& W,
                                                  const EllipticVector& t) {
  require_dominant(rs, t);
  std::set<ElementId> excluded{W.identity()};
  for (int i = 0; i < rs.rank(); ++i) {
    if (eval_root(rs, rs.simple_root(i), t) != 0) {
      excluded.insert(W.reflection(rs.simple_root(i)));
    }
  }
  std::optional<std::size_t> least;
  for (const ElementId sigma : minimal_reps(rs, W, t)) {
    if (excluded.count(sigma)) continue;
    const auto n = static_cast<std::size_t>(W[sigma].length);
    if (!least || n < *least) least = n;
  }
  return least;
}

EllipticVector integralize(const EllipticVector& t) {
  require_nonzero(t);
  long long multiplier = 1;
  for (const Rat& x : t.t) multiplier = std::lcm(multiplier, x.denominator());
  EllipticVector out;
  out.t.reserve(t.t.size());
  for (const Rat& x : t.t) out.t.push_back(x * multiplier);
  return out;
}

std::vector<std::size_t> poincare_profile(const RootSystem& rs, const WeylGroup& W,
                                          const EllipticVector& t) {
  const std::vector<ElementId> reps = minimal_reps(rs, W, t);
  return length_polynomial(W, reps);
}

std::vector<ElementId> reflection_subgroup(const WeylGroup& W, std::span<const Root> roots) {
  std::vector<ElementId> generators;
  for (const Root r : roots) generators.push_back(W.reflection(r));
  std::set<ElementId> seen{W.identity()};
  std::vector<ElementId> queue{W.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const ElementId gen : generators) {
      const ElementId next = W.compose(queue[head], gen);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return std::vector<ElementId>(seen.begin(), seen.end());
}

std::vector<std::size_t> length_polynomial(const WeylGroup& W, std::span<const ElementId> ids) {
  std::size_t max_length = 0;
  for (const ElementId id : ids) max_length = std::max(max_length, static_cast<std::size_t>(W[id].length));
  std::vector<std::size_t> coeffs(ids.empty() ? 0 : max_length + 1, 0);
  for (const ElementId id : ids) ++coeffs[static_cast<std::size_t>(W[id].length)];
  return coeffs;
}

}  // namespace ellweyl
