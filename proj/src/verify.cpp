#include "ellweyl/verify.hpp"

#include <algorithm>
#include <set>

namespace ellweyl {

namespace {

class Suite {
 public:
  void check(const std::string& name, bool passed, const std::string& detail = "") {
    results_.push_back({name, passed, passed ? "" : detail});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> verify_instance(const RootSystem& rs, const WeylGroup& W,
                                         const EllipticVector& t, const InvolutionColoring& z) {
  Suite suite;
  const std::size_t nroots = rs.root_count();
  const std::size_t positives = rs.positive_count();

  // Root set laws.
  {
    bool closed = true, involutive = true, split = true;
    for (std::size_t r = 0; r < nroots && closed; ++r) {
      for (int i = 0; i < rs.rank(); ++i) {
        const Root image = rs.reflect(rs.root_at(r), i);
        if (image.index >= nroots) closed = false;
      }
    }
    for (std::size_t r = 0; r < nroots; ++r) {
      const Root root = rs.root_at(r);
      if (rs.negate(rs.negate(root)) != root) involutive = false;
      const auto v = rs.coords(root);
      const auto nz = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
      const bool positive = nz != v.end() && *nz > 0;
      if (positive != rs.is_positive(root)) split = false;
    }
    suite.check("roots: closed under simple reflections", closed);
    suite.check("roots: negation is an involution", involutive);
    suite.check("roots: positivity matches the index split", split && nroots == 2 * positives);
  }

  // Weyl group laws.
  {
    bool commutes = true, lengths = true;
    for (ElementId id = 0; id < W.order(); ++id) {
      const auto& e = W[id];
      if (W.inversion_set(id).size() != static_cast<std::size_t>(e.length)) lengths = false;
      for (std::size_t r = 0; r < nroots; ++r) {
        if (Root{e.perm[rs.negate(rs.root_at(r)).index]} != rs.negate(Root{e.perm[r]})) {
          commutes = false;
          break;
        }
      }
      if (!commutes) break;
    }
    suite.check("weyl: permutations commute with negation", commutes);
    suite.check("weyl: inversion count equals reduced length", lengths);

    const ElementId kappa = W.longest();
    bool partition = true;
    for (ElementId id = 0; id < W.order() && partition; ++id) {
      const auto phi = W.inversion_set(id);
      const auto phi_kappa = W.inversion_set(W.compose(id, kappa));
      if (phi.size() + phi_kappa.size() != positives) {
        partition = false;
        break;
      }
      std::set<Root> all(phi.begin(), phi.end());
      all.insert(phi_kappa.begin(), phi_kappa.end());
      partition = all.size() == positives;
    }
    suite.check("weyl: inversions of w and w*longest split the positives", partition);

    bool inverses = true;
    for (ElementId id = 0; id < W.order(); ++id) {
      if (W.compose(id, W.inverse(id)) != W.identity()) inverses = false;
    }
    suite.check("weyl: inverses compose to the identity", inverses);
  }

  // Grading laws for t.
  const GradingData grading = grading_sets(rs, t);
  {
    suite.check("grading: the three parts partition the roots",
                grading.u_plus.size() + grading.u_minus.size() + grading.levi.size() == nroots);
    bool mirrored = true;
    std::set<Root> minus(grading.u_minus.begin(), grading.u_minus.end());
    for (const Root r : grading.u_plus)
      if (!minus.count(rs.negate(r))) mirrored = false;
    std::set<Root> levi(grading.levi.begin(), grading.levi.end());
    for (const Root r : grading.levi)
      if (!levi.count(rs.negate(r))) mirrored = false;
    suite.check("grading: u- is the negation of u+ and the levi set is symmetric", mirrored);

    bool additive = true;
    for (std::size_t a = 0; a < nroots && additive; ++a) {
      for (std::size_t b = 0; b < nroots; ++b) {
        const auto va = rs.coords(rs.root_at(a));
        const auto vb = rs.coords(rs.root_at(b));
        std::vector<long long> sum(va.size());
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = va[k] + vb[k];
        const auto found = rs.find(sum);
        if (!found) continue;
        if (eval_root(rs, *found, t) !=
            eval_root(rs, rs.root_at(a), t) + eval_root(rs, rs.root_at(b), t)) {
          additive = false;
          break;
        }
      }
    }
    suite.check("grading: evaluation is additive on root sums", additive);
  }

  // Work in the dominant chamber of t.
  const std::vector<ChamberCandidate> chambers = s1_chambers(rs, W, t);
  const std::vector<ElementId> stabilizer = levi_weyl(rs, W, t);
  suite.check("chambers: count equals the stabilizer order",
              chambers.size() == stabilizer.size(),
              std::to_string(chambers.size()) + " vs " + std::to_string(stabilizer.size()));
  if (chambers.empty()) return suite.take();
  const EllipticVector& td = chambers.front().t_in_chamber;
  const GradingData dominant_grading = grading_sets(rs, td);
  suite.check("chambers: grading sizes are chamber independent",
              dominant_grading.r == grading.r &&
                  dominant_grading.levi.size() == grading.levi.size());
  {
    bool inside = true;
    for (const Root r : dominant_grading.u_plus)
      if (!rs.is_positive(r)) inside = false;
    suite.check("chambers: dominant grading lies in the positive roots", inside);
  }

  const std::vector<ElementId> dominant_stabilizer = levi_weyl(rs, W, td);
  {
    const std::vector<ElementId> generated = reflection_subgroup(W, dominant_grading.levi);
    suite.check("stabilizer: generated by the levi reflections",
                generated == dominant_stabilizer,
                std::to_string(generated.size()) + " vs " + std::to_string(dominant_stabilizer.size()));
  }

  const std::vector<ElementId> reps = minimal_reps(rs, W, td);
  suite.check("cosets: transversal times stabilizer counts the group",
              reps.size() * dominant_stabilizer.size() == W.order());
  {
    // W(q) = W_1(q) * W^1(q), with each side computed on its own.
    std::vector<ElementId> everyone(W.order());
    for (ElementId id = 0; id < W.order(); ++id) everyone[id] = id;
    const auto whole = length_polynomial(W, everyone);
    const auto left = length_polynomial(W, dominant_stabilizer);
    const auto right = length_polynomial(W, reps);
    std::vector<std::size_t> product(left.size() + right.size() - 1, 0);
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j) product[i + j] += left[i] * right[j];
    while (!product.empty() && product.back() == 0) product.pop_back();
    suite.check("cosets: length polynomial factors", product == whole);

    bool unique_pairs = true;
    for (ElementId w = 0; w < W.order(); ++w) {
      const auto [tau, sigma] = factorize(rs, W, td, w);
      if (W.compose(tau, sigma) != w) unique_pairs = false;
      if (w > 64 && W.order() > 128) break;  // spot-check large groups
    }
    suite.check("cosets: factorization recomposes", unique_pairs);
  }
  {
    bool levi_stable = true;
    for (const ElementId sigma : reps) {
      const ElementId inv = W.inverse(sigma);
      for (const Root gamma : dominant_grading.levi) {
        if (!rs.is_positive(gamma)) continue;
        if (!rs.is_positive(W.act(inv, gamma))) levi_stable = false;
      }
    }
    suite.check("cosets: transversal inverses keep positive levi roots positive", levi_stable);
  }

  // Cell identities.
  {
    const KostantDecomposition cells = bruhat_cells(rs, W, td);
    bool dims = true, identity_cells = true, image = true;
    std::size_t top = 0, codim1 = 0;
    const std::set<Root> uplus(dominant_grading.u_plus.begin(), dominant_grading.u_plus.end());
    for (const auto& cell : cells.entries) {
      if (cell.cell_dim != dominant_grading.r - cell.n) dims = false;
      if (cell.cell_dim == dominant_grading.r) ++top;
      if (cell.cell_dim + 1 == dominant_grading.r) ++codim1;
      if ((cell.n == 0) != (cell.sigma == W.identity())) identity_cells = false;

      std::set<Root> mapped;
      for (const Root gamma : cell.delta_sigma) mapped.insert(W.act(cell.sigma, gamma));
      std::set<Root> expected = uplus;
      for (const Root beta : cell.phi) expected.erase(beta);
      if (mapped != expected) image = false;
    }
    std::size_t graded_simples = 0;
    for (int i = 0; i < rs.rank(); ++i)
      if (eval_root(rs, rs.simple_root(i), td) != 0) ++graded_simples;

    bool n1_matches = true;
    std::set<ElementId> graded_reflections;
    for (int i = 0; i < rs.rank(); ++i) {
      if (eval_root(rs, rs.simple_root(i), td) != 0)
        graded_reflections.insert(W.reflection(rs.simple_root(i)));
    }
    for (const auto& cell : cells.entries) {
      if ((cell.n == 1) != (graded_reflections.count(cell.sigma) > 0)) n1_matches = false;
    }

    suite.check("cells: dimensions are r - n", dims);
    suite.check("cells: exactly one top cell, at the identity", top == 1 && identity_cells);
    suite.check("cells: codimension-1 count equals graded simple roots", codim1 == graded_simples);
    suite.check("cells: length-1 entries are the graded simple reflections", n1_matches);
    suite.check("cells: transported cell roots fill u+ minus the inversions", image);

    const auto codim = complement_codimension(rs, W, td);
    suite.check("cells: complement codimension at least two", !codim || *codim >= 2,
                codim ? std::to_string(*codim) : "none");
  }

  // Coloring laws.
  {
    bool symmetric = true, additive = true, shift = true;
    for (std::size_t r = 0; r < nroots; ++r) {
      const Root root = rs.root_at(r);
      if (is_compact(rs, z, root) != is_compact(rs, z, rs.negate(root))) symmetric = false;
    }
    for (std::size_t a = 0; a < nroots && additive; ++a) {
      for (std::size_t b = 0; b < nroots; ++b) {
        const auto va = rs.coords(rs.root_at(a));
        const auto vb = rs.coords(rs.root_at(b));
        std::vector<long long> sum(va.size());
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = va[k] + vb[k];
        const auto found = rs.find(sum);
        if (!found) continue;
        const bool expected = is_compact(rs, z, rs.root_at(a)) == is_compact(rs, z, rs.root_at(b));
        if (is_compact(rs, z, *found) != expected) {
          additive = false;
          break;
        }
      }
    }
    InvolutionColoring shifted = z;
    for (std::size_t i = 0; i < shifted.z.size(); ++i) shifted.z[i] += 2 * static_cast<long long>(i + 1);
    for (std::size_t r = 0; r < nroots; ++r) {
      const Root root = rs.root_at(r);
      if (is_compact(rs, z, root) != is_compact(rs, shifted, root)) shift = false;
    }
    suite.check("coloring: compactness is negation symmetric", symmetric);
    suite.check("coloring: parity is additive on root sums", additive);
    suite.check("coloring: invariant under even shifts", shift);
  }

  // Criterion cross-checks.
  {
    const CriterionReport base = check_condition_S(rs, W, t, z);
    const CriterionReport integral = check_condition_S(rs, W, integralize(t), z);
    bool same = base.verdict == integral.verdict &&
                base.witnesses.size() == integral.witnesses.size();
    for (std::size_t i = 0; same && i < base.witnesses.size(); ++i) {
      same = base.witnesses[i].w == integral.witnesses[i].w;
    }
    suite.check("criterion: verdict invariant under integralization", same);

    InvolutionColoring shifted = z;
    for (auto& v : shifted.z) v += 2;
    const CriterionReport recolored = check_condition_S(rs, W, t, shifted);
    suite.check("criterion: verdict invariant under even coloring shifts",
                base.verdict == recolored.verdict &&
                    base.witnesses.size() == recolored.witnesses.size());
  }

  return suite.take();
}

}  // namespace ellweyl
