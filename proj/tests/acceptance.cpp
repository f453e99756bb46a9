// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails. All comparisons are exact.
//
// Usage: ellweyl-acceptance --cli <path-to-ellweyl-binary>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ellweyl/report.hpp"
#include "oracles.hpp"

using namespace ellweyl;

namespace {

std::string g_cli_path;

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& message) {
    passed = false;
    if (detail.empty()) detail = message;
  }
  void require(bool condition, const std::string& message) {
    if (!condition) fail(message);
  }
};

// All component multisets with total rank <= 4, plus nothing else; G2 is
// rank 2 and thus included.
std::vector<RootSystemSpec> rank_grid() {
  const std::vector<std::vector<SimpleComponent>> by_rank = {
      {},
      {{Family::A, 1}},
      {{Family::A, 2}, {Family::B, 2}, {Family::C, 2}, {Family::G, 2}},
      {{Family::A, 3}, {Family::B, 3}, {Family::C, 3}},
      {{Family::A, 4}, {Family::B, 4}, {Family::C, 4}, {Family::D, 4}, {Family::F, 4}},
  };
  std::vector<RootSystemSpec> out;
  std::vector<SimpleComponent> current;
  // Components appended in nondecreasing rank with a tie-break on the
  // family letter, so each multiset appears once.
  std::function<void(int, int, std::size_t)> extend = [&](int remaining, int min_rank,
                                                          std::size_t min_index) {
    if (!current.empty()) out.push_back(RootSystemSpec{current});
    for (int rank = min_rank; rank <= remaining; ++rank) {
      const auto& choices = by_rank[static_cast<std::size_t>(rank)];
      for (std::size_t k = rank == min_rank ? min_index : 0; k < choices.size(); ++k) {
        current.push_back(choices[k]);
        extend(remaining - rank, rank, k);
        current.pop_back();
      }
    }
  };
  extend(4, 1, 0);
  return out;
}

std::vector<EllipticVector> dominant_grid(int rank) {
  std::vector<EllipticVector> out;
  std::vector<int> digits(static_cast<std::size_t>(rank), 0);
  while (true) {
    std::size_t j = 0;
    while (j < digits.size()) {
      if (digits[j] < 2) {
        ++digits[j];
        break;
      }
      digits[j] = 0;
      ++j;
    }
    if (j == digits.size()) break;
    EllipticVector t;
    for (const int d : digits) t.t.emplace_back(d);
    out.push_back(std::move(t));
  }
  return out;
}

struct Cached {
  explicit Cached(const RootSystemSpec& spec)
      : rs(RootSystem::build(spec)), W(WeylGroup::enumerate(rs)) {}
  RootSystem rs;
  WeylGroup W;
};

const std::vector<std::pair<RootSystemSpec, std::shared_ptr<Cached>>>& grid_instances() {
  static const auto instances = [] {
    std::vector<std::pair<RootSystemSpec, std::shared_ptr<Cached>>> out;
    for (const auto& spec : rank_grid()) out.push_back({spec, std::make_shared<Cached>(spec)});
    return out;
  }();
  return instances;
}

// ---- criterion bodies -----------------------------------------------------

Outcome su_pq_family() {
  Outcome outcome;
  int cases = 0;
  for (int p = 2; p <= 5; ++p) {
    for (int q = 1; p + q <= 6; ++q) {
      for (int h = 1; h < p; ++h) {
        ++cases;
        const Report report = run_report(preset_su_pq(p, q, h));
        const std::string tag =
            "su(" + std::to_string(p) + "," + std::to_string(q) + "), h=" + std::to_string(h);
        outcome.require(report.verdict == "HOLDS", tag + ": verdict " + report.verdict);
        bool standard_witness = false;
        for (const auto& witness : report.witnesses) {
          if (witness.word.empty()) standard_witness = true;
        }
        outcome.require(standard_witness, tag + ": standard system not a witness");
      }
    }
  }
  outcome.require(cases == 20, "unexpected family size " + std::to_string(cases));
  return outcome;
}

Outcome hermitian_family() {
  Outcome outcome;
  for (int p = 1; p <= 5; ++p) {
    for (int q = 1; p + q <= 6; ++q) {
      const Report report = run_report(preset_hermitian_su(p, q));
      const std::string tag = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
      outcome.require(report.verdict == "OBSTRUCTED", tag + ": verdict " + report.verdict);
      outcome.require(report.witnesses.empty(), tag + ": unexpected witness");
      outcome.require(report.failures.size() == report.chambers,
                      tag + ": chamber enumeration incomplete");
      outcome.require(!report.k_meets_u, tag + ": compact part meets u");
    }
  }
  return outcome;
}

Outcome g2_cases() {
  Outcome outcome;
  {
    const Report report = run_report(preset_g2_case_a());
    outcome.require(report.verdict == "HOLDS", "case a: verdict " + report.verdict);
    outcome.require(report.r == 5, "case a: r != 5");
    outcome.require(report.levi_size == 2, "case a: levi size != 2");
    bool witness = false;
    for (const auto& w : report.witnesses) {
      if (w.simple_roots == std::vector<std::vector<long long>>{{2, 1}, {-3, -2}}) witness = true;
    }
    outcome.require(witness, "case a: stated fundamental system is not a witness");
  }
  {
    const Report report = run_report(preset_g2_case_b());
    outcome.require(report.verdict == "HOLDS", "case b: verdict " + report.verdict);
    outcome.require(report.r == 5, "case b: r != 5");
    outcome.require(report.levi_size == 2, "case b: levi size != 2");
    bool witness = false;
    for (const auto& w : report.witnesses) {
      if (w.simple_roots == std::vector<std::vector<long long>>{{1, 0}, {-3, -1}}) witness = true;
    }
    outcome.require(witness, "case b: stated fundamental system is not a witness");
  }
  return outcome;
}

Outcome factorization_suite() {
  Outcome outcome;
  for (const auto& [spec, cached] : grid_instances()) {
    const auto& rs = cached->rs;
    const auto& W = cached->W;
    const std::string name = spec.to_string();

    std::vector<ElementId> everyone(W.order());
    for (ElementId id = 0; id < W.order(); ++id) everyone[id] = id;
    const auto whole = length_polynomial(W, everyone);

    // t-independent: inversion sets of w and w*longest split the positives
    const ElementId kappa = W.longest();
    for (ElementId id = 0; id < W.order(); ++id) {
      const auto phi = W.inversion_set(id);
      const auto rest = W.inversion_set(W.compose(id, kappa));
      std::set<Root> all(phi.begin(), phi.end());
      for (const Root r : rest) {
        if (!all.insert(r).second) outcome.fail(name + ": inversion sets overlap");
      }
      if (all.size() != rs.positive_count()) outcome.fail(name + ": inversion sets missing roots");
      if (!outcome.passed) return outcome;
    }

    for (const auto& t : dominant_grid(rs.rank())) {
      const auto stabilizer = levi_weyl(rs, W, t);
      const auto reps = minimal_reps(rs, W, t);
      const std::string tag = name + " t=" + format_rational_vector(t.t);
      if (stabilizer.size() * reps.size() != W.order()) {
        outcome.fail(tag + ": |W| != |W1| * |W^1|");
        return outcome;
      }
      const auto left = length_polynomial(W, stabilizer);
      const auto right = length_polynomial(W, reps);
      std::vector<std::size_t> product(left.size() + right.size() - 1, 0);
      for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j) product[i + j] += left[i] * right[j];
      while (!product.empty() && product.back() == 0) product.pop_back();
      if (product != whole) {
        outcome.fail(tag + ": length polynomial does not factor");
        return outcome;
      }

      // 4.i / 4.ii
      std::set<ElementId> graded_reflections;
      for (int i = 0; i < rs.rank(); ++i) {
        if (eval_root(rs, rs.simple_root(i), t) != 0)
          graded_reflections.insert(W.reflection(rs.simple_root(i)));
      }
      for (const ElementId sigma : reps) {
        const int n = W[sigma].length;
        if ((n == 0) != (sigma == W.identity())) outcome.fail(tag + ": n=0 is not the identity");
        if ((n == 1) != (graded_reflections.count(sigma) > 0))
          outcome.fail(tag + ": n=1 elements are not the graded simple reflections");
      }
      if (!outcome.passed) return outcome;
    }
  }
  return outcome;
}

Outcome cell_suite() {
  Outcome outcome;
  for (const auto& [spec, cached] : grid_instances()) {
    const auto& rs = cached->rs;
    const auto& W = cached->W;
    for (const auto& t : dominant_grid(rs.rank())) {
      const std::string tag = spec.to_string() + " t=" + format_rational_vector(t.t);
      const auto g = grading_sets(rs, t);
      const auto cells = bruhat_cells(rs, W, t);
      std::size_t top = 0, codim1 = 0;
      const std::set<Root> uplus(g.u_plus.begin(), g.u_plus.end());
      for (const auto& cell : cells.entries) {
        if (cell.cell_dim != g.r - cell.n) outcome.fail(tag + ": cell dim != r - n");
        if (cell.cell_dim == g.r) ++top;
        if (cell.cell_dim + 1 == g.r) ++codim1;
        std::set<Root> mapped;
        for (const Root gamma : cell.delta_sigma) mapped.insert(W.act(cell.sigma, gamma));
        std::set<Root> expected = uplus;
        for (const Root beta : cell.phi) expected.erase(beta);
        if (mapped != expected) outcome.fail(tag + ": transported cell roots mismatch");
      }
      if (top != 1) outcome.fail(tag + ": top cell count " + std::to_string(top));
      std::size_t graded = 0;
      for (int i = 0; i < rs.rank(); ++i) {
        if (eval_root(rs, rs.simple_root(i), t) != 0) ++graded;
      }
      if (codim1 != graded) outcome.fail(tag + ": codim-1 cell count mismatch");
      if (!outcome.passed) return outcome;
    }
  }
  return outcome;
}

Outcome codimension_suite() {
  Outcome outcome;
  for (const auto& [spec, cached] : grid_instances()) {
    for (const auto& t : dominant_grid(cached->rs.rank())) {
      const auto codim = complement_codimension(cached->rs, cached->W, t);
      if (codim && *codim < 2) {
        outcome.fail(spec.to_string() + " t=" + format_rational_vector(t.t) +
                     ": complement codimension " + std::to_string(*codim));
        return outcome;
      }
    }
  }
  return outcome;
}

Outcome integralize_suite() {
  Outcome outcome;
  std::mt19937 rng(2026);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 12);
  std::uniform_int_distribution<int> bit(0, 1);
  const auto& instances = grid_instances();
  std::uniform_int_distribution<std::size_t> pick(0, instances.size() - 1);
  int done = 0;
  while (done < 100) {
    const auto& [spec, cached] = instances[pick(rng)];
    const auto& rs = cached->rs;
    const auto& W = cached->W;
    EllipticVector t;
    InvolutionColoring z;
    for (int i = 0; i < rs.rank(); ++i) {
      t.t.emplace_back(num(rng), den(rng));
      z.z.push_back(bit(rng));
    }
    if (t.is_zero()) continue;
    ++done;
    const EllipticVector scaled = integralize(t);
    const std::string tag = spec.to_string() + " t=" + format_rational_vector(t.t);
    for (const Rat& x : scaled.t) {
      if (!is_integer(x)) outcome.fail(tag + ": integralize left a fraction");
    }
    for (std::size_t r = 0; r < rs.root_count(); ++r) {
      const Rat before = eval_root(rs, rs.root_at(r), t);
      const Rat after = eval_root(rs, rs.root_at(r), scaled);
      const int sign_before = before > 0 ? 1 : before < 0 ? -1 : 0;
      const int sign_after = after > 0 ? 1 : after < 0 ? -1 : 0;
      if (sign_before != sign_after) outcome.fail(tag + ": sign changed on a root");
    }
    const CriterionReport base = check_condition_S(rs, W, t, z);
    const CriterionReport scaled_report = check_condition_S(rs, W, scaled, z);
    if (base.verdict != scaled_report.verdict) outcome.fail(tag + ": verdict changed");
    if (base.witnesses.size() != scaled_report.witnesses.size()) {
      outcome.fail(tag + ": witness count changed");
    } else {
      for (std::size_t k = 0; k < base.witnesses.size(); ++k) {
        if (base.witnesses[k].w != scaled_report.witnesses[k].w)
          outcome.fail(tag + ": witness set changed");
      }
    }
    if (!outcome.passed) return outcome;
  }
  return outcome;
}

Outcome taylor_suite() {
  Outcome outcome;
  std::mt19937 rng(404);
  std::uniform_int_distribution<int> rdist(1, 6);
  std::uniform_int_distribution<int> wdist(1, 6);
  std::uniform_int_distribution<int> ndist(0, 30);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = rdist(rng);
    std::vector<long long> weights;
    for (int j = 0; j < r; ++j) weights.push_back(wdist(rng));
    long long target = ndist(rng);
    // keep the oracle box below ~3e7 points; the full target range is still
    // exercised for every r <= 5
    while (std::pow(static_cast<double>(target + 1), r) > 3e7) target /= 2;

    const auto computed = taylor_support(weights, Rat(target));
    const auto expected = oracle::support_box(weights, target);
    std::ostringstream tag;
    tag << "r=" << r << " target=" << target;
    if (std::set<oracle::Vec>(computed.begin(), computed.end()) != expected) {
      outcome.fail(tag.str() + ": support mismatch");
      return outcome;
    }
    if (static_cast<long long>(computed.size()) > oracle::binomial(target + r - 1, r - 1)) {
      outcome.fail(tag.str() + ": cardinality bound violated");
    }
    if (!taylor_support(weights, Rat(2 * target + 1, 2)).empty()) {
      outcome.fail(tag.str() + ": non-integer target not empty");
    }
    if (!outcome.passed) return outcome;
  }
  return outcome;
}

std::string capture_cli(const std::string& args, int& status) {
  const std::string command = g_cli_path + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return {};
  }
  std::string output;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  status = WEXITSTATUS(pclose(pipe));
  return output;
}

Outcome determinism_suite() {
  Outcome outcome;
  if (g_cli_path.empty()) {
    outcome.fail("no --cli path given");
    return outcome;
  }
  const std::vector<std::string> runs = {
      "--preset su_pq --p 3 --q 2 --h 1 --format machine",
      "--preset hermitian_su --p 2 --q 1 --format machine",
      "--preset g2_case_a --format machine",
      "--preset g2_case_b --format machine",
  };
  for (const auto& args : runs) {
    int status1 = 0, status2 = 0;
    const std::string first = capture_cli(args, status1);
    const std::string second = capture_cli(args, status2);
    if (status1 != 0 || status2 != 0) {
      outcome.fail(args + ": exit status " + std::to_string(status1) + "/" +
                   std::to_string(status2));
      return outcome;
    }
    if (first.empty() || first != second) {
      outcome.fail(args + ": outputs differ between runs");
      return outcome;
    }
    parse_machine_report(first);  // well-formed machine document
  }
  return outcome;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
  }

  struct Criterion {
    std::string description;
    std::function<Outcome()> run;
    double budget_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"1. su(p,q) family holds with the standard witness (p+q <= 6)", su_pq_family, 5.0},
      {"2. hermitian su(p,q) family is obstructed with zero witnesses", hermitian_family, 60.0},
      {"3. split G2 cases hold with the stated fundamental systems", g2_cases, 60.0},
      {"4. factorization suite on the rank <= 4 grid", factorization_suite, 60.0},
      {"5. cell identity suite on the rank <= 4 grid", cell_suite, 60.0},
      {"6. complement codimension at least 2 on the rank <= 4 grid", codimension_suite, 60.0},
      {"7. integralization preserves signs, verdicts and witnesses (100 random t)",
       integralize_suite, 60.0},
      {"8. monomial support matches the box oracle (100 random draws)", taylor_suite, 60.0},
      {"9. repeated CLI runs give byte-identical machine output", determinism_suite, 60.0},
  };

  bool all_passed = true;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criterion.budget_seconds) {
      outcome.fail("over budget: " + std::to_string(seconds) + " s");
    }
    std::printf("%s  %s  (%.2f s)%s%s\n", outcome.passed ? "PASS" : "FAIL",
                criterion.description.c_str(), seconds,
                outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
    all_passed = all_passed && outcome.passed;
  }
  return all_passed ? 0 : 1;
}
