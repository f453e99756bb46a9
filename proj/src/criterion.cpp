#include "ellweyl/criterion.hpp"

#include <algorithm>

namespace ellweyl {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::Fails: return "FAILS";
    case Verdict::Obstructed: return "OBSTRUCTED";
  }
  throw InternalError("unknown verdict");
}

Verdict verdict_from_string(const std::string& name) {
  if (name == "HOLDS") return Verdict::Holds;
  if (name == "FAILS") return Verdict::Fails;
  if (name == "OBSTRUCTED") return Verdict::Obstructed;
  throw ConstructionError("verdict: unknown value '" + name + "'");
}

std::vector<ChamberCandidate> s1_chambers(const RootSystem& rs, const WeylGroup& W,
                                          const EllipticVector& t) {
  require_nonzero(t);
  std::vector<ChamberCandidate> out;
  for (ElementId w = 0; w < W.order(); ++w) {
    EllipticVector moved = W.act_on_coweight(W.inverse(w), t);
    if (!moved.is_dominant()) continue;
    ChamberCandidate candidate;
    candidate.w = w;
    candidate.t_in_chamber = std::move(moved);
    for (int i = 0; i < rs.rank(); ++i) candidate.simple_roots.push_back(W.act(w, rs.simple_root(i)));
    out.push_back(std::move(candidate));
  }
  std::sort(out.begin(), out.end(), [&](const ChamberCandidate& a, const ChamberCandidate& b) {
    return std::lexicographical_compare(W[a.w].word.begin(), W[a.w].word.end(),
                                        W[b.w].word.begin(), W[b.w].word.end());
  });
  return out;
}

std::vector<Root> check_s2(const RootSystem& rs, const ChamberCandidate& candidate,
                           const EllipticVector& t, const InvolutionColoring& z) {
  std::vector<Root> violators;
  for (const Root beta : candidate.simple_roots) {
    if (eval_root(rs, beta, t) != 0 && !is_compact(rs, z, beta)) violators.push_back(beta);
  }
  return violators;
}

CriterionReport check_condition_S(const RootSystem& rs, const WeylGroup& W,
                                  const EllipticVector& t, const InvolutionColoring& z) {
  CriterionReport report;
  for (ChamberCandidate& candidate : s1_chambers(rs, W, t)) {
    std::vector<Root> violators = check_s2(rs, candidate, t, z);
    if (violators.empty()) {
      report.witnesses.push_back(std::move(candidate));
    } else {
      report.failures.push_back({std::move(candidate), std::move(violators)});
    }
  }
  report.k_meets_u = k_cap_u_obstruction(rs, t, z);
  if (!report.witnesses.empty()) {
    report.verdict = Verdict::Holds;
    report.kostant = bruhat_cells(rs, W, report.witnesses.front().t_in_chamber);
  } else {
    report.verdict = report.k_meets_u ? Verdict::Fails : Verdict::Obstructed;
  }
  return report;
}

namespace {

void enumerate_support(const std::vector<long long>& weights, std::size_t j, long long remaining,
                       std::vector<long long>& current,
                       std::vector<std::vector<long long>>& out) {
  if (j + 1 == weights.size()) {
    if (remaining % weights[j] == 0) {
      current[j] = remaining / weights[j];
      out.push_back(current);
    }
    return;
  }
  for (long long m = 0; m * weights[j] <= remaining; ++m) {
    current[j] = m;
    enumerate_support(weights, j + 1, remaining - m * weights[j], current, out);
  }
}

}  // namespace

std::vector<std::vector<long long>> taylor_support(const std::vector<long long>& weights,
                                                   const Rat& target) {
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] < 1) {
      throw PreconditionError("weight " + std::to_string(j + 1) + " must be a positive integer");
    }
  }
  std::vector<std::vector<long long>> out;
  if (weights.empty() || !is_integer(target) || target < 0) return out;
  std::vector<long long> current(weights.size(), 0);
  enumerate_support(weights, 0, target.numerator(), current, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ellweyl
