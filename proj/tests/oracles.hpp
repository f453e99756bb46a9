#pragma once

// Test-side oracles, independent of the library's data paths. Everything
// here works on raw coordinate vectors and set fixpoints so that the
// library's index tables, permutations and orderings are never trusted by
// the tests that check them.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "ellweyl/rational.hpp"

namespace oracle {

using Vec = std::vector<long long>;
using Cartan = std::vector<std::vector<long long>>;  // entry[i][j] = <a_i, a_j^vee>

// <v, alpha_i^vee> by linearity in the first slot.
inline long long pair_simple(const Cartan& cartan, const Vec& v, std::size_t i) {
  long long total = 0;
  for (std::size_t k = 0; k < v.size(); ++k) total += v[k] * cartan[k][i];
  return total;
}

inline Vec reflect(const Cartan& cartan, const Vec& v, std::size_t i) {
  Vec out = v;
  out[i] -= pair_simple(cartan, v, i);
  return out;
}

// Root set as the fixpoint of reflecting everything by everything, seeded
// with the simple roots. Reflection along an arbitrary root beta uses the
// symmetrizer d to form <v, beta^vee> exactly.
inline std::set<Vec> closure(const Cartan& cartan, const std::vector<long long>& d) {
  const std::size_t ell = cartan.size();
  auto inner = [&](const Vec& x, const Vec& y) {
    long long total = 0;
    for (std::size_t i = 0; i < ell; ++i)
      for (std::size_t j = 0; j < ell; ++j) total += x[i] * y[j] * cartan[i][j] * d[j];
    return total;
  };
  std::set<Vec> roots;
  for (std::size_t i = 0; i < ell; ++i) {
    Vec e(ell, 0);
    e[i] = 1;
    roots.insert(e);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Vec> snapshot(roots.begin(), roots.end());
    for (const Vec& v : snapshot) {
      for (const Vec& beta : snapshot) {
        const long long num = 2 * inner(v, beta);
        const long long den = inner(beta, beta);
        if (den == 0 || num % den != 0) continue;
        Vec image = v;
        for (std::size_t k = 0; k < ell; ++k) image[k] -= (num / den) * beta[k];
        if (roots.insert(image).second) grew = true;
      }
    }
  }
  return roots;
}

inline ellweyl::Rat eval(const Vec& v, const std::vector<ellweyl::Rat>& t) {
  ellweyl::Rat total(0);
  for (std::size_t i = 0; i < v.size(); ++i) total += ellweyl::Rat(v[i]) * t[i];
  return total;
}

// Brute-force box enumeration of { m >= 0 : sum n_j m_j = target } with
// every m_j bounded by target, as a set of vectors.
inline std::set<Vec> support_box(const std::vector<long long>& weights, long long target) {
  std::set<Vec> out;
  if (target < 0) return out;
  Vec current(weights.size(), 0);
  const auto total = [&]() {
    long long sum = 0;
    for (std::size_t j = 0; j < weights.size(); ++j) sum += weights[j] * current[j];
    return sum;
  };
  while (true) {
    if (total() == target) out.insert(current);
    std::size_t j = 0;
    while (j < current.size()) {
      if (current[j] < target) {
        ++current[j];
        break;
      }
      current[j] = 0;
      ++j;
    }
    if (j == current.size()) break;
  }
  return out;
}

inline long long binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace oracle
