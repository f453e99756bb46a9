#include "ellweyl/realform.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ellweyl {

bool is_compact(const RootSystem& rs, const InvolutionColoring& z, Root alpha) {
  if (static_cast<int>(z.z.size()) != rs.rank()) {
    throw PreconditionError("coloring rank does not match the root system rank");
  }
  const auto v = rs.coords(alpha);
  long long sum = 0;
  for (int i = 0; i < rs.rank(); ++i) sum += v[static_cast<std::size_t>(i)] * z.z[static_cast<std::size_t>(i)];
  return sum % 2 == 0;
}

std::vector<Root> compact_subsystem(const RootSystem& rs, const InvolutionColoring& z) {
  std::vector<Root> out;
  for (std::size_t r = 0; r < rs.root_count(); ++r) {
    const Root root{static_cast<std::uint32_t>(r)};
    if (is_compact(rs, z, root)) out.push_back(root);
  }
  return out;
}

bool k_cap_u_obstruction(const RootSystem& rs, const EllipticVector& t,
                         const InvolutionColoring& z) {
  require_nonzero(t);
  for (std::size_t r = 0; r < rs.root_count(); ++r) {
    const Root root{static_cast<std::uint32_t>(r)};
    if (eval_root(rs, root, t) != 0 && is_compact(rs, z, root)) return true;
  }
  return false;
}

namespace {

struct DynkinNode {
  Root root;
  long long norm;  // (root, root)
};

std::string classify_component(const RootSystem& rs, const std::vector<DynkinNode>& nodes) {
  const std::size_t n = nodes.size();
  auto pair_product = [&](std::size_t i, std::size_t j) {
    return rs.pairing(nodes[i].root, nodes[j].root) * rs.pairing(nodes[j].root, nodes[i].root);
  };
  std::vector<std::vector<std::size_t>> adj(n);
  int triple = 0, dbl = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long long p = pair_product(i, j);
      if (p == 0) continue;
      adj[i].push_back(j);
      adj[j].push_back(i);
      if (p == 3) ++triple;
      if (p == 2) ++dbl;
      if (p > 3) return "?";
    }
  }
  std::size_t degree3 = 0, max_degree = 0;
  for (const auto& a : adj) {
    max_degree = std::max(max_degree, a.size());
    if (a.size() >= 3) ++degree3;
  }
  if (max_degree > 3 || degree3 > 1) return "?";
  if (triple) return (n == 2 && !dbl) ? "G2" : "?";

  if (dbl > 1) return "?";
  if (dbl == 1) {
    if (degree3) return "?";
    if (n == 2) return "B2";
    // A chain: short end means B, long end means C, double edge inside means F4.
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (const std::size_t j : adj[i]) {
        if (pair_product(i, j) == 2) { lo = std::min(i, j); hi = std::max(i, j); }
      }
    }
    const bool edge_at_end = adj[lo].size() == 1 || adj[hi].size() == 1;
    if (!edge_at_end) return n == 4 ? "F4" : "?";
    const std::size_t end = adj[lo].size() == 1 ? lo : hi;
    const std::size_t inner = end == lo ? hi : lo;
    return (nodes[end].norm < nodes[inner].norm ? "B" : "C") + std::to_string(n);
  }

  // Simply laced: path or one branch node.
  if (degree3 == 0) return "A" + std::to_string(n);
  std::size_t branch = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (adj[i].size() == 3) branch = i;
  std::vector<std::size_t> arms;
  for (const std::size_t start : adj[branch]) {
    std::size_t len = 1, prev = branch, cur = start;
    while (adj[cur].size() == 2) {
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    if (adj[cur].size() != 1) return "?";
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return "E" + std::to_string(n);
  return "?";
}

}  // namespace

std::string describe_subsystem(const RootSystem& rs, const std::vector<Root>& roots) {
  if (roots.empty()) return "0";
  const std::set<Root> members(roots.begin(), roots.end());

  // Positive members that are not sums of two positive members form the
  // simple system of the (closed, symmetric) subset.
  std::vector<Root> positives;
  for (const Root r : roots)
    if (rs.is_positive(r)) positives.push_back(r);
  std::set<Root> sums;
  for (const Root a : positives) {
    for (const Root b : positives) {
      const auto va = rs.coords(a);
      const auto vb = rs.coords(b);
      std::vector<long long> sum(va.size());
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = va[k] + vb[k];
      const auto found = rs.find(sum);
      if (found && members.count(*found)) sums.insert(*found);
    }
  }
  std::vector<DynkinNode> simple;
  for (const Root r : positives) {
    if (!sums.count(r)) simple.push_back({r, rs.inner(rs.coords(r), rs.coords(r))});
  }
  if (simple.empty() || 2 * positives.size() != roots.size()) return "?";
  for (std::size_t i = 0; i < simple.size(); ++i) {
    for (std::size_t j = i + 1; j < simple.size(); ++j) {
      if (rs.pairing(simple[i].root, simple[j].root) > 0) return "?";
    }
  }

  // Split into connected components of the pairing graph.
  std::vector<int> comp(simple.size(), -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < simple.size(); ++i) {
    if (comp[i] != -1) continue;
    std::vector<std::size_t> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < simple.size(); ++j) {
        if (comp[j] == -1 && rs.pairing(simple[cur].root, simple[j].root) != 0) {
          comp[j] = ncomp;
          stack.push_back(j);
        }
      }
    }
    ++ncomp;
  }
  std::multiset<std::string> names;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<DynkinNode> nodes;
    for (std::size_t i = 0; i < simple.size(); ++i)
      if (comp[i] == c) nodes.push_back(simple[i]);
    names.insert(classify_component(rs, nodes));
  }
  std::string out;
  for (const auto& name : names) {
    if (!out.empty()) out += " x ";
    out += name;
  }
  return out;
}

}  // namespace ellweyl
