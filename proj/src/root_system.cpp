#include "ellweyl/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ellweyl {

namespace {

struct BlockData {
  std::vector<long long> cartan;  // n x n
  std::vector<long long> d;
};

void require_rank(Family f, int n, int lo, const std::string& where) {
  if (n < lo) {
    throw ConstructionError(where + ": " + std::string(1, static_cast<char>(f)) +
                            std::to_string(n) + " requires rank >= " + std::to_string(lo));
  }
}

BlockData block_for(const SimpleComponent& c, const std::string& where) {
  const int n = c.rank;
  BlockData b;
  b.cartan.assign(static_cast<std::size_t>(n) * n, 0);
  b.d.assign(static_cast<std::size_t>(n), 1);
  auto at = [&](int i, int j) -> long long& {
    return b.cartan[static_cast<std::size_t>(i) * n + j];
  };
  for (int i = 0; i < n; ++i) at(i, i) = 2;
  auto chain_edge = [&](int i, int j) { at(i, j) = at(j, i) = -1; };

  switch (c.family) {
    case Family::A:
      require_rank(c.family, n, 1, where);
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      break;
    case Family::B:
      require_rank(c.family, n, 2, where);
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      at(n - 2, n - 1) = -2;  // last simple root short
      for (int i = 0; i + 1 < n; ++i) b.d[static_cast<std::size_t>(i)] = 2;
      break;
    case Family::C:
      require_rank(c.family, n, 2, where);
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1);
      at(n - 1, n - 2) = -2;  // last simple root long
      b.d[static_cast<std::size_t>(n - 1)] = 2;
      break;
    case Family::D:
      require_rank(c.family, n, 4, where);
      for (int i = 0; i + 2 < n; ++i) chain_edge(i, i + 1);
      chain_edge(n - 3, n - 1);
      break;
    case Family::E: {
      if (n < 6 || n > 8) {
        throw ConstructionError(where + ": E" + std::to_string(n) + " is not a valid type");
      }
      // chain over nodes 1,3,4,...,n with node 2 attached to node 4
      chain_edge(0, 2);
      for (int i = 2; i + 1 < n; ++i) chain_edge(i, i + 1);
      chain_edge(1, 3);
      break;
    }
    case Family::F:
      if (n != 4) throw ConstructionError(where + ": F" + std::to_string(n) + " is not a valid type");
      chain_edge(0, 1);
      chain_edge(1, 2);
      chain_edge(2, 3);
      at(1, 2) = -2;  // a_3, a_4 short
      b.d[0] = b.d[1] = 2;
      break;
    case Family::G:
      if (n != 2) throw ConstructionError(where + ": G" + std::to_string(n) + " is not a valid type");
      at(0, 1) = -1;
      at(1, 0) = -3;
      b.d[1] = 3;
      break;
  }
  return b;
}

bool lex_less(const std::vector<long long>& a, const std::vector<long long>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

RootSystemSpec RootSystemSpec::parse(std::string_view text) {
  RootSystemSpec spec;
  std::size_t pos = 0;
  int component = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == 'x' || text[pos] == 'X' ||
                                 text[pos] == '*' || text[pos] == ','))
      ++pos;
    if (pos >= text.size()) break;
    ++component;
    const std::string where = "root system component " + std::to_string(component);
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (letter < 'A' || letter > 'G') {
      throw ConstructionError(where + ": unknown family '" + std::string(1, text[pos]) + "'");
    }
    ++pos;
    int rank = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, rank);
    if (ec != std::errc{} || ptr == first) {
      throw ConstructionError(where + ": missing rank after '" + std::string(1, letter) + "'");
    }
    pos += static_cast<std::size_t>(ptr - first);
    spec.components.push_back({static_cast<Family>(letter), rank});
  }
  if (spec.components.empty()) {
    throw ConstructionError("root system: empty type string");
  }
  return spec;
}

std::string RootSystemSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += "x";
    out += static_cast<char>(components[i].family);
    out += std::to_string(components[i].rank);
  }
  return out;
}

int RootSystemSpec::total_rank() const {
  int total = 0;
  for (const auto& c : components) total += c.rank;
  return total;
}

RootSystem RootSystem::build(const RootSystemSpec& spec) {
  RootSystem rs;
  rs.spec_ = spec;
  if (spec.components.empty()) throw ConstructionError("root system: no components");
  rs.rank_ = spec.total_rank();
  rs.component_count_ = static_cast<int>(spec.components.size());
  const int ell = rs.rank_;
  rs.cartan_.assign(static_cast<std::size_t>(ell) * ell, 0);
  rs.symmetrizer_.assign(static_cast<std::size_t>(ell), 1);

  int offset = 0;
  std::vector<int> component_of_simple(static_cast<std::size_t>(ell));
  for (std::size_t ci = 0; ci < spec.components.size(); ++ci) {
    const auto& c = spec.components[ci];
    const std::string where = "root system component " + std::to_string(ci + 1);
    if (c.rank <= 0) throw ConstructionError(where + ": rank must be positive");
    const BlockData block = block_for(c, where);
    for (int i = 0; i < c.rank; ++i) {
      rs.symmetrizer_[static_cast<std::size_t>(offset + i)] = block.d[static_cast<std::size_t>(i)];
      component_of_simple[static_cast<std::size_t>(offset + i)] = static_cast<int>(ci);
      for (int j = 0; j < c.rank; ++j) {
        rs.cartan_[rs.idx(offset + i, offset + j)] =
            block.cartan[static_cast<std::size_t>(i) * c.rank + j];
      }
    }
    offset += c.rank;
  }

  rs.gram_.assign(static_cast<std::size_t>(ell) * ell, 0);
  for (int i = 0; i < ell; ++i) {
    for (int j = 0; j < ell; ++j) {
      rs.gram_[rs.idx(i, j)] = rs.cartan_[rs.idx(i, j)] * rs.symmetrizer_[static_cast<std::size_t>(j)];
    }
  }

  // Close the simple roots under simple reflections.
  std::set<std::vector<long long>> seen;
  std::vector<std::vector<long long>> queue;
  for (int i = 0; i < ell; ++i) {
    std::vector<long long> e(static_cast<std::size_t>(ell), 0);
    e[static_cast<std::size_t>(i)] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::vector<long long> v = queue[head];
    for (int i = 0; i < ell; ++i) {
      long long pair_i = 0;
      for (int k = 0; k < ell; ++k) pair_i += v[static_cast<std::size_t>(k)] * rs.cartan_[rs.idx(k, i)];
      std::vector<long long> w = v;
      w[static_cast<std::size_t>(i)] -= pair_i;
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }

  std::vector<std::vector<long long>> positives;
  for (const auto& v : seen) {
    const auto first_nonzero = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
    if (first_nonzero != v.end() && *first_nonzero > 0) positives.push_back(v);
  }
  std::sort(positives.begin(), positives.end(), [](const auto& a, const auto& b) {
    const long long ha = std::accumulate(a.begin(), a.end(), 0LL);
    const long long hb = std::accumulate(b.begin(), b.end(), 0LL);
    if (ha != hb) return ha < hb;
    return lex_less(a, b);
  });
  if (positives.size() * 2 != seen.size()) {
    throw InternalError("root closure produced an asymmetric positive/negative split");
  }

  rs.positive_count_ = positives.size();
  rs.coords_.reserve(seen.size());
  for (const auto& v : positives) rs.coords_.push_back(v);
  for (const auto& v : positives) {
    std::vector<long long> neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](long long x) { return -x; });
    rs.coords_.push_back(std::move(neg));
  }

  rs.index_.reserve(rs.coords_.size());
  for (std::uint32_t i = 0; i < rs.coords_.size(); ++i) rs.index_.push_back({rs.coords_[i], i});
  std::sort(rs.index_.begin(), rs.index_.end());

  rs.component_of_.resize(rs.coords_.size());
  rs.simple_.resize(static_cast<std::size_t>(ell));
  for (std::uint32_t i = 0; i < rs.coords_.size(); ++i) {
    const auto& v = rs.coords_[i];
    int comp = -1;
    for (int k = 0; k < ell; ++k) {
      if (v[static_cast<std::size_t>(k)] != 0) {
        const int ck = component_of_simple[static_cast<std::size_t>(k)];
        if (comp != -1 && comp != ck) throw InternalError("root supported on two components");
        comp = ck;
      }
    }
    rs.component_of_[i] = comp;
  }
  for (int i = 0; i < ell; ++i) {
    std::vector<long long> e(static_cast<std::size_t>(ell), 0);
    e[static_cast<std::size_t>(i)] = 1;
    const auto found = rs.find(e);
    if (!found) throw InternalError("simple root missing from enumeration");
    rs.simple_[static_cast<std::size_t>(i)] = *found;
  }
  return rs;
}

std::span<const long long> RootSystem::coords(Root a) const {
  if (a.index >= coords_.size()) throw InternalError("root index out of range");
  return coords_[a.index];
}

Root RootSystem::root_at(std::size_t index) const {
  if (index >= coords_.size()) throw InternalError("root index out of range");
  return Root{static_cast<std::uint32_t>(index)};
}

std::optional<Root> RootSystem::find(std::span<const long long> coordinates) const {
  const std::vector<long long> key(coordinates.begin(), coordinates.end());
  auto it = std::lower_bound(index_.begin(), index_.end(), key,
                             [](const auto& entry, const std::vector<long long>& k) {
                               return entry.first < k;
                             });
  if (it == index_.end() || it->first != key) return std::nullopt;
  return Root{it->second};
}

Root RootSystem::negate(Root a) const {
  if (a.index >= coords_.size()) throw InternalError("root index out of range");
  const auto p = static_cast<std::uint32_t>(positive_count_);
  return Root{a.index < p ? a.index + p : a.index - p};
}

int RootSystem::height(Root a) const {
  const auto v = coords(a);
  return static_cast<int>(std::accumulate(v.begin(), v.end(), 0LL));
}

long long RootSystem::inner(std::span<const long long> x, std::span<const long long> y) const {
  long long total = 0;
  for (int i = 0; i < rank_; ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      total += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)] * gram_[idx(i, j)];
    }
  }
  return total;
}

long long RootSystem::pairing(Root a, Root b) const {
  const auto va = coords(a);
  const auto vb = coords(b);
  const long long num = 2 * inner(va, vb);
  const long long den = inner(vb, vb);
  if (den == 0 || num % den != 0) throw InternalError("Cartan pairing is not integral");
  return num / den;
}

Root RootSystem::reflect(Root a, int i) const {
  if (i < 0 || i >= rank_) throw InternalError("simple index out of range");
  const auto v = coords(a);
  long long pair_i = 0;
  for (int k = 0; k < rank_; ++k) pair_i += v[static_cast<std::size_t>(k)] * cartan_[idx(k, i)];
  std::vector<long long> w(v.begin(), v.end());
  w[static_cast<std::size_t>(i)] -= pair_i;
  const auto found = find(w);
  if (!found) throw InternalError("simple reflection left the root system");
  return *found;
}

Root RootSystem::reflect_along(Root a, Root b) const {
  const long long p = pairing(a, b);
  const auto va = coords(a);
  const auto vb = coords(b);
  std::vector<long long> w(va.begin(), va.end());
  for (int k = 0; k < rank_; ++k) w[static_cast<std::size_t>(k)] -= p * vb[static_cast<std::size_t>(k)];
  const auto found = find(w);
  if (!found) throw InternalError("root reflection left the root system");
  return *found;
}

}  // namespace ellweyl
