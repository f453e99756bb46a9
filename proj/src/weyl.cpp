#include "ellweyl/weyl.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ellweyl {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f = saturating_mul(f, static_cast<std::uint64_t>(i));
  return f;
}

std::uint64_t component_order(const SimpleComponent& c) {
  const int n = c.rank;
  switch (c.family) {
    case Family::A:
      return factorial(n + 1);
    case Family::B:
    case Family::C:
      return saturating_mul(std::uint64_t{1} << n, factorial(n));
    case Family::D:
      return saturating_mul(std::uint64_t{1} << (n - 1), factorial(n));
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
    case Family::F:
      return 1152;
    case Family::G:
      return 12;
  }
  return 0;
}

RootPermutation compose_perm(const RootPermutation& a, const RootPermutation& b) {
  RootPermutation out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) out[r] = a[b[r]];
  return out;
}

RootPermutation invert_perm(const RootPermutation& a) {
  RootPermutation out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) out[a[r]] = static_cast<std::uint16_t>(r);
  return out;
}

}  // namespace

std::size_t WeylGroup::PermHash::operator()(const RootPermutation& p) const {
  // FNV-1a over the index words
  std::uint64_t h = 1469598103934665603ull;
  for (const std::uint16_t x : p) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t WeylGroup::theoretical_order(const RootSystemSpec& spec) {
  std::uint64_t order = 1;
  for (const auto& c : spec.components) order = saturating_mul(order, component_order(c));
  return order;
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::uint64_t cap) {
  const std::uint64_t expected = theoretical_order(rs.spec());
  if (expected > cap) {
    throw ResourceError("Weyl group of " + rs.spec().to_string() + " has order " +
                        std::to_string(expected) + ", above the enumeration cap " +
                        std::to_string(cap));
  }

  WeylGroup group;
  group.rs_ = &rs;
  const int ell = rs.rank();
  const std::size_t nroots = rs.root_count();
  if (nroots > std::numeric_limits<std::uint16_t>::max()) {
    throw ResourceError("root index does not fit in the permutation representation");
  }

  std::vector<RootPermutation> gens(static_cast<std::size_t>(ell));
  for (int i = 0; i < ell; ++i) {
    RootPermutation p(nroots);
    for (std::size_t r = 0; r < nroots; ++r) {
      p[r] = static_cast<std::uint16_t>(rs.reflect(rs.root_at(r), i).index);
    }
    gens[static_cast<std::size_t>(i)] = std::move(p);
  }

  RootPermutation id_perm(nroots);
  for (std::size_t r = 0; r < nroots; ++r) id_perm[r] = static_cast<std::uint16_t>(r);
  group.elements_.push_back({id_perm, {}, 0});
  group.index_.emplace(std::move(id_perm), 0);

  std::vector<ElementId> frontier{0};
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    for (const ElementId id : frontier) {
      for (int i = 0; i < ell; ++i) {
        RootPermutation p = compose_perm(group.elements_[id].perm, gens[static_cast<std::size_t>(i)]);
        const auto [it, inserted] =
            group.index_.emplace(std::move(p), static_cast<ElementId>(group.elements_.size()));
        if (!inserted) continue;
        WeylElement element;
        element.perm = it->first;
        element.word = group.elements_[id].word;
        element.word.push_back(i);
        element.length = group.elements_[id].length + 1;
        group.elements_.push_back(std::move(element));
        next.push_back(it->second);
      }
    }
    frontier = std::move(next);
  }

  if (group.elements_.size() != expected) {
    throw InternalError("Weyl enumeration found " + std::to_string(group.elements_.size()) +
                        " elements, expected " + std::to_string(expected));
  }
  // The final BFS layer of a finite Coxeter group holds the unique longest
  // element, so it is the last element generated.
  group.longest_ = static_cast<ElementId>(group.elements_.size() - 1);
  if (static_cast<std::size_t>(group.elements_[group.longest_].length) != rs.positive_count()) {
    throw InternalError("longest element length does not match the positive root count");
  }
  return group;
}

ElementId WeylGroup::simple_reflection(int i) const {
  if (i < 0 || i >= rs_->rank()) throw InternalError("simple index out of range");
  // The first BFS layer lists the generators in order.
  return static_cast<ElementId>(1 + i);
}

ElementId WeylGroup::compose(ElementId a, ElementId b) const {
  const auto id = find(compose_perm(elements_[a].perm, elements_[b].perm));
  if (!id) throw InternalError("composition escaped the group table");
  return *id;
}

ElementId WeylGroup::inverse(ElementId a) const {
  const auto id = find(invert_perm(elements_[a].perm));
  if (!id) throw InternalError("inverse escaped the group table");
  return *id;
}

std::optional<ElementId> WeylGroup::find(const RootPermutation& perm) const {
  const auto it = index_.find(perm);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId WeylGroup::reflection(Root beta) const {
  RootPermutation p(rs_->root_count());
  for (std::size_t r = 0; r < p.size(); ++r) {
    p[r] = static_cast<std::uint16_t>(rs_->reflect_along(rs_->root_at(r), beta).index);
  }
  const auto id = find(p);
  if (!id) throw InternalError("root reflection missing from the group table");
  return *id;
}

std::vector<Root> WeylGroup::inversion_set(ElementId w) const {
  const RootPermutation inv = invert_perm(elements_[w].perm);
  const std::size_t positives = rs_->positive_count();
  std::vector<Root> out;
  for (std::size_t p = 0; p < positives; ++p) {
    if (inv[p] >= positives) out.push_back(Root{static_cast<std::uint32_t>(p)});
  }
  return out;
}

EllipticVector WeylGroup::act_on_coweight(ElementId w, const EllipticVector& t) const {
  if (static_cast<int>(t.t.size()) != rs_->rank()) {
    throw PreconditionError("coweight has rank " + std::to_string(t.t.size()) +
                            ", root system has rank " + std::to_string(rs_->rank()));
  }
  const RootPermutation inv = invert_perm(elements_[w].perm);
  EllipticVector out;
  out.t.resize(t.t.size());
  for (int i = 0; i < rs_->rank(); ++i) {
    const Root preimage{inv[rs_->simple_root(i).index]};
    out.t[static_cast<std::size_t>(i)] = eval_root(*rs_, preimage, t);
  }
  return out;
}

}  // namespace ellweyl
