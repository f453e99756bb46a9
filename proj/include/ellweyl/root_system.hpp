#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ellweyl/errors.hpp"

namespace ellweyl {

/****************************************************************************

  Finite crystallographic root systems over exact integer arithmetic.

  Every root is stored as an integer coordinate vector in the simple-root
  basis, so Cartan pairings and coweight evaluations are exact. The Cartan
  matrix convention is fixed once, per family, by the table below; entry
  cartan(i,j) is the Cartan integer <alpha_i, alpha_j^vee> (row = first
  argument of the pairing):

    A_n  (n >= 1)  chain, all entries -1 off the diagonal of the chain
    B_n  (n >= 2)  chain with <a_{n-1}, a_n^vee> = -2   (a_n short)
    C_n  (n >= 2)  chain with <a_n, a_{n-1}^vee> = -2   (a_n long)
    D_n  (n >= 4)  chain a_1..a_{n-1} plus a_n attached to a_{n-2}
    E_n  (n = 6,7,8) chain a_1 a_3 a_4 a_5 a_6 (a_7 a_8), a_2 on a_4
    F_4            chain with <a_2, a_3^vee> = -2       (a_3, a_4 short)
    G_2            <a_1, a_2^vee> = -1, <a_2, a_1^vee> = -3  (a_1 short)

  The symmetrizer d assigns each simple root half its squared length
  (short roots normalized to length^2 = 2), making cartan(i,j) * d_j a
  symmetric integer Gram matrix. Products of simple components are block
  diagonal in everything.

  Root indices: positive roots occupy [0, positive_count), sorted by height
  and then lexicographically; the negative of the root at index k sits at
  k + positive_count. All query structures are immutable after build and
  safe for concurrent reads.

 ****************************************************************************/

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleComponent {
  Family family;
  int rank;
  friend bool operator==(const SimpleComponent&, const SimpleComponent&) = default;
};

struct RootSystemSpec {
  std::vector<SimpleComponent> components;

  // Accepts "G2", "a2", "A2xA1", "B3 x A1". Throws ConstructionError.
  static RootSystemSpec parse(std::string_view text);
  std::string to_string() const;  // canonical, e.g. "A2xA1"
  int total_rank() const;
};

// A root is an index into RootSystem::coords; cheap to copy and compare.
struct Root {
  std::uint32_t index{};
  friend constexpr auto operator<=>(const Root&, const Root&) = default;
};

class RootSystem {
 public:
  // Enumerates the full root set as the closure of the simple roots under
  // simple reflections. Throws ConstructionError on invalid family/rank,
  // naming the offending component.
  static RootSystem build(const RootSystemSpec& spec);

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return rank_; }
  std::size_t root_count() const { return coords_.size(); }
  std::size_t positive_count() const { return positive_count_; }

  // <alpha_i, alpha_j^vee> for simple roots.
  long long cartan(int i, int j) const { return cartan_[idx(i, j)]; }
  const std::vector<long long>& symmetrizer() const { return symmetrizer_; }

  std::span<const long long> coords(Root a) const;
  Root root_at(std::size_t index) const;
  std::optional<Root> find(std::span<const long long> coordinates) const;

  Root simple_root(int i) const { return simple_[static_cast<std::size_t>(i)]; }
  Root negate(Root a) const;
  bool is_positive(Root a) const { return a.index < positive_count_; }
  int height(Root a) const;  // sum of coordinates
  int component_of(Root a) const { return component_of_[a.index]; }
  int component_count() const { return component_count_; }

  // The Cartan integer 2(a,b)/(b,b); exact, and always an integer for roots.
  long long pairing(Root a, Root b) const;

  // Simple reflection: a - <a, alpha_i^vee> alpha_i.
  Root reflect(Root a, int i) const;
  // Reflection along an arbitrary root b.
  Root reflect_along(Root a, Root b) const;

  // Symmetrized inner product (x, y) on arbitrary coordinate vectors.
  long long inner(std::span<const long long> x, std::span<const long long> y) const;

 private:
  RootSystem() = default;
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_) +
           static_cast<std::size_t>(j);
  }

  RootSystemSpec spec_;
  int rank_ = 0;
  int component_count_ = 0;
  std::vector<long long> cartan_;       // rank x rank, row-major
  std::vector<long long> gram_;         // cartan(i,j) * d_j, symmetric
  std::vector<long long> symmetrizer_;  // d
  std::vector<std::vector<long long>> coords_;
  std::vector<int> component_of_;
  std::vector<Root> simple_;
  std::size_t positive_count_ = 0;
  std::vector<std::pair<std::vector<long long>, std::uint32_t>> index_;  // sorted
};

}  // namespace ellweyl
