#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilcover/bitset.hpp"
#include "nilcover/permutation.hpp"

namespace nilcover {

using Index = std::uint32_t;

inline constexpr std::size_t kDefaultClosureCap = 10000;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A fully enumerated permutation group. Elements are sorted lexicographically
/// by image sequence, so the identity is always index 0. Immutable after
/// construction; lazily computed caches are populated under std::call_once.
class FiniteGroup {
 public:
  /// Orders up to this size get a dense multiplication table.
  static constexpr std::size_t kDenseTableLimit = 4096;

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;
  ~FiniteGroup();

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::string& label() const noexcept { return label_; }

  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  /// Indices of the non-identity generators, duplicates removed.
  const std::vector<Index>& generator_indices() const noexcept { return generator_indices_; }

  const Permutation& element(Index i) const { return elements_[i]; }
  std::optional<Index> find(const Permutation& p) const;
  /// Throws ElementNotInGroup.
  Index index_of(const Permutation& p) const;

  Index identity() const noexcept { return 0; }
  Index mult(Index a, Index b) const;
  Index inv(Index a) const noexcept { return inverse_[a]; }
  std::uint32_t element_order(Index a) const noexcept { return orders_[a]; }
  Index power(Index a, std::int64_t k) const;

  bool has_dense_table() const noexcept { return !table_.empty(); }

  /// Conjugacy classes, each sorted, ordered by smallest member.
  const std::vector<std::vector<Index>>& conjugacy_classes() const;

 private:
  struct Caches;
  FiniteGroup() = default;
  friend GroupPtr close_generators(std::size_t, std::vector<Permutation>, std::size_t,
                                   std::string);

  std::size_t degree_ = 0;
  std::string label_;
  std::vector<Permutation> generators_;
  std::vector<Index> generator_indices_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Index, PermutationHash> lookup_;
  std::vector<Index> table_;                     // column-major: table_[b * n + a] = a*b
  std::vector<std::vector<Index>> gen_columns_;  // gen_columns_[k][a] = a * gen_k
  std::vector<int> gen_slot_;                    // element -> generator slot or -1
  std::vector<Index> inverse_;
  std::vector<std::uint32_t> orders_;
  std::unique_ptr<Caches> caches_;
};

/// Enumerates <gens> by breadth-first closure. Throws ClosureCapExceeded when the
/// order would exceed `cap`, DegreeMismatch when a generator has the wrong degree.
GroupPtr close_generators(std::size_t degree, std::vector<Permutation> gens,
                          std::size_t cap = kDefaultClosureCap, std::string label = {});

/// A subgroup of an enumerated group, stored as a sorted set of element indices
/// together with a generating set. The parent must outlive the subgroup.
class Subgroup {
 public:
  /// `members` must be sorted and closed; `generators` must generate it.
  Subgroup(const FiniteGroup& parent, std::vector<Index> members, std::vector<Index> generators);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  std::span<const Index> members() const noexcept { return members_; }
  const std::vector<Index>& generators() const noexcept { return generators_; }
  const Bitset& member_set() const noexcept { return member_set_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Index i) const noexcept { return member_set_.test(i); }
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_->order(); }
  bool is_subgroup_of(const Subgroup& o) const noexcept { return member_set_.is_subset_of(o.member_set_); }

  bool operator==(const Subgroup& o) const noexcept {
    return parent_ == o.parent_ && members_ == o.members_;
  }

 private:
  const FiniteGroup* parent_;
  std::vector<Index> members_;
  std::vector<Index> generators_;
  Bitset member_set_;
};

/// Incremental closure: grows a subgroup one generator at a time using only
/// the parent's multiplication.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(const FiniteGroup& parent);
  explicit SubgroupBuilder(const Subgroup& start);

  bool contains(Index i) const noexcept { return in_.test(i); }
  std::size_t order() const noexcept { return members_.size(); }
  std::span<const Index> members() const noexcept { return members_; }
  const std::vector<Index>& generators() const noexcept { return gens_; }

  /// Returns true if the subgroup grew.
  bool add_generator(Index g);

  Subgroup build() const;

 private:
  const FiniteGroup* parent_;
  Bitset in_;
  std::vector<Index> members_;
  std::vector<Index> gens_;
};

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Index> seeds);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
/// <A, B>
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// Validates closure of an arbitrary member set; throws std::invalid_argument.
Subgroup subgroup_from_members(const FiniteGroup& g, std::vector<Index> members);

/// x^-1 y^-1 x y
Index commutator(const FiniteGroup& g, Index x, Index y);
/// y^-1 x y
Index conjugate(const FiniteGroup& g, Index x, Index y);
/// [x, m y] = [[x, (m-1) y], y], with [x, 1 y] = [x, y].
Index iterated_commutator(const FiniteGroup& g, Index x, Index y, unsigned m);

}  // namespace nilcover
