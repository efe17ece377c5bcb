#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilcover/bitset.hpp"
#include "nilcover/clique.hpp"
#include "nilcover/group.hpp"

namespace nilcover {

/// The class 𝒳 in condition (𝒳, n).
enum class ClassKind { Abelian, Nilpotent };

std::string_view to_string(ClassKind kind);
/// Accepts "abelian" or "nilpotent"; throws ParseError.
ClassKind parse_class_kind(std::string_view text);

/// True when <x_i, x_j> lies in the class. Requires i != j.
bool classify_pair(const FiniteGroup& g, Index i, Index j, ClassKind kind);

struct PairGraphLimits {
  std::size_t nilpotent_cap = 600;
  std::size_t abelian_cap = 1200;
  /// 0 means one per hardware thread. The result does not depend on it.
  unsigned threads = 0;
};

/// Element-indexed graph with an edge {i, j} iff i != j and <x_i, x_j> is outside
/// the class. A group satisfies (𝒳, n) iff this graph has no clique of n + 1
/// vertices.
class PairGraph {
 public:
  PairGraph(const FiniteGroup& group, ClassKind kind, std::vector<Bitset> adjacency);

  const FiniteGroup& group() const noexcept { return *group_; }
  ClassKind kind() const noexcept { return kind_; }
  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  bool adjacent(Index i, Index j) const { return adjacency_[i].test(j); }
  const Bitset& neighbours(Index i) const { return adjacency_[i]; }
  std::span<const Bitset> adjacency() const noexcept { return adjacency_; }
  std::size_t edge_count() const;

 private:
  const FiniteGroup* group_;
  ClassKind kind_;
  std::vector<Bitset> adjacency_;
};

/// Throws CapExceeded when the group is above the cap for `kind`.
PairGraph build_graph(const FiniteGroup& g, ClassKind kind, const PairGraphLimits& limits = {});

/// A set of elements claimed to pairwise generate subgroups outside the class.
struct WitnessCertificate {
  std::string group;
  ClassKind kind = ClassKind::Nilpotent;
  std::vector<std::string> elements;  // canonical cycle notation
  bool verified = false;
  std::string diagnostic;  // why verification failed; empty when verified

  std::size_t size() const noexcept { return elements.size(); }
};

/// Checks every pair. Duplicates make the certificate unverified.
WitnessCertificate verify_witness(const FiniteGroup& g, ClassKind kind, std::span<const Index> elements);
/// Throws ElementNotInGroup.
WitnessCertificate verify_witness(const FiniteGroup& g, ClassKind kind, std::span<const Permutation> elements);
/// Parses 1-based cycle notation; throws ParseError or ElementNotInGroup.
WitnessCertificate verify_witness(const FiniteGroup& g, ClassKind kind, std::span<const std::string> elements);

struct CliqueNumber {
  std::size_t omega = 0;
  std::vector<Index> vertices;
  WitnessCertificate witness;
  /// False on timeout: omega is then only a lower bound.
  bool exact = true;
};

/// Exact clique number with the lexicographically least maximum clique as witness.
CliqueNumber clique_number(const PairGraph& graph, const CliqueOptions& opts = {});

struct ConditionResult {
  bool satisfied = false;
  /// n + 1 elements pairwise outside the class when not satisfied.
  WitnessCertificate violation;
};

/// Decides (𝒳, n), stopping at the first clique of n + 1 vertices. Requires
/// n >= 1; throws Timeout when undecided within the budget.
ConditionResult check_condition(const PairGraph& graph, std::size_t n, const CliqueOptions& opts = {});
bool satisfies_condition(const PairGraph& graph, std::size_t n, const CliqueOptions& opts = {});
bool satisfies_condition(const FiniteGroup& g, ClassKind kind, std::size_t n, const PairGraphLimits& limits = {},
                         const CliqueOptions& opts = {});

/// `graph g { "(1,2)" -- "(1,3)"; ... }`. Isolated vertices are omitted unless requested.
std::string to_dot(const PairGraph& graph, bool include_isolated = false);

}  // namespace nilcover
