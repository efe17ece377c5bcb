#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "nilcover/group.hpp"

namespace nilcover {

Subgroup center(const FiniteGroup& g);

struct UpperCentralSeries {
  Subgroup hypercentre;
  /// Z_1 = Z(G) ⊆ Z_2 ⊆ ... up to the stable term; strictly increasing.
  std::vector<Subgroup> terms;
};
UpperCentralSeries hypercentre(const FiniteGroup& g);

/// H ⊇ H' ⊇ H'' ⊇ ... ending at the first repeated term.
std::vector<Subgroup> derived_series(const Subgroup& h);
std::vector<Subgroup> derived_series(const FiniteGroup& g);
bool is_soluble(const Subgroup& h);
bool is_soluble(const FiniteGroup& g);
/// Number of strict steps in the derived series; throws Insoluble.
std::size_t derived_length(const FiniteGroup& g);

/// γ_1 = H, γ_{k+1} = [γ_k, H], ending at the first repeated term.
std::vector<Subgroup> lower_central_series(const Subgroup& h);
bool is_nilpotent(const Subgroup& h);
bool is_nilpotent(const FiniteGroup& g);
bool is_abelian(const Subgroup& h);

/// [A, B] as a subgroup of the common parent. Requires A and B to normalise
/// each other's join (always true for the series above).
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

/// Smallest subgroup of `within` that contains `seeds` and is normalised by `within`.
Subgroup normal_closure(const Subgroup& within, std::span<const Index> seeds);
Subgroup normal_closure(const FiniteGroup& g, std::span<const Index> seeds);
bool is_normal(const FiniteGroup& g, const Subgroup& h);
/// Normaliser of H in G.
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
Subgroup centralizer(const FiniteGroup& g, const Subgroup& h);

/// Normal closures <x>^G over conjugacy class representatives, deduplicated and
/// ordered by member set. Every normal subgroup generated by a single class.
std::vector<Subgroup> class_normal_closures(const FiniteGroup& g);
std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g);

Subgroup soluble_radical(const FiniteGroup& g);
Subgroup fitting(const FiniteGroup& g);
/// Join of the non-abelian minimal normal subgroups.
Subgroup cr_radical(const FiniteGroup& g);

struct SylowReport {
  unsigned prime = 0;
  std::size_t sylow_order = 1;
  std::size_t count = 0;
  std::size_t normalizer_order = 0;
  /// First entry is the subgroup found by growth; the rest are its distinct
  /// conjugates in order of least conjugating element.
  std::vector<Subgroup> subgroups;
  bool pairwise_trivial_intersection = true;
};
SylowReport sylow(const FiniteGroup& g, unsigned p);

/// Prime factors of n in increasing order.
std::vector<unsigned> prime_divisors(std::size_t n);
bool is_prime(std::size_t n);
/// Largest power of p dividing n.
std::size_t p_part(std::size_t n, unsigned p);

struct Quotient {
  GroupPtr group;
  /// projection[i] = image of element i of G in the quotient group.
  std::vector<Index> projection;
  /// coset_of[i] = index of the right coset N·x_i (cosets ordered by least member).
  std::vector<Index> coset_of;
};
/// G/N realised as the permutation action of G on the right cosets of N.
/// Throws NotNormal.
Quotient quotient(const FiniteGroup& g, const Subgroup& n, std::string label = {});

enum class Recognition { A5, S3, Other };
std::string_view to_string(Recognition r);
Recognition recognize(const FiniteGroup& g);
bool is_simple(const FiniteGroup& g);

bool has_normal_p_complement(const FiniteGroup& g, unsigned p);
bool is_supersoluble(const FiniteGroup& g);

struct StructureReport {
  Subgroup center;
  Subgroup hypercentre;
  std::vector<Subgroup> upper_central_series;
  std::vector<Subgroup> derived_series;
  std::optional<std::size_t> derived_length;  // nullopt when insoluble
  std::vector<Subgroup> lower_central_series;
  bool is_nilpotent = false;
  bool is_soluble = false;
  bool is_supersoluble = false;
  Subgroup soluble_radical;
  Subgroup fitting;
  Subgroup cr_radical;
  std::vector<SylowReport> sylow;
};
StructureReport analyze_structure(const FiniteGroup& g, bool with_sylow = true);

}  // namespace nilcover
