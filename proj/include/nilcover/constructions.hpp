#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilcover/group.hpp"
#include "nilcover/pair_graph.hpp"
#include "nilcover/structure.hpp"

namespace nilcover {

/// A witness expressed inside a specific group: element indices of `group`.
struct GroupWitness {
  GroupPtr group;
  std::vector<Index> elements;
};

/// Product of two witnesses for a class closed under homomorphic images:
/// {(x_2,1), ..., (x_{n+1},1), (x_1,y_1), ..., (x_1,y_{m+1})} in H×K, size n+m+1.
/// Inputs are re-verified first; throws ConstructionFailure when one fails.
/// `product` must have been built by catalog::direct_product({H, K}).
std::vector<Index> product_witness_homclosed(const FiniteGroup& product, const GroupWitness& h,
                                             const GroupWitness& k, ClassKind kind);

/// Full Cartesian product X_1 × ... × X_t of per-factor non-nilpotent witnesses,
/// in lexicographic order of factor positions. Inputs are re-verified under the
/// nilpotent class first. `product` must be direct_product of the factor groups.
std::vector<Index> product_witness_nilpotent(const FiniteGroup& product, std::span<const GroupWitness> factors);

/// All Sylow subgroups of A5 (5 of order 4, 10 of order 3, 6 of order 5), in
/// prime order. Throws ConstructionFailure unless the group is recognised as A5.
std::vector<Subgroup> a5_sylow_cover(const FiniteGroup& a5);
/// The least non-identity element of each Sylow subgroup: 21 elements.
std::vector<Index> a5_sylow_witness(const FiniteGroup& a5);

/// The bundled 22-element list of S5 permutations (1-based cycle notation).
std::string_view s5_witness_asset();
/// The asset parsed and verified in `s5` (which must act on 5 points).
WitnessCertificate s5_witness(const FiniteGroup& s5);

/// 22 pairwise non-commuting elements of SL(2,5): one non-central element from
/// each of the five quaternion Sylow 2-subgroups, one non-identity element from
/// each Sylow 3- and 5-subgroup, plus a second element of the first Sylow
/// 2-subgroup not commuting with the first pick. Throws ConstructionFailure.
std::vector<Index> sl25_witness(const FiniteGroup& sl25);

/// True iff the parts cover the group and each part lies in the class.
bool verify_cover(const FiniteGroup& g, std::span<const Subgroup> parts, ClassKind kind);

/// Preimages in G of subgroups of a quotient G/N.
std::vector<Subgroup> lift_cover(const FiniteGroup& g, const Quotient& q, std::span<const Subgroup> parts);

}  // namespace nilcover
