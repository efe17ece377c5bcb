#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nilcover/group.hpp"

namespace nilcover::catalog {

/// Parsed group expression.
///
///   atom    := "S"k | "A"k | "C"k | "D"k | "Q"k | "SL(2,"q")" | "PSL(2,"q")" | "PSL(3,3)"
///   postfix := primary ("/Z" | "/Z*")*
///   primary := atom | "(" expr ")"
///   expr    := postfix ("x" postfix)*
///
/// "D"k is dihedral of order 2k; "Q"k generalised quaternion of order k.
/// Whitespace is ignored. Products are flattened, so render() is canonical.
class GroupSpec {
 public:
  enum class Kind { Symmetric, Alternating, Cyclic, Dihedral, Quaternion, SL2, PSL2, PSL33, Product, ModCenter, ModHypercentre };

  /// Throws ParseError.
  static GroupSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  unsigned parameter() const noexcept { return param_; }
  const std::vector<GroupSpec>& children() const noexcept { return children_; }
  std::string render() const;

 private:
  friend class SpecParser;
  Kind kind_ = Kind::Cyclic;
  unsigned param_ = 1;
  std::vector<GroupSpec> children_;
};

struct BuildOptions {
  std::size_t cap = kDefaultClosureCap;
};

/// Throws ParseError, ClosureCapExceeded, std::invalid_argument (unsupported q).
GroupPtr build(const GroupSpec& spec, const BuildOptions& opts = {});
GroupPtr build(std::string_view spec, const BuildOptions& opts = {});

GroupPtr symmetric(unsigned k, const BuildOptions& opts = {});
GroupPtr alternating(unsigned k, const BuildOptions& opts = {});
GroupPtr cyclic(unsigned k, const BuildOptions& opts = {});
GroupPtr dihedral(unsigned k, const BuildOptions& opts = {});
GroupPtr quaternion(unsigned k, const BuildOptions& opts = {});
/// SL(2,q) on the q^2-1 nonzero vectors of GF(q)^2.
GroupPtr special_linear_2(unsigned q, const BuildOptions& opts = {});
/// PSL(2,q) on the q+1 points of the projective line.
GroupPtr projective_special_linear_2(unsigned q, const BuildOptions& opts = {});
/// PSL(3,3) on the 13 points of the projective plane over GF(3).
GroupPtr projective_special_linear_3_3(const BuildOptions& opts = {});
/// Acts on the disjoint union of the factors' domains.
GroupPtr direct_product(std::span<const GroupPtr> factors, const BuildOptions& opts = {});

/// Element of a direct product built by direct_product from one element per factor.
Index embed(const FiniteGroup& product, std::span<const GroupPtr> factors, std::span<const Index> parts);

}  // namespace nilcover::catalog
