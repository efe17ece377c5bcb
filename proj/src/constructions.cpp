#include "nilcover/constructions.hpp"

#include <stdexcept>

#include "nilcover/errors.hpp"
#include "nilcover/s5_asset.hpp"

namespace nilcover {

namespace {

void require_verified(const GroupWitness& w, ClassKind kind, const char* which) {
  auto cert = verify_witness(*w.group, kind, w.elements);
  if (!cert.verified) {
    throw ConstructionFailure(std::string(which) + " witness in " + w.group->label() +
                              " does not verify: " + cert.diagnostic);
  }
  if (w.elements.empty()) throw ConstructionFailure(std::string(which) + " witness is empty");
}

}  // namespace

std::vector<Index> product_witness_homclosed(const FiniteGroup& product, const GroupWitness& h,
                                             const GroupWitness& k, ClassKind kind) {
  require_verified(h, kind, "first");
  require_verified(k, kind, "second");
  const FiniteGroup& hg = *h.group;
  const FiniteGroup& kg = *k.group;
  auto pair = [&](Index x, Index y) {
    const Permutation parts[] = {hg.element(x), kg.element(y)};
    return product.index_of(concatenate(parts));
  };
  std::vector<Index> out;
  for (std::size_t i = 1; i < h.elements.size(); ++i) out.push_back(pair(h.elements[i], kg.identity()));
  for (Index y : k.elements) out.push_back(pair(h.elements.front(), y));
  return out;
}

std::vector<Index> product_witness_nilpotent(const FiniteGroup& product, std::span<const GroupWitness> factors) {
  if (factors.empty()) throw ConstructionFailure("no factors");
  for (const auto& f : factors) require_verified(f, ClassKind::Nilpotent, "factor");
  std::vector<std::size_t> pos(factors.size(), 0);
  std::vector<Index> out;
  for (;;) {
    std::vector<Permutation> parts;
    for (std::size_t i = 0; i < factors.size(); ++i) parts.push_back(factors[i].group->element(factors[i].elements[pos[i]]));
    out.push_back(product.index_of(concatenate(parts)));
    std::size_t i = factors.size();
    while (i-- > 0) {
      if (++pos[i] < factors[i].elements.size()) break;
      pos[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

std::vector<Subgroup> a5_sylow_cover(const FiniteGroup& a5) {
  if (recognize(a5) != Recognition::A5) throw ConstructionFailure(a5.label() + " is not recognised as A5");
  std::vector<Subgroup> out;
  for (unsigned p : {2U, 3U, 5U}) {
    auto report = sylow(a5, p);
    for (auto& s : report.subgroups) out.push_back(std::move(s));
  }
  return out;
}

std::vector<Index> a5_sylow_witness(const FiniteGroup& a5) {
  std::vector<Index> out;
  for (const auto& p : a5_sylow_cover(a5)) out.push_back(p.members()[1]);
  return out;
}

std::string_view s5_witness_asset() { return assets::kS5NonNilpotent22; }

WitnessCertificate s5_witness(const FiniteGroup& s5) {
  auto perms = parse_cycle_list(s5_witness_asset(), s5.degree());
  return verify_witness(s5, ClassKind::Nilpotent, perms);
}

std::vector<Index> sl25_witness(const FiniteGroup& sl25) {
  if (sl25.order() != 120) throw ConstructionFailure(sl25.label() + " does not have order 120");
  const Subgroup z = center(sl25);
  auto twos = sylow(sl25, 2);
  auto threes = sylow(sl25, 3);
  auto fives = sylow(sl25, 5);
  if (twos.subgroups.size() != 5 || threes.subgroups.size() != 10 || fives.subgroups.size() != 6) {
    throw ConstructionFailure("unexpected Sylow counts in " + sl25.label());
  }
  std::vector<Index> out;
  for (const auto& p : twos.subgroups) {
    bool picked = false;
    for (Index m : p.members()) {
      if (!z.contains(m)) {
        out.push_back(m);
        picked = true;
        break;
      }
    }
    if (!picked) throw ConstructionFailure("Sylow 2-subgroup inside the centre");
  }
  for (const auto& q : threes.subgroups) out.push_back(q.members()[1]);
  for (const auto& r : fives.subgroups) out.push_back(r.members()[1]);

  const Index x1 = out.front();
  for (Index m : twos.subgroups.front().members()) {
    if (!z.contains(m) && sl25.mult(m, x1) != sl25.mult(x1, m)) {
      out.push_back(m);
      return out;
    }
  }
  throw ConstructionFailure("no element of the first Sylow 2-subgroup fails to commute with the first pick");
}

bool verify_cover(const FiniteGroup& g, std::span<const Subgroup> parts, ClassKind kind) {
  Bitset covered(g.order());
  for (const auto& part : parts) {
    if (&part.parent() != &g) throw std::invalid_argument("cover part belongs to a different group");
    covered |= part.member_set();
  }
  if (covered.count() != g.order()) return false;
  for (const auto& part : parts) {
    bool in_class = kind == ClassKind::Abelian ? is_abelian(part) : is_nilpotent(part);
    if (!in_class) return false;
  }
  return true;
}

std::vector<Subgroup> lift_cover(const FiniteGroup& g, const Quotient& q, std::span<const Subgroup> parts) {
  std::vector<Subgroup> out;
  for (const auto& part : parts) {
    std::vector<Index> members;
    for (Index x = 0; x < g.order(); ++x) {
      if (part.contains(q.projection[x])) members.push_back(x);
    }
    out.push_back(subgroup_from_members(g, std::move(members)));
  }
  return out;
}

}  // namespace nilcover
