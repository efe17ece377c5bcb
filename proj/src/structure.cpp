#include "nilcover/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "nilcover/errors.hpp"

namespace nilcover {

namespace {

bool less_by_members(const Subgroup& a, const Subgroup& b) {
  return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                      b.members().begin(), b.members().end());
}

bool is_prime_power(std::size_t n) { return n > 1 && prime_divisors(n).size() == 1; }

}  // namespace

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<unsigned> prime_divisors(std::size_t n) {
  std::vector<unsigned> out;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<unsigned>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

std::size_t p_part(std::size_t n, unsigned p) {
  std::size_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

Subgroup center(const FiniteGroup& g) {
  std::vector<Index> members;
  for (Index x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Index s : g.generator_indices()) {
      if (g.mult(x, s) != g.mult(s, x)) {
        central = false;
        break;
      }
    }
    if (central) members.push_back(x);
  }
  return subgroup_from_members(g, std::move(members));
}

UpperCentralSeries hypercentre(const FiniteGroup& g) {
  std::vector<Subgroup> terms;
  Subgroup current = trivial_subgroup(g);
  for (;;) {
    std::vector<Index> members;
    for (Index x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (Index s : g.generator_indices()) {
        if (!current.contains(commutator(g, x, s))) {
          ok = false;
          break;
        }
      }
      if (ok) members.push_back(x);
    }
    Subgroup next = subgroup_from_members(g, std::move(members));
    if (!terms.empty() && next.order() == current.order()) break;
    terms.push_back(next);
    if (next.order() == current.order()) break;  // Z(G) trivial
    current = std::move(next);
  }
  Subgroup top = terms.back();
  return {std::move(top), std::move(terms)};
}

Subgroup normal_closure(const Subgroup& within, std::span<const Index> seeds) {
  const FiniteGroup& g = within.parent();
  SubgroupBuilder builder(g);
  for (Index s : seeds) builder.add_generator(s);
  for (std::size_t k = 0; k < builder.generators().size(); ++k) {
    const Index s = builder.generators()[k];
    for (Index h : within.generators()) builder.add_generator(conjugate(g, s, h));
  }
  return builder.build();
}

Subgroup normal_closure(const FiniteGroup& g, std::span<const Index> seeds) {
  return normal_closure(whole_group(g), seeds);
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const FiniteGroup& g = a.parent();
  std::vector<Index> seeds;
  for (Index x : a.generators()) {
    for (Index y : b.generators()) {
      Index c = commutator(g, x, y);
      if (c != g.identity()) seeds.push_back(c);
    }
  }
  if (seeds.empty()) return trivial_subgroup(g);
  if (a.is_subgroup_of(b)) return normal_closure(b, seeds);
  if (b.is_subgroup_of(a)) return normal_closure(a, seeds);
  return normal_closure(join(a, b), seeds);
}

std::vector<Subgroup> derived_series(const Subgroup& h) {
  std::vector<Subgroup> terms{h};
  for (;;) {
    Subgroup next = commutator_subgroup(terms.back(), terms.back());
    if (next.order() == terms.back().order()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) { return derived_series(whole_group(g)); }

bool is_soluble(const Subgroup& h) { return derived_series(h).back().is_trivial(); }
bool is_soluble(const FiniteGroup& g) { return is_soluble(whole_group(g)); }

std::size_t derived_length(const FiniteGroup& g) {
  auto series = derived_series(g);
  if (!series.back().is_trivial()) {
    throw Insoluble((g.label().empty() ? std::string("group") : g.label()) +
                    " is insoluble; derived series stops at order " +
                    std::to_string(series.back().order()));
  }
  return series.size() - 1;
}

std::vector<Subgroup> lower_central_series(const Subgroup& h) {
  std::vector<Subgroup> terms{h};
  for (;;) {
    Subgroup next = commutator_subgroup(terms.back(), h);
    if (next.order() == terms.back().order()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

bool is_abelian(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (g.mult(gens[i], gens[j]) != g.mult(gens[j], gens[i])) return false;
    }
  }
  return true;
}

bool is_nilpotent(const Subgroup& h) {
  if (h.order() == 1 || is_prime_power(h.order()) || is_abelian(h)) return true;
  return lower_central_series(h).back().is_trivial();
}

bool is_nilpotent(const FiniteGroup& g) { return is_nilpotent(whole_group(g)); }

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (Index s : h.generators()) {
    for (Index x : g.generator_indices()) {
      if (!h.contains(conjugate(g, s, x))) return false;
    }
  }
  return true;
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Index> members;
  for (Index x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Index s : h.generators()) {
      if (!h.contains(conjugate(g, s, x))) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(x);
  }
  return subgroup_from_members(g, std::move(members));
}

Subgroup centralizer(const FiniteGroup& g, const Subgroup& h) {
  std::vector<Index> members;
  for (Index x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Index s : h.generators()) {
      if (g.mult(x, s) != g.mult(s, x)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(x);
  }
  return subgroup_from_members(g, std::move(members));
}

std::vector<Subgroup> class_normal_closures(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  Subgroup whole = whole_group(g);
  for (const auto& cls : g.conjugacy_classes()) {
    if (cls.front() == g.identity()) continue;
    Index rep = cls.front();
    Subgroup c = normal_closure(whole, std::span<const Index>(&rep, 1));
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), less_by_members);
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g) {
  auto closures = class_normal_closures(g);
  std::vector<Subgroup> out;
  for (const auto& c : closures) {
    bool minimal = true;
    for (const auto& d : closures) {
      if (d.order() < c.order() && d.is_subgroup_of(c)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

namespace {

template <typename Pred>
Subgroup radical_join(const FiniteGroup& g, Pred keep, const char* what) {
  Subgroup radical = trivial_subgroup(g);
  for (const auto& c : class_normal_closures(g)) {
    if (c.is_subgroup_of(radical) || !keep(c)) continue;
    radical = join(radical, c);
    if (!keep(radical)) {
      throw std::logic_error(std::string("join of two ") + what + " normal subgroups is not " + what);
    }
  }
  return radical;
}

}  // namespace

Subgroup soluble_radical(const FiniteGroup& g) {
  return radical_join(g, [](const Subgroup& s) { return is_soluble(s); }, "soluble");
}

Subgroup fitting(const FiniteGroup& g) {
  return radical_join(g, [](const Subgroup& s) { return is_nilpotent(s); }, "nilpotent");
}

Subgroup cr_radical(const FiniteGroup& g) {
  Subgroup radical = trivial_subgroup(g);
  for (const auto& m : minimal_normal_subgroups(g)) {
    if (!is_abelian(m)) radical = join(radical, m);
  }
  return radical;
}

SylowReport sylow(const FiniteGroup& g, unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  SylowReport report;
  report.prime = p;
  const std::size_t target = p_part(g.order(), p);
  if (target == 1) {
    report.count = 0;
    report.sylow_order = 1;
    report.normalizer_order = g.order();
    report.subgroups.push_back(trivial_subgroup(g));
    return report;
  }

  auto is_p_element = [&](Index x) { return p_part(g.element_order(x), p) == g.element_order(x); };

  Index start = g.identity();
  for (Index x = 1; x < g.order(); ++x) {
    if (is_p_element(x) && g.element_order(x) > g.element_order(start)) start = x;
  }
  SubgroupBuilder grow(g);
  grow.add_generator(start);
  while (grow.order() < target) {
    Subgroup current = grow.build();
    Subgroup norm = normalizer(g, current);
    bool extended = false;
    for (Index x : norm.members()) {
      if (!current.contains(x) && is_p_element(x)) {
        grow.add_generator(x);
        extended = true;
        break;
      }
    }
    if (!extended) throw std::logic_error("p-subgroup below Sylow order has no p-element in N(P)\\P");
  }
  Subgroup first = grow.build();
  Subgroup norm = normalizer(g, first);
  report.sylow_order = first.order();
  report.normalizer_order = norm.order();
  report.count = g.order() / norm.order();

  std::map<std::vector<Index>, bool> seen;
  for (Index x = 0; x < g.order() && report.subgroups.size() < report.count; ++x) {
    std::vector<Index> members;
    members.reserve(first.order());
    for (Index m : first.members()) members.push_back(conjugate(g, m, x));
    std::sort(members.begin(), members.end());
    if (!seen.emplace(members, true).second) continue;
    std::vector<Index> gens;
    for (Index s : first.generators()) gens.push_back(conjugate(g, s, x));
    report.subgroups.emplace_back(g, std::move(members), std::move(gens));
  }

  for (std::size_t i = 0; i < report.subgroups.size() && report.pairwise_trivial_intersection; ++i) {
    for (std::size_t j = i + 1; j < report.subgroups.size(); ++j) {
      Bitset common = report.subgroups[i].member_set();
      common &= report.subgroups[j].member_set();
      if (common.count() != 1) {
        report.pairwise_trivial_intersection = false;
        break;
      }
    }
  }
  return report;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n, std::string label) {
  if (!is_normal(g, n)) throw NotNormal("subgroup of order " + std::to_string(n.order()) + " is not normal");
  const std::size_t index = g.order() / n.order();
  constexpr Index kUnset = static_cast<Index>(-1);
  Quotient q;
  q.coset_of.assign(g.order(), kUnset);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (q.coset_of[x] != kUnset) continue;
    const auto id = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index m : n.members()) q.coset_of[g.mult(m, x)] = id;
  }

  auto action = [&](Index x) {
    std::vector<Point> images(index);
    for (std::size_t c = 0; c < index; ++c) images[c] = q.coset_of[g.mult(reps[c], x)];
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (Index s : g.generator_indices()) gens.push_back(action(s));
  if (label.empty()) label = (g.label().empty() ? std::string("G") : g.label()) + "/N";
  q.group = close_generators(index, std::move(gens), std::max<std::size_t>(index, 1), std::move(label));

  std::vector<Index> image_of_coset(index);
  for (std::size_t c = 0; c < index; ++c) image_of_coset[c] = q.group->index_of(action(reps[c]));
  q.projection.resize(g.order());
  for (Index x = 0; x < g.order(); ++x) q.projection[x] = image_of_coset[q.coset_of[x]];
  return q;
}

std::string_view to_string(Recognition r) {
  switch (r) {
    case Recognition::A5: return "A5";
    case Recognition::S3: return "S3";
    case Recognition::Other: break;
  }
  return "other";
}

bool is_simple(const FiniteGroup& g) {
  if (g.order() == 1) return false;
  for (const auto& c : class_normal_closures(g)) {
    if (!c.is_whole()) return false;
  }
  return true;
}

Recognition recognize(const FiniteGroup& g) {
  if (g.order() == 60 && is_simple(g)) return Recognition::A5;
  if (g.order() == 6 && !is_abelian(whole_group(g))) return Recognition::S3;
  return Recognition::Other;
}

bool has_normal_p_complement(const FiniteGroup& g, unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  std::vector<Index> coprime;
  for (Index x = 0; x < g.order(); ++x) {
    if (g.element_order(x) % p != 0) coprime.push_back(x);
  }
  if (coprime.size() != g.order() / p_part(g.order(), p)) return false;
  SubgroupBuilder builder(g);
  for (Index x : coprime) {
    builder.add_generator(x);
    if (builder.order() > coprime.size()) return false;
  }
  return true;
}

bool is_supersoluble(const FiniteGroup& g) {
  GroupPtr holder;
  const FiniteGroup* current = &g;
  while (current->order() > 1) {
    auto minimal = minimal_normal_subgroups(*current);
    const Subgroup& chief = minimal.front();
    if (!is_prime(chief.order())) return false;
    holder = quotient(*current, chief).group;
    current = holder.get();
  }
  return true;
}

StructureReport analyze_structure(const FiniteGroup& g, bool with_sylow) {
  auto upper = hypercentre(g);
  auto derived = derived_series(g);
  auto lower = lower_central_series(whole_group(g));
  const bool soluble = derived.back().is_trivial();
  StructureReport r{
      .center = center(g),
      .hypercentre = upper.hypercentre,
      .upper_central_series = upper.terms,
      .derived_series = derived,
      .derived_length = soluble ? std::optional<std::size_t>(derived.size() - 1) : std::nullopt,
      .lower_central_series = lower,
      .is_nilpotent = lower.back().is_trivial(),
      .is_soluble = soluble,
      .is_supersoluble = soluble && is_supersoluble(g),
      .soluble_radical = soluble_radical(g),
      .fitting = fitting(g),
      .cr_radical = cr_radical(g),
      .sylow = {},
  };
  if (with_sylow) {
    for (unsigned p : prime_divisors(g.order())) r.sylow.push_back(sylow(g, p));
  }
  return r;
}

}  // namespace nilcover
