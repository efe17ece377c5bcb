#include "nilcover/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "nilcover/errors.hpp"

namespace nilcover {

struct FiniteGroup::Caches {
  std::once_flag classes_once;
  std::vector<std::vector<Index>> classes;
};

FiniteGroup::~FiniteGroup() = default;

std::optional<Index> FiniteGroup::find(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Index FiniteGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree_) {
    throw ElementNotInGroup(format_cycles(p) + " has degree " + std::to_string(p.degree()) +
                            ", group acts on " + std::to_string(degree_) + " points");
  }
  auto found = find(p);
  if (!found) throw ElementNotInGroup(format_cycles(p) + " is not an element of " + label_);
  return *found;
}

Index FiniteGroup::mult(Index a, Index b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(b) * elements_.size() + a];
  if (int slot = gen_slot_[b]; slot >= 0) return gen_columns_[static_cast<std::size_t>(slot)][a];
  return lookup_.at(elements_[a] * elements_[b]);
}

Index FiniteGroup::power(Index a, std::int64_t k) const {
  std::int64_t ord = orders_[a];
  k %= ord;
  if (k < 0) k += ord;
  Index out = identity();
  for (std::int64_t i = 0; i < k; ++i) out = mult(out, a);
  return out;
}

const std::vector<std::vector<Index>>& FiniteGroup::conjugacy_classes() const {
  std::call_once(caches_->classes_once, [this] {
    const std::size_t n = order();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Index>> classes;
    for (Index x = 0; x < n; ++x) {
      if (seen[x]) continue;
      std::vector<Index> cls{x};
      seen[x] = true;
      for (std::size_t k = 0; k < cls.size(); ++k) {
        for (Index g : generator_indices_) {
          Index y = mult(mult(inverse_[g], cls[k]), g);
          if (!seen[y]) {
            seen[y] = true;
            cls.push_back(y);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      classes.push_back(std::move(cls));
    }
    caches_->classes = std::move(classes);
  });
  return caches_->classes;
}

GroupPtr close_generators(std::size_t degree, std::vector<Permutation> gens, std::size_t cap,
                          std::string label) {
  if (cap == 0) throw std::invalid_argument("closure cap must be at least 1");
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw DegreeMismatch("generator " + format_cycles(g) + " has degree " +
                           std::to_string(g.degree()) + ", expected " + std::to_string(degree));
    }
  }

  // Breadth-first closure; remember for each element the (parent, generator)
  // that produced it so the dense table can be filled column by column.
  std::vector<Permutation> found{Permutation::identity(degree)};
  std::unordered_map<Permutation, Index, PermutationHash> where{{found[0], 0}};
  std::vector<std::pair<Index, std::size_t>> origin{{0, 0}};
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation next = found[k] * gens[s];
      if (where.contains(next)) continue;
      if (found.size() == cap) throw ClosureCapExceeded(cap, found.size() + 1);
      where.emplace(next, static_cast<Index>(found.size()));
      found.push_back(std::move(next));
      origin.emplace_back(static_cast<Index>(k), s);
    }
  }

  const std::size_t n = found.size();
  std::vector<Index> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), Index{0});
  std::sort(by_rank.begin(), by_rank.end(),
            [&](Index a, Index b) { return found[a] < found[b]; });
  std::vector<Index> rank(n);
  for (std::size_t r = 0; r < n; ++r) rank[by_rank[r]] = static_cast<Index>(r);

  auto group = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  group->degree_ = degree;
  group->label_ = std::move(label);
  group->caches_ = std::make_unique<FiniteGroup::Caches>();
  group->elements_.reserve(n);
  for (Index d : by_rank) group->elements_.push_back(found[d]);
  for (std::size_t r = 0; r < n; ++r) group->lookup_.emplace(group->elements_[r], static_cast<Index>(r));

  group->gen_slot_.assign(n, -1);
  for (const auto& g : gens) {
    Index gi = group->lookup_.at(g);
    if (gi == 0 || group->gen_slot_[gi] >= 0) continue;
    group->gen_slot_[gi] = static_cast<int>(group->generator_indices_.size());
    group->generator_indices_.push_back(gi);
    std::vector<Index> col(n);
    for (std::size_t a = 0; a < n; ++a) col[a] = group->lookup_.at(group->elements_[a] * g);
    group->gen_columns_.push_back(std::move(col));
  }
  group->generators_ = std::move(gens);

  if (n <= FiniteGroup::kDenseTableLimit) {
    // Column of b = p * s is the column of p followed by right multiplication by s.
    auto& table = group->table_;
    table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) table[a] = static_cast<Index>(a);  // column of identity
    for (std::size_t d = 1; d < n; ++d) {
      auto [parent, s] = origin[d];
      Index b = rank[d];
      Index p = rank[parent];
      const auto& gcol =
          group->gen_columns_[static_cast<std::size_t>(group->gen_slot_[group->lookup_.at(group->generators_[s])])];
      const Index* src = &table[static_cast<std::size_t>(p) * n];
      Index* dst = &table[static_cast<std::size_t>(b) * n];
      for (std::size_t a = 0; a < n; ++a) dst[a] = gcol[src[a]];
    }
  }

  group->inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    group->inverse_[a] = group->lookup_.at(group->elements_[a].inverse());
  }
  group->orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    Index x = static_cast<Index>(a);
    while (x != 0) {
      x = group->mult(x, static_cast<Index>(a));
      ++k;
    }
    group->orders_[a] = k;
  }
  return group;
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Index> members,
                   std::vector<Index> generators)
    : parent_(&parent),
      members_(std::move(members)),
      generators_(std::move(generators)),
      member_set_(parent.order()) {
  if (members_.empty() || parent.order() % members_.size() != 0) {
    throw std::logic_error("subgroup order " + std::to_string(members_.size()) +
                           " does not divide group order " + std::to_string(parent.order()));
  }
  for (Index i : members_) member_set_.set(i);
}

SubgroupBuilder::SubgroupBuilder(const FiniteGroup& parent)
    : parent_(&parent), in_(parent.order()), members_{parent.identity()} {
  in_.set(parent.identity());
}

SubgroupBuilder::SubgroupBuilder(const Subgroup& start)
    : parent_(&start.parent()),
      in_(start.member_set()),
      members_(start.members().begin(), start.members().end()),
      gens_(start.generators()) {}

bool SubgroupBuilder::add_generator(Index g) {
  if (in_.test(g)) return false;
  gens_.push_back(g);
  const std::size_t old = members_.size();
  for (std::size_t k = 0; k < old; ++k) {
    Index y = parent_->mult(members_[k], g);
    if (!in_.test(y)) {
      in_.set(y);
      members_.push_back(y);
    }
  }
  for (std::size_t k = old; k < members_.size(); ++k) {
    for (Index s : gens_) {
      Index y = parent_->mult(members_[k], s);
      if (!in_.test(y)) {
        in_.set(y);
        members_.push_back(y);
      }
    }
  }
  return true;
}

Subgroup SubgroupBuilder::build() const {
  std::vector<Index> sorted(members_);
  std::sort(sorted.begin(), sorted.end());
  return Subgroup(*parent_, std::move(sorted), gens_);
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Index> seeds) {
  SubgroupBuilder b(g);
  for (Index s : seeds) {
    if (s >= g.order()) throw std::out_of_range("element index out of range");
    b.add_generator(s);
  }
  return b.build();
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Index> all(g.order());
  std::iota(all.begin(), all.end(), Index{0});
  return Subgroup(g, std::move(all), g.generator_indices());
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {g.identity()}, {}); }

Subgroup join(const Subgroup& a, const Subgroup& b) {
  SubgroupBuilder builder(a);
  for (Index s : b.generators()) builder.add_generator(s);
  return builder.build();
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Index> common;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(),
                        b.members().end(), std::back_inserter(common));
  return subgroup_from_members(a.parent(), std::move(common));
}

Subgroup subgroup_from_members(const FiniteGroup& g, std::vector<Index> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Bitset in(g.order());
  for (Index m : members) in.set(m);
  SubgroupBuilder builder(g);
  for (Index m : members) {
    if (builder.add_generator(m) && builder.order() > members.size()) break;
  }
  if (builder.order() != members.size()) {
    throw std::invalid_argument("member set is not closed under multiplication");
  }
  for (Index m : builder.members()) {
    if (!in.test(m)) throw std::invalid_argument("member set is not closed under multiplication");
  }
  return Subgroup(g, std::move(members), builder.generators());
}

Index commutator(const FiniteGroup& g, Index x, Index y) {
  return g.mult(g.mult(g.inv(x), g.inv(y)), g.mult(x, y));
}

Index conjugate(const FiniteGroup& g, Index x, Index y) { return g.mult(g.mult(g.inv(y), x), y); }

Index iterated_commutator(const FiniteGroup& g, Index x, Index y, unsigned m) {
  if (m == 0) throw std::invalid_argument("iterated commutator needs m >= 1");
  Index c = commutator(g, x, y);
  for (unsigned k = 1; k < m; ++k) c = commutator(g, c, y);
  return c;
}

}  // namespace nilcover
