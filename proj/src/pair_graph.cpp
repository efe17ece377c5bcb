#include "nilcover/pair_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "nilcover/errors.hpp"
#include "nilcover/structure.hpp"

namespace nilcover {

std::string_view to_string(ClassKind kind) {
  return kind == ClassKind::Abelian ? "abelian" : "nilpotent";
}

ClassKind parse_class_kind(std::string_view text) {
  if (text == "abelian") return ClassKind::Abelian;
  if (text == "nilpotent") return ClassKind::Nilpotent;
  throw ParseError("unknown class '" + std::string(text) + "' (expected abelian or nilpotent)");
}

namespace {

// <x,y> is nilpotent iff it is the direct product of the <x_p, y_p>, so
// p-parts for distinct primes must commute and x_p y_p must be a p-element.
// Both are necessary; the closure below settles whatever survives.
bool prime_parts_obstruct(const FiniteGroup& g, Index x, Index y) {
  const std::size_t ox = g.element_order(x);
  const std::size_t oy = g.element_order(y);
  std::vector<std::pair<Index, Index>> parts;
  for (unsigned p : prime_divisors(std::lcm(ox, oy))) {
    const std::size_t px = p_part(ox, p);
    const std::size_t py = p_part(oy, p);
    parts.emplace_back(g.power(x, static_cast<std::int64_t>(ox / px)), g.power(y, static_cast<std::int64_t>(oy / py)));
    const auto [xp, yp] = parts.back();
    const std::size_t o = g.element_order(g.mult(xp, yp));
    if (p_part(o, p) != o) return true;
  }
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = 0; b < parts.size(); ++b) {
      if (a == b) continue;
      const Index u = parts[a].first;
      const Index v = parts[b].second;
      if (g.mult(u, v) != g.mult(v, u)) return true;
    }
  }
  return false;
}

}  // namespace

bool classify_pair(const FiniteGroup& g, Index i, Index j, ClassKind kind) {
  if (i == j) throw std::invalid_argument("classify_pair needs distinct elements");
  if (g.mult(i, j) == g.mult(j, i)) return true;
  if (kind == ClassKind::Abelian) return false;
  if (prime_parts_obstruct(g, i, j)) return false;
  const Index seeds[] = {i, j};
  return is_nilpotent(subgroup_generated(g, seeds));
}

PairGraph::PairGraph(const FiniteGroup& group, ClassKind kind, std::vector<Bitset> adjacency)
    : group_(&group), kind_(kind), adjacency_(std::move(adjacency)) {}

std::size_t PairGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

PairGraph build_graph(const FiniteGroup& g, ClassKind kind, const PairGraphLimits& limits) {
  const std::size_t cap = kind == ClassKind::Nilpotent ? limits.nilpotent_cap : limits.abelian_cap;
  const std::size_t n = g.order();
  if (n > cap) throw CapExceeded(cap, n, std::string(to_string(kind)) + " pair classification");

  // Upper triangle, one byte per pair; each row is written by exactly one worker.
  std::vector<std::vector<char>> outside(n);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < n; i += stride) {
      auto& row = outside[i];
      row.assign(n, 0);
      for (std::size_t j = i + 1; j < n; ++j) {
        row[j] = classify_pair(g, static_cast<Index>(i), static_cast<Index>(j), kind) ? 0 : 1;
      }
    }
  };
  unsigned threads = limits.threads ? limits.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
  }

  std::vector<Bitset> adjacency(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (outside[i][j]) {
        adjacency[i].set(j);
        adjacency[j].set(i);
      }
    }
  }
  return PairGraph(g, kind, std::move(adjacency));
}

WitnessCertificate verify_witness(const FiniteGroup& g, ClassKind kind, std::span<const Index> elements) {
  WitnessCertificate cert;
  cert.group = g.label();
  cert.kind = kind;
  for (Index e : elements) cert.elements.push_back(format_cycles(g.element(e)));
  std::set<Index> seen;
  for (Index e : elements) {
    if (!seen.insert(e).second) {
      cert.diagnostic = "duplicate element " + format_cycles(g.element(e));
      return cert;
    }
  }
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = a + 1; b < elements.size(); ++b) {
      if (classify_pair(g, elements[a], elements[b], kind)) {
        cert.diagnostic = "<" + cert.elements[a] + ", " + cert.elements[b] + "> is " + std::string(to_string(kind));
        return cert;
      }
    }
  }
  cert.verified = true;
  return cert;
}

WitnessCertificate verify_witness(const FiniteGroup& g, ClassKind kind, std::span<const Permutation> elements) {
  std::vector<Index> idx;
  for (const auto& p : elements) idx.push_back(g.index_of(p));
  return verify_witness(g, kind, idx);
}

WitnessCertificate verify_witness(const FiniteGroup& g, ClassKind kind, std::span<const std::string> elements) {
  std::vector<Permutation> perms;
  for (const auto& text : elements) perms.push_back(parse_cycles(text, g.degree()));
  return verify_witness(g, kind, perms);
}

namespace {

std::vector<Index> to_indices(const std::vector<std::size_t>& vs) {
  return {vs.begin(), vs.end()};
}

}  // namespace

CliqueNumber clique_number(const PairGraph& graph, const CliqueOptions& opts) {
  auto search = maximum_clique(graph.adjacency(), opts);
  CliqueNumber out;
  out.omega = search.clique.size();
  out.vertices = to_indices(search.clique);
  out.exact = search.exact;
  out.witness = verify_witness(graph.group(), graph.kind(), out.vertices);
  return out;
}

ConditionResult check_condition(const PairGraph& graph, std::size_t n, const CliqueOptions& opts) {
  if (n == 0) throw std::invalid_argument("condition (X, n) needs n >= 1");
  auto search = find_clique(graph.adjacency(), n + 1, opts);
  ConditionResult out;
  if (search.clique.size() > n) {
    out.satisfied = false;
    out.violation = verify_witness(graph.group(), graph.kind(), to_indices(search.clique));
    return out;
  }
  if (!search.exact) {
    throw Timeout("clique search for " + std::to_string(n + 1) + " elements of " + graph.group().label() +
                      " exceeded its time budget",
                  search.clique.size());
  }
  out.satisfied = true;
  return out;
}

bool satisfies_condition(const PairGraph& graph, std::size_t n, const CliqueOptions& opts) {
  return check_condition(graph, n, opts).satisfied;
}

bool satisfies_condition(const FiniteGroup& g, ClassKind kind, std::size_t n, const PairGraphLimits& limits,
                         const CliqueOptions& opts) {
  return satisfies_condition(build_graph(g, kind, limits), n, opts);
}

std::string to_dot(const PairGraph& graph, bool include_isolated) {
  const FiniteGroup& g = graph.group();
  auto quoted = [&](Index i) { return "\"" + format_cycles(g.element(i)) + "\""; };
  std::string out = "graph g {\n";
  if (include_isolated) {
    for (Index i = 0; i < graph.vertex_count(); ++i) {
      if (graph.neighbours(i).none()) out += "  " + quoted(i) + ";\n";
    }
  }
  for (Index i = 0; i < graph.vertex_count(); ++i) {
    graph.neighbours(i).for_each([&](std::size_t j) {
      if (j > i) out += "  " + quoted(i) + " -- " + quoted(static_cast<Index>(j)) + ";\n";
    });
  }
  out += "}\n";
  return out;
}

}  // namespace nilcover
