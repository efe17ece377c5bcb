#include "nilcover/clique.hpp"

#include <algorithm>
#include <numeric>

namespace nilcover {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget) : end_(Clock::now() + budget) {}

  /// Polls the clock on the first call and then every 1024 calls.
  bool expired() {
    if (expired_) return true;
    if ((calls_++ & 1023U) == 0 && Clock::now() >= end_) expired_ = true;
    return expired_;
  }

 private:
  Clock::time_point end_;
  std::uint64_t calls_ = 0;
  bool expired_ = false;
};

/// Greedy sequential colouring of `p`: vertices in colour-class order with the
/// colour number of each, non-decreasing.
void colour_sort(const std::vector<Bitset>& adj, const Bitset& p, std::vector<std::size_t>& order,
                 std::vector<std::size_t>& bound) {
  order.clear();
  bound.clear();
  Bitset uncoloured = p;
  std::size_t colour = 0;
  while (!uncoloured.none()) {
    ++colour;
    Bitset q = uncoloured;
    for (std::size_t v = q.find_first(); v != Bitset::npos; v = q.find_next_from(v + 1)) {
      uncoloured.reset(v);
      q.subtract(adj[v]);
      order.push_back(v);
      bound.push_back(colour);
    }
  }
}

std::size_t colour_count(const std::vector<Bitset>& adj, Bitset uncoloured) {
  std::size_t colour = 0;
  while (!uncoloured.none()) {
    ++colour;
    Bitset q = uncoloured;
    for (std::size_t v = q.find_first(); v != Bitset::npos; v = q.find_next_from(v + 1)) {
      uncoloured.reset(v);
      q.subtract(adj[v]);
    }
  }
  return colour;
}

/// Branch and bound on a degree-ordered copy of the graph (MCQ/BBMC style).
class BranchAndBound {
 public:
  BranchAndBound(std::span<const Bitset> adjacency, Deadline& deadline) : deadline_(deadline) {
    const std::size_t n = adjacency.size();
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = adjacency[v].count();
    to_original_.resize(n);
    std::iota(to_original_.begin(), to_original_.end(), std::size_t{0});
    std::stable_sort(to_original_.begin(), to_original_.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    std::vector<std::size_t> to_local(n);
    for (std::size_t i = 0; i < n; ++i) to_local[to_original_[i]] = i;
    adj_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
      adjacency[to_original_[i]].for_each([&](std::size_t u) { adj_[i].set(to_local[u]); });
    }
  }

  /// Searches for a clique larger than `floor`; stops once one of size `stop_at` exists.
  void run(std::size_t floor, std::size_t stop_at) {
    best_size_ = floor;
    stop_at_ = stop_at;
    Bitset all(adj_.size());
    all.set_all();
    current_.clear();
    expand(all);
  }

  bool timed_out() const { return timed_out_; }
  std::uint64_t nodes() const { return nodes_; }
  std::size_t best_size() const { return best_size_; }

  std::vector<std::size_t> best() const {
    std::vector<std::size_t> out;
    for (std::size_t v : best_) out.push_back(to_original_[v]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool done() const { return timed_out_ || best_size_ >= stop_at_; }

  void expand(Bitset p) {
    ++nodes_;
    if (deadline_.expired()) {
      timed_out_ = true;
      return;
    }
    std::vector<std::size_t> order, bound;
    colour_sort(adj_, p, order, bound);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current_.size() + bound[k] <= best_size_) return;
      const std::size_t v = order[k];
      current_.push_back(v);
      Bitset next = p;
      next &= adj_[v];
      if (next.none()) {
        if (current_.size() > best_size_) {
          best_size_ = current_.size();
          best_ = current_;
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      p.reset(v);
      if (done()) return;
    }
  }

  Deadline& deadline_;
  std::vector<std::size_t> to_original_;
  std::vector<Bitset> adj_;
  std::vector<std::size_t> current_, best_;
  std::size_t best_size_ = 0;
  std::size_t stop_at_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

/// Depth-first search in ascending vertex order for the lexicographically
/// least clique of exactly `target` vertices.
class LexSearch {
 public:
  LexSearch(std::span<const Bitset> adjacency, Deadline& deadline)
      : adj_(adjacency.begin(), adjacency.end()), deadline_(deadline) {}

  bool run(std::size_t target) {
    target_ = target;
    current_.clear();
    Bitset all(adj_.size());
    all.set_all();
    return search(all);
  }

  const std::vector<std::size_t>& clique() const { return current_; }
  bool timed_out() const { return timed_out_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool search(Bitset p) {
    ++nodes_;
    if (current_.size() == target_) return true;
    if (deadline_.expired()) {
      timed_out_ = true;
      return false;
    }
    if (current_.size() + colour_count(adj_, p) < target_) return false;
    std::size_t remaining = p.count();
    for (std::size_t v = p.find_first(); v != Bitset::npos; v = p.find_next_from(v + 1)) {
      if (current_.size() + remaining < target_) return false;
      current_.push_back(v);
      Bitset next = p;
      next &= adj_[v];
      if (search(std::move(next))) return true;
      if (timed_out_) return false;
      current_.pop_back();
      p.reset(v);
      --remaining;
    }
    return false;
  }

  std::vector<Bitset> adj_;
  Deadline& deadline_;
  std::vector<std::size_t> current_;
  std::size_t target_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

CliqueSearchResult maximum_clique(std::span<const Bitset> adjacency, const CliqueOptions& opts) {
  CliqueSearchResult result;
  if (adjacency.empty()) return result;
  Deadline deadline(opts.timeout);
  BranchAndBound bb(adjacency, deadline);
  bb.run(0, adjacency.size() + 1);
  result.nodes = bb.nodes();
  result.clique = bb.best();
  if (bb.timed_out()) {
    result.exact = false;
    return result;
  }
  LexSearch lex(adjacency, deadline);
  if (lex.run(result.clique.size())) result.clique = lex.clique();
  result.nodes += lex.nodes();
  return result;
}

CliqueSearchResult find_clique(std::span<const Bitset> adjacency, std::size_t target, const CliqueOptions& opts) {
  CliqueSearchResult result;
  if (target == 0) return result;
  if (adjacency.size() < target) return result;
  Deadline deadline(opts.timeout);
  BranchAndBound bb(adjacency, deadline);
  bb.run(target - 1, target);
  result.nodes = bb.nodes();
  if (bb.best_size() >= target) {
    result.clique = bb.best();
    LexSearch lex(adjacency, deadline);
    if (lex.run(target)) result.clique = lex.clique();
    result.nodes += lex.nodes();
    return result;
  }
  result.exact = !bb.timed_out();
  return result;
}

}  // namespace nilcover
