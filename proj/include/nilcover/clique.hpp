#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nilcover/bitset.hpp"

namespace nilcover {

struct CliqueOptions {
  std::chrono::milliseconds timeout{60'000};
};

struct CliqueSearchResult {
  /// Sorted vertex indices.
  std::vector<std::size_t> clique;
  /// False when the time budget ran out; `clique` is then only a lower bound.
  bool exact = true;
  std::uint64_t nodes = 0;
};

/// Exact maximum clique by branch and bound with greedy colouring bounds.
/// The returned clique is the lexicographically least maximum clique, so the
/// result depends only on the graph.
CliqueSearchResult maximum_clique(std::span<const Bitset> adjacency, const CliqueOptions& opts = {});

/// Decides whether a clique of `target` vertices exists and stops as soon as
/// one is found. On success the clique is the lexicographically least one of
/// that size; otherwise it is empty and `exact` says whether absence was proven.
CliqueSearchResult find_clique(std::span<const Bitset> adjacency, std::size_t target,
                               const CliqueOptions& opts = {});

}  // namespace nilcover
