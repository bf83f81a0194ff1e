#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace adicergo {

/// Runs fn(task) for task in [0, tasks), statically striped over `threads`
/// workers. The first exception thrown by any task is rethrown.
template <class Fn>
void parallel_for(std::size_t tasks, unsigned threads, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), tasks);
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) fn(t);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t t = w; t < tasks; t += workers) fn(t);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

namespace detail {

inline constexpr std::size_t kLeaf = 8;
inline constexpr int kSplitDepth = 6;

template <class T, class F>
T tree_sum(std::size_t lo, std::size_t hi, F& term) {
  if (hi - lo <= kLeaf) {
    T acc{};
    for (std::size_t i = lo; i < hi; ++i) acc += term(i);
    return acc;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  return tree_sum<T>(lo, mid, term) + tree_sum<T>(mid, hi, term);
}

inline void collect_nodes(std::size_t lo, std::size_t hi, int depth,
                          std::vector<std::pair<std::size_t, std::size_t>>& out) {
  if (depth == kSplitDepth || hi - lo <= kLeaf) {
    out.emplace_back(lo, hi);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  collect_nodes(lo, mid, depth + 1, out);
  collect_nodes(mid, hi, depth + 1, out);
}

template <class T>
T combine_nodes(std::size_t lo, std::size_t hi, int depth, const std::vector<T>& partial,
                std::size_t& next) {
  if (depth == kSplitDepth || hi - lo <= kLeaf) return partial[next++];
  const std::size_t mid = lo + (hi - lo) / 2;
  T left = combine_nodes(lo, mid, depth + 1, partial, next);
  return left + combine_nodes(mid, hi, depth + 1, partial, next);
}

}  // namespace detail

/// Pairwise (midpoint-split) sum of term(0..n-1).
///
/// The tree depends only on n. With threads > 1 the subtrees at a fixed depth
/// are evaluated concurrently and recombined along the same tree, so the result
/// is bit-identical for every thread count.
template <class F>
auto pairwise_sum(std::size_t n, F&& term, unsigned threads = 1)
    -> std::decay_t<std::invoke_result_t<F&, std::size_t>> {
  using T = std::decay_t<std::invoke_result_t<F&, std::size_t>>;
  if (n == 0) return T{};
  if (threads <= 1 || n < (std::size_t{1} << 14)) return detail::tree_sum<T>(0, n, term);
  std::vector<std::pair<std::size_t, std::size_t>> nodes;
  detail::collect_nodes(0, n, 0, nodes);
  std::vector<T> partial(nodes.size());
  parallel_for(nodes.size(), threads, [&](std::size_t i) {
    partial[i] = detail::tree_sum<T>(nodes[i].first, nodes[i].second, term);
  });
  std::size_t next = 0;
  return detail::combine_nodes(0, n, 0, partial, next);
}

}  // namespace adicergo
