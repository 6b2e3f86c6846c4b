#pragma once

#include <omp.h>

#include <cstddef>
#include <exception>
#include <vector>

namespace stabenv {

enum class Execution { serial, parallel };

// Caps the OpenMP worker count; 0 restores the runtime default.
void set_max_threads(int threads);
int max_threads();

namespace detail {

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(count); ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace detail

/// Computes make(0), ..., make(count-1) and combines them.
///
/// serial: left fold identity + t0 + t1 + ... in index order (the reference).
/// parallel: terms built concurrently, then combined by a balanced pairwise
/// tree whose shape depends only on count, so results are reproducible for
/// any thread count.
template <class T, class Make, class Combine>
T map_reduce(std::size_t count, Make make, Combine combine, T identity, Execution exec) {
  if (exec == Execution::serial || count < 2) {
    T acc = std::move(identity);
    for (std::size_t i = 0; i < count; ++i) {
      acc = combine(std::move(acc), make(i));
    }
    return acc;
  }
  std::vector<T> level(count, identity);
  detail::parallel_for(count, [&](std::size_t i) { level[i] = make(i); });
  while (level.size() > 1) {
    std::vector<T> next((level.size() + 1) / 2, identity);
    detail::parallel_for(next.size(), [&](std::size_t i) {
      if (2 * i + 1 < level.size()) {
        next[i] = combine(std::move(level[2 * i]), std::move(level[2 * i + 1]));
      } else {
        next[i] = std::move(level[2 * i]);
      }
    });
    level = std::move(next);
  }
  return combine(std::move(identity), std::move(level.front()));
}

// Fills out[i] = make(i).
template <class T, class Make>
std::vector<T> parallel_map(std::size_t count, Make make, Execution exec) {
  std::vector<T> out(count);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) {
      out[i] = make(i);
    }
  } else {
    detail::parallel_for(count, [&](std::size_t i) { out[i] = make(i); });
  }
  return out;
}

}  // namespace stabenv
