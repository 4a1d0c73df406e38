#pragma once

// Truncated Cauchy products, the inner loop of every polynomial and series
// multiplication in the library.
//
// Each output coefficient is an independent dot product, so the parallel
// kernel distributes coefficients across OpenMP threads. The serial kernel
// is the reference: tests require both to agree exactly, and the benchmark
// compares their throughput.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace norlund::kernels {

/// Below this many multiply-adds the parallel kernel runs serially.
inline constexpr std::size_t kParallelWorkThreshold = 2048;

namespace detail {

template <class T>
T dot_antidiagonal(std::span<const T> a, std::span<const T> b, std::size_t k) {
  const std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
  const std::size_t hi = std::min(k, a.size() - 1);
  T acc{};
  for (std::size_t j = lo; j <= hi; ++j) acc += a[j] * b[k - j];
  return acc;
}

inline std::size_t product_length(std::size_t na, std::size_t nb, std::size_t limit) {
  if (na == 0 || nb == 0) return 0;
  return std::min(na + nb - 1, limit);
}

}  // namespace detail

namespace serial {

/// out[k] = sum_j a[j] b[k-j] for k < min(len(a)+len(b)-1, limit).
template <class T>
std::vector<T> convolve(std::span<const T> a, std::span<const T> b, std::size_t limit) {
  const std::size_t n = detail::product_length(a.size(), b.size(), limit);
  std::vector<T> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = detail::dot_antidiagonal(a, b, k);
  return out;
}

}  // namespace serial

namespace parallel {

template <class T>
std::vector<T> convolve(std::span<const T> a, std::span<const T> b, std::size_t limit) {
  const std::size_t n = detail::product_length(a.size(), b.size(), limit);
  std::vector<T> out(n);
  const bool big = a.size() * b.size() >= kParallelWorkThreshold;
  // Antidiagonals near the middle are longest; dynamic scheduling evens that out.
#pragma omp parallel for schedule(dynamic, 1) if (big)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
    out[k] = detail::dot_antidiagonal(a, b, static_cast<std::size_t>(k));
  }
  return out;
}

}  // namespace parallel

template <class T>
std::vector<T> convolve(std::span<const T> a, std::span<const T> b, std::size_t limit) {
  return parallel::convolve(a, b, limit);
}

}  // namespace norlund::kernels
