#pragma once

#include <optional>
#include <span>
#include <vector>

#include "regulous/poly2.hpp"

namespace regulous {
class RatFunc;
}

/// Data-parallel kernels. Each has a serial reference implementation kept for
/// testing and benchmarking; results of the two paths are identical (exact arithmetic).
namespace regulous::kernels {

/// Term count product above which `multiply` switches to the OpenMP path.
inline constexpr std::size_t kParallelMultiplyThreshold = 4096;

Poly2 multiply_serial(const Poly2& a, const Poly2& b);
Poly2 multiply_parallel(const Poly2& a, const Poly2& b);
Poly2 multiply(const Poly2& a, const Poly2& b);

/// Exact values of f at each point; nullopt where the reduced denominator vanishes.
std::vector<std::optional<Rat>> evaluate_grid_serial(const RatFunc& f, std::span<const Point> points);
std::vector<std::optional<Rat>> evaluate_grid_parallel(const RatFunc& f, std::span<const Point> points);

/// Uniform grid {lo + k*step} x {lo + k*step}, k = 0..n-1, row-major in x.
std::vector<Point> uniform_grid(const Rat& lo, const Rat& step, unsigned n);

int max_threads();

}  // namespace regulous::kernels
