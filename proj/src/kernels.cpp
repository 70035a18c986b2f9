#include "regulous/kernels.hpp"

#include <omp.h>

#include "regulous/ratfunc.hpp"

namespace regulous::kernels {

Poly2 multiply_serial(const Poly2& a, const Poly2& b) {
  Poly2 out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) out.add_term({ea.i + eb.i, ea.j + eb.j}, ca * cb);
  return out;
}

Poly2 multiply_parallel(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::pair<Exponent, Rat>> left(a.terms().begin(), a.terms().end());
  const int n = static_cast<int>(left.size());
  const int threads = omp_get_max_threads();
  std::vector<Poly2> partial(static_cast<std::size_t>(threads));

#pragma omp parallel num_threads(threads)
  {
    Poly2& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (int k = 0; k < n; ++k) {
      const auto& [ea, ca] = left[static_cast<std::size_t>(k)];
      for (const auto& [eb, cb] : b.terms()) local.add_term({ea.i + eb.i, ea.j + eb.j}, ca * cb);
    }
  }

  Poly2 out;
  for (const auto& p : partial) out += p;
  return out;
}

Poly2 multiply(const Poly2& a, const Poly2& b) {
  if (a.size() * b.size() >= kParallelMultiplyThreshold && omp_get_max_threads() > 1 && !omp_in_parallel())
    return multiply_parallel(a, b);
  return multiply_serial(a, b);
}

namespace {

std::optional<Rat> value_at(const RatFunc& f, const Point& p) {
  Rat d = f.den().evaluate(p);
  if (d == 0) return std::nullopt;
  return f.num().evaluate(p) / d;
}

}  // namespace

std::vector<std::optional<Rat>> evaluate_grid_serial(const RatFunc& f, std::span<const Point> points) {
  std::vector<std::optional<Rat>> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(value_at(f, p));
  return out;
}

std::vector<std::optional<Rat>> evaluate_grid_parallel(const RatFunc& f, std::span<const Point> points) {
  std::vector<std::optional<Rat>> out(points.size());
  const long n = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] = value_at(f, points[static_cast<std::size_t>(k)]);
  return out;
}

std::vector<Point> uniform_grid(const Rat& lo, const Rat& step, unsigned n) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) pts.emplace_back(lo + step * i, lo + step * j);
  return pts;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace regulous::kernels
