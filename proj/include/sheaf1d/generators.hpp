#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sheaf1d/barcode.hpp"
#include "sheaf1d/circle.hpp"
#include "sheaf1d/zigzag.hpp"

// Hand-rolled random generators shared by the property tests and the
// verification suites. Every draw goes through the caller's engine, so a
// fixed seed reproduces the whole stream.
namespace sheaf1d::gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// A rational in [lo, hi] on the grid of step 1/den.
inline Rational random_rational(Rng& rng, int lo, int hi, int den) {
  return Rational(uniform(rng, lo * den, hi * den), den);
}

// Endpoints on the grid {0, 1/2, ..., grid/2}.
inline Interval random_interval(Rng& rng, int grid = 8, bool allow_infinite = true) {
  for (;;) {
    Endpoint l = Endpoint::at(Rational(uniform(rng, 0, grid), 2), coin(rng));
    Endpoint r = Endpoint::at(Rational(uniform(rng, 0, grid), 2), coin(rng));
    if (allow_infinite && coin(rng, 0.15)) l = Endpoint::neg_inf();
    if (allow_infinite && coin(rng, 0.15)) r = Endpoint::pos_inf();
    if (auto i = Interval::try_make(l, r)) return *i;
  }
}

inline GradedBarcode random_barcode(Rng& rng, FieldSpec field, int max_bars = 4, int min_degree = 0, int max_degree = 0,
                                    int grid = 8, bool allow_infinite = true) {
  std::vector<Bar> bars;
  int n = uniform(rng, 0, max_bars);
  for (int i = 0; i < n; ++i)
    bars.push_back({random_interval(rng, grid, allow_infinite), uniform(rng, min_degree, max_degree), uniform(rng, 1, 2)});
  return GradedBarcode(field, std::move(bars));
}

// Bars [a,b), [a,inf), (-inf,b) and R over F_2 in degrees -1..1.
inline GradedBarcode random_tau_barcode(Rng& rng, int max_bars, bool bounded_below) {
  std::vector<Bar> bars;
  int n = uniform(rng, 0, max_bars);
  for (int i = 0; i < n; ++i) {
    Rational a(uniform(rng, -4, 8), 2);
    Rational b = a + Rational(uniform(rng, 1, 8), 2);
    Endpoint l = (!bounded_below && coin(rng, 0.2)) ? Endpoint::neg_inf() : Endpoint::at(a, true);
    Endpoint r = coin(rng, 0.2) ? Endpoint::pos_inf() : Endpoint::at(b, false);
    bars.push_back({Interval::make(l, r), uniform(rng, -1, 1), uniform(rng, 1, 2)});
  }
  return GradedBarcode(FieldSpec::prime(2), std::move(bars));
}

inline Matrix<Rational> random_matrix(Rng& rng, int rows, int cols, std::uint32_t p) {
  Matrix<Rational> m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = uniform(rng, 0, static_cast<int>(p) - 1);
  return m;
}

inline Matrix<Rational> random_invertible(Rng& rng, int n, std::uint32_t p) {
  PrimeField f(p);
  for (;;) {
    auto m = random_matrix(rng, n, n, p);
    if (is_invertible(f, to_field_matrix(f, m))) return m;
  }
}

// Random zigzag rep over F_p with at most max_points points and total
// dimension at most max_total.
inline ZigzagRep random_zigzag(Rng& rng, std::uint32_t p, int max_points = 8, int max_total = 40) {
  ZigzagRep rep;
  rep.field = FieldSpec::prime(p);
  int n = uniform(rng, 0, max_points);
  for (int i = 0; i < n; ++i) rep.points.push_back(Rational(3 * i + uniform(rng, 0, 2), 2));
  int vertices = 2 * n + 1;
  int budget = uniform(rng, 0, max_total);
  rep.dims.assign(vertices, 0);
  for (int b = 0; b < budget; ++b) {
    int k = uniform(rng, 0, vertices - 1);
    if (rep.dims[k] < 5) ++rep.dims[k];
  }
  for (int i = 0; i < n; ++i) {
    rep.left_maps.push_back(random_matrix(rng, rep.dims[2 * i], rep.dims[2 * i + 1], p));
    rep.right_maps.push_back(random_matrix(rng, rep.dims[2 * i + 2], rep.dims[2 * i + 1], p));
  }
  return rep;
}

// The same rep in new bases g_k: maps become g_t A g_s^{-1}.
inline ZigzagRep conjugate_zigzag(Rng& rng, const ZigzagRep& rep) {
  std::uint32_t p = rep.field.characteristic();
  PrimeField f(p);
  std::vector<FMatrix<PrimeField>> g, ginv;
  for (int d : rep.dims) {
    g.push_back(to_field_matrix(f, random_invertible(rng, d, p)));
    ginv.push_back(*inverse(f, g.back()));
  }
  ZigzagRep out = rep;
  for (std::size_t i = 0; i < rep.left_maps.size(); ++i) {
    int s = 2 * static_cast<int>(i) + 1;
    out.left_maps[i] = to_rational_matrix(f, multiply(f, g[s - 1], multiply(f, to_field_matrix(f, rep.left_maps[i]), ginv[s])));
    out.right_maps[i] = to_rational_matrix(f, multiply(f, g[s + 1], multiply(f, to_field_matrix(f, rep.right_maps[i]), ginv[s])));
  }
  return out;
}

// Random cyclic rep over F_p on the unit circle.
inline CyclicRep random_cyclic(Rng& rng, std::uint32_t p, int max_points = 6, int max_dim = 4) {
  CyclicRep rep;
  rep.field = FieldSpec::prime(p);
  int n = uniform(rng, 1, max_points);
  for (int k = 0; k < n; ++k) rep.points.push_back(Rational(k, n));
  for (int v = 0; v < 2 * n; ++v) rep.dims.push_back(uniform(rng, 0, max_dim));
  for (int k = 0; k < n; ++k) {
    rep.left_maps.push_back(random_matrix(rng, rep.dims[(2 * k + 2 * n - 1) % (2 * n)], rep.dims[2 * k], p));
    rep.right_maps.push_back(random_matrix(rng, rep.dims[2 * k + 1], rep.dims[2 * k], p));
  }
  return rep;
}

// A cyclic rep over F_2 where every map is invertible, so the whole thing
// is a local system of rank r.
inline CyclicRep random_local_system(Rng& rng, int r) {
  CyclicRep rep;
  rep.field = FieldSpec::prime(2);
  int n = uniform(rng, 1, 4);
  for (int k = 0; k < n; ++k) rep.points.push_back(Rational(k, n));
  rep.dims.assign(2 * n, r);
  for (int k = 0; k < n; ++k) {
    rep.left_maps.push_back(random_invertible(rng, r, 2));
    rep.right_maps.push_back(random_invertible(rng, r, 2));
  }
  return rep;
}

// Direct sum of two F_2 cyclic reps on the same points.
inline CyclicRep cyclic_direct_sum(const CyclicRep& a, const CyclicRep& b) {
  PrimeField f(2);
  auto q = direct_sum(f, cyclic_quiver(f, a), cyclic_quiver(f, b));
  return cyclic_from_quiver(f, q, a.field, a.circumference, a.points);
}

// An F_2 cyclic rep in random new bases.
inline CyclicRep conjugate_cyclic(Rng& rng, const CyclicRep& rep) {
  PrimeField f(2);
  auto q = cyclic_quiver(f, rep);
  std::vector<FMatrix<PrimeField>> g, ginv;
  for (int d : q.dims) {
    g.push_back(to_field_matrix(f, random_invertible(rng, d, 2)));
    ginv.push_back(*inverse(f, g.back()));
  }
  for (std::size_t a = 0; a < q.arrows.size(); ++a)
    q.maps[a] = multiply(f, g[q.arrows[a].target], multiply(f, q.maps[a], ginv[q.arrows[a].source]));
  return cyclic_from_quiver(f, q, rep.field, rep.circumference, rep.points);
}

// Cyclic rep over F_2 on the unit circle: usually a random one, and every
// fifth call a conjugated sum of a local system with a few bars so the
// monodromy part is exercised.
inline CyclicRep random_mixed_cyclic(Rng& rng, int call_index) {
  CyclicRep rep = random_cyclic(rng, 2, 6, 4);
  if (call_index % 5 != 0) return rep;
  CyclicRep loc = random_local_system(rng, uniform(rng, 1, 3));
  int n = loc.point_count();
  std::vector<Bar> bars;
  for (int b = uniform(rng, 1, 3); b > 0; --b) {
    Rational left(uniform(rng, 0, n - 1), n), right = left + Rational(uniform(rng, 0, 2 * n), n);
    if (auto i = Interval::try_make(Endpoint::at(left, coin(rng)), Endpoint::at(right, coin(rng))))
      bars.push_back({*i, 0, 1});
  }
  return conjugate_cyclic(rng, cyclic_direct_sum(loc, realize_circle(CircleSheaf(FieldSpec::prime(2), 1, bars), loc.points)));
}

}  // namespace sheaf1d::gen
