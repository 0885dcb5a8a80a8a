#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sheaf1d/barcode.hpp"
#include "sheaf1d/quiver.hpp"

namespace sheaf1d {

// Representation of the alternating A_{2n+1} quiver attached to points
// x_1 < ... < x_n. Vertex 2k-1 is the stalk at x_k, vertex 2k the open
// interval (x_k, x_{k+1}) with x_0 = -inf and x_{n+1} = +inf. Entries of
// the matrices are field elements written as rationals (residues for F_p).
struct ZigzagRep {
  FieldSpec field = FieldSpec::rationals();
  std::vector<Rational> points;
  std::vector<int> dims;
  std::vector<Matrix<Rational>> left_maps;   // V_{2i+1} -> V_{2i}
  std::vector<Matrix<Rational>> right_maps;  // V_{2i+1} -> V_{2i+2}

  int vertex_count() const { return static_cast<int>(dims.size()); }
  // Throws MalformedInput on shape or ordering errors.
  void validate() const;
};

// Vertex range [i, j] covered by an interval. Throws RefinementError when
// a finite endpoint is not among the points.
std::pair<int, int> vertex_range(const Interval& interval, const std::vector<Rational>& points);
Interval interval_of_range(int i, int j, const std::vector<Rational>& points);

// Sorted union of the finite endpoints of the given intervals.
std::vector<Rational> common_points(const std::vector<Interval>& intervals);

template <class F>
QuiverRep<F> zigzag_quiver(const F& f, const ZigzagRep& rep) {
  QuiverRep<F> q;
  q.dims = rep.dims;
  for (std::size_t i = 0; i < rep.left_maps.size(); ++i) {
    int src = 2 * static_cast<int>(i) + 1;
    q.arrows.push_back({src, src - 1});
    q.maps.push_back(to_field_matrix(f, rep.left_maps[i]));
    q.arrows.push_back({src, src + 1});
    q.maps.push_back(to_field_matrix(f, rep.right_maps[i]));
  }
  return q;
}

template <class F>
ZigzagRep zigzag_from_quiver(const FieldSpec& spec, const F& f, const QuiverRep<F>& q, const std::vector<Rational>& points) {
  ZigzagRep rep;
  rep.field = spec;
  rep.points = points;
  rep.dims = q.dims;
  for (std::size_t a = 0; a < q.arrows.size(); a += 2) {
    rep.left_maps.push_back(to_rational_matrix(f, q.maps[a]));
    rep.right_maps.push_back(to_rational_matrix(f, q.maps[a + 1]));
  }
  return rep;
}

// The interval module supported on vertices [i, j] of A_{vertices}.
template <class F>
QuiverRep<F> zigzag_interval_module(const F& f, int vertices, int i, int j) {
  QuiverRep<F> q;
  for (int k = 0; k < vertices; ++k) q.dims.push_back(i <= k && k <= j ? 1 : 0);
  for (int src = 1; src < vertices; src += 2)
    for (int tgt : {src - 1, src + 1}) {
      q.arrows.push_back({src, tgt});
      FMatrix<F> m = zeros(f, q.dims[tgt], q.dims[src]);
      if (q.dims[tgt] && q.dims[src]) m(0, 0) = f.one();
      q.maps.push_back(std::move(m));
    }
  return q;
}

// Path steps of the zigzag quiver from vertex `from` up to the last vertex.
template <class F>
std::vector<PathStep<F>> zigzag_path(const QuiverRep<F>& q, int from) {
  std::vector<PathStep<F>> steps;
  for (int k = from; k + 1 < q.vertex_count(); ++k) {
    // Arrows are stored as (2i+1 → 2i, 2i+1 → 2i+2) for each point i.
    if (k % 2 == 1) steps.push_back({true, &q.maps[k]});
    else steps.push_back({false, &q.maps[k]});
  }
  return steps;
}

// rk[i][j] = rank of lim → colim on vertices [i, j] (0 when i > j).
template <class F>
std::vector<std::vector<int>> zigzag_rank_table(const F& f, const QuiverRep<F>& q) {
  int n = q.vertex_count();
  std::vector<std::vector<int>> rk(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    auto ranks = path_ranks(f, q.dims[i], zigzag_path(q, i));
    for (int j = i; j < n; ++j) rk[i][j] = ranks[j - i];
  }
  return rk;
}

// Same table from explicit limits and colimits; slow, kept as an oracle.
template <class F>
std::vector<std::vector<int>> zigzag_rank_table_direct(const F& f, const QuiverRep<F>& q) {
  int n = q.vertex_count();
  std::vector<std::vector<int>> rk(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<char> inside(n, 0);
      for (int k = i; k <= j; ++k) inside[k] = 1;
      rk[i][j] = limit_colimit_rank(f, q, inside);
    }
  return rk;
}

// Interval multiplicities from the rank table by inclusion-exclusion.
std::vector<std::vector<int>> multiplicities_from_ranks(const std::vector<std::vector<int>>& rk);

// Splits the zigzag quiver rep into interval modules, returning the vertex
// ranges with multiplicity. The rank formula is used as a cross-check.
template <class F>
std::vector<std::pair<std::pair<int, int>, int>> zigzag_interval_summands(const F& f, const QuiverRep<F>& q) {
  int n = q.vertex_count();
  auto mult = multiplicities_from_ranks(zigzag_rank_table(f, q));
  std::vector<std::pair<std::pair<int, int>, int>> found;
  QuiverRep<F> rest = q;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (mult[i][j] < 0) throw std::logic_error("negative interval multiplicity");
      if (mult[i][j] == 0) continue;
      auto s = zigzag_interval_module(f, n, i, j);
      for (int c = 0; c < mult[i][j]; ++c) {
        auto complement = split_off_summand(f, rest, s);
        if (!complement) throw std::logic_error("rank cross-check failed: interval is not a summand");
        rest = std::move(*complement);
      }
      found.push_back({{i, j}, mult[i][j]});
    }
  if (rest.total_dim() != 0) throw std::logic_error("rank cross-check failed: leftover summand");
  return found;
}

std::vector<std::vector<int>> zigzag_rank_invariant(const ZigzagRep& rep);

GradedBarcode gabriel_decompose(const ZigzagRep& rep);
ZigzagRep realize_rep(const GradedBarcode& bc, const std::vector<Rational>& points);

}  // namespace sheaf1d
