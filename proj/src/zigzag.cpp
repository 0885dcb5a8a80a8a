#include "sheaf1d/zigzag.hpp"

#include <algorithm>

#include "sheaf1d/errors.hpp"

namespace sheaf1d {

void ZigzagRep::validate() const {
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i - 1] < points[i])) throw MalformedInput("points must be strictly increasing");
  std::size_t n = points.size();
  if (dims.size() != 2 * n + 1)
    throw MalformedInput("expected " + std::to_string(2 * n + 1) + " dims, got " + std::to_string(dims.size()));
  for (int d : dims)
    if (d < 0) throw MalformedInput("negative dimension");
  if (left_maps.size() != n || right_maps.size() != n) throw MalformedInput("expected one map pair per point");
  for (std::size_t i = 0; i < n; ++i) {
    int src = dims[2 * i + 1];
    const auto& l = left_maps[i];
    const auto& r = right_maps[i];
    if (l.rows() != dims[2 * i] || l.cols() != src)
      throw MalformedInput("left map " + std::to_string(i) + " has wrong shape");
    if (r.rows() != dims[2 * i + 2] || r.cols() != src)
      throw MalformedInput("right map " + std::to_string(i) + " has wrong shape");
  }
  if (field.is_prime()) {
    PrimeField f(field.characteristic());
    auto check = [&](const Matrix<Rational>& m) {
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) f.from_rational(m(r, c));
    };
    for (const auto& m : left_maps) check(m);
    for (const auto& m : right_maps) check(m);
  }
}

namespace {

int point_index(const Rational& x, const std::vector<Rational>& points) {
  auto it = std::lower_bound(points.begin(), points.end(), x);
  if (it == points.end() || *it != x)
    throw RefinementError("endpoint " + format_rational(x) + " is not a stratification point");
  return static_cast<int>(it - points.begin()) + 1;
}

}  // namespace

std::pair<int, int> vertex_range(const Interval& interval, const std::vector<Rational>& points) {
  int n = static_cast<int>(points.size());
  int i = 0, j = 2 * n;
  const Endpoint& l = interval.left();
  if (l.is_finite()) {
    int k = point_index(l.value, points);
    i = l.closed ? 2 * k - 1 : 2 * k;
  }
  const Endpoint& r = interval.right();
  if (r.is_finite()) {
    int k = point_index(r.value, points);
    j = r.closed ? 2 * k - 1 : 2 * k - 2;
  }
  return {i, j};
}

Interval interval_of_range(int i, int j, const std::vector<Rational>& points) {
  int n = static_cast<int>(points.size());
  Endpoint l = Endpoint::neg_inf();
  if (i > 0) l = (i % 2 == 1) ? Endpoint::at(points[(i + 1) / 2 - 1], true) : Endpoint::at(points[i / 2 - 1], false);
  Endpoint r = Endpoint::pos_inf();
  if (j < 2 * n) r = (j % 2 == 1) ? Endpoint::at(points[(j + 1) / 2 - 1], true) : Endpoint::at(points[j / 2], false);
  return Interval::make(l, r);
}

std::vector<Rational> common_points(const std::vector<Interval>& intervals) {
  std::vector<Rational> pts;
  for (const Interval& iv : intervals) {
    if (iv.left().is_finite()) pts.push_back(iv.left().value);
    if (iv.right().is_finite()) pts.push_back(iv.right().value);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::vector<std::vector<int>> multiplicities_from_ranks(const std::vector<std::vector<int>>& rk) {
  int n = static_cast<int>(rk.size());
  auto at = [&](int i, int j) { return (i < 0 || j >= n || i > j) ? 0 : rk[i][j]; };
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m[i][j] = at(i, j) - at(i - 1, j) - at(i, j + 1) + at(i - 1, j + 1);
  return m;
}

std::vector<std::vector<int>> zigzag_rank_invariant(const ZigzagRep& rep) {
  rep.validate();
  return with_field(rep.field, [&](const auto& f) { return zigzag_rank_table(f, zigzag_quiver(f, rep)); });
}

GradedBarcode gabriel_decompose(const ZigzagRep& rep) {
  rep.validate();
  auto summands = with_field(rep.field, [&](const auto& f) { return zigzag_interval_summands(f, zigzag_quiver(f, rep)); });
  std::vector<Bar> bars;
  for (const auto& [range, mult] : summands)
    bars.push_back({interval_of_range(range.first, range.second, rep.points), 0, mult});
  return GradedBarcode(rep.field, std::move(bars));
}

ZigzagRep realize_rep(const GradedBarcode& bc, const std::vector<Rational>& points) {
  if (!bc.concentrated_in_degree_zero()) throw PreconditionError("realize_rep needs a degree-0 barcode");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i - 1] < points[i])) throw MalformedInput("points must be strictly increasing");
  int vertices = 2 * static_cast<int>(points.size()) + 1;
  // One basis vector per (bar copy, vertex in its range).
  std::vector<std::pair<int, int>> ranges;
  for (const Bar& b : bc.bars()) {
    auto r = vertex_range(b.interval, points);
    for (std::int64_t c = 0; c < b.multiplicity; ++c) ranges.push_back(r);
  }
  std::vector<std::vector<int>> index(ranges.size(), std::vector<int>(vertices, -1));
  ZigzagRep rep;
  rep.field = bc.field();
  rep.points = points;
  rep.dims.assign(vertices, 0);
  for (std::size_t b = 0; b < ranges.size(); ++b)
    for (int k = ranges[b].first; k <= ranges[b].second; ++k) index[b][k] = rep.dims[k]++;
  for (int src = 1; src < vertices; src += 2) {
    Matrix<Rational> l(rep.dims[src - 1], rep.dims[src]);
    Matrix<Rational> r(rep.dims[src + 1], rep.dims[src]);
    for (std::size_t b = 0; b < ranges.size(); ++b) {
      if (index[b][src] < 0) continue;
      if (index[b][src - 1] >= 0) l(index[b][src - 1], index[b][src]) = 1;
      if (index[b][src + 1] >= 0) r(index[b][src + 1], index[b][src]) = 1;
    }
    rep.left_maps.push_back(std::move(l));
    rep.right_maps.push_back(std::move(r));
  }
  return rep;
}

}  // namespace sheaf1d
