#include "sheaf1d/germ.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "sheaf1d/errors.hpp"
#include "sheaf1d/zigzag.hpp"

namespace sheaf1d {

namespace {

LinearConstraint lc(std::vector<Rational> coeffs, const Rational& rhs, bool strict) {
  return {std::move(coeffs), rhs, strict};
}

// |x1| < 1 and |y1| < 1 in (x1, x2, y1, y2).
std::vector<LinearConstraint> square_strip() {
  return {lc({1, 0, 0, 0}, 1, true), lc({-1, 0, 0, 0}, 1, true), lc({0, 0, 1, 0}, 1, true), lc({0, 0, -1, 0}, 1, true)};
}

int sign_of_step(int i) { return (i - 1) % 2 == 0 ? 1 : -1; }

// |x1 - σ y1| ≤ y2 - x2 - 2(i - 1).
std::vector<LinearConstraint> square_lower(int i) {
  Rational sigma = sign_of_step(i), c = 2 * (i - 1);
  return {lc({1, 1, -sigma, -1}, -c, false), lc({-1, 1, sigma, -1}, -c, false)};
}

void require_step(int i) {
  if (i < 1) throw PreconditionError("square kernel index starts at 1");
}

GradedVectorSpace germ_of(const ConicSheaf1D& f, int which) {
  GradedVectorSpace out;
  for (const auto& [d, part] : f.parts) out.add(d, which < 0 ? part.minus : which == 0 ? part.zero : part.plus);
  return out;
}

PolyCell interval_cell(const Interval& iv) {
  std::vector<LinearConstraint> cs;
  if (iv.left().is_finite()) cs.push_back(lc({-1}, -iv.left().value, !iv.left().closed));
  if (iv.right().is_finite()) cs.push_back(lc({1}, iv.right().value, !iv.right().closed));
  return PolyCell(1, std::move(cs));
}

}  // namespace

IndicatorComplex::IndicatorComplex(int dim, std::vector<IndicatorTerm> terms) : dim_(dim), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.cell.dim() != dim_) throw MalformedInput("indicator term has the wrong ambient dimension");
    if (t.multiplicity <= 0) throw MalformedInput("indicator multiplicity must be positive");
  }
  std::stable_sort(terms_.begin(), terms_.end(), [](const IndicatorTerm& a, const IndicatorTerm& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.cell.to_string() < b.cell.to_string();
  });
}

IndicatorComplex IndicatorComplex::indicator(const PolyCell& cell, int degree) {
  return IndicatorComplex(cell.dim(), {{cell, degree, 1}});
}

IndicatorComplex IndicatorComplex::shifted(int k) const {
  auto ts = terms_;
  for (auto& t : ts) t.degree -= k;
  return IndicatorComplex(dim_, std::move(ts));
}

GradedVectorSpace IndicatorComplex::stalk(const Point& p) const {
  GradedVectorSpace out;
  for (const auto& t : terms_)
    if (t.cell.contains(p)) out.add(t.degree, t.multiplicity);
  return out;
}

GradedVectorSpace compose_chain(const std::vector<IndicatorComplex>& kernels, const std::vector<int>& middle_dims,
                                const Point& x, const Point& z, const std::optional<Rational>& box) {
  std::size_t m = kernels.size();
  if (m == 0 || middle_dims.size() + 1 != m) throw PreconditionError("need one middle dimension between each pair of kernels");
  std::vector<int> dims{static_cast<int>(x.size())};
  dims.insert(dims.end(), middle_dims.begin(), middle_dims.end());
  dims.push_back(static_cast<int>(z.size()));
  for (std::size_t j = 0; j < m; ++j)
    if (kernels[j].dim() != dims[j] + dims[j + 1]) throw MalformedInput("kernel dimension does not match its factors");
  if (m == 1) {
    Point p = x;
    p.insert(p.end(), z.begin(), z.end());
    return kernels[0].stalk(p);
  }
  int total = 0;
  std::vector<int> offset;  // offset of y_j inside the fiber space
  for (int d : middle_dims) {
    offset.push_back(total);
    total += d;
  }
  if (total > PolyCell::kMaxDim) throw PreconditionError("fiber dimension exceeds 4");

  // Restrict each term to the fiber once.
  std::vector<std::vector<IndicatorTerm>> restricted(m);
  for (std::size_t j = 0; j < m; ++j)
    for (const auto& t : kernels[j].terms()) {
      PolyCell c = t.cell;
      int off;
      if (j == 0) {
        c = c.fix(0, x);
        off = 0;
      } else if (j + 1 == m) {
        c = c.fix(dims[j], z);
        off = offset[j - 1];
      } else {
        off = offset[j - 1];
      }
      restricted[j].push_back({c.embed(total, off), t.degree, t.multiplicity});
    }

  GradedVectorSpace out;
  std::function<void(std::size_t, const PolyCell&, int, std::int64_t)> rec = [&](std::size_t j, const PolyCell& cell, int deg,
                                                                               std::int64_t mult) {
    if (j == m) {
      out = out + rgamma_c(cell, box).shifted(-deg).scaled(mult);
      return;
    }
    for (const auto& t : restricted[j]) rec(j + 1, cell.intersect(t.cell), deg + t.degree, mult * t.multiplicity);
  };
  rec(0, PolyCell::whole_space(total), 0, 1);
  return out;
}

GradedVectorSpace compose_germ(const IndicatorComplex& k1, const IndicatorComplex& k2, const Point& x, const Point& z,
                               const std::optional<Rational>& box) {
  int dy = k1.dim() - static_cast<int>(x.size());
  if (dy < 0 || dy > 2 || k2.dim() != dy + static_cast<int>(z.size()))
    throw PreconditionError("middle factor must have the same dimension ≤ 2 for both kernels");
  return compose_chain({k1, k2}, {dy}, x, z, box);
}

PolyCell geodesic_ball_kernel(const Rational& s) {
  if (s <= 0) throw PreconditionError("ball radius must be positive");
  return PolyCell(2, {lc({1, -1}, s, true), lc({-1, 1}, s, true)});
}

PolyCell geodesic_open_cone() {
  return PolyCell(3, {lc({0, 0, -1}, 0, true), lc({1, -1, -1}, 0, true), lc({-1, 1, -1}, 0, true)});
}

PolyCell geodesic_closed_cone() {
  return PolyCell(3, {lc({0, 0, 1}, 0, false), lc({1, -1, 1}, 0, false), lc({-1, 1, 1}, 0, false)});
}

PolyCell square_w() { return square_w_shift(1); }

PolyCell square_w_shift(int i) {
  require_step(i);
  auto cs = square_strip();
  auto low = square_lower(i);
  cs.insert(cs.end(), low.begin(), low.end());
  return PolyCell(4, std::move(cs));
}

PolyCell square_c(int i) {
  require_step(i);
  Rational sigma = sign_of_step(i), top = 2 + 2 * (i - 1);
  auto cs = square_strip();
  auto low = square_lower(i);
  cs.insert(cs.end(), low.begin(), low.end());
  // y2 - x2 - 2(i - 1) < 2 - |x1 + σ y1|.
  cs.push_back(lc({1, -1, sigma, 1}, top, true));
  cs.push_back(lc({-1, -1, -sigma, 1}, top, true));
  return PolyCell(4, std::move(cs));
}

GradedVectorSpace square_kernel_expected(int m, const Point& p) {
  if (m < 1) throw PreconditionError("square kernel needs m ≥ 1");
  GradedVectorSpace out;
  for (int i = 1; i <= m - 1; ++i)
    if (square_c(i).contains(p)) out.add(i - 1, 1);
  if (square_w_shift(m).contains(p)) out.add(m - 1, 1);
  return out;
}

GradedVectorSpace square_kernel_stalk(int m, const Point& p) {
  if (m < 1 || m > 3) throw PreconditionError("square kernel stalks are computed for m = 1, 2, 3");
  if (p.size() != 4) throw MalformedInput("square kernel points live in R^4");
  for (int i = 1; i <= m; ++i)
    if (square_w_shift(i).on_boundary(p) || square_c(i).on_boundary(p))
      throw BoundaryPoint("point lies on the boundary of W_" + std::to_string(i) + " or C_" + std::to_string(i));
  auto w = IndicatorComplex::indicator(square_w());
  std::vector<IndicatorComplex> chain(m, w);
  Point x{p[0], p[1]}, z{p[2], p[3]};
  return compose_chain(chain, std::vector<int>(m - 1, 2), x, z);
}

GradedBarcode kinf_line_barcode(const Rational& x1, const Rational& x2, const Rational& y1, const Rational& window,
                                const FieldSpec& field) {
  if (window < 2) throw PreconditionError("window must be at least 2 to see any C_i");
  std::vector<Bar> bars;
  for (int i = 1; 2 * i <= window; ++i) {
    auto iv = cell_interval(square_c(i).fix(0, {x1, x2, y1}));
    if (iv) bars.push_back({*iv, i - 1, 1});
  }
  return GradedBarcode(field, std::move(bars));
}

void ConicSheaf1D::validate() const {
  for (const auto& [d, p] : parts) {
    if (p.minus < 0 || p.zero < 0 || p.plus < 0) throw MalformedInput("conic stalk dimensions must be non-negative");
    if (p.rho_minus.rows() != p.minus || p.rho_minus.cols() != p.zero || p.rho_plus.rows() != p.plus ||
        p.rho_plus.cols() != p.zero)
      throw MalformedInput("conic generization maps have the wrong shape");
  }
}

GradedVectorSpace ConicSheaf1D::germ_minus() const { return germ_of(*this, -1); }
GradedVectorSpace ConicSheaf1D::germ_zero() const { return germ_of(*this, 0); }
GradedVectorSpace ConicSheaf1D::germ_plus() const { return germ_of(*this, 1); }

GradedBarcode ConicSheaf1D::barcode() const {
  validate();
  GradedBarcode out(field);
  for (const auto& [d, p] : parts) {
    ZigzagRep rep;
    rep.field = field;
    rep.points = {Rational(0)};
    rep.dims = {p.minus, p.zero, p.plus};
    rep.left_maps = {p.rho_minus};
    rep.right_maps = {p.rho_plus};
    out = out.direct_sum(gabriel_decompose(rep).shifted(-d));
  }
  return out;
}

ConicSheaf1D ConicSheaf1D::from_barcode(const GradedBarcode& b) {
  ConicSheaf1D out;
  out.field = b.field();
  std::map<int, std::vector<Bar>> by_degree;
  for (const auto& bar : b.bars()) by_degree[bar.degree].push_back({bar.interval, 0, bar.multiplicity});
  for (const auto& [d, bars] : by_degree) {
    auto rep = realize_rep(GradedBarcode(b.field(), bars), {Rational(0)});
    out.parts[d] = {rep.dims[0], rep.dims[1], rep.dims[2], rep.left_maps[0], rep.right_maps[0]};
  }
  return out;
}

ConicSheaf1D fourier_sato_1d(const ConicSheaf1D& f, bool antipodal) {
  f.validate();
  // Ray {ν : νξ ≤ 0} (or ≥ 0) for ξ = -1, 0, 1; conic sets are stable
  // under any truncation box, so R = 1 suffices.
  auto ray = [&](int xi) -> Interval {
    if (xi == 0) return Interval::real_line();
    bool nonpositive = (xi > 0) != antipodal;
    return nonpositive ? Interval::until(0, true) : Interval::from(0, true);
  };
  std::vector<Bar> out;
  const GradedBarcode source = f.barcode();
  for (const auto& bar : source.bars()) {
    GradedVectorSpace germs[3];
    for (int xi = -1; xi <= 1; ++xi) {
      auto cut = intersect(bar.interval, ray(xi));
      if (cut) germs[xi + 1] = rgamma_c(interval_cell(*cut), Rational(1)).shifted(-bar.degree);
    }
    std::optional<int> degree;
    bool present[3];
    for (int s = 0; s < 3; ++s) {
      present[s] = !germs[s].is_zero();
      for (const auto& [d, n] : germs[s].dims()) {
        if (n != 1 || (degree && *degree != d)) throw std::logic_error("transform of a conic bar is not a single bar");
        degree = d;
      }
    }
    if (!degree) continue;
    if (present[0] && present[2] && !present[1]) throw std::logic_error("transform support is not convex");
    Endpoint lo = present[0] ? Endpoint::neg_inf() : Endpoint::at(0, present[1]);
    Endpoint hi = present[2] ? Endpoint::pos_inf() : Endpoint::at(0, present[1]);
    out.push_back({Interval::make(lo, hi), *degree, bar.multiplicity});
  }
  auto result = ConicSheaf1D::from_barcode(GradedBarcode(f.field, std::move(out)));
  result.field = f.field;
  return result;
}

}  // namespace sheaf1d
