#include "sheaf1d/microsupport.hpp"

#include <algorithm>

#include "sheaf1d/calculus.hpp"
#include "sheaf1d/zigzag.hpp"

namespace sheaf1d {

std::string CovectorPoint::to_string() const {
  return "(" + format_rational(base) + "," + (sign == Sign::Plus ? "+" : "-") + ")";
}

std::strong_ordering operator<=>(const CovectorPoint& a, const CovectorPoint& b) {
  if (a.base < b.base) return std::strong_ordering::less;
  if (a.base > b.base) return std::strong_ordering::greater;
  return static_cast<int>(a.sign) <=> static_cast<int>(b.sign);
}

std::vector<Interval> union_of_closures(const std::vector<Interval>& intervals) {
  std::vector<Interval> closed;
  for (const Interval& i : intervals) closed.push_back(i.closure());
  std::sort(closed.begin(), closed.end());
  std::vector<Interval> merged;
  for (const Interval& i : closed) {
    if (!merged.empty()) {
      const Interval& last = merged.back();
      // Closed pieces overlap or touch when last.right >= i.left.
      if (compare_values(last.right(), i.left()) >= 0) {
        if (compare_values(i.right(), last.right()) > 0) merged.back() = Interval::make(last.left(), i.right());
        continue;
      }
    }
    merged.push_back(i);
  }
  return merged;
}

MicroSupport1D ss(const GradedBarcode& f) {
  MicroSupport1D s;
  std::vector<Interval> supports;
  for (const Bar& b : f.bars()) {
    supports.push_back(b.interval);
    const Endpoint& l = b.interval.left();
    const Endpoint& r = b.interval.right();
    if (l.is_finite()) s.rays.push_back({l.value, l.closed ? Sign::Plus : Sign::Minus});
    if (r.is_finite()) s.rays.push_back({r.value, r.closed ? Sign::Minus : Sign::Plus});
  }
  std::sort(s.rays.begin(), s.rays.end());
  s.rays.erase(std::unique(s.rays.begin(), s.rays.end()), s.rays.end());
  s.zero_section_support = union_of_closures(supports);
  return s;
}

MicroSupport1D antipode(const MicroSupport1D& s) {
  MicroSupport1D a = s;
  for (auto& r : a.rays) r.sign = r.sign == Sign::Plus ? Sign::Minus : Sign::Plus;
  std::sort(a.rays.begin(), a.rays.end());
  return a;
}

bool contains_ray(const MicroSupport1D& s, const CovectorPoint& p) {
  return std::binary_search(s.rays.begin(), s.rays.end(), p);
}

namespace {

// Germ of k_I at p: the kernel and cokernel of the restriction from the
// stalk at x to the arc on the side where the test function is negative.
GradedVectorSpace bar_germ(const Interval& interval, const CovectorPoint& p, const FieldSpec& field) {
  auto pts = common_points({interval, Interval::point(p.base)});
  auto rep = realize_rep(GradedBarcode(field, {{interval, 0, 1}}), pts);
  int k = static_cast<int>(std::lower_bound(pts.begin(), pts.end(), p.base) - pts.begin());
  const Matrix<Rational>& m = p.sign == Sign::Plus ? rep.left_maps[k] : rep.right_maps[k];
  return with_field(field, [&](const auto& fld) {
    int r = rank(fld, to_field_matrix(fld, m));
    GradedVectorSpace g;
    g.add(0, m.cols() - r);
    g.add(1, m.rows() - r);
    return g;
  });
}

}  // namespace

GradedVectorSpace microgerm(const GradedBarcode& f, const CovectorPoint& p) {
  GradedVectorSpace out;
  for (const Bar& b : f.bars()) out = out + bar_germ(b.interval, p, f.field()).shifted(-b.degree).scaled(b.multiplicity);
  return out;
}

GermKind classify_germ(const GradedBarcode& f, const CovectorPoint& p) {
  auto g = microgerm(f, p);
  if (g.is_zero()) return GermKind::NotInSupport;
  if (g.dims().size() > 1) return GermKind::NotPure;
  return g.total_dim() == 1 ? GermKind::Simple : GermKind::PureNotSimple;
}

bool is_simple_at(const GradedBarcode& f, const CovectorPoint& p) { return classify_germ(f, p) == GermKind::Simple; }

bool is_pure_at(const GradedBarcode& f, const CovectorPoint& p) {
  auto k = classify_germ(f, p);
  return k == GermKind::Simple || k == GermKind::PureNotSimple;
}

std::string to_string(GermKind kind) {
  switch (kind) {
    case GermKind::NotInSupport: return "p not in SS";
    case GermKind::Simple: return "simple";
    case GermKind::PureNotSimple: return "pure, not simple";
    case GermKind::NotPure: return "not pure";
  }
  return "";
}

GradedVectorSpace sections_below(const GradedBarcode& f, const Rational& b) {
  std::vector<Interval> all{Interval::point(b)};
  for (const Bar& x : f.bars()) all.push_back(x.interval);
  auto pts = common_points(all);
  auto open_ray = GradedBarcode(f.field(), {{Interval::until(b, false), 0, 1}});
  GradedVectorSpace out;
  with_field(f.field(), [&](const auto& fld) {
    auto qu = zigzag_quiver(fld, realize_rep(open_ray, pts));
    for (const Bar& x : f.bars()) {
      auto qx = zigzag_quiver(fld, realize_rep(GradedBarcode(f.field(), {{x.interval, 0, 1}}), pts));
      // RΓ(U; F) = RHom(k_U, F) for U open.
      out.add(x.degree, x.multiplicity * quiver_hom_dim(fld, qu, qx));
      out.add(x.degree + 1, x.multiplicity * quiver_ext1_dim(fld, qu, qx));
    }
  });
  return out;
}

}  // namespace sheaf1d
