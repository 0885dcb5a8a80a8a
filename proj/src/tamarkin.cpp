#include "sheaf1d/tamarkin.hpp"

#include <algorithm>

#include "sheaf1d/calculus.hpp"
#include "sheaf1d/errors.hpp"
#include "sheaf1d/zigzag.hpp"

namespace sheaf1d {

bool is_tau_nonneg_bar(const Interval& bar) {
  bool left_ok = !bar.left().is_finite() || bar.left().closed;
  bool right_ok = !bar.right().is_finite() || !bar.right().closed;
  return left_ok && right_ok;
}

bool TauNonnegBarcode::accepts(const GradedBarcode& bc) {
  return std::all_of(bc.bars().begin(), bc.bars().end(), [](const Bar& b) { return is_tau_nonneg_bar(b.interval); });
}

TauNonnegBarcode::TauNonnegBarcode(GradedBarcode bc) : bc_(std::move(bc)) {
  for (const Bar& b : bc_.bars())
    if (!is_tau_nonneg_bar(b.interval))
      throw PreconditionError("bar " + b.interval.to_string() + " is not of tau>=0 form");
}

std::string EnergyValue::to_string() const { return infinite_ ? "inf" : format_rational(value_); }

bool operator<(const EnergyValue& a, const EnergyValue& b) {
  if (a.infinite_) return false;
  if (b.infinite_) return true;
  return a.value_ < b.value_;
}

namespace {

// Degree of RΓ_c(I ∩ (z - K)): 0 when compact, 1 when open, -1 when it
// vanishes.
int fiber_degree(const Interval& i, const Interval& kernel, const Rational& z) {
  // z - K reverses the kernel.
  Endpoint l = kernel.right(), r = kernel.left();
  auto flip = [&](Endpoint& e, Endpoint::Kind inf_kind) {
    if (e.is_finite()) e.value = z - e.value;
    else e.kind = inf_kind;
  };
  flip(l, Endpoint::Kind::NegInf);
  flip(r, Endpoint::Kind::PosInf);
  auto fiber = intersect(i, Interval::make(l, r));
  if (!fiber) return -1;
  if (fiber->is_bounded() && fiber->is_closed()) return 0;
  if (fiber->is_open()) return 1;
  return -1;
}

struct Piece {
  Endpoint left, right;
  int degree;
};

std::vector<Bar> convolve_bar(const Bar& bar, const Interval& kernel) {
  std::vector<Rational> breaks;
  for (const Endpoint* e : {&bar.interval.left(), &bar.interval.right()})
    for (const Endpoint* k : {&kernel.left(), &kernel.right()})
      if (e->is_finite() && k->is_finite()) breaks.push_back(e->value + k->value);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  // The fiber type is constant on each cell of the breakpoint stratification.
  std::vector<Piece> pieces;
  if (breaks.empty()) {
    pieces.push_back({Endpoint::neg_inf(), Endpoint::pos_inf(), fiber_degree(bar.interval, kernel, Rational(0))});
  } else {
    pieces.push_back({Endpoint::neg_inf(), Endpoint::at(breaks.front(), false), fiber_degree(bar.interval, kernel, breaks.front() - 1)});
    for (std::size_t k = 0; k < breaks.size(); ++k) {
      const Rational& b = breaks[k];
      pieces.push_back({Endpoint::at(b, true), Endpoint::at(b, true), fiber_degree(bar.interval, kernel, b)});
      if (k + 1 < breaks.size()) {
        Rational mid = (b + breaks[k + 1]) / 2;
        pieces.push_back({Endpoint::at(b, false), Endpoint::at(breaks[k + 1], false), fiber_degree(bar.interval, kernel, mid)});
      }
    }
    pieces.push_back({Endpoint::at(breaks.back(), false), Endpoint::pos_inf(), fiber_degree(bar.interval, kernel, breaks.back() + 1)});
  }

  std::vector<Bar> out;
  for (std::size_t k = 0; k < pieces.size();) {
    if (pieces[k].degree < 0) {
      ++k;
      continue;
    }
    std::size_t e = k;
    while (e + 1 < pieces.size() && pieces[e + 1].degree == pieces[k].degree) ++e;
    out.push_back({Interval::make(pieces[k].left, pieces[e].right), bar.degree + pieces[k].degree, bar.multiplicity});
    k = e + 1;
  }
  return out;
}

}  // namespace

GradedBarcode convolve(const GradedBarcode& f, const Interval& kernel) {
  std::vector<Bar> out;
  for (const Bar& b : f.bars()) {
    if (!b.interval.bounded_below() && !kernel.is_bounded())
      throw PropernessError("convolution of " + b.interval.to_string() + " with unbounded kernel " + kernel.to_string() +
                            " is not proper");
    auto bars = convolve_bar(b, kernel);
    out.insert(out.end(), bars.begin(), bars.end());
  }
  return GradedBarcode(f.field(), std::move(out));
}

GradedVectorSpace convolution_stalk_oracle(const Interval& i, const Interval& kernel, const Rational& z) {
  Endpoint l = kernel.right(), r = kernel.left();
  if (l.is_finite()) l.value = z - l.value;
  else l = Endpoint::neg_inf();
  if (r.is_finite()) r.value = z - r.value;
  else r = Endpoint::pos_inf();
  auto fiber = intersect(i, Interval::make(l, r));
  if (!fiber) return {};
  return sections_oracle(GradedBarcode(FieldSpec::prime(2), {{*fiber, 0, 1}}), true);
}

GradedVectorSpace stalk(const GradedBarcode& f, const Rational& z) {
  GradedVectorSpace out;
  for (const Bar& b : f.bars())
    if (b.interval.contains(z)) out.add(b.degree, b.multiplicity);
  return out;
}

GradedBarcode psi_slice(const TauNonnegBarcode& f, const Rational& u) {
  if (u <= 0) throw PreconditionError("slice parameter u must be positive");
  for (const Bar& b : f.barcode().bars())
    if (!b.interval.bounded_below()) throw PreconditionError("psi_slice needs support bounded below");
  return convolve(f.barcode(), Interval::closed_open(0, u));
}

bool tau_component_nonzero(const Interval& bar, const Rational& c) {
  if (!is_tau_nonneg_bar(bar)) throw PreconditionError("bar " + bar.to_string() + " is not of tau>=0 form");
  if (c < 0) throw PreconditionError("translation must be nonnegative");
  return hom_dim(bar, bar.translate(c)) == 1;
}

EnergyValue displacement_energy(const TauNonnegBarcode& f) {
  EnergyValue e = EnergyValue::finite(0);
  for (const Bar& b : f.barcode().bars()) {
    auto len = b.interval.length();
    EnergyValue t = len ? EnergyValue::finite(*len) : EnergyValue::infinite();
    if (e < t) e = t;
  }
  return e;
}

bool energy_attained_vanishing(const TauNonnegBarcode& f) {
  auto e = displacement_energy(f);
  if (e.is_infinite()) return false;
  for (const Bar& b : f.barcode().bars())
    if (tau_component_nonzero(b.interval, e.value())) return false;
  return true;
}

bool slice_triangle_exact(const TauNonnegBarcode& f, const Rational& u, std::string* detail) {
  auto psi = psi_slice(f, u);
  const FieldSpec& field = f.barcode().field();
  std::vector<Bar> from_reps;
  for (const Bar& b : f.barcode().bars()) {
    Interval shifted = b.interval.translate(u);
    auto pts = common_points({b.interval, shifted});
    GradedBarcode source(field, {{b.interval, 0, 1}}), target(field, {{shifted, 0, 1}});
    auto pieces = with_field(field, [&](const auto& fld) {
      auto qs = zigzag_quiver(fld, realize_rep(source, pts));
      auto qt = zigzag_quiver(fld, realize_rep(target, pts));
      auto homs = hom_basis(fld, qs, qt);
      Morphism<std::decay_t<decltype(fld)>> tau;
      if (homs.empty()) {
        for (int k = 0; k < qs.vertex_count(); ++k) tau.push_back(zeros(fld, qt.dims[k], qs.dims[k]));
      } else {
        tau = homs.front();
      }
      auto ker = zigzag_interval_summands(fld, kernel_rep(fld, qs, tau));
      auto coker = zigzag_interval_summands(fld, cokernel_rep(fld, qt, tau));
      return std::make_pair(ker, coker);
    });
    for (const auto& [range, mult] : pieces.first)
      from_reps.push_back({interval_of_range(range.first, range.second, pts), b.degree, mult * b.multiplicity});
    for (const auto& [range, mult] : pieces.second)
      from_reps.push_back({interval_of_range(range.first, range.second, pts), b.degree + 1, mult * b.multiplicity});
  }
  GradedBarcode expected(field, std::move(from_reps));
  bool ok = expected == psi;
  if (!ok && detail) *detail = "ker/coker of tau_u give " + expected.to_string() + ", psi_slice gives " + psi.to_string();
  return ok;
}

GradedBarcode flying_saucer_barcode(int count, const Rational& quarter, FieldSpec field) {
  std::vector<Bar> bars;
  for (int k = 0; k < count; ++k) bars.push_back({Interval::closed_open(quarter * k, quarter * (k + 1)), 2 * k, 1});
  return GradedBarcode(field, std::move(bars));
}

}  // namespace sheaf1d
