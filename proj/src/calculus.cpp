#include "sheaf1d/calculus.hpp"

#include <set>

#include "sheaf1d/errors.hpp"
#include "sheaf1d/zigzag.hpp"

namespace sheaf1d {
namespace {

// K ⊆ I is closed in I when each open end of K is not a point of I.
bool closed_in(const Interval& k, const Interval& i) {
  if (k.left().is_finite() && !k.left().closed && i.contains(k.left().value)) return false;
  if (k.right().is_finite() && !k.right().closed && i.contains(k.right().value)) return false;
  return true;
}

// K ⊆ J is open in J when each closed end of K is also a closed end of J.
bool open_in(const Interval& k, const Interval& j) {
  if (k.left().is_finite() && k.left().closed && !(j.left().is_finite() && j.left().closed && j.left().value == k.left().value))
    return false;
  if (k.right().is_finite() && k.right().closed && !(j.right().is_finite() && j.right().closed && j.right().value == k.right().value))
    return false;
  return true;
}

template <class F>
QuiverRep<F> realize_quiver(const F& f, const GradedBarcode& bc, const std::vector<Rational>& points) {
  return zigzag_quiver(f, realize_rep(bc, points));
}

std::vector<Interval> intervals_of(const GradedBarcode& a, const GradedBarcode& b) {
  std::vector<Interval> out;
  for (const Bar& x : a.bars()) out.push_back(x.interval);
  for (const Bar& x : b.bars()) out.push_back(x.interval);
  return out;
}

std::set<int> degrees_of(const GradedBarcode& bc) {
  std::set<int> d;
  for (const Bar& b : bc.bars()) d.insert(b.degree);
  return d;
}

}  // namespace

int hom_dim(const Interval& i, const Interval& j) {
  auto k = intersect(i, j);
  if (!k) return 0;
  return closed_in(*k, i) && open_in(*k, j) ? 1 : 0;
}

HomExt interval_hom_ext_oracle(const Interval& i, const Interval& j, const FieldSpec& field) {
  auto pts = common_points({i, j});
  GradedBarcode bi(field, {{i, 0, 1}}), bj(field, {{j, 0, 1}});
  return with_field(field, [&](const auto& f) {
    auto qi = realize_quiver(f, bi, pts);
    auto qj = realize_quiver(f, bj, pts);
    return HomExt{quiver_hom_dim(f, qi, qj), quiver_ext1_dim(f, qi, qj)};
  });
}

int ext1_dim(const Interval& i, const Interval& j) {
  return interval_hom_ext_oracle(i, j, FieldSpec::prime(2)).ext1;
}

GradedVectorSpace hom_complex(const GradedBarcode& f, const GradedBarcode& g) {
  require_same_field(f.field(), g.field());
  GradedVectorSpace out;
  for (const Bar& a : f.bars())
    for (const Bar& b : g.bars()) {
      std::int64_t m = a.multiplicity * b.multiplicity;
      out.add(b.degree - a.degree, m * hom_dim(a.interval, b.interval));
      out.add(b.degree - a.degree + 1, m * ext1_dim(a.interval, b.interval));
    }
  return out;
}

GradedVectorSpace hom_complex_oracle(const GradedBarcode& f, const GradedBarcode& g) {
  require_same_field(f.field(), g.field());
  auto pts = common_points(intervals_of(f, g));
  GradedVectorSpace out;
  with_field(f.field(), [&](const auto& fld) {
    for (int d : degrees_of(f))
      for (int e : degrees_of(g)) {
        auto qf = realize_quiver(fld, f.degree_part(d).shifted(d), pts);
        auto qg = realize_quiver(fld, g.degree_part(e).shifted(e), pts);
        out.add(e - d, quiver_hom_dim(fld, qf, qg));
        out.add(e - d + 1, quiver_ext1_dim(fld, qf, qg));
      }
  });
  return out;
}

GradedBarcode tensor(const GradedBarcode& f, const GradedBarcode& g) {
  require_same_field(f.field(), g.field());
  std::vector<Bar> bars;
  for (const Bar& a : f.bars())
    for (const Bar& b : g.bars())
      if (auto k = intersect(a.interval, b.interval))
        bars.push_back({*k, a.degree + b.degree, a.multiplicity * b.multiplicity});
  return GradedBarcode(f.field(), std::move(bars));
}

GradedBarcode dual_prime(const GradedBarcode& f) {
  std::vector<Bar> bars;
  for (const Bar& b : f.bars()) {
    // The skyscraper at a point is self-dual up to a shift: i^!k = k[-1].
    if (b.interval.is_singleton()) {
      bars.push_back({b.interval, 1 - b.degree, b.multiplicity});
      continue;
    }
    Endpoint l = b.interval.left(), r = b.interval.right();
    if (l.is_finite()) l.closed = !l.closed;
    if (r.is_finite()) r.closed = !r.closed;
    bars.push_back({Interval::make(l, r), -b.degree, b.multiplicity});
  }
  return GradedBarcode(f.field(), std::move(bars));
}

GradedVectorSpace sections(const GradedBarcode& f, bool compact_support) {
  GradedVectorSpace out;
  for (const Bar& b : f.bars()) {
    const Interval& i = b.interval;
    if (compact_support) {
      if (i.is_bounded() && i.is_closed()) out.add(b.degree, b.multiplicity);
      else if (i.is_open()) out.add(b.degree + 1, b.multiplicity);
    } else {
      if (i.is_closed()) out.add(b.degree, b.multiplicity);
      else if (i.is_bounded() && i.is_open()) out.add(b.degree + 1, b.multiplicity);
    }
  }
  return out;
}

GradedVectorSpace sections_oracle(const GradedBarcode& f, bool compact_support) {
  auto pts = common_points(intervals_of(f, GradedBarcode(f.field())));
  GradedBarcode line(f.field(), {{Interval::real_line(), 0, 1}});
  GradedVectorSpace out;
  with_field(f.field(), [&](const auto& fld) {
    auto ql = realize_quiver(fld, line, pts);
    for (int d : degrees_of(f)) {
      auto q = realize_quiver(fld, f.degree_part(d).shifted(d), pts);
      if (compact_support) {
        // Poincaré–Verdier duality on R: H^i_c(F) ≅ Ext^{1-i}(F, k_R)^*.
        out.add(d + 1, quiver_hom_dim(fld, q, ql));
        out.add(d, quiver_ext1_dim(fld, q, ql));
      } else {
        out.add(d, quiver_hom_dim(fld, ql, q));
        out.add(d + 1, quiver_ext1_dim(fld, ql, q));
      }
    }
  });
  return out;
}

bool is_prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

std::uint64_t extension_class_count(int ext_dim, std::uint64_t q) {
  if (ext_dim < 0) throw PreconditionError("ext_dim must be nonnegative");
  if (!is_prime_power(q)) throw PreconditionError("field size must be a prime power, got " + std::to_string(q));
  // 1 + (q^e - 1)/(q - 1) = 1 + q^0 + ... + q^{e-1}.
  unsigned __int128 total = 1, power = 1;
  for (int i = 0; i < ext_dim; ++i) {
    total += power;
    if (total > UINT64_MAX) throw PreconditionError("extension class count overflows 64 bits");
    power *= q;
  }
  return static_cast<std::uint64_t>(total);
}

}  // namespace sheaf1d
