#include <doctest.h>

#include "sheaf1d/calculus.hpp"
#include "sheaf1d/germ.hpp"
#include "sheaf1d/tamarkin.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

GradedVectorSpace gv(std::initializer_list<std::pair<const int, std::int64_t>> dims) { return GradedVectorSpace(dims); }

std::int64_t euler(const GradedVectorSpace& v) {
  std::int64_t s = 0;
  for (const auto& [k, n] : v.dims()) s += (k % 2 == 0 ? n : -n);
  return s;
}

Rational random_q(Rng& rng, int lo, int hi, int den) { return q(uniform(rng, lo * den, hi * den), den); }

// Product of random intervals with grid endpoints in [-2, 2].
struct RandomBox {
  std::vector<Interval> sides;
  PolyCell cell;
};

RandomBox random_box(Rng& rng, int d) {
  std::vector<Interval> sides;
  std::vector<LinearConstraint> cs;
  for (int i = 0; i < d; ++i) {
    Interval side = random_interval(rng, 8, false).translate(-2);
    sides.push_back(side);
    std::vector<Rational> up(d, 0), down(d, 0);
    up[i] = 1;
    down[i] = -1;
    cs.push_back({up, side.right().value, !side.right().closed});
    cs.push_back({down, -side.left().value, !side.left().closed});
  }
  return {sides, PolyCell(d, cs)};
}

// A random bounded cell: a box with a few extra cuts.
PolyCell random_cell(Rng& rng, int d, int extra) {
  auto cell = random_box(rng, d).cell;
  std::vector<LinearConstraint> cs = cell.constraints();
  for (int k = 0; k < extra; ++k) {
    std::vector<Rational> a(d);
    for (auto& x : a) x = uniform(rng, -2, 2);
    cs.push_back({a, q(uniform(rng, -4, 4), 2), coin(rng)});
  }
  return PolyCell(d, cs);
}

Matrix<Rational> random_unimodular(Rng& rng, int d) {
  Matrix<Rational> u(d, d, 0);
  for (int i = 0; i < d; ++i) u(i, i) = 1;
  for (int step = 0; step < 6; ++step) {
    int i = uniform(rng, 0, d - 1), j = uniform(rng, 0, d - 1);
    if (i == j) continue;
    int c = coin(rng) ? 1 : -1;
    for (int k = 0; k < d; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

// {(x, y) : y - x ∈ I} in ℝ².
PolyCell strip(const Interval& i) {
  std::vector<LinearConstraint> cs;
  if (i.left().is_finite()) cs.push_back({{1, -1}, -i.left().value, !i.left().closed});
  if (i.right().is_finite()) cs.push_back({{-1, 1}, i.right().value, !i.right().closed});
  return PolyCell(2, cs);
}

IndicatorComplex strip_complex(const GradedBarcode& b) {
  std::vector<IndicatorTerm> ts;
  for (const auto& bar : b.bars()) ts.push_back({strip(bar.interval), bar.degree, bar.multiplicity});
  return IndicatorComplex(2, ts);
}

Point random_point_in(Rng& rng, const PolyCell& cell, const std::vector<std::pair<int, int>>& ranges, int den) {
  for (;;) {
    Point p;
    for (auto [lo, hi] : ranges) p.push_back(random_q(rng, lo, hi, den));
    if (cell.contains(p)) return p;
  }
}

}  // namespace

TEST_CASE("rgamma_c on boxes") {
  for (int d = 1; d <= 4; ++d) {
    Point lo(d, 0), hi(d, 1);
    CHECK(rgamma_c(PolyCell::box(lo, hi, true)) == GradedVectorSpace::single(d));
    CHECK(rgamma_c(PolyCell::box(lo, hi, false)) == GradedVectorSpace::single(0));
  }
  PolyCell half_open(2, {{{1, 0}, 1, true}, {{-1, 0}, 0, false}, {{0, 1}, 1, true}, {{0, -1}, 0, false}});
  CHECK(rgamma_c(half_open).is_zero());
  CHECK(rgamma_c(PolyCell(0, {})) == GradedVectorSpace::single(0));
  CHECK(rgamma_c(PolyCell(1, {{{1}, -1, false}, {{-1}, 0, false}})).is_zero());
}

TEST_CASE("rgamma_c of boxes agrees with the Künneth product of interval cohomology") {
  Rng rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    int d = uniform(rng, 1, 4);
    auto box = random_box(rng, d);
    GradedVectorSpace expected = GradedVectorSpace::single(0);
    for (const auto& side : box.sides) {
      auto factor = sections(GradedBarcode(FieldSpec::prime(2), {{side, 0, 1}}), true);
      GradedVectorSpace prod;
      for (const auto& [a, m] : expected.dims())
        for (const auto& [b, n] : factor.dims()) prod.add(a + b, m * n);
      expected = prod;
    }
    CHECK_MESSAGE(rgamma_c(box.cell) == expected, box.cell.to_string());
  }
}

TEST_CASE("rgamma_c agrees with the order complex oracle") {
  Rng rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    int d = uniform(rng, 1, 3);
    auto cell = random_cell(rng, d, uniform(rng, 0, 2));
    CHECK_MESSAGE(rgamma_c(cell) == rgamma_c_order_complex(cell), cell.to_string());
  }
}

TEST_CASE("rgamma_c is invariant under unimodular changes of coordinates") {
  Rng rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    int d = uniform(rng, 2, 4);
    auto cell = random_cell(rng, d, uniform(rng, 0, 2));
    Point t(d);
    for (auto& x : t) x = random_q(rng, -3, 3, 4);
    auto moved = cell.transformed(random_unimodular(rng, d), t);
    CHECK_MESSAGE(rgamma_c(cell) == rgamma_c(moved), cell.to_string());
  }
}

TEST_CASE("rgamma_c is additive over a hyperplane cut and satisfies excision") {
  Rng rng(14);
  for (int trial = 0; trial < 80; ++trial) {
    int d = uniform(rng, 1, 3);
    auto a = random_cell(rng, d, uniform(rng, 0, 1));
    std::vector<Rational> h(d);
    for (auto& x : h) x = uniform(rng, -2, 2);
    Rational c = q(uniform(rng, -2, 2), 2);
    std::vector<Rational> minus_h(d);
    for (int i = 0; i < d; ++i) minus_h[i] = -h[i];
    PolyCell below(d, {{h, c, true}}), on(d, {{h, c, false}, {minus_h, -c, false}}), above(d, {{minus_h, -c, true}});
    PolyCell closed_part(d, {{h, c, false}});
    auto total = euler(rgamma_c(a));
    CHECK(total == euler(rgamma_c(a.intersect(below))) + euler(rgamma_c(a.intersect(on))) + euler(rgamma_c(a.intersect(above))));
    // Z = A ∩ {h ≤ c} is closed in A with complement A ∩ {h > c}.
    CHECK(total == euler(rgamma_c(a.intersect(closed_part))) + euler(rgamma_c(a.intersect(above))));
  }
}

TEST_CASE("unbounded cells need a stable truncation box") {
  PolyCell ray(1, {{{-1}, 0, false}});
  PolyCell line(1, {});
  CHECK_THROWS_AS(rgamma_c(ray), PreconditionError);
  CHECK(rgamma_c(ray, q(1)).is_zero());
  CHECK(rgamma_c(line, q(1)) == GradedVectorSpace::single(1));
  CHECK(rgamma_c(PolyCell(2, {}), q(1)) == GradedVectorSpace::single(2));
  PolyCell far_end(1, {{{1}, 3, false}});
  CHECK_THROWS_AS(rgamma_c(far_end, q(2)), UnstableTruncation);
  CHECK(rgamma_c(far_end, q(4)).is_zero());
  CHECK(is_bounded(PolyCell::box({0, 0}, {1, 1}, true)));
  CHECK_FALSE(is_bounded(PolyCell(2, {{{1, 0}, 1, false}, {{-1, 0}, 1, false}})));
  CHECK_THROWS_AS(PolyCell(2, {{{1}, 0, false}}), MalformedInput);
  CHECK_THROWS_AS(PolyCell(5, {}), MalformedInput);
}

TEST_CASE("cell_interval reads one-dimensional cells") {
  CHECK(*cell_interval(PolyCell(1, {{{1}, 2, true}, {{-2}, 0, false}})) == iv("[0,2)"));
  CHECK(*cell_interval(PolyCell(1, {{{1}, 2, false}, {{1}, 2, true}})) == iv("(-inf,2)"));
  CHECK_FALSE(cell_interval(PolyCell(1, {{{1}, 0, true}, {{-1}, 0, false}})).has_value());
  Rng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    auto i = random_interval(rng);
    auto back = cell_interval(strip(i).fix(0, {0}));
    REQUIRE(back.has_value());
    CHECK(*back == i);
    CHECK(rgamma_c(strip(i).fix(0, {0}), q(100)) == sections(GradedBarcode(FieldSpec::prime(2), {{i, 0, 1}}), true));
  }
}

TEST_CASE("geodesic kernels compose like balls of added radius") {
  auto ku = [](int s) { return IndicatorComplex::indicator(geodesic_ball_kernel(s)); };
  CHECK(compose_germ(ku(1), ku(2), {0}, {2}) == gv({{1, 1}}));
  CHECK(compose_germ(ku(1), ku(2), {0}, {4}).is_zero());
  CHECK(compose_germ(ku(1), ku(1), {0}, {q(3, 2)}) == gv({{1, 1}}));
  PolyCell left(2, {{{0, 1}, 0, false}, {{0, -1}, 1, false}});
  PolyCell right(2, {{{1, 0}, 3, false}, {{-1, 0}, -2, false}});
  CHECK(compose_germ(IndicatorComplex::indicator(left), IndicatorComplex::indicator(right), {0}, {0}).is_zero());

  Rng rng(16);
  for (int trial = 0; trial < 200; ++trial) {
    Rational s = q(uniform(rng, 1, 8), 2), t = q(uniform(rng, 1, 8), 2);
    Rational x = random_q(rng, -5, 5, 4), z = random_q(rng, -5, 5, 4);
    Rational gap = x > z ? x - z : z - x;
    if (gap == s + t) continue;
    auto lhs = compose_germ(IndicatorComplex::indicator(geodesic_ball_kernel(s)).shifted(1),
                            IndicatorComplex::indicator(geodesic_ball_kernel(t)).shifted(1), {x}, {z});
    auto rhs = IndicatorComplex::indicator(geodesic_ball_kernel(s + t)).shifted(1).stalk({x, z});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("compose_germ matches the one-dimensional barcode calculus") {
  Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    auto i = random_interval(rng, 8, false), j = random_interval(rng, 8, false);
    Rational x = random_q(rng, -3, 3, 2), z = random_q(rng, -3, 3, 2);
    auto got = compose_germ(IndicatorComplex::indicator(strip(i)), IndicatorComplex::indicator(strip(j)), {x}, {z});
    // y ∈ x + I and z - y ∈ J.
    auto fx = GradedBarcode(FieldSpec::prime(2), {{i.translate(x), 0, 1}});
    auto flipped = Interval::make({j.right().kind == Endpoint::Kind::Finite ? Endpoint::at(z - j.right().value, j.right().closed)
                                                                            : Endpoint::neg_inf()},
                                  {Endpoint::at(z - j.left().value, j.left().closed)});
    auto gz = GradedBarcode(FieldSpec::prime(2), {{flipped, 0, 1}});
    CHECK(got == sections(tensor(fx, gz), true));
  }
}

TEST_CASE("composition of translation kernels is associative") {
  Rng rng(18);
  auto field = FieldSpec::prime(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto i1 = random_interval(rng, 6, false), i2 = random_interval(rng, 6, false), i3 = random_interval(rng, 6, false);
    auto k1 = IndicatorComplex::indicator(strip(i1));
    auto k2 = IndicatorComplex::indicator(strip(i2));
    auto k3 = IndicatorComplex::indicator(strip(i3));
    auto k12 = strip_complex(convolve(GradedBarcode(field, {{i1, 0, 1}}), i2));
    auto k23 = strip_complex(convolve(GradedBarcode(field, {{i2, 0, 1}}), i3));
    for (int sample = 0; sample < 20; ++sample) {
      Rational x = random_q(rng, -2, 2, 4), z = random_q(rng, -2, 10, 4);
      auto left = compose_germ(k12, k3, {x}, {z});
      auto right = compose_germ(k1, k23, {x}, {z});
      auto direct = compose_chain({k1, k2, k3}, {1, 1}, {x}, {z});
      CHECK(left == right);
      CHECK(left == direct);
    }
  }
}

TEST_CASE("square kernel sets") {
  // C_1 is W minus q(A+) ∪ q(A-), q(A±) = {y2 - x2 ≥ 2 ∓ (x1 + y1)} on the strip.
  auto w = square_w();
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        for (int e = -6; e <= 10; ++e) {
          Point p{q(a, 4), q(b, 2), q(c, 4), q(e, 2)};
          Rational gap = p[3] - p[1], sum = p[0] + p[2];
          bool in_a_plus = gap >= 2 - sum, in_a_minus = gap >= 2 + sum;
          CHECK(square_c(1).contains(p) == (w.contains(p) && !in_a_plus && !in_a_minus));
          CHECK(square_w_shift(2).contains(p) == (w.contains(p) && in_a_plus && in_a_minus));
          // W_2 and C_2 are the images of W and C_1 under id × f.
          Point back{p[0], p[1], -p[2], p[3] - 2};
          CHECK(square_w_shift(2).contains(p) == w.contains(back));
          CHECK(square_c(2).contains(p) == square_c(1).contains(back));
          CHECK(square_w_shift(3).contains(p) == square_w_shift(2).contains(back));
        }
}

TEST_CASE("square kernel stalks") {
  // Interior of C_1: x = (0, 0), y = (0, 1).
  CHECK(square_kernel_stalk(2, {0, 0, 0, 1}) == gv({{0, 1}}));
  // Interior of W_2: y2 - x2 - 2 > |x1 + y1|.
  CHECK(square_kernel_stalk(2, {0, 0, 0, 3}) == gv({{1, 1}}));
  CHECK(square_kernel_stalk(2, {0, 0, 0, -1}).is_zero());
  CHECK(square_kernel_stalk(1, {0, 0, 0, 1}) == gv({{0, 1}}));
  CHECK_THROWS_AS(square_kernel_stalk(2, {0, 0, 0, 2}), BoundaryPoint);
  CHECK_THROWS_AS(square_kernel_stalk(2, {1, 0, 0, 3}), BoundaryPoint);
  CHECK_THROWS_AS(square_kernel_stalk(4, {0, 0, 0, 1}), PreconditionError);

  Rng rng(19);
  for (int m = 1; m <= 3; ++m) {
    int checked = 0;
    while (checked < (m == 3 ? 12 : 40)) {
      Point p{random_q(rng, -1, 1, 8), random_q(rng, -2, 2, 4), random_q(rng, -1, 1, 8), random_q(rng, -2, 8, 4)};
      GradedVectorSpace got;
      try {
        got = square_kernel_stalk(m, p);
      } catch (const BoundaryPoint&) {
        continue;
      }
      CHECK(got == square_kernel_expected(m, p));
      ++checked;
    }
  }
}

TEST_CASE("K_infinity line barcodes") {
  auto center = kinf_line_barcode(0, 0, 0, 12);
  CHECK(center.bar_count() == 6);
  for (const auto& b : center.bars()) CHECK(*b.interval.length() <= 4);
  CHECK(center.bars()[0].interval == iv("[0,2)"));
  CHECK(kinf_line_barcode(2, 0, 0, 12).empty());
  CHECK_THROWS_AS(kinf_line_barcode(0, 0, 0, q(3, 2)), PreconditionError);

  Rng rng(20);
  for (int trial = 0; trial < 50; ++trial) {
    auto bc = kinf_line_barcode(random_q(rng, -1, 1, 16), random_q(rng, -3, 3, 4), random_q(rng, -1, 1, 16), 10);
    for (const auto& b : bc.bars()) CHECK(*b.interval.length() <= 4);
    auto e = displacement_energy(TauNonnegBarcode(bc));
    CHECK(!e.is_infinite());
    CHECK(e.value() <= 4);
  }
}

TEST_CASE("Fourier-Sato transform on the line") {
  auto field = FieldSpec::prime(2);
  auto from = [&](const char* i, int d = 0) { return ConicSheaf1D::from_barcode(GradedBarcode(field, {{iv(i), d, 1}})); };
  CHECK(fourier_sato_1d(ConicSheaf1D{}).barcode().empty());

  auto half = fourier_sato_1d(from("[0,inf)"));
  CHECK(half.germ_plus() == gv({{0, 1}}));
  CHECK(half.germ_zero().is_zero());
  CHECK(half.germ_minus().is_zero());

  auto point = fourier_sato_1d(from("[0,0]"));
  CHECK(point.germ_minus() == gv({{0, 1}}));
  CHECK(point.germ_zero() == gv({{0, 1}}));
  CHECK(point.germ_plus() == gv({{0, 1}}));
  CHECK(point.barcode() == GradedBarcode(field, {{Interval::real_line(), 0, 1}}));

  // Every conic bar: germs from the one-dimensional calculus, and the
  // antipodal transform returns the input shifted by one.
  const char* conic[] = {"[0,0]", "(0,inf)", "[0,inf)", "(-inf,0)", "(-inf,0]", "(-inf,inf)"};
  for (const char* a : conic)
    for (int d = -1; d <= 1; ++d) {
      auto f = GradedBarcode(field, {{iv(a), d, 1}});
      auto t = fourier_sato_1d(ConicSheaf1D::from_barcode(f));
      auto ray_germ = [&](const char* ray) { return sections(tensor(f, barcode({{ray}})), true); };
      CHECK(t.germ_plus() == ray_germ("(-inf,0]"));
      CHECK(t.germ_minus() == ray_germ("[0,inf)"));
      CHECK(t.germ_zero() == ray_germ("(-inf,inf)"));
      CHECK(fourier_sato_1d(t, true).barcode() == f.shifted(-1));
    }

  // Random conic data with generization maps.
  Rng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    ConicSheaf1D f;
    for (int d = 0; d <= 1; ++d) {
      ConicDegreePart p;
      p.minus = uniform(rng, 0, 2);
      p.zero = uniform(rng, 0, 2);
      p.plus = uniform(rng, 0, 2);
      p.rho_minus = random_matrix(rng, p.minus, p.zero, 2);
      p.rho_plus = random_matrix(rng, p.plus, p.zero, 2);
      f.parts[d] = p;
    }
    auto back = fourier_sato_1d(fourier_sato_1d(f), true);
    CHECK(back.barcode() == f.barcode().shifted(-1));
    CHECK(back.germ_zero() == f.germ_zero().shifted(-1));
  }
}

TEST_CASE("global Hom on the arrangement face poset") {
  auto closed_square = IndicatorComplex::indicator(PolyCell::box({0, 0}, {1, 1}, false));
  CHECK(hom_global_poset(closed_square, closed_square, 4) == gv({{0, 1}}));
  auto open_square = IndicatorComplex::indicator(PolyCell::box({0, 0}, {1, 1}, true));
  // Hom(k_C, k_U) = RΓ_c(U) for the open square U inside the closed one C.
  CHECK(hom_global_poset(open_square, open_square, 4) == gv({{0, 1}}));
  CHECK(hom_global_poset(closed_square, open_square, 4) == gv({{2, 1}}));

  auto z = IndicatorComplex::indicator(geodesic_closed_cone());
  auto u = IndicatorComplex::indicator(geodesic_open_cone());
  auto hom = hom_global_poset(z, u, 2);
  CHECK(hom == gv({{2, 1}}));
  for (int k : {0, 1, 3}) CHECK(hom.dim(k) == 0);

  // Against the one-dimensional calculus for bounded intervals.
  Rng rng(22);
  for (int trial = 0; trial < 80; ++trial) {
    auto i = random_interval(rng, 6, false), j = random_interval(rng, 6, false);
    auto f = IndicatorComplex::indicator(strip(i).fix(0, {0}));
    auto g = IndicatorComplex::indicator(strip(j).fix(0, {0}), uniform(rng, -1, 1));
    auto expected = hom_complex(GradedBarcode(FieldSpec::prime(2), {{i, 0, 1}}),
                                GradedBarcode(FieldSpec::prime(2), {{j, g.terms()[0].degree, 1}}));
    CHECK(hom_global_poset(f, g, 8) == expected);
  }
}
