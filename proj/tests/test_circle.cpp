#include "doctest.h"

#include <set>

#include "sheaf1d/circle.hpp"
#include "sheaf1d/polynomial.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);

Matrix<Rational> mat(int rows, int cols, std::initializer_list<int> entries) {
  Matrix<Rational> m(rows, cols);
  auto it = entries.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = *it++;
  return m;
}

CircleSheaf sheaf(std::initializer_list<BarSpec> bars, std::map<int, Matrix<Rational>> local = {},
                  Rational c = 1) {
  std::vector<Bar> out;
  for (const auto& b : bars) out.push_back({iv(b.interval), b.degree, b.multiplicity});
  return CircleSheaf(F2, c, std::move(out), std::move(local));
}

}  // namespace

TEST_CASE("rational canonical form classifies 2x2 and 3x3 matrices over F2") {
  PrimeField f(2);
  for (int n : {2, 3}) {
    std::vector<FMatrix<PrimeField>> all, invertible;
    for (int bits = 0; bits < (1 << (n * n)); ++bits) {
      FMatrix<PrimeField> m = zeros(f, n, n);
      for (int i = 0; i < n * n; ++i) m(i / n, i % n) = (bits >> i) & 1;
      all.push_back(m);
      if (is_invertible(f, m)) invertible.push_back(m);
    }
    std::set<std::vector<std::uint32_t>> forms;
    for (const auto& a : all) {
      auto form = frobenius_form(f, a);
      // The form is similar to a.
      bool similar = false;
      for (const auto& p : invertible)
        if (multiply(f, p, a) == multiply(f, form, p)) {
          similar = true;
          break;
        }
      CHECK(similar);
      std::vector<std::uint32_t> key;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) key.push_back(form(i, j));
      forms.insert(key);
    }
    // Similarity classes of n×n matrices over F_q: q² + q for n = 2, q³ + q² + q for n = 3.
    CHECK(forms.size() == (n == 2 ? 6u : 14u));
  }
}

TEST_CASE("rational canonical form over Q") {
  RationalField f;
  Matrix<Rational> a = mat(3, 3, {2, 1, 0, 0, 2, 0, 0, 0, 3});
  auto inv = invariant_factors(f, a);
  REQUIRE(inv.size() == 1);
  // (x-2)²(x-3) = x³ - 7x² + 16x - 12
  CHECK(inv[0] == Poly<RationalField>{Rational(-12), Rational(16), Rational(-7), Rational(1)});
  Matrix<Rational> scalar = mat(2, 2, {5, 0, 0, 5});
  auto inv2 = invariant_factors(f, scalar);
  REQUIRE(inv2.size() == 2);
  CHECK(inv2[0] == inv2[1]);
}

TEST_CASE("decompose_circle examples") {
  CyclicRep zero;
  zero.points = {q(0)};
  zero.dims = {0, 0};
  zero.left_maps = {Matrix<Rational>()};
  zero.right_maps = {Matrix<Rational>()};
  CHECK(decompose_circle(zero).empty());

  CyclicRep constant;
  constant.points = {q(0)};
  constant.dims = {1, 1};
  constant.left_maps = {mat(1, 1, {1})};
  constant.right_maps = {mat(1, 1, {1})};
  auto cs = decompose_circle(constant);
  CHECK(cs.bars().empty());
  CHECK(cs.local_part().at(0) == mat(1, 1, {1}));

  // e_! k_[0,1/2) on {0, 1/2}: a line at 0 and on (0, 1/2), nothing else.
  CyclicRep half;
  half.points = {q(0), q(1, 2)};
  half.dims = {1, 1, 0, 0};
  half.left_maps = {mat(0, 1, {}), mat(1, 0, {})};
  half.right_maps = {mat(1, 1, {1}), mat(0, 0, {})};
  CHECK(decompose_circle(half) == sheaf({{"[0,1/2)"}}));
  CHECK(decompose_circle(half).to_string() == "{[0,1/2)}");
}

TEST_CASE("a bar wrapping around the circle") {
  // Two lifts of 0 and of 1/2 lie in [0,3/2], one lift of the arc (1/2,1).
  auto cs = sheaf({{"[0,3/2]"}}, {}, 1);
  auto rep = realize_circle(cs, {q(0), q(1, 2)});
  CHECK(rep.dims == std::vector<int>{2, 2, 2, 1});
  CHECK(decompose_circle(rep) == cs);
}

TEST_CASE("realize_circle examples") {
  auto empty = realize_circle(sheaf({}), {q(0)});
  CHECK(empty.dims == std::vector<int>{0, 0});

  auto single = realize_circle(sheaf({{"(1/4,3/4]"}}), {q(1, 4), q(3, 4)});
  CHECK(single.dims == std::vector<int>{0, 1, 1, 0});

  // Jordan block: the monodromy of the realization is similar to it.
  auto jordan = sheaf({}, {{0, mat(2, 2, {1, 1, 0, 1})}});
  auto rep = realize_circle(jordan, {q(0), q(1, 3)});
  CHECK(rep.dims == std::vector<int>{2, 2, 2, 2});
  CHECK(decompose_circle(rep) == jordan);
  PrimeField f(2);
  CHECK(frobenius_form(f, to_field_matrix(f, monodromy(rep))) == frobenius_form(f, to_field_matrix(f, mat(2, 2, {1, 1, 0, 1}))));

  CHECK_THROWS_AS(realize_circle(sheaf({{"[0,1/3)"}}), {q(0)}), RefinementError);
  CHECK_THROWS_AS(realize_circle(sheaf({{"[0,1/3)", 1}}), {q(0), q(1, 3)}), PreconditionError);
}

TEST_CASE("malformed cyclic reps are rejected") {
  CyclicRep rep;
  rep.points = {};
  CHECK_THROWS_AS(decompose_circle(rep), MalformedInput);
  rep.points = {q(0), q(3, 2)};
  rep.dims = {0, 0, 0, 0};
  rep.left_maps = rep.right_maps = {Matrix<Rational>(), Matrix<Rational>()};
  CHECK_THROWS_AS(decompose_circle(rep), MalformedInput);
  rep.points = {q(0), q(1, 2)};
  rep.dims = {1, 0, 0, 0};
  CHECK_THROWS_AS(decompose_circle(rep), MalformedInput);
  CHECK_THROWS_AS(sheaf({{"[0,inf)"}}), MalformedInput);
  CHECK_THROWS_AS(sheaf({}, {{0, mat(1, 1, {0})}}), MalformedInput);
}

TEST_CASE("circle bars are normalized modulo C") {
  CHECK(sheaf({{"[5/2,7/2)"}}) == sheaf({{"[1/2,3/2)"}}));
  CHECK(sheaf({{"(-1,1/2)"}}) == sheaf({{"(0,3/2)"}}));
  CHECK(sheaf({{"[0,1)"}, {"[1,2)"}}).bars().front().multiplicity == 2);
}

TEST_CASE("decompose and realize round trip on random cyclic reps") {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    CyclicRep rep = random_mixed_cyclic(rng, t);
    CircleSheaf cs = decompose_circle(rep);
    CyclicRep back = realize_circle(cs, rep.points);
    CHECK(back.dims == rep.dims);
    int steps = 2 * rep.point_count() * 6;
    CHECK(cover_rank_table(back, steps) == cover_rank_table(rep, steps));
    CHECK(decompose_circle(back) == cs);
    CHECK(decompose_circle(conjugate_cyclic(rng, rep)) == cs);
  }
}

TEST_CASE("local systems are classified by the conjugacy class of their monodromy") {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    CyclicRep rep = random_local_system(rng, uniform(rng, 1, 4));
    auto cs = decompose_circle(rep);
    CHECK(cs.bars().empty());
    PrimeField f(2);
    CHECK(to_field_matrix(f, cs.local_part().at(0)) == frobenius_form(f, to_field_matrix(f, monodromy(rep))));
  }
}

TEST_CASE("endo_algebra examples") {
  CHECK(endo_algebra(iv("[0,1/2]"), 1) == EndoAlgebra{1, 1, true});
  CHECK(endo_algebra(iv("[0,2)"), 1) == EndoAlgebra{2, 2, false});
  CHECK(endo_algebra(iv("[0,5/2)"), 1) == EndoAlgebra{3, 3, false});
  CHECK(endo_algebra(iv("(1/2,3]"), 1) == EndoAlgebra{3, 3, false});
  CHECK(endo_algebra(iv("(0,3)"), 1) == EndoAlgebra{1, 1, true});
  CHECK_THROWS_AS(endo_algebra(iv("[0,inf)"), 1), PreconditionError);
}

TEST_CASE("endo_algebra matches the oracle End for bars shorter than 4C") {
  for (const char* kind : {"[]", "[)", "(]", "()"}) {
    for (int a = 0; a < 3; ++a)
      for (int len = 0; len < 12; ++len) {
        Rational left = q(a, 3), right = left + q(len, 3);
        bool lc = kind[0] == '[', rc = kind[1] == ']';
        auto i = Interval::try_make(Endpoint::at(left, lc), Endpoint::at(right, rc));
        if (!i) continue;
        CAPTURE(i->to_string());
        CHECK(endo_algebra(*i, 1) == endo_algebra_oracle(*i, 1));
      }
  }
  CHECK(endo_algebra_oracle(iv("[0,5/2)"), 1, FieldSpec::rationals()) == EndoAlgebra{3, 3, false});
  CHECK(endo_algebra_oracle(iv("[0,3/2)"), 1, FieldSpec::prime(3)) == EndoAlgebra{2, 2, false});
}

TEST_CASE("hom_circle examples") {
  auto closed = sheaf({{"[0,1/2]"}});
  CHECK(hom_circle(closed, closed) == GradedVectorSpace::single(0, 1));
  auto wrap = sheaf({{"[0,2)"}});
  CHECK(hom_circle(wrap, wrap).dim(0) == 2);
  CHECK(hom_circle(wrap, wrap) == hom_circle_oracle(wrap, wrap));
  // Translating a bar by C changes nothing.
  auto j = sheaf({{"(1/4,3/4)"}});
  auto j_moved = CircleSheaf(F2, 1, {{iv("(5/4,7/4)"), 0, 1}});
  CHECK(hom_circle(closed, j) == hom_circle(closed, j_moved));
  auto constant = sheaf({}, {{0, mat(1, 1, {1})}});
  auto half = sheaf({{"[0,1/2)"}});
  CHECK(hom_circle(constant, half) == hom_circle_oracle(constant, half));
  CHECK(hom_circle(constant, half).is_zero());
  // H*(S¹) in degrees 0 and 1.
  CHECK(hom_circle(constant, constant) == GradedVectorSpace({{0, 1}, {1, 1}}));
  CHECK_THROWS_AS(hom_circle(closed, CircleSheaf(F2, 2, {{iv("[0,1]"), 0, 1}})), PreconditionError);
}

TEST_CASE("hom_circle matches the cyclic quiver oracle") {
  Rng rng(17);
  auto random_sheaf = [&]() {
    std::vector<Bar> bars;
    int nb = uniform(rng, 0, 2);
    for (int b = 0; b < nb; ++b)
      bars.push_back({random_interval(rng, 6, false).translate(q(uniform(rng, 0, 3), 4)), uniform(rng, 0, 1), 1});
    std::map<int, Matrix<Rational>> local;
    if (coin(rng, 0.4)) {
      int r = uniform(rng, 1, 2);
      local[uniform(rng, 0, 1)] = random_invertible(rng, r, 2);
    }
    return CircleSheaf(F2, 1, std::move(bars), std::move(local));
  };
  for (int t = 0; t < 150; ++t) {
    auto a = random_sheaf(), b = random_sheaf();
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    CHECK(hom_circle(a, b) == hom_circle_oracle(a, b));
  }
}

TEST_CASE("morphisms from the constant sheaf factor through a Jordan section") {
  for (int r = 1; r <= 3; ++r)
    for (int a = 0; a < 2; ++a)
      for (int len = 0; len <= 9; ++len) {
        Interval i = Interval::closed(q(a, 2), q(a, 2) + q(len, 3));
        CAPTURE(i.to_string());
        CHECK(factors_through_jordan_section(i, 1, r));
      }
  CHECK_THROWS_AS(factors_through_jordan_section(iv("[0,1)"), 1, 2), PreconditionError);
}
