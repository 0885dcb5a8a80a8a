#include "doctest.h"

#include "sheaf1d/calculus.hpp"
#include "sheaf1d/microsupport.hpp"
#include "support.hpp"

using namespace testing_support;

namespace {

CovectorPoint plus(std::int64_t x) { return {q(x), Sign::Plus}; }
CovectorPoint minus(std::int64_t x) { return {q(x), Sign::Minus}; }

// Every candidate ray over the endpoints and a few generic points.
std::vector<CovectorPoint> candidate_points(const GradedBarcode& f) {
  std::vector<CovectorPoint> pts;
  std::vector<Interval> all;
  for (const auto& b : f.bars()) all.push_back(b.interval);
  auto xs = common_points(all);
  xs.push_back(q(-7, 3));
  xs.push_back(q(13, 5));
  for (const auto& x : xs)
    for (Sign s : {Sign::Plus, Sign::Minus}) pts.push_back({x, s});
  return pts;
}

GradedBarcode decompose_quiver(const QuiverRep<PrimeField>& rep, const std::vector<Rational>& pts) {
  PrimeField f(2);
  std::vector<Bar> bars;
  for (const auto& [range, mult] : zigzag_interval_summands(f, rep))
    bars.push_back({interval_of_range(range.first, range.second, pts), 0, mult});
  return GradedBarcode(FieldSpec::prime(2), std::move(bars));
}

bool rays_within(const MicroSupport1D& a, const MicroSupport1D& b, const MicroSupport1D& c) {
  for (const auto& r : a.rays)
    if (!contains_ray(b, r) && !contains_ray(c, r)) return false;
  return true;
}

}  // namespace

TEST_CASE("ss examples") {
  CHECK(ss(barcode({{"(-inf,inf)", 3}})).rays.empty());
  CHECK(ss(barcode({{"[0,inf)"}})).rays == std::vector<CovectorPoint>{plus(0)});
  CHECK(ss(barcode({{"(0,1)"}})).rays == std::vector<CovectorPoint>{minus(0), plus(1)});
  CHECK(ss(barcode({{"[0,1]"}})).rays == std::vector<CovectorPoint>{plus(0), minus(1)});
  auto s = ss(barcode({{"[0,1)"}, {"(1,2]"}, {"[5,6)"}}));
  CHECK(s.zero_section_support == std::vector<Interval>{iv("[0,2]"), iv("[5,6]")});
  // Degree and multiplicity do not matter.
  CHECK(ss(barcode({{"[0,1)", 4, 3}})) == ss(barcode({{"[0,1)"}})));
}

TEST_CASE("microgerm examples") {
  CHECK(microgerm(barcode({{"(-inf,inf)"}}), plus(0)).is_zero());
  CHECK(microgerm(barcode({{"[0,1)"}}), plus(0)) == GradedVectorSpace::single(0));
  CHECK(microgerm(barcode({{"[0,1)"}}), plus(1)) == GradedVectorSpace::single(1));
  CHECK(microgerm(barcode({{"[0,1)", 2}}), plus(1)) == GradedVectorSpace::single(3));
  CHECK(microgerm(barcode({{"[0,1)"}}), minus(0)).is_zero());
  CHECK(microgerm(barcode({{"(0,1)"}}), minus(0)) == GradedVectorSpace::single(1));
}

TEST_CASE("simplicity and purity") {
  CHECK(is_simple_at(barcode({{"[0,1)"}}), plus(0)));
  auto two = barcode({{"[0,1)"}, {"[0,2)"}});
  CHECK(is_pure_at(two, plus(0)));
  CHECK_FALSE(is_simple_at(two, plus(0)));
  CHECK(classify_germ(two, plus(0)) == GermKind::PureNotSimple);
  auto line = barcode({{"(-inf,inf)"}});
  CHECK(classify_germ(line, plus(0)) == GermKind::NotInSupport);
  CHECK_FALSE(is_simple_at(line, plus(0)));
  CHECK_FALSE(is_pure_at(line, plus(0)));
  CHECK(classify_germ(barcode({{"[0,1)"}, {"(-1,0)"}}), plus(0)) == GermKind::NotPure);
}

TEST_CASE("germ vanishes exactly off the microsupport") {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    auto f = random_barcode(rng, FieldSpec::prime(2), 4, -1, 1);
    auto s = ss(f);
    for (const auto& p : candidate_points(f))
      CHECK_MESSAGE(microgerm(f, p).is_zero() != contains_ray(s, p), f.to_string() << " at " << p.to_string());
  }
}

TEST_CASE("duality exchanges the microsupport with its antipode") {
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    auto f = random_barcode(rng, FieldSpec::prime(2), 4, -1, 1);
    CHECK(ss(dual_prime(f)) == antipode(ss(f)));
  }
}

TEST_CASE("triangular inequality on short exact sequences") {
  Rng rng(23);
  PrimeField f(2);
  int checked = 0;
  for (int t = 0; t < 120; ++t) {
    auto a = random_barcode(rng, FieldSpec::prime(2), 3, 0, 0, 6);
    auto b = random_barcode(rng, FieldSpec::prime(2), 3, 0, 0, 6);
    std::vector<Interval> all;
    for (const auto& x : a.bars()) all.push_back(x.interval);
    for (const auto& x : b.bars()) all.push_back(x.interval);
    auto pts = common_points(all);
    auto qa = zigzag_quiver(f, realize_rep(a, pts));
    auto qb = zigzag_quiver(f, realize_rep(b, pts));
    auto homs = hom_basis(f, qa, qb);
    Morphism<PrimeField> phi;
    for (int k = 0; k < qa.vertex_count(); ++k) phi.push_back(zeros(f, qb.dims[k], qa.dims[k]));
    for (const auto& h : homs)
      if (coin(rng))
        for (int k = 0; k < qa.vertex_count(); ++k) phi[k] = add(f, phi[k], h[k]);
    // 0 → ker φ → A → im φ → 0 and 0 → im φ → B → coker φ → 0.
    auto sk = ss(decompose_quiver(kernel_rep(f, qa, phi), pts));
    auto si = ss(decompose_quiver(image_rep(f, qb, phi), pts));
    auto sc = ss(decompose_quiver(cokernel_rep(f, qb, phi), pts));
    auto sa = ss(a), sb = ss(b);
    for (const auto& [x, y, z] : {std::tuple{sk, sa, si}, std::tuple{sa, sk, si}, std::tuple{si, sk, sa},
                                  std::tuple{si, sb, sc}, std::tuple{sb, si, sc}, std::tuple{sc, si, sb}}) {
      CHECK(rays_within(x, y, z));
      ++checked;
    }
  }
  CHECK(checked == 720);
}

TEST_CASE("Morse lemma on sections over half-lines") {
  Rng rng(24);
  int applied = 0;
  for (int t = 0; t < 200; ++t) {
    auto f = random_barcode(rng, FieldSpec::prime(2), 3, -1, 1);
    Rational a = q(uniform(rng, -1, 9), 2), b = q(uniform(rng, -1, 9), 2);
    if (b < a) std::swap(a, b);
    bool blocked = false;
    for (const auto& r : ss(f).rays)
      if (r.sign == Sign::Plus && a <= r.base && r.base < b) blocked = true;
    if (blocked) continue;
    ++applied;
    CHECK(sections_below(f, b) == sections_below(f, a));
  }
  CHECK(applied > 20);
  // A + ray in [a,b) can break the isomorphism.
  CHECK_FALSE(sections_below(barcode({{"[0,1)"}}), q(1, 2)) == sections_below(barcode({{"[0,1)"}}), q(-1)));
}
