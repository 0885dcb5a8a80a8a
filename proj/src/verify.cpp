#include "sheaf1d/verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "sheaf1d/calculus.hpp"
#include "sheaf1d/circle.hpp"
#include "sheaf1d/errors.hpp"
#include "sheaf1d/generators.hpp"
#include "sheaf1d/germ.hpp"
#include "sheaf1d/microsupport.hpp"
#include "sheaf1d/orbit.hpp"
#include "sheaf1d/tamarkin.hpp"
#include "sheaf1d/zigzag.hpp"

namespace sheaf1d::verify {

namespace {

using namespace sheaf1d::gen;

// Counts checks and keeps the first failure.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checks_;
    if (!ok && failures_++ == 0) first_failure_ = describe();
  }
  int checks() const { return checks_; }
  int failures() const { return failures_; }
  const std::string& first_failure() const { return first_failure_; }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::string first_failure_;
};

struct Spec {
  const char* id;
  const char* title;
  const char* anchor;
  int default_samples;
  double time_limit_seconds;
  // Returns a summary of what was checked beyond the tally.
  std::function<std::string(Rng&, int samples, Tally&)> body;
};

Rng seeded(std::uint64_t seed, int check_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(check_index)};
  return Rng(seq);
}

std::string str(const Rational& r) { return format_rational(r); }

CheckResult run_check(const Spec& spec, int index, const Options& options) {
  CheckResult r;
  r.id = spec.id;
  r.title = spec.title;
  r.anchor = spec.anchor;
  r.samples = spec.default_samples == 0 ? 0 : options.samples.value_or(spec.default_samples);
  r.time_limit_seconds = spec.time_limit_seconds;
  Tally tally;
  std::string summary;
  auto start = std::chrono::steady_clock::now();
  try {
    Rng rng = seeded(options.seed, index);
    summary = spec.body(rng, r.samples, tally);
  } catch (const std::exception& e) {
    tally.expect(false, [&] { return std::string("exception: ") + e.what(); });
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.within_time_limit = spec.time_limit_seconds <= 0 || r.seconds < spec.time_limit_seconds;
  r.passed = tally.failures() == 0 && tally.checks() > 0 && r.within_time_limit;
  std::ostringstream detail;
  detail << tally.checks() << " checks, " << tally.failures() << " failed";
  if (!summary.empty()) detail << "; " << summary;
  if (tally.failures() > 0) detail << "; first failure: " << tally.first_failure();
  if (tally.checks() == 0) detail << "; nothing was checked";
  if (!r.within_time_limit) detail << "; over the time limit";
  r.detail = detail.str();
  return r;
}

// A1

std::string gabriel_roundtrip(Rng& rng, int samples, Tally& t) {
  for (int s = 0; s < samples; ++s) {
    auto rep = random_zigzag(rng, s % 2 ? 3 : 2);
    auto bc = gabriel_decompose(rep);
    auto back = realize_rep(bc, rep.points);
    auto where = [&] { return "sample " + std::to_string(s) + ", barcode " + bc.to_string(); };
    t.expect(back.dims == rep.dims, where);
    t.expect(zigzag_rank_invariant(back) == zigzag_rank_invariant(rep), where);
    t.expect(gabriel_decompose(back) == bc, where);
  }
  return "reps over F2 and F3 with at most 8 points and total dimension 40";
}

// A2

std::string hom_table(Rng& rng, int samples, Tally& t) {
  for (int s = 0; s < samples; ++s) {
    auto a = random_interval(rng), b = random_interval(rng);
    auto field = s % 2 ? FieldSpec::prime(3) : FieldSpec::prime(2);
    auto oracle = interval_hom_ext_oracle(a, b, field);
    auto where = [&] { return a.to_string() + " -> " + b.to_string(); };
    t.expect(hom_dim(a, b) == oracle.hom, where);
    t.expect(ext1_dim(a, b) == oracle.ext1, where);
  }
  for (int s = 0; s < samples; ++s) {
    auto field = coin(rng) ? FieldSpec::prime(2) : FieldSpec::prime(3);
    auto f = random_barcode(rng, field, 3, -1, 1);
    auto g = random_barcode(rng, field, 3, -1, 1);
    t.expect(hom_complex(f, g) == hom_complex_oracle(f, g), [&] { return f.to_string() + " -> " + g.to_string(); });
  }
  return "interval pairs and barcode pairs against the quiver oracle";
}

// A3

std::string energy(Rng& rng, int samples, Tally& t) {
  const FieldSpec f2 = FieldSpec::prime(2);
  for (int s = 0; s < samples; ++s) {
    Rational a(uniform(rng, -50, 50), uniform(rng, 1, 7));
    Rational b = a + Rational(uniform(rng, 1, 50), uniform(rng, 1, 7));
    auto f = TauNonnegBarcode(GradedBarcode(f2, {{Interval::closed_open(a, b), uniform(rng, -2, 2), uniform(rng, 1, 3)}}));
    auto where = [&] { return "[" + str(a) + "," + str(b) + ")"; };
    t.expect(displacement_energy(f) == EnergyValue::finite(b - a), where);
    t.expect(energy_attained_vanishing(f), where);
  }
  // Q stands in for π/2.
  const Rational quarter(11, 7);
  for (int count = 1; count <= 4; ++count)
    t.expect(displacement_energy(TauNonnegBarcode(flying_saucer_barcode(count, quarter, f2))) == EnergyValue::finite(quarter),
             [&] { return "flying saucer with " + std::to_string(count) + " bars"; });
  int sums = 2 * samples;
  for (int s = 0; s < sums; ++s) {
    auto f = random_tau_barcode(rng, 3, false), g = random_tau_barcode(rng, 3, false);
    Rational c(uniform(rng, -10, 10), 3);
    auto ef = displacement_energy(TauNonnegBarcode(f)), eg = displacement_energy(TauNonnegBarcode(g));
    auto where = [&] { return f.to_string() + " and " + g.to_string(); };
    t.expect(displacement_energy(TauNonnegBarcode(f.translated(c))) == ef, where);
    t.expect(displacement_energy(TauNonnegBarcode(f.direct_sum(g))) == (ef < eg ? eg : ef), where);
  }
  return std::to_string(samples) + " bars, the flying saucer with Q = 11/7, " + std::to_string(sums) +
         " barcodes for max and translation";
}

// A4

std::string projector(Rng& rng, int samples, Tally& t) {
  const auto half = Interval::from(0, true);
  for (int s = 0; s < samples; ++s) {
    auto f = random_barcode(rng, FieldSpec::prime(2), 4, -1, 1, 8, false);
    auto p = convolve(f, half);
    auto where = [&] { return f.to_string(); };
    t.expect(convolve(p, half) == p, where);
    t.expect((p == f) == TauNonnegBarcode::accepts(f), where);
    t.expect(TauNonnegBarcode::accepts(p), where);
  }
  for (int s = 0; s < samples; ++s) {
    auto f = random_tau_barcode(rng, 4, true);
    Rational u(uniform(rng, 1, 6), 2);
    t.expect(convolve(f, Interval::open_closed(0, u)).empty(), [&] { return f.to_string() + " * (0," + str(u) + "]"; });
  }
  for (int s = 0; s < samples; ++s) {
    auto f = TauNonnegBarcode(random_tau_barcode(rng, 3, true));
    Rational u(uniform(rng, 1, 12), 2);
    std::string detail;
    bool ok = slice_triangle_exact(f, u, &detail);
    t.expect(ok, [&] { return f.barcode().to_string() + " with u = " + str(u) + ": " + detail; });
  }
  return "idempotence, the (0,u] kernel and slice triangles";
}

// A5

std::string geodesic_composition(Rng& rng, int samples, Tally& t) {
  int drawn = 0, inside = 0;
  while (drawn < samples) {
    Rational s(uniform(rng, 1, 8), 2), u(uniform(rng, 1, 8), 2);
    Rational x = random_rational(rng, -5, 5, 4), z = random_rational(rng, -5, 5, 4);
    Rational gap = x > z ? x - z : z - x;
    if (gap == s + u) continue;
    ++drawn;
    bool near = gap < s + u;
    inside += near;
    auto got = compose_germ(IndicatorComplex::indicator(geodesic_ball_kernel(s)),
                            IndicatorComplex::indicator(geodesic_ball_kernel(u)), {x}, {z});
    auto expected = near ? GradedVectorSpace::single(1) : GradedVectorSpace();
    t.expect(got == expected, [&] {
      return "s = " + str(s) + ", t = " + str(u) + ", x = " + str(x) + ", z = " + str(z) + ": got " + got.to_string();
    });
  }
  return std::to_string(inside) + " samples with |x-z| < s+t";
}

// A6

std::string nonsplit_triangle(Rng&, int, Tally& t) {
  auto z = IndicatorComplex::indicator(geodesic_closed_cone());
  auto u = IndicatorComplex::indicator(geodesic_open_cone());
  auto hom = hom_global_poset(z, u, 2);
  t.expect(hom.dim(2) == 1, [&] { return "Hom(k_Z, k_U[2]) = " + hom.to_string(); });
  for (int k : {0, 1, 3}) t.expect(hom.dim(k) == 0, [&] { return "degree " + std::to_string(k) + " of " + hom.to_string(); });
  auto classes = extension_class_count(1, 2);
  t.expect(classes == 2, [&] { return "extension_class_count(1, 2) = " + std::to_string(classes); });
  return "Hom(k_Z, k_U[*]) = " + hom.to_string();
}

// A7

struct Stratum {
  const char* name;
  std::function<bool(const Point&)> member;
};

Point random_square_point(Rng& rng) {
  return {random_rational(rng, -2, 2, 16), random_rational(rng, -2, 2, 8), random_rational(rng, -2, 2, 16),
          random_rational(rng, -2, 9, 8)};
}

std::string square_projector(Rng& rng, int samples, Tally& t) {
  auto inside = [](const PolyCell& c) { return [c](const Point& p) { return c.contains(p); }; };
  const PolyCell c1 = square_c(1), c2 = square_c(2), w2 = square_w_shift(2), w3 = square_w_shift(3);
  std::ostringstream summary;
  for (int m : {2, 3}) {
    std::vector<Stratum> strata;
    strata.push_back({"C1", inside(c1)});
    if (m == 2) {
      strata.push_back({"W2", inside(w2)});
      strata.push_back({"outside", [&](const Point& p) { return !c1.contains(p) && !w2.contains(p); }});
    } else {
      strata.push_back({"C2", inside(c2)});
      strata.push_back({"W3", inside(w3)});
      strata.push_back(
          {"outside", [&](const Point& p) { return !c1.contains(p) && !c2.contains(p) && !w3.contains(p); }});
    }
    for (const auto& stratum : strata) {
      int hits = 0;
      long attempts = 0;
      while (hits < samples && attempts < 2000L * samples + 20000) {
        ++attempts;
        Point p = random_square_point(rng);
        if (!stratum.member(p)) continue;
        GradedVectorSpace got;
        try {
          got = square_kernel_stalk(m, p);
        } catch (const BoundaryPoint&) {
          continue;
        }
        ++hits;
        auto expected = square_kernel_expected(m, p);
        t.expect(got == expected, [&] {
          std::string s = "K_" + std::to_string(m) + " on " + stratum.name + " at (";
          for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + str(p[i]);
          return s + "): got " + got.to_string() + ", expected " + expected.to_string();
        });
        // The predicted stalk on a support stratum is a single k in one degree.
        if (std::string(stratum.name) == "outside") t.expect(got.is_zero(), [] { return "nonzero stalk outside the support"; });
        else t.expect(got.total_dim() == 1, [&] { return std::string("stalk on ") + stratum.name + " is " + got.to_string(); });
      }
      t.expect(hits == samples, [&] {
        return "only " + std::to_string(hits) + " interior points found on " + stratum.name + " for m = " + std::to_string(m);
      });
      summary << "m=" << m << " " << stratum.name << ":" << hits << " ";
    }
  }
  int lines = samples + samples / 4;
  Rational longest = 0;
  for (int s = 0; s < lines; ++s) {
    Rational x1 = random_rational(rng, -1, 1, 16), x2 = random_rational(rng, -3, 3, 4), y1 = random_rational(rng, -1, 1, 16);
    auto bc = kinf_line_barcode(x1, x2, y1, 10);
    auto where = [&] { return "line (" + str(x1) + "," + str(x2) + "," + str(y1) + ", *): " + bc.to_string(); };
    for (const auto& b : bc.bars()) {
      auto len = b.interval.length();
      t.expect(len && *len <= 4, where);
      if (len && *len > longest) longest = *len;
    }
    auto e = displacement_energy(TauNonnegBarcode(bc));
    t.expect(!e.is_infinite() && e.value() <= 4, where);
  }
  summary << "and " << lines << " vertical lines, longest bar " << str(longest);
  return summary.str();
}

// A8

std::string circle(Rng& rng, int samples, Tally& t) {
  for (int s = 0; s < samples; ++s) {
    CyclicRep rep = random_mixed_cyclic(rng, s);
    CircleSheaf cs = decompose_circle(rep);
    CyclicRep back = realize_circle(cs, rep.points);
    auto where = [&] { return "sample " + std::to_string(s) + ": " + cs.to_string(); };
    t.expect(back.dims == rep.dims, where);
    int steps = 2 * rep.point_count() * 6;
    t.expect(cover_rank_table(back, steps) == cover_rank_table(rep, steps), where);
    t.expect(decompose_circle(back) == cs, where);
    t.expect(decompose_circle(conjugate_cyclic(rng, rep)) == cs, where);
  }
  int bars = 0;
  for (const char* kind : {"[]", "[)", "(]", "()"})
    for (int a = 0; a < 3; ++a)
      for (int len = 0; len < 12; ++len) {
        Rational left(a, 3), right = left + Rational(len, 3);
        bool lc = kind[0] == '[', rc = kind[1] == ']';
        auto i = Interval::try_make(Endpoint::at(left, lc), Endpoint::at(right, rc));
        if (!i) continue;
        ++bars;
        auto e = endo_algebra(*i, 1);
        auto where = [&] { return "End of e_* k_" + i->to_string(); };
        t.expect(e == endo_algebra_oracle(*i, 1), where);
        if (lc == rc) t.expect(e == EndoAlgebra{1, 1, true}, where);
        else t.expect(e.dimension == e.nilpotency_index, where);
      }
  return std::to_string(bars) + " lifted bars against the explicit End";
}

// A9

std::string orbit(Rng& rng, int samples, Tally& t) {
  const FieldSpec f2 = FieldSpec::prime(2);
  for (int s = 0; s < samples; ++s) {
    auto f = random_barcode(rng, f2, 3, -1, 2), g = random_barcode(rng, f2, 3, -1, 2);
    auto where = [&] { return f.to_string() + " -> " + g.to_string(); };
    t.expect(orbit_hom_dim(f, g) == orbit_hom_dim_oracle(f, g), where);
    t.expect(orbit_hom_dim(f.shifted(1), g) == orbit_hom_dim(f, g), where);
  }
  for (int i = 0; i <= 10; ++i) t.expect(dualnumbers_ext(i) == 1, [&] { return "Ext^" + std::to_string(i) + "(k, k)"; });
  for (int s = 0; s < samples / 2; ++s) {
    auto f = random_barcode(rng, f2, 3, 0, 3), g = random_barcode(rng, f2, 3, 0, 3);
    t.expect(stabilization_bound_check(f, g, 12), [&] { return "stabilization for " + f.to_string() + " -> " + g.to_string(); });
  }
  for (int p = -3; p <= 3; ++p)
    for (int q = p; q <= 3; ++q)
      t.expect(lpq_triangle_check(p, q), [&] { return "L^{" + std::to_string(p) + "," + std::to_string(q) + "}"; });
  return "orbit pairs, Ext over the dual numbers, stabilization and the L^{p,q} triangles";
}

// A10

GradedBarcode decompose_f2(const QuiverRep<PrimeField>& rep, const std::vector<Rational>& pts) {
  std::vector<Bar> bars;
  for (const auto& [range, mult] : zigzag_interval_summands(PrimeField(2), rep))
    bars.push_back({interval_of_range(range.first, range.second, pts), 0, mult});
  return GradedBarcode(FieldSpec::prime(2), std::move(bars));
}

bool rays_within(const MicroSupport1D& a, const MicroSupport1D& b, const MicroSupport1D& c) {
  for (const auto& r : a.rays)
    if (!contains_ray(b, r) && !contains_ray(c, r)) return false;
  return true;
}

std::string microsupport(Rng& rng, int samples, Tally& t) {
  const FieldSpec f2 = FieldSpec::prime(2);
  int rays_checked = 0;
  for (int s = 0; s < samples; ++s) {
    auto f = random_barcode(rng, f2, 4, -1, 1);
    auto sf = ss(f);
    std::vector<Interval> all;
    for (const auto& b : f.bars()) all.push_back(b.interval);
    auto xs = common_points(all);
    xs.push_back(Rational(-7, 3));
    xs.push_back(Rational(13, 5));
    for (const auto& x : xs)
      for (Sign sign : {Sign::Plus, Sign::Minus}) {
        CovectorPoint p{x, sign};
        ++rays_checked;
        t.expect(microgerm(f, p).is_zero() != contains_ray(sf, p), [&] { return f.to_string() + " at " + p.to_string(); });
      }
    t.expect(ss(dual_prime(f)) == antipode(sf), [&] { return "duality on " + f.to_string(); });
  }
  PrimeField pf(2);
  for (int s = 0; s < samples; ++s) {
    auto a = random_barcode(rng, f2, 3, 0, 0, 6), b = random_barcode(rng, f2, 3, 0, 0, 6);
    std::vector<Interval> all;
    for (const auto& x : a.bars()) all.push_back(x.interval);
    for (const auto& x : b.bars()) all.push_back(x.interval);
    auto pts = common_points(all);
    auto qa = zigzag_quiver(pf, realize_rep(a, pts));
    auto qb = zigzag_quiver(pf, realize_rep(b, pts));
    Morphism<PrimeField> phi;
    for (int k = 0; k < qa.vertex_count(); ++k) phi.push_back(zeros(pf, qb.dims[k], qa.dims[k]));
    for (const auto& h : hom_basis(pf, qa, qb))
      if (coin(rng))
        for (int k = 0; k < qa.vertex_count(); ++k) phi[k] = add(pf, phi[k], h[k]);
    // 0 → ker φ → A → im φ → 0 and 0 → im φ → B → coker φ → 0.
    auto sk = ss(decompose_f2(kernel_rep(pf, qa, phi), pts));
    auto si = ss(decompose_f2(image_rep(pf, qb, phi), pts));
    auto sc = ss(decompose_f2(cokernel_rep(pf, qb, phi), pts));
    auto sa = ss(a), sb = ss(b);
    for (const auto& [x, y, z] : {std::tuple{sk, sa, si}, std::tuple{sa, sk, si}, std::tuple{si, sk, sa},
                                  std::tuple{si, sb, sc}, std::tuple{sb, si, sc}, std::tuple{sc, si, sb}})
      t.expect(rays_within(x, y, z), [&] { return "short exact sequences through " + a.to_string() + " -> " + b.to_string(); });
  }
  return std::to_string(rays_checked) + " candidate rays and " + std::to_string(2 * samples) + " short exact sequences";
}

const std::vector<Spec>& specs() {
  static const std::vector<Spec> all = {
      {"A1", "Gabriel roundtrip", "every indecomposable representation is Schur", 500, 60, gabriel_roundtrip},
      {"A2", "Hom table", "Hom(k_I, k_J) ≠ 0 iff I∩J is closed in I and open in J", 200, 0, hom_table},
      {"A3", "displacement energy", "e(k_{[a,b[}) = b−a", 50, 0, energy},
      {"A4", "projector laws", "F ⋆ k_{[0,∞[} ≃ F iff SS(F) ⊂ {τ ≥ 0}; k_{]a,b]} ⋆ F ≃ 0", 100, 0, projector},
      {"A5", "geodesic kernel germs", "≃ k[−n] if ||x−z|| < t+s", 100, 30, geodesic_composition},
      {"A6", "non-split triangle", "Hom(k_Z, k_U[n+1]) ≃ k; only one non trivial distinguished triangle", 0, 0,
       nonsplit_triangle},
      {"A7", "square projector", "H^iK_n ≃ k_{C_{i+1}}; τ_c(K_∞) = 0 for all c ≥ 4", 40, 300, square_projector},
      {"A8", "circle sheaves", "ε_I is an isomorphism; standard nilpotent matrix of order |E(a)|", 200, 0, circle},
      {"A9", "orbit category", "⊕_{n∈ℤ} Hom(F[−n],G); n > b−a + dim M +1", 200, 0, orbit},
      {"A10", "microsupport coherence", "SS(D′F) = SS(F)^a; SS(F) ⊂ SS(F′) ∪ SS(F″)", 200, 0, microsupport},
  };
  return all;
}

const std::map<std::string, std::vector<std::string>>& suites() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"gabriel", {"A1"}},   {"hom", {"A2"}},    {"energy", {"A3"}}, {"projector", {"A4"}},
      {"geodesic", {"A5", "A6"}}, {"square", {"A7"}}, {"circle", {"A8"}}, {"orbit", {"A9"}},
      {"microsupport", {"A10"}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"gabriel", "hom",   "energy", "projector",    "geodesic",
                                                 "square",  "circle", "orbit", "microsupport", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  for (const auto& n : suite_names())
    if (n == name) return true;
  return false;
}

std::vector<CheckResult> run_suite(const std::string& name, const Options& options) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite: " + name);
  std::vector<CheckResult> out;
  const auto& all = specs();
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool wanted = name == "all";
    if (!wanted)
      for (const auto& id : suites().at(name)) wanted = wanted || id == all[i].id;
    if (wanted) out.push_back(run_check(all[i], static_cast<int>(i) + 1, options));
  }
  return out;
}

std::string format_table(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << std::left << std::setw(4) << r.id << " " << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(24) << r.title
        << std::right << std::fixed << std::setprecision(2) << std::setw(8) << r.seconds << "s";
    if (r.time_limit_seconds > 0) out << " (limit " << std::setprecision(0) << r.time_limit_seconds << "s)";
    out << "  [" << r.anchor << "]\n      " << r.detail << "\n";
  }
  return out.str();
}

}  // namespace sheaf1d::verify
