#include "sheaf1d/circle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sheaf1d/calculus.hpp"
#include "sheaf1d/errors.hpp"
#include "sheaf1d/polynomial.hpp"

namespace sheaf1d {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int pos_mod(int a, int b) { return ((a % b) + b) % b; }

Rational reduce_mod(const Rational& x, const Rational& c) {
  Rational k(floor_of(x / c));
  return x - k * c;
}

void check_field_entries(const FieldSpec& field, const Matrix<Rational>& m) {
  if (!field.is_prime()) return;
  PrimeField f(field.characteristic());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) f.from_rational(m(r, c));
}

// Vertices of the ℤ-cover: 2(k + mn) is θ_k + mC, the next one the arc after it.
struct Cover {
  const std::vector<Rational>& points;
  Rational c;

  int n() const { return static_cast<int>(points.size()); }

  Rational position(int t) const {
    int idx = floor_div(t, 2);
    int k = pos_mod(idx, n()), m = floor_div(idx, n());
    return points[k] + Rational(m) * c;
  }

  int vertex_of(const Rational& x) const {
    for (int k = 0; k < n(); ++k) {
      Rational shift = (x - points[k]) / c;
      if (denominator_of(shift) == 1) return 2 * (k + static_cast<int>(numerator_of(shift)) * n());
    }
    throw RefinementError("endpoint " + format_rational(x) + " is not a stratification point mod C");
  }

  std::pair<int, int> range(const Interval& i) const {
    int vs = vertex_of(i.left().value), ve = vertex_of(i.right().value);
    if (!i.left().closed) ++vs;
    if (!i.right().closed) --ve;
    return {vs, ve};
  }

  Interval interval(int vs, int ve) const {
    Endpoint l = pos_mod(vs, 2) == 0 ? Endpoint::at(position(vs), true) : Endpoint::at(position(vs - 1), false);
    Endpoint r = pos_mod(ve, 2) == 0 ? Endpoint::at(position(ve), true) : Endpoint::at(position(ve + 1), false);
    return Interval::make(l, r);
  }
};

template <class F>
QuiverRep<F> zero_cyclic(const F& f, int n) {
  QuiverRep<F> q;
  q.dims.assign(2 * n, 0);
  for (int k = 0; k < n; ++k) {
    q.arrows.push_back({2 * k, (2 * k - 1 + 2 * n) % (2 * n)});
    q.maps.push_back(zeros(f, 0, 0));
    q.arrows.push_back({2 * k, 2 * k + 1});
    q.maps.push_back(zeros(f, 0, 0));
  }
  return q;
}

// e_* k_I for the cover vertex range [vs, ve]; basis vectors ordered by
// cover vertex.
template <class F>
QuiverRep<F> string_module(const F& f, int n, int vs, int ve) {
  QuiverRep<F> q = zero_cyclic(f, n);
  std::vector<int> index(ve - vs + 1);
  for (int t = vs; t <= ve; ++t) index[t - vs] = q.dims[pos_mod(t, 2 * n)]++;
  for (int k = 0; k < n; ++k) {
    q.maps[2 * k] = zeros(f, q.dims[pos_mod(2 * k - 1, 2 * n)], q.dims[2 * k]);
    q.maps[2 * k + 1] = zeros(f, q.dims[2 * k + 1], q.dims[2 * k]);
  }
  for (int t = vs; t <= ve; ++t) {
    if (pos_mod(t, 2) != 0) continue;
    int k = pos_mod(t, 2 * n) / 2;
    if (t - 1 >= vs) q.maps[2 * k](index[t - 1 - vs], index[t - vs]) = f.one();
    if (t + 1 <= ve) q.maps[2 * k + 1](index[t + 1 - vs], index[t - vs]) = f.one();
  }
  return q;
}

// Rank-r local system with monodromy m: identities except the last right map.
template <class F>
QuiverRep<F> local_system(const F& f, int n, const FMatrix<F>& m) {
  int r = m.rows();
  QuiverRep<F> q = zero_cyclic(f, n);
  q.dims.assign(2 * n, r);
  for (int a = 0; a < 2 * n; ++a) q.maps[a] = identity(f, r);
  q.maps[2 * n - 1] = m;
  return q;
}

template <class F>
std::vector<PathStep<F>> cover_path(const QuiverRep<F>& q, int start, int steps) {
  int n = q.vertex_count() / 2;
  std::vector<PathStep<F>> out;
  for (int t = start; t < start + steps; ++t) {
    int c = pos_mod(t, 2 * n);
    if (c % 2 == 0) out.push_back({true, &q.maps[c + 1]});
    else out.push_back({false, &q.maps[2 * (((c - 1) / 2 + 1) % n)]});
  }
  return out;
}

template <class F>
FMatrix<F> monodromy_of(const F& f, const QuiverRep<F>& q) {
  int n = q.vertex_count() / 2;
  FMatrix<F> t = identity(f, q.dims[2 * n - 1]);
  for (int k = 0; k < n; ++k) {
    auto linv = inverse(f, q.maps[2 * k]);
    if (!linv) throw PreconditionError("monodromy needs invertible maps");
    t = multiply(f, q.maps[2 * k + 1], multiply(f, *linv, t));
  }
  return t;
}

template <class F>
FMatrix<F> as_columns(const F& f, const std::vector<Morphism<F>>& ms) {
  int rows = 0;
  if (!ms.empty())
    for (const auto& block : ms.front()) rows += block.rows() * block.cols();
  FMatrix<F> out = zeros(f, rows, static_cast<int>(ms.size()));
  for (std::size_t c = 0; c < ms.size(); ++c) {
    int r = 0;
    for (const auto& block : ms[c])
      for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) out(r++, static_cast<int>(c)) = block(i, j);
  }
  return out;
}

template <class F>
std::vector<Morphism<F>> independent(const F& f, const std::vector<Morphism<F>>& ms) {
  std::vector<Morphism<F>> out;
  if (ms.empty()) return out;
  for (int c : independent_columns(f, as_columns(f, ms))) out.push_back(ms[c]);
  return out;
}

template <class F>
bool is_nilpotent(const F& f, const Morphism<F>& phi, int total) {
  Morphism<F> power = phi;
  for (int i = 1; i < std::max(total, 1); ++i) power = compose(f, power, phi);
  return is_zero_morphism(f, power);
}

std::vector<int> bar_degrees(const CircleSheaf& cs) {
  std::set<int> ds;
  for (const auto& b : cs.bars()) ds.insert(b.degree);
  for (const auto& [d, m] : cs.local_part()) ds.insert(d);
  return {ds.begin(), ds.end()};
}

void require_compatible(const CircleSheaf& a, const CircleSheaf& b) {
  require_same_field(a.field(), b.field());
  if (a.circumference() != b.circumference()) throw PreconditionError("circumference mismatch");
}

}  // namespace

void CyclicRep::validate() const {
  if (circumference <= 0) throw MalformedInput("circumference must be positive");
  int n = point_count();
  if (n == 0) throw MalformedInput("a cyclic rep needs at least one point");
  for (int k = 0; k < n; ++k) {
    if (points[k] < 0 || points[k] >= circumference) throw MalformedInput("points must lie in [0, C)");
    if (k > 0 && !(points[k - 1] < points[k])) throw MalformedInput("points must be strictly increasing");
  }
  if (static_cast<int>(dims.size()) != 2 * n)
    throw MalformedInput("expected " + std::to_string(2 * n) + " dims, got " + std::to_string(dims.size()));
  for (int d : dims)
    if (d < 0) throw MalformedInput("negative dimension");
  if (static_cast<int>(left_maps.size()) != n || static_cast<int>(right_maps.size()) != n)
    throw MalformedInput("expected one map pair per point");
  for (int k = 0; k < n; ++k) {
    const auto& l = left_maps[k];
    const auto& r = right_maps[k];
    if (l.rows() != dims[pos_mod(2 * k - 1, 2 * n)] || l.cols() != dims[2 * k])
      throw MalformedInput("left map " + std::to_string(k) + " has wrong shape");
    if (r.rows() != dims[2 * k + 1] || r.cols() != dims[2 * k])
      throw MalformedInput("right map " + std::to_string(k) + " has wrong shape");
    check_field_entries(field, l);
    check_field_entries(field, r);
  }
}

CircleSheaf::CircleSheaf(FieldSpec field, Rational circumference, std::vector<Bar> bars,
                         std::map<int, Matrix<Rational>> local_part)
    : field_(field), circumference_(std::move(circumference)) {
  if (circumference_ <= 0) throw MalformedInput("circumference must be positive");
  for (auto& b : bars) {
    if (!b.interval.is_bounded()) throw MalformedInput("circle bars must be bounded: " + b.interval.to_string());
    if (b.multiplicity <= 0) throw MalformedInput("multiplicities must be positive");
    Rational shift = Rational(floor_of(b.interval.left().value / circumference_)) * circumference_;
    b.interval = b.interval.translate(-shift);
  }
  std::sort(bars.begin(), bars.end(), [](const Bar& x, const Bar& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.interval < y.interval;
  });
  for (auto& b : bars) {
    if (!bars_.empty() && bars_.back().degree == b.degree && bars_.back().interval == b.interval)
      bars_.back().multiplicity += b.multiplicity;
    else
      bars_.push_back(std::move(b));
  }
  for (auto& [d, m] : local_part) {
    if (m.rows() != m.cols()) throw MalformedInput("monodromy must be square");
    if (m.rows() == 0) continue;
    check_field_entries(field_, m);
    local_[d] = with_field(field_, [&](const auto& f) {
      auto fm = to_field_matrix(f, m);
      if (!is_invertible(f, fm)) throw MalformedInput("monodromy must be invertible");
      return to_rational_matrix(f, frobenius_form(f, fm));
    });
  }
}

bool CircleSheaf::concentrated_in_degree_zero() const {
  for (int d : bar_degrees(*this))
    if (d != 0) return false;
  return true;
}

CircleSheaf CircleSheaf::degree_part(int degree) const {
  std::vector<Bar> bars;
  for (const auto& b : bars_)
    if (b.degree == degree) bars.push_back(b);
  std::map<int, Matrix<Rational>> local;
  if (auto it = local_.find(degree); it != local_.end()) local.insert(*it);
  return CircleSheaf(field_, circumference_, std::move(bars), std::move(local));
}

CircleSheaf CircleSheaf::shifted(int k) const {
  std::vector<Bar> bars = bars_;
  for (auto& b : bars) b.degree -= k;
  std::map<int, Matrix<Rational>> local;
  for (const auto& [d, m] : local_) local[d - k] = m;
  return CircleSheaf(field_, circumference_, std::move(bars), std::move(local));
}

std::string CircleSheaf::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < bars_.size(); ++i) {
    if (i) out << ", ";
    const auto& b = bars_[i];
    out << b.interval.to_string();
    if (b.degree != 0) out << " deg " << b.degree;
    if (b.multiplicity != 1) out << " x" << b.multiplicity;
  }
  out << "}";
  for (const auto& [d, m] : local_) {
    out << " + L(deg " << d << ": [";
    for (int r = 0; r < m.rows(); ++r) {
      out << (r ? "; " : "");
      for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << format_rational(m(r, c));
    }
    out << "])";
  }
  return out.str();
}

std::vector<std::vector<int>> cover_rank_table(const CyclicRep& rep, int max_steps) {
  rep.validate();
  return with_field(rep.field, [&](const auto& f) {
    auto q = cyclic_quiver(f, rep);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < q.vertex_count(); ++i) out.push_back(path_ranks(f, q.dims[i], cover_path(q, i, max_steps)));
    return out;
  });
}

Matrix<Rational> monodromy(const CyclicRep& rep) {
  rep.validate();
  return with_field(rep.field, [&](const auto& f) { return to_rational_matrix(f, monodromy_of(f, cyclic_quiver(f, rep))); });
}

CircleSheaf decompose_circle(const CyclicRep& rep) {
  rep.validate();
  Cover cover{rep.points, rep.circumference};
  int n = rep.point_count();
  return with_field(rep.field, [&](const auto& f) {
    auto q = cyclic_quiver(f, rep);
    // A bar holding more than dim F_θ lifts of θ cannot occur, which bounds
    // the length of every bar in cover vertices.
    int dmin = q.dims[0];
    for (int k = 0; k < n; ++k) dmin = std::min(dmin, q.dims[2 * k]);
    int steps = 2 * n * (dmin + 1) + 4;
    std::vector<std::vector<int>> rk;  // rk[i + 1][s] for start i in [-1, 2n)
    for (int i = -1; i < 2 * n; ++i) rk.push_back(path_ranks(f, q.dims[pos_mod(i, 2 * n)], cover_path(q, i, steps)));
    auto r = [&](int i, int j) { return rk[i + 1][j - i]; };

    struct Candidate {
      int vs, ve;
      std::int64_t mult;
    };
    std::vector<Candidate> found;
    for (int i = 0; i < 2 * n; ++i)
      for (int j = i; j + 1 - (i - 1) <= steps; ++j) {
        int m = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1);
        if (m < 0) throw std::logic_error("negative bar multiplicity on the cover");
        if (m > 0) found.push_back({i, j, m});
      }
    std::stable_sort(found.begin(), found.end(),
                     [](const Candidate& a, const Candidate& b) { return a.ve - a.vs > b.ve - b.vs; });

    auto rest = q;
    std::vector<Bar> bars;
    for (const auto& c : found) {
      auto s = string_module(f, n, c.vs, c.ve);
      for (std::int64_t t = 0; t < c.mult; ++t) {
        auto next = split_off_summand(f, rest, s);
        if (!next) throw std::logic_error("circle bar did not split off");
        rest = std::move(*next);
      }
      bars.push_back({cover.interval(c.vs, c.ve), 0, c.mult});
    }
    std::map<int, Matrix<Rational>> local;
    int rank = rest.dims[0];
    for (int d : rest.dims)
      if (d != rank) throw std::logic_error("remainder is not a local system");
    for (const auto& m : rest.maps)
      if (!is_invertible(f, m)) throw std::logic_error("remainder is not a local system");
    if (rank > 0) local[0] = to_rational_matrix(f, monodromy_of(f, rest));
    return CircleSheaf(rep.field, rep.circumference, std::move(bars), std::move(local));
  });
}

CyclicRep realize_circle(const CircleSheaf& cs, const std::vector<Rational>& points) {
  if (!cs.concentrated_in_degree_zero()) throw PreconditionError("realize_circle needs an object in degree 0");
  CyclicRep shape;
  shape.field = cs.field();
  shape.circumference = cs.circumference();
  shape.points = points;
  int n = static_cast<int>(points.size());
  shape.dims.assign(2 * n, 0);
  shape.left_maps.assign(n, Matrix<Rational>());
  shape.right_maps.assign(n, Matrix<Rational>());
  shape.validate();
  Cover cover{points, cs.circumference()};
  return with_field(cs.field(), [&](const auto& f) {
    auto q = zero_cyclic(f, n);
    for (const auto& b : cs.bars()) {
      auto [vs, ve] = cover.range(b.interval);
      auto s = string_module(f, n, vs, ve);
      for (std::int64_t t = 0; t < b.multiplicity; ++t) q = direct_sum(f, q, s);
    }
    if (auto it = cs.local_part().find(0); it != cs.local_part().end())
      q = direct_sum(f, q, local_system(f, n, to_field_matrix(f, it->second)));
    return cyclic_from_quiver(f, q, cs.field(), cs.circumference(), points);
  });
}

std::vector<Rational> circle_points(const CircleSheaf& cs) {
  std::set<Rational> pts;
  for (const auto& b : cs.bars()) {
    pts.insert(reduce_mod(b.interval.left().value, cs.circumference()));
    pts.insert(reduce_mod(b.interval.right().value, cs.circumference()));
  }
  if (pts.empty()) pts.insert(Rational(0));
  return {pts.begin(), pts.end()};
}

EndoAlgebra endo_algebra(const Interval& lifted, const Rational& circumference) {
  if (!lifted.is_bounded()) throw PreconditionError("endo_algebra needs a bounded interval");
  if (circumference <= 0) throw PreconditionError("circumference must be positive");
  if (lifted.left().closed == lifted.right().closed) return {1, 1, true};
  // E(a) = I ∩ (a + Cℤ) for the closed end a.
  bool left_closed = lifted.left().closed;
  Rational a = left_closed ? lifted.left().value : lifted.right().value;
  std::int64_t count = 0;
  for (Rational x = a; lifted.contains(x); x += left_closed ? circumference : -circumference) ++count;
  return {count, static_cast<int>(count), count == 1};
}

EndoAlgebra endo_algebra_oracle(const Interval& lifted, const Rational& circumference, const FieldSpec& field) {
  if (!lifted.is_bounded()) throw PreconditionError("endo_algebra needs a bounded interval");
  CircleSheaf cs(field, circumference, {{lifted, 0, 1}});
  CyclicRep rep = realize_circle(cs, circle_points(cs));
  return with_field(field, [&](const auto& f) {
    using Fld = std::decay_t<decltype(f)>;
    auto q = cyclic_quiver(f, rep);
    auto basis = hom_basis(f, q, q);
    int total = q.total_dim();
    int v = 0;
    while (q.dims[v] == 0) ++v;
    // End is local: each φ is λ·1 plus a nilpotent, λ its only eigenvalue.
    std::vector<Morphism<Fld>> radical;
    for (const auto& phi : basis) {
      std::optional<typename Fld::value_type> lambda;
      if constexpr (std::is_same_v<Fld, RationalField>) {
        Rational tr = 0;
        for (int i = 0; i < q.dims[v]; ++i) tr += phi[v](i, i);
        lambda = tr / q.dims[v];
      } else {
        for (std::uint32_t c = 0; c < field.characteristic() && !lambda; ++c) {
          auto shifted = phi;
          for (std::size_t x = 0; x < shifted.size(); ++x)
            for (int i = 0; i < shifted[x].rows(); ++i) shifted[x](i, i) = f.sub(shifted[x](i, i), c);
          if (is_nilpotent(f, shifted, total)) lambda = c;
        }
      }
      if (!lambda) throw std::logic_error("endomorphism without a unique eigenvalue");
      auto nu = phi;
      for (std::size_t x = 0; x < nu.size(); ++x)
        for (int i = 0; i < nu[x].rows(); ++i) nu[x](i, i) = f.sub(nu[x](i, i), *lambda);
      if (!is_nilpotent(f, nu, total)) throw std::logic_error("End is not local");
      radical.push_back(std::move(nu));
    }
    radical = independent(f, radical);
    bool semisimple = radical.empty();
    int index = 1;
    for (auto power = radical; !power.empty(); ++index) {
      std::vector<Morphism<Fld>> next;
      for (const auto& a : radical)
        for (const auto& b : power) next.push_back(compose(f, a, b));
      power = independent(f, next);
    }
    return EndoAlgebra{static_cast<std::int64_t>(basis.size()), index, semisimple};
  });
}

GradedVectorSpace hom_circle(const CircleSheaf& a, const CircleSheaf& b) {
  require_compatible(a, b);
  const Rational& c = a.circumference();
  GradedVectorSpace out;
  const Interval line = Interval::real_line();
  for (const auto& x : a.bars())
    for (const auto& y : b.bars()) {
      // Only translates J + nC that meet or touch I contribute.
      int lo = static_cast<int>(floor_of((x.interval.left().value - y.interval.right().value) / c)) - 1;
      int hi = static_cast<int>(floor_of((x.interval.right().value - y.interval.left().value) / c)) + 1;
      std::int64_t h = 0, e = 0;
      for (int k = lo; k <= hi; ++k) {
        Interval j = y.interval.translate(Rational(k) * c);
        h += hom_dim(x.interval, j);
        e += ext1_dim(x.interval, j);
      }
      std::int64_t m = x.multiplicity * y.multiplicity;
      out.add(y.degree - x.degree, h * m);
      out.add(y.degree - x.degree + 1, e * m);
    }
  // e^{-1} of a local system is constant on ℝ.
  for (const auto& x : a.bars())
    for (const auto& [d, m] : b.local_part()) {
      std::int64_t r = m.rows() * x.multiplicity;
      out.add(d - x.degree, r * hom_dim(x.interval, line));
      out.add(d - x.degree + 1, r * ext1_dim(x.interval, line));
    }
  for (const auto& [d, m] : a.local_part())
    for (const auto& y : b.bars()) {
      std::int64_t r = m.rows() * y.multiplicity;
      out.add(y.degree - d, r * hom_dim(line, y.interval));
      out.add(y.degree - d + 1, r * ext1_dim(line, y.interval));
    }
  // Hom of local systems: invariants and coinvariants of X ↦ M₂ X M₁⁻¹.
  for (const auto& [d1, m1] : a.local_part())
    for (const auto& [d2, m2] : b.local_part()) {
      std::int64_t h = with_field(a.field(), [&](const auto& f) {
        auto p = to_field_matrix(f, m1), q = to_field_matrix(f, m2);
        int r1 = p.rows(), r2 = q.rows();
        auto op = zeros(f, r2 * r1, r2 * r1);
        // (q X − X p)_{ij} = Σ_k q_ik X_kj − Σ_k X_ik p_kj, X_ij at i·r1 + j.
        for (int i = 0; i < r2; ++i)
          for (int j = 0; j < r1; ++j) {
            for (int k = 0; k < r2; ++k) op(i * r1 + j, k * r1 + j) = f.add(op(i * r1 + j, k * r1 + j), q(i, k));
            for (int k = 0; k < r1; ++k) op(i * r1 + j, i * r1 + k) = f.sub(op(i * r1 + j, i * r1 + k), p(k, j));
          }
        return static_cast<std::int64_t>(r2 * r1 - rank(f, op));
      });
      out.add(d2 - d1, h);
      out.add(d2 - d1 + 1, h);
    }
  return out;
}

GradedVectorSpace hom_circle_oracle(const CircleSheaf& a, const CircleSheaf& b) {
  require_compatible(a, b);
  std::set<Rational> pts;
  for (const auto& p : circle_points(a)) pts.insert(p);
  for (const auto& p : circle_points(b)) pts.insert(p);
  std::vector<Rational> points(pts.begin(), pts.end());
  GradedVectorSpace out;
  for (int d1 : bar_degrees(a))
    for (int d2 : bar_degrees(b)) {
      auto ra = realize_circle(a.degree_part(d1).shifted(d1), points);
      auto rb = realize_circle(b.degree_part(d2).shifted(d2), points);
      with_field(a.field(), [&](const auto& f) {
        auto qa = cyclic_quiver(f, ra), qb = cyclic_quiver(f, rb);
        out.add(d2 - d1, quiver_hom_dim(f, qa, qb));
        out.add(d2 - d1 + 1, quiver_ext1_dim(f, qa, qb));
      });
    }
  return out;
}

bool factors_through_jordan_section(const Interval& closed_lift, const Rational& circumference, int r,
                                    const FieldSpec& field) {
  if (!closed_lift.is_bounded() || !closed_lift.is_closed())
    throw PreconditionError("factorisation check needs a closed bounded interval");
  if (r < 1) throw PreconditionError("Jordan block rank must be positive");
  CircleSheaf bar(field, circumference, {{closed_lift, 0, 1}});
  auto points = circle_points(bar);
  Matrix<Rational> jordan(r, r, Rational(0));
  for (int i = 0; i < r; ++i) {
    jordan(i, i) = 1;
    if (i + 1 < r) jordan(i, i + 1) = 1;
  }
  Matrix<Rational> one(1, 1, Rational(1));
  auto e = realize_circle(bar, points);
  auto l = realize_circle(CircleSheaf(field, circumference, {}, {{0, jordan}}), points);
  auto k = realize_circle(CircleSheaf(field, circumference, {}, {{0, one}}), points);
  return with_field(field, [&](const auto& f) {
    auto qe = cyclic_quiver(f, e), ql = cyclic_quiver(f, l), qk = cyclic_quiver(f, k);
    auto sections = hom_basis(f, qk, ql);
    if (sections.size() != 1) throw std::logic_error("L_r should have a single invariant section");
    std::vector<Morphism<std::decay_t<decltype(f)>>> composites;
    for (const auto& c : hom_basis(f, ql, qe)) composites.push_back(compose(f, c, sections.front()));
    int reached = static_cast<int>(independent(f, composites).size());
    return reached == quiver_hom_dim(f, qk, qe);
  });
}

}  // namespace sheaf1d
