#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sheaf1d/barcode.hpp"
#include "sheaf1d/quiver.hpp"

namespace sheaf1d {

// Representation of the cyclic quiver attached to points
// 0 ≤ θ_0 < ... < θ_{n-1} < C on the circle ℝ/Cℤ. dims[2k] is the stalk at
// θ_k and dims[2k+1] the space on the arc (θ_k, θ_{k+1}), indices mod n.
// left_maps[k] goes from θ_k to arc k-1, right_maps[k] from θ_k to arc k.
struct CyclicRep {
  FieldSpec field = FieldSpec::prime(2);
  Rational circumference = 1;
  std::vector<Rational> points;
  std::vector<int> dims;
  std::vector<Matrix<Rational>> left_maps;
  std::vector<Matrix<Rational>> right_maps;

  int point_count() const { return static_cast<int>(points.size()); }
  // Throws MalformedInput on shape, ordering or range errors.
  void validate() const;
};

// L ⊕ ⊕ e_!(k_I)[-d]^m. Bars are stored by a lift whose left endpoint lies
// in [0, C); each local part is kept in rational canonical form.
class CircleSheaf {
 public:
  CircleSheaf(FieldSpec field, Rational circumference, std::vector<Bar> bars = {},
              std::map<int, Matrix<Rational>> local_part = {});

  const FieldSpec& field() const { return field_; }
  const Rational& circumference() const { return circumference_; }
  const std::vector<Bar>& bars() const { return bars_; }
  const std::map<int, Matrix<Rational>>& local_part() const { return local_; }

  bool empty() const { return bars_.empty() && local_.empty(); }
  bool concentrated_in_degree_zero() const;
  CircleSheaf degree_part(int degree) const;
  CircleSheaf shifted(int k) const;
  std::string to_string() const;

  friend bool operator==(const CircleSheaf&, const CircleSheaf&) = default;

 private:
  FieldSpec field_;
  Rational circumference_;
  std::vector<Bar> bars_;
  std::map<int, Matrix<Rational>> local_;
};

CircleSheaf decompose_circle(const CyclicRep& rep);

// Degree-0 objects only. Every bar endpoint must be one of the points mod C.
CyclicRep realize_circle(const CircleSheaf& cs, const std::vector<Rational>& points);

// Bar endpoints reduced mod C, or {0} when there are none.
std::vector<Rational> circle_points(const CircleSheaf& cs);

// rk[i][s]: rank of lim → colim on the path of s + 1 vertices of the ℤ-cover
// starting at vertex i (0 ≤ i < 2n), for s ≤ max_steps. Isomorphic reps
// have equal tables.
std::vector<std::vector<int>> cover_rank_table(const CyclicRep& rep, int max_steps);

// Monodromy of a rep whose maps are all invertible, based at the last arc.
Matrix<Rational> monodromy(const CyclicRep& rep);

struct EndoAlgebra {
  std::int64_t dimension = 0;
  int nilpotency_index = 0;
  bool semisimple = false;
  friend bool operator==(const EndoAlgebra&, const EndoAlgebra&) = default;
};

// End(e_* k_I) for a bounded lifted interval I.
EndoAlgebra endo_algebra(const Interval& lifted, const Rational& circumference);
// The same, from an explicit basis of End on the cyclic quiver.
EndoAlgebra endo_algebra_oracle(const Interval& lifted, const Rational& circumference,
                                const FieldSpec& field = FieldSpec::prime(2));

// Graded dimensions of RHom(F, G) on the circle.
GradedVectorSpace hom_circle(const CircleSheaf& f, const CircleSheaf& g);
GradedVectorSpace hom_circle_oracle(const CircleSheaf& f, const CircleSheaf& g);

// Whether every morphism k_{S¹} → e_* k_I factors through the invariant
// section k_{S¹} → L_r of the unipotent Jordan local system of rank r.
bool factors_through_jordan_section(const Interval& closed_lift, const Rational& circumference, int r,
                                    const FieldSpec& field = FieldSpec::prime(2));

template <class F>
QuiverRep<F> cyclic_quiver(const F& f, const CyclicRep& rep) {
  QuiverRep<F> q;
  q.dims = rep.dims;
  int n = rep.point_count();
  for (int k = 0; k < n; ++k) {
    q.arrows.push_back({2 * k, (2 * k - 1 + 2 * n) % (2 * n)});
    q.maps.push_back(to_field_matrix(f, rep.left_maps[k]));
    q.arrows.push_back({2 * k, 2 * k + 1});
    q.maps.push_back(to_field_matrix(f, rep.right_maps[k]));
  }
  return q;
}

template <class F>
CyclicRep cyclic_from_quiver(const F& f, const QuiverRep<F>& q, const FieldSpec& field, const Rational& circumference,
                             const std::vector<Rational>& points) {
  CyclicRep rep;
  rep.field = field;
  rep.circumference = circumference;
  rep.points = points;
  rep.dims = q.dims;
  for (std::size_t a = 0; a < q.arrows.size(); a += 2) {
    rep.left_maps.push_back(to_rational_matrix(f, q.maps[a]));
    rep.right_maps.push_back(to_rational_matrix(f, q.maps[a + 1]));
  }
  return rep;
}

}  // namespace sheaf1d
