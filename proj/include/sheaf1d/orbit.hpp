#pragma once

#include <cstdint>
#include <vector>

#include "sheaf1d/barcode.hpp"
#include "sheaf1d/matrix.hpp"

namespace sheaf1d {

using F2Matrix = FMatrix<PrimeField>;

// Bounded complex of free modules over K = k[ε]/(ε²), k = ℤ/2. Degree
// lowest + i holds K^{ranks[i]}; the differential out of it is
// d_const[i] + ε·d_eps[i] (ranks[i+1] × ranks[i]).
struct DualNumbersModuleComplex {
  int lowest_degree = 0;
  std::vector<int> ranks;
  std::vector<F2Matrix> d_const;
  std::vector<F2Matrix> d_eps;

  int highest_degree() const { return lowest_degree + static_cast<int>(ranks.size()) - 1; }
  // Throws MalformedInput on shape errors or d² ≠ 0.
  void validate() const;
  // Cohomology of the underlying complex of k-vector spaces.
  GradedVectorSpace underlying_cohomology() const;
  // Ext^n_K(k, ·) for n ≤ max_degree, via the periodic resolution of k.
  GradedVectorSpace ext_from_residue_field(int max_degree) const;
};

// L^{p,q}: K in each degree p..q with differential ε.
DualNumbersModuleComplex lpq_complex(int p, int q);

// Σ_n dim Hom(F[-n], G) over ℤ/2.
std::int64_t orbit_hom_dim(const GradedBarcode& f, const GradedBarcode& g);
// The same sum from the realized-quiver oracle.
std::int64_t orbit_hom_dim_oracle(const GradedBarcode& f, const GradedBarcode& g);

// dim Ext^i_K(k, k) from the explicit free resolution ⋯ → K →ε K → k.
int dualnumbers_ext(int i);

// Checks the triangle k[-p] → L^{p,q} → k[-q] → k[-p+1] and that its
// connecting map is the nonzero class in Ext^{q-p+1}(k, k).
bool lpq_triangle_check(int p, int q);

// Whether Σ_{0≤m≤n} dim Hom(F[-m], G) is constant for all n > b - a + 2,
// checked up to the witness (and past the top degree of RHom).
bool stabilization_bound_check(const GradedBarcode& f, const GradedBarcode& g, int witness);

// Bounded complex of k-vector spaces; d[i] leaves degree lowest + i.
struct PointComplex {
  int lowest_degree = 0;
  std::vector<int> dims;
  std::vector<F2Matrix> d;

  void validate() const;
  GradedVectorSpace cohomology() const;
};

// Orbit Hom at a point two ways: Σ_n dim Hom_{D(k)}(V[-n], W), and h⁰ of
// Hom between the totalized differential modules (δ² = 0 over k).
std::int64_t orbit_hom_point_sum(const PointComplex& v, const PointComplex& w);
std::int64_t orbit_hom_point_model(const PointComplex& v, const PointComplex& w);

}  // namespace sheaf1d
