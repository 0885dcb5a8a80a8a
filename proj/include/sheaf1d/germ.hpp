#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sheaf1d/barcode.hpp"
#include "sheaf1d/polycell.hpp"

namespace sheaf1d {

// (k_cell[-degree])^multiplicity.
struct IndicatorTerm {
  PolyCell cell;
  int degree = 0;
  std::int64_t multiplicity = 1;

  friend bool operator==(const IndicatorTerm&, const IndicatorTerm&) = default;
};

// Finite direct sum of shifted indicator sheaves in one ambient dimension.
class IndicatorComplex {
 public:
  explicit IndicatorComplex(int dim) : dim_(dim) {}
  // Sorts the terms by degree, then by the text of the cell. Throws
  // MalformedInput on a dimension mismatch or non-positive multiplicity.
  IndicatorComplex(int dim, std::vector<IndicatorTerm> terms);
  static IndicatorComplex indicator(const PolyCell& cell, int degree = 0);

  int dim() const { return dim_; }
  const std::vector<IndicatorTerm>& terms() const { return terms_; }
  // F[k]: degree d becomes d - k.
  IndicatorComplex shifted(int k) const;
  GradedVectorSpace stalk(const Point& p) const;

  friend bool operator==(const IndicatorComplex&, const IndicatorComplex&) = default;

 private:
  int dim_;
  std::vector<IndicatorTerm> terms_;
};

// Stalk at (x, z) of K1 ∘ K2 with K1 on X×Y and K2 on Y×Z: RΓ_c over Y of
// the restricted tensor product, term by term.
GradedVectorSpace compose_germ(const IndicatorComplex& k1, const IndicatorComplex& k2, const Point& x, const Point& z,
                               const std::optional<Rational>& box = std::nullopt);

// Stalk at (x, z) of K_1 ∘ ⋯ ∘ K_m. middle_dims[j] is the dimension of the
// space between K_{j+1} and K_{j+2}; their sum is at most 4.
GradedVectorSpace compose_chain(const std::vector<IndicatorComplex>& kernels, const std::vector<int>& middle_dims,
                                const Point& x, const Point& z, const std::optional<Rational>& box = std::nullopt);

// Geodesic flow model for n = 1 with |·| as the norm.
// U_s = {(x, y) : |x - y| < s} in ℝ².
PolyCell geodesic_ball_kernel(const Rational& s);
// U = {s > 0, |x - y| < s} and Z = {s ≤ 0, |x - y| ≤ -s} in ℝ³ with
// coordinates (x, y, s).
PolyCell geodesic_open_cone();
PolyCell geodesic_closed_cone();

// Square projector in ℝ⁴ with coordinates (x1, x2, y1, y2).
// W = {|x1| < 1, |y1| < 1, y2 - x2 ≥ |x1 - y1|}.
PolyCell square_w();
// W_i = (id × f)^{i-1}(W) with f(y) = (-y1, y2 + 2).
PolyCell square_w_shift(int i);
// C_i = (id × f)^{i-1}(C_1) with C_1 = W ∩ (id × f)((id × s)(Int W)).
PolyCell square_c(int i);
// K_m = k_W ∘ ⋯ ∘ k_W (m factors) as a stalk, 1 ≤ m ≤ 3. Throws
// BoundaryPoint on the boundary of any W_i or C_i with i ≤ m.
GradedVectorSpace square_kernel_stalk(int m, const Point& p);
// The stalk predicted by the cohomology sheaves of K_m.
GradedVectorSpace square_kernel_expected(int m, const Point& p);

// Barcode of K_∞ on the line {x1, x2, y1 fixed} with y2 free: the bars
// C_i ∩ line in degree i - 1 for 2i ≤ window. Throws PreconditionError
// when window < 2.
GradedBarcode kinf_line_barcode(const Rational& x1, const Rational& x2, const Rational& y1, const Rational& window,
                                const FieldSpec& field = FieldSpec::prime(2));

// A conic sheaf on ℝ, stored degreewise as E₋ ← E₀ → E₊.
struct ConicDegreePart {
  int minus = 0;
  int zero = 0;
  int plus = 0;
  Matrix<Rational> rho_minus;  // minus × zero
  Matrix<Rational> rho_plus;   // plus × zero

  friend bool operator==(const ConicDegreePart&, const ConicDegreePart&) = default;
};

struct ConicSheaf1D {
  FieldSpec field = FieldSpec::prime(2);
  std::map<int, ConicDegreePart> parts;

  void validate() const;
  // Germs on the strata (-∞, 0), {0}, (0, ∞).
  GradedVectorSpace germ_minus() const;
  GradedVectorSpace germ_zero() const;
  GradedVectorSpace germ_plus() const;
  GradedBarcode barcode() const;
  static ConicSheaf1D from_barcode(const GradedBarcode& b);
};

// F^∧ with kernel k_P, P = {νξ ≤ 0}; with antipodal = true the kernel is
// k_{P^a}, P^a = {νξ ≥ 0}.
ConicSheaf1D fourier_sato_1d(const ConicSheaf1D& f, bool antipodal = false);

// Σ_k dim Hom(F, G[k]) as graded dimensions, computed on the face poset of
// the hyperplane arrangement of all constraints inside the closed box
// [-R, R]^d and checked against the doubled box.
GradedVectorSpace hom_global_poset(const IndicatorComplex& f, const IndicatorComplex& g, const Rational& box);

}  // namespace sheaf1d
