#pragma once

#include <optional>
#include <string>

#include "sheaf1d/barcode.hpp"

namespace sheaf1d {

// Bars [a,b), [a,inf), (-inf,b) and R: microsupport in {τ ≥ 0}.
bool is_tau_nonneg_bar(const Interval& bar);

class TauNonnegBarcode {
 public:
  // Throws PreconditionError when some bar is not of τ≥0 form.
  explicit TauNonnegBarcode(GradedBarcode bc);
  static bool accepts(const GradedBarcode& bc);

  const GradedBarcode& barcode() const { return bc_; }

 private:
  GradedBarcode bc_;
};

class EnergyValue {
 public:
  static EnergyValue finite(const Rational& v) { return EnergyValue(false, v); }
  static EnergyValue infinite() { return EnergyValue(true, Rational(0)); }

  bool is_infinite() const { return infinite_; }
  const Rational& value() const { return value_; }
  std::string to_string() const;

  friend bool operator==(const EnergyValue&, const EnergyValue&) = default;
  friend bool operator<(const EnergyValue& a, const EnergyValue& b);

 private:
  EnergyValue(bool inf, const Rational& v) : infinite_(inf), value_(v) {}
  bool infinite_;
  Rational value_;
};

// Rs_!(F ⊠ k_K) along addition. Throws PropernessError when F is
// unbounded below and K is unbounded.
GradedBarcode convolve(const GradedBarcode& f, const Interval& kernel);

// RΓ_c(I ∩ (z - K)), the stalk of k_I ⋆ k_K at z, from the quiver oracle.
GradedVectorSpace convolution_stalk_oracle(const Interval& i, const Interval& kernel, const Rational& z);

// Stalk of a barcode at a point.
GradedVectorSpace stalk(const GradedBarcode& f, const Rational& z);

// Convolution with the slice kernel k_[0,u). Requires support bounded below.
GradedBarcode psi_slice(const TauNonnegBarcode& f, const Rational& u);

// Whether τ_c: k_bar → k_{bar+c} is nonzero.
bool tau_component_nonzero(const Interval& bar, const Rational& c);

EnergyValue displacement_energy(const TauNonnegBarcode& f);

// Whether τ_{e(F)}(F) itself vanishes. Meaningful for finite energy.
bool energy_attained_vanishing(const TauNonnegBarcode& f);

// Checks that ker τ_u and coker τ_u of every bar, computed on realized
// representations, reproduce the two degrees of psi_slice.
bool slice_triangle_exact(const TauNonnegBarcode& f, const Rational& u, std::string* detail = nullptr);

// ⊕_{k=0..count-1} k_[kQ,(k+1)Q) in degree 2k.
GradedBarcode flying_saucer_barcode(int count, const Rational& quarter, FieldSpec field);

}  // namespace sheaf1d
