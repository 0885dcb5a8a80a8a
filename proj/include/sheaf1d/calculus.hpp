#pragma once

#include <cstdint>

#include "sheaf1d/barcode.hpp"

namespace sheaf1d {

// dim Hom(k_I, k_J): 1 iff I∩J is nonempty, closed in I and open in J.
int hom_dim(const Interval& i, const Interval& j);

// dim Ext¹(k_I, k_J), computed by the quiver oracle on a common refinement.
int ext1_dim(const Interval& i, const Interval& j);

// Graded dimensions of RHom(F, G): degree k holds dim Hom(F, G[k]).
GradedVectorSpace hom_complex(const GradedBarcode& f, const GradedBarcode& g);

GradedBarcode tensor(const GradedBarcode& f, const GradedBarcode& g);

// Verdier-type dual D'F: open and closed ends swap, degrees negate.
GradedBarcode dual_prime(const GradedBarcode& f);

// RΓ(R; F) or RΓ_c(R; F) by the per-bar table.
GradedVectorSpace sections(const GradedBarcode& f, bool compact_support);

bool is_prime_power(std::uint64_t q);

// Orbits of k^e under (λ, μ)·x = λμ⁻¹x for |k| = q.
std::uint64_t extension_class_count(int ext_dim, std::uint64_t q);

// Independent oracles working on realized zigzag representations.
struct HomExt {
  int hom = 0;
  int ext1 = 0;
};
HomExt interval_hom_ext_oracle(const Interval& i, const Interval& j, const FieldSpec& field);
GradedVectorSpace hom_complex_oracle(const GradedBarcode& f, const GradedBarcode& g);
// RΓ(R; F) = RHom(k_R, F) and RΓ_c(R; F)^i = Ext^{1-i}(F, k_R)^* via the quiver.
GradedVectorSpace sections_oracle(const GradedBarcode& f, bool compact_support);

}  // namespace sheaf1d
