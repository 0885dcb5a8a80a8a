#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sheaf1d/barcode.hpp"

namespace sheaf1d {

enum class Sign { Plus, Minus };

// The ray {(base; ξ) : ±ξ > 0} of the punctured cotangent bundle.
struct CovectorPoint {
  Rational base;
  Sign sign = Sign::Plus;

  std::string to_string() const;
  friend bool operator==(const CovectorPoint&, const CovectorPoint&) = default;
  friend std::strong_ordering operator<=>(const CovectorPoint& a, const CovectorPoint& b);
};

struct MicroSupport1D {
  std::vector<Interval> zero_section_support;  // disjoint, sorted, closed
  std::vector<CovectorPoint> rays;             // sorted, unique

  friend bool operator==(const MicroSupport1D&, const MicroSupport1D&) = default;
};

// Sorted union of the closures, with touching pieces merged.
std::vector<Interval> union_of_closures(const std::vector<Interval>& intervals);

MicroSupport1D ss(const GradedBarcode& f);
MicroSupport1D antipode(const MicroSupport1D& s);
bool contains_ray(const MicroSupport1D& s, const CovectorPoint& p);

// (RΓ_{±(t-x) ≥ 0} F)_x, computed bar by bar on realized representations.
GradedVectorSpace microgerm(const GradedBarcode& f, const CovectorPoint& p);

enum class GermKind { NotInSupport, Simple, PureNotSimple, NotPure };
GermKind classify_germ(const GradedBarcode& f, const CovectorPoint& p);
bool is_simple_at(const GradedBarcode& f, const CovectorPoint& p);
bool is_pure_at(const GradedBarcode& f, const CovectorPoint& p);
std::string to_string(GermKind kind);

// RΓ((-inf, b); F) from the quiver oracle.
GradedVectorSpace sections_below(const GradedBarcode& f, const Rational& b);

}  // namespace sheaf1d
