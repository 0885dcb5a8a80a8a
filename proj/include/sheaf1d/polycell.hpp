#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheaf1d/barcode.hpp"
#include "sheaf1d/matrix.hpp"

namespace sheaf1d {

using Point = std::vector<Rational>;

// coeffs · x ≤ rhs, or < rhs when strict.
struct LinearConstraint {
  std::vector<Rational> coeffs;
  Rational rhs;
  bool strict = false;

  bool satisfied_by(const Point& p) const;
  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

// Locally closed convex set in ℝ^d (d ≤ 4) cut out by finitely many
// affine inequalities, each strict or not.
class PolyCell {
 public:
  static constexpr int kMaxDim = 4;

  PolyCell(int dim, std::vector<LinearConstraint> constraints);

  // {lo_i ≤ x_i ≤ hi_i} with all ends closed, or all open.
  static PolyCell box(const Point& lo, const Point& hi, bool open);
  static PolyCell whole_space(int dim) { return PolyCell(dim, {}); }

  int dim() const { return dim_; }
  const std::vector<LinearConstraint>& constraints() const { return constraints_; }

  bool contains(const Point& p) const;
  // In the closure but not in the set obtained by making every
  // inequality strict.
  bool on_boundary(const Point& p) const;

  PolyCell closure() const;
  PolyCell intersect(const PolyCell& other) const;
  // Fixes coordinates offset, ..., offset + values.size() - 1.
  PolyCell fix(int offset, const Point& values) const;
  // The same set in ℝ^total_dim, on coordinates offset, ..., offset + dim - 1.
  PolyCell embed(int total_dim, int offset) const;
  // Image under y = u x + t for an invertible u.
  PolyCell transformed(const Matrix<Rational>& u, const Point& t) const;

  std::string to_string() const;
  friend bool operator==(const PolyCell&, const PolyCell&) = default;

 private:
  int dim_;
  std::vector<LinearConstraint> constraints_;
};

// Whether the closure of the cell is bounded (or empty).
bool is_bounded(const PolyCell& cell);

// Vertices of the closure of a bounded cell, sorted.
std::vector<Point> closure_vertices(const PolyCell& cell);

// Compactly supported cohomology. Unbounded cells need a truncation box
// (-R, R)^d; the answer must not change when R doubles.
GradedVectorSpace rgamma_c(const PolyCell& cell, const std::optional<Rational>& box = std::nullopt);

// The same for a bounded cell from the barycentric subdivision of the face
// lattice; slower, kept as an oracle.
GradedVectorSpace rgamma_c_order_complex(const PolyCell& cell);

// A one-dimensional cell as an interval (nullopt when empty).
std::optional<Interval> cell_interval(const PolyCell& cell);

}  // namespace sheaf1d
