#include "sheaf1d/polycell.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "sheaf1d/errors.hpp"

namespace sheaf1d {

namespace {

using Bits = boost::dynamic_bitset<>;

Rational dot(const std::vector<Rational>& a, const Point& p) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * p[i];
  return s;
}

bool all_zero(const std::vector<Rational>& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

// Calls fn on every k-subset of {0, ..., n-1}.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(idx.size()) == k) {
      fn(idx);
      return;
    }
    for (int i = start; i <= n - (k - static_cast<int>(idx.size())); ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
}

// Vertices of {a_i · x ≤ b_i} (all non-strict), assumed bounded.
std::vector<Point> enumerate_vertices(int d, const std::vector<LinearConstraint>& cs) {
  std::set<Point> found;
  if (d == 0) {
    for (const auto& c : cs)
      if (0 > c.rhs) return {};
    return {Point{}};
  }
  RationalField q;
  int m = static_cast<int>(cs.size());
  for_each_subset(m, d, [&](const std::vector<int>& rows) {
    Matrix<Rational> a(d, d), b(d, 1);
    for (int r = 0; r < d; ++r) {
      for (int j = 0; j < d; ++j) a(r, j) = cs[rows[r]].coeffs[j];
      b(r, 0) = cs[rows[r]].rhs;
    }
    if (rank(q, a) < d) return;
    auto x = solve(q, a, b);
    Point p(d);
    for (int j = 0; j < d; ++j) p[j] = (*x)(j, 0);
    for (const auto& c : cs)
      if (dot(c.coeffs, p) > c.rhs) return;
    found.insert(std::move(p));
  });
  return {found.begin(), found.end()};
}

int affine_dim(const std::vector<Point>& verts, const Bits& members) {
  std::vector<const Point*> pts;
  for (std::size_t i = members.find_first(); i != Bits::npos; i = members.find_next(i)) pts.push_back(&verts[i]);
  if (pts.size() <= 1) return 0;
  int d = static_cast<int>(pts[0]->size());
  Matrix<Rational> m(static_cast<int>(pts.size()) - 1, d);
  for (std::size_t r = 1; r < pts.size(); ++r)
    for (int j = 0; j < d; ++j) m(static_cast<int>(r) - 1, j) = (*pts[r])[j] - (*pts[0])[j];
  return rank(RationalField(), m);
}

// Face lattice of the closure of a bounded cell; `in_boundary` marks the
// faces lying in some strict facet, i.e. outside the cell itself.
struct FaceLattice {
  std::vector<Bits> faces;
  std::vector<int> dims;
  std::vector<char> in_boundary;
};

// Drops constant constraints; nullopt when one of them fails.
std::optional<std::vector<LinearConstraint>> effective_constraints(const PolyCell& cell) {
  std::vector<LinearConstraint> out;
  for (const auto& c : cell.constraints()) {
    if (all_zero(c.coeffs)) {
      if (c.strict ? !(0 < c.rhs) : !(0 <= c.rhs)) return std::nullopt;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

// Nullopt when the cell is empty.
std::optional<FaceLattice> face_lattice(int d, const std::vector<LinearConstraint>& cs) {
  auto verts = enumerate_vertices(d, cs);
  if (verts.empty()) return std::nullopt;
  std::size_t nv = verts.size();
  std::vector<Bits> tight(cs.size(), Bits(nv));
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t v = 0; v < nv; ++v)
      if (dot(cs[i].coeffs, verts[v]) == cs[i].rhs) tight[i].set(v);

  FaceLattice lat;
  std::set<Bits> seen;
  Bits all(nv);
  all.set();
  lat.faces.push_back(all);
  seen.insert(all);
  for (std::size_t k = 0; k < lat.faces.size(); ++k) {
    for (const auto& t : tight) {
      Bits g = lat.faces[k] & t;
      if (g.none() || seen.count(g)) continue;
      seen.insert(g);
      lat.faces.push_back(g);
    }
  }
  for (const auto& f : lat.faces) {
    lat.dims.push_back(affine_dim(verts, f));
    bool inb = false;
    for (std::size_t i = 0; i < cs.size() && !inb; ++i)
      if (cs[i].strict && f.is_subset_of(tight[i])) inb = true;
    lat.in_boundary.push_back(inb ? 1 : 0);
  }
  return lat;
}

// Cohomology of a cochain complex over ℤ/2 given cells by degree and the
// coboundary as (from, to) incidences.
GradedVectorSpace f2_cohomology(const std::vector<int>& degree, const std::vector<std::pair<int, int>>& incidences) {
  std::map<int, std::vector<int>> by_degree;
  std::vector<int> position(degree.size());
  for (std::size_t c = 0; c < degree.size(); ++c) {
    auto& v = by_degree[degree[c]];
    position[c] = static_cast<int>(v.size());
    v.push_back(static_cast<int>(c));
  }
  PrimeField f2(2);
  std::map<int, FMatrix<PrimeField>> delta;
  for (auto& [k, cells] : by_degree) {
    auto it = by_degree.find(k + 1);
    if (it == by_degree.end()) continue;
    delta[k] = zeros(f2, static_cast<int>(it->second.size()), static_cast<int>(cells.size()));
  }
  for (auto [from, to] : incidences) {
    auto& m = delta.at(degree[from]);
    m(position[to], position[from]) = f2.add(m(position[to], position[from]), 1);
  }
  std::map<int, int> ranks;
  for (auto& [k, m] : delta) ranks[k] = rank(f2, m);
  GradedVectorSpace out;
  for (auto& [k, cells] : by_degree) {
    std::int64_t h = static_cast<std::int64_t>(cells.size());
    if (ranks.count(k)) h -= ranks[k];
    if (ranks.count(k - 1)) h -= ranks[k - 1];
    out.add(k, h);
  }
  return out;
}

GradedVectorSpace rgamma_c_bounded(const PolyCell& cell) {
  auto cs = effective_constraints(cell);
  if (!cs) return {};
  auto lat = face_lattice(cell.dim(), *cs);
  if (!lat) return {};
  std::vector<int> index(lat->faces.size(), -1), degree;
  for (std::size_t i = 0; i < lat->faces.size(); ++i) {
    if (lat->in_boundary[i]) continue;
    index[i] = static_cast<int>(degree.size());
    degree.push_back(lat->dims[i]);
  }
  std::vector<std::pair<int, int>> inc;
  for (std::size_t g = 0; g < lat->faces.size(); ++g) {
    if (index[g] < 0) continue;
    for (std::size_t f = 0; f < lat->faces.size(); ++f)
      if (index[f] >= 0 && lat->dims[f] == lat->dims[g] + 1 && lat->faces[g].is_subset_of(lat->faces[f]))
        inc.emplace_back(index[g], index[f]);
  }
  return f2_cohomology(degree, inc);
}

PolyCell truncated(const PolyCell& cell, const Rational& r) {
  Point lo(cell.dim(), -r), hi(cell.dim(), r);
  return cell.intersect(PolyCell::box(lo, hi, true));
}

}  // namespace

bool LinearConstraint::satisfied_by(const Point& p) const {
  Rational v = dot(coeffs, p);
  return strict ? v < rhs : v <= rhs;
}

PolyCell::PolyCell(int dim, std::vector<LinearConstraint> constraints) : dim_(dim), constraints_(std::move(constraints)) {
  if (dim < 0 || dim > kMaxDim) throw MalformedInput("cell dimension must lie in 0..4");
  for (const auto& c : constraints_)
    if (static_cast<int>(c.coeffs.size()) != dim) throw MalformedInput("constraint length does not match the cell dimension");
}

PolyCell PolyCell::box(const Point& lo, const Point& hi, bool open) {
  if (lo.size() != hi.size()) throw MalformedInput("box corners differ in dimension");
  int d = static_cast<int>(lo.size());
  std::vector<LinearConstraint> cs;
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> up(d, 0), down(d, 0);
    up[i] = 1;
    down[i] = -1;
    cs.push_back({up, hi[i], open});
    cs.push_back({down, -lo[i], open});
  }
  return PolyCell(d, std::move(cs));
}

bool PolyCell::contains(const Point& p) const {
  if (static_cast<int>(p.size()) != dim_) throw MalformedInput("point dimension does not match the cell");
  return std::all_of(constraints_.begin(), constraints_.end(), [&](const auto& c) { return c.satisfied_by(p); });
}

bool PolyCell::on_boundary(const Point& p) const {
  if (!closure().contains(p)) return false;
  for (const auto& c : constraints_)
    if (!all_zero(c.coeffs) && dot(c.coeffs, p) == c.rhs) return true;
  return false;
}

PolyCell PolyCell::closure() const {
  auto cs = constraints_;
  for (auto& c : cs) c.strict = false;
  return PolyCell(dim_, std::move(cs));
}

PolyCell PolyCell::intersect(const PolyCell& other) const {
  if (other.dim_ != dim_) throw MalformedInput("intersecting cells of different dimensions");
  auto cs = constraints_;
  cs.insert(cs.end(), other.constraints_.begin(), other.constraints_.end());
  return PolyCell(dim_, std::move(cs));
}

PolyCell PolyCell::fix(int offset, const Point& values) const {
  int k = static_cast<int>(values.size());
  if (offset < 0 || offset + k > dim_) throw MalformedInput("fixed coordinates out of range");
  std::vector<LinearConstraint> cs;
  for (const auto& c : constraints_) {
    LinearConstraint n;
    n.rhs = c.rhs;
    n.strict = c.strict;
    for (int j = 0; j < dim_; ++j) {
      if (j >= offset && j < offset + k)
        n.rhs -= c.coeffs[j] * values[j - offset];
      else
        n.coeffs.push_back(c.coeffs[j]);
    }
    cs.push_back(std::move(n));
  }
  return PolyCell(dim_ - k, std::move(cs));
}

PolyCell PolyCell::embed(int total_dim, int offset) const {
  if (offset < 0 || offset + dim_ > total_dim) throw MalformedInput("embedding out of range");
  std::vector<LinearConstraint> cs;
  for (const auto& c : constraints_) {
    LinearConstraint n{std::vector<Rational>(total_dim, 0), c.rhs, c.strict};
    for (int j = 0; j < dim_; ++j) n.coeffs[offset + j] = c.coeffs[j];
    cs.push_back(std::move(n));
  }
  return PolyCell(total_dim, std::move(cs));
}

PolyCell PolyCell::transformed(const Matrix<Rational>& u, const Point& t) const {
  RationalField q;
  auto inv = inverse(q, u);
  if (!inv || u.rows() != dim_ || static_cast<int>(t.size()) != dim_) throw MalformedInput("transform must be invertible of matching size");
  // a·x ≤ b with x = u⁻¹(y - t) reads (a u⁻¹)·y ≤ b + (a u⁻¹)·t.
  std::vector<LinearConstraint> cs;
  for (const auto& c : constraints_) {
    LinearConstraint n{std::vector<Rational>(dim_, 0), c.rhs, c.strict};
    for (int j = 0; j < dim_; ++j)
      for (int i = 0; i < dim_; ++i) n.coeffs[j] += c.coeffs[i] * (*inv)(i, j);
    n.rhs += dot(n.coeffs, t);
    cs.push_back(std::move(n));
  }
  return PolyCell(dim_, std::move(cs));
}

std::string PolyCell::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    if (i) os << ", ";
    const auto& c = constraints_[i];
    os << "(";
    for (int j = 0; j < dim_; ++j) os << (j ? " " : "") << format_rational(c.coeffs[j]);
    os << ")" << (c.strict ? " < " : " <= ") << format_rational(c.rhs);
  }
  os << "} in R^" << dim_;
  return os.str();
}

bool is_bounded(const PolyCell& cell) {
  int d = cell.dim();
  // The recession cone of the closure meets the unit cube only at 0.
  std::vector<LinearConstraint> cone;
  for (const auto& c : cell.constraints()) cone.push_back({c.coeffs, 0, false});
  auto cube = PolyCell::box(Point(d, -1), Point(d, 1), false).constraints();
  cone.insert(cone.end(), cube.begin(), cube.end());
  auto verts = enumerate_vertices(d, cone);
  return std::all_of(verts.begin(), verts.end(), [](const Point& p) { return all_zero(p); });
}

std::vector<Point> closure_vertices(const PolyCell& cell) {
  if (!is_bounded(cell)) throw PreconditionError("closure vertices need a bounded cell");
  auto cs = effective_constraints(cell.closure());
  if (!cs) return {};
  return enumerate_vertices(cell.dim(), *cs);
}

GradedVectorSpace rgamma_c(const PolyCell& cell, const std::optional<Rational>& box) {
  if (is_bounded(cell)) return rgamma_c_bounded(cell);
  if (!box) throw PreconditionError("unbounded cell needs a truncation box");
  if (*box <= 0) throw PreconditionError("truncation box must be positive");
  auto first = rgamma_c_bounded(truncated(cell, *box));
  auto second = rgamma_c_bounded(truncated(cell, *box * 2));
  if (first != second)
    throw UnstableTruncation("compactly supported cohomology changed when the box doubled: " + first.to_string() + " vs " +
                             second.to_string());
  return first;
}

GradedVectorSpace rgamma_c_order_complex(const PolyCell& cell) {
  if (!is_bounded(cell)) throw PreconditionError("order complex oracle needs a bounded cell");
  auto cs = effective_constraints(cell);
  if (!cs) return {};
  auto lat = face_lattice(cell.dim(), *cs);
  if (!lat) return {};
  std::size_t n = lat->faces.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return lat->dims[a] < lat->dims[b]; });
  std::vector<std::vector<std::size_t>> above(n);
  for (auto a : order)
    for (auto b : order)
      if (lat->dims[b] > lat->dims[a] && lat->faces[a].is_subset_of(lat->faces[b])) above[a].push_back(b);

  // Chains F0 ⊂ ... ⊂ Fk whose top face is not in the boundary are the
  // simplices of the relative complex.
  std::vector<std::vector<std::size_t>> chains;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> grow = [&](std::size_t f) {
    cur.push_back(f);
    chains.push_back(cur);
    for (auto g : above[f]) grow(g);
    cur.pop_back();
  };
  for (std::size_t f = 0; f < n; ++f) grow(f);
  std::map<std::vector<std::size_t>, int> index;
  std::vector<int> degree;
  for (const auto& c : chains) {
    if (lat->in_boundary[c.back()]) continue;
    index[c] = static_cast<int>(degree.size());
    degree.push_back(static_cast<int>(c.size()) - 1);
  }
  std::vector<std::pair<int, int>> inc;
  for (const auto& [c, i] : index) {
    if (c.size() < 2) continue;
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      auto face = c;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      auto it = index.find(face);
      if (it != index.end()) inc.emplace_back(it->second, i);
    }
  }
  return f2_cohomology(degree, inc);
}

std::optional<Interval> cell_interval(const PolyCell& cell) {
  if (cell.dim() != 1) throw PreconditionError("cell_interval needs a one-dimensional cell");
  auto cs = effective_constraints(cell);
  if (!cs) return std::nullopt;
  Endpoint lo = Endpoint::neg_inf(), hi = Endpoint::pos_inf();
  for (const auto& c : *cs) {
    Rational v = c.rhs / c.coeffs[0];
    if (c.coeffs[0] > 0) {
      if (!hi.is_finite() || v < hi.value || (v == hi.value && c.strict)) hi = Endpoint::at(v, !c.strict);
    } else {
      if (!lo.is_finite() || v > lo.value || (v == lo.value && c.strict)) lo = Endpoint::at(v, !c.strict);
    }
  }
  return Interval::try_make(lo, hi);
}

}  // namespace sheaf1d
