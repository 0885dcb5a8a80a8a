#include "sheaf1d/orbit.hpp"

#include <algorithm>
#include <stdexcept>

#include "sheaf1d/calculus.hpp"
#include "sheaf1d/errors.hpp"

namespace sheaf1d {

namespace {

const PrimeField k2(2);

// H^i = dim C^i − rank(d out) − rank(d in); maps[i] leaves position i.
GradedVectorSpace complex_cohomology(int lowest, const std::vector<int>& dims, const std::vector<F2Matrix>& maps) {
  GradedVectorSpace out;
  std::vector<int> ranks;
  for (const auto& m : maps) ranks.push_back(rank(k2, m));
  for (std::size_t i = 0; i < dims.size(); ++i) {
    int h = dims[i];
    if (i < ranks.size()) h -= ranks[i];
    if (i > 0) h -= ranks[i - 1];
    out.add(lowest + static_cast<int>(i), h);
  }
  return out;
}

// d = a + εb between free modules, as a k-linear map on (1-part, ε-part).
F2Matrix underlying(const F2Matrix& a, const F2Matrix& b) {
  int m = a.rows(), n = a.cols();
  F2Matrix u = zeros(k2, 2 * m, 2 * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      u(i, j) = a(i, j);
      u(m + i, j) = b(i, j);
      u(m + i, n + j) = a(i, j);
    }
  return u;
}

// Multiplication by ε on K^r.
F2Matrix epsilon(int r) {
  F2Matrix e = zeros(k2, 2 * r, 2 * r);
  for (int i = 0; i < r; ++i) e(r + i, i) = 1;
  return e;
}

void require_f2(const GradedBarcode& f, const GradedBarcode& g) {
  require_same_field(f.field(), g.field());
  if (f.field() != FieldSpec::prime(2)) throw PreconditionError("orbit category computations need the field Z/2");
}

F2Matrix one_by_one(std::uint32_t v) { return F2Matrix(1, 1, v); }

}  // namespace

void DualNumbersModuleComplex::validate() const {
  std::size_t n = ranks.size();
  std::size_t maps = n == 0 ? 0 : n - 1;
  if (d_const.size() != maps || d_eps.size() != maps) throw MalformedInput("expected one differential per gap");
  for (int r : ranks)
    if (r < 0) throw MalformedInput("negative rank");
  for (std::size_t i = 0; i < maps; ++i) {
    for (const F2Matrix* m : {&d_const[i], &d_eps[i]}) {
      if (m->rows() != ranks[i + 1] || m->cols() != ranks[i]) throw MalformedInput("differential has wrong shape");
      for (int r = 0; r < m->rows(); ++r)
        for (int c = 0; c < m->cols(); ++c)
          if ((*m)(r, c) > 1) throw MalformedInput("entries must be 0 or 1");
    }
  }
  for (std::size_t i = 0; i + 1 < maps; ++i) {
    auto constant = multiply(k2, d_const[i + 1], d_const[i]);
    auto linear = add(k2, multiply(k2, d_const[i + 1], d_eps[i]), multiply(k2, d_eps[i + 1], d_const[i]));
    if (!is_zero_matrix(k2, constant) || !is_zero_matrix(k2, linear)) throw MalformedInput("d squared is not zero");
  }
}

GradedVectorSpace DualNumbersModuleComplex::underlying_cohomology() const {
  std::vector<int> dims;
  for (int r : ranks) dims.push_back(2 * r);
  std::vector<F2Matrix> maps;
  for (std::size_t i = 0; i < d_const.size(); ++i) maps.push_back(underlying(d_const[i], d_eps[i]));
  return complex_cohomology(lowest_degree, dims, maps);
}

GradedVectorSpace DualNumbersModuleComplex::ext_from_residue_field(int max_degree) const {
  GradedVectorSpace out;
  if (ranks.empty() || max_degree < lowest_degree) return out;
  // Hom_K(P, L) for P: ⋯ → K →ε K is the double complex with L^m at (j, m),
  // vertical d_L and horizontal ε; in characteristic 2 no signs are needed.
  // Truncating at j = J leaves total degrees below lowest + J untouched.
  int lo = lowest_degree, hi = highest_degree();
  int jmax = max_degree - lo + 2;
  auto block = [&](int n) {
    std::vector<std::pair<int, int>> parts;  // (j, m)
    for (int j = 0; j <= jmax; ++j)
      if (n - j >= lo && n - j <= hi) parts.push_back({j, n - j});
    return parts;
  };
  auto size_of = [&](const std::vector<std::pair<int, int>>& parts) {
    int s = 0;
    for (auto [j, m] : parts) s += 2 * ranks[m - lo];
    return s;
  };
  std::vector<int> dims;
  std::vector<F2Matrix> maps;
  for (int n = lo; n <= max_degree + 1; ++n) {
    auto src = block(n), dst = block(n + 1);
    dims.push_back(size_of(src));
    F2Matrix d = zeros(k2, size_of(dst), size_of(src));
    int col = 0;
    for (auto [j, m] : src) {
      int width = 2 * ranks[m - lo];
      int row = 0;
      for (auto [j2, m2] : dst) {
        int height = 2 * ranks[m2 - lo];
        F2Matrix piece;
        if (j2 == j && m2 == m + 1) piece = underlying(d_const[m - lo], d_eps[m - lo]);
        else if (j2 == j + 1 && m2 == m) piece = epsilon(ranks[m - lo]);
        for (int r = 0; r < piece.rows(); ++r)
          for (int c = 0; c < piece.cols(); ++c) d(row + r, col + c) = piece(r, c);
        row += height;
      }
      col += width;
    }
    maps.push_back(std::move(d));
  }
  dims.push_back(size_of(block(max_degree + 2)));
  auto all = complex_cohomology(lo, dims, maps);
  for (int n = lo; n <= max_degree; ++n) out.add(n, all.dim(n));
  return out;
}

DualNumbersModuleComplex lpq_complex(int p, int q) {
  if (p > q) throw PreconditionError("L^{p,q} needs p <= q");
  DualNumbersModuleComplex l;
  l.lowest_degree = p;
  l.ranks.assign(q - p + 1, 1);
  for (int i = p; i < q; ++i) {
    l.d_const.push_back(one_by_one(0));
    l.d_eps.push_back(one_by_one(1));
  }
  return l;
}

std::int64_t orbit_hom_dim(const GradedBarcode& f, const GradedBarcode& g) {
  require_f2(f, g);
  return hom_complex(f, g).total_dim();
}

std::int64_t orbit_hom_dim_oracle(const GradedBarcode& f, const GradedBarcode& g) {
  require_f2(f, g);
  return hom_complex_oracle(f, g).total_dim();
}

int dualnumbers_ext(int i) {
  if (i < 0) throw PreconditionError("Ext degree must be nonnegative");
  // ⋯ → K →ε K → K in cohomological degrees -(i+1), ..., 0.
  DualNumbersModuleComplex res;
  res.lowest_degree = -(i + 1);
  res.ranks.assign(i + 2, 1);
  for (int j = 0; j <= i; ++j) {
    res.d_const.push_back(one_by_one(0));
    res.d_eps.push_back(one_by_one(1));
  }
  res.validate();
  // A resolution of k, up to the kernel left at the truncated end.
  GradedVectorSpace expected({{0, 1}, {-(i + 1), 1}});
  if (res.underlying_cohomology() != expected) throw std::logic_error("not a resolution of k");
  // Hom_K(K^r, k) = k^r and f ↦ f∘(a + εb) is aᵀ, since ε kills k.
  std::vector<int> dims;
  std::vector<F2Matrix> maps;
  for (int j = 0; j <= i + 1; ++j) dims.push_back(res.ranks[i + 1 - j]);
  for (int j = 0; j <= i; ++j) maps.push_back(transpose(res.d_const[i - j]));
  return static_cast<int>(complex_cohomology(0, dims, maps).dim(i));
}

bool lpq_triangle_check(int p, int q) {
  auto l = lpq_complex(p, q);
  l.validate();
  GradedVectorSpace expected = p < q ? GradedVectorSpace({{p, 1}, {q, 1}}) : GradedVectorSpace::single(p, 2);
  if (l.underlying_cohomology() != expected) return false;

  // k[-p] = εK in degree p is a subcomplex; the quotient keeps only the
  // 1-part in degree p and should be quasi-isomorphic to k[-q].
  std::vector<int> dims;
  std::vector<F2Matrix> maps;
  for (int m = p; m <= q; ++m) dims.push_back(m == p ? 1 : 2 * l.ranks[m - p]);
  for (int m = p; m < q; ++m) {
    auto u = underlying(l.d_const[m - p], l.d_eps[m - p]);
    if (m == p) {
      if (!is_zero_matrix(k2, select_columns(u, {1}))) return false;
      u = select_columns(u, {0});
    }
    maps.push_back(u);
  }
  if (complex_cohomology(p, dims, maps) != GradedVectorSpace::single(q, 1)) return false;

  // If the connecting map k[-q] → k[-p+1] were zero, L would split and
  // Ext^{q+1}(k, L) would be Ext^{q+1}(k, k[-p] ⊕ k[-q]), which is nonzero.
  auto ext = l.ext_from_residue_field(q + 2);
  for (int n = p - 1; n <= q + 2; ++n)
    if (ext.dim(n) != (p <= n && n <= q ? 1 : 0)) return false;

  // Ext^{q-p+1}(k, k) is a line, so the nonzero connecting map is the
  // (q-p+1)-th Yoneda power of the degree-1 class once that power is
  // nonzero. The class lifts to the shift P_{j+1} → P_j, identity on K and
  // a chain map because it commutes with ε. Its power followed by K → k is
  // a nonzero cocycle, and Hom_K(P, k) has zero differential.
  int m = q - p + 1;
  if (dualnumbers_ext(m) != 1) return false;
  F2Matrix shift = identity(k2, 2), eps = epsilon(1);
  if (multiply(k2, eps, shift) != multiply(k2, shift, eps)) return false;
  F2Matrix power = identity(k2, 2);
  for (int step = 0; step < m; ++step) power = multiply(k2, shift, power);
  F2Matrix augmentation(1, 2, 0);
  augmentation(0, 0) = 1;
  return !is_zero_matrix(k2, multiply(k2, augmentation, power));
}

bool stabilization_bound_check(const GradedBarcode& f, const GradedBarcode& g, int witness) {
  require_f2(f, g);
  if (f.empty() || g.empty()) return true;
  int a = f.bars().front().degree, b = a;
  for (const auto* x : {&f, &g})
    for (const auto& bar : x->bars()) {
      a = std::min(a, bar.degree);
      b = std::max(b, bar.degree);
    }
  int bound = b - a + 2;
  auto rhom = hom_complex(f, g);
  int top = std::max(witness, bound + 1);
  if (!rhom.is_zero()) top = std::max(top, rhom.dims().rbegin()->first + 1);
  std::int64_t partial = 0, stable = -1;
  for (int n = 0; n <= top; ++n) {
    partial += rhom.dim(n);
    if (n == bound + 1) stable = partial;
    if (n > bound + 1 && partial != stable) return false;
  }
  return true;
}

void PointComplex::validate() const {
  std::size_t maps = dims.empty() ? 0 : dims.size() - 1;
  if (d.size() != maps) throw MalformedInput("expected one differential per gap");
  for (std::size_t i = 0; i < maps; ++i)
    if (d[i].rows() != dims[i + 1] || d[i].cols() != dims[i]) throw MalformedInput("differential has wrong shape");
  for (std::size_t i = 0; i + 1 < maps; ++i)
    if (!is_zero_matrix(k2, multiply(k2, d[i + 1], d[i]))) throw MalformedInput("d squared is not zero");
}

GradedVectorSpace PointComplex::cohomology() const {
  validate();
  return complex_cohomology(lowest_degree, dims, d);
}

std::int64_t orbit_hom_point_sum(const PointComplex& v, const PointComplex& w) {
  auto hv = v.cohomology(), hw = w.cohomology();
  std::int64_t total = 0;
  int lo = w.lowest_degree - (v.lowest_degree + static_cast<int>(v.dims.size()));
  int hi = w.lowest_degree + static_cast<int>(w.dims.size()) - v.lowest_degree;
  for (int n = lo; n <= hi; ++n)
    for (const auto& [i, dim] : hv.dims()) total += dim * hw.dim(i + n);
  return total;
}

std::int64_t orbit_hom_point_model(const PointComplex& v, const PointComplex& w) {
  v.validate();
  w.validate();
  auto totalize = [](const PointComplex& c) {
    int n = 0;
    std::vector<int> off;
    for (int d : c.dims) off.push_back(n), n += d;
    F2Matrix delta = zeros(k2, n, n);
    for (std::size_t i = 0; i < c.d.size(); ++i)
      for (int r = 0; r < c.d[i].rows(); ++r)
        for (int s = 0; s < c.d[i].cols(); ++s) delta(off[i + 1] + r, off[i] + s) = c.d[i](r, s);
    return delta;
  };
  F2Matrix dv = totalize(v), dw = totalize(w);
  int n = dv.rows(), m = dw.rows();
  // δ(X) = δ_W X + X δ_V on m×n matrices, X_{ij} at i·n + j.
  F2Matrix op = zeros(k2, m * n, m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      for (int t = 0; t < m; ++t) op(i * n + j, t * n + j) = k2.add(op(i * n + j, t * n + j), dw(i, t));
      for (int t = 0; t < n; ++t) op(i * n + j, i * n + t) = k2.add(op(i * n + j, i * n + t), dv(t, j));
    }
  return m * n - 2 * static_cast<std::int64_t>(rank(k2, op));
}

}  // namespace sheaf1d
