#pragma once

#include <utility>
#include <vector>

#include "sheaf1d/matrix.hpp"

namespace sheaf1d {

// Polynomials over a field, coefficients from the constant term upward,
// with no trailing zeros (the zero polynomial is empty).
template <class F>
using Poly = std::vector<typename F::value_type>;

namespace poly {

template <class F>
void trim(const F& f, Poly<F>& p) {
  while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

template <class F>
int degree(const Poly<F>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class F>
Poly<F> sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class F>
Poly<F> add(const F& f, const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r(std::max(a.size(), b.size()), f.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
  trim(f, r);
  return r;
}

template <class F>
Poly<F> mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  trim(f, r);
  return r;
}

// Quotient and remainder of a by a nonzero b.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, Poly<F> a, const Poly<F>& b) {
  int db = degree<F>(b);
  if (degree<F>(a) < db) return {{}, a};
  Poly<F> q(a.size() - b.size() + 1, f.zero());
  auto lead_inv = f.inv(b.back());
  for (int d = degree<F>(a); d >= db; --d) {
    auto c = f.mul(a[d], lead_inv);
    q[d - db] = c;
    if (f.is_zero(c)) continue;
    for (int i = 0; i <= db; ++i) a[d - db + i] = f.sub(a[d - db + i], f.mul(c, b[i]));
  }
  a.resize(db);
  trim(f, a);
  trim(f, q);
  return {q, a};
}

template <class F>
Poly<F> monic(const F& f, Poly<F> p) {
  if (p.empty()) return p;
  auto inv = f.inv(p.back());
  for (auto& c : p) c = f.mul(c, inv);
  return p;
}

}  // namespace poly

// Invariant factors d_1 | d_2 | ... of a square matrix (monic, degree ≥ 1),
// from the Smith normal form of xI − A over k[x].
template <class F>
std::vector<Poly<F>> invariant_factors(const F& f, const FMatrix<F>& a) {
  int n = a.rows();
  std::vector<std::vector<Poly<F>>> m(n, std::vector<Poly<F>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly<F> p{f.neg(a(i, j))};
      if (i == j) p.push_back(f.one());
      poly::trim(f, p);
      m[i][j] = std::move(p);
    }
  auto row_op = [&](int target, int source, const Poly<F>& factor, int from) {
    for (int j = from; j < n; ++j) m[target][j] = poly::sub(f, m[target][j], poly::mul(f, factor, m[source][j]));
  };
  auto col_op = [&](int target, int source, const Poly<F>& factor, int from) {
    for (int i = from; i < n; ++i) m[i][target] = poly::sub(f, m[i][target], poly::mul(f, factor, m[i][source]));
  };
  for (int t = 0; t < n; ++t) {
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (!m[i][j].empty() && (bi < 0 || m[i][j].size() < m[bi][bj].size())) bi = i, bj = j;
      if (bi < 0) break;
      std::swap(m[t], m[bi]);
      for (int i = 0; i < n; ++i) std::swap(m[i][t], m[i][bj]);
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (m[i][t].empty()) continue;
        row_op(i, t, poly::divmod(f, m[i][t], m[t][t]).first, t);
        if (!m[i][t].empty()) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (m[t][j].empty()) continue;
        col_op(j, t, poly::divmod(f, m[t][j], m[t][t]).first, t);
        if (!m[t][j].empty()) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the rest; otherwise fold a bad row in.
      int bad = -1;
      for (int i = t + 1; i < n && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (!poly::divmod(f, m[i][j], m[t][t]).second.empty()) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = t; j < n; ++j) m[t][j] = poly::add(f, m[t][j], m[bad][j]);
    }
  }
  std::vector<Poly<F>> out;
  for (int t = 0; t < n; ++t)
    if (poly::degree<F>(m[t][t]) >= 1) out.push_back(poly::monic(f, m[t][t]));
  return out;
}

// Companion matrix of a monic polynomial: ones below the diagonal and the
// negated lower coefficients in the last column.
template <class F>
FMatrix<F> companion(const F& f, const Poly<F>& p) {
  int d = poly::degree<F>(p);
  FMatrix<F> c = zeros(f, d, d);
  for (int i = 1; i < d; ++i) c(i, i - 1) = f.one();
  for (int i = 0; i < d; ++i) c(i, d - 1) = f.neg(p[i]);
  return c;
}

// Rational canonical form: block diagonal companion matrices of the
// invariant factors in divisibility order.
template <class F>
FMatrix<F> frobenius_form(const F& f, const FMatrix<F>& a) {
  FMatrix<F> out = zeros(f, a.rows(), a.cols());
  int at = 0;
  for (const auto& p : invariant_factors(f, a)) {
    auto c = companion(f, p);
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j) out(at + i, at + j) = c(i, j);
    at += c.rows();
  }
  return out;
}

}  // namespace sheaf1d
