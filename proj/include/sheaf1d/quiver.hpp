#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "sheaf1d/matrix.hpp"

namespace sheaf1d {

struct Arrow {
  int source;
  int target;
};

// Representation of a finite acyclic quiver. maps[a] has shape
// dims[target] x dims[source].
template <class F>
struct QuiverRep {
  std::vector<int> dims;
  std::vector<Arrow> arrows;
  std::vector<FMatrix<F>> maps;

  int vertex_count() const { return static_cast<int>(dims.size()); }
  int total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }
};

// A morphism of representations: one matrix per vertex, shape W_k x V_k.
template <class F>
using Morphism = std::vector<FMatrix<F>>;

namespace detail {

template <class F>
std::vector<int> hom_offsets(const QuiverRep<F>& v, const QuiverRep<F>& w) {
  std::vector<int> off(v.vertex_count() + 1, 0);
  for (int k = 0; k < v.vertex_count(); ++k) off[k + 1] = off[k] + w.dims[k] * v.dims[k];
  return off;
}

// Matrix of d: ⊕_k Hom(V_k, W_k) → ⊕_a Hom(V_s, W_t), d(φ)_a = W(a)φ_s − φ_t V(a).
template <class F>
FMatrix<F> hom_differential(const F& f, const QuiverRep<F>& v, const QuiverRep<F>& w) {
  auto off = hom_offsets(v, w);
  int rows = 0;
  for (const Arrow& a : v.arrows) rows += w.dims[a.target] * v.dims[a.source];
  FMatrix<F> d = zeros(f, rows, off.back());
  int row = 0;
  for (std::size_t ai = 0; ai < v.arrows.size(); ++ai) {
    const Arrow& a = v.arrows[ai];
    int vs = v.dims[a.source], vt = v.dims[a.target], wt = w.dims[a.target], ws = w.dims[a.source];
    const auto& wa = w.maps[ai];
    const auto& va = v.maps[ai];
    for (int r = 0; r < wt; ++r)
      for (int c = 0; c < vs; ++c, ++row) {
        for (int m = 0; m < ws; ++m)
          if (!f.is_zero(wa(r, m))) {
            int col = off[a.source] + m * vs + c;
            d(row, col) = f.add(d(row, col), wa(r, m));
          }
        for (int m = 0; m < vt; ++m)
          if (!f.is_zero(va(m, c))) {
            int col = off[a.target] + r * vt + m;
            d(row, col) = f.sub(d(row, col), va(m, c));
          }
      }
  }
  return d;
}

}  // namespace detail

template <class F>
std::vector<Morphism<F>> hom_basis(const F& f, const QuiverRep<F>& v, const QuiverRep<F>& w) {
  auto off = detail::hom_offsets(v, w);
  FMatrix<F> ker = kernel(f, detail::hom_differential(f, v, w));
  std::vector<Morphism<F>> basis;
  for (int b = 0; b < ker.cols(); ++b) {
    Morphism<F> phi;
    for (int k = 0; k < v.vertex_count(); ++k) {
      FMatrix<F> m(w.dims[k], v.dims[k], f.zero());
      for (int r = 0; r < w.dims[k]; ++r)
        for (int c = 0; c < v.dims[k]; ++c) m(r, c) = ker(off[k] + r * v.dims[k] + c, b);
      phi.push_back(std::move(m));
    }
    basis.push_back(std::move(phi));
  }
  return basis;
}

template <class F>
int quiver_hom_dim(const F& f, const QuiverRep<F>& v, const QuiverRep<F>& w) {
  auto d = detail::hom_differential(f, v, w);
  return d.cols() - rank(f, d);
}

// Ext¹ is the cokernel of the differential of the standard resolution.
template <class F>
int quiver_ext1_dim(const F& f, const QuiverRep<F>& v, const QuiverRep<F>& w) {
  auto d = detail::hom_differential(f, v, w);
  return d.rows() - rank(f, d);
}

template <class F>
Morphism<F> compose(const F& f, const Morphism<F>& second, const Morphism<F>& first) {
  Morphism<F> out;
  for (std::size_t k = 0; k < first.size(); ++k) out.push_back(multiply(f, second[k], first[k]));
  return out;
}

template <class F>
bool is_isomorphism(const F& f, const Morphism<F>& phi) {
  for (const auto& m : phi)
    if (!is_invertible(f, m)) return false;
  return true;
}

template <class F>
bool is_zero_morphism(const F& f, const Morphism<F>& phi) {
  for (const auto& m : phi)
    if (!is_zero_matrix(f, m)) return false;
  return true;
}

template <class F>
bool is_morphism(const F& f, const QuiverRep<F>& v, const QuiverRep<F>& w, const Morphism<F>& phi) {
  for (std::size_t ai = 0; ai < v.arrows.size(); ++ai) {
    const Arrow& a = v.arrows[ai];
    if (!(multiply(f, w.maps[ai], phi[a.source]) == multiply(f, phi[a.target], v.maps[ai]))) return false;
  }
  return true;
}

// Subrepresentation ker(phi) in the basis given by kernel().
template <class F>
QuiverRep<F> kernel_rep(const F& f, const QuiverRep<F>& v, const Morphism<F>& phi) {
  QuiverRep<F> k;
  k.arrows = v.arrows;
  std::vector<FMatrix<F>> bases;
  for (int x = 0; x < v.vertex_count(); ++x) {
    bases.push_back(kernel(f, phi[x]));
    k.dims.push_back(bases.back().cols());
  }
  for (std::size_t ai = 0; ai < v.arrows.size(); ++ai) {
    const Arrow& a = v.arrows[ai];
    auto image = multiply(f, v.maps[ai], bases[a.source]);
    auto x = solve(f, bases[a.target], image);
    k.maps.push_back(x ? *x : zeros(f, k.dims[a.target], k.dims[a.source]));
  }
  return k;
}

// Quotient representation W / im(phi).
template <class F>
QuiverRep<F> cokernel_rep(const F& f, const QuiverRep<F>& w, const Morphism<F>& phi) {
  QuiverRep<F> q;
  q.arrows = w.arrows;
  std::vector<FMatrix<F>> sections, projections;
  for (int x = 0; x < w.vertex_count(); ++x) {
    const auto& m = phi[x];
    auto img_cols = independent_columns(f, m);
    auto img = select_columns(m, img_cols);
    auto comp = complement_standard_basis(f, img);
    auto id = identity(f, w.dims[x]);
    auto section = select_columns(id, comp);
    auto change = inverse(f, hstack(img, section));
    std::vector<int> tail;
    for (int r = img.cols(); r < w.dims[x]; ++r) tail.push_back(r);
    projections.push_back(select_rows(*change, tail));
    sections.push_back(std::move(section));
    q.dims.push_back(static_cast<int>(comp.size()));
  }
  for (std::size_t ai = 0; ai < w.arrows.size(); ++ai) {
    const Arrow& a = w.arrows[ai];
    q.maps.push_back(multiply(f, projections[a.target], multiply(f, w.maps[ai], sections[a.source])));
  }
  return q;
}

// Image of phi as a subrepresentation of w.
template <class F>
QuiverRep<F> image_rep(const F& f, const QuiverRep<F>& w, const Morphism<F>& phi) {
  QuiverRep<F> im;
  im.arrows = w.arrows;
  std::vector<FMatrix<F>> bases;
  for (int x = 0; x < w.vertex_count(); ++x) {
    bases.push_back(select_columns(phi[x], independent_columns(f, phi[x])));
    im.dims.push_back(bases.back().cols());
  }
  for (std::size_t ai = 0; ai < w.arrows.size(); ++ai) {
    const Arrow& a = w.arrows[ai];
    auto x = solve(f, bases[a.target], multiply(f, w.maps[ai], bases[a.source]));
    im.maps.push_back(x ? *x : zeros(f, im.dims[a.target], im.dims[a.source]));
  }
  return im;
}

template <class F>
QuiverRep<F> direct_sum(const F& f, const QuiverRep<F>& a, const QuiverRep<F>& b) {
  QuiverRep<F> s;
  s.arrows = a.arrows;
  for (int x = 0; x < a.vertex_count(); ++x) s.dims.push_back(a.dims[x] + b.dims[x]);
  for (std::size_t ai = 0; ai < a.arrows.size(); ++ai) {
    const Arrow& ar = a.arrows[ai];
    FMatrix<F> m = zeros(f, s.dims[ar.target], s.dims[ar.source]);
    const auto& ma = a.maps[ai];
    const auto& mb = b.maps[ai];
    for (int r = 0; r < ma.rows(); ++r)
      for (int c = 0; c < ma.cols(); ++c) m(r, c) = ma(r, c);
    for (int r = 0; r < mb.rows(); ++r)
      for (int c = 0; c < mb.cols(); ++c) m(ma.rows() + r, ma.cols() + c) = mb(r, c);
    s.maps.push_back(std::move(m));
  }
  return s;
}

// Splits off one copy of the indecomposable s from v when s is a direct
// summand, returning the complement. End(s) is local, so some pair of basis
// morphisms ι: s → v, π: v → s has π∘ι invertible exactly when s splits off.
template <class F>
std::optional<QuiverRep<F>> split_off_summand(const F& f, const QuiverRep<F>& v, const QuiverRep<F>& s) {
  auto into = hom_basis(f, s, v);
  if (into.empty()) return std::nullopt;
  auto out = hom_basis(f, v, s);
  for (const auto& pi : out)
    for (const auto& iota : into)
      if (is_isomorphism(f, compose(f, pi, iota))) return kernel_rep(f, v, pi);
  return std::nullopt;
}

// Rank of the canonical map lim → colim for the full subquiver on the
// vertices flagged in `inside`.
template <class F>
int limit_colimit_rank(const F& f, const QuiverRep<F>& v, const std::vector<char>& inside) {
  std::vector<int> off(v.vertex_count() + 1, 0);
  for (int k = 0; k < v.vertex_count(); ++k) off[k + 1] = off[k] + (inside[k] ? v.dims[k] : 0);
  int total = off.back();
  if (total == 0) return 0;
  std::vector<std::size_t> arrows;
  int lim_rows = 0, rel_cols = 0;
  for (std::size_t ai = 0; ai < v.arrows.size(); ++ai) {
    const Arrow& a = v.arrows[ai];
    if (inside[a.source] && inside[a.target]) {
      arrows.push_back(ai);
      lim_rows += v.dims[a.target];
      rel_cols += v.dims[a.source];
    }
  }
  // lim = kernel of x ↦ (V(a)x_s − x_t)_a; colim = ⊕V_k modulo the span of
  // e_s − V(a)e_s for basis vectors e of each source space.
  FMatrix<F> cons = zeros(f, lim_rows, total);
  FMatrix<F> rel = zeros(f, total, rel_cols);
  int row = 0, col = 0;
  for (std::size_t ai : arrows) {
    const Arrow& a = v.arrows[ai];
    const auto& m = v.maps[ai];
    for (int r = 0; r < v.dims[a.target]; ++r, ++row) {
      for (int c = 0; c < v.dims[a.source]; ++c) cons(row, off[a.source] + c) = m(r, c);
      cons(row, off[a.target] + r) = f.sub(cons(row, off[a.target] + r), f.one());
    }
    for (int c = 0; c < v.dims[a.source]; ++c, ++col) {
      rel(off[a.source] + c, col) = f.one();
      for (int r = 0; r < v.dims[a.target]; ++r) rel(off[a.target] + r, col) = f.neg(m(r, c));
    }
  }
  FMatrix<F> lim = kernel(f, cons);
  if (lim.cols() == 0) return 0;
  // Every element of lim maps to the class of any single component.
  int first = 0;
  while (!inside[first] || v.dims[first] == 0) {
    ++first;
    if (first == v.vertex_count()) return 0;
  }
  FMatrix<F> img = zeros(f, total, lim.cols());
  for (int c = 0; c < lim.cols(); ++c)
    for (int r = 0; r < v.dims[first]; ++r) img(off[first] + r, c) = lim(off[first] + r, c);
  return rank(f, hstack(rel, img)) - rank(f, rel);
}

// One arrow along a zigzag path from vertex k to k+1: forward maps
// V_k → V_{k+1}, backward maps V_{k+1} → V_k.
template <class F>
struct PathStep {
  bool forward;
  const FMatrix<F>* map;
};

// Ranks of lim → colim over the initial segments of a zigzag path, via the
// composite linear relation R ⊆ V_start × V_k: the rank is
// dim Im(R) − dim Ind(R), Ind(R) = {y : (0, y) ∈ R}. Entry s of the result
// belongs to the segment with s steps.
template <class F>
std::vector<int> path_ranks(const F& f, int start_dim, const std::vector<PathStep<F>>& steps) {
  // Columns of x and y together span R.
  FMatrix<F> x = identity(f, start_dim), y = identity(f, start_dim);
  auto rank_of = [&]() {
    if (x.cols() == 0) return 0;
    FMatrix<F> ind = multiply(f, y, kernel(f, x));
    return rank(f, y) - rank(f, ind);
  };
  std::vector<int> ranks{rank_of()};
  for (const auto& st : steps) {
    const FMatrix<F>& m = *st.map;
    if (st.forward) {
      y = multiply(f, m, y);
    } else {
      // {(x, z) : (x, m z) ∈ R}: solve y c = m z.
      int nb = x.cols(), nz = m.cols();
      FMatrix<F> sys = zeros(f, y.rows(), nb + nz);
      for (int r = 0; r < y.rows(); ++r) {
        for (int c = 0; c < nb; ++c) sys(r, c) = y(r, c);
        for (int c = 0; c < nz; ++c) sys(r, nb + c) = f.neg(m(r, c));
      }
      FMatrix<F> k = kernel(f, sys);
      FMatrix<F> nx = zeros(f, x.rows(), k.cols()), nyz = zeros(f, nz, k.cols());
      for (int c = 0; c < k.cols(); ++c) {
        for (int r = 0; r < x.rows(); ++r)
          for (int b = 0; b < nb; ++b)
            if (!f.is_zero(k(b, c))) nx(r, c) = f.add(nx(r, c), f.mul(x(r, b), k(b, c)));
        for (int r = 0; r < nz; ++r) nyz(r, c) = k(nb + r, c);
      }
      x = std::move(nx);
      y = std::move(nyz);
    }
    // Keep a basis of R.
    FMatrix<F> both = zeros(f, x.rows() + y.rows(), x.cols());
    for (int c = 0; c < x.cols(); ++c) {
      for (int r = 0; r < x.rows(); ++r) both(r, c) = x(r, c);
      for (int r = 0; r < y.rows(); ++r) both(x.rows() + r, c) = y(r, c);
    }
    auto cols = independent_columns(f, both);
    x = select_columns(x, cols);
    y = select_columns(y, cols);
    ranks.push_back(rank_of());
  }
  return ranks;
}

}  // namespace sheaf1d
