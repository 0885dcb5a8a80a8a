#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "sheaf1d/errors.hpp"
#include "sheaf1d/germ.hpp"

namespace sheaf1d {

namespace {

using F2 = PrimeField;

// Hyperplane a·x = b, scaled so the first nonzero coefficient is 1.
struct Plane {
  std::vector<Rational> a;
  Rational b;
  bool operator==(const Plane&) const = default;
  bool operator<(const Plane& o) const { return a != o.a ? a < o.a : b < o.b; }
};

Rational eval(const Plane& h, const Point& p) {
  Rational s = -h.b;
  for (std::size_t i = 0; i < p.size(); ++i) s += h.a[i] * p[i];
  return s;
}

int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

std::optional<Plane> normalized(const LinearConstraint& c) {
  auto it = std::find_if(c.coeffs.begin(), c.coeffs.end(), [](const Rational& x) { return x != 0; });
  if (it == c.coeffs.end()) return std::nullopt;
  Rational lead = *it;
  Plane h{c.coeffs, c.rhs / lead};
  for (auto& x : h.a) x /= lead;
  return h;
}

// A relatively open face of the arrangement inside the closed box: the sign
// of each plane on it, and the vertices of its closure.
struct Face {
  std::vector<int> signs;
  std::vector<Point> vertices;
  Point sample;
  int dim = 0;
};

// Vertices of {sign_j · h_j ≥ 0, or = 0 when sign_j = 0}.
std::vector<Point> face_vertices(int d, const std::vector<Plane>& planes, const std::vector<int>& signs) {
  RationalField q;
  std::set<Point> found;
  int n = static_cast<int>(planes.size());
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(idx.size()) == d) {
      Matrix<Rational> a(d, d), b(d, 1);
      for (int r = 0; r < d; ++r) {
        for (int j = 0; j < d; ++j) a(r, j) = planes[idx[r]].a[j];
        b(r, 0) = planes[idx[r]].b;
      }
      if (rank(q, a) < d) return;
      auto x = solve(q, a, b);
      Point p(d);
      for (int j = 0; j < d; ++j) p[j] = (*x)(j, 0);
      for (int j = 0; j < n; ++j) {
        int s = sgn(eval(planes[j], p));
        if (signs[j] == 0 ? s != 0 : s == -signs[j]) return;
      }
      found.insert(std::move(p));
      return;
    }
    for (int i = start; i <= n - (d - static_cast<int>(idx.size())); ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return {found.begin(), found.end()};
}

void finish_face(int d, const std::vector<Plane>& planes, Face& f) {
  f.vertices = face_vertices(d, planes, f.signs);
  if (f.vertices.empty()) throw std::logic_error("arrangement face without vertices");
  f.sample.assign(d, Rational(0));
  for (const auto& v : f.vertices)
    for (int j = 0; j < d; ++j) f.sample[j] += v[j];
  for (auto& x : f.sample) x /= static_cast<int>(f.vertices.size());
  Matrix<Rational> normals(0, d);
  std::vector<int> zero_rows;
  for (std::size_t j = 0; j < planes.size(); ++j)
    if (f.signs[j] == 0) zero_rows.push_back(static_cast<int>(j));
  Matrix<Rational> m(static_cast<int>(zero_rows.size()), d);
  for (std::size_t r = 0; r < zero_rows.size(); ++r)
    for (int j = 0; j < d; ++j) m(static_cast<int>(r), j) = planes[zero_rows[r]].a[j];
  f.dim = d - rank(RationalField(), m);
}

struct FacePoset {
  std::vector<Face> faces;
  std::vector<std::vector<int>> below;   // covered faces
  std::vector<std::vector<char>> leq;    // leq[s][t]: s ≤ t
};

FacePoset build_poset(int d, const std::vector<Plane>& arrangement, const Rational& r) {
  std::vector<Plane> planes;
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> e(d, 0);
    e[i] = 1;
    planes.push_back({e, r});   // x_i = R
    planes.push_back({e, -r});  // x_i = -R
  }
  // Box faces: each coordinate at -R, inside, or at R.
  std::vector<Face> faces;
  std::vector<int> choice(d, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == d) {
      Face f;
      for (int k = 0; k < d; ++k) {
        f.signs.push_back(choice[k] == 1 ? 0 : -1);
        f.signs.push_back(choice[k] == -1 ? 0 : 1);
      }
      faces.push_back(std::move(f));
      return;
    }
    for (int c = -1; c <= 1; ++c) {
      choice[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  for (auto& f : faces) finish_face(d, planes, f);

  for (const auto& h : arrangement) {
    if (std::find(planes.begin(), planes.end(), h) != planes.end()) continue;
    planes.push_back(h);
    std::vector<Face> next;
    for (auto& f : faces) {
      int lo = 1, hi = -1;
      for (const auto& v : f.vertices) {
        int s = sgn(eval(h, v));
        lo = std::min(lo, s);
        hi = std::max(hi, s);
      }
      if (lo < 0 && hi > 0) {
        for (int s = -1; s <= 1; ++s) {
          Face g;
          g.signs = f.signs;
          g.signs.push_back(s);
          finish_face(d, planes, g);
          next.push_back(std::move(g));
        }
      } else {
        f.signs.push_back(lo < 0 ? -1 : (hi > 0 ? 1 : 0));
        next.push_back(std::move(f));
      }
    }
    faces = std::move(next);
  }

  FacePoset poset;
  poset.faces = std::move(faces);
  std::size_t n = poset.faces.size();
  poset.below.assign(n, {});
  poset.leq.assign(n, std::vector<char>(n, 0));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      bool le = true;
      for (std::size_t j = 0; j < planes.size() && le; ++j) {
        int a = poset.faces[s].signs[j];
        if (a != 0 && a != poset.faces[t].signs[j]) le = false;
      }
      poset.leq[s][t] = le;
      if (le && poset.faces[t].dim == poset.faces[s].dim + 1) poset.below[t].push_back(static_cast<int>(s));
    }
  return poset;
}

// Dimensions of Ext^k(k_A, k_B) over the face poset from a minimal
// projective resolution of k_A. Supports are given as membership flags.
std::vector<int> poset_ext(const FacePoset& poset, const std::vector<char>& in_a, const std::vector<char>& in_b) {
  F2 f(2);
  int n = static_cast<int>(poset.faces.size());
  // Free module: generator faces; an element at t is a vector indexed by
  // the generators whose face lies below t.
  struct Free {
    std::vector<int> gen_face;
    std::vector<std::vector<int>> coords;  // coords[t]: generator ids ≤ t
  };
  auto make_free = [&](std::vector<int> gen_face) {
    Free p{std::move(gen_face), std::vector<std::vector<int>>(n)};
    for (int t = 0; t < n; ++t)
      for (int g = 0; g < static_cast<int>(p.gen_face.size()); ++g)
        if (poset.leq[p.gen_face[g]][t]) p.coords[t].push_back(g);
    return p;
  };
  auto embed = [&](const Free& p, int s, int t, const FMatrix<F2>& v) {
    // Vectors at s written in the coordinates at t ≥ s.
    FMatrix<F2> out = zeros(f, static_cast<int>(p.coords[t].size()), v.cols());
    for (std::size_t i = 0, k = 0; i < p.coords[s].size(); ++i) {
      while (p.coords[t][k] != p.coords[s][i]) ++k;
      for (int c = 0; c < v.cols(); ++c) out(static_cast<int>(k), c) = v(static_cast<int>(i), c);
    }
    return out;
  };

  // Degree 0: k_A is generated at the faces of A with no covered face in A.
  std::vector<int> gens0;
  for (int t = 0; t < n; ++t) {
    if (!in_a[t]) continue;
    bool minimal = std::none_of(poset.below[t].begin(), poset.below[t].end(), [&](int s) { return in_a[s]; });
    if (minimal) gens0.push_back(t);
  }
  Free cur = make_free(gens0);
  std::vector<FMatrix<F2>> kernel_basis(n);
  for (int t = 0; t < n; ++t) {
    int k = static_cast<int>(cur.coords[t].size());
    FMatrix<F2> row = zeros(f, 1, k);
    if (in_a[t])
      for (int c = 0; c < k; ++c) row(0, c) = 1;
    kernel_basis[t] = kernel(f, row);
  }

  std::vector<std::vector<int>> gen_faces{cur.gen_face};
  // coefficients[k][h] lists (g, c): generator h of P_{k+1} maps to Σ c·g.
  std::vector<std::vector<std::vector<std::pair<int, std::uint32_t>>>> coefficients;
  const int max_steps = 2 * PolyCell::kMaxDim + 4;
  for (int step = 0;; ++step) {
    if (step > max_steps) throw std::logic_error("projective resolution did not terminate");
    std::vector<int> next_faces;
    std::vector<std::vector<std::pair<int, std::uint32_t>>> next_coeffs;
    bool any = false;
    for (int t = 0; t < n; ++t) {
      const auto& kb = kernel_basis[t];
      if (kb.cols() == 0) continue;
      any = true;
      FMatrix<F2> image = zeros(f, kb.rows(), 0);
      for (int s : poset.below[t])
        if (kernel_basis[s].cols() > 0) image = hstack(image, embed(cur, s, t, kernel_basis[s]));
      // Kernel vectors extending the image to a basis of the kernel.
      auto pivots = rref(f, hstack(image, kb)).pivots;
      for (int p : pivots) {
        if (p < image.cols()) continue;
        int c = p - image.cols();
        std::vector<std::pair<int, std::uint32_t>> combo;
        for (int r = 0; r < kb.rows(); ++r)
          if (kb(r, c) != 0) combo.emplace_back(cur.coords[t][r], kb(r, c));
        next_faces.push_back(t);
        next_coeffs.push_back(std::move(combo));
      }
    }
    if (!any) break;
    coefficients.push_back(next_coeffs);
    gen_faces.push_back(next_faces);
    Free nxt = make_free(next_faces);
    // Kernel of P_{k+1} → P_k at each face.
    for (int t = 0; t < n; ++t) {
      int rows = static_cast<int>(cur.coords[t].size()), cols = static_cast<int>(nxt.coords[t].size());
      FMatrix<F2> m = zeros(f, rows, cols);
      for (int c = 0; c < cols; ++c)
        for (auto [g, val] : next_coeffs[nxt.coords[t][c]]) {
          int r = static_cast<int>(std::lower_bound(cur.coords[t].begin(), cur.coords[t].end(), g) - cur.coords[t].begin());
          m(r, c) = f.add(m(r, c), val);
        }
      kernel_basis[t] = kernel(f, m);
    }
    cur = std::move(nxt);
  }

  // Hom(P_k, k_B) = k at each generator on B.
  int len = static_cast<int>(gen_faces.size());
  std::vector<std::vector<int>> hom_index(len);
  std::vector<int> hom_dim(len, 0);
  for (int k = 0; k < len; ++k) {
    hom_index[k].assign(gen_faces[k].size(), -1);
    for (std::size_t g = 0; g < gen_faces[k].size(); ++g)
      if (in_b[gen_faces[k][g]]) hom_index[k][g] = hom_dim[k]++;
  }
  std::vector<int> ranks(len, 0);
  for (int k = 0; k + 1 < len; ++k) {
    FMatrix<F2> d = zeros(f, hom_dim[k + 1], hom_dim[k]);
    for (std::size_t h = 0; h < gen_faces[k + 1].size(); ++h) {
      int row = hom_index[k + 1][h];
      if (row < 0) continue;
      for (auto [g, val] : coefficients[k][h]) {
        int col = hom_index[k][g];
        if (col >= 0) d(row, col) = f.add(d(row, col), val);
      }
    }
    ranks[k] = rank(f, d);
  }
  std::vector<int> ext(len);
  for (int k = 0; k < len; ++k) ext[k] = hom_dim[k] - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
  return ext;
}

GradedVectorSpace hom_in_box(const IndicatorComplex& f, const IndicatorComplex& g, const Rational& r) {
  int d = f.dim();
  std::set<Plane> arrangement;
  for (const auto* c : {&f, &g})
    for (const auto& t : c->terms())
      for (const auto& con : t.cell.constraints())
        if (auto h = normalized(con)) arrangement.insert(*h);
  auto poset = build_poset(d, {arrangement.begin(), arrangement.end()}, r);
  std::size_t n = poset.faces.size();
  auto support = [&](const PolyCell& cell) {
    std::vector<char> in(n);
    for (std::size_t t = 0; t < n; ++t) in[t] = cell.contains(poset.faces[t].sample);
    return in;
  };
  GradedVectorSpace out;
  for (const auto& a : f.terms()) {
    auto in_a = support(a.cell);
    for (const auto& b : g.terms()) {
      auto ext = poset_ext(poset, in_a, support(b.cell));
      // Hom(k_A[-p], k_B[-q][k]) = Ext^{k + p - q}(k_A, k_B).
      for (int j = 0; j < static_cast<int>(ext.size()); ++j)
        if (ext[j] > 0) out.add(j - a.degree + b.degree, ext[j] * a.multiplicity * b.multiplicity);
    }
  }
  return out;
}

}  // namespace

GradedVectorSpace hom_global_poset(const IndicatorComplex& f, const IndicatorComplex& g, const Rational& box) {
  if (f.dim() != g.dim()) throw MalformedInput("complexes live in different dimensions");
  if (f.dim() < 1) throw PreconditionError("poset Hom needs a positive dimension");
  if (box <= 0) throw PreconditionError("box must be positive");
  auto first = hom_in_box(f, g, box);
  auto second = hom_in_box(f, g, box * 2);
  if (first != second)
    throw UnstableTruncation("global Hom changed when the box doubled: " + first.to_string() + " vs " + second.to_string());
  return first;
}

}  // namespace sheaf1d
