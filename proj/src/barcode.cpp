#include "sheaf1d/barcode.hpp"

#include <algorithm>

#include "sheaf1d/errors.hpp"

namespace sheaf1d {

GradedBarcode::GradedBarcode(FieldSpec field, std::vector<Bar> bars) : field_(field) {
  for (const Bar& b : bars)
    if (b.multiplicity <= 0) throw MalformedInput("bar multiplicity must be positive");
  std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
    if (auto c = a.interval <=> b.interval; c != 0) return c < 0;
    return a.degree < b.degree;
  });
  for (Bar& b : bars) {
    if (!bars_.empty() && bars_.back().interval == b.interval && bars_.back().degree == b.degree)
      bars_.back().multiplicity += b.multiplicity;
    else
      bars_.push_back(std::move(b));
  }
}

std::int64_t GradedBarcode::bar_count() const {
  std::int64_t n = 0;
  for (const Bar& b : bars_) n += b.multiplicity;
  return n;
}

GradedBarcode GradedBarcode::shifted(int k) const {
  std::vector<Bar> out = bars_;
  for (Bar& b : out) b.degree -= k;
  return GradedBarcode(field_, std::move(out));
}

GradedBarcode GradedBarcode::translated(const Rational& c) const {
  std::vector<Bar> out;
  for (const Bar& b : bars_) out.push_back({b.interval.translate(c), b.degree, b.multiplicity});
  return GradedBarcode(field_, std::move(out));
}

GradedBarcode GradedBarcode::direct_sum(const GradedBarcode& other) const {
  require_same_field(field_, other.field_);
  std::vector<Bar> out = bars_;
  out.insert(out.end(), other.bars_.begin(), other.bars_.end());
  return GradedBarcode(field_, std::move(out));
}

GradedBarcode GradedBarcode::degree_part(int degree) const {
  std::vector<Bar> out;
  for (const Bar& b : bars_)
    if (b.degree == degree) out.push_back(b);
  return GradedBarcode(field_, std::move(out));
}

bool GradedBarcode::concentrated_in_degree_zero() const {
  return std::all_of(bars_.begin(), bars_.end(), [](const Bar& b) { return b.degree == 0; });
}

std::string GradedBarcode::to_string() const {
  if (bars_.empty()) return "{}";
  std::string s = "{";
  for (std::size_t i = 0; i < bars_.size(); ++i) {
    if (i) s += ", ";
    s += bars_[i].interval.to_string();
    if (bars_[i].degree != 0) s += " deg " + std::to_string(bars_[i].degree);
    if (bars_[i].multiplicity != 1) s += " x" + std::to_string(bars_[i].multiplicity);
  }
  return s + "}";
}

GradedVectorSpace::GradedVectorSpace(const std::map<int, std::int64_t>& dims) {
  for (auto [d, n] : dims) add(d, n);
}

GradedVectorSpace GradedVectorSpace::single(int degree, std::int64_t dim) {
  GradedVectorSpace v;
  v.add(degree, dim);
  return v;
}

std::int64_t GradedVectorSpace::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

std::int64_t GradedVectorSpace::total_dim() const {
  std::int64_t n = 0;
  for (auto [d, k] : dims_) n += k;
  return n;
}

void GradedVectorSpace::add(int degree, std::int64_t dim) {
  if (dim < 0) throw PreconditionError("negative dimension");
  if (dim == 0) return;
  dims_[degree] += dim;
}

GradedVectorSpace GradedVectorSpace::operator+(const GradedVectorSpace& other) const {
  GradedVectorSpace v = *this;
  for (auto [d, n] : other.dims_) v.add(d, n);
  return v;
}

GradedVectorSpace GradedVectorSpace::shifted(int k) const {
  GradedVectorSpace v;
  for (auto [d, n] : dims_) v.add(d - k, n);
  return v;
}

GradedVectorSpace GradedVectorSpace::scaled(std::int64_t factor) const {
  GradedVectorSpace v;
  for (auto [d, n] : dims_) v.add(d, n * factor);
  return v;
}

std::string GradedVectorSpace::to_string() const {
  if (dims_.empty()) return "0";
  std::string s = "{";
  bool first = true;
  for (auto [d, n] : dims_) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(d) + ":" + std::to_string(n);
  }
  return s + "}";
}

}  // namespace sheaf1d
