#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sheaf1d/field.hpp"
#include "sheaf1d/interval.hpp"

namespace sheaf1d {

// A bar (I, d, m) stands for the summand (k_I[-d])^m, so its only
// cohomology sheaf sits in degree d.
struct Bar {
  Interval interval;
  int degree = 0;
  std::int64_t multiplicity = 1;

  friend bool operator==(const Bar&, const Bar&) = default;
};

class GradedBarcode {
 public:
  explicit GradedBarcode(FieldSpec field) : field_(field) {}
  // Merges repeated (interval, degree) entries and sorts. Throws
  // MalformedInput on a non-positive multiplicity.
  GradedBarcode(FieldSpec field, std::vector<Bar> bars);

  const FieldSpec& field() const { return field_; }
  const std::vector<Bar>& bars() const { return bars_; }
  bool empty() const { return bars_.empty(); }
  std::int64_t bar_count() const;

  // F[k]: every degree d becomes d - k.
  GradedBarcode shifted(int k) const;
  // Pushforward along t -> t + c.
  GradedBarcode translated(const Rational& c) const;
  GradedBarcode direct_sum(const GradedBarcode& other) const;
  GradedBarcode degree_part(int degree) const;
  bool concentrated_in_degree_zero() const;

  std::string to_string() const;

  friend bool operator==(const GradedBarcode&, const GradedBarcode&) = default;

 private:
  FieldSpec field_;
  std::vector<Bar> bars_;
};

class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;
  explicit GradedVectorSpace(const std::map<int, std::int64_t>& dims);
  static GradedVectorSpace single(int degree, std::int64_t dim = 1);

  std::int64_t dim(int degree) const;
  std::int64_t total_dim() const;
  bool is_zero() const { return dims_.empty(); }
  const std::map<int, std::int64_t>& dims() const { return dims_; }

  void add(int degree, std::int64_t dim);
  GradedVectorSpace operator+(const GradedVectorSpace& other) const;
  // V[k]: degree d becomes d - k.
  GradedVectorSpace shifted(int k) const;
  GradedVectorSpace scaled(std::int64_t factor) const;

  std::string to_string() const;

  friend bool operator==(const GradedVectorSpace&, const GradedVectorSpace&) = default;

 private:
  std::map<int, std::int64_t> dims_;
};

}  // namespace sheaf1d
