#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sheaf1d/barcode.hpp"
#include "sheaf1d/circle.hpp"
#include "sheaf1d/errors.hpp"
#include "sheaf1d/generators.hpp"
#include "sheaf1d/zigzag.hpp"

namespace testing_support {

using namespace sheaf1d;

inline Interval iv(const char* text) { return parse_interval(text); }

inline Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

struct BarSpec {
  const char* interval;
  int degree = 0;
  std::int64_t multiplicity = 1;
};

inline GradedBarcode barcode(std::initializer_list<BarSpec> bars, FieldSpec field = FieldSpec::prime(2)) {
  std::vector<Bar> out;
  for (const auto& b : bars) out.push_back({iv(b.interval), b.degree, b.multiplicity});
  return GradedBarcode(field, std::move(out));
}

using namespace sheaf1d::gen;

}  // namespace testing_support
