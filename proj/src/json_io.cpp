#include "sheaf1d/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "sheaf1d/errors.hpp"

namespace sheaf1d::json_io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw MalformedInput(where + ": " + what); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

const Json* optional_member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

int small_int(const Json& j, const std::string& where) {
  std::int64_t v = integer(j, where);
  if (v < -(1 << 20) || v > (1 << 20)) fail(where, "integer out of range");
  return static_cast<int>(v);
}

bool boolean(const Json& j, const std::string& where) {
  if (!j.is_boolean()) fail(where, "expected true or false");
  return j.get<bool>();
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

std::vector<Rational> rationals(const Json& j, const std::string& where) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) out.push_back(rational_from_json(j[i], at(where, i)));
  return out;
}

std::vector<int> dims_from_json(const Json& j, const std::string& where) {
  std::vector<int> out;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) out.push_back(small_int(j[i], at(where, i)));
  return out;
}

Json bars_to_json(const std::vector<Bar>& bars) {
  Json out = Json::array();
  for (const auto& b : bars)
    out.push_back({{"interval", b.interval.to_string()}, {"degree", b.degree}, {"multiplicity", b.multiplicity}});
  return out;
}

std::vector<Bar> bars_from_json(const Json& j, const std::string& where) {
  std::vector<Bar> bars;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) {
    std::string w = at(where, i);
    Bar b{interval_from_json(member(j[i], "interval", w), w + ".interval"), 0, 1};
    if (auto d = optional_member(j[i], "degree", w)) b.degree = small_int(*d, w + ".degree");
    if (auto m = optional_member(j[i], "multiplicity", w)) b.multiplicity = integer(*m, w + ".multiplicity");
    if (b.multiplicity <= 0) fail(w + ".multiplicity", "must be positive");
    bars.push_back(std::move(b));
  }
  return bars;
}

// Shapes come from the dims, so the matrices are read after them.
std::vector<Matrix<Rational>> maps_from_json(const Json& j, const std::string& where,
                                             const std::vector<std::pair<int, int>>& shapes) {
  if (array(j, where).size() != shapes.size())
    fail(where, "expected " + std::to_string(shapes.size()) + " matrices, got " + std::to_string(j.size()));
  std::vector<Matrix<Rational>> out;
  for (std::size_t i = 0; i < shapes.size(); ++i)
    out.push_back(matrix_from_json(j[i], shapes[i].first, shapes[i].second, at(where, i)));
  return out;
}

Json matrices_to_json(const std::vector<Matrix<Rational>>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

}  // namespace

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw MalformedInput(path + ": not valid JSON (" + e.what() + ")");
  }
}

void check_schema_version(const Json& doc) {
  if (!doc.is_object()) fail("document", "expected an object");
  if (auto v = optional_member(doc, "schema_version", "document"))
    if (integer(*v, "schema_version") != kSchemaVersion)
      fail("schema_version", "unsupported version " + v->dump() + ", expected " + std::to_string(kSchemaVersion));
}

Json document(Json body) {
  body["schema_version"] = kSchemaVersion;
  return body;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json to_json(const FieldSpec& field) {
  if (field.is_prime()) return field.characteristic();
  return "Q";
}

FieldSpec field_from_json(const Json& j, const std::string& where) {
  if (j.is_string() && j.get<std::string>() == "Q") return FieldSpec::rationals();
  if (!j.is_number_integer()) fail(where, "expected a prime or \"Q\"");
  std::int64_t p = j.get<std::int64_t>();
  if (p < 2 || p > 2147483647 || !is_prime_number(static_cast<std::uint64_t>(p))) fail(where, j.dump() + " is not a prime");
  return FieldSpec::prime(static_cast<std::uint64_t>(p));
}

FieldSpec resolve_field(const Json& doc, const std::optional<FieldSpec>& fallback) {
  if (auto f = optional_member(doc, "field", "document")) {
    FieldSpec field = field_from_json(*f);
    if (fallback && !(*fallback == field))
      fail("field", "document uses " + field.name() + " but " + fallback->name() + " was requested");
    return field;
  }
  return fallback.value_or(FieldSpec::prime(2));
}

Json to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) fail(where, "expected a rational as a string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const MalformedInput& e) {
    fail(where, e.what());
  }
}

Json to_json(const Interval& i) { return i.to_string(); }

Interval interval_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected an interval such as \"[0,1)\"");
  try {
    return parse_interval(j.get<std::string>());
  } catch (const MalformedInput& e) {
    fail(where, e.what());
  }
}

Json to_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<Rational> matrix_from_json(const Json& j, int rows, int cols, const std::string& where) {
  std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (array(j, where).size() != static_cast<std::size_t>(rows)) fail(where, "expected a " + shape + " matrix");
  Matrix<Rational> m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = array(j[r], at(where, r));
    if (row.size() != static_cast<std::size_t>(cols)) fail(at(where, r), "expected a " + shape + " matrix");
    for (int c = 0; c < cols; ++c) m(r, c) = rational_from_json(row[c], at(at(where, r), c));
  }
  return m;
}

Json to_json(const GradedVectorSpace& v) {
  Json out = Json::array();
  for (const auto& [d, n] : v.dims()) out.push_back({{"degree", d}, {"dim", n}});
  return out;
}

Json to_json(const EnergyValue& e) { return e.to_string(); }

Json to_json(const GradedBarcode& b) { return {{"field", to_json(b.field())}, {"bars", bars_to_json(b.bars())}}; }

GradedBarcode barcode_from_json(const Json& doc, const std::optional<FieldSpec>& fallback) {
  check_schema_version(doc);
  FieldSpec field = resolve_field(doc, fallback);
  return GradedBarcode(field, bars_from_json(member(doc, "bars", "document"), "bars"));
}

Json to_json(const ZigzagRep& rep) {
  Json points = Json::array();
  for (const auto& p : rep.points) points.push_back(to_json(p));
  return {{"field", to_json(rep.field)},
          {"points", points},
          {"dims", rep.dims},
          {"left_maps", matrices_to_json(rep.left_maps)},
          {"right_maps", matrices_to_json(rep.right_maps)}};
}

ZigzagRep zigzag_from_json(const Json& doc, const std::optional<FieldSpec>& fallback) {
  check_schema_version(doc);
  ZigzagRep rep;
  rep.field = resolve_field(doc, fallback);
  rep.points = rationals(member(doc, "points", "document"), "points");
  rep.dims = dims_from_json(member(doc, "dims", "document"), "dims");
  std::size_t n = rep.points.size();
  if (rep.dims.size() != 2 * n + 1)
    fail("dims", "expected " + std::to_string(2 * n + 1) + " entries for " + std::to_string(n) + " points");
  std::vector<std::pair<int, int>> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back({rep.dims[2 * i], rep.dims[2 * i + 1]});
    right.push_back({rep.dims[2 * i + 2], rep.dims[2 * i + 1]});
  }
  rep.left_maps = maps_from_json(member(doc, "left_maps", "document"), "left_maps", left);
  rep.right_maps = maps_from_json(member(doc, "right_maps", "document"), "right_maps", right);
  rep.validate();
  return rep;
}

Json to_json(const CyclicRep& rep) {
  Json points = Json::array();
  for (const auto& p : rep.points) points.push_back(to_json(p));
  return {{"field", to_json(rep.field)},
          {"circumference", to_json(rep.circumference)},
          {"points", points},
          {"dims", rep.dims},
          {"left_maps", matrices_to_json(rep.left_maps)},
          {"right_maps", matrices_to_json(rep.right_maps)}};
}

namespace {

Rational resolve_circumference(const Json& doc, const std::optional<Rational>& fallback) {
  if (auto c = optional_member(doc, "circumference", "document")) {
    Rational value = rational_from_json(*c, "circumference");
    if (fallback && *fallback != value)
      fail("circumference", "document uses " + format_rational(value) + " but " + format_rational(*fallback) + " was requested");
    return value;
  }
  return fallback.value_or(Rational(1));
}

}  // namespace

CyclicRep cyclic_from_json(const Json& doc, const std::optional<FieldSpec>& fallback,
                           const std::optional<Rational>& circumference) {
  check_schema_version(doc);
  CyclicRep rep;
  rep.field = resolve_field(doc, fallback);
  rep.circumference = resolve_circumference(doc, circumference);
  rep.points = rationals(member(doc, "points", "document"), "points");
  rep.dims = dims_from_json(member(doc, "dims", "document"), "dims");
  std::size_t n = rep.points.size();
  if (n == 0) fail("points", "a cyclic rep needs at least one point");
  if (rep.dims.size() != 2 * n) fail("dims", "expected " + std::to_string(2 * n) + " entries for " + std::to_string(n) + " points");
  std::vector<std::pair<int, int>> left, right;
  for (std::size_t k = 0; k < n; ++k) {
    left.push_back({rep.dims[(2 * k + 2 * n - 1) % (2 * n)], rep.dims[2 * k]});
    right.push_back({rep.dims[2 * k + 1], rep.dims[2 * k]});
  }
  rep.left_maps = maps_from_json(member(doc, "left_maps", "document"), "left_maps", left);
  rep.right_maps = maps_from_json(member(doc, "right_maps", "document"), "right_maps", right);
  rep.validate();
  return rep;
}

Json to_json(const CircleSheaf& cs) {
  Json local = Json::array();
  for (const auto& [d, m] : cs.local_part()) local.push_back({{"degree", d}, {"monodromy", to_json(m)}});
  return {{"field", to_json(cs.field())},
          {"circumference", to_json(cs.circumference())},
          {"bars", bars_to_json(cs.bars())},
          {"local_part", local}};
}

CircleSheaf circle_sheaf_from_json(const Json& doc, const std::optional<FieldSpec>& fallback,
                                   const std::optional<Rational>& circumference) {
  check_schema_version(doc);
  FieldSpec field = resolve_field(doc, fallback);
  Rational c = resolve_circumference(doc, circumference);
  std::vector<Bar> bars;
  if (auto b = optional_member(doc, "bars", "document")) bars = bars_from_json(*b, "bars");
  std::map<int, Matrix<Rational>> local;
  if (auto l = optional_member(doc, "local_part", "document")) {
    for (std::size_t i = 0; i < array(*l, "local_part").size(); ++i) {
      std::string w = at("local_part", i);
      int d = small_int(member((*l)[i], "degree", w), w + ".degree");
      const Json& m = member((*l)[i], "monodromy", w);
      int r = static_cast<int>(array(m, w + ".monodromy").size());
      if (local.count(d)) fail(w, "degree " + std::to_string(d) + " appears twice");
      local[d] = matrix_from_json(m, r, r, w + ".monodromy");
    }
  }
  return CircleSheaf(field, c, std::move(bars), std::move(local));
}

Json to_json(const CovectorPoint& p) { return {{"x", to_json(p.base)}, {"sign", p.sign == Sign::Plus ? "+" : "-"}}; }

CovectorPoint covector_from_json(const Json& j, const std::string& where) {
  CovectorPoint p{rational_from_json(member(j, "x", where), where + ".x"), Sign::Plus};
  const Json& s = member(j, "sign", where);
  if (s == "+") p.sign = Sign::Plus;
  else if (s == "-") p.sign = Sign::Minus;
  else fail(where + ".sign", "expected \"+\" or \"-\"");
  return p;
}

Json to_json(const MicroSupport1D& s) {
  Json support = Json::array(), rays = Json::array();
  for (const auto& i : s.zero_section_support) support.push_back(to_json(i));
  for (const auto& r : s.rays) rays.push_back(to_json(r));
  return {{"zero_section_support", support}, {"rays", rays}};
}

MicroSupport1D microsupport_from_json(const Json& doc) {
  check_schema_version(doc);
  MicroSupport1D s;
  const Json& support = member(doc, "zero_section_support", "document");
  std::vector<Interval> pieces;
  for (std::size_t i = 0; i < array(support, "zero_section_support").size(); ++i)
    pieces.push_back(interval_from_json(support[i], at("zero_section_support", i)));
  s.zero_section_support = union_of_closures(pieces);
  const Json& rays = member(doc, "rays", "document");
  for (std::size_t i = 0; i < array(rays, "rays").size(); ++i) s.rays.push_back(covector_from_json(rays[i], at("rays", i)));
  std::sort(s.rays.begin(), s.rays.end());
  s.rays.erase(std::unique(s.rays.begin(), s.rays.end()), s.rays.end());
  return s;
}

Json to_json(const PolyCell& cell) {
  Json out = Json::array();
  for (const auto& c : cell.constraints()) {
    Json coeffs = Json::array();
    for (const auto& a : c.coeffs) coeffs.push_back(to_json(a));
    out.push_back({{"coeffs", coeffs}, {"rhs", to_json(c.rhs)}, {"strict", c.strict}});
  }
  return out;
}

PolyCell cell_from_json(const Json& j, int dim, const std::string& where) {
  std::vector<LinearConstraint> cs;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) {
    std::string w = at(where, i);
    LinearConstraint c;
    c.coeffs = rationals(member(j[i], "coeffs", w), w + ".coeffs");
    if (c.coeffs.size() != static_cast<std::size_t>(dim)) fail(w + ".coeffs", "expected " + std::to_string(dim) + " coefficients");
    c.rhs = rational_from_json(member(j[i], "rhs", w), w + ".rhs");
    if (auto s = optional_member(j[i], "strict", w)) c.strict = boolean(*s, w + ".strict");
    cs.push_back(std::move(c));
  }
  return PolyCell(dim, std::move(cs));
}

Json to_json(const IndicatorComplex& k) {
  Json terms = Json::array();
  for (const auto& t : k.terms())
    terms.push_back({{"cell", to_json(t.cell)}, {"degree", t.degree}, {"multiplicity", t.multiplicity}});
  return {{"dim", k.dim()}, {"terms", terms}};
}

IndicatorComplex indicator_from_json(const Json& doc) {
  check_schema_version(doc);
  int dim = small_int(member(doc, "dim", "document"), "dim");
  if (dim < 0 || dim > PolyCell::kMaxDim) fail("dim", "must be between 0 and " + std::to_string(PolyCell::kMaxDim));
  const Json& terms = member(doc, "terms", "document");
  std::vector<IndicatorTerm> out;
  for (std::size_t i = 0; i < array(terms, "terms").size(); ++i) {
    std::string w = at("terms", i);
    IndicatorTerm t{cell_from_json(member(terms[i], "cell", w), dim, w + ".cell"), 0, 1};
    if (auto d = optional_member(terms[i], "degree", w)) t.degree = small_int(*d, w + ".degree");
    if (auto m = optional_member(terms[i], "multiplicity", w)) t.multiplicity = integer(*m, w + ".multiplicity");
    out.push_back(std::move(t));
  }
  return IndicatorComplex(dim, std::move(out));
}

Json to_json(const ConicSheaf1D& f) {
  Json parts = Json::array();
  for (const auto& [d, p] : f.parts)
    parts.push_back({{"degree", d},
                     {"minus", p.minus},
                     {"zero", p.zero},
                     {"plus", p.plus},
                     {"rho_minus", to_json(p.rho_minus)},
                     {"rho_plus", to_json(p.rho_plus)}});
  return {{"field", to_json(f.field)}, {"parts", parts}};
}

ConicSheaf1D conic_from_json(const Json& doc, const std::optional<FieldSpec>& fallback) {
  check_schema_version(doc);
  ConicSheaf1D f;
  f.field = resolve_field(doc, fallback);
  const Json& parts = member(doc, "parts", "document");
  for (std::size_t i = 0; i < array(parts, "parts").size(); ++i) {
    std::string w = at("parts", i);
    const Json& j = parts[i];
    int d = small_int(member(j, "degree", w), w + ".degree");
    if (f.parts.count(d)) fail(w, "degree " + std::to_string(d) + " appears twice");
    ConicDegreePart p;
    p.minus = small_int(member(j, "minus", w), w + ".minus");
    p.zero = small_int(member(j, "zero", w), w + ".zero");
    p.plus = small_int(member(j, "plus", w), w + ".plus");
    if (p.minus < 0 || p.zero < 0 || p.plus < 0) fail(w, "dimensions must be non-negative");
    p.rho_minus = matrix_from_json(member(j, "rho_minus", w), p.minus, p.zero, w + ".rho_minus");
    p.rho_plus = matrix_from_json(member(j, "rho_plus", w), p.plus, p.zero, w + ".rho_plus");
    f.parts[d] = std::move(p);
  }
  f.validate();
  // Entries must be residues when the field is finite.
  if (f.field.is_prime()) {
    PrimeField pf(f.field.characteristic());
    for (const auto& [d, p] : f.parts)
      for (const auto* m : {&p.rho_minus, &p.rho_plus})
        for (int r = 0; r < m->rows(); ++r)
          for (int c = 0; c < m->cols(); ++c) pf.from_rational((*m)(r, c));
  }
  return f;
}

Point parse_point(const std::string& text) {
  Point p;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) p.push_back(parse_rational(item));
  if (p.empty()) throw MalformedInput("empty point");
  return p;
}

}  // namespace sheaf1d::json_io
