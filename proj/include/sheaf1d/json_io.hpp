#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sheaf1d/barcode.hpp"
#include "sheaf1d/circle.hpp"
#include "sheaf1d/germ.hpp"
#include "sheaf1d/microsupport.hpp"
#include "sheaf1d/tamarkin.hpp"
#include "sheaf1d/zigzag.hpp"

// JSON documents for every object the command line reads or writes. Exact
// values travel as strings ("3", "-1/2", "[0,1)"); readers also accept
// integers. Every reader throws MalformedInput with the offending path.
namespace sheaf1d::json_io {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Reads and parses a file. Throws MalformedInput when it cannot be read or
// is not JSON.
Json read_file(const std::string& path);

// A top-level document: "schema_version" must be 1 when present.
void check_schema_version(const Json& doc);
// {"schema_version": 1} merged with the given object.
Json document(Json body);
// Two-space indented text with a trailing newline; keys are sorted, so equal
// values print identically.
std::string dump(const Json& doc);

Json to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j, const std::string& where = "field");
// The document's "field" when present, otherwise the fallback. Throws
// MalformedInput when both are given and disagree.
FieldSpec resolve_field(const Json& doc, const std::optional<FieldSpec>& fallback);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& where);
Json to_json(const Interval& i);
Interval interval_from_json(const Json& j, const std::string& where);

Json to_json(const Matrix<Rational>& m);
Matrix<Rational> matrix_from_json(const Json& j, int rows, int cols, const std::string& where);

Json to_json(const GradedVectorSpace& v);
Json to_json(const EnergyValue& e);

Json to_json(const GradedBarcode& b);
GradedBarcode barcode_from_json(const Json& doc, const std::optional<FieldSpec>& fallback = std::nullopt);

Json to_json(const ZigzagRep& rep);
ZigzagRep zigzag_from_json(const Json& doc, const std::optional<FieldSpec>& fallback = std::nullopt);

Json to_json(const CyclicRep& rep);
// "circumference" falls back to the given value, then to 1.
CyclicRep cyclic_from_json(const Json& doc, const std::optional<FieldSpec>& fallback = std::nullopt,
                           const std::optional<Rational>& circumference = std::nullopt);

Json to_json(const CircleSheaf& cs);
CircleSheaf circle_sheaf_from_json(const Json& doc, const std::optional<FieldSpec>& fallback = std::nullopt,
                                   const std::optional<Rational>& circumference = std::nullopt);

Json to_json(const CovectorPoint& p);
CovectorPoint covector_from_json(const Json& j, const std::string& where);
Json to_json(const MicroSupport1D& s);
MicroSupport1D microsupport_from_json(const Json& doc);

Json to_json(const PolyCell& cell);
PolyCell cell_from_json(const Json& j, int dim, const std::string& where);
Json to_json(const IndicatorComplex& k);
IndicatorComplex indicator_from_json(const Json& doc);

Json to_json(const ConicSheaf1D& f);
ConicSheaf1D conic_from_json(const Json& doc, const std::optional<FieldSpec>& fallback = std::nullopt);

// "1/2,-3" as a point of ℚ^d.
Point parse_point(const std::string& text);

}  // namespace sheaf1d::json_io
