#include "cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "sheaf1d/calculus.hpp"
#include "sheaf1d/circle.hpp"
#include "sheaf1d/errors.hpp"
#include "sheaf1d/germ.hpp"
#include "sheaf1d/json_io.hpp"
#include "sheaf1d/microsupport.hpp"
#include "sheaf1d/orbit.hpp"
#include "sheaf1d/tamarkin.hpp"
#include "sheaf1d/verify.hpp"
#include "sheaf1d/zigzag.hpp"

namespace sheaf1d::cli {

namespace {

using json_io::Json;

struct Flags {
  std::string field;
  std::string circumference;
  std::string box;
  std::optional<int> samples;
  std::uint64_t seed = 1;

  std::optional<FieldSpec> field_spec() const {
    if (field.empty()) return std::nullopt;
    if (field == "Q") return FieldSpec::rationals();
    return json_io::field_from_json(Json(parse_int(field, "--field")), "--field");
  }
  std::optional<Rational> circumference_value() const {
    if (circumference.empty()) return std::nullopt;
    return positive(circumference, "--circumference");
  }
  std::optional<Rational> box_value() const {
    if (box.empty()) return std::nullopt;
    return positive(box, "--box");
  }

 private:
  static std::int64_t parse_int(const std::string& text, const char* flag) {
    Rational r = parse_rational(text);
    if (denominator_of(r) != 1 || abs(r) > Rational(std::int64_t(1) << 40))
      throw MalformedInput(std::string(flag) + " expects a prime or Q, got " + text);
    return numerator_of(r).convert_to<std::int64_t>();
  }
  static Rational positive(const std::string& text, const char* flag) {
    Rational r = parse_rational(text);
    if (r <= 0) throw MalformedInput(std::string(flag) + " must be positive, got " + text);
    return r;
  }
};

Json stalk_json(const GradedVectorSpace& v) { return json_io::to_json(v); }

GradedBarcode read_barcode(const std::string& path, const Flags& flags) {
  return json_io::barcode_from_json(json_io::read_file(path), flags.field_spec());
}

Json cmd_decompose(const std::string& path, const Flags& flags) {
  auto rep = json_io::zigzag_from_json(json_io::read_file(path), flags.field_spec());
  return json_io::to_json(gabriel_decompose(rep));
}

Json cmd_ss(const std::string& path, const Flags& flags) {
  auto f = read_barcode(path, flags);
  auto s = ss(f);
  Json out = json_io::to_json(s);
  for (std::size_t i = 0; i < s.rays.size(); ++i) {
    out["rays"][i]["germ"] = stalk_json(microgerm(f, s.rays[i]));
    out["rays"][i]["kind"] = to_string(classify_germ(f, s.rays[i]));
  }
  return out;
}

Json cmd_hom(const std::string& a, const std::string& b, const Flags& flags) {
  auto f = read_barcode(a, flags), g = read_barcode(b, flags);
  return {{"hom", stalk_json(hom_complex(f, g))}};
}

Json cmd_energy(const std::string& path, const Flags& flags) {
  auto f = TauNonnegBarcode(read_barcode(path, flags));
  return {{"energy", json_io::to_json(displacement_energy(f))}};
}

Json cmd_convolve(const std::string& path, const std::string& kernel, const Flags& flags) {
  return json_io::to_json(convolve(read_barcode(path, flags), parse_interval(kernel)));
}

Json cmd_tau(const std::string& path, const std::string& c_text, const Flags& flags) {
  auto f = TauNonnegBarcode(read_barcode(path, flags));
  Rational c = parse_rational(c_text);
  if (c < 0) throw MalformedInput("--c must be non-negative");
  Json bars = Json::array();
  bool any = false;
  for (const auto& b : f.barcode().bars()) {
    bool nonzero = tau_component_nonzero(b.interval, c);
    any = any || nonzero;
    bars.push_back({{"interval", b.interval.to_string()}, {"degree", b.degree}, {"multiplicity", b.multiplicity},
                    {"nonzero", nonzero}});
  }
  return {{"c", json_io::to_json(c)}, {"nonzero", any}, {"bars", bars}, {"energy", json_io::to_json(displacement_energy(f))}};
}

Json cmd_circle_decompose(const std::string& path, const Flags& flags) {
  auto rep = json_io::cyclic_from_json(json_io::read_file(path), flags.field_spec(), flags.circumference_value());
  return json_io::to_json(decompose_circle(rep));
}

Json cmd_orbit_hom(const std::string& a, const std::string& b, const Flags& flags) {
  return {{"orbit_hom_dim", orbit_hom_dim(read_barcode(a, flags), read_barcode(b, flags))}};
}

Json cmd_germ_compose(const std::vector<std::string>& paths, const std::string& x_text, const std::string& z_text,
                      const Flags& flags) {
  if (paths.size() < 2) throw MalformedInput("germ-compose needs at least two kernels");
  std::vector<IndicatorComplex> kernels;
  for (const auto& p : paths) kernels.push_back(json_io::indicator_from_json(json_io::read_file(p)));
  Point x = json_io::parse_point(x_text), z = json_io::parse_point(z_text);
  // K_1 lives on X×Y_1, K_j on Y_{j-1}×Y_j and K_m on Y_{m-1}×Z.
  std::vector<int> middle;
  int previous = static_cast<int>(x.size());
  for (std::size_t j = 0; j + 1 < kernels.size(); ++j) {
    int y = kernels[j].dim() - previous;
    if (y < 0) throw MalformedInput("kernel " + std::to_string(j + 1) + " is too small for the given points");
    middle.push_back(y);
    previous = y;
  }
  if (kernels.back().dim() != previous + static_cast<int>(z.size()))
    throw MalformedInput("kernel dimensions do not match the dimensions of x and z");
  Json out = {{"x", Json::array()}, {"z", Json::array()}, {"middle_dims", middle}};
  for (const auto& v : x) out["x"].push_back(json_io::to_json(v));
  for (const auto& v : z) out["z"].push_back(json_io::to_json(v));
  out["stalk"] = stalk_json(compose_chain(kernels, middle, x, z, flags.box_value()));
  return out;
}

Json cmd_square_kernel(int m, const std::string& point, const std::string& line, const std::string& window) {
  if (!point.empty() && !line.empty()) throw MalformedInput("give either --point or --line, not both");
  if (!point.empty()) {
    Point p = json_io::parse_point(point);
    Json pj = Json::array();
    for (const auto& v : p) pj.push_back(json_io::to_json(v));
    return {{"m", m}, {"point", pj}, {"stalk", stalk_json(square_kernel_stalk(m, p))},
            {"expected", stalk_json(square_kernel_expected(m, p))}};
  }
  if (!line.empty()) {
    Point l = json_io::parse_point(line);
    if (l.size() != 3) throw MalformedInput("--line expects x1,x2,y1");
    auto bc = kinf_line_barcode(l[0], l[1], l[2], parse_rational(window));
    return {{"line", {json_io::to_json(l[0]), json_io::to_json(l[1]), json_io::to_json(l[2])}},
            {"window", json_io::to_json(parse_rational(window))},
            {"barcode", json_io::to_json(bc)},
            {"energy", json_io::to_json(displacement_energy(TauNonnegBarcode(bc)))}};
  }
  throw MalformedInput("square-kernel needs --point or --line");
}

Json cmd_fourier_sato(const std::string& path, bool antipodal, const Flags& flags) {
  auto f = json_io::conic_from_json(json_io::read_file(path), flags.field_spec());
  auto g = fourier_sato_1d(f, antipodal);
  Json out = json_io::to_json(g);
  out["barcode"] = json_io::to_json(g.barcode());
  return out;
}

int cmd_verify(const std::string& suite, const Flags& flags, Json& report, std::ostream& err) {
  if (!verify::is_suite(suite)) throw MalformedInput("unknown suite: " + suite);
  if (flags.samples && *flags.samples < 1) throw MalformedInput("--samples must be positive");
  verify::Options options{flags.seed, flags.samples};
  auto results = verify::run_suite(suite, options);
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    checks.push_back({{"id", r.id},
                      {"title", r.title},
                      {"anchor", r.anchor},
                      {"passed", r.passed},
                      {"detail", r.detail},
                      {"samples", r.samples},
                      {"time_limit_seconds", r.time_limit_seconds},
                      {"within_time_limit", r.within_time_limit}});
  }
  report = {{"suite", suite}, {"seed", flags.seed}, {"checks", checks}, {"passed", all}};
  err << verify::format_table(results);
  for (const auto& r : results)
    if (!r.passed) err << "verification failed: " << r.id << " [" << r.anchor << "]: " << r.detail << "\n";
  return all ? kSuccess : kVerificationFailed;
}

int report_error(std::ostream& out, std::ostream& err, const char* kind, const std::string& message) {
  out << json_io::dump(json_io::document({{"error", {{"kind", kind}, {"message", message}}}}));
  err << "error: " << message << "\n";
  return kMalformedInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with constructible sheaves in dimension one"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_option("--field", flags.field, "coefficient field for inputs without one: a prime p or Q");
  app.add_option("--circumference", flags.circumference, "circumference of the circle, a positive rational");
  app.add_option("--box", flags.box, "truncation radius R for unbounded cells");
  app.add_option("--samples", flags.samples, "number of random samples per verification loop");
  app.add_option("--seed", flags.seed, "seed of the randomized suites");

  std::function<Json()> action;
  std::string file, file2, kernel, c_text, x_text, z_text, point, line, window = "10", suite = "all";
  std::vector<std::string> files;
  int m = 2;
  bool antipodal = false;
  int verify_code = kSuccess;

  auto* decompose = app.add_subcommand("decompose", "barcode of a zigzag representation");
  decompose->add_option("rep", file, "zigzag rep JSON")->required();
  decompose->callback([&] { action = [&] { return cmd_decompose(file, flags); }; });

  auto* ss_cmd = app.add_subcommand("ss", "microsupport of a barcode with the germ at each ray");
  ss_cmd->add_option("barcode", file, "barcode JSON")->required();
  ss_cmd->callback([&] { action = [&] { return cmd_ss(file, flags); }; });

  auto* hom = app.add_subcommand("hom", "graded dimensions of RHom(F, G)");
  hom->add_option("f", file, "barcode JSON")->required();
  hom->add_option("g", file2, "barcode JSON")->required();
  hom->callback([&] { action = [&] { return cmd_hom(file, file2, flags); }; });

  auto* energy = app.add_subcommand("energy", "displacement energy of a tau >= 0 barcode");
  energy->add_option("barcode", file, "barcode JSON")->required();
  energy->callback([&] { action = [&] { return cmd_energy(file, flags); }; });

  auto* conv = app.add_subcommand("convolve", "convolution with the kernel k_K");
  conv->add_option("barcode", file, "barcode JSON")->required();
  conv->add_option("--kernel", kernel, "kernel interval such as [0,inf)")->required();
  conv->callback([&] { action = [&] { return cmd_convolve(file, kernel, flags); }; });

  auto* tau = app.add_subcommand("tau", "whether tau_c is nonzero on each bar");
  tau->add_option("barcode", file, "barcode JSON")->required();
  tau->add_option("--c", c_text, "translation c >= 0")->required();
  tau->callback([&] { action = [&] { return cmd_tau(file, c_text, flags); }; });

  auto* circ = app.add_subcommand("circle-decompose", "normal form of a cyclic representation");
  circ->add_option("rep", file, "cyclic rep JSON")->required();
  circ->callback([&] { action = [&] { return cmd_circle_decompose(file, flags); }; });

  auto* orbit = app.add_subcommand("orbit-hom", "dimension of Hom in the orbit category");
  orbit->add_option("f", file, "barcode JSON")->required();
  orbit->add_option("g", file2, "barcode JSON")->required();
  orbit->callback([&] { action = [&] { return cmd_orbit_hom(file, file2, flags); }; });

  auto* germ = app.add_subcommand("germ-compose", "stalk of a composition of kernels");
  germ->add_option("kernels", files, "indicator complex JSON files, in order")->required();
  germ->add_option("--x", x_text, "point of X, comma separated")->required();
  germ->add_option("--z", z_text, "point of Z, comma separated")->required();
  germ->callback([&] { action = [&] { return cmd_germ_compose(files, x_text, z_text, flags); }; });

  auto* square = app.add_subcommand("square-kernel", "stalks of the square kernel K_m or K_inf line barcodes");
  square->add_option("--m", m, "number of factors, 1 to 3");
  square->add_option("--point", point, "x1,x2,y1,y2");
  square->add_option("--line", line, "x1,x2,y1 of a vertical line");
  square->add_option("--window", window, "largest y2 - x2 considered on the line");
  square->callback([&] { action = [&] { return cmd_square_kernel(m, point, line, window); }; });

  auto* fs = app.add_subcommand("fourier-sato", "Fourier-Sato transform of a conic sheaf on the line");
  fs->add_option("conic", file, "conic sheaf JSON")->required();
  fs->add_flag("--antipodal", antipodal, "use the kernel of {x y >= 0}");
  fs->callback([&] { action = [&] { return cmd_fourier_sato(file, antipodal, flags); }; });

  auto* ver = app.add_subcommand("verify", "run acceptance checks");
  ver->add_option("--suite", suite, "gabriel, hom, energy, projector, geodesic, square, circle, orbit, microsupport or all");
  ver->callback([&] {
    action = [&] {
      Json report;
      verify_code = cmd_verify(suite, flags, report, err);
      return report;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    return report_error(out, err, "usage", e.what());
  }

  try {
    Json body = action();
    out << json_io::dump(json_io::document(std::move(body)));
    return verify_code;
  } catch (const MalformedInput& e) {
    return report_error(out, err, "malformed_input", e.what());
  } catch (const BoundaryPoint& e) {
    return report_error(out, err, "boundary_point", e.what());
  } catch (const RefinementError& e) {
    return report_error(out, err, "refinement", e.what());
  } catch (const FieldMismatch& e) {
    return report_error(out, err, "field_mismatch", e.what());
  } catch (const PropernessError& e) {
    return report_error(out, err, "not_proper", e.what());
  } catch (const UnstableTruncation& e) {
    return report_error(out, err, "unstable_truncation", e.what());
  } catch (const PreconditionError& e) {
    return report_error(out, err, "precondition", e.what());
  }
}

}  // namespace sheaf1d::cli
