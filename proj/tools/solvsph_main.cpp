// solvsph: classify connected solvable spherical subgroups of semisimple
// algebraic groups by their combinatorial data and compute the structure of
// their normalizers. All arithmetic is exact.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "solvsph/enumerator.hpp"
#include "solvsph/error.hpp"
#include "solvsph/io.hpp"
#include "solvsph/normalizer.hpp"
#include "solvsph/transforms.hpp"

namespace {

using namespace solvsph;

constexpr int kExitOk = 0;
constexpr int kExitInvalidDatum = 1;
constexpr int kExitSchema = 2;

int parse_center(const std::string& s, int rank) {
  std::string t = s;
  if (t.rfind("alpha", 0) == 0) t = t.substr(5);
  int k = 0;
  try {
    k = std::stoi(t);
  } catch (...) {
    throw std::invalid_argument("bad --center value: " + s);
  }
  if (k < 1 || k > rank) throw std::invalid_argument("--center out of range: " + s);
  return k - 1;  // 1-based on the command line
}

FullDatum full_from(const InputDocument& doc, bool sober) {
  if (doc.ker_tau) return doc.full();
  if (sober) return sober_torus(doc.datum);
  fail(errc::invalid_datum, "no ker_tau in the document; pass --sober to complete with S = A_0");
}

int cmd_validate(const std::string& path, bool as_json) {
  const InputDocument doc = load_document(path);
  const ValidationReport rep = doc.ker_tau ? validate(doc.full()) : validate(doc.datum);
  if (as_json) std::cout << validation_to_json(rep).dump(2) << "\n";
  else std::cout << render_validation(rep);
  return rep.valid() ? kExitOk : kExitInvalidDatum;
}

int cmd_analyze(const std::string& path, bool as_json, bool with_double, bool sober) {
  const InputDocument doc = load_document(path);
  const FullDatum full = full_from(doc, sober);
  const ValidationReport v = validate(full);
  if (!v.valid()) {
    if (as_json) std::cout << validation_to_json(v).dump(2) << "\n";
    else std::cout << render_validation(v);
    return kExitInvalidDatum;
  }
  const NormalizerReport rep = normalizer_report(full);
  if (with_double) {
    const DoubleNormalizerResult dbl = double_normalizer_report(full);
    if (as_json) {
      json out = report_to_json(rep);
      out["double_normalizer"] = {{"stable", dbl.stable},
                                  {"report", report_to_json(dbl.report)}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << render_report(rep);
      std::cout << "N_G(N_G(H)) = N_G(H): " << (dbl.stable ? "yes" : "no") << "\n";
      std::cout << "--- normalizer of N_G(H)^0 ---\n" << render_report(dbl.report);
    }
  } else {
    if (as_json) std::cout << report_to_json(rep).dump(2) << "\n";
    else std::cout << render_report(rep);
  }
  return kExitOk;
}

int cmd_enumerate(const std::string& type, const std::string& lattice, bool sober, int max_m,
                  bool dedupe) {
  LatticeKind kind;
  if (lattice == "adjoint") kind = LatticeKind::adjoint;
  else if (lattice == "simply_connected") kind = LatticeKind::simply_connected;
  else throw std::invalid_argument("--lattice must be adjoint or simply_connected");
  RootSystemPtr rs = build_root_system(parse_type_string(type), kind);

  EnumerationOptions opts;
  opts.max_m = max_m;
  opts.dedupe_autos = dedupe;
  if (sober) {
    const SoberEnumeration result = enumerate_sober(rs, opts);
    for (const FullDatum& full : result.data)
      std::cout << datum_to_json(full.datum, &full.torus.ker_tau).dump() << "\n";
    if (result.dropped > 0)
      std::cerr << "dropped " << result.dropped << " data admitting no torus\n";
  } else {
    for (const SphericalDatum& d : enumerate_data(rs, opts))
      std::cout << datum_to_json(d, nullptr).dump() << "\n";
  }
  return kExitOk;
}

int cmd_transform(const std::string& path, const std::string& center, bool sober) {
  const InputDocument doc = load_document(path);
  const FullDatum full = full_from(doc, sober);
  const ValidationReport v = validate(full);
  if (!v.valid()) {
    std::cerr << render_validation(v);
    return kExitInvalidDatum;
  }
  const int delta = parse_center(center, doc.rs->rank());
  const FullDatum image = elementary_transformation(full, delta);
  std::cout << datum_to_json(image.datum, &image.torus.ker_tau).dump(2) << "\n";
  return kExitOk;
}

int cmd_conjugate(const std::string& path_a, const std::string& path_b, bool as_json, bool sober) {
  const InputDocument da = load_document(path_a), db = load_document(path_b);
  const FullDatum a = full_from(da, sober), b = full_from(db, sober);
  for (const FullDatum* f : {&a, &b}) {
    const ValidationReport v = validate(*f);
    if (!v.valid()) {
      std::cerr << render_validation(v);
      return kExitInvalidDatum;
    }
  }
  const auto chain = conjugacy_chain(a, b);
  if (as_json) {
    json out{{"conjugate", chain.has_value()}};
    if (chain) {
      json c = json::array();
      for (int delta : *chain) c.push_back(alpha_name(delta));
      out["chain"] = c;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "conjugate: " << (chain ? "yes" : "no") << "\n";
    if (chain && !chain->empty()) {
      std::cout << "chain:";
      for (int delta : *chain) std::cout << " " << alpha_name(delta);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvsph: solvable spherical subgroups and their normalizers"};
  app.require_subcommand(1);

  std::string path, path_b, center;
  std::string type, lattice = "adjoint";
  bool as_json = false, with_double = false, sober = false, dedupe = false;
  int max_m = -1;

  CLI::App* validate_cmd = app.add_subcommand("validate", "check a datum against the classification conditions");
  validate_cmd->add_option("input", path, "input JSON document")->required();
  validate_cmd->add_flag("--json", as_json, "machine-readable output");

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "compute the normalizer structure");
  analyze_cmd->add_option("input", path, "input JSON document")->required();
  analyze_cmd->add_flag("--json", as_json, "machine-readable output");
  analyze_cmd->add_flag("--double", with_double, "also analyze N_G(H)^0 and report stability");
  analyze_cmd->add_flag("--sober", sober, "complete a torus-free datum with S = A_0");

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "list all valid data for a root system (JSON lines)");
  enum_cmd->add_option("--type", type, "root system type, e.g. A2 or B3xG2")->required();
  enum_cmd->add_option("--lattice", lattice, "adjoint | simply_connected");
  enum_cmd->add_flag("--sober", sober, "complete each datum with the sober torus");
  enum_cmd->add_option("--max-m", max_m, "bound on |M|");
  enum_cmd->add_flag("--dedupe-auto", dedupe, "deduplicate under diagram automorphisms");

  CLI::App* transform_cmd = app.add_subcommand("transform", "apply an elementary transformation");
  transform_cmd->add_option("input", path, "input JSON document")->required();
  transform_cmd->add_option("--center", center, "center, e.g. alpha1 or 1 (1-based)")->required();
  transform_cmd->add_flag("--sober", sober, "complete a torus-free datum with S = A_0");

  CLI::App* conjugate_cmd = app.add_subcommand("conjugate", "decide conjugacy of two data");
  conjugate_cmd->add_option("a", path, "first document")->required();
  conjugate_cmd->add_option("b", path_b, "second document")->required();
  conjugate_cmd->add_flag("--json", as_json, "machine-readable output");
  conjugate_cmd->add_flag("--sober", sober, "complete torus-free data with S = A_0");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return cmd_validate(path, as_json);
    if (analyze_cmd->parsed()) return cmd_analyze(path, as_json, with_double, sober);
    if (enum_cmd->parsed()) return cmd_enumerate(type, lattice, sober, max_m, dedupe);
    if (transform_cmd->parsed()) return cmd_transform(path, center, sober);
    if (conjugate_cmd->parsed()) return cmd_conjugate(path, path_b, as_json, sober);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidDatum;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  }
  return kExitOk;
}
