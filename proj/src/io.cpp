#include "solvsph/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "solvsph/error.hpp"
#include "solvsph/linalg.hpp"

namespace solvsph {

FullDatum InputDocument::full() const {
  if (!ker_tau) fail(errc::invalid_datum, "document carries no torus (ker_tau)");
  return FullDatum{datum, TorusDatum{*ker_tau}};
}

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw std::invalid_argument("schema: " + what);
}

Rat json_rat(const json& v) {
  if (v.is_string()) return parse_rat(v.get<std::string>());
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  schema_error("expected a rational string or an integer");
}

QVec json_qvec(const json& v, int n) {
  if (!v.is_array() || static_cast<int>(v.size()) != n) schema_error("vector of wrong length");
  QVec out;
  for (const auto& x : v) out.push_back(json_rat(x));
  return out;
}

Root json_root(const json& v, int n) {
  if (!v.is_array() || static_cast<int>(v.size()) != n) schema_error("root vector of wrong length");
  Root out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) schema_error("root coefficients must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

json rat_json(const Rat& q) { return json(rat_str(q)); }

}  // namespace

InputDocument parse_document(const json& doc) {
  if (!doc.is_object() || !doc.contains("root_system")) schema_error("missing root_system");
  const json& rsj = doc["root_system"];
  if (!rsj.contains("components") || !rsj["components"].is_array() || rsj["components"].empty())
    schema_error("root_system.components must be a non-empty array");

  std::vector<SimpleComponent> comps;
  for (const auto& c : rsj["components"]) {
    if (!c.contains("family") || !c.contains("rank")) schema_error("component needs family and rank");
    const std::string fam = c["family"].get<std::string>();
    if (fam.size() != 1 || fam[0] < 'A' || fam[0] > 'G') schema_error("bad family " + fam);
    comps.push_back({static_cast<Family>(fam[0]), c["rank"].get<int>()});
  }

  int n = 0;
  for (const auto& c : comps) n += c.rank;

  LatticeKind kind = LatticeKind::adjoint;
  QMat custom;
  if (rsj.contains("lattice")) {
    const json& lat = rsj["lattice"];
    if (lat.is_string()) {
      const std::string s = lat.get<std::string>();
      if (s == "adjoint") kind = LatticeKind::adjoint;
      else if (s == "simply_connected") kind = LatticeKind::simply_connected;
      else schema_error("unknown lattice preset " + s);
    } else if (lat.is_object() && lat.contains("generators")) {
      kind = LatticeKind::custom;
      for (const auto& row : lat["generators"]) custom.push_back(json_qvec(row, n));
    } else {
      schema_error("lattice must be a preset name or {generators: [...]}");
    }
  }
  RootSystemPtr rs = build_root_system(comps, kind, std::move(custom));

  std::vector<Root> m_roots;
  if (doc.contains("M"))
    for (const auto& row : doc["M"]) m_roots.push_back(json_root(row, n));

  std::vector<std::pair<Root, int>> labelled;
  std::vector<int> document_index;  // position of each labelled root in M
  if (doc.contains("pi")) {
    for (const auto& entry : doc["pi"]) {
      if (!entry.is_array() || entry.size() != 2) schema_error("pi entries are [root, index] pairs");
      Root r = json_root(entry[0], n);
      const int label = entry[1].get<int>();
      if (label < 0 || label >= n) schema_error("pi index out of range");
      labelled.emplace_back(std::move(r), label);
    }
  }
  if (labelled.size() != m_roots.size()) schema_error("pi must label every root of M exactly once");
  std::vector<std::pair<Root, int>> ordered;
  for (const Root& r : m_roots) {
    auto it = std::find_if(labelled.begin(), labelled.end(),
                           [&](const auto& p) { return p.first == r; });
    if (it == labelled.end()) schema_error("pi misses a root of M");
    ordered.push_back(*it);
  }

  std::optional<IntegerLattice> ker;
  if (doc.contains("ker_tau")) {
    QMat gens;
    for (const auto& row : doc["ker_tau"]) gens.push_back(json_qvec(row, n));
    ker = IntegerLattice::from_generators(rs, gens);
  }

  std::vector<std::vector<int>> equiv;
  if (doc.contains("equiv")) {
    for (const auto& block : doc["equiv"]) {
      std::vector<int> b;
      for (const auto& i : block) {
        const int idx = i.get<int>();
        if (idx < 0 || idx >= static_cast<int>(m_roots.size())) schema_error("equiv index range");
        b.push_back(idx);
      }
      equiv.push_back(std::move(b));
    }
  } else if (ker) {
    SphericalDatum tmp = make_datum(rs, ordered, {});
    equiv = derive_equiv(tmp.m_roots, *ker);
    // derive_equiv works on the canonical order; map back to document order.
    std::vector<int> doc_pos(m_roots.size());
    for (size_t i = 0; i < m_roots.size(); ++i) {
      auto it = std::find(tmp.m_roots.begin(), tmp.m_roots.end(), m_roots[i]);
      doc_pos[it - tmp.m_roots.begin()] = static_cast<int>(i);
    }
    for (auto& block : equiv)
      for (int& x : block) x = doc_pos[x];
  } else if (m_roots.size() > 1) {
    schema_error("equiv is required when ker_tau is absent");
  } else {
    for (size_t i = 0; i < m_roots.size(); ++i) equiv.push_back({static_cast<int>(i)});
  }

  InputDocument out{rs, make_datum(rs, std::move(ordered), std::move(equiv)), std::move(ker)};
  return out;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json doc;
  in >> doc;
  return parse_document(doc);
}

json datum_to_json(const SphericalDatum& d, const IntegerLattice* ker_tau) {
  json rsj;
  for (const auto& c : d.rs->components())
    rsj["components"].push_back(
        {{"family", std::string(1, static_cast<char>(c.family))}, {"rank", c.rank}});
  switch (d.rs->lattice_kind()) {
    case LatticeKind::adjoint: rsj["lattice"] = "adjoint"; break;
    case LatticeKind::simply_connected: rsj["lattice"] = "simply_connected"; break;
    case LatticeKind::custom: {
      json gens = json::array();
      for (const QVec& row : d.rs->lattice_basis()) {
        json r = json::array();
        for (const Rat& q : row) r.push_back(rat_json(q));
        gens.push_back(r);
      }
      rsj["lattice"] = {{"generators", gens}};
      break;
    }
  }

  json doc;
  doc["root_system"] = rsj;
  doc["M"] = json::array();
  doc["pi"] = json::array();
  for (size_t i = 0; i < d.m_roots.size(); ++i) {
    doc["M"].push_back(d.m_roots[i]);
    doc["pi"].push_back(json::array({json(d.m_roots[i]), json(d.labels[i])}));
  }
  doc["equiv"] = d.equiv;
  if (ker_tau) {
    json rows = json::array();
    for (const QVec& row : ker_tau->basis_vectors()) {
      json r = json::array();
      for (const Rat& q : row) r.push_back(rat_json(q));
      rows.push_back(r);
    }
    doc["ker_tau"] = rows;
  }
  return doc;
}

std::string alpha_name(int index) { return "alpha" + std::to_string(index + 1); }

namespace {

const char* verdict_str(ValidationReport::Verdict v) {
  switch (v) {
    case ValidationReport::Verdict::pass: return "pass";
    case ValidationReport::Verdict::fail: return "fail";
    case ValidationReport::Verdict::skipped: return "skipped";
  }
  return "?";
}

json torsion_json(const std::vector<Int>& torsion) {
  json out = json::array();
  for (const Int& d : torsion) {
    if (d.fits_slong_p()) out.push_back(d.get_si());
    else out.push_back(d.get_str());
  }
  return out;
}

json quotient_json(const QuotientDesc& q) {
  return json{{"torus_rank", q.torus_rank},
              {"torsion", torsion_json(q.torsion)},
              {"two_torsion_rank", q.two_torsion_rank}};
}

json lattice_json(const IntegerLattice& lat) {
  json rows = json::array();
  for (const QVec& row : lat.basis_vectors()) {
    json r = json::array();
    for (const Rat& q : row) r.push_back(rat_json(q));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

json validation_to_json(const ValidationReport& rep) {
  json pairs = json::array();
  for (const auto& p : rep.pairs)
    pairs.push_back({{"i", p.i},
                     {"j", p.j},
                     {"equivalent", p.equivalent},
                     {"pattern", pattern_name(p.pattern)}});
  return json{{"valid", rep.valid()},
              {"structural", verdict_str(rep.structural)},
              {"A", verdict_str(rep.cond_A)},
              {"D", verdict_str(rep.cond_D)},
              {"E", verdict_str(rep.cond_E)},
              {"C", verdict_str(rep.cond_C)},
              {"T", verdict_str(rep.cond_T)},
              {"table_rows", rep.table_rows},
              {"pairs", pairs},
              {"witness", rep.witness}};
}

json report_to_json(const NormalizerReport& rep) {
  json p = json::array(), ps = json::array();
  for (int i : rep.P) p.push_back(alpha_name(i));
  for (int i : rep.P_S) ps.push_back(alpha_name(i));
  return json{{"P", p},
              {"P_S", ps},
              {"r", rep.r},
              {"L", lattice_json(rep.L)},
              {"L0", lattice_json(rep.L0)},
              {"component_group_L", torsion_json(rep.component_group_L)},
              {"dims",
               {{"dim_T", rep.dims.dim_T},
                {"dim_S", rep.dims.dim_S},
                {"dim_A0", rep.dims.dim_A0},
                {"num_classes", rep.dims.num_classes},
                {"dim_N", rep.dims.dim_N},
                {"dim_H", rep.dims.dim_H},
                {"dim_NGH0", rep.dims.dim_NGH0}}},
              {"N_G(H)/H", quotient_json(rep.quotient_NH)},
              {"N_G(H)/N_G(H)^0", quotient_json(rep.quotient_components)},
              {"generators", rep.generators}};
}

std::string render_quotient(const QuotientDesc& q) {
  std::vector<std::string> parts;
  if (q.torus_rank > 0) parts.push_back("T^" + std::to_string(q.torus_rank));
  for (const Int& d : q.torsion) parts.push_back("Z/" + d.get_str());
  if (q.two_torsion_rank == 1) parts.push_back("Z/2");
  if (q.two_torsion_rank > 1) parts.push_back("(Z/2)^" + std::to_string(q.two_torsion_rank));
  if (parts.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " × ";
    out += parts[i];
  }
  return out;
}

namespace {

std::string index_set(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += alpha_name(v[i]);
  }
  return s + "}";
}

std::string lattice_str(const IntegerLattice& lat) {
  if (lat.rank() == 0) return "0";
  std::string s = "<";
  const QMat rows = lat.basis_vectors();
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += "; ";
    s += "(";
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (j) s += ", ";
      s += rat_str(rows[i][j]);
    }
    s += ")";
  }
  return s + ">";
}

}  // namespace

std::string render_report(const NormalizerReport& rep) {
  std::ostringstream os;
  os << "P   = " << index_set(rep.P) << "\n";
  os << "P_S = " << index_set(rep.P_S) << " (r = " << rep.r << ")\n";
  os << "L   = " << lattice_str(rep.L) << " (rank " << rep.L.rank() << ")\n";
  os << "L0  = " << lattice_str(rep.L0) << " (rank " << rep.L0.rank() << ")\n";
  os << "L0/L = "
     << render_quotient(QuotientDesc{0, rep.component_group_L, 0}) << "\n";
  os << "dim T = " << rep.dims.dim_T << ", dim S = " << rep.dims.dim_S
     << ", dim A0 = " << rep.dims.dim_A0 << ", tau-classes m = " << rep.dims.num_classes
     << ", dim N = " << rep.dims.dim_N << ", dim H = " << rep.dims.dim_H
     << ", dim N_G(H)^0 = " << rep.dims.dim_NGH0 << "\n";
  os << "N_G(H)^0 = A0 ⋉ N\n";
  os << "N_G(H)/H = " << render_quotient(rep.quotient_NH) << "\n";
  os << "N_G(H)/N_G(H)^0 = " << render_quotient(rep.quotient_components) << "\n";
  os << "generators: ";
  for (size_t i = 0; i < rep.generators.size(); ++i) {
    if (i) os << ", ";
    os << rep.generators[i];
  }
  os << "\n";
  return os.str();
}

std::string render_validation(const ValidationReport& rep) {
  std::ostringstream os;
  os << "valid: " << (rep.valid() ? "yes" : "no") << "\n";
  os << "structural: " << verdict_str(rep.structural) << "\n";
  os << "(A): " << verdict_str(rep.cond_A) << "\n";
  os << "(D): " << verdict_str(rep.cond_D) << "\n";
  os << "(E): " << verdict_str(rep.cond_E) << "\n";
  os << "(C): " << verdict_str(rep.cond_C) << "\n";
  os << "(T): " << verdict_str(rep.cond_T) << "\n";
  for (const auto& p : rep.pairs)
    os << "pair (" << p.i << ", " << p.j << "): " << (p.equivalent ? "equivalent" : "inequivalent")
       << ", pattern " << pattern_name(p.pattern) << "\n";
  if (!rep.witness.empty()) os << "witness: " << rep.witness << "\n";
  return os.str();
}

}  // namespace solvsph
