#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "solvsph/classifier.hpp"
#include "solvsph/datum.hpp"
#include "solvsph/normalizer.hpp"

namespace solvsph {

using json = nlohmann::json;

struct InputDocument {
  RootSystemPtr rs;
  SphericalDatum datum;                  // declared equiv (or derived from ker_tau)
  std::optional<IntegerLattice> ker_tau;

  FullDatum full() const;  // throws errc::invalid_datum when ker_tau is absent
};

// Schema:
// {
//   "root_system": {
//     "components": [{"family": "A", "rank": 2}, ...],
//     "lattice": "adjoint" | "simply_connected" | {"generators": [["p/q", ...], ...]}
//   },
//   "M":    [[1, 0], ...],          root coefficient vectors
//   "pi":   [[[1, 0], 0], ...],     pairs [root, simple-root index (0-based)]
//   "equiv": [[0, 1], [2]],         optional when ker_tau present
//   "ker_tau": [["1/3", "-1/3"], ...]   optional
// }
InputDocument parse_document(const json& doc);
InputDocument load_document(const std::string& path);

json datum_to_json(const SphericalDatum& d, const IntegerLattice* ker_tau);

json validation_to_json(const ValidationReport& rep);
json report_to_json(const NormalizerReport& rep);

std::string alpha_name(int index);  // "alpha1", 1-based
std::string render_quotient(const QuotientDesc& q);
std::string render_report(const NormalizerReport& rep);
std::string render_validation(const ValidationReport& rep);

}  // namespace solvsph
