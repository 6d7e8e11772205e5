#include <doctest.h>

#include "solvsph/enumerator.hpp"
#include "solvsph/io.hpp"
#include "solvsph/normalizer.hpp"
#include "solvsph/transforms.hpp"

using namespace solvsph;

namespace {

const char* kSl3Doc = R"({
  "root_system": {
    "components": [{"family": "A", "rank": 2}],
    "lattice": "simply_connected"
  },
  "M": [[1, 0]],
  "pi": [[[1, 0], 0]],
  "ker_tau": [["1/3", "-1/3"]]
})";

}  // namespace

TEST_CASE("parse the SL3 document") {
  const InputDocument doc = parse_document(json::parse(kSl3Doc));
  CHECK(doc.rs->type_string() == "A2");
  CHECK(doc.rs->lattice_kind() == LatticeKind::simply_connected);
  REQUIRE(doc.ker_tau.has_value());
  CHECK(doc.ker_tau->rank() == 1);
  CHECK(doc.datum.m_roots == std::vector<Root>{{1, 0}});
  CHECK(doc.datum.equiv == std::vector<std::vector<int>>{{0}});
  CHECK(validate(doc.full()).valid());
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(parse_document(json::parse("{}")), std::invalid_argument);
  CHECK_THROWS_AS(parse_document(json::parse(R"({"root_system": {"components": []}})")),
                  std::invalid_argument);
  // Missing pi entry for a root of M.
  CHECK_THROWS_AS(parse_document(json::parse(R"({
    "root_system": {"components": [{"family": "A", "rank": 2}]},
    "M": [[1, 0]], "pi": []
  })")),
                  std::invalid_argument);
  // equiv required without ker_tau for |M| > 1.
  CHECK_THROWS_AS(parse_document(json::parse(R"({
    "root_system": {"components": [{"family": "A", "rank": 2}]},
    "M": [[1, 0], [0, 1]],
    "pi": [[[1, 0], 0], [[0, 1], 1]]
  })")),
                  std::invalid_argument);
}

TEST_CASE("datum documents round-trip") {
  for (const char* type : {"A2", "B2"}) {
    for (LatticeKind kind : {LatticeKind::adjoint, LatticeKind::simply_connected}) {
      auto rs = build_root_system(parse_type_string(type), kind);
      for (const FullDatum& full : enumerate_sober(rs, {}).data) {
        const json doc = datum_to_json(full.datum, &full.torus.ker_tau);
        const InputDocument parsed = parse_document(doc);
        CHECK(datum_key(parsed.full()) == datum_key(full));
        CHECK(validate(parsed.full()).valid());
        // Serialization is stable.
        CHECK(datum_to_json(parsed.datum, &*parsed.ker_tau).dump() == doc.dump());
      }
    }
  }
}

TEST_CASE("quotient rendering") {
  CHECK(render_quotient(QuotientDesc{0, {}, 0}) == "1");
  CHECK(render_quotient(QuotientDesc{1, {}, 0}) == "T^1");
  CHECK(render_quotient(QuotientDesc{0, {}, 1}) == "Z/2");
  CHECK(render_quotient(QuotientDesc{0, {Int(3)}, 2}) == "Z/3 × (Z/2)^2");
  CHECK(render_quotient(QuotientDesc{2, {Int(4), Int(12)}, 1}) == "T^2 × Z/4 × Z/12 × Z/2");
}

TEST_CASE("report rendering contains the quotient lines") {
  const InputDocument doc = parse_document(json::parse(kSl3Doc));
  const NormalizerReport rep = normalizer_report(doc.full());
  const std::string text = render_report(rep);
  CHECK(text.find("N_G(H)/H = T^1") != std::string::npos);
  CHECK(text.find("P   = {alpha1}") != std::string::npos);
  CHECK(text.find("P_S = {}") != std::string::npos);

  const json j = report_to_json(rep);
  CHECK(j["P"] == json::array({"alpha1"}));
  CHECK(j["P_S"] == json::array());
  CHECK(j["N_G(H)/H"]["torus_rank"] == 1);
  CHECK(j["N_G(H)/H"]["torsion"] == json::array());
  CHECK(j["N_G(H)/H"]["two_torsion_rank"] == 0);
}

TEST_CASE("alpha names are 1-based") {
  CHECK(alpha_name(0) == "alpha1");
  CHECK(alpha_name(2) == "alpha3");
}

TEST_CASE("custom lattice generators equal to a preset give the same system") {
  const json doc = json::parse(R"({
    "root_system": {
      "components": [{"family": "A", "rank": 2}],
      "lattice": {"generators": [["2/3", "1/3"], ["1/3", "2/3"]]}
    },
    "M": [[1, 0]],
    "pi": [[[1, 0], 0]],
    "ker_tau": [["1/3", "-1/3"]]
  })");
  const InputDocument custom = parse_document(doc);
  auto preset = build_root_system(parse_type_string("A2"), LatticeKind::simply_connected);
  CHECK(*custom.rs == *preset);

  // Reports agree with the preset form of the same datum.
  const NormalizerReport rep = normalizer_report(custom.full());
  CHECK(rep.P == std::vector<int>{0});
  CHECK(rep.quotient_NH == QuotientDesc{1, {}, 0});

  // Custom documents round-trip through their canonical generator echo.
  const json echoed = datum_to_json(custom.datum, &*custom.ker_tau);
  const InputDocument again = parse_document(echoed);
  CHECK(*again.rs == *custom.rs);
  CHECK(datum_key(again.full()) == datum_key(custom.full()));
}
