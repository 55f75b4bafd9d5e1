#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "toricss/code.hpp"
#include "toricss/lattice.hpp"
#include "toricss/scheme.hpp"
#include "toricss/surfaces.hpp"

namespace toricss::serialize {

using Json = nlohmann::ordered_json;

Json to_json(const gf::FieldSpec& spec);
gf::FieldSpec field_spec_from_json(const Json& j);

// {"rank": r, "points": [[..], ..]} in canonical order.
Json to_json(const lattice::PointSet& u);
lattice::PointSet point_set_from_json(const Json& j);

Json to_json(const code::DistanceResult& d);
Json to_json(const code::EvalCode& c);
Json to_json(const scheme::Quantity& q);
Json to_json(const scheme::SchemeReport& r);
Json to_json(const surfaces::FamilyParams& fp);
Json to_json(const surfaces::ValidationReport& r);
Json family_to_json(const lattice::PolytopeFamily& f);

// The shares file exchanged between deal and reconstruct.
struct SharesFile {
  gf::FieldSpec field;
  lattice::PointSet exponents;
  std::optional<gf::Element> secret;
  std::vector<lattice::Point> players;
  std::vector<gf::Element> values;
};

Json to_json(const SharesFile& f);
SharesFile shares_file_from_json(const Json& j);

SharesFile make_shares_file(const scheme::MasseyScheme& s, const scheme::ShareVector& shares, bool include_secret);

// CSV rows (with header) for validation reports: one row per checked quantity.
std::string validation_csv(const std::vector<surfaces::ValidationReport>& reports);
std::string validation_csv_header();
std::string validation_csv_rows(const surfaces::ValidationReport& r);

}  // namespace toricss::serialize
