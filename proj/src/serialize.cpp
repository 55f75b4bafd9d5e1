#include "toricss/serialize.hpp"

#include <sstream>

#include "toricss/error.hpp"

namespace toricss::serialize {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string(what) + ": " + e.what());
  }
}

Json optional_predicted(const std::optional<surfaces::Predicted>& p) {
  if (!p) return "vacuous";
  return Json{{"value", p->value}, {"claim", surfaces::claim_name(p->claim)}};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const gf::FieldSpec& spec) {
  return Json{{"p", spec.p}, {"k", spec.k}, {"modulus", spec.modulus}};
}

gf::FieldSpec field_spec_from_json(const Json& j) {
  return guarded("field", [&] {
    gf::FieldSpec spec;
    spec.p = j.at("p").get<std::uint32_t>();
    spec.k = j.at("k").get<std::uint32_t>();
    if (j.contains("modulus")) spec.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    return spec;
  });
}

Json to_json(const lattice::PointSet& u) {
  Json pts = Json::array();
  for (const auto& p : u) pts.push_back(p);
  return Json{{"rank", u.rank()}, {"points", pts}};
}

lattice::PointSet point_set_from_json(const Json& j) {
  return guarded("point set", [&] {
    const auto rank = j.at("rank").get<std::size_t>();
    auto pts = j.at("points").get<std::vector<lattice::Point>>();
    return lattice::PointSet(rank, std::move(pts));
  });
}

Json to_json(const code::DistanceResult& d) {
  return Json{{"value", d.value}, {"exact", d.exact}, {"method", code::method_name(d.method)}};
}

Json to_json(const code::EvalCode& c) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < c.matrix.rows(); ++r) {
    auto row = c.matrix.row(r);
    rows.push_back(std::vector<gf::Element>(row.begin(), row.end()));
  }
  return Json{{"field", to_json(c.field().spec())},
              {"exponents", to_json(c.exponents)},
              {"support_size", c.length()},
              {"generator_matrix", rows},
              {"dimension", c.dimension}};
}

Json to_json(const scheme::Quantity& q) {
  return Json{{"value", q.value},
              {"display", std::max<std::int64_t>(0, q.value)},
              {"relation", scheme::relation_name(q.relation)},
              {"provenance", scheme::provenance_name(q.provenance)}};
}

Json to_json(const scheme::SchemeReport& r) {
  Json j{{"n", r.n}, {"k", r.k}, {"d", to_json(r.d)}, {"d_dual", to_json(r.d_dual)},
         {"r_threshold", to_json(r.r_threshold)}, {"t_threshold", to_json(r.t_threshold)}};
  j["strong_t"] = r.strong_t ? to_json(*r.strong_t) : Json("vacuous");
  return j;
}

Json family_to_json(const lattice::PolytopeFamily& f) {
  Json j{{"name", lattice::family_name(f)}};
  for (const auto& [name, value] : surfaces::family_parameters(f)) j[name] = value;
  if (const auto* e = std::get_if<lattice::Explicit>(&f)) j["vertices"] = e->vertices;
  return j;
}

Json to_json(const surfaces::FamilyParams& fp) {
  Json j{{"family", family_to_json(fp.family)}, {"q", fp.q}};
  j["count_U"] = fp.count_u ? Json(*fp.count_u) : Json(nullptr);
  j["max_zeros"] = optional_predicted(fp.max_zeros);
  j["r_threshold"] = optional_predicted(fp.r_threshold);
  j["t_threshold"] = optional_predicted(fp.t_threshold);
  j["strong_t"] = optional_predicted(fp.strong_t);
  return j;
}

Json to_json(const surfaces::ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj{{"quantity", c.quantity}, {"predicted", optional_predicted(c.predicted)}};
    cj["measured"] = c.measured ? Json(*c.measured) : Json(nullptr);
    cj["measured_kind"] = c.measured_kind;
    cj["status"] = surfaces::status_name(c.status);
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(cj);
  }
  Json j{{"q", r.q}, {"family", family_to_json(r.family)}, {"status", surfaces::status_name(r.overall)}, {"checks", checks}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const SharesFile& f) {
  std::string p0 = "(";
  for (std::size_t i = 0; i < f.exponents.rank(); ++i) p0 += i ? ",1" : "1";
  p0 += ")";
  Json shares = Json::array();
  for (std::size_t i = 0; i < f.players.size(); ++i) shares.push_back(Json{{"player", f.players[i]}, {"value", f.values[i]}});
  Json j{{"field", to_json(f.field)},
         {"scheme", Json{{"U", to_json(f.exponents)}, {"p0", p0}}},
         {"secret_present", f.secret.has_value()}};
  if (f.secret) j["secret"] = *f.secret;
  j["shares"] = shares;
  return j;
}

SharesFile shares_file_from_json(const Json& j) {
  return guarded("shares file", [&] {
    SharesFile f;
    f.field = field_spec_from_json(j.at("field"));
    f.exponents = point_set_from_json(j.at("scheme").at("U"));
    if (j.at("secret_present").get<bool>()) f.secret = j.at("secret").get<gf::Element>();
    for (const auto& s : j.at("shares")) {
      f.players.push_back(s.at("player").get<lattice::Point>());
      f.values.push_back(s.at("value").get<gf::Element>());
    }
    return f;
  });
}

SharesFile make_shares_file(const scheme::MasseyScheme& s, const scheme::ShareVector& shares, bool include_secret) {
  SharesFile f;
  f.field = s.field().spec();
  f.exponents = s.exponents();
  if (include_secret) f.secret = shares.secret;
  for (std::size_t i = 0; i < s.n(); ++i) {
    f.players.push_back(s.player_point(i));
    f.values.push_back(shares.shares[i]);
  }
  return f;
}

std::string validation_csv_header() {
  return "q,family,p1,p2,p3,quantity,predicted,claim,measured,measured_kind,status,instance_status\n";
}

std::string validation_csv_rows(const surfaces::ValidationReport& r) {
  std::ostringstream os;
  auto params = surfaces::family_parameters(r.family);
  std::string prefix = std::to_string(r.q) + "," + lattice::family_name(r.family);
  for (std::size_t i = 0; i < 3; ++i)
    prefix += "," + (i < params.size() ? params[i].first + "=" + std::to_string(params[i].second) : std::string());
  const std::string overall = surfaces::status_name(r.overall);
  if (r.checks.empty()) {
    os << prefix << ",,,,,,SKIPPED," << overall << "\n";
    return os.str();
  }
  for (const auto& c : r.checks) {
    os << prefix << "," << c.quantity << ",";
    if (c.predicted) os << c.predicted->value << "," << surfaces::claim_name(c.predicted->claim);
    else os << "vacuous,";
    os << ",";
    if (c.measured) os << *c.measured;
    os << "," << csv_escape(c.measured_kind) << "," << surfaces::status_name(c.status) << "," << overall << "\n";
  }
  return os.str();
}

std::string validation_csv(const std::vector<surfaces::ValidationReport>& reports) {
  std::string out = validation_csv_header();
  for (const auto& r : reports) out += validation_csv_rows(r);
  return out;
}

}  // namespace toricss::serialize
