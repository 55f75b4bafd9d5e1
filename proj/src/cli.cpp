#include "toricss/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "toricss/error.hpp"
#include "toricss/scheme.hpp"
#include "toricss/serialize.hpp"
#include "toricss/surfaces.hpp"

namespace toricss::cli {

namespace {

using serialize::Json;

struct RunConfig {
  std::uint64_t q = 0;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::string modulus;
  std::string family = "hirzebruch";
  std::int64_t d = 1, e = 1, twist = 1, a = 0, b = 0;
  std::size_t rank = 2;
  std::string vertices;
  std::string points_file;
  std::uint64_t seed = 1;
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 26;
  std::uint64_t subset_cap = std::uint64_t{1} << 16;
  std::uint64_t samples = 20000;
  unsigned threads = 0;
  std::string format = "text";
  std::string output;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw Error(ErrorCode::MalformedInput, "not an integer: '" + s + "'");
  return v;
}

std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& tok : split(s, ',')) {
    const auto v = parse_int(tok);
    if (v < 0) throw Error(ErrorCode::MalformedInput, "negative player index");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

// "5", "4,5,7" or "5..9".
std::vector<std::int64_t> parse_q_range(const std::string& s) {
  std::vector<std::int64_t> out;
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const auto lo = parse_int(s.substr(0, dots));
    const auto hi = parse_int(s.substr(dots + 2));
    for (auto q = lo; q <= hi; ++q) out.push_back(q);
    return out;
  }
  for (const auto& tok : split(s, ',')) out.push_back(parse_int(tok));
  return out;
}

gf::FieldSpec field_spec(const RunConfig& cfg) {
  gf::FieldSpec spec;
  if (cfg.q != 0) {
    auto found = gf::spec_for_order(cfg.q);
    if (!found) throw Error(ErrorCode::NonPrimeP, std::to_string(cfg.q) + " is not a prime power");
    spec = *found;
  } else if (cfg.p != 0) {
    spec.p = cfg.p;
    spec.k = cfg.k;
  } else {
    throw Error(ErrorCode::InvalidField, "give the field with --q or --p/--k");
  }
  for (const auto& tok : split(cfg.modulus, ',')) spec.modulus.push_back(static_cast<std::uint32_t>(parse_int(tok)));
  return spec;
}

std::shared_ptr<const gf::GaloisField> make_field(const RunConfig& cfg) {
  return std::make_shared<const gf::GaloisField>(field_spec(cfg));
}

lattice::PolytopeFamily make_family(const RunConfig& cfg, std::int64_t q) {
  if (cfg.family == "hirzebruch") return lattice::Hirzebruch{cfg.d, cfg.e, cfg.twist};
  if (cfg.family == "trapezoid") return lattice::Trapezoid{cfg.a, cfg.b, q};
  if (cfg.family == "hypercube") return lattice::Hypercube{q, cfg.rank};
  if (cfg.family == "explicit") {
    lattice::Explicit ex;
    for (const auto& v : split(cfg.vertices, ';')) {
      lattice::Point p;
      for (const auto& c : split(v, ',')) p.push_back(parse_int(c));
      ex.vertices.push_back(p);
    }
    return ex;
  }
  throw Error(ErrorCode::MalformedInput, "unknown family '" + cfg.family + "'");
}

bool has_formulas(const lattice::PolytopeFamily& f) {
  return std::holds_alternative<lattice::Hirzebruch>(f) || std::holds_alternative<lattice::Trapezoid>(f);
}

// The exponent set from --points or from the family flags.
lattice::PointSet exponent_set(const RunConfig& cfg, std::int64_t q) {
  if (!cfg.points_file.empty()) {
    std::ifstream in(cfg.points_file);
    if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + cfg.points_file);
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::MalformedInput, std::string("points file: ") + e.what());
    }
    return serialize::point_set_from_json(j);
  }
  const auto family = make_family(cfg, q);
  if (has_formulas(family)) surfaces::family_params(q, family);  // constraint check
  return lattice::family_points(family);
}

code::SearchBudget search_budget(const RunConfig& cfg) {
  code::SearchBudget b;
  b.exhaustive_cap = cfg.exhaustive_cap;
  b.samples = cfg.samples;
  b.seed = cfg.seed;
  b.threads = cfg.threads;
  return b;
}

scheme::VerifyBudget verify_budget(const RunConfig& cfg) {
  scheme::VerifyBudget b;
  b.max_subsets = cfg.subset_cap;
  b.seed = cfg.seed;
  b.threads = cfg.threads;
  return b;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw Error(ErrorCode::MalformedInput, "cannot write " + cfg.output);
  f << text;
}

std::string field_header(const gf::GaloisField& f) {
  std::ostringstream os;
  os << "field GF(" << f.q() << ") p=" << f.p() << " k=" << f.k() << " modulus=[";
  for (std::size_t i = 0; i < f.spec().modulus.size(); ++i) os << (i ? "," : "") << f.spec().modulus[i];
  os << "] generator=" << f.generator();
  return os.str();
}

std::string quantity_text(const scheme::Quantity& q) {
  std::ostringstream os;
  os << scheme::relation_name(q.relation) << " " << std::max<std::int64_t>(0, q.value) << " ("
     << scheme::provenance_name(q.provenance) << ")";
  return os.str();
}

std::string predicted_text(const std::optional<surfaces::Predicted>& p) {
  if (!p) return "vacuous";
  const char* rel = p->claim == surfaces::Claim::Exact ? "= " : p->claim == surfaces::Claim::UpperBound ? "<= " : ">= ";
  return rel + std::to_string(p->value) + " (paper-bound)";
}

int cmd_params(const RunConfig& cfg, std::ostream& out) {
  const auto field = make_field(cfg);
  const auto q = static_cast<std::int64_t>(field->q());
  const auto u = exponent_set(cfg, q);
  const auto s = scheme::build_scheme(u, field, u.rank());
  const auto report = scheme::thresholds(s, search_budget(cfg), verify_budget(cfg));
  std::optional<surfaces::FamilyParams> predicted;
  if (cfg.points_file.empty()) {
    const auto family = make_family(cfg, q);
    if (has_formulas(family)) predicted = surfaces::family_params(q, family);
  }

  if (cfg.format == "json") {
    Json j{{"field", serialize::to_json(field->spec())}, {"U", serialize::to_json(s.exponents())},
           {"scheme", serialize::to_json(report)}};
    j["predicted"] = predicted ? serialize::to_json(*predicted) : Json(nullptr);
    emit(cfg, j.dump(2) + "\n", out);
    return kOk;
  }
  std::ostringstream os;
  os << field_header(*field) << "\n";
  os << "|U| = " << s.exponents().size() << "\n";
  os << "n = " << report.n << "\nk = " << report.k << "\n";
  os << "d = " << report.d.value << (report.d.exact ? " (exact)" : " (upper bound, randomized)") << "\n";
  os << "d' = " << report.d_dual.value << (report.d_dual.exact ? " (exact)" : " (upper bound, randomized)") << "\n";
  os << "r " << quantity_text(report.r_threshold) << "\n";
  os << "t " << quantity_text(report.t_threshold) << "\n";
  os << "strong t " << (report.strong_t ? quantity_text(*report.strong_t) : std::string("vacuous")) << "\n";
  if (predicted) {
    if (predicted->count_u) os << "predicted |U| = " << *predicted->count_u << "\n";
    os << "predicted max zeros " << predicted_text(predicted->max_zeros) << "\n";
    os << "predicted r " << predicted_text(predicted->r_threshold) << "\n";
    os << "predicted t " << predicted_text(predicted->t_threshold) << "\n";
    os << "predicted strong t " << predicted_text(predicted->strong_t) << "\n";
  }
  emit(cfg, os.str(), out);
  return kOk;
}

int cmd_deal(const RunConfig& cfg, std::int64_t secret, bool omit_secret, std::ostream& out) {
  const auto field = make_field(cfg);
  const auto u = exponent_set(cfg, field->q());
  const auto s = scheme::build_scheme(u, field, u.rank());
  if (secret < 0 || secret >= static_cast<std::int64_t>(field->q()))
    throw Error(ErrorCode::MalformedInput, "secret must be in [0, q)");
  const auto shares = scheme::deal(s, static_cast<gf::Element>(secret), cfg.seed);
  const auto file = serialize::make_shares_file(s, shares, !omit_secret);
  emit(cfg, serialize::to_json(file).dump(2) + "\n", out);
  return kOk;
}

int cmd_reconstruct(const RunConfig& cfg, const std::string& shares_path, const std::string& players, bool all,
                    std::ostream& out) {
  std::ifstream in(shares_path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read " + shares_path);
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("shares file: ") + e.what());
  }
  const auto file = serialize::shares_file_from_json(j);
  const auto field = std::make_shared<const gf::GaloisField>(file.field);
  const auto s = scheme::build_scheme(file.exponents, field, file.exponents.rank());

  std::map<lattice::Point, std::size_t> index_of;
  for (std::size_t i = 0; i < s.n(); ++i) index_of[s.player_point(i)] = i;

  std::vector<std::size_t> rows = all ? std::vector<std::size_t>{} : parse_index_list(players);
  if (all)
    for (std::size_t i = 0; i < file.players.size(); ++i) rows.push_back(i);
  std::vector<std::size_t> chosen;
  std::vector<gf::Element> values;
  for (auto r : rows) {
    if (r >= file.players.size()) throw Error(ErrorCode::MalformedInput, "share index out of range");
    const auto it = index_of.find(file.players[r]);
    if (it == index_of.end()) throw Error(ErrorCode::MalformedInput, "share belongs to no player of this scheme");
    if (file.values[r] >= field->q()) throw Error(ErrorCode::MalformedInput, "share value is not a field element");
    chosen.push_back(it->second);
    values.push_back(file.values[r]);
  }
  const auto secret = scheme::reconstruct(s, chosen, values);
  if (cfg.format == "json") {
    emit(cfg, Json{{"field", serialize::to_json(field->spec())}, {"players", chosen.size()}, {"secret", secret}}.dump(2) + "\n",
         out);
  } else {
    emit(cfg, std::to_string(secret) + "\n", out);
  }
  return kOk;
}

int cmd_mpc_demo(const RunConfig& cfg, std::int64_t s1, std::int64_t s2, const std::string& remove, bool force,
                 std::ostream& out, std::ostream& err) {
  const auto field = make_field(cfg);
  const auto u = exponent_set(cfg, field->q());
  const auto s = scheme::build_scheme(u, field, u.rank());
  for (auto v : {s1, s2})
    if (v < 0 || v >= static_cast<std::int64_t>(field->q())) throw Error(ErrorCode::MalformedInput, "secrets must be in [0, q)");
  auto removed = parse_index_list(remove);
  std::ranges::sort(removed);
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  for (auto r : removed)
    if (r >= s.n()) throw Error(ErrorCode::MalformedInput, "player index out of range");

  std::ostringstream trace;
  trace << field_header(*field) << "\n";
  trace << "players n = " << s.n() << ", |U| = " << s.exponents().size() << ", |U+U mod q-1| = "
        << s.product_code().exponents.size() << "\n";
  if (!force) {
    if (!scheme::has_strong_multiplication(s, removed.size(), verify_budget(cfg))) {
      err << "refusing: " << removed.size() << "-strong multiplication does not hold for this scheme (use --force)\n";
      return kUsage;
    }
    trace << "verified " << removed.size() << "-strong multiplication (privacy and product rank checks)\n";
  }

  const auto a = scheme::deal(s, static_cast<gf::Element>(s1), cfg.seed);
  const auto b = scheme::deal(s, static_cast<gf::Element>(s2), cfg.seed ^ 0x9E3779B97F4A7C15ull);
  std::vector<std::size_t> survivors;
  for (std::size_t i = 0, j = 0; i < s.n(); ++i) {
    if (j < removed.size() && removed[j] == i) {
      ++j;
      continue;
    }
    survivors.push_back(i);
  }
  trace << "dealt s = " << s1 << " and s~ = " << s2 << " to " << s.n() << " players\n";
  trace << "removed players:";
  for (auto r : removed) trace << " " << r;
  trace << "\n" << survivors.size() << " surviving players multiply their shares pointwise\n";

  const auto product = scheme::multiply_and_reconstruct(s, a.shares, b.shares, survivors);
  const auto expected = field->mul(static_cast<gf::Element>(s1), static_cast<gf::Element>(s2));
  trace << "reconstructed product = " << product << " (expected " << expected << ")\n";

  if (cfg.format == "json") {
    Json j{{"field", serialize::to_json(field->spec())},
           {"s", s1},
           {"s_tilde", s2},
           {"removed", removed},
           {"survivors", survivors.size()},
           {"product", product},
           {"expected", expected},
           {"ok", product == expected}};
    emit(cfg, j.dump(2) + "\n", out);
  } else {
    emit(cfg, trace.str(), out);
  }
  return product == expected ? kOk : kProtocol;
}

std::vector<lattice::PolytopeFamily> instances(const RunConfig& cfg, std::int64_t q, bool all_valid) {
  if (!all_valid) return {make_family(cfg, q)};
  if (cfg.family == "hirzebruch") return surfaces::valid_hirzebruch(q);
  if (cfg.family == "trapezoid") return surfaces::valid_trapezoids(q);
  throw Error(ErrorCode::MalformedInput, "--all-valid-dims needs --family hirzebruch or trapezoid");
}

int cmd_verify(const RunConfig& cfg, const std::string& q_range, bool all_valid, std::ostream& out, std::ostream& err) {
  surfaces::ValidationBudget budget{search_budget(cfg), verify_budget(cfg)};
  std::vector<surfaces::ValidationReport> reports;
  for (auto q : parse_q_range(q_range)) {
    if (q < 3 || !gf::spec_for_order(static_cast<std::uint64_t>(q))) {
      err << "warning: skipping q = " << q << " (not a prime power >= 3)\n";
      continue;
    }
    for (const auto& f : instances(cfg, q, all_valid)) reports.push_back(surfaces::validate_family(q, f, budget));
  }
  if (reports.empty()) err << "warning: no instances in range\n";
  bool violation = false;
  for (const auto& r : reports) violation = violation || r.has_violation();

  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(serialize::to_json(r));
    emit(cfg, Json{{"instances", arr}, {"violations", violation}}.dump(2) + "\n", out);
  } else if (cfg.format == "text") {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << "q=" << r.q << " " << lattice::family_name(r.family);
      for (const auto& [name, value] : surfaces::family_parameters(r.family)) os << " " << name << "=" << value;
      os << ": " << surfaces::status_name(r.overall);
      if (!r.note.empty()) os << " (" << r.note << ")";
      os << "\n";
    }
    emit(cfg, os.str(), out);
  } else {
    emit(cfg, serialize::validation_csv(reports), out);
  }
  return violation ? kViolation : kOk;
}

int cmd_table(const RunConfig& cfg, const std::string& q_range, std::ostream& out, std::ostream& err) {
  std::ostringstream os;
  os << "q,family,p1,p2,p3,count_U,max_zeros,max_zeros_claim,r_threshold,r_claim,t_threshold,t_claim,strong_t,strong_claim\n";
  auto cell = [](const std::optional<surfaces::Predicted>& p) {
    return p ? std::to_string(p->value) + "," + surfaces::claim_name(p->claim) : std::string("vacuous,");
  };
  std::size_t rows = 0;
  for (auto q : parse_q_range(q_range)) {
    if (q < 3 || !gf::spec_for_order(static_cast<std::uint64_t>(q))) {
      err << "warning: skipping q = " << q << " (not a prime power >= 3)\n";
      continue;
    }
    for (const auto& f : instances(cfg, q, true)) {
      const auto fp = surfaces::family_params(q, f);
      auto params = surfaces::family_parameters(f);
      os << q << "," << lattice::family_name(f);
      for (std::size_t i = 0; i < 3; ++i)
        os << "," << (i < params.size() ? params[i].first + "=" + std::to_string(params[i].second) : std::string());
      os << "," << (fp.count_u ? std::to_string(*fp.count_u) : std::string()) << "," << cell(fp.max_zeros) << ","
         << cell(fp.r_threshold) << "," << cell(fp.t_threshold) << "," << cell(fp.strong_t) << "\n";
      ++rows;
    }
  }
  if (rows == 0) err << "warning: empty table for the requested range\n";
  emit(cfg, os.str(), out);
  return kOk;
}

void add_field_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--q", cfg.q, "Field size (prime power)");
  app->add_option("--p", cfg.p, "Field characteristic");
  app->add_option("--k", cfg.k, "Extension degree");
  app->add_option("--modulus", cfg.modulus, "Defining polynomial coefficients, constant term first, e.g. 1,1,0,1");
}

void add_family_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--family", cfg.family, "hirzebruch | trapezoid | hypercube | explicit");
  app->add_option("--d", cfg.d);
  app->add_option("--e", cfg.e);
  app->add_option("--twist", cfg.twist, "Hirzebruch twist");
  app->add_option("--a", cfg.a, "Trapezoid bottom width");
  app->add_option("--b", cfg.b, "Trapezoid top width");
  app->add_option("--rank", cfg.rank, "Hypercube rank");
  app->add_option("--vertices", cfg.vertices, "Explicit polygon, e.g. \"0,0;2,0;0,2\"");
  app->add_option("--points", cfg.points_file, "Exponent set JSON file {\"rank\":r,\"points\":[...]}");
}

void add_budget_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--seed", cfg.seed, "Seed for every randomized step");
  app->add_option("--exhaustive-cap", cfg.exhaustive_cap, "Largest q^k enumerated exhaustively");
  app->add_option("--subset-cap", cfg.subset_cap, "Largest number of player subsets checked");
  app->add_option("--samples", cfg.samples, "Random codewords sampled when exhaustive search is over budget");
  app->add_option("--threads", cfg.threads, "Worker threads (0: all cores)");
}

void add_output_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--format", cfg.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_option("--output,-o", cfg.output, "Write to this file instead of standard output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secret sharing from toric codes", "toricss"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* params = app.add_subcommand("params", "Thresholds of a scheme, with closed-form predictions");
  add_field_options(params, cfg);
  add_family_options(params, cfg);
  add_budget_options(params, cfg);
  add_output_options(params, cfg);

  std::int64_t secret = 0;
  bool omit_secret = false;
  auto* deal = app.add_subcommand("deal", "Deal shares of a secret to a JSON file");
  add_field_options(deal, cfg);
  add_family_options(deal, cfg);
  add_budget_options(deal, cfg);
  add_output_options(deal, cfg);
  deal->add_option("--secret", secret, "Secret as a canonical integer")->required();
  deal->add_flag("--omit-secret", omit_secret, "Do not record the secret in the shares file");

  std::string shares_path, players;
  bool all_players = false;
  auto* recon = app.add_subcommand("reconstruct", "Recover the secret from a subset of shares");
  recon->add_option("--shares", shares_path, "Shares file written by deal")->required();
  recon->add_option("--players", players, "Comma-separated share indices");
  recon->add_flag("--all", all_players, "Use every share in the file");
  add_output_options(recon, cfg);

  std::int64_t s1 = 0, s2 = 0;
  std::string remove;
  bool force = false;
  auto* mpc = app.add_subcommand("mpc-demo", "Multiply two shared secrets with some players removed");
  add_field_options(mpc, cfg);
  add_family_options(mpc, cfg);
  add_budget_options(mpc, cfg);
  add_output_options(mpc, cfg);
  mpc->add_option("--s", s1, "First secret")->required();
  mpc->add_option("--s-tilde", s2, "Second secret")->required();
  mpc->add_option("--remove", remove, "Comma-separated player indices to drop");
  mpc->add_flag("--force", force, "Skip the strong-multiplication precheck");

  std::string q_range;
  bool all_valid = false;
  auto* verify = app.add_subcommand("verify", "Compare closed-form predictions against exact computation");
  verify->add_option("--q", q_range, "Field sizes: 5, 4,5,7 or 5..9")->required();
  add_family_options(verify, cfg);
  add_budget_options(verify, cfg);
  add_output_options(verify, cfg);
  verify->add_flag("--all-valid-dims", all_valid, "Every parameter choice the formulas cover");

  auto* table = app.add_subcommand("table", "Tabulate closed-form predictions as CSV");
  table->add_option("--q", q_range, "Field sizes: 5, 4,5,7 or 5..9")->required();
  table->add_option("--family", cfg.family, "hirzebruch | trapezoid");
  table->add_option("--output,-o", cfg.output, "Write to this file instead of standard output");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (params->parsed()) return cmd_params(cfg, out);
    if (deal->parsed()) return cmd_deal(cfg, secret, omit_secret, out);
    if (recon->parsed()) return cmd_reconstruct(cfg, shares_path, players, all_players, out);
    if (mpc->parsed()) return cmd_mpc_demo(cfg, s1, s2, remove, force, out, err);
    if (verify->parsed()) {
      if (cfg.format == "text" && verify->count("--format") == 0) cfg.format = "csv";
      return cmd_verify(cfg, q_range, all_valid, out, err);
    }
    if (table->parsed()) return cmd_table(cfg, q_range, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return (e.code() == ErrorCode::UnqualifiedSet || e.code() == ErrorCode::ProductNotDetermined) ? kProtocol : kUsage;
  }
  return kUsage;
}

}  // namespace toricss::cli
