#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricss/code.hpp"
#include "toricss/lattice.hpp"
#include "toricss/scheme.hpp"

namespace toricss::surfaces {

enum class Claim { Exact, UpperBound, LowerBound };

std::string claim_name(Claim c);

struct Predicted {
  std::int64_t value = 0;
  Claim claim = Claim::Exact;
};

// Closed-form parameters for one member of a polytope family. A missing
// optional means the formulas make no claim (or only a vacuous one).
struct FamilyParams {
  lattice::PolytopeFamily family;
  std::int64_t q = 0;
  std::optional<std::int64_t> count_u;
  Predicted max_zeros;
  Predicted r_threshold;
  std::optional<Predicted> t_threshold;
  std::optional<Predicted> strong_t;
};

// Requires d, e, twist >= 1, d <= q-2, e <= q-2 and e + twist*d <= q-2.
FamilyParams hirzebruch_params(std::int64_t q, std::int64_t d, std::int64_t e, std::int64_t twist);

// Requires 0 <= b <= a <= q-2.
FamilyParams trapezoid_params(std::int64_t q, std::int64_t a, std::int64_t b);

FamilyParams family_params(std::int64_t q, const lattice::PolytopeFamily& family);

// Every parameter choice for which the formulas apply at this q.
std::vector<lattice::PolytopeFamily> valid_hirzebruch(std::int64_t q);
std::vector<lattice::PolytopeFamily> valid_trapezoids(std::int64_t q);

enum class Status { Matches, WithinBound, Violation, Skipped, NoClaim };

std::string status_name(Status s);

struct QuantityCheck {
  std::string quantity;
  std::optional<Predicted> predicted;
  std::optional<std::int64_t> measured;
  std::string measured_kind;  // "exact", "randomized-lower-bound", "rank-verified", ""
  Status status = Status::Skipped;
  std::string note;
};

struct ValidationReport {
  lattice::PolytopeFamily family;
  std::int64_t q = 0;
  std::vector<QuantityCheck> checks;
  Status overall = Status::Skipped;
  std::string note;

  bool has_violation() const { return overall == Status::Violation; }
};

struct ValidationBudget {
  code::SearchBudget search;
  scheme::VerifyBudget verify;
};

// Builds the scheme and compares every predicted quantity against exhaustive
// or rank-based measurements where the budgets allow.
ValidationReport validate_family(std::int64_t q, const lattice::PolytopeFamily& family, const ValidationBudget& budget);

// Parameters of the family member as (name, value) pairs, for table output.
std::vector<std::pair<std::string, std::int64_t>> family_parameters(const lattice::PolytopeFamily& family);

}  // namespace toricss::surfaces
