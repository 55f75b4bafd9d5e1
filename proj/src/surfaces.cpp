#include "toricss/surfaces.hpp"

#include <algorithm>

#include "toricss/error.hpp"

namespace toricss::surfaces {

std::string claim_name(Claim c) {
  switch (c) {
    case Claim::Exact: return "exact";
    case Claim::UpperBound: return "upper-bound";
    case Claim::LowerBound: return "lower-bound";
  }
  return "exact";
}

std::string status_name(Status s) {
  switch (s) {
    case Status::Matches: return "MATCHES";
    case Status::WithinBound: return "WITHIN-BOUND";
    case Status::Violation: return "VIOLATION";
    case Status::Skipped: return "SKIPPED";
    case Status::NoClaim: return "NO-CLAIM";
  }
  return "SKIPPED";
}

FamilyParams hirzebruch_params(std::int64_t q, std::int64_t d, std::int64_t e, std::int64_t twist) {
  if (d < 1 || e < 1 || twist < 1) throw Error(ErrorCode::ConstraintViolated, "d, e and twist must be positive");
  if (d > q - 2 || e > q - 2 || e + twist * d > q - 2)
    throw Error(ErrorCode::ConstraintViolated, "need d <= q-2, e <= q-2 and e + twist*d <= q-2");
  FamilyParams fp;
  fp.family = lattice::Hirzebruch{d, e, twist};
  fp.q = q;
  fp.count_u = (d + 1) * (e + 1) + twist * d * (d + 1) / 2;
  const std::int64_t zeros = std::max(d * (q - 1) + (q - 1 - d) * e, (q - 1) * (e + d * twist));
  fp.max_zeros = {zeros, Claim::Exact};
  fp.r_threshold = {1 + zeros, Claim::Exact};
  return fp;
}

FamilyParams trapezoid_params(std::int64_t q, std::int64_t a, std::int64_t b) {
  if (q < 3 || b < 0 || b > a || a > q - 2) throw Error(ErrorCode::ConstraintViolated, "need 0 <= b <= a <= q-2");
  FamilyParams fp;
  fp.family = lattice::Trapezoid{a, b, q};
  fp.q = q;
  const std::int64_t zeros = (q - 1) * (q - 1) - (q - 1 - a);
  fp.max_zeros = {zeros, Claim::UpperBound};
  fp.r_threshold = {1 + zeros, Claim::UpperBound};
  if (b - 1 >= 0) fp.t_threshold = Predicted{b - 1, Claim::LowerBound};
  if (2 * a <= q - 2) {
    const std::int64_t strong = std::min(b - 1, (q - 2 - 2 * a) - 1);
    if (strong >= 0) fp.strong_t = Predicted{strong, Claim::LowerBound};
  }
  return fp;
}

FamilyParams family_params(std::int64_t q, const lattice::PolytopeFamily& family) {
  if (const auto* h = std::get_if<lattice::Hirzebruch>(&family)) return hirzebruch_params(q, h->d, h->e, h->twist);
  if (const auto* t = std::get_if<lattice::Trapezoid>(&family)) {
    if (t->q != q) throw Error(ErrorCode::ConstraintViolated, "trapezoid height parameter differs from the field size");
    return trapezoid_params(q, t->a, t->b);
  }
  throw Error(ErrorCode::ConstraintViolated, "no closed-form parameters for the " + lattice::family_name(family) + " family");
}

std::vector<lattice::PolytopeFamily> valid_hirzebruch(std::int64_t q) {
  std::vector<lattice::PolytopeFamily> out;
  for (std::int64_t d = 1; d <= q - 2; ++d)
    for (std::int64_t e = 1; e <= q - 2; ++e)
      for (std::int64_t twist = 1; e + twist * d <= q - 2; ++twist) out.emplace_back(lattice::Hirzebruch{d, e, twist});
  return out;
}

std::vector<lattice::PolytopeFamily> valid_trapezoids(std::int64_t q) {
  std::vector<lattice::PolytopeFamily> out;
  for (std::int64_t a = 0; a <= q - 2; ++a)
    for (std::int64_t b = 0; b <= a; ++b) out.emplace_back(lattice::Trapezoid{a, b, q});
  return out;
}

std::vector<std::pair<std::string, std::int64_t>> family_parameters(const lattice::PolytopeFamily& family) {
  if (const auto* h = std::get_if<lattice::Hirzebruch>(&family)) return {{"d", h->d}, {"e", h->e}, {"twist", h->twist}};
  if (const auto* t = std::get_if<lattice::Trapezoid>(&family)) return {{"a", t->a}, {"b", t->b}};
  if (const auto* c = std::get_if<lattice::Hypercube>(&family))
    return {{"rank", static_cast<std::int64_t>(c->rank)}};
  return {};
}

namespace {

Status compare(const Predicted& p, std::int64_t measured) {
  switch (p.claim) {
    case Claim::Exact: return measured == p.value ? Status::Matches : Status::Violation;
    case Claim::UpperBound: return measured <= p.value ? Status::WithinBound : Status::Violation;
    case Claim::LowerBound: return measured >= p.value ? Status::WithinBound : Status::Violation;
  }
  return Status::Violation;
}

// nullopt when the subset budget does not allow the check.
template <typename F>
std::optional<bool> within_budget(F&& check) {
  try {
    return check();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded) return std::nullopt;
    throw;
  }
}

}  // namespace

ValidationReport validate_family(std::int64_t q, const lattice::PolytopeFamily& family, const ValidationBudget& budget) {
  ValidationReport rep;
  rep.family = family;
  rep.q = q;
  const FamilyParams fp = family_params(q, family);
  auto field = std::make_shared<const gf::GaloisField>(gf::GaloisField::of_order(static_cast<std::uint64_t>(q)));
  const auto points = lattice::family_points(family);

  std::optional<scheme::MasseyScheme> built;
  try {
    built.emplace(scheme::build_scheme(points, field, 2));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateScheme) throw;
  }
  if (!built) {
    rep.overall = Status::Skipped;
    rep.note = "degenerate scheme: no set of players can reconstruct";
    return rep;
  }
  const scheme::MasseyScheme& s = *built;
  scheme::VerifyBudget exhaustive_verify = budget.verify;
  exhaustive_verify.sample_count.reset();

  if (fp.count_u) {
    QuantityCheck c{"count_U", Predicted{*fp.count_u, Claim::Exact}, static_cast<std::int64_t>(points.size()), "exact"};
    c.status = compare(*c.predicted, *c.measured);
    rep.checks.push_back(c);
  }

  // Reconstruction threshold and max zeros. For full-torus toric codes the
  // two are tied: r = (max zeros) + 1, since any codeword can be moved by a
  // torus translation to be nonzero at P0.
  QuantityCheck zeros_check{"max_zeros", fp.max_zeros, std::nullopt, ""};
  QuantityCheck r_check{"r_threshold", fp.r_threshold, std::nullopt, ""};
  const auto zeros = code::max_zeros(s.code(), budget.search);
  if (zeros.exact) {
    zeros_check.measured = static_cast<std::int64_t>(zeros.value);
    zeros_check.measured_kind = "exact";
    zeros_check.status = compare(fp.max_zeros, *zeros_check.measured);
    r_check.measured = *zeros_check.measured + 1;
    r_check.measured_kind = "exact";
    r_check.status = compare(fp.r_threshold, *r_check.measured);
  } else {
    const auto lower = static_cast<std::int64_t>(zeros.value);
    zeros_check.measured = lower;
    zeros_check.measured_kind = "randomized-lower-bound";
    const auto all_qualified = within_budget([&] {
      return scheme::verify_reconstruction(s, static_cast<std::size_t>(std::max<std::int64_t>(0, fp.r_threshold.value)),
                                           exhaustive_verify);
    });
    std::optional<bool> some_unqualified;
    if (fp.r_threshold.claim == Claim::Exact && fp.r_threshold.value >= 1) {
      some_unqualified = within_budget([&] {
        return !scheme::verify_reconstruction(s, static_cast<std::size_t>(fp.r_threshold.value - 1), exhaustive_verify);
      });
    }
    if (lower > fp.max_zeros.value) {
      zeros_check.status = Status::Violation;
      r_check.status = Status::Violation;
      r_check.note = "a sampled codeword has more zeros than predicted";
    } else if (all_qualified && !*all_qualified) {
      r_check.status = Status::Violation;
      zeros_check.status = Status::Violation;
      r_check.note = "found an unqualified set at the predicted threshold";
    } else if (all_qualified && fp.r_threshold.claim == Claim::UpperBound) {
      r_check.measured = fp.r_threshold.value;
      r_check.measured_kind = "rank-verified";
      r_check.status = Status::WithinBound;
      zeros_check.status = Status::WithinBound;
      zeros_check.note = "implied by the rank-verified reconstruction bound";
    } else if (all_qualified && some_unqualified) {
      r_check.measured = fp.r_threshold.value;
      r_check.measured_kind = "rank-verified";
      r_check.status = *some_unqualified ? Status::Matches : Status::Violation;
      zeros_check.status = r_check.status;
    } else {
      zeros_check.status = Status::Skipped;
      r_check.status = Status::Skipped;
      r_check.note = "over budget";
    }
  }
  rep.checks.push_back(zeros_check);
  rep.checks.push_back(r_check);

  QuantityCheck t_check{"t_threshold", fp.t_threshold, std::nullopt, ""};
  const auto dual = code::dual_by_support(s.code());
  if (code::exhaustive_affordable(dual, budget.search)) {
    const auto dd = code::min_distance_exact(dual, budget.search);
    t_check.measured = static_cast<std::int64_t>(dd.value) - 2;
    t_check.measured_kind = "exact";
  }
  if (!fp.t_threshold) {
    t_check.status = Status::NoClaim;
  } else if (t_check.measured) {
    t_check.status = compare(*fp.t_threshold, *t_check.measured);
  } else {
    const auto ok = within_budget(
        [&] { return scheme::verify_privacy(s, static_cast<std::size_t>(fp.t_threshold->value), exhaustive_verify); });
    if (!ok) {
      t_check.status = Status::Skipped;
      t_check.note = "over budget";
    } else {
      t_check.measured = fp.t_threshold->value;
      t_check.measured_kind = "rank-verified";
      t_check.status = *ok ? Status::WithinBound : Status::Violation;
    }
  }
  rep.checks.push_back(t_check);

  QuantityCheck strong_check{"strong_t", fp.strong_t, std::nullopt, ""};
  if (!fp.strong_t) {
    strong_check.status = Status::NoClaim;
  } else {
    const auto ok = within_budget([&] {
      return scheme::has_strong_multiplication(s, static_cast<std::size_t>(fp.strong_t->value), exhaustive_verify);
    });
    if (!ok) {
      strong_check.status = Status::Skipped;
      strong_check.note = "over budget";
    } else {
      strong_check.measured = fp.strong_t->value;
      strong_check.measured_kind = "rank-verified";
      strong_check.status = *ok ? Status::WithinBound : Status::Violation;
    }
  }
  rep.checks.push_back(strong_check);

  bool any_violation = false, all_match = true, all_checked = true;
  for (const auto& c : rep.checks) {
    if (c.status == Status::NoClaim) continue;
    any_violation = any_violation || c.status == Status::Violation;
    all_match = all_match && c.status == Status::Matches;
    all_checked = all_checked && c.status != Status::Skipped;
  }
  rep.overall = any_violation ? Status::Violation
                : all_match   ? Status::Matches
                : all_checked ? Status::WithinBound
                              : Status::Skipped;
  return rep;
}

}  // namespace toricss::surfaces
