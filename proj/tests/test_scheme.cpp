#include "toricss/scheme.hpp"

#include <cmath>
#include <map>

#include "doctest.h"
#include "oracle.hpp"
#include "toricss/error.hpp"
#include "toricss/rng.hpp"

using toricss::Error;
using toricss::ErrorCode;
using toricss::gf::Element;
using toricss::gf::GaloisField;
using toricss::lattice::Point;
using toricss::lattice::PointSet;
using namespace toricss::scheme;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::MalformedInput;
}

std::shared_ptr<const GaloisField> field(std::uint64_t q) {
  return std::make_shared<const GaloisField>(GaloisField::of_order(q));
}

oracle::NaiveField naive(const GaloisField& f) {
  return oracle::NaiveField(f.p(), f.k(), oracle::Vec(f.spec().modulus.begin(), f.spec().modulus.end()));
}

oracle::Grid grid(const toricss::linalg::Matrix& m) {
  oracle::Grid g(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) g[r].assign(m.row(r).begin(), m.row(r).end());
  return g;
}

MasseyScheme scheme_for(const PointSet& u, std::uint64_t q) { return build_scheme(u, field(q), u.rank()); }

MasseyScheme hirzebruch111() {
  return scheme_for(toricss::lattice::family_points(toricss::lattice::Hirzebruch{1, 1, 1}), 5);
}

MasseyScheme trapezoid(std::int64_t a, std::int64_t b, std::int64_t q) {
  return scheme_for(toricss::lattice::family_points(toricss::lattice::Trapezoid{a, b, q}), q);
}

std::vector<std::size_t> all_players(const MasseyScheme& s) {
  std::vector<std::size_t> out(s.n());
  for (std::size_t i = 0; i < s.n(); ++i) out[i] = i;
  return out;
}

std::vector<std::size_t> mask_players(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1u) out.push_back(i);
  return out;
}

std::vector<Element> restrict_shares(const ShareVector& sv, const std::vector<std::size_t>& players) {
  std::vector<Element> out;
  for (auto p : players) out.push_back(sv.shares[p]);
  return out;
}

}  // namespace

TEST_CASE("building schemes") {
  const auto constants = scheme_for(PointSet(2, {{0, 0}}), 5);
  CHECK(constants.n() == 15);
  CHECK(constants.k() == 1);
  CHECK(constants.p0() == 0);
  CHECK(constants.player_point(0) == Point{0, 1});

  const auto hirz = hirzebruch111();
  CHECK(hirz.n() == 15);
  CHECK(hirz.k() == 5);
  CHECK(hirz.code().matrix.column(hirz.p0()) == std::vector<Element>(5, 1));

  CHECK(code_of([] { (void)scheme_for(toricss::lattice::hypercube(4, 2), 4); }) == ErrorCode::DegenerateScheme);
  CHECK(code_of([] { (void)scheme_for(PointSet(2), 4); }) == ErrorCode::InvalidCode);

  // Unreduced exponents are reduced.
  const auto shifted = scheme_for(PointSet(2, {{4, 0}, {1, 5}}), 5);
  CHECK(shifted.exponents() == PointSet(2, {{0, 0}, {1, 1}}));
}

TEST_CASE("dealing") {
  const auto constants = scheme_for(PointSet(2, {{0, 0}}), 5);
  const auto sv = deal(constants, 3, 1);
  CHECK(sv.secret == 3);
  CHECK(sv.shares == std::vector<Element>(15, 3));

  const auto hirz = hirzebruch111();
  const std::vector<Element> zero(5, 0);
  const auto zero_deal = evaluate_dealer(hirz, zero);
  CHECK(zero_deal.secret == 0);
  CHECK(zero_deal.shares == std::vector<Element>(15, 0));

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto d = deal(hirz, static_cast<Element>(seed % 5), seed);
    REQUIRE(d.dealer_witness);
    const auto again = evaluate_dealer(hirz, *d.dealer_witness);
    CHECK(again.secret == d.secret);
    CHECK(again.shares == d.shares);
    CHECK(d.secret == seed % 5);
  }
  CHECK(deal(hirz, 2, 9).shares == deal(hirz, 2, 9).shares);
  CHECK(deal(hirz, 2, 9).shares != deal(hirz, 2, 10).shares);
}

TEST_CASE("dealt shares follow the exact distribution") {
  const auto hirz = hirzebruch111();
  const auto nf = naive(hirz.field());
  const auto rows = grid(hirz.code().matrix);
  // Exact distribution: all 5^4 polynomials with f(P0) = 1.
  std::vector<std::vector<double>> exact(hirz.n(), std::vector<double>(5, 0.0));
  std::size_t admissible = 0;
  oracle::for_each_codeword(nf, rows, 16, [&](const oracle::Vec&, const oracle::Vec& w) {
    if (w[0] != 1) return;
    ++admissible;
    for (std::size_t p = 0; p < hirz.n(); ++p) exact[p][w[p + 1]] += 1.0;
  });
  REQUIRE(admissible == 625);

  const int trials = 10000;
  std::vector<std::vector<int>> seen(hirz.n(), std::vector<int>(5, 0));
  for (int i = 0; i < trials; ++i) {
    const auto sv = deal(hirz, 1, 1000 + i);
    for (std::size_t p = 0; p < hirz.n(); ++p) ++seen[p][sv.shares[p]];
  }
  for (std::size_t p = 0; p < hirz.n(); ++p)
    for (Element v = 0; v < 5; ++v) {
      const double prob = exact[p][v] / admissible;
      const double mean = trials * prob;
      const double sigma = std::sqrt(trials * prob * (1 - prob));
      CAPTURE(p);
      CAPTURE(v);
      CHECK(std::abs(seen[p][v] - mean) <= 5 * sigma + 1e-9);
    }
}

TEST_CASE("qualified sets and reconstruction") {
  const auto constants = scheme_for(PointSet(2, {{0, 0}}), 5);
  CHECK_FALSE(is_qualified(constants, std::vector<std::size_t>{}).qualified);
  for (std::size_t p = 0; p < constants.n(); ++p) {
    const std::vector<std::size_t> one{p};
    const std::vector<Element> share{4};
    CHECK(reconstruct(constants, one, share) == 4);
  }

  const auto hirz = hirzebruch111();
  const auto everyone = all_players(hirz);
  const auto q_all = is_qualified(hirz, everyone);
  REQUIRE(q_all.qualified);
  REQUIRE(q_all.recon_coeffs);
  // The coefficients combine the player columns into the P0 column.
  const auto& f = hirz.field();
  for (std::size_t r = 0; r < hirz.code().matrix.rows(); ++r) {
    Element s = 0;
    for (std::size_t i = 0; i < everyone.size(); ++i)
      s = f.add(s, f.mul((*q_all.recon_coeffs)[i], hirz.code().matrix.at(r, hirz.player_ids()[i])));
    CHECK(s == hirz.code().matrix.at(r, hirz.p0()));
  }

  toricss::CounterRng rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const Element secret = static_cast<Element>(rng.below(5));
    const auto sv = deal(hirz, secret, 5000 + trial);
    std::vector<std::size_t> pool = everyone;
    for (std::size_t i = 0; i < pool.size(); ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    const std::size_t size = 9 + rng.below(7);  // r = 9, so every such set is qualified
    std::vector<std::size_t> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::ranges::sort(chosen);
    REQUIRE(reconstruct(hirz, chosen, restrict_shares(sv, chosen)) == secret);
  }

  const std::vector<std::size_t> few{0, 1};
  const std::vector<Element> vals{1, 2};
  CHECK(code_of([&] { (void)reconstruct(hirz, few, vals); }) == ErrorCode::UnqualifiedSet);
  CHECK(code_of([&] { (void)reconstruct(hirz, std::vector<std::size_t>{}, std::vector<Element>{}); }) ==
        ErrorCode::UnqualifiedSet);
}

TEST_CASE("reconstruction does not depend on the dealer") {
  const auto hirz = hirzebruch111();
  const std::vector<std::size_t> set{0, 2, 3, 5, 7, 8, 10, 12, 14, 1};
  std::vector<std::size_t> sorted = set;
  std::ranges::sort(sorted);
  REQUIRE(is_qualified(hirz, sorted).qualified);
  for (Element s = 0; s < 5; ++s) {
    const auto a = deal(hirz, s, 1), b = deal(hirz, s, 2);
    CHECK(a.shares != b.shares);
    CHECK(reconstruct(hirz, sorted, restrict_shares(a, sorted)) == reconstruct(hirz, sorted, restrict_shares(b, sorted)));
  }
}

TEST_CASE("linearity of dealing") {
  const auto hirz = hirzebruch111();
  const auto& f = hirz.field();
  const auto a = deal(hirz, 2, 77), b = deal(hirz, 4, 78);
  for (Element lambda = 0; lambda < 5; ++lambda) {
    std::vector<Element> coeffs(a.dealer_witness->size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      coeffs[i] = f.add((*a.dealer_witness)[i], f.mul(lambda, (*b.dealer_witness)[i]));
    const auto combined = evaluate_dealer(hirz, coeffs);
    CHECK(combined.secret == f.add(a.secret, f.mul(lambda, b.secret)));
    for (std::size_t p = 0; p < hirz.n(); ++p) CHECK(combined.shares[p] == f.add(a.shares[p], f.mul(lambda, b.shares[p])));
  }
}

TEST_CASE("subset classification at q = 4 against brute force") {
  const std::vector<PointSet> sets{
      PointSet(2, {{0, 0}, {1, 0}, {0, 1}}),
      PointSet(2, {{0, 0}}),
      PointSet(2, {{0, 0}, {1, 1}}),
      PointSet(2, {{0, 1}, {2, 2}, {1, 0}, {2, 0}}),
  };
  const toricss::code::SearchBudget search;
  for (const auto& u : sets) {
    const auto s = scheme_for(u, 4);
    const auto nf = naive(s.field());
    const auto oracle_q = oracle::qualified_masks(nf, grid(s.code().matrix), 9, 0);
    std::vector<bool> lib(256);
    for (std::uint32_t mask = 0; mask < 256; ++mask) {
      lib[mask] = is_qualified(s, mask_players(mask, 8)).qualified;
      REQUIRE(lib[mask] == oracle_q[mask]);
    }
    // Monotone in both directions.
    for (std::uint32_t mask = 0; mask < 256; ++mask)
      for (std::size_t i = 0; i < 8; ++i) {
        const std::uint32_t bigger = mask | (1u << i);
        if (lib[mask]) CHECK(lib[bigger]);
        if (!lib[bigger]) CHECK_FALSE(lib[mask]);
      }
    // Thresholds from the classification against the code distances.
    std::size_t r = 9, t = 0;
    for (std::size_t size = 0; size <= 8; ++size) {
      bool all_q = true, none_q = true;
      for (std::uint32_t mask = 0; mask < 256; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
        all_q = all_q && lib[mask];
        none_q = none_q && !lib[mask];
      }
      if (all_q && r == 9) r = size;
      if (none_q) t = size;
    }
    const auto rep = thresholds(s, search, VerifyBudget{});
    CHECK(rep.r_threshold.provenance == Provenance::Exact);
    CHECK(rep.r_threshold.value == static_cast<std::int64_t>(r));
    CHECK(rep.t_threshold.value == static_cast<std::int64_t>(t));
    CHECK(rep.r_threshold.value == static_cast<std::int64_t>(rep.n) - static_cast<std::int64_t>(rep.d.value) + 2);
    CHECK(rep.t_threshold.value == static_cast<std::int64_t>(rep.d_dual.value) - 2);
    CHECK(verify_reconstruction(s, r, VerifyBudget{}));
    if (r > 0) CHECK_FALSE(verify_reconstruction(s, r - 1, VerifyBudget{}));
    CHECK(verify_privacy(s, t, VerifyBudget{}));
    CHECK_FALSE(verify_privacy(s, t + 1, VerifyBudget{}));
  }
}

TEST_CASE("thresholds of the reference instances") {
  const toricss::code::SearchBudget search;
  const auto constants = thresholds(scheme_for(PointSet(2, {{0, 0}}), 5), search, VerifyBudget{});
  CHECK(constants.d.value == 16);
  CHECK(constants.d_dual.value == 2);
  CHECK(constants.r_threshold.value == 1);
  CHECK(constants.t_threshold.value == 0);

  const auto hirz = thresholds(hirzebruch111(), search, VerifyBudget{});
  CHECK(hirz.n == 15);
  CHECK(hirz.k == 5);
  CHECK(hirz.r_threshold.value == 9);
  CHECK(hirz.r_threshold.relation == Relation::Equal);

  const auto trap = thresholds(trapezoid(1, 1, 5), search, VerifyBudget{});
  CHECK(trap.d.exact);
  CHECK(trap.d_dual.exact);
  CHECK(trap.r_threshold.value <= 14);
  CHECK(trap.t_threshold.value >= 0);
  CHECK(trap.r_threshold.value == static_cast<std::int64_t>(trap.n - trap.d.value + 2));
  CHECK(trap.t_threshold.value == static_cast<std::int64_t>(trap.d_dual.value) - 2);
  REQUIRE(trap.strong_t);
  CHECK(trap.strong_t->value >= 0);
}

TEST_CASE("privacy and reconstruction checks") {
  const auto constants = scheme_for(PointSet(2, {{0, 0}}), 5);
  CHECK(verify_privacy(constants, 0, VerifyBudget{}));
  CHECK_FALSE(verify_privacy(constants, 1, VerifyBudget{}));
  CHECK(verify_reconstruction(constants, 1, VerifyBudget{}));

  CHECK(verify_reconstruction(trapezoid(1, 1, 5), 14, VerifyBudget{}));
  CHECK(verify_privacy(trapezoid(2, 2, 8), 1, VerifyBudget{}));

  VerifyBudget small;
  small.max_subsets = 10;
  CHECK(code_of([&] { (void)verify_privacy(trapezoid(2, 2, 8), 2, small); }) == ErrorCode::BudgetExceeded);
  small.sample_count = 200;
  CHECK(verify_privacy(trapezoid(2, 2, 8), 1, small));
}

TEST_CASE("strong multiplication") {
  const auto constants = scheme_for(PointSet(2, {{0, 0}}), 5);
  const toricss::code::SearchBudget search;
  for (std::size_t t = 0; t < constants.n(); ++t) CHECK(strong_mult_bound_check(constants, t, search) == Verdict::True);
  CHECK(strong_mult_bound_check(constants, constants.n(), search) == Verdict::False);

  const auto trap5 = trapezoid(1, 1, 5);
  CHECK(trap5.product_code().exponents.size() == 12);
  CHECK(strong_mult_bound_check(trap5, 0, search) == Verdict::Unknown);
  CHECK(strong_mult_direct_check(trap5, 0, VerifyBudget{}));
  CHECK(has_strong_multiplication(trap5, 0, VerifyBudget{}));

  const auto trap8 = trapezoid(2, 2, 8);
  CHECK(trap8.n() == 48);
  CHECK(trap8.exponents().size() == 21);
  CHECK(trap8.product_code().exponents.size() == 35);
  CHECK(trap8.product_code().dimension == 35);
  CHECK(strong_mult_direct_check(trap8, 0, VerifyBudget{}));
  CHECK(strong_mult_direct_check(trap8, 1, VerifyBudget{}));
  CHECK_FALSE(strong_mult_direct_check(trap8, 3, VerifyBudget{}));
  CHECK(has_strong_multiplication(trap8, 1, VerifyBudget{}));
  CHECK_FALSE(has_strong_multiplication(trap8, 2, VerifyBudget{}));

  const auto rep = thresholds(trap8, search, VerifyBudget{});
  REQUIRE(rep.strong_t);
  CHECK(rep.strong_t->value == 1);
  CHECK(rep.strong_t->relation == Relation::Equal);
  // Every set of 45 or more players is checked; smaller sizes are over budget.
  CHECK(rep.r_threshold.relation == Relation::AtMost);
  CHECK(rep.r_threshold.provenance == Provenance::VerifiedBound);
  CHECK(rep.r_threshold.value == 45);
  CHECK(rep.t_threshold.value >= 1);
}

TEST_CASE("strong multiplication bound check with an exhaustive product code") {
  // U + U of the (1,1) trapezoid at q = 5 is 12-dimensional: 5^12 codewords.
  toricss::code::SearchBudget raised;
  raised.exhaustive_cap = 250'000'000;
  const auto trap5 = trapezoid(1, 1, 5);
  const auto zeros = toricss::code::max_zeros(trap5.product_code(), raised);
  CHECK(zeros.exact);
  CHECK(zeros.value <= 14);
  CHECK(strong_mult_bound_check(trap5, 0, raised) == Verdict::True);
}

TEST_CASE("products of secrets") {
  const auto constants = scheme_for(PointSet(2, {{0, 0}}), 5);
  const auto a = deal(constants, 3, 1), b = deal(constants, 4, 2);
  const std::vector<std::size_t> one{7};
  CHECK(multiply_and_reconstruct(constants, a.shares, b.shares, one) == 2);

  const auto trap8 = trapezoid(2, 2, 8);
  const auto& f = trap8.field();
  toricss::CounterRng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const Element s1 = static_cast<Element>(rng.below(8)), s2 = static_cast<Element>(rng.below(8));
    const auto x = deal(trap8, s1, 100 + trial), y = deal(trap8, s2, 200 + trial);
    const std::size_t removed = rng.below(48);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < 48; ++i)
      if (i != removed) rest.push_back(i);
    CHECK(multiply_and_reconstruct(trap8, x.shares, y.shares, rest) == f.mul(s1, s2));
  }
  // 3 * 5 in GF(8) is x^2 = 4.
  const auto x = deal(trap8, 3, 5), y = deal(trap8, 5, 6);
  CHECK(multiply_and_reconstruct(trap8, x.shares, y.shares, all_players(trap8)) == 4);

  std::vector<std::size_t> too_few(20);
  for (std::size_t i = 0; i < 20; ++i) too_few[i] = i;
  CHECK(code_of([&] { (void)multiply_and_reconstruct(trap8, x.shares, y.shares, too_few); }) ==
        ErrorCode::ProductNotDetermined);
}
