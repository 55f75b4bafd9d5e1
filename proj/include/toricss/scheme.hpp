#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toricss/code.hpp"

namespace toricss::scheme {

using code::Element;
using code::GaloisField;
using code::PointSet;

// Players are numbered 0..n-1 in torus order, skipping P0.
using PlayerSet = std::vector<std::size_t>;

// The Massey scheme M(U) on the full torus with P0 = (1, ..., 1): the secret
// is f(P0) and the shares are f(P) at the remaining torus points.
class MasseyScheme {
 public:
  const code::EvalCode& code() const { return code_; }
  // The code of the reduced Minkowski sum U + U, which houses products of
  // two dealer polynomials.
  const code::EvalCode& product_code() const { return product_code_; }
  const linalg::Matrix& generator() const { return generator_; }

  const GaloisField& field() const { return code_.field(); }
  std::shared_ptr<const GaloisField> field_ptr() const { return code_.support.field; }
  const PointSet& exponents() const { return code_.exponents; }
  std::size_t rank() const { return code_.support.rank; }

  std::size_t n() const { return player_ids_.size(); }
  std::size_t k() const { return code_.dimension; }
  std::size_t p0() const { return code_.support.p0_index; }
  // Support position of each player.
  const std::vector<std::size_t>& player_ids() const { return player_ids_; }
  const code::Point& player_point(std::size_t player) const { return code_.support.points[player_ids_.at(player)]; }

 private:
  friend MasseyScheme build_scheme(const PointSet&, std::shared_ptr<const GaloisField>, std::size_t);

  code::EvalCode code_;
  code::EvalCode product_code_;
  linalg::Matrix generator_;  // row basis of code_.matrix
  std::vector<std::size_t> player_ids_;
};

MasseyScheme build_scheme(const PointSet& u, std::shared_ptr<const GaloisField> field, std::size_t rank);

struct ShareVector {
  Element secret = 0;
  std::vector<Element> shares;  // indexed by player
  // Coefficients of the dealer polynomial over the reduced exponent set.
  std::optional<std::vector<Element>> dealer_witness;
};

// Uniform f in F_q<U> with f(P0) = secret, drawn from a seeded counter RNG.
ShareVector deal(const MasseyScheme& scheme, Element secret, std::uint64_t seed);

// Shares of the polynomial with the given coefficients.
ShareVector evaluate_dealer(const MasseyScheme& scheme, std::span<const Element> coefficients);

struct Qualification {
  bool qualified = false;
  // c with sum_{P in A} c_P * column_P = column_P0, aligned with the queried set.
  std::optional<std::vector<Element>> recon_coeffs;
};

Qualification is_qualified(const MasseyScheme& scheme, std::span<const std::size_t> players);

// shares[i] belongs to players[i]. Throws UnqualifiedSet.
Element reconstruct(const MasseyScheme& scheme, std::span<const std::size_t> players,
                    std::span<const Element> shares);

struct VerifyBudget {
  std::uint64_t max_subsets = std::uint64_t{1} << 16;
  // When set and the subset count exceeds max_subsets, check this many
  // random subsets instead of failing with BudgetExceeded.
  std::optional<std::uint64_t> sample_count;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

// Every set of t players is unqualified.
bool verify_privacy(const MasseyScheme& scheme, std::size_t t, const VerifyBudget& budget);
// Every set of r players is qualified.
bool verify_reconstruction(const MasseyScheme& scheme, std::size_t r, const VerifyBudget& budget);

enum class Verdict { True, False, Unknown };

std::string verdict_name(Verdict v);

// Sufficient condition t <= n - 1 - (max zeros over F_q<U+U>).
Verdict strong_mult_bound_check(const MasseyScheme& scheme, std::size_t t, const code::SearchBudget& budget);

// For every t-set A removed, the product code restricted to the remaining
// players is injective and reaches the P0 column.
bool strong_mult_direct_check(const MasseyScheme& scheme, std::size_t t, const VerifyBudget& budget);

// t-privacy together with the direct multiplication check.
bool has_strong_multiplication(const MasseyScheme& scheme, std::size_t t, const VerifyBudget& budget);

// Recovers s * s~ from the pointwise share products of the players in b.
// Throws ProductNotDetermined.
Element multiply_and_reconstruct(const MasseyScheme& scheme, std::span<const Element> shares1,
                                 std::span<const Element> shares2, std::span<const std::size_t> b);

enum class Provenance { Exact, PaperBound, RandomizedBound, VerifiedBound };
enum class Relation { Equal, AtLeast, AtMost };

std::string provenance_name(Provenance p);
std::string relation_name(Relation r);

struct Quantity {
  std::int64_t value = 0;
  Relation relation = Relation::Equal;
  Provenance provenance = Provenance::Exact;
};

struct SchemeReport {
  std::size_t n = 0;
  std::size_t k = 0;
  // Upper bound on d when not exhaustive (derived from a max-zeros sample).
  code::DistanceResult d;
  code::DistanceResult d_dual;
  Quantity r_threshold;
  Quantity t_threshold;
  // nullopt: no multiplication at all (vacuous).
  std::optional<Quantity> strong_t;
};

SchemeReport thresholds(const MasseyScheme& scheme, const code::SearchBudget& search, const VerifyBudget& verify);

}  // namespace toricss::scheme
