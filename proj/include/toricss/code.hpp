#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "toricss/gf.hpp"
#include "toricss/lattice.hpp"
#include "toricss/linalg.hpp"

namespace toricss::code {

using gf::Element;
using gf::GaloisField;
using lattice::Point;
using lattice::PointSet;

inline constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

// Torus points (g^i_1, ..., g^i_r) stored by their exponent tuples
// (i_1, ..., i_r), in lexicographic order.
struct TorusSupport {
  std::shared_ptr<const GaloisField> field;
  std::size_t rank = 0;
  std::vector<Point> points;
  // Position of P0 = (1, ..., 1), i.e. exponent tuple (0, ..., 0); kNoIndex
  // when a partial support leaves it out.
  std::size_t p0_index = kNoIndex;
  bool full = false;

  std::size_t size() const { return points.size(); }
};

TorusSupport torus_support(std::shared_ptr<const GaloisField> field, std::size_t rank,
                           std::size_t cap = lattice::kDefaultPointCap);

// A subset S of the torus, given by positions into a full support.
TorusSupport sub_support(const TorusSupport& full, std::span<const std::size_t> positions);

// X^u evaluated at the torus point with the given exponent tuple:
// g^(sum_j u_j * i_j mod (q-1)). Exponents may be negative or unreduced.
Element evaluate_monomial(const GaloisField& field, const Point& u, const Point& point_exponents);

// One row per element of u, exactly as given (no reduction mod q-1).
linalg::Matrix monomial_matrix(const PointSet& u, const TorusSupport& support);

// The toric code pi_S(F_q<U>).
struct EvalCode {
  TorusSupport support;
  PointSet exponents;     // U reduced mod q-1
  linalg::Matrix matrix;  // |U| x |S| generator (rows are monomials)
  std::size_t dimension = 0;

  const GaloisField& field() const { return *support.field; }
  std::size_t length() const { return support.size(); }
};

EvalCode evaluation_matrix(const PointSet& u, const TorusSupport& support);

enum class DistanceMethod { Exhaustive, RandomizedLowerBound };

std::string method_name(DistanceMethod m);

struct DistanceResult {
  std::size_t value = 0;
  bool exact = false;
  DistanceMethod method = DistanceMethod::Exhaustive;
};

struct SearchBudget {
  // Exhaustive enumeration is allowed when q^dimension <= exhaustive_cap.
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 26;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: hardware concurrency
};

bool exhaustive_affordable(const EvalCode& c, const SearchBudget& budget);

// Number of projective codewords (first nonzero message coordinate 1) with
// exactly z zeros, for z = 0..length. Throws BudgetExceeded when too large.
std::vector<std::uint64_t> projective_zero_histogram(const EvalCode& c, const SearchBudget& budget);

// Number of codewords of each Hamming weight 0..length (all q^k codewords).
std::vector<std::uint64_t> weight_distribution(const EvalCode& c, const SearchBudget& budget);

DistanceResult min_distance_exact(const EvalCode& c, const SearchBudget& budget);

// Maximum number of zeros of a nonzero codeword: exact when exhaustive search
// is affordable, otherwise the best value over budget.samples random codewords.
DistanceResult max_zeros(const EvalCode& c, const SearchBudget& budget);
DistanceResult max_zeros_random(const EvalCode& c, std::uint64_t samples, std::uint64_t seed);

// Dual code as the evaluation code of -H \ -U (full support only).
EvalCode dual_by_support(const EvalCode& c);

// Orthogonal complement computed directly as a nullspace.
linalg::Matrix dual_by_nullspace(const EvalCode& c);

}  // namespace toricss::code
