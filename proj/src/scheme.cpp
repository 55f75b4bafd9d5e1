#include "toricss/scheme.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

#include "toricss/error.hpp"
#include "toricss/rng.hpp"
#include "toricss/subsets.hpp"

namespace toricss::scheme {

namespace {

using SubsetPredicate = std::function<bool(const std::vector<std::size_t>&)>;

// True iff pred holds on every size-k subset of {0..n-1}, or on
// budget.sample_count random ones when the full enumeration is over budget.
bool for_all_subsets(std::size_t n, std::size_t k, const VerifyBudget& budget, const SubsetPredicate& pred) {
  const std::uint64_t total = binomial(n, k);
  if (total == 0) return true;
  if (total > budget.max_subsets) {
    if (!budget.sample_count)
      throw Error(ErrorCode::BudgetExceeded, "C(" + std::to_string(n) + "," + std::to_string(k) +
                                                 ") subsets exceed the subset budget");
    CounterRng rng(budget.seed, 0x5B5E7);
    std::vector<std::size_t> pool(n);
    for (std::uint64_t s = 0; s < *budget.sample_count; ++s) {
      std::iota(pool.begin(), pool.end(), std::size_t{0});
      for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
      std::vector<std::size_t> subset(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
      std::ranges::sort(subset);
      if (!pred(subset)) return false;
    }
    return true;
  }

  unsigned workers = budget.threads ? budget.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, (total + 63) / 64));
  std::atomic<bool> ok{true};
  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    if (begin >= end) return;
    auto subset = unrank_combination(n, k, begin);
    for (std::uint64_t i = begin; i < end && ok.load(std::memory_order_relaxed); ++i) {
      if (!pred(subset)) {
        ok = false;
        return;
      }
      next_combination(subset, n);
    }
  };
  if (workers <= 1) {
    run_range(0, total);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t step = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_range, w * step, std::min(total, (w + 1) * step));
  }
  return ok;
}

std::vector<std::size_t> support_columns(const MasseyScheme& scheme, std::span<const std::size_t> players) {
  std::vector<std::size_t> cols;
  cols.reserve(players.size());
  for (auto p : players) {
    if (p >= scheme.n()) throw Error(ErrorCode::MalformedInput, "player index " + std::to_string(p) + " out of range");
    cols.push_back(scheme.player_ids()[p]);
  }
  return cols;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& sorted_subset) {
  std::vector<std::size_t> out;
  out.reserve(n - sorted_subset.size());
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (j < sorted_subset.size() && sorted_subset[j] == i) {
      ++j;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

// The product-code coefficients c over the players in b, or nullopt when the
// evaluation at b is not injective on F_q<V> or cannot reach the P0 column.
std::optional<std::vector<Element>> product_recombination(const MasseyScheme& scheme,
                                                          std::span<const std::size_t> b) {
  const auto& v = scheme.product_code();
  const auto cols = support_columns(scheme, b);
  const linalg::Matrix restricted = v.matrix.select_columns(cols);
  if (linalg::rank(restricted, scheme.field()) != v.matrix.rows()) return std::nullopt;
  const auto target = v.matrix.column(scheme.p0());
  return linalg::solve(restricted, target, scheme.field());
}

}  // namespace

MasseyScheme build_scheme(const PointSet& u, std::shared_ptr<const GaloisField> field, std::size_t rank) {
  if (u.empty()) throw Error(ErrorCode::InvalidCode, "exponent set is empty");
  if (u.rank() != rank) throw Error(ErrorCode::RankMismatch, "exponent set rank differs from torus rank");
  const auto support = code::torus_support(std::move(field), rank);

  MasseyScheme s;
  s.code_ = code::evaluation_matrix(u, support);
  s.generator_ = linalg::row_basis(s.code_.matrix, s.field());
  for (std::size_t i = 0; i < support.size(); ++i)
    if (i != support.p0_index) s.player_ids_.push_back(i);

  const auto target = s.generator_.column(s.p0());
  if (!linalg::solve(s.generator_.select_columns(s.player_ids_), target, s.field()))
    throw Error(ErrorCode::DegenerateScheme, "the P0 column is outside the span of the player columns");

  const auto q = s.field().q();
  s.product_code_ = code::evaluation_matrix(lattice::reduce_mod(lattice::minkowski_sum(s.code_.exponents, s.code_.exponents), q),
                                            support);
  return s;
}

ShareVector evaluate_dealer(const MasseyScheme& scheme, std::span<const Element> coefficients) {
  const auto& m = scheme.code().matrix;
  if (coefficients.size() != m.rows()) throw Error(ErrorCode::MalformedInput, "coefficient count differs from |U|");
  const auto& field = scheme.field();
  std::vector<Element> word(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (coefficients[r] == 0) continue;
    const auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) word[c] = field.add(word[c], field.mul(coefficients[r], row[c]));
  }
  ShareVector out;
  out.secret = word[scheme.p0()];
  out.shares.reserve(scheme.n());
  for (auto id : scheme.player_ids()) out.shares.push_back(word[id]);
  out.dealer_witness = std::vector<Element>(coefficients.begin(), coefficients.end());
  return out;
}

ShareVector deal(const MasseyScheme& scheme, Element secret, std::uint64_t seed) {
  const auto& field = scheme.field();
  if (secret >= field.q()) throw Error(ErrorCode::MalformedInput, "secret is not a field element");
  const auto& m = scheme.code().matrix;
  CounterRng rng(seed);
  std::vector<Element> coeffs(m.rows(), 0);
  // Free coefficients uniform; the first is then fixed by f(P0) = secret.
  Element rest = 0;
  for (std::size_t r = 1; r < coeffs.size(); ++r) {
    coeffs[r] = rng.element(field);
    rest = field.add(rest, field.mul(coeffs[r], m.at(r, scheme.p0())));
  }
  coeffs[0] = field.div(field.sub(secret, rest), m.at(0, scheme.p0()));
  return evaluate_dealer(scheme, coeffs);
}

Qualification is_qualified(const MasseyScheme& scheme, std::span<const std::size_t> players) {
  const auto cols = support_columns(scheme, players);
  const auto target = scheme.generator().column(scheme.p0());
  auto coeffs = linalg::solve(scheme.generator().select_columns(cols), target, scheme.field());
  Qualification q;
  q.qualified = coeffs.has_value();
  q.recon_coeffs = std::move(coeffs);
  return q;
}

Element reconstruct(const MasseyScheme& scheme, std::span<const std::size_t> players,
                    std::span<const Element> shares) {
  if (players.size() != shares.size()) throw Error(ErrorCode::MalformedInput, "one share per listed player expected");
  const auto q = is_qualified(scheme, players);
  if (!q.qualified) throw Error(ErrorCode::UnqualifiedSet, "the given players cannot determine the secret");
  const auto& field = scheme.field();
  Element s = 0;
  for (std::size_t i = 0; i < shares.size(); ++i) s = field.add(s, field.mul((*q.recon_coeffs)[i], shares[i]));
  return s;
}

bool verify_privacy(const MasseyScheme& scheme, std::size_t t, const VerifyBudget& budget) {
  if (t >= scheme.n()) return false;
  return for_all_subsets(scheme.n(), t, budget,
                         [&](const std::vector<std::size_t>& a) { return !is_qualified(scheme, a).qualified; });
}

bool verify_reconstruction(const MasseyScheme& scheme, std::size_t r, const VerifyBudget& budget) {
  if (r > scheme.n()) return true;
  const std::size_t n = scheme.n();
  // Enumerate whichever side of the split is smaller.
  if (r > n / 2) {
    return for_all_subsets(n, n - r, budget, [&](const std::vector<std::size_t>& removed) {
      return is_qualified(scheme, complement(n, removed)).qualified;
    });
  }
  return for_all_subsets(n, r, budget, [&](const std::vector<std::size_t>& a) { return is_qualified(scheme, a).qualified; });
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

Verdict strong_mult_bound_check(const MasseyScheme& scheme, std::size_t t, const code::SearchBudget& budget) {
  if (t >= scheme.n()) return Verdict::False;
  const auto zeros = code::max_zeros(scheme.product_code(), budget);
  const auto allowed = static_cast<std::int64_t>(scheme.n()) - 1 - static_cast<std::int64_t>(zeros.value);
  const bool holds = static_cast<std::int64_t>(t) <= allowed;
  if (zeros.exact) return holds ? Verdict::True : Verdict::False;
  // A sampled value only bounds the true maximum from below, so it can refute
  // the condition but never establish it.
  return holds ? Verdict::Unknown : Verdict::False;
}

bool strong_mult_direct_check(const MasseyScheme& scheme, std::size_t t, const VerifyBudget& budget) {
  const std::size_t n = scheme.n();
  if (t >= n) return false;
  if (scheme.product_code().matrix.rows() > n - t) return false;
  return for_all_subsets(n, t, budget, [&](const std::vector<std::size_t>& removed) {
    return product_recombination(scheme, complement(n, removed)).has_value();
  });
}

bool has_strong_multiplication(const MasseyScheme& scheme, std::size_t t, const VerifyBudget& budget) {
  return verify_privacy(scheme, t, budget) && strong_mult_direct_check(scheme, t, budget);
}

Element multiply_and_reconstruct(const MasseyScheme& scheme, std::span<const Element> shares1,
                                 std::span<const Element> shares2, std::span<const std::size_t> b) {
  if (shares1.size() != scheme.n() || shares2.size() != scheme.n())
    throw Error(ErrorCode::MalformedInput, "share vectors must have one entry per player");
  const auto coeffs = product_recombination(scheme, b);
  if (!coeffs)
    throw Error(ErrorCode::ProductNotDetermined, "share products of the given players do not determine the product");
  const auto& field = scheme.field();
  Element out = 0;
  for (std::size_t i = 0; i < b.size(); ++i)
    out = field.add(out, field.mul((*coeffs)[i], field.mul(shares1[b[i]], shares2[b[i]])));
  return out;
}

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::Exact: return "exact";
    case Provenance::PaperBound: return "paper-bound";
    case Provenance::RandomizedBound: return "randomized-bound";
    case Provenance::VerifiedBound: return "verified-bound";
  }
  return "exact";
}

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::Equal: return "=";
    case Relation::AtLeast: return ">=";
    case Relation::AtMost: return "<=";
  }
  return "=";
}

SchemeReport thresholds(const MasseyScheme& scheme, const code::SearchBudget& search, const VerifyBudget& verify) {
  SchemeReport rep;
  rep.n = scheme.n();
  rep.k = scheme.k();
  const auto n = static_cast<std::int64_t>(rep.n);
  const auto length = static_cast<std::int64_t>(scheme.code().length());

  const auto zeros = code::max_zeros(scheme.code(), search);
  rep.d = {static_cast<std::size_t>(length) - zeros.value, zeros.exact, zeros.method};
  // r = n - d + 2 = (max zeros) + 1.
  rep.r_threshold = {n - static_cast<std::int64_t>(rep.d.value) + 2, zeros.exact ? Relation::Equal : Relation::AtLeast,
                     zeros.exact ? Provenance::Exact : Provenance::RandomizedBound};

  const auto dual = code::dual_by_support(scheme.code());
  const auto dual_zeros = code::max_zeros(dual, search);
  rep.d_dual = {static_cast<std::size_t>(length) - dual_zeros.value, dual_zeros.exact, dual_zeros.method};
  rep.t_threshold = {static_cast<std::int64_t>(rep.d_dual.value) - 2,
                     dual_zeros.exact ? Relation::Equal : Relation::AtMost,
                     dual_zeros.exact ? Provenance::Exact : Provenance::RandomizedBound};

  VerifyBudget exhaustive = verify;
  exhaustive.sample_count.reset();

  // Sampled distances only bound the thresholds; both are monotone in the set
  // size, so subset checks settle them whenever the enumeration is affordable.
  if (!zeros.exact) {
    std::int64_t smallest_ok = -1;
    bool failed = false;
    for (std::int64_t r = n; r >= 0 && binomial(rep.n, static_cast<std::size_t>(r)) <= verify.max_subsets; --r) {
      if (!verify_reconstruction(scheme, static_cast<std::size_t>(r), exhaustive)) {
        failed = true;
        break;
      }
      smallest_ok = r;
    }
    // The sample gives r >= its value, so meeting it also settles r.
    if (smallest_ok >= 0 && (failed || smallest_ok == 0 || smallest_ok == rep.r_threshold.value)) {
      rep.r_threshold = {smallest_ok, Relation::Equal, Provenance::Exact};
      rep.d = {static_cast<std::size_t>(n - smallest_ok + 2), true, code::DistanceMethod::Exhaustive};
    } else if (smallest_ok >= 0) {
      rep.r_threshold = {smallest_ok, Relation::AtMost, Provenance::VerifiedBound};
    }
  }
  if (!dual_zeros.exact) {
    std::int64_t largest_ok = -1;
    bool failed = false;
    for (std::int64_t t = 0; t < n && binomial(rep.n, static_cast<std::size_t>(t)) <= verify.max_subsets; ++t) {
      if (!verify_privacy(scheme, static_cast<std::size_t>(t), exhaustive)) {
        failed = true;
        break;
      }
      largest_ok = t;
    }
    // The sample gives t <= its value, so meeting it also settles t.
    if (failed || largest_ok == n - 1 || (largest_ok >= 0 && largest_ok == rep.t_threshold.value)) {
      rep.t_threshold = {largest_ok, Relation::Equal, Provenance::Exact};
      rep.d_dual = {static_cast<std::size_t>(largest_ok + 2), true, code::DistanceMethod::Exhaustive};
    } else if (largest_ok >= 0) {
      rep.t_threshold = {largest_ok, Relation::AtLeast, Provenance::VerifiedBound};
    }
  }

  // Largest t with verified t-strong multiplication, walking up from 0 while
  // the subset enumeration stays within budget.
  std::int64_t last_ok = -1;
  bool settled = false;
  for (std::size_t t = 0; t < rep.n; ++t) {
    if (binomial(rep.n, t) > verify.max_subsets) break;
    if (!has_strong_multiplication(scheme, t, exhaustive)) {
      settled = true;
      break;
    }
    last_ok = static_cast<std::int64_t>(t);
  }
  if (last_ok >= 0)
    rep.strong_t = Quantity{last_ok, settled ? Relation::Equal : Relation::AtLeast,
                            settled ? Provenance::Exact : Provenance::VerifiedBound};
  return rep;
}

}  // namespace toricss::scheme
