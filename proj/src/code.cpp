#include "toricss/code.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "toricss/error.hpp"
#include "toricss/rng.hpp"

namespace toricss::code {

namespace {

unsigned worker_count(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// q^k, saturating at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t q, std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (out > UINT64_MAX / q) return UINT64_MAX;
    out *= q;
  }
  return out;
}

std::size_t count_zeros(std::span<const Element> word) {
  return static_cast<std::size_t>(std::ranges::count(word, Element{0}));
}

// One unit of exhaustive work: messages whose first nonzero coordinate is a 1
// at position lead, with the next coordinate optionally pinned to top_value.
// The remaining free coordinates are walked like an odometer; each step adds
// (next - current) times one basis row, so every codeword costs one vector
// addition.
struct Chunk {
  std::size_t lead;
  bool pinned;
  Element top_value;
};

// Multiples of the lowest free row by every field element, when small enough.
constexpr std::size_t kMultipleTableLimit = std::size_t{1} << 24;

void enumerate_chunk(const linalg::Matrix& basis, const GaloisField& field, const Chunk& chunk,
                     std::vector<std::uint64_t>& hist) {
  const std::size_t k = basis.rows();
  const std::size_t n = basis.cols();
  const std::uint32_t q = field.q();
  std::vector<Element> word(basis.row(chunk.lead).begin(), basis.row(chunk.lead).end());
  std::size_t first_free = chunk.lead + 1;
  if (chunk.pinned) {
    const auto top = basis.row(chunk.lead + 1);
    for (std::size_t i = 0; i < n; ++i) word[i] = field.add(word[i], field.mul(chunk.top_value, top[i]));
    ++first_free;
  }
  const std::size_t free_digits = k - first_free;

  std::vector<Element> multiples;
  if (free_digits > 0 && static_cast<std::size_t>(q) * n <= kMultipleTableLimit) {
    multiples.resize(static_cast<std::size_t>(q) * n);
    const auto row = basis.row(first_free);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::size_t i = 0; i < n; ++i) multiples[a * n + i] = field.mul(static_cast<Element>(a), row[i]);
  }

  std::vector<Element> counter(free_digits, 0);
  std::vector<Element> step(n);
  auto shift = [&](std::size_t j, Element from, Element to) {
    const Element delta = field.sub(to, from);
    if (j == 0 && !multiples.empty()) {
      const Element* m = multiples.data() + static_cast<std::size_t>(delta) * n;
      for (std::size_t i = 0; i < n; ++i) word[i] = field.add(word[i], m[i]);
      return;
    }
    const auto row = basis.row(first_free + j);
    for (std::size_t i = 0; i < n; ++i) word[i] = field.add(word[i], field.mul(delta, row[i]));
  };
  for (;;) {
    ++hist[count_zeros(word)];
    std::size_t j = 0;
    while (j < free_digits && counter[j] == q - 1) {
      shift(j, counter[j], 0);
      counter[j++] = 0;
    }
    if (j == free_digits) break;
    shift(j, counter[j], counter[j] + 1);
    ++counter[j];
  }
}

}  // namespace

std::string method_name(DistanceMethod m) {
  return m == DistanceMethod::Exhaustive ? "exhaustive" : "randomized-lower-bound-on-max-zeros";
}

TorusSupport torus_support(std::shared_ptr<const GaloisField> field, std::size_t rank, std::size_t cap) {
  if (field->q() < 3) throw Error(ErrorCode::InvalidField, "the torus over GF(2) has a single point");
  TorusSupport s;
  try {
    s.points = lattice::hypercube(field->q(), rank, cap).points();
  } catch (const Error& e) {
    throw Error(ErrorCode::SizeOverflow, "torus too large: (q-1)^rank exceeds the cap");
  }
  s.field = std::move(field);
  s.rank = rank;
  s.p0_index = 0;
  s.full = true;
  return s;
}

TorusSupport sub_support(const TorusSupport& full, std::span<const std::size_t> positions) {
  TorusSupport s;
  s.field = full.field;
  s.rank = full.rank;
  for (auto pos : positions) {
    if (pos >= full.size()) throw Error(ErrorCode::MalformedInput, "support position out of range");
    if (pos == full.p0_index) s.p0_index = s.points.size();
    s.points.push_back(full.points[pos]);
  }
  s.full = full.full && s.points == full.points;
  return s;
}

Element evaluate_monomial(const GaloisField& field, const Point& u, const Point& point_exponents) {
  if (u.size() != point_exponents.size()) throw Error(ErrorCode::RankMismatch, "monomial and point ranks differ");
  const std::int64_t order = field.q() - 1;
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    std::int64_t term = (u[j] % order) * point_exponents[j] % order;
    acc = (acc + term) % order;
  }
  return field.exp(acc);
}

linalg::Matrix monomial_matrix(const PointSet& u, const TorusSupport& support) {
  if (u.rank() != support.rank) throw Error(ErrorCode::RankMismatch, "exponent set rank differs from torus rank");
  linalg::Matrix m(u.size(), support.size());
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < support.size(); ++c)
      m.at(r, c) = evaluate_monomial(*support.field, u.points()[r], support.points[c]);
  return m;
}

EvalCode evaluation_matrix(const PointSet& u, const TorusSupport& support) {
  if (u.rank() != support.rank) throw Error(ErrorCode::RankMismatch, "exponent set rank differs from torus rank");
  EvalCode c;
  c.support = support;
  c.exponents = lattice::reduce_mod(u, support.field->q());
  c.matrix = monomial_matrix(c.exponents, support);
  c.dimension = linalg::rank(c.matrix, *support.field);
  return c;
}

bool exhaustive_affordable(const EvalCode& c, const SearchBudget& budget) {
  return saturating_power(c.field().q(), c.dimension) <= budget.exhaustive_cap;
}

std::vector<std::uint64_t> projective_zero_histogram(const EvalCode& c, const SearchBudget& budget) {
  if (c.dimension == 0) throw Error(ErrorCode::InvalidCode, "zero-dimensional code has no nonzero codeword");
  if (!exhaustive_affordable(c, budget))
    throw Error(ErrorCode::BudgetExceeded, "q^k = " + std::to_string(c.field().q()) + "^" +
                                               std::to_string(c.dimension) + " exceeds the exhaustive cap");
  const GaloisField& field = c.field();
  const linalg::Matrix basis = linalg::row_basis(c.matrix, field);

  std::vector<Chunk> chunks;
  for (std::size_t lead = 0; lead < basis.rows(); ++lead) {
    if (lead + 1 < basis.rows()) {
      for (std::uint32_t v = 0; v < field.q(); ++v) chunks.push_back({lead, true, static_cast<Element>(v)});
    } else {
      chunks.push_back({lead, false, 0});
    }
  }

  const unsigned workers = std::min<std::size_t>(worker_count(budget.threads), chunks.size());
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(c.length() + 1, 0));
  std::atomic<std::size_t> next{0};
  auto work = [&](unsigned w) {
    for (std::size_t i; (i = next.fetch_add(1)) < chunks.size();) enumerate_chunk(basis, field, chunks[i], partial[w]);
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  std::vector<std::uint64_t> hist(c.length() + 1, 0);
  for (const auto& p : partial)
    for (std::size_t z = 0; z < hist.size(); ++z) hist[z] += p[z];
  return hist;
}

std::vector<std::uint64_t> weight_distribution(const EvalCode& c, const SearchBudget& budget) {
  std::vector<std::uint64_t> dist(c.length() + 1, 0);
  dist[0] = 1;
  if (c.dimension == 0) return dist;
  const auto hist = projective_zero_histogram(c, budget);
  for (std::size_t z = 0; z < hist.size(); ++z) dist[c.length() - z] += hist[z] * (c.field().q() - 1);
  return dist;
}

DistanceResult min_distance_exact(const EvalCode& c, const SearchBudget& budget) {
  const auto hist = projective_zero_histogram(c, budget);
  std::size_t most = 0;
  for (std::size_t z = 0; z < hist.size(); ++z)
    if (hist[z] != 0) most = z;
  return {c.length() - most, true, DistanceMethod::Exhaustive};
}

DistanceResult max_zeros(const EvalCode& c, const SearchBudget& budget) {
  if (c.dimension == 0) throw Error(ErrorCode::InvalidCode, "zero-dimensional code has no nonzero codeword");
  if (exhaustive_affordable(c, budget)) {
    const auto d = min_distance_exact(c, budget);
    return {c.length() - d.value, true, DistanceMethod::Exhaustive};
  }
  return max_zeros_random(c, budget.samples, budget.seed);
}

DistanceResult max_zeros_random(const EvalCode& c, std::uint64_t samples, std::uint64_t seed) {
  if (c.dimension == 0) throw Error(ErrorCode::InvalidCode, "zero-dimensional code has no nonzero codeword");
  const GaloisField& field = c.field();
  const linalg::Matrix basis = linalg::row_basis(c.matrix, field);
  CounterRng rng(seed);
  std::vector<Element> message(basis.rows());
  std::vector<Element> word(c.length());
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    bool nonzero = false;
    while (!nonzero) {
      for (auto& m : message) {
        m = rng.element(field);
        nonzero = nonzero || m != 0;
      }
    }
    std::ranges::fill(word, 0);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      if (message[r] == 0) continue;
      const auto row = basis.row(r);
      for (std::size_t i = 0; i < word.size(); ++i) word[i] = field.add(word[i], field.mul(message[r], row[i]));
    }
    best = std::max(best, count_zeros(word));
  }
  return {best, false, DistanceMethod::RandomizedLowerBound};
}

EvalCode dual_by_support(const EvalCode& c) {
  if (!c.support.full) throw Error(ErrorCode::NotFullSupport, "the dual exponent set describes the full-torus code only");
  return evaluation_matrix(lattice::dual_support(c.exponents, c.field().q()), c.support);
}

linalg::Matrix dual_by_nullspace(const EvalCode& c) {
  if (c.matrix.rows() == 0) {
    linalg::Matrix identity(c.length(), c.length());
    for (std::size_t i = 0; i < c.length(); ++i) identity.at(i, i) = 1;
    return identity;
  }
  return linalg::nullspace(c.matrix, c.field());
}

}  // namespace toricss::code
