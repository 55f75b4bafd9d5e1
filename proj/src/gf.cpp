#include "toricss/gf.hpp"

#include <algorithm>
#include <sstream>

#include "toricss/error.hpp"

namespace toricss::gf {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is small so plain square-and-multiply in 64 bits is fine.
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo a nonzero polynomial m over GF(p).
Poly poly_mod(Poly a, Poly m, std::uint32_t p) {
  trim(a);
  trim(m);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inverse_mod_prime(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      const std::uint64_t sub = factor * m[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_from_code(std::uint64_t code, std::uint32_t p, std::size_t length) {
  Poly out(length, 0);
  for (std::size_t i = 0; i < length; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::optional<FieldSpec> spec_for_order(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) return std::nullopt;
    std::uint64_t rest = q;
    std::uint32_t k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (rest != 1) return std::nullopt;
    FieldSpec spec;
    spec.p = static_cast<std::uint32_t>(p);
    spec.k = k;
    return spec;
  }
  return std::nullopt;
}

bool is_irreducible(const Poly& poly, std::uint32_t p) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t degree = f.size() - 1;
  if (degree == 1) return true;
  // Trial division by every monic polynomial of degree 1..degree/2.
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly divisor = poly_from_code(code, p, d);
      divisor.push_back(1);
      if (poly_mod(f, divisor, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t degree) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < degree; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly candidate = poly_from_code(code, p, degree);
    candidate.push_back(1);
    if (is_irreducible(candidate, p)) return candidate;
  }
  throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

GaloisField GaloisField::of_order(std::uint64_t q) {
  auto spec = spec_for_order(q);
  if (!spec) throw Error(ErrorCode::NonPrimeP, "field order " + std::to_string(q) + " is not a prime power");
  return GaloisField(*spec);
}

GaloisField::GaloisField(FieldSpec spec, std::uint32_t max_field_size) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) throw Error(ErrorCode::NonPrimeP, std::to_string(spec_.p) + " is not prime");
  if (spec_.k < 1) throw Error(ErrorCode::InvalidField, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    q *= spec_.p;
    if (q > max_field_size)
      throw Error(ErrorCode::FieldTooLarge, "p^k exceeds the field size cap " + std::to_string(max_field_size));
  }
  q_ = static_cast<std::uint32_t>(q);

  if (spec_.modulus.empty()) {
    spec_.modulus = spec_.k == 1 ? Poly{0, 1} : smallest_irreducible(spec_.p, spec_.k);
  } else {
    if (spec_.modulus.size() != spec_.k + 1 || spec_.modulus.back() != 1)
      throw Error(ErrorCode::InvalidField, "modulus must be monic of degree k");
    for (auto c : spec_.modulus)
      if (c >= spec_.p) throw Error(ErrorCode::InvalidField, "modulus coefficient out of range");
    if (!is_irreducible(spec_.modulus, spec_.p))
      throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(spec_.p) + ")");
  }

  neg_table_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t out = 0, place = 1, rest = a;
    for (std::uint32_t i = 0; i < spec_.k; ++i) {
      const std::uint32_t digit = rest % spec_.p;
      rest /= spec_.p;
      out += ((spec_.p - digit) % spec_.p) * place;
      place *= spec_.p;
    }
    neg_table_[a] = static_cast<Element>(out);
  }
  if (q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b)
        add_table_[static_cast<std::size_t>(a) * q_ + b] = add_slow(static_cast<Element>(a), static_cast<Element>(b));
  }

  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](Element a, std::uint64_t e) {
    Element result = 1, base = a;
    while (e) {
      if (e & 1) result = mul_by_polynomials(result, base);
      base = mul_by_polynomials(base, base);
      e >>= 1;
    }
    return result;
  };
  for (std::uint32_t a = 1; a < q_; ++a) {
    const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t f) {
      return slow_pow(static_cast<Element>(a), order / f) != 1;
    });
    if (primitive) {
      generator_ = static_cast<Element>(a);
      break;
    }
  }

  exp_table_.resize(2 * order);
  log_table_.assign(q_, 0);
  Element x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_table_[i] = x;
    exp_table_[i + order] = x;
    log_table_[x] = static_cast<std::uint32_t>(i);
    x = mul_by_polynomials(x, generator_);
  }
}

Element GaloisField::add_slow(Element a, Element b) const {
  if (spec_.k == 1) return static_cast<Element>((static_cast<std::uint32_t>(a) + b) % spec_.p);
  std::uint32_t out = 0, place = 1, x = a, y = b;
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    out += ((x % spec_.p + y % spec_.p) % spec_.p) * place;
    x /= spec_.p;
    y /= spec_.p;
    place *= spec_.p;
  }
  return static_cast<Element>(out);
}

Element GaloisField::mul_by_polynomials(Element a, Element b) const {
  if (spec_.k == 1) return static_cast<Element>(static_cast<std::uint64_t>(a) * b % spec_.p);
  const Poly pa = poly_from_code(a, spec_.p, spec_.k);
  const Poly pb = poly_from_code(b, spec_.p, spec_.k);
  Poly product(2 * spec_.k, 0);
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = 0; j < pb.size(); ++j)
      product[i + j] = static_cast<std::uint32_t>((product[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % spec_.p);
  Poly reduced = poly_mod(product, spec_.modulus, spec_.p);
  std::uint32_t out = 0, place = 1;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    out += reduced[i] * place;
    place *= spec_.p;
  }
  return static_cast<Element>(out);
}

Element GaloisField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t order = q_ - 1;
  return exp_table_[(order - log_table_[a]) % order];
}

Element GaloisField::pow(Element a, std::int64_t e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
    return 0;
  }
  const std::int64_t order = q_ - 1;
  std::int64_t idx = (static_cast<std::int64_t>(log_table_[a]) * (e % order)) % order;
  if (idx < 0) idx += order;
  return exp_table_[static_cast<std::size_t>(idx)];
}

Element GaloisField::exp(std::int64_t i) const {
  const std::int64_t order = q_ - 1;
  std::int64_t idx = i % order;
  if (idx < 0) idx += order;
  return exp_table_[static_cast<std::size_t>(idx)];
}

std::uint32_t GaloisField::log(Element a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "logarithm of zero");
  return log_table_[a];
}

std::string GaloisField::to_string(Element a) const {
  if (spec_.k == 1) return std::to_string(a);
  std::ostringstream os;
  bool first = true;
  std::uint32_t rest = a;
  std::vector<std::uint32_t> digits(spec_.k);
  for (auto& d : digits) {
    d = rest % spec_.p;
    rest /= spec_.p;
  }
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (digits[i] != 1 || i == 0) os << digits[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace toricss::gf
