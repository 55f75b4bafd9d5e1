#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toricss::gf {

// Field elements are integers in [0, q). For k = 1 this is the residue mod p;
// for k > 1 it is the base-p digit encoding of the polynomial coefficients,
// constant term in the least significant digit.
using Element = std::uint16_t;

inline constexpr std::uint32_t kDefaultMaxFieldSize = 1u << 16;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  // Monic modulus of degree k, coefficients from the constant term upwards
  // (length k + 1). Left empty to request the canonical choice.
  std::vector<std::uint32_t> modulus;
};

// Splits q into (p, k) when q is a prime power, otherwise nullopt.
std::optional<FieldSpec> spec_for_order(std::uint64_t q);

bool is_prime(std::uint64_t n);

// Polynomials over GF(p), coefficient vectors from the constant term up.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

// Smallest monic irreducible polynomial of the given degree, ordering
// candidates by the base-p integer encoding of their coefficients.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t degree);

// Immutable arithmetic tables for GF(p^k) with a distinguished primitive
// element g, the smallest element of multiplicative order q - 1.
class GaloisField {
 public:
  explicit GaloisField(FieldSpec spec, std::uint32_t max_field_size = kDefaultMaxFieldSize);

  static GaloisField of_order(std::uint64_t q);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t k() const { return spec_.k; }
  std::uint32_t q() const { return q_; }
  Element generator() const { return generator_; }

  Element add(Element a, Element b) const {
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return add_slow(a, b);
  }
  Element neg(Element a) const { return neg_table_[a]; }
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return exp_table_[static_cast<std::size_t>(log_table_[a]) + log_table_[b]];
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::int64_t e) const;

  // g^i for any integer i (reduced mod q - 1).
  Element exp(std::int64_t i) const;
  // Discrete logarithm to base g; a must be nonzero.
  std::uint32_t log(Element a) const;

  // Direct polynomial multiplication modulo the defining polynomial, without
  // the exp/log tables. Used to build the tables.
  Element mul_by_polynomials(Element a, Element b) const;

  std::string to_string(Element a) const;

  const std::vector<Element>& add_table() const { return add_table_; }

 private:
  Element add_slow(Element a, Element b) const;

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  Element generator_ = 0;
  std::vector<Element> exp_table_;  // length 2(q-1) so log a + log b never wraps
  std::vector<std::uint32_t> log_table_;
  std::vector<Element> neg_table_;
  std::vector<Element> add_table_;  // q*q entries, only for small q
};

}  // namespace toricss::gf
