#ifndef SEPCODES_FINITE_FIELD_HPP_
#define SEPCODES_FINITE_FIELD_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sepcodes/errors.hpp"

namespace sepcodes {

// Field elements are integer indices in [0, q): the base-p encoding of the
// coefficient vector over GF(p), least significant digit = constant term.
// 0 is the additive identity, 1 the multiplicative identity.
using Felem = std::uint32_t;

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
};

bool is_prime(std::uint64_t n);

// Decomposes q = p^m with p prime; nullopt when q is not a prime power.
std::optional<PrimePower> prime_power_decompose(std::uint64_t q);

struct FieldSpec {
  std::uint32_t p = 0;  // prime characteristic
  std::uint32_t m = 0;  // extension degree
  std::uint32_t q = 0;  // p^m
  // Monic reduction polynomial over GF(p), constant term first, size m+1.
  // For m = 1 this is the placeholder x - 0 and arithmetic is mod p.
  std::vector<std::uint32_t> reduction;
};

// GF(p^m) with discrete exp/log tables over a canonical primitive element.
// Construction is deterministic: the reduction polynomial is the smallest
// monic irreducible of degree m in the base-p integer encoding of its
// coefficient vector, and alpha is the smallest-index element of order q-1.
// Instances are immutable after construction and safe to share across threads.
class FiniteField {
 public:
  const FieldSpec& spec() const { return spec_; }
  std::uint32_t q() const { return spec_.q; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t m() const { return spec_.m; }
  Felem alpha() const { return alpha_; }

  Felem add(Felem a, Felem b) const;
  Felem sub(Felem a, Felem b) const { return add(a, neg(b)); }
  Felem neg(Felem a) const;
  Felem mul(Felem a, Felem b) const;
  Felem inv(Felem a) const;  // throws DivisionByZero for 0
  Felem pow(Felem x, std::uint64_t e) const;

  // alpha^i, exponent taken mod q-1
  Felem exp_at(std::uint64_t i) const { return exp_[i % (spec_.q - 1)]; }
  // discrete log base alpha; throws DivisionByZero for 0
  std::uint32_t log_of(Felem x) const;

  std::uint64_t element_order(Felem x) const;  // multiplicative order, x != 0

  // Horner evaluation of f (coefficients constant-first) at x.
  Felem eval_poly(std::span<const Felem> f, Felem x) const;

  const std::vector<Felem>& exp_table() const { return exp_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }

  friend FiniteField construct_field(std::uint32_t q);

 private:
  FiniteField() = default;

  std::vector<std::uint32_t> digits(Felem a) const;
  Felem from_digits(const std::vector<std::uint32_t>& d) const;
  Felem mul_raw(Felem a, Felem b) const;  // polynomial multiply mod reduction

  FieldSpec spec_;
  Felem alpha_ = 0;
  std::vector<Felem> exp_;          // size q-1, exp_[i] = alpha^i
  std::vector<std::uint32_t> log_;  // size q, log_[0] unused
};

// Builds GF(q). Throws NotPrimePower when q is not a prime power (q >= 2).
FiniteField construct_field(std::uint32_t q);

enum class EvalDomain {
  kNonzero,  // F_q^*, for multiplicative-style polynomials
  kAll,      // F_q, for additive-style polynomials
};

// {f(b) : b in domain}, sorted ascending. f must be nonzero.
std::vector<Felem> image_of_poly(const FiniteField& field,
                                 std::span<const Felem> f, EvalDomain domain);

// GF(p)-basis of S, obtained by Gaussian elimination with elements taken in
// ascending index order. S must contain 0 and be closed under addition and
// GF(p)-scaling; throws NotASubspace otherwise.
std::vector<Felem> subspace_basis(const FiniteField& field,
                                  std::span<const Felem> S);

// Smallest-index generator of the multiplicative subgroup S of F_q^*.
// Throws NotASubgroup when S is not a subgroup.
Felem cyclic_generator(const FiniteField& field, std::span<const Felem> S);

// Span of a set of basis vectors under GF(p)-linear combinations, sorted.
std::vector<Felem> subspace_span(const FiniteField& field,
                                 std::span<const Felem> basis);

// Sorted sumset {a + b} / product set {a * b}.
std::vector<Felem> sumset(const FiniteField& field, std::span<const Felem> A,
                          std::span<const Felem> B);
std::vector<Felem> prodset(const FiniteField& field, std::span<const Felem> A,
                           std::span<const Felem> B);

// Degree of a coefficient vector, ignoring trailing zeros; -1 for the zero
// polynomial.
int poly_degree(std::span<const Felem> f);

}  // namespace sepcodes

#endif  // SEPCODES_FINITE_FIELD_HPP_
