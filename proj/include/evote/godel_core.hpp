#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace evote {

// Thrown when a value fails to factor completely over a prime base. Carries
// the residual cofactor left after dividing out every base prime; a residual
// other than 1 means a foreign factor entered the protocol.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& what, mpz_class residual)
      : std::runtime_error(what), residual_(std::move(residual)) {}
  const mpz_class& residual() const { return residual_; }

 private:
  mpz_class residual_;
};

// The first m primes, in order. Candidate j (1-based) is identified by
// prime(j-1).
class PrimeBase {
 public:
  static PrimeBase first_primes(std::size_t m);

  std::size_t size() const { return primes_.size(); }
  unsigned long prime(std::size_t j) const { return primes_.at(j); }
  const std::vector<unsigned long>& primes() const { return primes_; }

  // Product of all base primes.
  mpz_class product() const;

  bool operator==(const PrimeBase&) const = default;

 private:
  explicit PrimeBase(std::vector<unsigned long> primes) : primes_(std::move(primes)) {}
  std::vector<unsigned long> primes_;
};

PrimeBase first_primes(std::size_t m);

// Signed exponent per base prime; represents the exact value
// prod_j p_j^e_j. Multiplication of represented values is exponent
// addition, inversion is negation, so products of primes and their
// inverses never lose exactness.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t m) : exps_(m, 0) {}
  explicit ExponentVector(std::vector<long> exps) : exps_(std::move(exps)) {}

  // Value p_j^count, as a vector of length m.
  static ExponentVector unit(std::size_t m, std::size_t j, long count = 1);

  std::size_t size() const { return exps_.size(); }
  long operator[](std::size_t j) const { return exps_.at(j); }
  long& operator[](std::size_t j) { return exps_.at(j); }
  const std::vector<long>& exponents() const { return exps_; }

  bool is_one() const;
  bool non_negative() const;
  // Every exponent in [lo, hi].
  bool within(long lo, long hi) const;

  ExponentVector inverse() const;

  // Represented value as an exact fraction in lowest terms: (num, den) with
  // num = product over positive exponents, den = product over negative ones.
  std::pair<mpz_class, mpz_class> value_num_den(const PrimeBase& base) const;
  std::string decimal(const PrimeBase& base) const;

  bool operator==(const ExponentVector&) const = default;

 private:
  std::vector<long> exps_;
};

// Product of represented values (exponent sum). Sizes must match.
ExponentVector operator*(const ExponentVector& a, const ExponentVector& b);
ExponentVector& operator*=(ExponentVector& a, const ExponentVector& b);

// enc(x) = prod_j p_j^x_j, exact. All exponents must be non-negative.
mpz_class godel_encode(const ExponentVector& x, const PrimeBase& base);

// Recovers x from enc(x) by trial division over the base primes. Throws
// DecodeError if a cofactor other than 1 remains.
ExponentVector godel_decode(const mpz_class& value, const PrimeBase& base);

// Prime modulus for the wire-level field arithmetic. The protocol needs
// p > (prod p_j)^n so the integer tally is recoverable from its residue.
class FieldParams {
 public:
  explicit FieldParams(mpz_class p);

  const mpz_class& modulus() const { return p_; }
  // True iff p exceeds (prod of base primes)^n, i.e. every legal tally for
  // an (m, n) election lifts exactly.
  bool admits(const PrimeBase& base, std::size_t n) const;

  bool operator==(const FieldParams& o) const { return p_ == o.p_; }

 private:
  mpz_class p_;
};

using FieldParamsPtr = std::shared_ptr<const FieldParams>;

// Least prime strictly greater than (prod of first m primes)^n.
FieldParams choose_field_prime(std::size_t m, std::size_t n);

// A residue in F_p. Elements arising in the protocol are never zero: every
// factor is a prime, a 1, or an inverse of those.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(mpz_class value, FieldParamsPtr params);

  const mpz_class& value() const { return value_; }
  const FieldParamsPtr& params() const { return params_; }

  FieldElement inverse() const;

  bool operator==(const FieldElement& o) const { return value_ == o.value_; }

 private:
  mpz_class value_;
  FieldParamsPtr params_;
};

FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement& operator*=(FieldElement& a, const FieldElement& b);

FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_inv(const FieldElement& a);

// One in F_p.
FieldElement field_one(const FieldParamsPtr& params);
// Residue of an exact signed product: positive part times inverse of the
// negative part.
FieldElement to_field(const ExponentVector& x, const PrimeBase& base, const FieldParamsPtr& params);

// Lift a field element to its canonical integer in [0, p) and factor it
// over the base. Only meaningful when the represented integer is below p.
ExponentVector exponent_vector_of(const FieldElement& e, const PrimeBase& base);
// Exact fraction num/den (in any form); result may carry negative exponents.
ExponentVector exponent_vector_of(const mpz_class& num, const mpz_class& den, const PrimeBase& base);

}  // namespace evote
