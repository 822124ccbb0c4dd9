#include "evote/godel_core.hpp"

#include <algorithm>

namespace evote {

namespace {

bool small_prime(unsigned long x, const std::vector<unsigned long>& known) {
  for (unsigned long p : known) {
    if (p * p > x) break;
    if (x % p == 0) return false;
  }
  return true;
}

}  // namespace

PrimeBase PrimeBase::first_primes(std::size_t m) {
  if (m < 1) throw std::invalid_argument("first_primes: m must be at least 1");
  std::vector<unsigned long> primes;
  primes.reserve(m);
  for (unsigned long c = 2; primes.size() < m; c += (c == 2 ? 1 : 2)) {
    if (small_prime(c, primes)) primes.push_back(c);
  }
  return PrimeBase(std::move(primes));
}

PrimeBase first_primes(std::size_t m) { return PrimeBase::first_primes(m); }

mpz_class PrimeBase::product() const {
  mpz_class prod = 1;
  for (unsigned long p : primes_) prod *= p;
  return prod;
}

ExponentVector ExponentVector::unit(std::size_t m, std::size_t j, long count) {
  ExponentVector x(m);
  x[j] = count;
  return x;
}

bool ExponentVector::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](long e) { return e == 0; });
}

bool ExponentVector::non_negative() const {
  return std::all_of(exps_.begin(), exps_.end(), [](long e) { return e >= 0; });
}

bool ExponentVector::within(long lo, long hi) const {
  return std::all_of(exps_.begin(), exps_.end(), [&](long e) { return lo <= e && e <= hi; });
}

ExponentVector ExponentVector::inverse() const {
  std::vector<long> neg(exps_.size());
  std::transform(exps_.begin(), exps_.end(), neg.begin(), [](long e) { return -e; });
  return ExponentVector(std::move(neg));
}

std::pair<mpz_class, mpz_class> ExponentVector::value_num_den(const PrimeBase& base) const {
  if (size() != base.size())
    throw std::invalid_argument("value_num_den: vector length does not match base");
  mpz_class num = 1, den = 1;
  for (std::size_t j = 0; j < size(); ++j) {
    const long e = exps_[j];
    if (e == 0) continue;
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), base.prime(j), static_cast<unsigned long>(e > 0 ? e : -e));
    (e > 0 ? num : den) *= power;
  }
  return {num, den};
}

std::string ExponentVector::decimal(const PrimeBase& base) const {
  auto [num, den] = value_num_den(base);
  if (den == 1) return num.get_str();
  return num.get_str() + "/" + den.get_str();
}

ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r = a;
  r *= b;
  return r;
}

ExponentVector& operator*=(ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("ExponentVector product: length mismatch");
  for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
  return a;
}

mpz_class godel_encode(const ExponentVector& x, const PrimeBase& base) {
  if (x.size() != base.size())
    throw std::invalid_argument("godel_encode: vector length does not match base");
  if (!x.non_negative())
    throw std::domain_error("godel_encode: defined for non-negative sequences only");
  auto [num, den] = x.value_num_den(base);
  return num;
}

ExponentVector godel_decode(const mpz_class& value, const PrimeBase& base) {
  if (value < 1) throw std::invalid_argument("godel_decode: value must be at least 1");
  ExponentVector x(base.size());
  mpz_class rest = value;
  for (std::size_t j = 0; j < base.size(); ++j) {
    const unsigned long p = base.prime(j);
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++x[j];
    }
  }
  if (rest != 1)
    throw DecodeError("godel_decode: foreign factor, residual " + rest.get_str(), rest);
  return x;
}

FieldParams::FieldParams(mpz_class p) : p_(std::move(p)) {
  if (mpz_probab_prime_p(p_.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("FieldParams: modulus is not prime");
}

bool FieldParams::admits(const PrimeBase& base, std::size_t n) const {
  mpz_class bound;
  mpz_class prod = base.product();
  mpz_pow_ui(bound.get_mpz_t(), prod.get_mpz_t(), static_cast<unsigned long>(n));
  return p_ > bound;
}

FieldParams choose_field_prime(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("choose_field_prime: m and n must be at least 1");
  mpz_class prod = first_primes(m).product();
  mpz_class bound, p;
  mpz_pow_ui(bound.get_mpz_t(), prod.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_nextprime(p.get_mpz_t(), bound.get_mpz_t());
  return FieldParams(std::move(p));
}

FieldElement::FieldElement(mpz_class value, FieldParamsPtr params)
    : value_(std::move(value)), params_(std::move(params)) {
  if (!params_) throw std::invalid_argument("FieldElement: missing field params");
  mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), params_->modulus().get_mpz_t());
}

FieldElement FieldElement::inverse() const {
  if (!params_) throw std::invalid_argument("FieldElement: missing field params");
  if (value_ == 0) throw std::domain_error("field_inv: zero has no inverse");
  mpz_class r;
  mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), params_->modulus().get_mpz_t());
  return FieldElement(std::move(r), params_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement r = a;
  r *= b;
  return r;
}

FieldElement& operator*=(FieldElement& a, const FieldElement& b) {
  if (!a.params() || !b.params())
    throw std::invalid_argument("field_mul: missing field params");
  if (!(*a.params() == *b.params()))
    throw std::invalid_argument("field_mul: mismatched moduli");
  mpz_class r = a.value() * b.value();
  a = FieldElement(std::move(r), a.params());
  return a;
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b) { return a * b; }

FieldElement field_inv(const FieldElement& a) { return a.inverse(); }

FieldElement field_one(const FieldParamsPtr& params) { return FieldElement(1, params); }

FieldElement to_field(const ExponentVector& x, const PrimeBase& base, const FieldParamsPtr& params) {
  auto [num, den] = x.value_num_den(base);
  FieldElement r(num, params);
  if (den != 1) r *= FieldElement(den, params).inverse();
  return r;
}

ExponentVector exponent_vector_of(const FieldElement& e, const PrimeBase& base) {
  return godel_decode(e.value(), base);
}

ExponentVector exponent_vector_of(const mpz_class& num, const mpz_class& den, const PrimeBase& base) {
  ExponentVector pos = godel_decode(num, base);
  if (den == 1) return pos;
  return pos * godel_decode(den, base).inverse();
}

}  // namespace evote
