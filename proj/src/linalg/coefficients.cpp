#include "coarsehh/error.hpp"
#include "coarsehh/linalg.hpp"

#include <limits>

namespace coarsehh {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Coefficients Coefficients::prime_field(std::uint64_t p) {
  if (p > (std::uint64_t{1} << 31) || !is_prime(p))
    throw InvalidInput("coefficient prime must be a prime <= 2^31, got " + std::to_string(p));
  return Coefficients(Domain::prime, static_cast<std::uint32_t>(p));
}

Coefficients Coefficients::parse(const std::string& text) {
  if (text == "Q") return rationals();
  if (text == "Z") return integers();
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.size() > 12 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("malformed prime in coefficient spec '" + text + "'");
    return prime_field(std::stoull(digits));
  }
  throw InvalidInput("unknown coefficient spec '" + text + "' (expected Q, Z or Fp:<prime>)");
}

std::string Coefficients::to_string() const {
  switch (domain_) {
    case Domain::rational: return "Q";
    case Domain::integer: return "Z";
    case Domain::prime: return "Fp:" + std::to_string(p_);
  }
  return "?";
}

Scalar Coefficients::normalize(const Scalar& v) const {
  switch (domain_) {
    case Domain::rational: {
      Scalar r = v;
      r.canonicalize();
      return r;
    }
    case Domain::integer:
      if (v.get_den() != 1) throw DomainError("non-integral value over Z");
      return v;
    case Domain::prime: {
      const mpz_class p = p_;
      mpz_class num = v.get_num() % p;
      if (num < 0) num += p;
      if (v.get_den() == 1) return Scalar(num);
      mpz_class den = v.get_den() % p;
      if (den == 0) throw DomainError("denominator divisible by " + std::to_string(p_));
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
      mpz_class r = (num * inv) % p;
      return Scalar(r);
    }
  }
  return v;
}

Scalar Coefficients::inv(const Scalar& a) const {
  if (domain_ == Domain::integer) throw DomainError("field required");
  const Scalar n = normalize(a);
  if (n == 0) throw DomainError("division by zero");
  if (domain_ == Domain::rational) return Scalar(1) / n;
  const mpz_class p = p_;
  mpz_class num = n.get_num();
  mpz_class r;
  mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

bool Coefficients::divides_not(std::int64_t n) const {
  if (domain_ == Domain::prime) return n % static_cast<std::int64_t>(p_) != 0;
  return n != 0;
}

}  // namespace coarsehh
