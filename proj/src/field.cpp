#include "augval/field.hpp"

#include "augval/errors.hpp"

namespace augval {

BaseValuation BaseValuation::padic(const mpz_class& p) {
  // GMP runs BPSW plus Miller-Rabin rounds: no known composite passes.
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw InputError("p-adic valuation requires a prime, got " + p.get_str());
  }
  BaseValuation v;
  v.kind_ = Kind::PAdic;
  v.prime_ = p;
  return v;
}

long padic_order(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw DomainError("p-adic order of zero");
  mpz_class rest(n);
  long order = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++order;
  }
  return order;
}

Value BaseValuation::operator()(const Rational& a) const {
  if (a == 0) return Value::infinity();
  if (kind_ == Kind::Trivial) return Value(0L);
  return Value(padic_order(a.get_num(), prime_) - padic_order(a.get_den(), prime_));
}

std::string BaseValuation::describe() const {
  if (kind_ == Kind::Trivial) return "trivial";
  return "p-adic(" + prime_.get_str() + ")";
}

}  // namespace augval
