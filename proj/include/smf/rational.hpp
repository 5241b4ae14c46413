#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace smf {

// Exact scalars. mpq_class keeps values canonical (lowest terms, positive
// denominator), which is exactly the Rational contract we need.
using Integer = mpz_class;
using Rational = mpq_class;

// "num/den", with "/den" omitted when den == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

Rational rational_from_string(const std::string& s);

Rational make_rational(const Integer& num, const Integer& den);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer pow_int(const Integer& base, unsigned e);
Rational pow_rat(const Rational& base, unsigned e);

inline bool is_zero(const Rational& q) { return q.get_num() == 0; }

} // namespace smf
