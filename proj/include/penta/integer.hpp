#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace penta {

using Integer = mpz_class;
using Rational = mpq_class;

// C(n, k) = n (n-1) ... (n-k+1) / k! for any integer n and k >= 0.
Integer binomial(const Integer& n, unsigned long k);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Integer pow2(unsigned long e);
Integer ipow(const Integer& base, unsigned long e);

bool is_integral(const Rational& q);
// Throws VerificationFailure if q has a denominator other than 1.
Integer to_integer(const Rational& q, std::string_view what = "value");

std::string to_string(const Integer& z);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Integer parse_integer(std::string_view text);
// Accepts "p", "-p", "p/q"; the result is canonicalized.
Rational parse_rational(std::string_view text);

Integer integer_from_ull(unsigned long long v);

}  // namespace penta
