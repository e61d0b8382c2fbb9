#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rectplan {

// Exact arbitrary-precision fraction, always in lowest terms with a positive
// denominator. Every coordinate, amplitude and LP coefficient in this project
// is a Rational; there is no floating point anywhere in the library.
using Rational = mpq_class;

inline int sign(const Rational& q) { return sgn(q); }

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p/q", plain integers ("-12") and decimal literals ("2.5", "-.75").
// Throws Error("MalformedInput") on anything else.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, denominator always printed ("5/1", "-7/3").
std::string to_fraction_string(const Rational& q);

bool is_integer(const Rational& q);

// Floor/ceil to mpz, exact.
mpz_class floor_to_int(const Rational& q);
mpz_class ceil_to_int(const Rational& q);

}  // namespace rectplan
