#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace connmod {

// Exact rational scalar. gmpxx keeps mpq values canonical (positive
// denominator, lowest terms) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

// "p/q" with q printed even when it is 1.
std::string rat_to_string(const Rat &x);

// Accepts "p/q" or "p"; throws ParseError otherwise or on zero denominator.
Rat rat_from_string(std::string_view text);

inline bool is_zero(const Rat &x) { return sgn(x) == 0; }

// mpq_class(num, den) does not reduce; this does.
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

} // namespace connmod
