#pragma once

#include <gmpxx.h>

#include <string>

namespace wph {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical decimal-free rendering: "p" for integers, "p/q" otherwise.
std::string rational_string(const Rational& r);

bool is_integer(const Rational& r);

// Converts an integral rational to long long; throws std::overflow_error when
// the value is not integral or does not fit.
long long to_long(const Rational& r);

}  // namespace wph
