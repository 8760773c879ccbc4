#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lietk {

/// Exact rational scalar. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation. The two-argument
/// mpq_class constructor does not reduce; use ratio() instead.
using Rational = mpq_class;

/// Dense coordinate vector over the rationals.
using Vector = std::vector<Rational>;

/// num/den in lowest terms; throws std::invalid_argument when den is zero.
Rational ratio(long num, long den);

/// Parses "p", "p/q", "-p/q" (an optional leading U+2212 minus is accepted).
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

// Vector helpers. All of them require equal lengths where two vectors meet.
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Rational dot(const Vector& a, const Vector& b);

/// Total order on vectors of equal length (lexicographic).
int compare(const Vector& a, const Vector& b);

std::string to_string(const Vector& v);

}  // namespace lietk
