#include "lietk/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lietk {

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

void require_same_size(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("vector length mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    }
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string s;
    std::string_view rest = text;
    // U+2212 MINUS SIGN in UTF-8
    constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
    if (rest.starts_with(kUnicodeMinus)) {
        s.push_back('-');
        rest.remove_prefix(kUnicodeMinus.size());
    } else if (rest.starts_with('-') || rest.starts_with('+')) {
        if (rest.front() == '-') {
            s.push_back('-');
        }
        rest.remove_prefix(1);
    }
    auto slash = rest.find('/');
    std::string_view num = rest.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : rest.substr(slash + 1);
    if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den))) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    s.append(num);
    mpz_class denominator(1);
    if (slash != std::string_view::npos) {
        denominator = mpz_class(std::string(den));
        if (denominator == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
    }
    Rational value(mpz_class(s), denominator);
    value.canonicalize();
    return value;
}

Rational ratio(long num, long den)
{
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

bool is_integer(const Rational& value)
{
    return value.get_den() == 1;
}

Vector zero_vector(std::size_t n)
{
    return Vector(n, Rational(0));
}

Vector unit_vector(std::size_t n, std::size_t i)
{
    Vector v(n, Rational(0));
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v) {
        if (sgn(x) != 0) {
            return false;
        }
    }
    return true;
}

Vector operator+(const Vector& a, const Vector& b)
{
    require_same_size(a, b);
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

Vector operator-(const Vector& a, const Vector& b)
{
    require_same_size(a, b);
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

Vector operator-(const Vector& a)
{
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = -a[i];
    }
    return out;
}

Vector operator*(const Rational& s, const Vector& v)
{
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = s * v[i];
    }
    return out;
}

Vector& operator+=(Vector& a, const Vector& b)
{
    require_same_size(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += b[i];
    }
    return a;
}

Rational dot(const Vector& a, const Vector& b)
{
    require_same_size(a, b);
    Rational sum(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) {
            sum += a[i] * b[i];
        }
    }
    return sum;
}

int compare(const Vector& a, const Vector& b)
{
    require_same_size(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) {
            return c < 0 ? -1 : 1;
        }
    }
    return 0;
}

std::string to_string(const Vector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += v[i].get_str();
    }
    out += ")";
    return out;
}

}  // namespace lietk
