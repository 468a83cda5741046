#ifndef TORUSFK_SCALARS_HPP
#define TORUSFK_SCALARS_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace torusfk
{

// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class FieldError : public Error
{
public:
    using Error::Error;
};

// The working field: Q when characteristic() == 0, F_p otherwise.
class FieldSpec
{
public:
    FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec(); }
    // Throws FieldError unless p is a prime below 2^62.
    static FieldSpec prime(std::uint64_t p);
    // Accepts "Q", "F<p>" and "GF(<p>)".
    static FieldSpec parse(std::string_view name);

    std::uint64_t characteristic() const { return m_char; }
    bool is_rational() const { return m_char == 0; }
    // True iff n is invertible in the field.
    bool inverts(long n) const;

    std::string name() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    explicit FieldSpec(std::uint64_t c) : m_char(c) {}

    std::uint64_t m_char = 0;
};

bool is_prime(std::uint64_t n);

// An exact scalar. Rationals are kept reduced with positive denominator,
// residues in [0, p).
class FieldValue
{
public:
    FieldValue() = default;
    FieldValue(const FieldSpec& spec, long n);
    FieldValue(const FieldSpec& spec, const mpq_class& q);

    static FieldValue zero(const FieldSpec& spec) { return FieldValue(spec, 0L); }
    static FieldValue one(const FieldSpec& spec) { return FieldValue(spec, 1L); }

    const FieldSpec& spec() const { return m_spec; }
    bool is_zero() const;
    bool is_one() const;

    // Only meaningful over Q.
    const mpq_class& rational() const { return m_q; }
    // Only meaningful over F_p.
    std::uint64_t residue() const { return m_r; }

    FieldValue operator-() const;
    FieldValue inverse() const;

    FieldValue& operator+=(const FieldValue& b);
    FieldValue& operator-=(const FieldValue& b);
    FieldValue& operator*=(const FieldValue& b);
    FieldValue& operator/=(const FieldValue& b);

    friend FieldValue operator+(FieldValue a, const FieldValue& b) { return a += b; }
    friend FieldValue operator-(FieldValue a, const FieldValue& b) { return a -= b; }
    friend FieldValue operator*(FieldValue a, const FieldValue& b) { return a *= b; }
    friend FieldValue operator/(FieldValue a, const FieldValue& b) { return a /= b; }

    friend bool operator==(const FieldValue& a, const FieldValue& b);

    // Canonical literal: "a" or "a/b" over Q, the residue over F_p.
    std::string to_string() const;

private:
    void check_same(const FieldValue& b) const;

    FieldSpec m_spec;
    mpq_class m_q;
    std::uint64_t m_r = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldValue& v);

enum class ArithOp { add, sub, mul, div };

FieldValue field_arith(const FieldValue& a, const FieldValue& b, ArithOp op);

// Literal grammar: optional sign, decimal integer, optional "/" and a
// positive decimal integer.
FieldValue parse_scalar(std::string_view text, const FieldSpec& spec);

// Convenience for tables written as rationals: num/den mapped into the field.
FieldValue make_fraction(const FieldSpec& spec, long num, long den = 1);

} // namespace torusfk

#endif
