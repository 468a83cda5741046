#include "torusfk/scalars.hpp"

#include <charconv>
#include <ostream>

namespace torusfk
{

namespace
{

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0)
            return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit inputs.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p)
{
    if (p >= (1ULL << 62))
        throw FieldError("characteristic " + std::to_string(p) + " does not fit the supported word size");
    if (!is_prime(p))
        throw FieldError("characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

FieldSpec FieldSpec::parse(std::string_view name)
{
    if (name == "Q" || name == "QQ")
        return rationals();
    std::string_view digits;
    if (name.size() > 1 && (name[0] == 'F' || name[0] == 'p'))
        digits = name.substr(1);
    else if (name.size() > 4 && name.substr(0, 3) == "GF(" && name.back() == ')')
        digits = name.substr(3, name.size() - 4);
    else
        throw FieldError("unknown field '" + std::string(name) + "' (expected Q or F<p>)");
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw FieldError("unknown field '" + std::string(name) + "' (expected Q or F<p>)");
    return prime(p);
}

bool FieldSpec::inverts(long n) const
{
    if (m_char == 0)
        return n != 0;
    return reduce(mpz_class(n), m_char) != 0;
}

std::string FieldSpec::name() const
{
    return m_char == 0 ? std::string("Q") : "F" + std::to_string(m_char);
}

FieldValue::FieldValue(const FieldSpec& spec, long n) : m_spec(spec)
{
    if (spec.is_rational())
        m_q = n;
    else
        m_r = reduce(mpz_class(n), spec.characteristic());
}

FieldValue::FieldValue(const FieldSpec& spec, const mpq_class& q) : m_spec(spec)
{
    if (spec.is_rational()) {
        m_q = q;
        m_q.canonicalize();
        return;
    }
    mpq_class c = q;
    c.canonicalize();
    const auto p = spec.characteristic();
    std::uint64_t den = reduce(c.get_den(), p);
    if (den == 0)
        throw FieldError("denominator " + c.get_den().get_str() + " is not invertible in " + spec.name());
    m_r = mulmod(reduce(c.get_num(), p), powmod(den, p - 2, p), p);
}

bool FieldValue::is_zero() const
{
    return m_spec.is_rational() ? sgn(m_q) == 0 : m_r == 0;
}

bool FieldValue::is_one() const
{
    return m_spec.is_rational() ? m_q == 1 : m_r == 1 % m_spec.characteristic();
}

void FieldValue::check_same(const FieldValue& b) const
{
    if (!(m_spec == b.m_spec))
        throw FieldError("mismatched fields: " + m_spec.name() + " vs " + b.m_spec.name());
}

FieldValue FieldValue::operator-() const
{
    FieldValue r = *this;
    if (m_spec.is_rational())
        r.m_q = -m_q;
    else if (m_r != 0)
        r.m_r = m_spec.characteristic() - m_r;
    return r;
}

FieldValue FieldValue::inverse() const
{
    if (is_zero())
        throw FieldError("division by zero");
    FieldValue r = *this;
    if (m_spec.is_rational())
        r.m_q = 1 / m_q;
    else
        r.m_r = powmod(m_r, m_spec.characteristic() - 2, m_spec.characteristic());
    return r;
}

FieldValue& FieldValue::operator+=(const FieldValue& b)
{
    check_same(b);
    if (m_spec.is_rational()) {
        m_q += b.m_q;
    } else {
        const auto p = m_spec.characteristic();
        m_r = static_cast<std::uint64_t>((static_cast<u128>(m_r) + b.m_r) % p);
    }
    return *this;
}

FieldValue& FieldValue::operator-=(const FieldValue& b)
{
    return *this += -b;
}

FieldValue& FieldValue::operator*=(const FieldValue& b)
{
    check_same(b);
    if (m_spec.is_rational())
        m_q *= b.m_q;
    else
        m_r = mulmod(m_r, b.m_r, m_spec.characteristic());
    return *this;
}

FieldValue& FieldValue::operator/=(const FieldValue& b)
{
    check_same(b);
    return *this *= b.inverse();
}

bool operator==(const FieldValue& a, const FieldValue& b)
{
    if (!(a.m_spec == b.m_spec))
        return false;
    return a.m_spec.is_rational() ? a.m_q == b.m_q : a.m_r == b.m_r;
}

std::string FieldValue::to_string() const
{
    if (m_spec.is_rational())
        return m_q.get_str();
    return std::to_string(m_r);
}

std::ostream& operator<<(std::ostream& os, const FieldValue& v)
{
    return os << v.to_string();
}

FieldValue field_arith(const FieldValue& a, const FieldValue& b, ArithOp op)
{
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    case ArithOp::div:
        return a / b;
    }
    throw FieldError("unknown arithmetic operation");
}

namespace
{

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace

FieldValue parse_scalar(std::string_view text, const FieldSpec& spec)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        negative = body[0] == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw FieldError("malformed scalar literal '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw FieldError("zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return FieldValue(spec, mpq_class(n, d));
}

FieldValue make_fraction(const FieldSpec& spec, long num, long den)
{
    if (den == 0)
        throw FieldError("zero denominator");
    return FieldValue(spec, mpq_class(num, den));
}

} // namespace torusfk
