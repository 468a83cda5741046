#ifndef TORUSFK_USERIES_HPP
#define TORUSFK_USERIES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "torusfk/scalars.hpp"

namespace torusfk
{

// Coefficient arithmetic for series over Z (mpz_class) or a field.
template <class C>
struct SeriesTraits;

template <>
struct SeriesTraits<mpz_class>
{
    struct Context
    {
        friend bool operator==(const Context&, const Context&) { return true; }
    };
    static mpz_class from(long n, const Context&) { return mpz_class(n); }
    static bool is_zero(const mpz_class& c) { return c == 0; }
    static std::optional<mpz_class> inverse(const mpz_class& c)
    {
        if (c == 1 || c == -1)
            return c;
        return std::nullopt;
    }
    static std::string str(const mpz_class& c) { return c.get_str(); }
};

template <>
struct SeriesTraits<FieldValue>
{
    using Context = FieldSpec;
    static FieldValue from(long n, const Context& spec) { return FieldValue(spec, n); }
    static bool is_zero(const FieldValue& c) { return c.is_zero(); }
    static std::optional<FieldValue> inverse(const FieldValue& c)
    {
        if (c.is_zero())
            return std::nullopt;
        return c.inverse();
    }
    static std::string str(const FieldValue& c) { return c.to_string(); }
};

// A power series in U modulo U^{N+1} with exact coefficients.
template <class C>
class TruncatedUSeries
{
public:
    using Traits = SeriesTraits<C>;
    using Context = typename Traits::Context;

    TruncatedUSeries(int order, Context ctx = Context{}) : m_ctx(std::move(ctx)), m_order(order)
    {
        if (order < 0)
            throw Error("negative truncation order");
        m_coeffs.assign(order + 1, Traits::from(0, m_ctx));
    }

    static TruncatedUSeries constant(long c, int order, Context ctx = Context{})
    {
        TruncatedUSeries s(order, std::move(ctx));
        s.m_coeffs[0] = Traits::from(c, s.m_ctx);
        return s;
    }

    int order() const { return m_order; }
    const Context& context() const { return m_ctx; }
    const std::vector<C>& coefficients() const { return m_coeffs; }
    const C& operator[](int n) const { return m_coeffs.at(n); }
    C& operator[](int n) { return m_coeffs.at(n); }

    bool is_zero() const
    {
        for (const auto& c : m_coeffs)
            if (!Traits::is_zero(c))
                return false;
        return true;
    }

    // "c0 + c1*U + c2*U^2 ..." with zero terms omitted.
    std::string format() const
    {
        std::string out;
        for (int n = 0; n <= m_order; ++n) {
            const C& c = m_coeffs[n];
            if (Traits::is_zero(c))
                continue;
            std::string s = Traits::str(c);
            const bool neg = !s.empty() && s[0] == '-';
            if (neg)
                s.erase(0, 1);
            if (out.empty())
                out = neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (n == 0)
                out += s;
            else {
                if (s != "1")
                    out += s + "*";
                out += n == 1 ? "U" : "U^" + std::to_string(n);
            }
        }
        return out.empty() ? "0" : out;
    }

    // "[c0, c1, ..., cN]"
    std::string format_list() const
    {
        std::string out = "[";
        for (int n = 0; n <= m_order; ++n) {
            if (n)
                out += ", ";
            out += Traits::str(m_coeffs[n]);
        }
        return out + "]";
    }

    friend bool operator==(const TruncatedUSeries& a, const TruncatedUSeries& b)
    {
        return a.m_order == b.m_order && a.m_coeffs == b.m_coeffs;
    }

private:
    Context m_ctx;
    int m_order;
    std::vector<C> m_coeffs;
};

using IntSeries = TruncatedUSeries<mpz_class>;
using FieldSeries = TruncatedUSeries<FieldValue>;

template <class C>
TruncatedUSeries<C> series_add(const TruncatedUSeries<C>& a, const TruncatedUSeries<C>& b)
{
    if (a.order() != b.order())
        throw Error("series truncation orders differ");
    TruncatedUSeries<C> out = a;
    for (int n = 0; n <= a.order(); ++n)
        out[n] = a[n] + b[n];
    return out;
}

template <class C>
TruncatedUSeries<C> series_scale(const TruncatedUSeries<C>& a, const C& c)
{
    TruncatedUSeries<C> out = a;
    for (int n = 0; n <= a.order(); ++n)
        out[n] = a[n] * c;
    return out;
}

// Cauchy product modulo U^{N+1}.
template <class C>
TruncatedUSeries<C> series_mul(const TruncatedUSeries<C>& a, const TruncatedUSeries<C>& b)
{
    if (a.order() != b.order())
        throw Error("series truncation orders differ");
    using Traits = SeriesTraits<C>;
    const int N = a.order();
    TruncatedUSeries<C> out(N, a.context());
    for (int i = 0; i <= N; ++i) {
        if (Traits::is_zero(a[i]))
            continue;
        for (int j = 0; i + j <= N; ++j)
            if (!Traits::is_zero(b[j]))
                out[i + j] += a[i] * b[j];
    }
    return out;
}

// Recursive inverse; throws when the constant term is not a unit.
template <class C>
TruncatedUSeries<C> series_inv(const TruncatedUSeries<C>& a)
{
    using Traits = SeriesTraits<C>;
    auto c0 = Traits::inverse(a[0]);
    if (!c0)
        throw Error("series constant term is not invertible");
    const int N = a.order();
    TruncatedUSeries<C> out(N, a.context());
    out[0] = *c0;
    for (int n = 1; n <= N; ++n) {
        C acc = Traits::from(0, a.context());
        for (int k = 1; k <= n; ++k)
            if (!Traits::is_zero(a[k]))
                acc += a[k] * out[n - k];
        out[n] = -(acc * *c0);
    }
    return out;
}

template <class C>
TruncatedUSeries<C> series_pow(const TruncatedUSeries<C>& a, int k)
{
    if (k < 0)
        return series_pow(series_inv(a), -k);
    auto out = TruncatedUSeries<C>::constant(1, a.order(), a.context());
    for (int i = 0; i < k; ++i)
        out = series_mul(out, a);
    return out;
}

// Partition generating function via Euler's pentagonal recurrence.
IntSeries partition_series(int order);
// The same from the product of (1 - U^m)^{-1}, m = 1..N.
IntSeries partition_product(int order);
// v = sum_{p >= 0} (-1)^p (2p + 1) U^{p(p+1)/2}.
IntSeries theta_v(int order);
// Reduction of an integer series into a field.
FieldSeries to_field(const IntSeries& s, const FieldSpec& spec);

// u^3 v = 1 modulo U^{N+1}.
bool jacobi_check(int order);

} // namespace torusfk

#endif
