#include "torusfk/useries.hpp"

namespace torusfk
{

IntSeries partition_series(int order)
{
    IntSeries p(order);
    p[0] = 1;
    for (int n = 1; n <= order; ++n) {
        mpz_class acc = 0;
        // generalized pentagonal numbers k(3k - 1)/2 for k = 1, -1, 2, -2, ...
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n)
                break;
            const int sign = (k % 2) ? 1 : -1;
            acc += sign * p[n - g1];
            if (g2 <= n)
                acc += sign * p[n - g2];
        }
        p[n] = acc;
    }
    return p;
}

IntSeries partition_product(int order)
{
    auto out = IntSeries::constant(1, order);
    for (int m = 1; m <= order; ++m) {
        // multiply by 1 + U^m + U^{2m} + ... in place
        for (int n = m; n <= order; ++n)
            out[n] += out[n - m];
    }
    return out;
}

IntSeries theta_v(int order)
{
    IntSeries v(order);
    for (long p = 0;; ++p) {
        const long e = p * (p + 1) / 2;
        if (e > order)
            break;
        v[static_cast<int>(e)] = (p % 2 ? -1 : 1) * (2 * p + 1);
    }
    return v;
}

FieldSeries to_field(const IntSeries& s, const FieldSpec& spec)
{
    FieldSeries out(s.order(), spec);
    for (int n = 0; n <= s.order(); ++n)
        out[n] = FieldValue(spec, mpq_class(s[n]));
    return out;
}

bool jacobi_check(int order)
{
    auto u = partition_series(order);
    return series_mul(series_pow(u, 3), theta_v(order)) == IntSeries::constant(1, order);
}

} // namespace torusfk
