#include "ribbonfusion/virasoro.hpp"

#include "ribbonfusion/sl2.hpp"

#include <vector>

namespace ribbonfusion {

VirasoroLabel::VirasoroLabel(long long m_, long long r_, long long s_) : m(m_), r(r_), s(s_) {
    if (m < 2) throw domain_error("VirasoroLabel: m must be >= 2");
    if (r < 1 || r > m - 1) throw domain_error("VirasoroLabel: r out of range [1, m-1]");
    if (s < 1 || s > r) throw domain_error("VirasoroLabel: s out of range [1, r]");
}

LaurentPoly inverse_euler_phi(long long order) {
    if (order < 0) throw domain_error("inverse_euler_phi: order must be >= 0");
    // Pentagonal-number recurrence for the partition numbers.
    std::vector<BigInt> p(static_cast<std::size_t>(order), 0);
    if (order > 0) p[0] = 1;
    for (long long k = 1; k < order; ++k) {
        BigInt v = 0;
        for (long long j = 1;; ++j) {
            long long g1 = j * (3 * j - 1) / 2;
            long long g2 = j * (3 * j + 1) / 2;
            if (g1 > k && g2 > k) break;
            BigInt sgn = (j % 2 == 1) ? 1 : -1;
            if (g1 <= k) v += sgn * p[static_cast<std::size_t>(k - g1)];
            if (g2 <= k) v += sgn * p[static_cast<std::size_t>(k - g2)];
        }
        p[static_cast<std::size_t>(k)] = v;
    }
    LaurentPoly out;
    for (long long k = 0; k < order; ++k)
        out += LaurentPoly::term(p[static_cast<std::size_t>(k)], HalfInt::whole(k));
    return out;
}

QSeriesTruncation rocha_caridi(const VirasoroLabel& label, long long order) {
    if (order < 1) throw domain_error("rocha_caridi: order must be >= 1");
    long long m = label.m, r = label.r, s = label.s;

    // Exponents relative to the conformal weight h: both families are
    // integral, with the n = 0 minus-term landing at q^0.
    LaurentPoly theta;
    for (long long n = -(order + 2); n <= order + 2; ++n) {
        long long eminus = m * (m + 1) * n * n + n * ((m + 1) * r - m * s);
        long long eplus = m * (m + 1) * n * n + n * ((m + 1) * r + m * s) + r * s;
        if (eminus < order) theta += LaurentPoly::q_power(HalfInt::whole(eminus));
        if (eplus < order) theta -= LaurentPoly::q_power(HalfInt::whole(eplus));
    }
    LaurentPoly series = (theta * inverse_euler_phi(order)).truncated_below(HalfInt::whole(order));
    return QSeriesTruncation{order, std::move(series)};
}

LimitReport virasoro_limit_check(long long a, long long b, long long L, long long N,
                                 long long order) {
    VirasoroLabel label(L - 1, a + 1, b + 1);  // validates the ranges
    if (N < 0) throw domain_error("virasoro_limit_check: N must be >= 0");
    if (order < 1) throw domain_error("virasoro_limit_check: order must be >= 1");
    if (order > N)
        throw domain_error("virasoro_limit_check: order exceeds the stabilization window (order <= N)");

    long long d = b - a;
    long long shift = N * (N + b - a - 1) + d * (d - 1) / 2;
    LaurentPoly lhs = kbar_skew_closed(N, b, a, L)
                          .shifted(HalfInt::whole(-shift))
                          .truncated_below(HalfInt::whole(order));
    LaurentPoly rhs = rocha_caridi(label, order).terms;

    LaurentPoly diff = lhs - rhs;
    LimitReport rep;
    if (!diff.is_zero()) {
        rep.agree = false;
        rep.first_mismatch = diff.min_exponent().whole_value();
    }
    return rep;
}

}  // namespace ribbonfusion
