#pragma once

#include "ribbonfusion/laurent.hpp"

namespace ribbonfusion {

/// Unitary minimal-model label: m >= 2, 1 <= r <= m-1, 1 <= s <= r.
struct VirasoroLabel {
    long long m = 2;
    long long r = 1;
    long long s = 1;

    VirasoroLabel(long long m_, long long r_, long long s_);
};

/// q-series known exactly for all exponents < order.
struct QSeriesTruncation {
    long long order = 0;
    LaurentPoly terms;
};

/// Truncated inverse Euler function 1/phi(q) = sum p(k) q^k, with the
/// partition numbers from the pentagonal-number recurrence.
LaurentPoly inverse_euler_phi(long long order);

/// Normalized minimal-model character q^{-h} * chi_{r,s}: an alternating
/// theta-like sum over the inverse Euler function, truncated below `order`.
/// The constant term is 1 for every label.
QSeriesTruncation rocha_caridi(const VirasoroLabel& label, long long order);

struct LimitReport {
    bool agree = true;
    long long first_mismatch = -1;  // exponent of the first disagreement
};

/// Compares the normalized two-row skew Kostka polynomial at finite N with
/// the character of the label (m, r, s) = (L-1, a+1, b+1), coefficientwise
/// for exponents < order. Refuses (domain_error) when order > N, the
/// stabilization window.
LimitReport virasoro_limit_check(long long a, long long b, long long L, long long N,
                                 long long order);

}  // namespace ribbonfusion
