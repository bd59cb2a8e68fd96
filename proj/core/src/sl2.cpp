#include "ribbonfusion/sl2.hpp"

namespace ribbonfusion {

namespace {

long long choose2(long long x) { return x * (x - 1) / 2; }

}  // namespace

LaurentPoly kostka_two_row(long long lambda1, long long lambda2) {
    if (lambda2 < 0 || lambda1 < lambda2) throw domain_error("kostka_two_row: needs lambda1 >= lambda2 >= 0");
    LaurentPoly first =
        qbinomial(lambda1 + lambda2, lambda1).shifted(HalfInt::whole(choose2(lambda1) + choose2(lambda2)));
    LaurentPoly second = qbinomial(lambda1 + lambda2, lambda1 + 1)
                             .shifted(HalfInt::whole(choose2(lambda1 + 1) + choose2(lambda2 - 1)));
    return first - second;
}

LaurentPoly kbar_closed(long long N, long long b, long long L) {
    if (L < 3) throw domain_error("kbar_closed: L must be >= 3");
    if (b < 0 || b > L - 2) throw domain_error("kbar_closed: b out of range [0, L-2]");
    if (N < 0) throw domain_error("kbar_closed: N must be >= 0");

    long long m = 2 * N + b;
    LaurentPoly acc;
    // Both sums are finitely supported: the q-binomial vanishes once its
    // lower index leaves [0, 2N+b].
    for (long long n = -(N + b) / L - 2; n <= N / L + 2; ++n) {
        long long k1 = N - L * n;
        if (k1 >= 0 && k1 <= m) {
            long long e = n * (L * (L - 1) * n + L * b - b - 1);
            acc += qbinomial(m, k1).shifted(HalfInt::whole(e));
        }
        long long k2 = N - L * n - 1;
        if (k2 >= 0 && k2 <= m) {
            long long e = n * (L * (L - 1) * n + L * b + 2 * L - b - 1) + b + 1;
            acc -= qbinomial(m, k2).shifted(HalfInt::whole(e));
        }
    }
    return acc.shifted(HalfInt::whole(N * (N + b - 1) + choose2(b)));
}

LaurentPoly kbar_skew_closed(long long N, long long b, long long a, long long L) {
    if (L < 3) throw domain_error("kbar_skew_closed: L must be >= 3");
    if (b < 0 || b > L - 2) throw domain_error("kbar_skew_closed: b out of range [0, L-2]");
    if (a < 0 || a > L - 2) throw domain_error("kbar_skew_closed: a out of range [0, L-2]");
    if (N < 0) throw domain_error("kbar_skew_closed: N must be >= 0");

    long long m = 2 * N + b - a;
    if (m < 0) throw domain_error("kbar_skew_closed: inner row longer than the shape");
    LaurentPoly acc;
    for (long long n = -(N + b) / L - 2; n <= (N + b) / L + 2; ++n) {
        long long k1 = N - L * n;
        if (k1 >= 0 && k1 <= m) {
            long long e = n * (L * (L - 1) * n + (L - 1) * b - L * a - 1);
            acc += qbinomial(m, k1).shifted(HalfInt::whole(e));
        }
        long long k2 = N + L * n + b + 1;
        if (k2 >= 0 && k2 <= m) {
            long long e = ((L - 1) * n + a + 1) * (L * n + b + 1);
            acc -= qbinomial(m, k2).shifted(HalfInt::whole(e));
        }
    }
    long long d = b - a;
    return acc.shifted(HalfInt::whole(N * (N + b - a - 1) + d * (d - 1) / 2));
}

}  // namespace ribbonfusion
