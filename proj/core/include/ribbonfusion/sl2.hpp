#pragma once

#include "ribbonfusion/laurent.hpp"

namespace ribbonfusion {

/// Two-row Kostka polynomial K_{(l1,l2),(1^{l1+l2})}(q) as a difference of
/// two Gaussian binomials. Requires l1 >= l2 >= 0.
LaurentPoly kostka_two_row(long long lambda1, long long lambda2);

/// Closed form for the restricted Kostka polynomial of a two-row shape:
/// kbar_closed(N, b, L) equals restricted_kostka((N+b,N), (1^{2N+b}), 2, L-2).
/// Requires L >= 3, 0 <= b <= L-2, N >= 0.
LaurentPoly kbar_closed(long long N, long long b, long long L);

/// Skew version over the shape (N+b,N)/(a); a = 0 recovers kbar_closed.
LaurentPoly kbar_skew_closed(long long N, long long b, long long a, long long L);

}  // namespace ribbonfusion
