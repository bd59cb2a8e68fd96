#pragma once

#include "ribbonfusion/llt.hpp"
#include "ribbonfusion/tableaux.hpp"

namespace ribbonfusion {

/// Which t-power the affine Weyl straightening attaches to a reduced term:
/// t = q (spin/charge normalization) contributes sign * q^{-z}, t = 1/q
/// (cospin/cocharge normalization) contributes sign * q^{+z}.
enum class TConvention { Spin, Cospin };

/// Result of straightening s_lambda into the (n,l)-restricted basis: either
/// annihilated, or sign * t^{±z} * s_mu with mu restricted (length <= n and
/// mu_1 - mu_n <= l). z = 0 and sign = +1 when lambda was already restricted.
struct ReductionResult {
    bool zero = true;
    int sign = +1;
    long long z = 0;
    Partition mu;

    static ReductionResult annihilated() { return {}; }
};

bool is_restricted(const Partition& lambda, int n, int l);

/// Affine Weyl reduction with L = n + l: beta_i = lambda_i + n - i; Zero when
/// two betas are congruent mod L; otherwise repeatedly sort (tracking the
/// permutation sign) and replace (b_1, b_n) by (b_n + L, b_1 - L), adding
/// (b_1 - b_n) - L to z and flipping the sign, until b_1 - b_n < L.
ReductionResult weyl_reduce(const Partition& lambda, int n, long long L);

/// Same association type as SchurExpansion, but all keys lie in the
/// restricted set Pi^(n,l) (kept in n-row form; no column stripping here).
using RestrictedExpansion = SchurExpansion;

RestrictedExpansion reduce_expansion(const SchurExpansion& e, int n, int l, TConvention convention);

/// q = 1 path: signs kept, all t-powers suppressed.
RestrictedExpansion reduce_expansion_classical(const SchurExpansion& e, int n, int l);

/// Restricted Kostka polynomial: coefficient of s_lambda in the reduction of
/// Q'_mu under the spin (t = q) convention. Requires lambda restricted and
/// |lambda| = |mu|.
LaurentPoly restricted_kostka(const Partition& lambda, const Partition& mu, int n, int l);

/// q-analogue of the fusion product of the factors in F^(n,l): the cospin
/// LLT polynomial of the tuple (or its bar-reversed spin variant), reduced
/// termwise with the matching t-convention.
RestrictedExpansion q_fusion_product(const std::vector<Partition>& factors, int n, int l,
                                     TConvention convention);

/// Kac-Walton product: classical Schur product followed by sign-only
/// reduction. Coefficients are constant polynomials.
RestrictedExpansion fusion_product_classical(const std::vector<Partition>& factors, int n, int l);

/// Bilinear products of restricted expansions (used for iterated products;
/// classical multiplication is associative, the q-level one is applied
/// strictly left to right by callers).
RestrictedExpansion multiply_classical(const RestrictedExpansion& a, const RestrictedExpansion& b,
                                       int n, int l);
RestrictedExpansion multiply_q(const RestrictedExpansion& a, const RestrictedExpansion& b,
                               int n, int l);

}  // namespace ribbonfusion
