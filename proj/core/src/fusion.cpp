#include "ribbonfusion/fusion.hpp"

#include <algorithm>
#include <set>

namespace ribbonfusion {

bool is_restricted(const Partition& lambda, int n, int l) {
    if (lambda.length() > n) return false;
    return lambda.part(0) - lambda.part(n - 1) <= l;
}

ReductionResult weyl_reduce(const Partition& lambda, int n, long long L) {
    if (n < 1) throw domain_error("weyl_reduce: n must be >= 1");
    if (L < n + 1) throw domain_error("weyl_reduce: requires l = L - n >= 1");
    if (lambda.length() > n) throw domain_error("weyl_reduce: partition has more than n parts");

    std::vector<long long> beta(beta_numbers(lambda, n).values());

    std::set<long long> residues;
    for (long long b : beta) {
        if (!residues.insert(((b % L) + L) % L).second) return ReductionResult::annihilated();
    }

    int sign = +1;
    long long z = 0;
    for (;;) {
        // Parity of the sort equals the parity of the inversion count.
        long long inversions = 0;
        for (std::size_t i = 0; i < beta.size(); ++i)
            for (std::size_t j = i + 1; j < beta.size(); ++j)
                if (beta[i] < beta[j]) ++inversions;
        if (inversions % 2 != 0) sign = -sign;
        std::sort(beta.rbegin(), beta.rend());

        long long spread = beta.front() - beta.back();
        if (spread < L) break;
        long long b1 = beta.front(), bn = beta.back();
        beta.front() = bn + L;
        beta.back() = b1 - L;
        z += spread - L;
        sign = -sign;
    }

    ReductionResult res;
    res.zero = false;
    res.sign = sign;
    res.z = z;
    res.mu = partition_from_betas(BetaSequence(std::move(beta)));
    return res;
}

namespace {

RestrictedExpansion reduce_impl(const SchurExpansion& e, int n, int l, bool classical,
                                TConvention convention) {
    if (l < 1) throw domain_error("reduce_expansion: l must be >= 1");
    long long L = static_cast<long long>(n) + l;
    RestrictedExpansion out;
    for (const auto& [lambda, c] : e.entries()) {
        ReductionResult res = weyl_reduce(lambda, n, L);
        if (res.zero) continue;
        LaurentPoly factor = LaurentPoly::constant(res.sign);
        if (!classical) {
            long long twice = 2 * res.z;
            factor = factor.shifted(convention == TConvention::Cospin ? HalfInt{twice}
                                                                      : HalfInt{-twice});
        }
        out.add(res.mu, c * factor);
    }
    return out;
}

}  // namespace

RestrictedExpansion reduce_expansion(const SchurExpansion& e, int n, int l, TConvention convention) {
    return reduce_impl(e, n, l, false, convention);
}

RestrictedExpansion reduce_expansion_classical(const SchurExpansion& e, int n, int l) {
    return reduce_impl(e, n, l, true, TConvention::Cospin);
}

LaurentPoly restricted_kostka(const Partition& lambda, const Partition& mu, int n, int l) {
    if (lambda.size() != mu.size()) throw domain_error("restricted_kostka: |lambda| != |mu|");
    if (!is_restricted(lambda, n, l))
        throw domain_error("restricted_kostka: lambda is not (n,l)-restricted");
    return reduce_expansion(modified_hall_littlewood(mu, n), n, l, TConvention::Spin).coeff(lambda);
}

RestrictedExpansion q_fusion_product(const std::vector<Partition>& factors, int n, int l,
                                     TConvention convention) {
    int r = static_cast<int>(factors.size());
    if (r < 1) throw domain_error("q_fusion_product: at least one factor");
    for (const auto& f : factors)
        if (f.length() > n) throw domain_error("q_fusion_product: factor has more than n parts");

    Partition shape = from_core_and_quotient(Partition(), factors, r);
    SchurExpansion g = llt_cospin(shape, r, n);
    if (convention == TConvention::Spin) {
        long long s2 = shape.empty() ? 0 : max_spin2(shape, r);
        SchurExpansion spin_version;
        for (const auto& [k, v] : g.entries()) spin_version.add(k, bar_reverse(v, HalfInt{s2}));
        g = std::move(spin_version);
    }
    return reduce_expansion(g, n, l, convention);
}

RestrictedExpansion fusion_product_classical(const std::vector<Partition>& factors, int n, int l) {
    for (const auto& f : factors)
        if (f.length() > n) throw domain_error("fusion_product_classical: factor has more than n parts");
    return reduce_expansion_classical(schur_product(factors, n), n, l);
}

RestrictedExpansion multiply_classical(const RestrictedExpansion& a, const RestrictedExpansion& b,
                                       int n, int l) {
    RestrictedExpansion out;
    for (const auto& [ka, va] : a.entries())
        for (const auto& [kb, vb] : b.entries()) {
            RestrictedExpansion p = fusion_product_classical({ka, kb}, n, l);
            for (const auto& [k, v] : p.entries()) out.add(k, v * va * vb);
        }
    return out;
}

RestrictedExpansion multiply_q(const RestrictedExpansion& a, const RestrictedExpansion& b, int n,
                               int l) {
    RestrictedExpansion out;
    for (const auto& [ka, va] : a.entries())
        for (const auto& [kb, vb] : b.entries()) {
            RestrictedExpansion p = q_fusion_product({ka, kb}, n, l, TConvention::Cospin);
            for (const auto& [k, v] : p.entries()) out.add(k, v * va * vb);
        }
    return out;
}

}  // namespace ribbonfusion
