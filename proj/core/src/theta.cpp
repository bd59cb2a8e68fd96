#include "ribbonfusion/theta.hpp"

#include <functional>

namespace ribbonfusion {

std::vector<Partition> fusion_labels(int n, int l) {
    if (n < 2) throw domain_error("fusion_labels: n must be >= 2");
    if (l < 1) throw domain_error("fusion_labels: l must be >= 1");
    std::vector<Partition> out;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int row, int max_part) {
        out.emplace_back(std::vector<int>(acc));
        if (row == n - 1) return;
        for (int p = max_part; p >= 1; --p) {
            acc.push_back(p);
            rec(row + 1, p);
            acc.pop_back();
        }
    };
    rec(0, l);
    std::sort(out.begin(), out.end());
    return out;
}

Partition dual_label(const Partition& lambda, int n, int l) {
    if (lambda.length() > n - 1 || lambda.part(0) > l)
        throw domain_error("dual_label: label does not fit the (n-1) x l box");
    std::vector<int> p = lambda.padded(n);
    std::vector<int> d(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n - 1; ++i) d[static_cast<std::size_t>(i)] = p[0] - p[static_cast<std::size_t>(n - 1 - i)];
    return Partition(std::move(d));
}

Partition strip_full_columns(const Partition& lambda, int n) {
    if (lambda.length() > n) throw domain_error("strip_full_columns: more than n parts");
    int base = lambda.part(n - 1);
    if (base == 0) return lambda;
    std::vector<int> p = lambda.padded(n);
    for (auto& v : p) v -= base;
    return Partition(std::move(p));
}

std::vector<std::pair<Partition, Partition>> omega_pairs(int n, int l) {
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& lambda : fusion_labels(n, l)) out.emplace_back(lambda, dual_label(lambda, n, l));
    return out;
}

namespace {

RestrictedExpansion strip_keys(const RestrictedExpansion& e, int n) {
    RestrictedExpansion out;
    for (const auto& [k, v] : e.entries()) out.add(strip_full_columns(k, n), v);
    return out;
}

RestrictedExpansion omega_element(int n, int l, bool q_level) {
    RestrictedExpansion out;
    for (const auto& [lambda, dual] : omega_pairs(n, l)) {
        RestrictedExpansion p = q_level
                                    ? q_fusion_product({lambda, dual}, n, l, TConvention::Cospin)
                                    : fusion_product_classical({lambda, dual}, n, l);
        for (const auto& [k, v] : p.entries()) out.add(strip_full_columns(k, n), v);
    }
    return out;
}

RestrictedExpansion omega_power(int n, int l, int g, bool q_level) {
    if (g < 1) throw domain_error("omega power: g must be >= 1");
    RestrictedExpansion omega = omega_element(n, l, q_level);
    RestrictedExpansion acc = omega;
    for (int i = 1; i < g; ++i) {
        RestrictedExpansion next =
            q_level ? multiply_q(acc, omega, n, l) : multiply_classical(acc, omega, n, l);
        acc = strip_keys(next, n);
    }
    return acc;
}

}  // namespace

BigInt theta_dim(int n, int l, int g) {
    LaurentPoly c = omega_power(n, l, g, false).coeff(Partition());
    if (c.is_zero()) return 0;
    if (c.term_count() != 1 || c.min_exponent().twice != 0)
        throw domain_error("theta_dim: non-constant coefficient in the classical product");
    return c.eval_one();
}

LaurentPoly theta_qdim(int n, int l, int g) { return omega_power(n, l, g, true).coeff(Partition()); }

}  // namespace ribbonfusion
