#include "ribbonfusion/llt.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ribbonfusion {

namespace {

using Cell = std::pair<int, int>;  // (row, col), 1-based

// Rightmost column first, then top to bottom: the first remaining cell is
// always the root (maximal-content end) of its ribbon in any tiling.
struct CellOrder {
    bool operator()(const Cell& a, const Cell& b) const {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    }
};

using CellSet = std::set<Cell, CellOrder>;

struct TilingSearch {
    const CellSet* all = nullptr;
    int r = 0;
    int found = 0;
    long long spin2_of_first = 0;

    void search(CellSet& remaining, long long spin2_acc) {
        if (found >= 2) return;
        if (remaining.empty()) {
            if (found == 0) spin2_of_first = spin2_acc;
            ++found;
            return;
        }
        // The top remaining cell of the rightmost remaining column is forced
        // to be the head (maximal-content end) of its ribbon; admissibility
        // requires every head to touch the northern boundary of the shape.
        Cell head = *remaining.begin();
        if (all->count(Cell{head.first - 1, head.second})) return;
        std::vector<Cell> path{head};
        extend(remaining, path, spin2_acc);
    }

    void extend(CellSet& remaining, std::vector<Cell>& path, long long spin2_acc) {
        if (found >= 2) return;
        if (static_cast<int>(path.size()) == r) {
            long long height = path.back().first - path.front().first + 1;
            for (const Cell& c : path) remaining.erase(c);
            search(remaining, spin2_acc + (height - 1));
            for (const Cell& c : path) remaining.insert(c);
            return;
        }
        const Cell& cur = path.back();
        Cell down{cur.first + 1, cur.second};
        Cell left{cur.first, cur.second - 1};
        if (remaining.count(down)) {
            path.push_back(down);
            extend(remaining, path, spin2_acc);
            path.pop_back();
        }
        if (remaining.count(left)) {
            path.push_back(left);
            extend(remaining, path, spin2_acc);
            path.pop_back();
        }
    }
};

}  // namespace

std::optional<StripInfo> horizontal_strip_tiling(const SkewShape& skew, int r) {
    if (r < 1) throw domain_error("r must be >= 1");
    int total = skew.size();
    if (total % r != 0) return std::nullopt;
    if (total == 0) return StripInfo{0, 0};

    CellSet cells;
    for (const auto& c : skew.cells()) cells.insert(c);
    TilingSearch ts;
    ts.all = &cells;
    ts.r = r;
    CellSet remaining = cells;
    ts.search(remaining, 0);
    if (ts.found != 1) return std::nullopt;
    return StripInfo{total / r, ts.spin2_of_first};
}

namespace {

// Ordinary horizontal-strip extensions of nu inside bound.
void strip_extensions(const Partition& nu, const Partition& bound,
                      const std::function<void(const Partition&)>& emit) {
    int rows = bound.length();
    std::vector<int> out(static_cast<std::size_t>(rows));
    std::function<void(int)> rec = [&](int i) {
        if (i == rows) {
            emit(Partition(std::vector<int>(out.begin(), out.end())));
            return;
        }
        int lo = nu.part(i);
        int hi = std::min(bound.part(i), i == 0 ? bound.part(0) : nu.part(i - 1));
        if (i > 0) hi = std::min(hi, out[static_cast<std::size_t>(i - 1)]);
        for (int v = lo; v <= hi; ++v) {
            out[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
        }
    };
    if (rows == 0) {
        emit(Partition());
        return;
    }
    rec(0);
}

// Per-enumeration cache of the admissible one-letter steps out of each
// partition, bounded above by the final shape. Candidates are generated
// through the r-quotient (componentwise horizontal strips); each candidate
// is then confirmed by the unique-tiling predicate, which also supplies the
// spin of the step.
struct StepTable {
    Partition bound;
    int r = 1;
    std::vector<Partition> bound_comps;
    std::map<Partition, std::vector<std::pair<Partition, long long>>> memo;

    StepTable(Partition bound_, int r_) : bound(std::move(bound_)), r(r_) {
        bound_comps = r_quotient(bound, r);
    }

    const std::vector<std::pair<Partition, long long>>& steps(const Partition& from) {
        auto it = memo.find(from);
        if (it != memo.end()) return it->second;
        std::vector<std::pair<Partition, long long>> out;
        std::vector<Partition> from_comps = r_quotient(from, r);
        std::vector<Partition> tuple(static_cast<std::size_t>(r));
        std::function<void(int)> rec = [&](int i) {
            if (i == r) {
                Partition target = from_core_and_quotient(Partition(), tuple, r);
                auto info = horizontal_strip_tiling(SkewShape(target, from), r);
                if (info) out.emplace_back(std::move(target), info->spin2);
                return;
            }
            strip_extensions(from_comps[static_cast<std::size_t>(i)],
                             bound_comps[static_cast<std::size_t>(i)], [&](const Partition& comp) {
                                 tuple[static_cast<std::size_t>(i)] = comp;
                                 rec(i + 1);
                             });
        };
        rec(0);
        std::sort(out.begin(), out.end());
        return memo.emplace(from, std::move(out)).first->second;
    }
};

}  // namespace

std::vector<RibbonTableau> enumerate_ribbon_tableaux(const Partition& shape, int r, int max_entry) {
    if (r < 1) throw domain_error("r must be >= 1");
    if (max_entry < 0) throw domain_error("max_entry must be nonnegative");
    if (!r_core(shape, r).empty())
        throw domain_error("enumerate_ribbon_tableaux: shape must have empty r-core");

    StepTable table(shape, r);

    std::vector<RibbonTableau> out;
    std::vector<Partition> chain{Partition()};
    std::vector<long long> spins;
    std::function<void(int)> rec = [&](int letter) {
        if (letter == max_entry) {
            if (!(chain.back() == shape)) return;
            RibbonTableau t;
            t.chain = chain;
            t.weight.resize(static_cast<std::size_t>(max_entry));
            t.spin2 = 0;
            for (int i = 0; i < max_entry; ++i) {
                t.weight[static_cast<std::size_t>(i)] =
                    (chain[static_cast<std::size_t>(i + 1)].size() - chain[static_cast<std::size_t>(i)].size()) / r;
                t.spin2 += spins[static_cast<std::size_t>(i)];
            }
            out.push_back(std::move(t));
            return;
        }
        for (const auto& [next, s2] : table.steps(chain.back())) {
            chain.push_back(next);
            spins.push_back(s2);
            rec(letter + 1);
            spins.pop_back();
            chain.pop_back();
        }
    };
    if (max_entry == 0) {
        if (shape.empty()) out.push_back(RibbonTableau{{Partition()}, {}, 0});
        return out;
    }
    rec(0);
    return out;
}

long long max_spin2(const Partition& shape, int r) {
    if (r < 1) throw domain_error("r must be >= 1");
    if (!r_core(shape, r).empty()) throw domain_error("max_spin2: shape must have empty r-core");

    std::map<Partition, long long> memo;
    std::function<long long(const Partition&)> best = [&](const Partition& nu) -> long long {
        if (nu.empty()) return 0;
        auto it = memo.find(nu);
        if (it != memo.end()) return it->second;
        int n = nu.length();
        auto betas = beta_numbers(nu, n).values();
        std::set<long long> occupied(betas.begin(), betas.end());
        long long best_spin = -1;
        for (long long b : betas) {
            long long target = b - r;
            if (target < 0 || occupied.count(target)) continue;
            long long between = 0;
            for (long long x : betas)
                if (x > target && x < b) ++between;
            std::vector<long long> next(betas.begin(), betas.end());
            for (auto& x : next)
                if (x == b) x = target;
            std::sort(next.rbegin(), next.rend());
            Partition removed = partition_from_betas(BetaSequence(std::move(next)));
            best_spin = std::max(best_spin, between + best(removed));
        }
        if (best_spin < 0) throw domain_error("max_spin2: no removable ribbon");  // unreachable: empty core
        memo.emplace(nu, best_spin);
        return best_spin;
    };
    return best(shape);
}

std::map<std::vector<int>, LaurentPoly> llt_weight_map(const Partition& shape, int r, int max_entry) {
    std::map<std::vector<int>, LaurentPoly> out;
    for (const auto& t : enumerate_ribbon_tableaux(shape, r, max_entry))
        out[t.weight] += LaurentPoly::q_power(HalfInt::halves(t.spin2));
    return out;
}

SchurExpansion llt_cospin(const Partition& shape, int r, int n) {
    if (n < 1) throw domain_error("llt_cospin: n must be >= 1");
    if (!r_core(shape, r).empty()) throw domain_error("llt_cospin: shape must have empty r-core");
    long long s2 = max_spin2(shape, r);

    DominantWeightMap dom;
    for (const auto& [w, poly] : llt_weight_map(shape, r, n)) {
        bool dominant = true;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] > w[i - 1]) dominant = false;
        if (!dominant) continue;
        LaurentPoly cospin = bar_reverse(poly, HalfInt::halves(s2));
        if (!cospin.exponents_whole() || !cospin.exponents_nonnegative())
            throw domain_error("llt_cospin: cospin exponents not nonnegative integers");
        dom.emplace(Partition(std::vector<int>(w.begin(), w.end())), std::move(cospin));
    }
    return monomial_to_schur(dom, n);
}

LaurentPoly q_lr_cospin(const Partition& nu, const std::vector<Partition>& factors, int n) {
    int r = static_cast<int>(factors.size());
    if (r < 1) throw domain_error("q_lr_cospin: at least one factor");
    Partition shape = from_core_and_quotient(Partition(), factors, r);
    return llt_cospin(shape, r, n).coeff(nu);
}

SchurExpansion h_function(const Partition& mu, int r, int n) {
    if (r < 1) throw domain_error("h_function: r must be >= 1");
    std::vector<int> scaled(mu.parts());
    for (auto& p : scaled) p *= r;
    Partition shape((std::vector<int>(scaled)));
    SchurExpansion cospin = llt_cospin(shape, r, n);
    long long s2 = shape.empty() ? 0 : max_spin2(shape, r);
    SchurExpansion out;
    for (const auto& [k, v] : cospin.entries()) out.add(k, bar_reverse(v, HalfInt::halves(s2)));
    return out;
}

SchurExpansion modified_hall_littlewood(const Partition& mu, int n) {
    if (n < 1) throw domain_error("modified_hall_littlewood: n must be >= 1");
    SchurExpansion out;
    std::vector<int> acc;
    std::function<void(int, int, int)> gen = [&](int left, int max_len, int max_part) {
        if (left == 0) {
            Partition lambda((std::vector<int>(acc)));
            out.add(lambda, kostka_foulkes(lambda, mu));
            return;
        }
        if (max_len == 0) return;
        for (int p = std::min(left, max_part); p >= 1; --p) {
            acc.push_back(p);
            gen(left - p, max_len - 1, p);
            acc.pop_back();
        }
    };
    gen(mu.size(), n, mu.size() == 0 ? 1 : mu.size());
    return out;
}

}  // namespace ribbonfusion
