#include "ribbonfusion/tableaux.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>

namespace ribbonfusion {

SemistandardTableau::SemistandardTableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    const Partition& outer = shape_.outer;
    const Partition& inner = shape_.inner;
    if (static_cast<int>(rows_.size()) != outer.length())
        throw domain_error("tableau: wrong number of rows");
    for (int i = 0; i < outer.length(); ++i) {
        const auto& row = rows_[static_cast<std::size_t>(i)];
        int lo = inner.part(i), hi = outer.part(i);
        if (static_cast<int>(row.size()) != hi - lo) throw domain_error("tableau: wrong row length");
        for (int j = 0; j < hi - lo; ++j) {
            int v = row[static_cast<std::size_t>(j)];
            if (v < 1) throw domain_error("tableau: entries must be positive");
            if (j > 0 && v < row[static_cast<std::size_t>(j - 1)])
                throw domain_error("tableau: rows must weakly increase");
            int col = lo + j + 1;  // 1-based column of this entry
            if (i > 0 && col > inner.part(i - 1) && col <= outer.part(i - 1)) {
                int above = rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(col - inner.part(i - 1) - 1)];
                if (v <= above) throw domain_error("tableau: columns must strictly increase");
            }
        }
    }
}

int SemistandardTableau::max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
        for (int v : row) m = std::max(m, v);
    return m;
}

std::vector<int> SemistandardTableau::weight() const {
    std::vector<int> w(static_cast<std::size_t>(max_entry()), 0);
    for (const auto& row : rows_)
        for (int v : row) ++w[static_cast<std::size_t>(v - 1)];
    return w;
}

namespace {

// Fills the skew shape cell by cell, row-major; weight_budget (if given)
// bounds the available multiplicity of each letter.
void fill_ssyt(const SkewShape& shape, int max_entry, std::vector<int>* weight_budget,
               std::vector<std::vector<int>>& rows, int i, int j,
               const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    const Partition& outer = shape.outer;
    const Partition& inner = shape.inner;
    if (i == outer.length()) {
        emit(rows);
        return;
    }
    int lo = inner.part(i), hi = outer.part(i);
    if (j == hi - lo) {
        fill_ssyt(shape, max_entry, weight_budget, rows, i + 1, 0, emit);
        return;
    }
    int minv = 1;
    if (j > 0) minv = std::max(minv, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]);
    int col = lo + j + 1;
    if (i > 0 && col > inner.part(i - 1) && col <= outer.part(i - 1)) {
        int above = rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(col - inner.part(i - 1) - 1)];
        minv = std::max(minv, above + 1);
    }
    for (int v = minv; v <= max_entry; ++v) {
        if (weight_budget && (*weight_budget)[static_cast<std::size_t>(v - 1)] == 0) continue;
        if (weight_budget) --(*weight_budget)[static_cast<std::size_t>(v - 1)];
        rows[static_cast<std::size_t>(i)].push_back(v);
        fill_ssyt(shape, max_entry, weight_budget, rows, i, j + 1, emit);
        rows[static_cast<std::size_t>(i)].pop_back();
        if (weight_budget) ++(*weight_budget)[static_cast<std::size_t>(v - 1)];
    }
}

void for_each_ssyt(const SkewShape& shape, int max_entry, std::vector<int>* weight_budget,
                   const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.outer.length()));
    fill_ssyt(shape, max_entry, weight_budget, rows, 0, 0, emit);
}

}  // namespace

std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
    if (max_entry < 0) throw domain_error("max_entry must be nonnegative");
    std::vector<SemistandardTableau> out;
    for_each_ssyt(shape, max_entry, nullptr,
                  [&](const std::vector<std::vector<int>>& rows) { out.emplace_back(shape, rows); });
    return out;
}

namespace {

// Inner partitions kappa <= lambda with lambda/kappa a horizontal strip of
// the given size: lambda_{i+1} <= kappa_i <= lambda_i.
void strip_predecessors(const Partition& lambda, int strip,
                        const std::function<void(const Partition&)>& emit) {
    int rows = lambda.length();
    std::vector<int> kappa(static_cast<std::size_t>(rows));
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == rows) {
            if (left == 0) emit(Partition(std::vector<int>(kappa.begin(), kappa.end())));
            return;
        }
        int hi = lambda.part(i);
        int lo = lambda.part(i + 1);
        for (int v = hi; v >= lo; --v) {
            int removed = hi - v;
            if (removed > left) break;
            kappa[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - removed);
        }
    };
    rec(0, strip);
}

}  // namespace

BigInt kostka_number(const Partition& lambda, const std::vector<int>& mu) {
    int total = std::accumulate(mu.begin(), mu.end(), 0);
    for (int v : mu)
        if (v < 0) throw domain_error("kostka_number: weight entries must be nonnegative");
    if (total != lambda.size()) throw domain_error("kostka_number: |lambda| != |mu|");

    // Chains of horizontal strips, one per letter, counted back to front.
    std::map<std::pair<Partition, int>, BigInt> memo;
    std::function<BigInt(const Partition&, int)> count = [&](const Partition& shape, int k) -> BigInt {
        if (k == 0) return shape.empty() ? 1 : 0;
        auto key = std::make_pair(shape, k);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        BigInt total_count = 0;
        strip_predecessors(shape, mu[static_cast<std::size_t>(k - 1)], [&](const Partition& kappa) {
            total_count += count(kappa, k - 1);
        });
        memo.emplace(key, total_count);
        return total_count;
    };
    return count(lambda, static_cast<int>(mu.size()));
}

SchurExpansion::SchurExpansion(std::initializer_list<std::pair<Partition, LaurentPoly>> items) {
    for (const auto& [k, v] : items) add(k, v);
}

void SchurExpansion::add(const Partition& key, const LaurentPoly& value) {
    if (value.is_zero()) return;
    auto it = map_.find(key);
    if (it == map_.end()) {
        map_.emplace(key, value);
    } else {
        it->second += value;
        if (it->second.is_zero()) map_.erase(it);
    }
}

LaurentPoly SchurExpansion::coeff(const Partition& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? LaurentPoly::zero() : it->second;
}

SchurExpansion SchurExpansion::scaled(const LaurentPoly& c) const {
    SchurExpansion out;
    for (const auto& [k, v] : map_) out.add(k, v * c);
    return out;
}

std::map<Partition, BigInt, std::greater<Partition>> SchurExpansion::eval_one() const {
    std::map<Partition, BigInt, std::greater<Partition>> out;
    for (const auto& [k, v] : map_) {
        BigInt c = v.eval_one();
        if (c != 0) out.emplace(k, c);
    }
    return out;
}

std::string SchurExpansion::str() const {
    if (map_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, v] : map_) {
        std::string coeff;
        bool negated = false;
        if (v == LaurentPoly::one()) {
            coeff = "";
        } else if (v.term_count() == 1) {
            const auto& [e, c] = *v.terms().begin();
            if (c < 0) {
                negated = true;
                LaurentPoly pos = -v;
                coeff = pos == LaurentPoly::one() ? "" : pos.str() + "*";
            } else {
                coeff = v.str() + "*";
            }
        } else {
            coeff = "(" + v.str() + ")*";
        }
        std::string term = coeff + "s[" + k.str() + "]";
        if (first) {
            out += (negated ? "-" : "") + term;
            first = false;
        } else {
            out += (negated ? " - " : " + ") + term;
        }
    }
    return out;
}

std::string SchurExpansion::json_str() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : map_) j[k.str()] = nlohmann::ordered_json::parse(v.json_str());
    return j.dump();
}

namespace {

// All partitions of n with at most max_len parts, descending lex.
void partitions_of(int n, int max_len, int max_part, std::vector<int>& acc,
                   const std::function<void(const Partition&)>& emit) {
    if (n == 0) {
        emit(Partition(std::vector<int>(acc)));
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_of(n - p, max_len - 1, p, acc, emit);
        acc.pop_back();
    }
}

bool dominates(const Partition& a, const Partition& b) {
    // a >= b in dominance order; assumes |a| == |b|.
    int pa = 0, pb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa < pb) return false;
    }
    return true;
}

}  // namespace

SchurExpansion monomial_to_schur(const DominantWeightMap& m, int n) {
    DominantWeightMap work;
    for (const auto& [k, v] : m) {
        if (v.is_zero()) continue;
        if (k.length() > n)
            throw domain_error("monomial_to_schur: key longer than the variable count");
        work.emplace(k, v);
    }
    SchurExpansion out;
    while (!work.empty()) {
        // Lex-max key is dominance-maximal among the remaining ones.
        Partition lambda = work.begin()->first;
        LaurentPoly c = work.begin()->second;
        out.add(lambda, c);
        std::vector<int> acc;
        partitions_of(lambda.size(), n, lambda.size() == 0 ? 1 : lambda.size(), acc,
                      [&](const Partition& mu) {
                          if (!dominates(lambda, mu)) return;
                          BigInt k = kostka_number(lambda, mu.padded(mu.length()));
                          if (k == 0) return;
                          auto it = work.find(mu);
                          LaurentPoly delta = c.scaled(k);
                          if (it == work.end()) {
                              work.emplace(mu, -delta);
                          } else {
                              it->second -= delta;
                          }
                          it = work.find(mu);
                          if (it->second.is_zero()) work.erase(it);
                      });
        work.erase(lambda);  // no-op unless K_{lambda,lambda} handling left residue
    }
    return out;
}

namespace {

// Pieri step: multiply by the complete homogeneous h_k in n variables.
SchurExpansion pieri_multiply(const SchurExpansion& e, int k, int n) {
    if (k == 0) return e;
    SchurExpansion out;
    for (const auto& [kappa, c] : e.entries()) {
        // lambda runs over partitions obtained from kappa by adding a
        // horizontal strip of k cells, with at most n rows.
        int rows = std::min(n, kappa.length() + 1);
        std::vector<int> lambda(static_cast<std::size_t>(rows));
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == rows) {
                if (left == 0) {
                    std::vector<int> parts(lambda.begin(), lambda.end());
                    out.add(Partition(std::move(parts)), c);
                }
                return;
            }
            int lo = kappa.part(i);
            int hi = (i == 0) ? kappa.part(0) + left : std::min(kappa.part(i - 1), kappa.part(i) + left);
            for (int v = lo; v <= hi; ++v) {
                if (v - lo > left) break;
                lambda[static_cast<std::size_t>(i)] = v;
                rec(i + 1, left - (v - lo));
            }
        };
        rec(0, k);
    }
    return out;
}

SchurExpansion multiply_by_schur(const SchurExpansion& e, const Partition& nu, int n) {
    if (nu.empty()) return e;
    if (nu.length() > n) return SchurExpansion();  // s_nu vanishes in n variables
    int m = nu.length();
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    SchurExpansion out;
    // Jacobi-Trudi: s_nu = det(h_{nu_i - i + j}); each monomial of the
    // determinant is an iterated Pieri chain.
    do {
        int sign = 1;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) sign = -sign;
        std::vector<int> ks;
        bool dead = false;
        for (int i = 0; i < m && !dead; ++i) {
            int k = nu.part(i) - i + perm[static_cast<std::size_t>(i)];
            if (k < 0) dead = true;
            else ks.push_back(k);
        }
        if (!dead) {
            SchurExpansion term = e;
            for (int k : ks) term = pieri_multiply(term, k, n);
            for (const auto& [key, v] : term.entries())
                out.add(key, sign > 0 ? v : -v);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace

SchurExpansion schur_product(const std::vector<Partition>& factors, int n) {
    if (n < 1) throw domain_error("schur_product: n must be >= 1");
    SchurExpansion acc;
    acc.add(Partition(), LaurentPoly::one());
    for (const auto& f : factors) acc = multiply_by_schur(acc, f, n);
    return acc;
}

long long charge_of_word(const std::vector<int>& word) {
    // Content must be a partition for the statistic to be defined.
    int maxletter = 0;
    for (int v : word) {
        if (v < 1) throw domain_error("charge: letters must be positive");
        maxletter = std::max(maxletter, v);
    }
    std::vector<int> mult(static_cast<std::size_t>(maxletter), 0);
    for (int v : word) ++mult[static_cast<std::size_t>(v - 1)];
    for (std::size_t i = 1; i < mult.size(); ++i)
        if (mult[i] > mult[i - 1]) throw domain_error("charge: content is not a partition");

    std::vector<bool> active(word.size(), true);
    std::size_t remaining = word.size();
    long long total = 0;
    std::vector<int> remaining_mult = mult;

    while (remaining > 0) {
        // Extract one standard subword, scanning cyclically right to left.
        std::vector<std::size_t> chosen;
        int t = 1;
        long long scan = static_cast<long long>(word.size()) - 1;
        while (remaining_mult.size() >= static_cast<std::size_t>(t) &&
               remaining_mult[static_cast<std::size_t>(t - 1)] > 0) {
            long long pos = -1;
            for (std::size_t step = 0; step < word.size(); ++step) {
                long long p = scan - static_cast<long long>(step);
                while (p < 0) p += static_cast<long long>(word.size());
                if (active[static_cast<std::size_t>(p)] && word[static_cast<std::size_t>(p)] == t) {
                    pos = p;
                    break;
                }
            }
            chosen.push_back(static_cast<std::size_t>(pos));
            active[static_cast<std::size_t>(pos)] = false;
            --remaining_mult[static_cast<std::size_t>(t - 1)];
            --remaining;
            scan = pos - 1;
            ++t;
        }
        // Charge of the extracted standard subword: the index starts at 0 on
        // the letter 1 and increases exactly when the next letter sits to the
        // right of the previous one.
        std::sort(chosen.begin(), chosen.end());
        std::vector<std::size_t> pos_of(static_cast<std::size_t>(t), 0);
        for (std::size_t idx : chosen) pos_of[static_cast<std::size_t>(word[idx])] = idx;
        long long index = 0;
        for (int k = 1; k + 1 < t; ++k) {
            if (pos_of[static_cast<std::size_t>(k + 1)] > pos_of[static_cast<std::size_t>(k)]) ++index;
            total += index;
        }
    }
    return total;
}

long long charge(const SemistandardTableau& t) {
    std::vector<int> word;
    const auto& rows = t.rows();
    for (auto rit = rows.rbegin(); rit != rows.rend(); ++rit)
        for (int v : *rit) word.push_back(v);
    if (word.empty()) return 0;
    return charge_of_word(word);
}

LaurentPoly kostka_foulkes(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw domain_error("kostka_foulkes: |lambda| != |mu|");
    LaurentPoly out;
    SkewShape shape(lambda, Partition());
    std::vector<int> budget = mu.parts();
    for_each_ssyt(shape, mu.length(), &budget, [&](const std::vector<std::vector<int>>& rows) {
        SemistandardTableau t(shape, rows);
        out += LaurentPoly::q_power(HalfInt::whole(charge(t)));
    });
    return out;
}

}  // namespace ribbonfusion
