#include "ribbonfusion/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ribbonfusion {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(const std::string& text) {
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    if (s.empty() || s == "0") return Partition();
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw std::invalid_argument("bad partition syntax: '" + text + "'");
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition syntax: '" + text + "'");
        }
        if (pos != item.size()) throw std::invalid_argument("bad partition syntax: '" + text + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 0) throw std::invalid_argument("negative row index");
    return i < length() ? parts_[static_cast<std::size_t>(i)] : 0;
}

std::vector<int> Partition::padded(int n) const {
    if (n < length()) throw domain_error("padding length smaller than the partition length");
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    std::copy(parts_.begin(), parts_.end(), out.begin());
    return out;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> out(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

std::string Partition::str() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::vector<Partition> parse_partition_tuple(const std::string& text) {
    std::vector<Partition> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ';')) out.push_back(Partition::parse(item));
    if (out.empty()) throw std::invalid_argument("empty partition tuple");
    return out;
}

std::string partition_tuple_str(const std::vector<Partition>& tuple) {
    std::string out;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (i) out += ";";
        out += tuple[i].str();
    }
    return out;
}

SkewShape::SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
    if (!outer.contains(inner)) throw domain_error("skew shape: inner not contained in outer");
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < outer.length(); ++i)
        for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) out.emplace_back(i + 1, j);
    return out;
}

BetaSequence::BetaSequence(std::vector<long long> betas) : betas_(std::move(betas)) {
    for (std::size_t i = 0; i < betas_.size(); ++i) {
        if (betas_[i] < 0) throw domain_error("beta numbers must be nonnegative");
        if (i > 0 && betas_[i] >= betas_[i - 1])
            throw domain_error("beta numbers must be strictly decreasing");
    }
}

BetaSequence beta_numbers(const Partition& lambda, int n) {
    if (n < lambda.length()) throw domain_error("beta_numbers: n smaller than the partition length");
    std::vector<long long> betas(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) betas[static_cast<std::size_t>(i)] = lambda.part(i) + n - 1 - i;
    return BetaSequence(std::move(betas));
}

Partition partition_from_betas(const BetaSequence& betas) {
    const auto& b = betas.values();
    int n = betas.length();
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        parts[static_cast<std::size_t>(i)] = static_cast<int>(b[static_cast<std::size_t>(i)] - (n - 1 - i));
    return Partition(std::move(parts));
}

Ribbon::Ribbon(std::vector<std::pair<int, int>> cells) : cells_(std::move(cells)) {
    if (cells_.empty()) throw domain_error("ribbon: no cells");
    auto content = [](const std::pair<int, int>& c) { return c.second - c.first; };
    std::sort(cells_.begin(), cells_.end(),
              [&](const auto& a, const auto& b) { return content(a) > content(b); });
    for (std::size_t i = 0; i + 1 < cells_.size(); ++i) {
        const auto& hi = cells_[i];
        const auto& lo = cells_[i + 1];
        if (content(hi) != content(lo) + 1) throw domain_error("ribbon: cells not on consecutive diagonals");
        bool left = lo.first == hi.first && lo.second == hi.second - 1;
        bool below = lo.first == hi.first + 1 && lo.second == hi.second;
        if (!left && !below) throw domain_error("ribbon: cells not connected");
    }
    // A path of left/down steps on consecutive diagonals can't close a 2x2 square.
}

int Ribbon::height() const {
    int lo = cells_.front().first, hi = cells_.front().first;
    for (const auto& c : cells_) {
        lo = std::min(lo, c.first);
        hi = std::max(hi, c.first);
    }
    return hi - lo + 1;
}

std::pair<int, int> Ribbon::root() const { return cells_.front(); }

long long Ribbon::root_position() const { return cells_.front().second - cells_.front().first; }

namespace {

// r-abacus with n beads, n a multiple of r: runner i holds the beta numbers
// congruent to i mod r, recorded by their ranks k (beta = r*k + i).
struct Abacus {
    int r = 1;
    int n = 0;
    std::vector<std::vector<long long>> runners;  // each strictly decreasing

    Abacus(const Partition& lambda, int r_) : r(r_) {
        n = ((lambda.length() + r - 1) / r) * r;
        runners.assign(static_cast<std::size_t>(r), {});
        if (n == 0) return;
        BetaSequence betas = beta_numbers(lambda, n);
        for (long long b : betas.values()) {
            runners[static_cast<std::size_t>(b % r)].push_back(b / r);
        }
        for (auto& ks : runners) std::sort(ks.rbegin(), ks.rend());
    }
};

Partition partition_from_runner(const std::vector<long long>& ks) {
    int m = static_cast<int>(ks.size());
    std::vector<int> parts(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        parts[static_cast<std::size_t>(i)] = static_cast<int>(ks[static_cast<std::size_t>(i)] - (m - 1 - i));
    return Partition(std::move(parts));
}

}  // namespace

bool is_r_core(const Partition& lambda, int r) { return r_core(lambda, r) == lambda; }

Partition r_core(const Partition& lambda, int r) {
    if (r < 1) throw domain_error("r must be >= 1");
    Abacus ab(lambda, r);
    std::vector<long long> betas;
    for (int i = 0; i < r; ++i) {
        const auto& ks = ab.runners[static_cast<std::size_t>(i)];
        // Slide every bead down: ranks become m-1, ..., 0.
        for (std::size_t j = 0; j < ks.size(); ++j)
            betas.push_back(static_cast<long long>(r) * (static_cast<long long>(ks.size()) - 1 - j) + i);
    }
    std::sort(betas.rbegin(), betas.rend());
    if (betas.empty()) return Partition();
    return partition_from_betas(BetaSequence(std::move(betas)));
}

std::vector<Partition> r_quotient(const Partition& lambda, int r) {
    if (r < 1) throw domain_error("r must be >= 1");
    Abacus ab(lambda, r);
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) out.push_back(partition_from_runner(ab.runners[static_cast<std::size_t>(i)]));
    return out;
}

Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quotient, int r) {
    if (r < 1) throw domain_error("r must be >= 1");
    if (static_cast<int>(quotient.size()) != r)
        throw domain_error("quotient tuple must have exactly r components");
    if (!is_r_core(core, r)) throw domain_error("from_core_and_quotient: core is not an r-core");

    Abacus ab(core, r);
    // Grow the padding (in steps of r, which leaves the convention intact)
    // until every runner has at least as many beads as its component has parts.
    int deficit = 0;
    for (int i = 0; i < r; ++i)
        deficit = std::max(deficit, quotient[static_cast<std::size_t>(i)].length() -
                                        static_cast<int>(ab.runners[static_cast<std::size_t>(i)].size()));
    if (deficit > 0) {
        // Re-read the abacus at a larger padding; growing n by multiples of r
        // leaves the component convention intact.
        int want_n = ab.n + deficit * r;
        BetaSequence grown = beta_numbers(core, want_n);
        ab.runners.assign(static_cast<std::size_t>(r), {});
        for (long long b : grown.values())
            ab.runners[static_cast<std::size_t>(b % r)].push_back(b / r);
        for (auto& ks : ab.runners) std::sort(ks.rbegin(), ks.rend());
        ab.n = want_n;
    }

    std::vector<long long> betas;
    for (int i = 0; i < r; ++i) {
        int m = static_cast<int>(ab.runners[static_cast<std::size_t>(i)].size());
        const Partition& comp = quotient[static_cast<std::size_t>(i)];
        for (int j = 0; j < m; ++j) {
            long long k = comp.part(j) + (m - 1 - j);
            betas.push_back(static_cast<long long>(r) * k + i);
        }
    }
    std::sort(betas.rbegin(), betas.rend());
    if (betas.empty()) return Partition();
    return partition_from_betas(BetaSequence(std::move(betas)));
}

}  // namespace ribbonfusion
