#include "ribbonfusion/laurent.hpp"

#include <json.hpp>

#include <sstream>
#include <vector>

namespace ribbonfusion {

long long HalfInt::whole_value() const {
    if (twice % 2 != 0) throw domain_error("exponent " + str() + " is not a whole number");
    return twice / 2;
}

std::string HalfInt::str() const {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

LaurentPoly LaurentPoly::constant(BigInt c) {
    LaurentPoly p;
    p.add_term(0, c);
    return p;
}

LaurentPoly LaurentPoly::term(BigInt c, HalfInt e) {
    LaurentPoly p;
    p.add_term(e.twice, c);
    return p;
}

void LaurentPoly::add_term(long long twice_exp, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(twice_exp);
    if (it == terms_.end()) {
        terms_.emplace(twice_exp, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt LaurentPoly::coeff(HalfInt e) const {
    auto it = terms_.find(e.twice);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt LaurentPoly::eval_one() const {
    BigInt s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

bool LaurentPoly::has_negative_coeff() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return true;
    return false;
}

bool LaurentPoly::exponents_whole() const {
    for (const auto& [e, c] : terms_)
        if (e % 2 != 0) return false;
    return true;
}

bool LaurentPoly::exponents_nonnegative() const {
    return terms_.empty() || terms_.begin()->first >= 0;
}

HalfInt LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw domain_error("zero polynomial has no exponents");
    return HalfInt{terms_.begin()->first};
}

HalfInt LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw domain_error("zero polynomial has no exponents");
    return HalfInt{terms_.rbegin()->first};
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    LaurentPoly p;
    if (c == 0) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

LaurentPoly LaurentPoly::shifted(HalfInt d) const {
    LaurentPoly p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e + d.twice, v);
    return p;
}

LaurentPoly LaurentPoly::truncated_below(HalfInt order) const {
    LaurentPoly p;
    for (const auto& [e, v] : terms_) {
        if (e < order.twice) p.terms_.emplace(e, v);
    }
    return p;
}

namespace {

// "q", "q^7", "q^(9/2)", "q^(-3)"
std::string q_part(long long twice_exp) {
    if (twice_exp == 2) return "q";
    HalfInt e{twice_exp};
    if (e.is_whole() && e.whole_value() > 0) return "q^" + e.str();
    return "q^(" + e.str() + ")";
}

// Term with positive coefficient, no sign.
std::string unsigned_term(const BigInt& c, long long twice_exp) {
    if (twice_exp == 0) return c.str();
    if (c == 1) return q_part(twice_exp);
    return c.str() + q_part(twice_exp);
}

}  // namespace

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            out += (c < 0) ? "-" + unsigned_term(-c, e) : unsigned_term(c, e);
            first = false;
        } else {
            out += (c < 0) ? "-" + unsigned_term(-c, e) : "+" + unsigned_term(c, e);
        }
    }
    return out;
}

std::string LaurentPoly::json_str() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [e, c] : terms_) j[std::to_string(e)] = c.str();
    return j.dump();
}

LaurentPoly bar_reverse(const LaurentPoly& p, HalfInt d) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) out += LaurentPoly::term(c, HalfInt{d.twice - e});
    return out;
}

LaurentPoly qbinomial(long long m, long long k) {
    if (m < 0) throw domain_error("qbinomial: m must be nonnegative");
    if (k < 0 || k > m) return LaurentPoly::zero();
    k = std::min(k, m - k);
    // Pascal row by row: [i j] = [i-1 j-1] + q^j [i-1 j].
    std::vector<LaurentPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = LaurentPoly::one();
    for (long long i = 1; i <= m; ++i) {
        long long jmax = std::min(i, k);
        for (long long j = jmax; j >= 1; --j) {
            LaurentPoly v = row[static_cast<std::size_t>(j - 1)];
            if (j < i) v += row[static_cast<std::size_t>(j)].shifted(HalfInt::whole(j));
            row[static_cast<std::size_t>(j)] = std::move(v);
        }
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace ribbonfusion
