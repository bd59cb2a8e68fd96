#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <random>

#include "ribbonfusion/laurent.hpp"
#include "support/oracles.hpp"

using namespace ribbonfusion;

namespace {

LaurentPoly q(long long e) { return LaurentPoly::q_power(HalfInt::whole(e)); }

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), exps(-6, 6), coeffs(-9, 9);
    LaurentPoly p;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) p += LaurentPoly::term(coeffs(rng), HalfInt::halves(exps(rng)));
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic on pinned examples") {
    CHECK((q(1) + q(2)) + (-q(2)) == q(1));
    CHECK((LaurentPoly::one() + q(1)) * (LaurentPoly::one() + q(1)) ==
          LaurentPoly::one() + q(1).scaled(2) + q(2));
    CHECK(LaurentPoly::q_power(HalfInt::halves(1)) * LaurentPoly::q_power(HalfInt::halves(1)) == q(1));
}

TEST_CASE("bar_reverse") {
    CHECK(bar_reverse(LaurentPoly::one() + q(1), HalfInt::whole(1)) == LaurentPoly::one() + q(1));
    CHECK(bar_reverse(q(2), HalfInt::whole(2)) == LaurentPoly::one());
    LaurentPoly p = LaurentPoly::one() + q(1).scaled(2) + q(3);
    LaurentPoly want = q(3) + q(2).scaled(2) + LaurentPoly::one();
    CHECK(bar_reverse(p, HalfInt::whole(3)) == want);
}

TEST_CASE("qbinomial golden and degenerate cases") {
    for (int m = 0; m <= 6; ++m) CHECK(qbinomial(m, 0) == LaurentPoly::one());
    CHECK(qbinomial(4, 2) == LaurentPoly::one() + q(1) + q(2).scaled(2) + q(3) + q(4));
    CHECK(qbinomial(5, 2) == qbinomial(5, 3));
    CHECK(qbinomial(4, -1).is_zero());
    CHECK(qbinomial(4, 5).is_zero());
}

TEST_CASE("qbinomial equals the box-partition generating function") {
    for (int m = 0; m <= 9; ++m)
        for (int k = 0; k <= m; ++k) CHECK(qbinomial(m, k) == oracles::qbinomial_by_boxes(m, k));
}

TEST_CASE("qbinomial specializes to the binomial coefficient") {
    for (int m = 0; m <= 10; ++m) {
        BigInt binom = 1;
        for (int k = 0; k <= m; ++k) {
            CHECK(qbinomial(m, k).eval_one() == binom);
            binom = binom * (m - k) / (k + 1);
        }
    }
}

TEST_CASE("qbinomial is palindromic") {
    for (int m = 0; m <= 9; ++m)
        for (int k = 0; k <= m; ++k) {
            LaurentPoly b = qbinomial(m, k);
            CHECK(bar_reverse(b, HalfInt::whole(static_cast<long long>(k) * (m - k))) == b);
        }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20260810);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("canonical text form") {
    CHECK(LaurentPoly::zero().str() == "0");
    CHECK((q(6) + q(7)).str() == "q^6+q^7");
    CHECK((LaurentPoly::one() + q(1).scaled(3) + q(2).scaled(3) + q(3)).str() == "1+3q+3q^2+q^3");
    CHECK(LaurentPoly::q_power(HalfInt::halves(9)).str() == "q^(9/2)");
    CHECK(LaurentPoly::q_power(HalfInt::halves(-9)).str() == "q^(-9/2)");
    CHECK(LaurentPoly::q_power(HalfInt::whole(-3)).str() == "q^(-3)");
    CHECK((LaurentPoly::one() - q(1)).str() == "1-q");
    CHECK((-LaurentPoly::one() + q(2)).str() == "-1+q^2");
}

TEST_CASE("json form with doubled exponent keys") {
    CHECK((q(6) + q(7)).json_str() == R"({"12":"1","14":"1"})");
    std::string s = (q(6) + q(7).scaled(-2) + LaurentPoly::q_power(HalfInt::halves(-1))).json_str();
    CHECK(nlohmann::ordered_json::parse(s).dump() == s);
}
