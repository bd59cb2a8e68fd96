#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ribbonfusion/llt.hpp"
#include "support/oracles.hpp"

using namespace ribbonfusion;

namespace {

LaurentPoly qp(long long e) { return LaurentPoly::q_power(HalfInt::whole(e)); }

}  // namespace

TEST_CASE("horizontal strip tiling basics") {
    for (int r = 1; r <= 5; ++r) {
        std::vector<int> column(static_cast<std::size_t>(r), 1);
        auto col = horizontal_strip_tiling(SkewShape(Partition(std::move(column)), Partition()), r);
        REQUIRE(col.has_value());
        CHECK(col->ribbons == 1);
        CHECK(col->spin2 == r - 1);

        auto row = horizontal_strip_tiling(SkewShape(Partition({r}), Partition()), r);
        REQUIRE(row.has_value());
        CHECK(row->ribbons == 1);
        CHECK(row->spin2 == 0);
    }
    CHECK_FALSE(horizontal_strip_tiling(SkewShape(Partition::parse("3,1"), Partition()), 3).has_value());
    auto empty = horizontal_strip_tiling(SkewShape(Partition::parse("2"), Partition::parse("2")), 2);
    REQUIRE(empty.has_value());
    CHECK(empty->ribbons == 0);

    // The 2x2 square: two raw domino tilings, one admissible one.
    auto square = horizontal_strip_tiling(SkewShape(Partition::parse("2,2"), Partition()), 2);
    REQUIRE(square.has_value());
    CHECK(square->ribbons == 2);
    CHECK(square->spin2 == 2);
    // A vertical pair of dominoes is not a horizontal strip.
    CHECK_FALSE(horizontal_strip_tiling(SkewShape(Partition::parse("1,1,1,1"), Partition()), 2).has_value());
}

TEST_CASE("strip predicate agrees with the quotient characterization") {
    std::mt19937 rng(29);
    int strips_seen = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        int r = 1 + static_cast<int>(rng() % 4);
        Partition outer = oracles::random_partition(rng, 14, 5);
        // Random inner shape contained in outer.
        std::vector<int> inner_parts;
        for (int i = 0; i < outer.length(); ++i) {
            int hi = std::min(outer.part(i), inner_parts.empty() ? outer.part(i) : inner_parts.back());
            inner_parts.push_back(static_cast<int>(rng() % (hi + 1)));
        }
        std::sort(inner_parts.rbegin(), inner_parts.rend());
        Partition inner{std::move(inner_parts)};
        if (!outer.contains(inner)) continue;

        bool via_cells = horizontal_strip_tiling(SkewShape(outer, inner), r).has_value();
        bool via_quotient =
            (outer.size() - inner.size()) % r == 0 && oracles::strip_by_quotient(outer, inner, r);
        CHECK(via_cells == via_quotient);
        if (via_cells) ++strips_seen;
    }
    CHECK(strips_seen > 50);  // the sample actually exercises both branches
}

TEST_CASE("ribbon tableau enumeration: pinned counts") {
    // One-row single ribbon.
    auto single = enumerate_ribbon_tableaux(Partition::parse("4"), 4, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0].weight == std::vector<int>{1});
    CHECK(single[0].spin2 == 0);

    // Count at max_entry 3 equals the number of triples of SSYT of shape
    // (2,1) with entries <= 3, i.e. 8^3.
    CHECK(enumerate_ribbon_tableaux(Partition::parse("6,6,6,3,3,3"), 3, 3).size() == 512);

    CHECK_THROWS_AS(enumerate_ribbon_tableaux(Partition::parse("3,1"), 3, 2), domain_error);
}

TEST_CASE("count equals the product over quotient components") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 2 + static_cast<int>(rng() % 2);
        std::vector<Partition> comps;
        for (int i = 0; i < r; ++i) comps.push_back(oracles::random_partition(rng, 3, 2));
        Partition shape = from_core_and_quotient(Partition(), comps, r);
        if (shape.size() > 14) continue;
        int max_entry = 1 + static_cast<int>(rng() % 3);
        std::size_t expect = 1;
        for (const auto& c : comps)
            expect *= enumerate_ssyt(SkewShape(c, Partition()), max_entry).size();
        CHECK(enumerate_ribbon_tableaux(shape, r, max_entry).size() == expect);
    }
}

TEST_CASE("the figure tableau of shape (8,7,6,6,1)") {
    auto tabs = enumerate_ribbon_tableaux(Partition::parse("8,7,6,6,1"), 4, 4);
    bool found = false;
    std::vector<int> want{3, 2, 1, 1};
    for (const auto& t : tabs)
        if (t.weight == want && t.spin2 == 9) found = true;
    CHECK(found);

    // Every enumerated tableau appears exactly once.
    std::set<std::vector<std::string>> seen;
    for (const auto& t : tabs) {
        std::vector<std::string> key;
        for (const auto& p : t.chain) key.push_back(p.str());
        CHECK(seen.insert(key).second);
    }
}

TEST_CASE("max spin") {
    CHECK(max_spin2(Partition::parse("1,1,1"), 3) == 2);
    CHECK(max_spin2(Partition::parse("3"), 3) == 0);
    CHECK(max_spin2(Partition::parse("2,2"), 2) == 2);

    std::mt19937 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 2 + static_cast<int>(rng() % 2);
        std::vector<Partition> comps;
        for (int i = 0; i < r; ++i) comps.push_back(oracles::random_partition(rng, 3, 2));
        Partition shape = from_core_and_quotient(Partition(), comps, r);
        if (shape.size() > 12 || shape.empty()) continue;
        long long brute = -1;
        for (const auto& t : enumerate_ribbon_tableaux(shape, r, shape.size() / r))
            brute = std::max(brute, t.spin2);
        CHECK(max_spin2(shape, r) == brute);
    }
}

TEST_CASE("cospin integrality") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        int r = 2 + static_cast<int>(rng() % 3);
        std::vector<Partition> comps;
        for (int i = 0; i < r; ++i) comps.push_back(oracles::random_partition(rng, 2, 2));
        Partition shape = from_core_and_quotient(Partition(), comps, r);
        if (shape.size() > 12 || shape.empty()) continue;
        long long s2 = max_spin2(shape, r);
        for (const auto& t : enumerate_ribbon_tableaux(shape, r, shape.size() / r)) {
            CHECK((s2 - t.spin2) % 2 == 0);
            CHECK(s2 >= t.spin2);
        }
    }
}

TEST_CASE("llt_cospin: the domino building block") {
    SchurExpansion g = llt_cospin(Partition::parse("2,2"), 2, 2);
    SchurExpansion want;
    want.add(Partition::parse("2"), LaurentPoly::one());
    want.add(Partition::parse("1,1"), qp(1));
    CHECK(g == want);

    // A single ribbon row expands to the Schur function of its quotient.
    SchurExpansion row = llt_cospin(Partition::parse("3"), 3, 2);
    SchurExpansion rowwant;
    rowwant.add(Partition::parse("1"), LaurentPoly::one());
    CHECK(row == rowwant);

    CHECK_THROWS_AS(llt_cospin(Partition::parse("3,1"), 3, 2), domain_error);
}

TEST_CASE("llt_cospin at q = 1 is the Schur product of the quotient") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 25; ++trial) {
        int r = 2 + static_cast<int>(rng() % 2);
        std::vector<Partition> comps;
        for (int i = 0; i < r; ++i) comps.push_back(oracles::random_partition(rng, 3, 2));
        Partition shape = from_core_and_quotient(Partition(), comps, r);
        if (shape.size() > 12) continue;
        int n = std::max(1, std::min(4, shape.size() / r));
        CHECK(llt_cospin(shape, r, n).eval_one() == schur_product(comps, n).eval_one());
    }
}

TEST_CASE("weight map symmetry") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 15; ++trial) {
        int r = 2 + static_cast<int>(rng() % 2);
        std::vector<Partition> comps;
        for (int i = 0; i < r; ++i) comps.push_back(oracles::random_partition(rng, 2, 2));
        Partition shape = from_core_and_quotient(Partition(), comps, r);
        if (shape.size() > 10 || shape.empty()) continue;
        int m = std::max(1, std::min(4, shape.size() / r));
        auto wm = llt_weight_map(shape, r, m);
        for (const auto& [w, poly] : wm) {
            std::vector<int> sorted = w;
            std::sort(sorted.rbegin(), sorted.rend());
            auto it = wm.find(sorted);
            REQUIRE(it != wm.end());
            CHECK(it->second == poly);
        }
    }
}

TEST_CASE("q_lr_cospin") {
    // Single factor: <s_nu, s_nu> = 1.
    CHECK(q_lr_cospin(Partition::parse("3,1"), {Partition::parse("3,1")}, 2) == LaurentPoly::one());
    // Worked value from the three-factor expansion.
    CHECK(q_lr_cospin(Partition::parse("3,2,2,2"),
                      {Partition::parse("2,1"), Partition::parse("2,1"), Partition::parse("2,1")},
                      4) == qp(5) + qp(6).scaled(2) + qp(7));

    // r = 2 coefficients are nonnegative (proved in the literature).
    std::mt19937 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Partition> comps{oracles::random_partition(rng, 4, 3),
                                     oracles::random_partition(rng, 4, 3)};
        Partition shape = from_core_and_quotient(Partition(), comps, 2);
        if (shape.size() > 12) continue;
        int n = std::max(1, shape.size() / 2);
        SchurExpansion g = llt_cospin(shape, 2, std::min(n, 5));
        for (const auto& [nu, c] : g.entries()) CHECK_FALSE(c.has_negative_coeff());
    }
}

TEST_CASE("factor order experiment (recorded, not asserted)") {
    // The underlying polynomials are conjecturally independent of the factor
    // order once normalized by cospin; we log what the sample shows.
    std::mt19937 rng(59);
    int agree = 0, differ = 0;
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<Partition> comps{oracles::random_partition(rng, 3, 2),
                                     oracles::random_partition(rng, 3, 2)};
        Partition fwd = from_core_and_quotient(Partition(), comps, 2);
        std::swap(comps[0], comps[1]);
        Partition rev = from_core_and_quotient(Partition(), comps, 2);
        if (fwd.size() > 10) continue;
        int n = std::max(1, fwd.size() / 2);
        (llt_cospin(fwd, 2, n) == llt_cospin(rev, 2, n)) ? ++agree : ++differ;
    }
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Partition> comps{oracles::random_partition(rng, 2, 2),
                                     oracles::random_partition(rng, 2, 2),
                                     oracles::random_partition(rng, 2, 2)};
        Partition fwd = from_core_and_quotient(Partition(), comps, 3);
        if (fwd.size() > 12) continue;
        std::vector<Partition> rotated{comps[2], comps[0], comps[1]};
        Partition rot = from_core_and_quotient(Partition(), rotated, 3);
        int n = std::max(1, fwd.size() / 3);
        (llt_cospin(fwd, 3, n) == llt_cospin(rot, 3, n)) ? ++agree : ++differ;
    }
    MESSAGE("factor-order experiment: ", agree, " agree, ", differ, " differ");
    CHECK(agree + differ > 0);
}

TEST_CASE("modified Hall-Littlewood pinned coefficient") {
    SchurExpansion qprime = modified_hall_littlewood(Partition::parse("2,2,1,1"), 3);
    CHECK(qprime.coeff(Partition::parse("3,2,1")) == qp(1) + qp(2).scaled(2) + qp(3));
}

TEST_CASE("H functions") {
    // q = 1: coefficient of s_lambda in H is the Kostka number.
    Partition mu = Partition::parse("2,2");
    SchurExpansion h = h_function(mu, 2, 4);
    for (const auto& [lambda, c] : h.entries())
        CHECK(c.eval_one() == kostka_number(lambda, mu.padded(mu.length())));

    // H = Q' for r >= length(mu).
    for (const auto& m : oracles::all_partitions_up_to(4, 4)) {
        if (m.empty()) continue;
        int n = m.size();
        CHECK(h_function(m, m.length(), n) == modified_hall_littlewood(m, n));
        CHECK(h_function(m, m.length() + 1, n) == modified_hall_littlewood(m, n));
    }
}
