#include "doctest.h"

#include "cwilf/recursions.hpp"

using namespace cwilf;

namespace {
const ParallelContext par = ParallelContext::hardware();

void check_series_equal(const QSeries& a, const QSeries& b, int up_to) {
    REQUIRE(a.order() >= up_to);
    REQUIRE(b.order() >= up_to);
    for (int n = 0; n <= up_to; ++n) {
        INFO("coefficient index ", n);
        CHECK(a.at(n) == b.at(n));
    }
}
} // namespace

TEST_CASE("key recursion reproduces the reciprocal oracle") {
    // a sample of S_5 patterns at order 6; the acceptance suite runs the
    // whole table at order 9
    for (const char* pat : {"13542", "14532", "12453"}) {
        Permutation tau = Permutation::parse(pat);
        auto rec = iu_thm_key(tau, 6, par);
        auto oracle = brute_inm(PatternBag(tau), 6, par).reciprocal();
        check_series_equal(rec, oracle, 6);
    }
    // every admissible S_4 pattern, through order 9
    for (const char* pat : {"1342", "1432", "1243"}) {
        Permutation tau = Permutation::parse(pat);
        REQUIRE(self_overlap_free(tau));
        auto rec = iu_thm_key(tau, 9, par);
        auto oracle = brute_inm(PatternBag(tau), 9, par).reciprocal();
        check_series_equal(rec, oracle, 9);
    }
}

TEST_CASE("key recursion frozen initial values") {
    auto iu = iu_thm_key(Permutation::parse("13542"), 3, par);
    CHECK(iu.at(0) == MultiPoly(1));
    CHECK(iu.at(1) == -z_var());
    CHECK(iu.at(2) == z_var().pow(2) - z_var());
    CHECK(iu.norm() == Norm::QFactorial);
}

TEST_CASE("key recursion hypothesis validation") {
    CHECK_THROWS_AS(iu_thm_key(Permutation::parse("2134"), 5, par), invalid_input); // not starting 1
    CHECK_THROWS_AS(iu_thm_key(Permutation::parse("1234"), 5, par), invalid_input); // s = p
    CHECK_THROWS_AS(iu_thm_key(Permutation::parse("13254"), 5, par), invalid_input); // 132 = red(254)
    CHECK_NOTHROW(iu_thm_key(Permutation::parse("12354"), 5, par)); // ends in 4, still fine
}

TEST_CASE("key recursion depends only on (p, s, des, inv)") {
    // 13542 and 14352 share all four parameters, so the engine must
    // output identical series; so do 14532 and 15342
    check_series_equal(iu_thm_key(Permutation::parse("13542"), 9, par),
                       iu_thm_key(Permutation::parse("14352"), 9, par), 9);
    check_series_equal(iu_thm_key(Permutation::parse("14532"), 9, par),
                       iu_thm_key(Permutation::parse("15342"), 9, par), 9);
    // at q = 1 the dependence drops to (p, s, des): all four collapse
    std::vector<QSeries> at_q1;
    for (const char* pat : {"13542", "14352", "14532", "15342"})
        at_q1.push_back(iu_thm_key(Permutation::parse(pat), 9, par)
                            .substitute({{Var::q, MultiPoly::Binding(Int(1))}}, Norm::PlainFactorial));
    for (size_t i = 1; i < at_q1.size(); ++i) check_series_equal(at_q1[0], at_q1[i], 9);
}

TEST_CASE("set recursion degenerates to the single-pattern one") {
    Permutation tau = Permutation::parse("13542");
    check_series_equal(iu_thm_set(PatternSet(tau), 7, par), iu_thm_key(tau, 7, par), 7);
}

TEST_CASE("set recursion matches the brute oracle for a mutual pair") {
    PatternSet gamma = PatternSet::parse("14532,15342");
    auto rec = iu_thm_set(gamma, 8, par);
    CHECK(rec.at(1) == -z_var());
    auto oracle = brute_inm(PatternBag(gamma), 8, par).reciprocal();
    check_series_equal(rec, oracle, 8);
}

TEST_CASE("set recursion rejects non-mutual inputs") {
    // 1243 and 1432 are each minimal overlapping and start with 1, but
    // suffix 243 of the first reduces like prefix 143 of the second
    CHECK(largest_cross_overlap(Permutation::parse("1243"), Permutation::parse("1432")) == 3);
    CHECK_THROWS_AS(iu_thm_set(PatternSet::parse("1243,1432"), 5, par), invalid_input);
}

TEST_CASE("gamma family generators") {
    PatternSet g22 = gamma_k1k2(2, 2);
    CHECK(g22.patterns() ==
          std::vector<Permutation>{Permutation::parse("1324"), Permutation::parse("1423")});
    PatternSet g23 = gamma_k1k2(2, 3);
    CHECK(g23.count() == 3); // choose 1 of {3,4,5} for the first run
    CHECK(g23.length() == 5);
    for (const auto& p : g23.patterns()) {
        CHECK(p.at(1) == 1);
        CHECK(p.at(3) == 2);
    }
    PatternBag g222 = gamma_k1k2_s(2, 2, 2);
    CHECK(g222.str() == "123,1324,1423");
    CHECK_THROWS_AS(gamma_k1k2(1, 3), invalid_input);
    CHECK_THROWS_AS(gamma_k1k2_s(2, 3, 2), invalid_input); // s below max(k1,k2)
}

TEST_CASE("every quoted family matches its brute oracle at unit scale") {
    auto check_family = [&](RecursionSpec spec, int order) {
        INFO("family ", u_family_name(spec.family));
        auto u = u_quoted(spec, order);
        CHECK(u.at(0) == MultiPoly(1));
        if (order >= 1) CHECK(u.at(1) == -y_var());
        auto oracle = brute_u(spec.pattern_set(), order, par);
        check_series_equal(u, oracle, order);
    };
    check_family({UFamily::Jr1324}, 7);
    {
        RecursionSpec s;
        s.family = UFamily::Jr1324p;
        s.p = 5;
        check_family(s, 7);
    }
    check_family({UFamily::Br1324_123}, 7);
    {
        RecursionSpec s;
        s.family = UFamily::Br1324p_12p;
        s.p = 5;
        check_family(s, 7);
    }
    {
        RecursionSpec s;
        s.family = UFamily::BrGammaK1K2;
        s.k1 = 2;
        s.k2 = 2;
        check_family(s, 7);
    }
    {
        RecursionSpec s;
        s.family = UFamily::BrGamma22s;
        s.s = 2;
        check_family(s, 7);
    }
    // parameter checks
    RecursionSpec bad;
    bad.family = UFamily::Jr1324p;
    bad.p = 4;
    CHECK_THROWS_AS(u_quoted(bad, 5), invalid_input);
}

TEST_CASE("the 1324 family agrees with the q = 1 collapse of the reciprocal") {
    auto u = u_quoted({UFamily::Jr1324}, 9);
    auto iu_q1 = brute_inm(PatternBag(Permutation::parse("1324")), 9, par)
                     .reciprocal()
                     .substitute({{Var::q, MultiPoly::Binding(Int(1))},
                                  {Var::z, MultiPoly::Binding(Var::y)}},
                                 Norm::PlainFactorial);
    check_series_equal(u, iu_q1, 9);
}

TEST_CASE("catalan inputs for the 1324 recursion") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(1) == 1);
    CHECK(catalan(2) == 2);
    CHECK(catalan(3) == 5);
    CHECK(catalan(4) == 14);
}

TEST_CASE("closed forms match their recursions from the empirical start index") {
    CHECK(u_closed_min_index(UClosed::Closed1324_123) == 0);
    CHECK(u_closed_min_index(UClosed::ClosedGamma222) == 0);

    auto u1 = u_quoted({UFamily::Br1324_123}, 9);
    RecursionSpec sg;
    sg.family = UFamily::BrGamma22s;
    sg.s = 2;
    auto u2 = u_quoted(sg, 9);
    for (int n = u_closed_min_index(UClosed::Closed1324_123); n <= 9; ++n) {
        INFO("index ", n);
        CHECK(u_closed(UClosed::Closed1324_123, n) == u1.at(n));
        CHECK(u_closed(UClosed::ClosedGamma222, n) == u2.at(n));
    }
    // double falling factorial convention
    CHECK(double_falling(7, 0) == 1);
    CHECK(double_falling(5, 3) == 5 * 3 * 1);
}

TEST_CASE("family and closed-form name lookups") {
    CHECK(u_family_from_name("jr-1324") == UFamily::Jr1324);
    CHECK(u_family_from_name("br-gamma22s") == UFamily::BrGamma22s);
    CHECK_FALSE(u_family_from_name("nope").has_value());
    CHECK(u_closed_from_name("closed-gamma222") == UClosed::ClosedGamma222);
    for (UFamily f : {UFamily::Jr1324, UFamily::Jr1324p, UFamily::Br1324_123,
                      UFamily::Br1324p_12p, UFamily::BrGammaK1K2, UFamily::BrGamma22s})
        CHECK(u_family_from_name(u_family_name(f)) == f);
}
