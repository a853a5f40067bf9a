#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tyk/multipoly.hpp"
#include "tyk/ratfunc.hpp"
#include "tyk/unipoly.hpp"

using namespace tyk;

namespace {

UniPoly upoly(std::initializer_list<long> num, std::initializer_list<long> den) {
    std::vector<Rational> cs;
    auto d = den.begin();
    for (long n : num) cs.emplace_back(n, *d++);
    return UniPoly(std::move(cs));
}

UniPoly upoly(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

} // namespace

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).den() == 1);
    CHECK(Rational::parse("-5/15") == Rational(-1, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK((Rational(7, 2)).floor() == 3);
    CHECK((Rational(-7, 2)).floor() == -4);
    CHECK(Rational(3, 4).str() == "3/4");
    CHECK(Rational(-3).str() == "-3");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("unipoly canonical form is idempotent") {
    UniPoly p(std::vector<Rational>{Rational(1), Rational(2), Rational(0), Rational(0)});
    CHECK(p.degree() == 1);
    UniPoly q(p.coeffs());
    CHECK(p == q);
    CHECK(UniPoly(std::vector<Rational>{Rational(0)}).is_zero());
}

TEST_CASE("poly_shift") {
    // u - 2 at c = 1 -> u - 1
    CHECK(upoly({-2, 1}).shift(Rational(1)) == upoly({-1, 1}));
    // constants are shift invariant
    CHECK(upoly({1}).shift(Rational(7, 2)) == upoly({1}));
    // by-hand expansion of (u+1)^2 - 3(u+1) + 2 = u^2 - u
    CHECK(upoly({2, -3, 1}).shift(Rational(1)) == upoly({0, -1, 1}));
}

TEST_CASE("poly_shift composes additively") {
    Rng rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        UniPoly p = rng.poly(5);
        Rational a = rng.rat(), b = rng.rat();
        CHECK(p.shift(a).shift(b) == p.shift(a + b));
    }
}

TEST_CASE("poly_reflect") {
    // single root maps r -> l - r
    CHECK(upoly({-3, 4}, {4, 4}).monic().reflect(Rational(2)) == upoly({-5, 4}, {4, 4}).monic());
    CHECK(upoly({1}).reflect(Rational(9, 7)) == upoly({1}));
    // roots {1,2} are symmetric about l = 3
    UniPoly p = upoly({-1, 1}) * upoly({-2, 1});
    CHECK(p.reflect(Rational(3)) == p);
}

TEST_CASE("poly_reflect is an involution") {
    Rng rng(12);
    for (int rep = 0; rep < 50; ++rep) {
        UniPoly p = rng.poly(6);
        Rational l = rng.rat();
        CHECK(p.reflect(l).reflect(l) == p);
    }
}

TEST_CASE("rational_roots") {
    auto r1 = upoly({6, -5, 1}).rational_roots(); // u^2 - 5u + 6
    CHECK(r1 == std::map<Rational, int>{{Rational(2), 1}, {Rational(3), 1}});
    auto r2 = (upoly({-1, 2}) * upoly({-1, 2})).rational_roots(); // (2u-1)^2
    CHECK(r2 == std::map<Rational, int>{{Rational(1, 2), 2}});
    CHECK_THROWS_AS(upoly({1, 0, 1}).rational_roots(), NonRationalRoot);
}

TEST_CASE("rational_roots of a product is the multiset union") {
    Rng rng(13);
    for (int rep = 0; rep < 30; ++rep) {
        UniPoly p = rng.split_poly(4), q = rng.split_poly(4);
        auto rp = p.rational_roots(), rq = q.rational_roots();
        for (const auto& [r, m] : rq) rp[r] += m;
        CHECK((p * q).rational_roots() == rp);
    }
}

TEST_CASE("series_at_infinity") {
    RatFunc f(upoly({1, 1}), upoly({0, 1})); // (u+1)/u
    CHECK(f.series_at_infinity(3) ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(0)});
    CHECK(RatFunc(1).series_at_infinity(2) == std::vector<Rational>{Rational(1), Rational(0)});
    // geometric series oracle for u/(u - 1/4): 1 + (1/4)x + (1/16)x^2 + ...
    std::vector<Rational> geo;
    Rational acc(1);
    for (int k = 0; k < 3; ++k) {
        geo.push_back(acc);
        acc *= Rational(1, 4);
    }
    RatFunc g(upoly({0, 1}), upoly({-1, 4}, {4, 4}).monic());
    CHECK(g.series_at_infinity(3) == geo);
    RatFunc improper(upoly({0, 0, 1}), upoly({0, 1}));
    CHECK_THROWS_AS(improper.series_at_infinity(2), ImproperAtInfinity);
}

TEST_CASE("mrf_equal basics") {
    MultiRatFunc u = MultiRatFunc::variable(Var::u);
    MultiRatFunc v = MultiRatFunc::variable(Var::v);
    CHECK(mrf_equal((u * u - v * v) / (u - v), u + v));
    CHECK_FALSE(mrf_equal(u / v, v / u));
}

TEST_CASE("fraction field laws and evaluation agreement") {
    Rng rng(14);
    for (int rep = 0; rep < 25; ++rep) {
        MultiRatFunc f = rng.mrf(), g = rng.mrf(), h = rng.mrf();
        MultiRatFunc lhs = (f + g) * h;
        MultiRatFunc rhs = f * h + g * h;
        CHECK(mrf_equal(lhs, rhs));
        // equality agrees with evaluation at random points off the poles
        int tested = 0;
        while (tested < 20) {
            Rational ru = rng.rat(), rv = rng.rat(), ra = rng.rat();
            if (lhs.den_vanishes_at(ru, rv, ra) || rhs.den_vanishes_at(ru, rv, ra)) continue;
            CHECK(lhs.eval(ru, rv, ra) == rhs.eval(ru, rv, ra));
            ++tested;
        }
    }
}

TEST_CASE("ratfunc canonical form is idempotent") {
    Rng rng(16);
    for (int rep = 0; rep < 25; ++rep) {
        UniPoly d = rng.poly(4);
        while (d.is_zero()) d = rng.poly(4);
        RatFunc f(rng.poly(4), d);
        RatFunc again(f.num(), f.den());
        CHECK(again == f);
        CHECK(f.den().is_monic());
        CHECK(UniPoly::gcd(f.num(), f.den()).degree() <= 0);
    }
}

TEST_CASE("mrf canonical form is idempotent") {
    Rng rng(15);
    for (int rep = 0; rep < 25; ++rep) {
        MultiRatFunc f = rng.mrf();
        MultiRatFunc again(f.num(), f.den());
        CHECK(again.num() == f.num());
        CHECK(again.den() == f.den());
    }
}

TEST_CASE("multivariate gcd and exact division") {
    MultiPoly u = MultiPoly::variable(Var::u);
    MultiPoly v = MultiPoly::variable(Var::v);
    MultiPoly a = (u + v) * (u - v);
    MultiPoly b = (u + v) * (u + v);
    CHECK(MultiPoly::gcd(a, b) == (u + v).normalized());
    CHECK(a.divexact(u + v) == u - v);
    CHECK_THROWS(a.divexact(u + MultiPoly(1)));
}
