#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "tyk/drinfeld.hpp"
#include "tyk/lowrank.hpp"
#include "tyk/reflection.hpp"

using namespace tyk;

TEST_CASE("rank-one classification identity") {
    // the trivial member: mu = 1, P = 1, gamma = 1/2 (oracle value)
    CHECK(y2_check(Y2Data{RatFunc(1), UniPoly(1), Rational(1, 2)}));
    CHECK_FALSE(y2_check(Y2Data{RatFunc(1), UniPoly(1), Rational(-1, 2)}));
    // the weight (u + gamma)/(u + 1/2) passes for any gamma
    for (Rational g : {Rational(3, 2), Rational(-5, 4), Rational(2)}) {
        UniPoly u = UniPoly::variable();
        RatFunc mu(u + UniPoly(g), u + UniPoly(Rational(1, 2)));
        CHECK(y2_check(Y2Data{mu, UniPoly(1), g}));
    }
    // mismatched data fails
    UniPoly u = UniPoly::variable();
    RatFunc mu(u + UniPoly(Rational(2)), u + UniPoly(Rational(1, 2)));
    CHECK_FALSE(y2_check(Y2Data{mu, UniPoly(1), Rational(7)}));
}

TEST_CASE("so3 evaluation weights") {
    // mu = 0 reproduces the trivial weight entrywise
    HighestWeight w0 = ev_so3_weight(Rational(0));
    SymmetricPair sp = SymmetricPair::from_id("so3");
    CHECK(w0 == trivial_weight(sp));
    UniPoly u = UniPoly::variable();
    CHECK(w0.at(0) == RatFunc(-(u + UniPoly(Rational(1, 4))), u - UniPoly(Rational(1, 4))));
    CHECK(w0.at(1) == RatFunc(1));

    // mu = 1 classifies with (P, alpha) = (1, 7/4)
    So3Data d1 = so3_tuple(ev_so3_weight(Rational(1)));
    CHECK(d1.P.is_one());
    CHECK(d1.alpha == Rational(7, 4));
    // mu = 0: (1, 3/4)
    So3Data d0 = so3_tuple(w0);
    CHECK(d0.P.is_one());
    CHECK(d0.alpha == Rational(3, 4));

    // agreement with the general association path
    for (Rational mu : {Rational(1, 2), Rational(-3, 4), Rational(2)}) {
        HighestWeight w = ev_so3_weight(mu);
        CHECK(check_nontrivial(w));
        DrinfeldTuple t = associate(w);
        So3Data d = so3_tuple(w);
        CHECK(*t.alpha == d.alpha);
        CHECK(t.P(1) == d.P);
        CHECK(classify(w).verdict == Verdict::FiniteDim);
    }
}

TEST_CASE("so3 evaluation matrices satisfy the defining identities symbolically") {
    SymmetricPair sp = SymmetricPair::from_id("so3");
    MatN S = ev_so3_matrix(); // parameter symbolic
    CHECK(check_reflection_equation(sp, S).holds);
    CHECK(check_symmetry_relation(sp, S).holds);
    // mu = 0 reproduces G(u)
    CHECK((ev_so3_matrix(Rational(0)) - trivial_solution(sp)).is_zero());
    // diagonal entries agree with the weight for rational mu
    MatN S1 = ev_so3_matrix(Rational(1));
    HighestWeight w1 = ev_so3_weight(Rational(1));
    for (int i : sp.indices_plus())
        CHECK((S1.get(i, i) - MultiRatFunc::from_ratfunc(w1.at(i), Var::u)).is_zero());
}

TEST_CASE("so4 evaluation weights") {
    SymmetricPair sp = SymmetricPair::from_id("so4");
    CHECK(ev_so4_weight(Rational(0), Rational(0)) == trivial_weight(sp));
    // (1, 0): components from the table matrix diag(-1, 1, 1, -1)
    HighestWeight w = ev_so4_weight(Rational(1), Rational(0));
    UniPoly u = UniPoly::variable();
    CHECK(w.at(1) == RatFunc((u + UniPoly(1)) * (u + UniPoly(1)), u * u));
    CHECK(w.at(2) == RatFunc(-(u * u) + UniPoly(1), u * u));
    CHECK(check_nontrivial(w));

    So4Data d = so4_tuple(w);
    CHECK(d.alpha == Rational(0)); // 1 - mu1 + mu2
    CHECK(d.beta == Rational(2));  // 1 + mu1 + mu2
    CHECK(d.P.is_one());
    CHECK(d.Q.is_one());
    CHECK(classify(w).verdict == Verdict::FiniteDim);

    // trivial weight: (Q, P) = (1, 1) with alpha = beta = 1
    So4Data d0 = so4_tuple(trivial_weight(sp));
    CHECK(d0.alpha == Rational(1));
    CHECK(d0.beta == Rational(1));
    CHECK(d0.P.is_one());
    CHECK(d0.Q.is_one());
}

TEST_CASE("so4 evaluation matrices: identities with one parameter symbolic") {
    SymmetricPair sp = SymmetricPair::from_id("so4");
    // mu1 symbolic at sampled mu2, and the mirror; exactness in the sampled
    // parameter follows from the interpolation bound (degree <= 4 per side).
    std::vector<Rational> samples{Rational(0),     Rational(1),      Rational(-1, 2),
                                  Rational(2),     Rational(3, 2),   Rational(5, 2)};
    for (const Rational& s : samples) {
        MatN Sa = ev_so4_matrix(std::nullopt, s);
        CHECK(check_reflection_equation(sp, Sa).holds);
        CHECK(check_symmetry_relation(sp, Sa).holds);
        MatN Sb = ev_so4_matrix(s, std::nullopt);
        CHECK(check_reflection_equation(sp, Sb).holds);
        CHECK(check_symmetry_relation(sp, Sb).holds);
    }
    CHECK((ev_so4_matrix(Rational(0), Rational(0)) - trivial_solution(sp)).is_zero());
}

TEST_CASE("so4 tuples of random evaluation weights") {
    Rng rng(61);
    for (int rep = 0; rep < 10; ++rep) {
        Rational m1 = rng.rat(), m2 = rng.rat();
        HighestWeight w = ev_so4_weight(m1, m2);
        CHECK(check_nontrivial(w));
        So4Data d = so4_tuple(w);
        CHECK(d.alpha == Rational(1) - m1 + m2);
        CHECK(d.beta == Rational(1) + m1 + m2);
    }
    // a generic weight that fails the factorization is not classifiable
    SymmetricPair sp = SymmetricPair::from_id("so4");
    UniPoly u = UniPoly::variable();
    std::vector<RatFunc> comps = trivial_weight(sp).comps();
    comps[0] = comps[0] * RatFunc(u * u + UniPoly(1), u * u);
    HighestWeight bad(sp, comps);
    if (check_nontrivial(bad)) CHECK_THROWS_AS(so4_tuple(bad), NotClassifiable);
}

TEST_CASE("y2 data extracted from so3 evaluation modules") {
    for (Rational mu : {Rational(0), Rational(1), Rational(-1, 2), Rational(5, 4)}) {
        Y2Data d = y2_from_ev_so3(mu);
        CHECK(y2_check(d));
        CHECK(d.gamma_circ == mu * Rational(2) + Rational(1, 2));
        // consistent with the so3 classification data: gamma = 2 alpha - 1
        So3Data t = so3_tuple(ev_so3_weight(mu));
        Y2Data dd = y2_from_so3_tuple(t, d.mu_circ);
        CHECK(dd.gamma_circ == d.gamma_circ);
        CHECK(y2_check(dd));
    }
}

TEST_CASE("one-dimensional catalogs") {
    CHECK(onedim_catalog(SymmetricPair::build(Family::CII, 8, 4)).kind ==
          OneDimKind::TrivialOnly);
    CHECK(onedim_catalog(SymmetricPair::from_id("so6/so4+so2")).kind ==
          OneDimKind::OneParameter);
    CHECK(onedim_catalog(SymmetricPair::from_id("so4")).kind == OneDimKind::So4Family);
    CHECK(onedim_catalog(SymmetricPair::from_id("so3")).kind == OneDimKind::So3Family);
    CHECK(onedim_catalog(SymmetricPair::from_id("so7/so4+so3")).kind ==
          OneDimKind::TrivialOnly);

    // the one-parameter member has tuple (kappa - a, 1, ..., 1)
    SymmetricPair sp = SymmetricPair::from_id("so6/so4+so2");
    HighestWeight w = onedim_weight(sp, {Rational(1, 2)});
    DrinfeldTuple t = associate(w);
    CHECK(*t.alpha == sp.kappa() - Rational(1, 2));
    CHECK_THROWS_AS(onedim_weight(sp, {}), MalformedInput);
}
