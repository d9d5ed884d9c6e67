#include <catch2/catch_amalgamated.hpp>

#include "lnd/models.hpp"
#include "test_util.hpp"

using namespace lnd;

namespace {

void expect_moment_killed(const ModelInstance& mi) {
    CheckReport rep = check_moment_invariance(mi);
    INFO(mi.name << " m=" << mi.m << " n=" << mi.n << ": "
                 << (rep.lines.empty() ? "" : rep.lines.front()));
    CHECK(rep.ok);
    for (const auto& g : mi.moment_generators) {
        CHECK(mi.pair.D.apply(g).is_zero());
        CHECK(mi.pair.U.apply(g).is_zero());
    }
}

}  // namespace

TEST_CASE("calogero-moser pairs are fundamental for n up to 3") {
    for (int n = 1; n <= 3; ++n) {
        ModelInstance mi = build_cm(n);
        CHECK(mi.relations_ambient);
        RelationReport rep = check_relations(mi.pair);
        INFO("n = " << n);
        CHECK(rep.ok);
        REQUIRE(mi.pair.weights.has_value());
        // X entries carry weight +1, Y entries -1
        for (std::size_t i = 0; i < mi.table->size(); ++i)
            CHECK((*mi.pair.weights)[i] == (i < static_cast<std::size_t>(n) * n ? 1 : -1));
        expect_moment_killed(mi);
        CHECK(check_certificate(mi).ok);
    }
}

TEST_CASE("trace certificate for calogero-moser") {
    ModelInstance mi = build_cm(2);
    Polynomial trX = Polynomial::parse("X_0_0 + X_1_1", mi.table);
    CHECK(mi.certificate == trX);
    // U(tr X) = tr Y has D-degree 1 and U-degree 0
    Polynomial g = mi.pair.U.apply(trX);
    CHECK(g == Polynomial::parse("Y_0_0 + Y_1_1", mi.table));
    CHECK(!mi.pair.D.apply(g).is_zero());
    CHECK(mi.pair.D.apply_power(g, 2).is_zero());
    CHECK(mi.pair.U.apply(g).is_zero());
    WitnessReport w = useful2_witness(mi.pair, trX, CertKind::A1);
    CHECK(w.ok);
}

TEST_CASE("rank-2 pairs are fundamental with and without tau") {
    for (int n = 1; n <= 2; ++n)
        for (const Rational& tau : {Rational(0), Rational(1, 2)}) {
            ModelInstance mi = build_cm_rank2(n, tau);
            INFO("n = " << n << " tau = " << rat_to_string(tau));
            CHECK(check_relations(mi.pair).ok);
            expect_moment_killed(mi);
            CHECK(check_certificate(mi).ok);
        }
}

TEST_CASE("quiver pairs at small cycle length") {
    for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n) {
            ModelInstance mi = build_quiver(m, n);
            INFO("m = " << m << " n = " << n);
            CHECK(mi.relations_ambient);
            CHECK(check_relations(mi.pair).ok);
            expect_moment_killed(mi);
            CHECK(check_certificate(mi).ok);
        }
}

TEST_CASE("quiver certificate derivative structure") {
    // m = 2: D(tr XY) = 2 tr(X_0 X_1), weight 2, and D^2 f = 0
    ModelInstance mi = build_quiver(2, 2);
    Polynomial f = mi.certificate;
    Polynomial df = mi.pair.D.apply(f);
    CHECK(!df.is_zero());
    CHECK(homogeneous_weight(mi.pair, f).value() == 0);
    CHECK(homogeneous_weight(mi.pair, df).value() == 2);
    CHECK(mi.pair.D.apply(df).is_zero());
    Polynomial uf = mi.pair.U.apply(f);
    CHECK(mi.pair.U.apply(uf).is_zero());

    // m = 1 degenerates to the calogero-moser shape: D(tr XY) = tr X^2
    ModelInstance m1 = build_quiver(1, 2);
    Polynomial expected = Polynomial::parse(
        "X_0_0_0^2 + 2*X_0_0_1*X_0_1_0 + X_0_1_1^2", m1.table);
    CHECK(m1.pair.D.apply(m1.certificate) == expected);
}

TEST_CASE("quiver relations fail ambiently for m = 3 and the report says so") {
    ModelInstance mi = build_quiver(3, 1);
    CHECK(!mi.relations_ambient);
    RelationReport rep = check_relations(mi.pair);
    CHECK(!rep.ok);
    // moment generators and certificate still behave
    expect_moment_killed(mi);
    CHECK(check_certificate(mi).ok);
}

TEST_CASE("builtin points satisfy the moment equations") {
    for (auto build : {build_cm(1), build_cm_rank2(1, Rational(0)), build_quiver(1, 1),
                       build_quiver(2, 1), build_quiver(3, 1)}) {
        auto pts = builtin_points(build);
        REQUIRE(!pts.empty());
        for (const auto& pt : pts) {
            REQUIRE(pt.size() == build.table->size());
            for (const auto& g : build.moment_generators) CHECK(g.evaluate(pt) == 0);
        }
    }
    CHECK_THROWS(builtin_points(build_cm(2)));
}

TEST_CASE("groebner-mode quotient check passes for m up to 2") {
    for (int m = 1; m <= 2; ++m) {
        ModelInstance mi = build_quiver(m, 1);
        CheckReport rep = check_sl2_mod_ideal(mi, ModIdealMode::Groebner);
        INFO("m = " << m << (rep.lines.empty() ? "" : ": " + rep.lines.back()));
        CHECK(rep.ok);
    }
}

TEST_CASE("points-mode quotient check passes for m up to 2") {
    for (int m = 1; m <= 2; ++m) {
        ModelInstance mi = build_quiver(m, 1);
        CheckReport rep = check_sl2_mod_ideal(mi, ModIdealMode::Points);
        INFO("m = " << m);
        CHECK(rep.ok);
    }
}

TEST_CASE("custom lambda parameters keep the scalar generator consistent") {
    ModelInstance mi = build_quiver(2, 1, {Rational(5), Rational(-1, 2)});
    expect_moment_killed(mi);
    CHECK(check_relations(mi.pair).ok);
    CheckReport rep = check_sl2_mod_ideal(mi, ModIdealMode::Groebner);
    CHECK(rep.ok);
}

TEST_CASE("exponential flow of a model is the expected shear") {
    ModelInstance mi = build_cm(2);
    Rational t(3, 4);
    for (std::size_t i = 0; i < mi.table->size(); ++i) {
        Polynomial v = Polynomial::variable(mi.table, i);
        CHECK(exp_apply(mi.pair.D, t, v) == v + mi.pair.D.apply(v).scaled(t));
        CHECK(exp_apply(mi.pair.U, t, v) == v + mi.pair.U.apply(v).scaled(t));
    }
}
