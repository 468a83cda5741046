#include "doctest.h"

#include "torusfk/gauge.hpp"
#include "torusfk/perturbation.hpp"

using namespace torusfk;

namespace
{

Word W(const QuiverCategory& cat, std::initializer_list<const char*> names)
{
    Word w;
    for (const char* n : names)
        w.push_back(cat.generator_id(n));
    return w;
}

AInfStructure transferred(const FieldSpec& spec, int order)
{
    return transfer(preset_splitting_C(spec), order).minimal;
}

} // namespace

TEST_CASE("identity gauge leaves a structure unchanged")
{
    const auto spec = FieldSpec::rationals();
    auto B = transferred(spec, 8);
    GaugeTransformation id(spec, B.category(), 8);
    CHECK(id.is_identity());
    CHECK(gauge_apply(id, B, 8) == B);
}

TEST_CASE("preset G kills mu3 and produces the tabulated mu4")
{
    const auto spec = FieldSpec::rationals();
    auto B = transferred(spec, 6);
    auto G = preset_gauge_G(spec, 6);
    const auto& cat = B.category();
    CHECK(format_element(cat, *G.find(W(cat, {"v", "f1"}))) == "1/2*v");
    auto GB = gauge_apply(G, B, 6);
    CHECK(GB.table(3).empty());
    CHECK(GB.table(4) == expected_mu4_after_G(spec));
    CHECK(format_element(cat, GB.evaluate(W(cat, {"u", "e1", "e1", "v"}))) == "3/4*f1");
    CHECK(ainf_check(GB, 6).empty());
}

TEST_CASE("preset H kills mu4 and the sixth-order product is a nonzero class")
{
    const auto spec = FieldSpec::rationals();
    auto B = transferred(spec, 7);
    auto H = preset_gauge_H(spec, 7);
    const auto& cat = B.category();
    CHECK(format_element(cat, *H.find(W(cat, {"f1", "f1", "u"}))) == "5/12*u");
    auto final_ = gauge_apply(H, gauge_apply(preset_gauge_G(spec, 7), B, 7), 7);
    CHECK(final_.table(3).empty());
    CHECK(final_.table(4).empty());
    CHECK(final_.evaluate(W(cat, {"u", "e1", "e1", "v"})).empty());
    CHECK(ainf_check(final_, 7).empty());
    auto mu6 = cochain_of(final_, 6);
    auto cert = m6_certificate(final_, mu6);
    CHECK(cert.cocycle);
    CHECK(cert.nonzero);
    REQUIRE(cert.values.size() == 4);
    CHECK(cert.values[0] == "144 mu6(u,v,f1,u,e1,v) = -9*f0");
    CHECK(cert.values[1] == "144 mu6(f1,u,v,u,e1,v) = 5*f0");
    CHECK(cert.values[2] == "144 mu6(f1,u,e1,v,u,v) = 9*f0");
    CHECK(cert.values[3] == "144 mu6(f1,f1,u,e1,v,f1) = 11*f1");
    CHECK(cert.chain_closed);
    for (const auto& line : cert.chain)
        MESSAGE(line);
}

TEST_CASE("composite gauge acts like the two gauges in turn")
{
    const auto spec = FieldSpec::rationals();
    auto B = transferred(spec, 8);
    auto G = preset_gauge_G(spec, 8), H = preset_gauge_H(spec, 8);
    auto HG = compose(H, G);
    CHECK(gauge_apply(HG, B, 8) == gauge_apply(H, gauge_apply(G, B, 8), 8));
}

TEST_CASE("kill_orders removes orders three to five")
{
    const auto spec = FieldSpec::rationals();
    auto B = transferred(spec, 8);
    auto k3 = kill_orders(B, {3}, 8);
    CHECK(k3.structure.table(3).empty());
    CHECK(gauge_apply(k3.gauge, B, 8) == k3.structure);
    auto k = kill_orders(B, {3, 4, 5}, 8);
    CHECK(k.structure.table(3).empty());
    CHECK(k.structure.table(4).empty());
    CHECK(k.structure.table(5).empty());
    CHECK(coboundary(k.structure, cochain_of(k.structure, 6)).empty());
    CHECK(ainf_check(k.structure, 8).empty());
    CHECK_THROWS_AS(kill_orders(k.structure, {6}, 8), ObstructionError);
}

TEST_CASE("gauge text round trip")
{
    const auto spec = FieldSpec::rationals();
    auto H = preset_gauge_H(spec, 5);
    auto text = dump_gauge(H);
    CHECK(text.find("G3") != std::string::npos);
    CHECK(load_gauge(text) == H);
}

TEST_CASE("invariants of the transferred model agree along both normalization paths")
{
    const auto spec = FieldSpec::rationals();
    auto B = transferred(spec, 8);
    auto dc = extract_invariants(B);
    CHECK(dc.m6 == make_fraction(spec, -1, 48));
    auto final_ = gauge_apply(preset_gauge_H(spec, 8), gauge_apply(preset_gauge_G(spec, 8), B, 8), 8);
    CHECK(class_coordinate(final_, cochain_of(final_, 6), basis_cocycle_m6(spec)) == dc.m6);
}

TEST_CASE("trivial structure has vanishing invariants")
{
    const auto spec = FieldSpec::rationals();
    auto dc = extract_invariants(preset_A(spec, 8));
    CHECK(dc.m6.is_zero());
    CHECK(dc.m8.is_zero());
    CHECK_THROWS_AS(extract_invariants(preset_A(FieldSpec::prime(3), 8)), Error);
    CHECK_THROWS_AS(extract_invariants(preset_A(FieldSpec::prime(2), 8)), Error);
}

TEST_CASE("invariants are constant on random gauge orbits")
{
    const auto spec = FieldSpec::rationals();
    auto B = transferred(spec, 8);
    auto base = extract_invariants(B);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto g = random_gauge(spec, B.category(), 4, 8, 1000 + seed);
        CHECK_FALSE(g.is_identity());
        auto moved = gauge_apply(g, B, 8);
        CHECK(ainf_check(moved, 8).empty());
        auto dc = extract_invariants(moved);
        CHECK(dc.m6 == base.m6);
        CHECK(dc.m8 == base.m8);
    }
}

TEST_CASE("rescaling multiplies the invariants by t^4 and t^6")
{
    const auto spec = FieldSpec::rationals();
    auto R = mc_realize(spec, FieldValue(spec, 1L), FieldValue(spec, 1L), 8);
    for (long t : {2L, 3L}) {
        auto dc = extract_invariants(rescale(R, FieldValue(spec, t)));
        CHECK(dc.m6 == FieldValue(spec, t * t * t * t));
        CHECK(dc.m8 == FieldValue(spec, t * t * t * t * t * t));
    }
}

TEST_CASE("Maurer-Cartan extension realizes prescribed classes")
{
    const auto spec = FieldSpec::rationals();
    auto trivial = mc_realize(spec, FieldValue::zero(spec), FieldValue::zero(spec), 10);
    CHECK(trivial.top_arity() == 2);

    auto R = mc_realize(spec, FieldValue(spec, 2L), make_fraction(spec, -1, 3), 10);
    CHECK(ainf_check(R, 10).empty());
    auto dc = extract_invariants(R);
    CHECK(dc.m6 == FieldValue(spec, 2L));
    CHECK(dc.m8 == make_fraction(spec, -1, 3));

    // Same m6 as the Fukaya model: agreement up to order 7 after normalization.
    auto B = transferred(spec, 8);
    auto target = mc_realize(spec, extract_invariants(B).m6, FieldValue::zero(spec), 8);
    auto lhs = kill_orders(kill_orders(B, {3, 4, 5}, 8).structure, {7}, 8).structure;
    auto rhs = kill_orders(target, {3, 4, 5, 7}, 8).structure;
    auto diff = cochain_of(lhs, 6);
    axpy(diff, -FieldValue::one(spec), cochain_of(rhs, 6));
    CHECK(coboundary(lhs, diff).empty());
    CHECK(is_coboundary(lhs, diff).primitive.has_value());
}

TEST_CASE("structures agreeing below order d differ by a cocycle at d")
{
    const auto spec = FieldSpec::rationals();
    auto B = transferred(spec, 6);
    for (std::uint64_t seed = 7; seed <= 9; ++seed) {
        GaugeTransformation g(spec, B.category(), 6);
        auto r = random_gauge(spec, B.category(), 4, 6, seed);
        g.set_component(r.component(4));
        auto moved = gauge_apply(g, B, 6);
        for (int d = 2; d < 5; ++d)
            CHECK(moved.table(d) == B.table(d));
        auto diff = cochain_of(moved, 5);
        axpy(diff, -FieldValue::one(spec), cochain_of(B, 5));
        CHECK(coboundary(B, diff).empty());
    }
}
