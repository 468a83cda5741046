#include "doctest.h"

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

Word uev(const QuiverCategory& cat, int n_e1, bool trailing_f1)
{
    Word w{cat.generator_id("u")};
    w.insert(w.end(), n_e1, cat.generator_id("e1"));
    w.push_back(cat.generator_id("v"));
    if (trailing_f1)
        w.push_back(cat.generator_id("f1"));
    return w;
}

} // namespace

TEST_CASE("splitting of the eight-generator model satisfies the side conditions")
{
    for (auto spec : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
        auto rep = check_splitting(preset_splitting_C(spec));
        CHECK(rep.ok());
        CHECK(rep.homotopy_equation);
        CHECK(rep.projection_splits);
    }
}

TEST_CASE("broken splitting is rejected")
{
    auto split = preset_splitting_C(FieldSpec::rationals());
    const auto& amb = split.ambient.category();
    split.homotopy[amb.generator_id("v01")] = Element{};
    auto rep = check_splitting(split);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.homotopy_equation);
    CHECK_THROWS_AS(transfer(split, 4), Error);
}

TEST_CASE("transferred structure matches the closed form")
{
    const auto spec = FieldSpec::rationals();
    auto split = preset_splitting_C(spec);
    auto res = transfer(split, 12);
    const auto& H = split.harmonic;
    const auto& A = split.ambient.category();
    const auto& B = res.minimal;

    CHECK(format_element(A, res.iota[2].at(W(H, {"v", "f1"}))) == "v1");
    CHECK(format_element(A, res.iota[2].at(W(H, {"e1", "v"}))) == "-v1");
    CHECK(format_element(H, B.evaluate(W(H, {"u", "e1", "v"}))) == "-f1");
    CHECK(format_element(H, B.evaluate(W(H, {"u", "e1", "v", "f1"}))) == "-f1");
    CHECK(format_element(H, B.evaluate(uev(H, 10, false))) == "f1");
    CHECK(format_element(H, B.evaluate(uev(H, 9, true))) == "-f1");

    auto rep = lemma_check(res, 12);
    CHECK(rep.ok());
    CHECK(rep.nonzero_entries == B.table(2).size() + 2 * 10);
    CHECK(ainf_check(B, 10).empty());
}

TEST_CASE("transfer over small primes")
{
    for (auto spec : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)}) {
        auto res = transfer(preset_splitting_C(spec), 8);
        CHECK(lemma_check(res, 8).ok());
        CHECK(ainf_check(res.minimal, 8).empty());
    }
}

TEST_CASE("transfer dump lists the minimal structure and the homotopy tower")
{
    auto split = preset_splitting_C(FieldSpec::rationals());
    auto res = transfer(split, 4);
    auto text = dump_transfer(res, split);
    CHECK(text.find("MU3") != std::string::npos);
    CHECK(text.find("IOTA2") != std::string::npos);
    CHECK(text.find("u e1 v -> -f1") != std::string::npos);
    auto back = load(text.substr(0, text.find("IOTA1")));
    CHECK(back == res.minimal);
}
