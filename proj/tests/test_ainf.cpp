#include "doctest.h"

#include <fstream>
#include <sstream>

#include "torusfk/ainf.hpp"

using namespace torusfk;

namespace
{

Word W(const AInfStructure& mu, std::initializer_list<const char*> names)
{
    Word w;
    for (const char* n : names)
        w.push_back(mu.category().generator_id(n));
    return w;
}

std::string show(const AInfStructure& mu, const Element& e)
{
    return format_element(mu.category(), e);
}

// Dimension of H(hom(X,Y)^deg) under mu^1.
std::size_t cohomology_dim(const AInfStructure& mu, int x, int y, int deg)
{
    const auto& cat = mu.category();
    auto basis = cat.hom_basis(x, y, deg);
    auto next = cat.hom_basis(x, y, deg + 1);
    auto prev = cat.hom_basis(x, y, deg - 1);
    auto rank_of = [&](const std::vector<int>& from, const std::vector<int>& to) {
        SparseMatrix m(to.size(), from.size());
        for (std::size_t j = 0; j < from.size(); ++j) {
            Element img = mu.evaluate({from[j]});
            for (const auto& [g, c] : img.entries())
                for (std::size_t i = 0; i < to.size(); ++i)
                    if (to[i] == g)
                        m.add(static_cast<int>(i), static_cast<int>(j), c);
        }
        return rank(m, mu.spec());
    };
    return basis.size() - rank_of(basis, next) - rank_of(prev, basis);
}

} // namespace

TEST_CASE("preset A products")
{
    const auto Q = FieldSpec::rationals();
    auto A = preset_A(Q);
    CHECK(A.category().generator_count() == 6);
    CHECK(show(A, A.evaluate(W(A, {"v", "u"}))) == "-e1");
    CHECK(show(A, A.evaluate(W(A, {"u", "v"}))) == "f1");
    CHECK(show(A, A.evaluate(W(A, {"e0", "e1"}))) == "-e1");
    CHECK_THROWS_AS(A.evaluate(W(A, {"u", "u"})), Error);
    CHECK(A.evaluate(W(A, {"u", "e1", "e1", "e1", "v"})).empty());
    CHECK(ainf_check(A, 6).empty());
}

TEST_CASE("A unit conventions")
{
    auto A = preset_A(FieldSpec::rationals());
    const auto& cat = A.category();
    for (int g = 0; g < static_cast<int>(cat.generator_count()); ++g) {
        const auto& gen = cat.generator(g);
        int right = *cat.identity(gen.source);
        int left = *cat.identity(gen.target);
        CHECK(A.evaluate({g, right}) == Element::basis(g, A.spec()));
        Element expect = Element::term(g, FieldValue(A.spec(), gen.degree % 2 ? -1L : 1L));
        CHECK(A.evaluate({left, g}) == expect);
    }
}

TEST_CASE("preset C")
{
    const auto Q = FieldSpec::rationals();
    auto C = preset_C(Q);
    CHECK(show(C, C.evaluate(W(C, {"v0"}))) == "-v01");
    CHECK(show(C, C.evaluate(W(C, {"v1"}))) == "v01");
    CHECK(show(C, C.evaluate(W(C, {"v0", "u01"}))) == "-e1");
    CHECK(ainf_check(C, 6).empty());

    auto bad = C;
    bad.set(W(C, {"v0", "u01"}), Element::basis(C.category().generator_id("e1"), Q));
    auto violations = ainf_check(bad, 4);
    CHECK(!violations.empty());
}

TEST_CASE("preset D and the inclusion of C")
{
    const auto Q = FieldSpec::rationals();
    auto D = preset_D(Q);
    auto C = preset_C(Q);
    CHECK(D.category().generator_count() == 16);
    CHECK(show(D, D.evaluate(W(D, {"x0"}))) == "-x01 - x02");
    CHECK(ainf_check(D, 4).empty());

    // The inclusion is a dg functor.
    auto emb = embedding_C_into_D(C, D);
    const auto& cc = C.category();
    for (int g = 0; g < static_cast<int>(cc.generator_count()); ++g) {
        Element lhs = D.apply({emb[g]});
        Element rhs;
        const Element img = C.evaluate({g});
        for (const auto& [h, c] : img.entries())
            rhs.axpy(c, emb[h]);
        CHECK(lhs == rhs);
    }
    for (const Word& w : cc.composable_words(2, false)) {
        Element lhs = D.apply({emb[w[0]], emb[w[1]]});
        Element rhs;
        const Element img = C.evaluate(w);
        for (const auto& [h, c] : img.entries())
            rhs.axpy(c, emb[h]);
        CHECK_MESSAGE(lhs == rhs, cc.word_name(w));
    }

    // Quasi-isomorphic: same cohomology per hom-space and degree, totalling 6.
    std::size_t total = 0;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int deg = -1; deg <= 2; ++deg) {
                auto dc = cohomology_dim(C, x, y, deg);
                CHECK(dc == cohomology_dim(D, x, y, deg));
                total += dc;
            }
    CHECK(total == 6);
}

TEST_CASE("degree bookkeeping on the presets")
{
    for (auto mu : {preset_A(FieldSpec::rationals()), preset_C(FieldSpec::rationals()),
                    preset_D(FieldSpec::prime(5))}) {
        for (int d = 1; d <= mu.order(); ++d)
            for (const auto& [w, e] : mu.table(d)) {
                CHECK(mu.category().composable(w));
                CHECK_NOTHROW(check_output(mu.category(), w, e, 2 - d));
            }
    }
}

TEST_CASE("set rejects inconsistent entries")
{
    auto A = preset_A(FieldSpec::rationals());
    const auto& cat = A.category();
    CHECK_THROWS_AS(A.set(W(A, {"u", "v"}), Element::basis(cat.generator_id("f0"), A.spec())), Error);
    CHECK_THROWS_AS(A.set(W(A, {"u", "u"}), Element()), Error);
    Word long_word(13, cat.generator_id("e1"));
    CHECK_THROWS_AS(A.evaluate(long_word), Error);
}

TEST_CASE("dump and load round trip")
{
    for (auto mu : {preset_A(FieldSpec::rationals()), preset_C(FieldSpec::rationals()),
                    preset_D(FieldSpec::prime(7))}) {
        std::string text = dump(mu);
        auto back = load(text);
        CHECK(back == mu);
        CHECK(dump(back) == text);
    }
}

TEST_CASE("golden dump of C")
{
    std::ifstream in(std::string(TORUSFK_SOURCE_DIR) + "/tests/golden/preset_C.txt");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(dump(preset_C(FieldSpec::rationals())) == ss.str());
}

TEST_CASE("load reports errors with line numbers")
{
    const std::string head =
        "FIELD Q\nORDER 4\nOBJECTS\na\nb\nGENERATORS\ne0 a a 0\ne1 a a 1\nu a b 1\nv b a 0\n";
    CHECK_NOTHROW(load(head + "MU2\nv u -> e1\n"));
    try {
        load(head + "MU2\nv u -> e1\nv u -> 2*e0\n");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 13);
    }
    try {
        load(head + "MU2\ne1 e1 -> e0\n");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 12);
    }
    CHECK_THROWS_AS(load(head + "MU3\nv u e0 -> v\n"), ParseError);
    CHECK_THROWS_AS(load(head + "MU2\nv v -> e0\n"), ParseError);
    CHECK_THROWS_AS(load(head + "MU9\n"), ParseError);
    CHECK_THROWS_AS(load("a b c\n"), ParseError);
    CHECK_THROWS_AS(load(head + "MU1\nu -> 1/0*u\n"), ParseError);
    // comments and blank lines are ignored
    auto mu = load("# header\n" + head + "\nMU2 # products\nv u -> -1/2*e1  # half\n");
    CHECK(show(mu, mu.evaluate(W(mu, {"v", "u"}))) == "-1/2*e1");
}
