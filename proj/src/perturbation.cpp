#include "torusfk/perturbation.hpp"

#include <sstream>

namespace torusfk
{

namespace
{

Element apply_linear(const std::vector<Element>& map, const Element& x, const FieldSpec& spec)
{
    Element out;
    for (const auto& [g, c] : x.entries())
        out.axpy(c, map.at(g));
    (void)spec;
    return out;
}

Element mu1(const AInfStructure& mu, const Element& x)
{
    return mu.apply({x});
}

} // namespace

SplittingData preset_splitting_C(const FieldSpec& spec)
{
    SplittingData s{preset_C(spec), preset_A(spec).category(), {}, {}, {}};
    const auto& amb = s.ambient.category();
    const auto& har = s.harmonic;
    auto A = [&](const char* n) { return amb.generator_id(n); };
    auto H = [&](const char* n) { return har.generator_id(n); };
    const FieldValue one = FieldValue::one(spec);

    s.inclusion.resize(har.generator_count());
    for (const char* n : {"e0", "e1", "f0", "f1"})
        s.inclusion[H(n)] = Element::basis(A(n), spec);
    s.inclusion[H("u")] = Element::basis(A("u01"), spec);
    s.inclusion[H("v")].add(A("v0"), one);
    s.inclusion[H("v")].add(A("v1"), one);

    // v0 = (v0 + v1) - v1, so the harmonic part of v0 is v.
    s.projection.resize(amb.generator_count());
    for (const char* n : {"e0", "e1", "f0", "f1"})
        s.projection[A(n)] = Element::basis(H(n), spec);
    s.projection[A("u01")] = Element::basis(H("u"), spec);
    s.projection[A("v0")] = Element::basis(H("v"), spec);

    s.homotopy.resize(amb.generator_count());
    s.homotopy[A("v01")] = Element::term(A("v1"), -one);
    return s;
}

SplittingReport check_splitting(const SplittingData& split)
{
    SplittingReport rep;
    const auto& amb = split.ambient;
    const auto& cat = amb.category();
    const FieldSpec& spec = amb.spec();
    auto fail = [&](bool& flag, bool ok, const std::string& what) {
        flag = ok;
        if (!ok)
            rep.failures.push_back(what);
    };
    if (split.inclusion.size() != split.harmonic.generator_count() ||
        split.projection.size() != cat.generator_count() || split.homotopy.size() != cat.generator_count()) {
        rep.failures.push_back("splitting maps have the wrong number of entries");
        return rep;
    }

    bool pi = true, closed = true, ti = true;
    for (std::size_t g = 0; g < split.harmonic.generator_count(); ++g) {
        const Element& ig = split.inclusion[g];
        pi = pi && apply_linear(split.projection, ig, spec) == Element::basis(static_cast<int>(g), spec);
        closed = closed && mu1(amb, ig).empty();
        ti = ti && apply_linear(split.homotopy, ig, spec).empty();
    }
    fail(rep.projection_splits, pi, "p i differs from the identity");
    fail(rep.harmonic_closed, closed, "mu1 does not vanish on the harmonic part");
    fail(rep.homotopy_kills_inclusion, ti, "T i is nonzero");

    bool eq = true, tt = true, pt = true;
    for (std::size_t g = 0; g < cat.generator_count(); ++g) {
        const Element x = Element::basis(static_cast<int>(g), spec);
        Element lhs = apply_linear(split.inclusion, split.projection[g], spec);
        lhs.axpy(-FieldValue::one(spec), x);
        Element rhs = mu1(amb, split.homotopy[g]);
        rhs.axpy(FieldValue::one(spec), apply_linear(split.homotopy, mu1(amb, x), spec));
        eq = eq && lhs == rhs;
        tt = tt && apply_linear(split.homotopy, split.homotopy[g], spec).empty();
        pt = pt && apply_linear(split.projection, split.homotopy[g], spec).empty();
    }
    fail(rep.homotopy_equation, eq, "i p - id differs from mu1 T + T mu1");
    fail(rep.homotopy_squares_zero, tt, "T T is nonzero");
    fail(rep.projection_kills_homotopy, pt, "p T is nonzero");
    return rep;
}

TransferResult transfer(const SplittingData& split, int order)
{
    if (order < 2)
        throw Error("transfer needs order at least 2");
    auto rep = check_splitting(split);
    if (!rep.ok()) {
        std::string msg = "invalid splitting:";
        for (const auto& f : rep.failures)
            msg += " " + f + ";";
        throw Error(msg);
    }
    const auto& amb = split.ambient;
    const FieldSpec& spec = amb.spec();
    const auto& har = split.harmonic;
    TransferResult res{AInfStructure(spec, har, order), std::vector<Table>(order + 1)};
    for (std::size_t g = 0; g < har.generator_count(); ++g)
        res.iota[1].emplace(Word{static_cast<int>(g)}, split.inclusion[g]);

    for (int d = 2; d <= order; ++d) {
        Table iota_d, mu_d;
        auto add_to = [&](Table& t, const Word& w, const Element& e) {
            if (e.empty())
                return;
            auto it = t.find(w);
            if (it == t.end()) {
                t.emplace(w, e);
                return;
            }
            it->second.axpy(FieldValue::one(spec), e);
            if (it->second.empty())
                t.erase(it);
        };
        for (int m = 1; m < d; ++m) {
            for (const auto& [w1, x1] : res.iota[d - m])
                for (const auto& [w2, x2] : res.iota[m]) {
                    if (har.generator(w1.back()).source != har.generator(w2.front()).target)
                        continue;
                    Element prod = amb.apply({x1, x2});
                    if (prod.empty())
                        continue;
                    Word w = w1;
                    w.insert(w.end(), w2.begin(), w2.end());
                    add_to(iota_d, w, apply_linear(split.homotopy, prod, spec));
                    add_to(mu_d, w, apply_linear(split.projection, prod, spec));
                }
        }
        for (const auto& [w, e] : iota_d)
            check_output(har, amb.category(), w, e, 1 - d);
        for (const auto& [w, e] : mu_d)
            res.minimal.set(w, e);
        res.iota[d] = std::move(iota_d);
    }
    return res;
}

LemmaReport lemma_check(const TransferResult& result, int up_to)
{
    const auto& B = result.minimal;
    const auto& cat = B.category();
    const FieldSpec& spec = B.spec();
    LemmaReport rep;
    if (up_to > B.order())
        throw Error("lemma check beyond the transfer order");
    rep.checked_up_to = up_to;
    const int u = cat.generator_id("u"), v = cat.generator_id("v");
    const int e1 = cat.generator_id("e1"), f1 = cat.generator_id("f1");

    auto compare = [&](int d, const Table& expected) {
        const Table& got = B.table(d);
        rep.nonzero_entries += got.size();
        for (const auto& [w, e] : got) {
            auto it = expected.find(w);
            if (it == expected.end())
                rep.failures.push_back("unexpected mu" + std::to_string(d) + cat.word_name(w) + " = " +
                                       format_element(cat, e));
            else if (!(it->second == e))
                rep.failures.push_back("mu" + std::to_string(d) + cat.word_name(w) + " = " + format_element(cat, e) +
                                       ", expected " + format_element(cat, it->second));
        }
        for (const auto& [w, e] : expected)
            if (!got.count(w))
                rep.failures.push_back("missing mu" + std::to_string(d) + cat.word_name(w) + " = " +
                                       format_element(cat, e));
    };

    if (!B.table(1).empty())
        rep.failures.push_back("transferred structure is not minimal");
    if (up_to >= 2)
        compare(2, preset_A(spec).table(2));
    for (int d = 3; d <= up_to; ++d) {
        Table expected;
        Word first{u};
        first.insert(first.end(), d - 3, e1);
        first.push_back(v);
        first.push_back(f1);
        expected[first] = Element::term(f1, FieldValue(spec, (d + 1) % 2 ? -1L : 1L));
        Word second{u};
        second.insert(second.end(), d - 2, e1);
        second.push_back(v);
        expected[second] = Element::term(f1, FieldValue(spec, d % 2 ? -1L : 1L));
        compare(d, expected);
    }
    return rep;
}

std::string dump_transfer(const TransferResult& result, const SplittingData& split)
{
    std::ostringstream os;
    os << dump(result.minimal);
    for (std::size_t d = 1; d < result.iota.size(); ++d)
        if (!result.iota[d].empty())
            os << dump_table(split.harmonic, split.ambient.category(), "IOTA" + std::to_string(d),
                             result.iota[d]);
    return os.str();
}

} // namespace torusfk
