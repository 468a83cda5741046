// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "torusfk/ainf.hpp"
#include "torusfk/gauge.hpp"
#include "torusfk/hochschild.hpp"
#include "torusfk/perturbation.hpp"
#include "torusfk/skoldberg.hpp"
#include "torusfk/torus_polygons.hpp"
#include "torusfk/useries.hpp"

using namespace torusfk;

namespace
{

struct Outcome
{
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            notes.push_back(what);
        }
    }
};

const FieldSpec Q = FieldSpec::rationals();

std::vector<FieldSpec> fields(std::initializer_list<std::uint64_t> ps)
{
    std::vector<FieldSpec> out;
    for (auto p : ps)
        out.push_back(p ? FieldSpec::prime(p) : Q);
    return out;
}

FieldValue small_value(const FieldSpec& spec, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    while (true) {
        const long d = den(rng);
        if (spec.inverts(d))
            return make_fraction(spec, num(rng), d);
    }
}

HochschildCochain random_cochain(const QuiverCategory& cat, const FieldSpec& spec, int r, int s,
                                 std::mt19937_64& rng, int density)
{
    CochainSpace space(cat, r, s);
    std::uniform_int_distribution<int> coin(0, 99);
    SparseVec v;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (coin(rng) < density)
            v.add(static_cast<int>(i), small_value(spec, rng));
    return space.from_vector(v);
}

bool degrees_consistent(const QuiverCategory& cat, const Table& t, int shift)
{
    for (const auto& [w, e] : t) {
        if (!cat.composable(w))
            return false;
        try {
            check_output(cat, w, e, shift);
        } catch (const Error&) {
            return false;
        }
    }
    return true;
}

bool structure_degrees(const AInfStructure& mu)
{
    for (int d = 1; d <= mu.order(); ++d)
        if (!degrees_consistent(mu.category(), mu.table(d), 2 - d))
            return false;
    return true;
}

Outcome hh_table()
{
    Outcome o;
    for (const auto& spec : fields({0, 2, 3})) {
        auto t = hh_bar(spec, 8);
        o.require(t == reference_hh_table(spec), "bar table differs over " + spec.name());
    }
    return o;
}

Outcome periodicity()
{
    Outcome o;
    auto q = skoldberg_hh(Q, 24);
    o.require(periodicity_defects(q, 1, 16, 8, -6).empty(), "8-step shift fails over Q");
    auto f2 = skoldberg_hh(FieldSpec::prime(2), 24);
    o.require(periodicity_defects(f2, 1, 20, 4, -3).empty(), "4-step shift fails over F2");
    return o;
}

Outcome cross_validation()
{
    Outcome o;
    for (const auto& spec : fields({0, 2, 3, 5}))
        o.require(hh_bar(spec, 6).dims == skoldberg_hh(spec, 6).dims, "bar and resolution differ over " + spec.name());
    return o;
}

Outcome minimal_model()
{
    Outcome o;
    auto tr = transfer(preset_splitting_C(Q), 12);
    auto lemma = lemma_check(tr, 12);
    o.require(lemma.ok(), "closed form fails");
    o.require(ainf_check(tr.minimal, 10).empty(), "relations fail through arity 10");
    return o;
}

Outcome gauge_g()
{
    Outcome o;
    auto B = transfer(preset_splitting_C(Q), 6).minimal;
    auto GB = gauge_apply(preset_gauge_G(Q, 6), B, 6);
    o.require(GB.table(3).empty(), "mu3 survives");
    o.require(GB.table(4) == expected_mu4_after_G(Q), "mu4 differs from the table");
    o.require(GB.table(4).size() == 13, "mu4 does not have 13 entries");
    const std::set<std::string> allowed = {"1/4", "-1/4", "1/2", "-1/2", "3/4"};
    for (const auto& [w, e] : GB.table(4))
        for (const auto& [g, c] : e.entries())
            o.require(allowed.count(c.to_string()) > 0, "unexpected coefficient " + c.to_string());
    return o;
}

Outcome gauge_h()
{
    Outcome o;
    auto B = transfer(preset_splitting_C(Q), 7).minimal;
    auto F = gauge_apply(preset_gauge_H(Q, 7), gauge_apply(preset_gauge_G(Q, 7), B, 7), 7);
    o.require(F.table(3).empty() && F.table(4).empty(), "mu3 or mu4 survives");
    auto mu6 = cochain_of(F, 6);
    auto cert = m6_certificate(F, mu6);
    o.require(cert.cocycle, "mu6 is not a cocycle");
    const std::vector<std::string> expected = {
        "144 mu6(u,v,f1,u,e1,v) = -9*f0", "144 mu6(f1,u,v,u,e1,v) = 5*f0", "144 mu6(f1,u,e1,v,u,v) = 9*f0",
        "144 mu6(f1,f1,u,e1,v,f1) = 11*f1"};
    o.require(cert.values == expected, "the four mu6 values differ");
    o.require(cert.nonzero, "delta nu = mu6 is solvable");
    o.require(!is_coboundary(F, mu6).primitive.has_value(), "a primitive of mu6 exists");
    return o;
}

long count_partitions(int n, int largest)
{
    if (n == 0)
        return 1;
    long total = 0;
    for (int part = std::min(n, largest); part >= 1; --part)
        total += count_partitions(n - part, part);
    return total;
}

Outcome jacobi()
{
    Outcome o;
    auto u = partition_series(50);
    o.require(series_mul(series_pow(u, 3), theta_v(50)) == IntSeries::constant(1, 50), "u^3 v != 1 mod U^51");
    for (int n = 0; n <= 30; ++n)
        o.require(u[n] == count_partitions(n, n), "partition count differs at n = " + std::to_string(n));
    return o;
}

Outcome polygons()
{
    Outcome o;
    auto scene = preset_scene();
    const int P = 4, N = 10;
    o.require(mu2_series(scene, P).is_zero(), "mu2 != 0");
    auto mu3 = mu3_series(scene, P);
    auto lhs = series_mul(series_scale(series_pow(partition_series(N), 3), mpz_class(-1)), mu3);
    o.require(lhs == IntSeries::constant(1, N), "-u^3 mu3 != 1");
    auto tri = triangle_witnesses(scene, P);
    auto quad = quadrilateral_witnesses(scene, P);
    for (int p = 0; p <= P; ++p) {
        const int m = p * (p + 1) / 2;
        int t = 0;
        std::map<bool, int> families;
        for (const auto& w : tri)
            if (w.wrap == p) {
                ++t;
                o.require(w.multiplicity == m, "triangle multiplicity differs in band " + std::to_string(p));
            }
        for (const auto& w : quad)
            if (w.wrap == p) {
                ++families[w.edge_positive.back()];
                o.require(w.multiplicity == m, "quadrilateral multiplicity differs in band " + std::to_string(p));
            }
        o.require(t == 2, "band " + std::to_string(p) + " has " + std::to_string(t) + " triangles");
        // two quadrilateral families with p + 1 and p members
        const int a = families[true], b = families[false];
        o.require(std::max(a, b) == p + 1 && std::min(a, b) == p,
                  "band " + std::to_string(p) + " quadrilateral families differ");
    }
    return o;
}

Outcome classification()
{
    Outcome o;
    const std::vector<std::pair<FieldValue, FieldValue>> targets = {
        {FieldValue(Q, 1L), FieldValue::zero(Q)},
        {FieldValue::zero(Q), FieldValue(Q, 1L)},
        {make_fraction(Q, 2, 3), make_fraction(Q, -5, 7)}};
    for (const auto& [a, b] : targets) {
        auto R = mc_realize(Q, a, b, 12);
        o.require(ainf_check(R, 12, CheckMode::normalized).empty(), "relations fail for (" + a.to_string() + ", " +
                                                                         b.to_string() + ")");
        auto dc = extract_invariants(R);
        o.require(dc.m6 == a && dc.m8 == b, "realized classes read back wrong");
    }
    auto B = transfer(preset_splitting_C(Q), 8).minimal;
    auto base = extract_invariants(B);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto moved = gauge_apply(random_gauge(Q, B.category(), 4, 8, seed), B, 8);
        auto dc = extract_invariants(moved);
        o.require(dc.m6 == base.m6 && dc.m8 == base.m8, "invariants move under seed " + std::to_string(seed));
    }
    auto R = mc_realize(Q, make_fraction(Q, 1, 2), FieldValue(Q, 3L), 8);
    auto r0 = extract_invariants(R);
    for (long t : {2L, 3L, 5L}) {
        auto dc = extract_invariants(rescale(R, FieldValue(Q, t)));
        o.require(dc.m6 == r0.m6 * FieldValue(Q, t * t * t * t) &&
                      dc.m8 == r0.m8 * FieldValue(Q, t * t * t * t * t * t),
                  "rescaling by " + std::to_string(t) + " does not act by (t^4, t^6)");
    }
    return o;
}

Outcome structural()
{
    Outcome o;
    std::mt19937_64 rng(20240917);
    // delta^2 = 0
    for (const auto& spec : fields({0, 2, 3, 5})) {
        auto A = preset_A(spec);
        for (int r = 0; r <= 5; ++r)
            for (int s = -r; s <= 1; ++s) {
                auto phi = random_cochain(A.category(), spec, r, s, rng, 50);
                o.require(coboundary(A, coboundary(A, phi)).empty(), "delta^2 != 0 over " + spec.name());
            }
    }
    // graded Jacobi identity for the bracket
    for (const auto& spec : fields({0, 5})) {
        auto A = preset_A(spec);
        const auto& cat = A.category();
        auto br = [&](const HochschildCochain& x, const HochschildCochain& y) { return gerstenhaber(cat, spec, x, y); };
        for (int t = 0; t < 12; ++t) {
            auto a = random_cochain(cat, spec, 1 + t % 2, -(t % 2), rng, 30);
            auto b = random_cochain(cat, spec, 2, 1 - (t + 1) % 3, rng, 30);
            auto c = random_cochain(cat, spec, 1 + (t / 2) % 3, 0, rng, 30);
            auto lhs = br(a, br(b, c));
            auto rhs = br(br(a, b), c);
            const long e = static_cast<long>(a.shifted_degree()) * b.shifted_degree();
            axpy(rhs, FieldValue(spec, e % 2 ? -1L : 1L), br(b, br(a, c)));
            o.require(lhs == rhs, "graded Jacobi fails over " + spec.name());
        }
    }
    // relations preserved under gauge, with degree bookkeeping on every table
    auto B = transfer(preset_splitting_C(Q), 8).minimal;
    o.require(structure_degrees(B), "degree bookkeeping fails on the transferred model");
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        auto g = random_gauge(Q, B.category(), 5, 8, seed);
        for (int d = 2; d <= 8; ++d)
            o.require(degrees_consistent(B.category(), g.table(d), 1 - d), "gauge degree bookkeeping fails");
        auto moved = gauge_apply(g, B, 8);
        o.require(ainf_check(moved, 8).empty(), "gauge breaks the relations, seed " + std::to_string(seed));
        o.require(structure_degrees(moved), "degree bookkeeping fails after gauge");
    }
    for (const auto& mu : {preset_A(Q), preset_C(Q), preset_D(FieldSpec::prime(5)), mc_realize(Q, FieldValue(Q, 1L),
                                                                                            FieldValue(Q, 1L), 10)})
        o.require(structure_degrees(mu), "degree bookkeeping fails on a preset");
    return o;
}

} // namespace

int main()
{
    struct Criterion
    {
        int id;
        std::string name;
        double limit; // seconds, 0 for none
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "HH table over Q, F2, F3 for r <= 8", 60, hh_table},
        {2, "periodicity (8, -6) over Q and (4, -3) over F2", 30, periodicity},
        {3, "bar complex and resolution agree for r <= 6 over Q, F2, F3, F5", 0, cross_validation},
        {4, "transferred model: closed form through 12, relations through 10", 60, minimal_model},
        {5, "gauge G: mu3 = 0 and the 13-entry mu4 table", 0, gauge_g},
        {6, "gauge H: mu3 = mu4 = 0, mu6 cocycle, four values, m6 nonzero", 120, gauge_h},
        {7, "Jacobi u^3 v = 1 mod U^51 and partition counts for n <= 30", 5, jacobi},
        {8, "polygon products through U^10 with band counts and multiplicities", 60, polygons},
        {9, "realization, gauge invariance of (m6, m8), rescaling weights", 0, classification},
        {10, "structural properties with fixed seeds", 0, structural},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit > 0 && secs > c.limit) {
            o.ok = false;
            o.notes.push_back("time limit " + std::to_string(static_cast<int>(c.limit)) + " s exceeded");
        }
        all = all && o.ok;
        std::ostringstream t;
        t << std::fixed << std::setprecision(2) << secs;
        std::cout << "criterion " << c.id << ": " << (o.ok ? "PASS" : "FAIL") << " (" << t.str() << " s) " << c.name
                  << "\n";
        for (const auto& n : o.notes)
            std::cout << "  " << n << "\n";
    }
    return all ? 0 : 1;
}
