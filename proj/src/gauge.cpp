#include "torusfk/gauge.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace torusfk
{

namespace
{

bool has_identity(const QuiverCategory& cat, const Word& w)
{
    return std::any_of(w.begin(), w.end(), [&](int g) { return cat.is_identity(g); });
}

// Sum over compositions s_1 + .. + s_r = |w| of the tensor
// g^{s_r}(..) (x) .. (x) g^{s_1}(..), as a map from output words (display
// order, length r) to coefficients. g^1 is the identity.
std::map<Word, FieldValue> expand(const GaugeTransformation& g, const Word& w)
{
    const int d = static_cast<int>(w.size());
    const FieldSpec& spec = g.spec();
    // state[p]: words over the innermost p letters, stored innermost first
    std::vector<std::map<Word, FieldValue>> state(d + 1);
    state[0].emplace(Word{}, FieldValue::one(spec));
    for (int p = 1; p <= d; ++p) {
        auto& cur = state[p];
        auto push = [&](const Word& base, int gen, const FieldValue& c) {
            Word nw = base;
            nw.push_back(gen);
            auto it = cur.find(nw);
            if (it == cur.end())
                cur.emplace(std::move(nw), c);
            else {
                it->second += c;
                if (it->second.is_zero())
                    cur.erase(it);
            }
        };
        for (int s = 1; s <= p; ++s) {
            if (state[p - s].empty())
                continue;
            if (s == 1) {
                for (const auto& [base, c] : state[p - 1])
                    push(base, w[d - p], c);
                continue;
            }
            if (s > g.order())
                continue;
            const Word block(w.begin() + (d - p), w.begin() + (d - p + s));
            const Element* out = g.find(block);
            if (!out)
                continue;
            for (const auto& [base, c] : state[p - s])
                for (const auto& [gen, c2] : out->entries())
                    push(base, gen, c * c2);
        }
    }
    std::map<Word, FieldValue> result;
    for (auto& [rev, c] : state[d])
        result.emplace(Word(rev.rbegin(), rev.rend()), c);
    return result;
}

Element lookup(const AInfStructure& mu, const Word& w)
{
    if (w.size() >= 3 && has_identity(mu.category(), w))
        return {};
    if (static_cast<int>(w.size()) > mu.order())
        return {};
    const Element* e = mu.find(w);
    return e ? *e : Element{};
}

Word W(const QuiverCategory& cat, std::initializer_list<const char*> names)
{
    Word w;
    for (const char* n : names)
        w.push_back(cat.generator_id(n));
    return w;
}

void put(Table& t, const QuiverCategory& cat, const FieldSpec& spec, std::initializer_list<const char*> word,
         long num, long den, const char* out)
{
    t[W(cat, word)] = Element::term(cat.generator_id(out), make_fraction(spec, num, den));
}

void require_char(const FieldSpec& spec)
{
    if (spec.characteristic() == 2 || spec.characteristic() == 3)
        throw Error("characteristic " + std::to_string(spec.characteristic()) + " is not supported here");
}

} // namespace

GaugeTransformation::GaugeTransformation(FieldSpec spec, QuiverCategory cat, int order)
    : m_spec(std::move(spec)), m_cat(std::move(cat)), m_order(order), m_tables(std::max(order, 1) + 1)
{
    if (order < 1)
        throw Error("gauge order must be positive");
}

void GaugeTransformation::set(const Word& w, Element value)
{
    const int d = static_cast<int>(w.size());
    if (d < 2 || d > m_order)
        throw Error("gauge component arity " + std::to_string(d) + " outside 2.." + std::to_string(m_order));
    if (!m_cat.composable(w))
        throw Error("noncomposable gauge word " + m_cat.word_name(w));
    if (has_identity(m_cat, w))
        throw Error("gauge components vanish on identities: " + m_cat.word_name(w));
    check_output(m_cat, w, value, 1 - d);
    if (value.empty())
        m_tables[d].erase(w);
    else
        m_tables[d][w] = std::move(value);
}

void GaugeTransformation::add(const Word& w, const Element& value)
{
    Element cur;
    if (const Element* e = find(w))
        cur = *e;
    cur.axpy(FieldValue::one(m_spec), value);
    set(w, std::move(cur));
}

const Table& GaugeTransformation::table(int d) const
{
    static const Table empty;
    if (d < 2 || d > m_order)
        return empty;
    return m_tables[d];
}

const Element* GaugeTransformation::find(const Word& w) const
{
    const auto& t = table(static_cast<int>(w.size()));
    auto it = t.find(w);
    return it == t.end() ? nullptr : &it->second;
}

bool GaugeTransformation::is_identity() const
{
    return std::all_of(m_tables.begin(), m_tables.end(), [](const Table& t) { return t.empty(); });
}

HochschildCochain GaugeTransformation::component(int d) const
{
    return HochschildCochain{d, 1 - d, table(d)};
}

void GaugeTransformation::set_component(const HochschildCochain& c)
{
    if (c.s != 1 - c.r)
        throw Error("gauge component must have internal degree 1 - r");
    if (c.r < 2 || c.r > m_order)
        throw Error("gauge component arity out of range");
    m_tables[c.r].clear();
    for (const auto& [w, e] : c.table)
        set(w, e);
}

AInfStructure gauge_apply(const GaugeTransformation& g, const AInfStructure& mu, int order)
{
    if (!mu.is_minimal())
        throw Error("gauge action needs a minimal structure");
    if (order > mu.order())
        throw Error("gauge order exceeds the structure's order");
    const auto& cat = mu.category();
    const FieldSpec& spec = mu.spec();
    AInfStructure out(spec, cat, order);
    if (order >= 2)
        for (const auto& [w, e] : mu.table(2))
            out.set(w, e);
    for (int d = 3; d <= order; ++d) {
        for (const Word& w : cat.composable_words(d, true)) {
            Element val;
            // sum (-1)^{koszul(i)} g^{d-j+1}(.., mu^j(a_{i+j}..a_{i+1}), a_i..a_1)
            for (int j = 2; j <= d; ++j) {
                const int k = d - j + 1;
                if (k > 1 && g.table(k).empty())
                    continue;
                for (int i = 0; i + j <= d; ++i) {
                    const Word block(w.begin() + (d - i - j), w.begin() + (d - i));
                    const Element* m = mu.find(block);
                    if (!m)
                        continue;
                    FieldValue sign = FieldValue::one(spec);
                    if (koszul_prefix(cat, w, i) % 2)
                        sign = -sign;
                    if (k == 1) {
                        val.axpy(sign, *m);
                        continue;
                    }
                    Word outer(w.begin(), w.begin() + (d - i - j));
                    const std::size_t slot = outer.size();
                    outer.push_back(0);
                    outer.insert(outer.end(), w.begin() + (d - i), w.end());
                    for (const auto& [gen, c] : m->entries()) {
                        if (cat.is_identity(gen))
                            continue;
                        outer[slot] = gen;
                        if (const Element* ge = g.find(outer))
                            val.axpy(sign * c, *ge);
                    }
                }
            }
            // - sum_{2 <= r < d} (G_* mu)^r(g^{s_r}(..), .., g^{s_1}(..))
            for (const auto& [ow, c] : expand(g, w)) {
                const int r = static_cast<int>(ow.size());
                if (r < 2 || r >= d)
                    continue;
                Element e = lookup(out, ow);
                if (!e.empty())
                    val.axpy(-c, e);
            }
            out.set(w, std::move(val));
        }
    }
    return out;
}

GaugeTransformation compose(const GaugeTransformation& h, const GaugeTransformation& g)
{
    if (!(h.category() == g.category()) || !(h.spec() == g.spec()))
        throw Error("composing gauges on different categories");
    const auto& cat = g.category();
    const int order = std::min(h.order(), g.order());
    GaugeTransformation out(g.spec(), cat, order);
    for (int d = 2; d <= order; ++d) {
        for (const Word& w : cat.composable_words(d, true)) {
            Element val;
            for (const auto& [ow, c] : expand(g, w)) {
                if (ow.size() == 1) {
                    val.add(ow[0], c);
                    continue;
                }
                if (has_identity(cat, ow))
                    continue;
                if (const Element* e = h.find(ow))
                    val.axpy(c, *e);
            }
            if (!val.empty())
                out.set(w, std::move(val));
        }
    }
    return out;
}

GaugeTransformation preset_gauge_G(const FieldSpec& spec, int order)
{
    require_char(spec);
    GaugeTransformation g(spec, preset_A(spec).category(), order);
    const auto& cat = g.category();
    Table t;
    // The sign here is forced: +1/2 leaves mu3(e1, v, u) = -e1 behind.
    put(t, cat, spec, {"e1", "e1"}, -1, 2, "e1");
    put(t, cat, spec, {"f1", "f1"}, -1, 2, "f1");
    put(t, cat, spec, {"e1", "v"}, -1, 2, "v");
    put(t, cat, spec, {"v", "f1"}, 1, 2, "v");
    put(t, cat, spec, {"u", "e1"}, -1, 2, "u");
    put(t, cat, spec, {"f1", "u"}, -1, 2, "u");
    for (const auto& [w, e] : t)
        g.set(w, e);
    return g;
}

GaugeTransformation preset_gauge_H(const FieldSpec& spec, int order)
{
    require_char(spec);
    GaugeTransformation h(spec, preset_A(spec).category(), order);
    const auto& cat = h.category();
    Table t;
    put(t, cat, spec, {"v", "f1", "u"}, -1, 12, "e0");
    put(t, cat, spec, {"v", "u", "e1"}, -1, 12, "e0");
    put(t, cat, spec, {"e1", "e1", "e1"}, 1, 3, "e1");
    put(t, cat, spec, {"f1", "u", "v"}, -1, 12, "f0");
    put(t, cat, spec, {"u", "e1", "v"}, -1, 12, "f0");
    put(t, cat, spec, {"f1", "f1", "f1"}, 1, 3, "f1");
    put(t, cat, spec, {"e1", "v", "f1"}, -1, 3, "v");
    put(t, cat, spec, {"v", "f1", "f1"}, -1, 6, "v");
    put(t, cat, spec, {"e1", "e1", "v"}, 1, 3, "v");
    put(t, cat, spec, {"f1", "f1", "u"}, 5, 12, "u");
    put(t, cat, spec, {"f1", "u", "e1"}, 1, 3, "u");
    put(t, cat, spec, {"u", "e1", "e1"}, 5, 12, "u");
    for (const auto& [w, e] : t)
        h.set(w, e);
    return h;
}

Table expected_mu4_after_G(const FieldSpec& spec)
{
    require_char(spec);
    const auto A = preset_A(spec);
    const auto& cat = A.category();
    Table t;
    put(t, cat, spec, {"e1", "v", "f1", "u"}, 1, 4, "e1");
    put(t, cat, spec, {"e1", "v", "u", "e1"}, 1, 4, "e1");
    put(t, cat, spec, {"v", "f1", "f1", "u"}, -1, 4, "e1");
    put(t, cat, spec, {"v", "f1", "u", "e1"}, -1, 4, "e1");
    put(t, cat, spec, {"f1", "u", "e1", "v"}, 1, 4, "f1");
    put(t, cat, spec, {"f1", "u", "v", "f1"}, -1, 4, "f1");
    put(t, cat, spec, {"u", "e1", "v", "f1"}, -1, 4, "f1");
    put(t, cat, spec, {"u", "v", "f1", "f1"}, -1, 2, "f1");
    put(t, cat, spec, {"u", "e1", "e1", "v"}, 3, 4, "f1");
    put(t, cat, spec, {"v", "u", "e1", "v"}, -1, 2, "v");
    put(t, cat, spec, {"v", "u", "v", "f1"}, 1, 2, "v");
    put(t, cat, spec, {"u", "e1", "v", "u"}, 1, 2, "u");
    put(t, cat, spec, {"u", "v", "f1", "u"}, -1, 2, "u");
    return t;
}

ObstructionError::ObstructionError(int order, HochschildCochain cocycle, HochschildCochain certificate,
                                   const std::string& what)
    : Error(what), m_order(order), m_cocycle(std::move(cocycle)), m_certificate(std::move(certificate))
{
}

KillResult kill_orders(const AInfStructure& mu, const std::set<int>& orders, int order)
{
    if (order > mu.order())
        throw Error("requested order exceeds the structure's order");
    AInfStructure current = mu;
    current.set_order(order);
    GaugeTransformation total(mu.spec(), mu.category(), order);
    for (int d : orders) {
        if (d < 3 || d > order)
            throw Error("cannot kill order " + std::to_string(d));
        HochschildCochain c = cochain_of(current, d);
        if (c.empty())
            continue;
        if (!coboundary(current, c).empty())
            throw Error("mu" + std::to_string(d) + " is not a Hochschild cocycle");
        auto res = is_coboundary(current, c);
        if (!res.primitive)
            throw ObstructionError(d, c, *res.certificate,
                                   "mu" + std::to_string(d) + " represents a nonzero Hochschild class");
        if (d - 1 < 2)
            throw Error("no gauge component of arity " + std::to_string(d - 1));
        GaugeTransformation g(mu.spec(), mu.category(), order);
        g.set_component(*res.primitive);
        current = gauge_apply(g, current, order);
        total = compose(g, total);
        if (!current.table(d).empty())
            throw Error("gauge failed to kill mu" + std::to_string(d));
    }
    return KillResult{std::move(total), std::move(current)};
}

HochschildCochain basis_cocycle_m6(const FieldSpec& spec)
{
    auto b = cohomology_basis(preset_A(spec), 6, -4);
    if (b.size() != 1)
        throw Error("HH at (6, -4) is not one-dimensional over " + spec.name());
    return b[0];
}

HochschildCochain basis_cocycle_m8(const FieldSpec& spec)
{
    auto b = cohomology_basis(preset_A(spec), 8, -6);
    if (b.size() != 1)
        throw Error("HH at (8, -6) is not one-dimensional over " + spec.name());
    return b[0];
}

FieldValue class_coordinate(const AInfStructure& algebra, const HochschildCochain& cocycle,
                            const HochschildCochain& basis)
{
    const FieldSpec& spec = algebra.spec();
    if (cocycle.r != basis.r || cocycle.s != basis.s)
        throw Error("cocycle and basis cocycle live in different cells");
    if (!coboundary(algebra, cocycle).empty())
        throw Error("not a Hochschild cocycle");
    auto res = is_coboundary(algebra, basis);
    if (!res.certificate)
        throw Error("basis cocycle is a coboundary");
    return pair_dual(*res.certificate, cocycle, spec) / pair_dual(*res.certificate, basis, spec);
}

DeformationClass extract_invariants(const AInfStructure& mu)
{
    const FieldSpec& spec = mu.spec();
    require_char(spec);
    if (mu.order() < 8)
        throw Error("invariants need the structure through order 8");
    auto first = kill_orders(mu, {3, 4, 5}, 8);
    HochschildCochain mu6 = cochain_of(first.structure, 6);
    auto second = kill_orders(first.structure, {7}, 8);
    HochschildCochain mu8 = cochain_of(second.structure, 8);
    if (mu6.empty())
        mu6 = HochschildCochain{6, -4, {}};
    if (mu8.empty())
        mu8 = HochschildCochain{8, -6, {}};
    const auto& algebra = second.structure;
    DeformationClass dc{FieldValue::zero(spec), FieldValue::zero(spec), mu6, mu8};
    if (!mu6.empty())
        dc.m6 = class_coordinate(algebra, mu6, basis_cocycle_m6(spec));
    if (!mu8.empty())
        dc.m8 = class_coordinate(algebra, mu8, basis_cocycle_m8(spec));
    return dc;
}

GaugeTransformation random_gauge(const FieldSpec& spec, const QuiverCategory& cat, int max_arity, int order,
                                 std::uint64_t seed, double density)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution pick(density);
    std::uniform_int_distribution<long> num(-3, 3), den(1, 4);
    GaugeTransformation g(spec, cat, order);
    for (int d = 2; d <= std::min(max_arity, order); ++d) {
        CochainSpace space(cat, d, 1 - d);
        for (std::size_t i = 0; i < space.size(); ++i) {
            if (!pick(rng))
                continue;
            const long n = num(rng), m = den(rng);
            if (n == 0 || !spec.inverts(m))
                continue;
            const auto& [w, out] = space.basis(i);
            g.add(w, Element::term(out, make_fraction(spec, n, m)));
        }
    }
    return g;
}

AInfStructure rescale(const AInfStructure& mu, const FieldValue& t)
{
    AInfStructure out(mu.spec(), mu.category(), mu.order());
    FieldValue factor = FieldValue::one(mu.spec());
    for (int d = 1; d <= mu.order(); ++d) {
        if (d == 1)
            factor = t.inverse();
        else
            factor *= t;
        for (const auto& [w, e] : mu.table(d)) {
            Element x = e;
            x.scale(factor);
            out.set(w, std::move(x));
        }
    }
    return out;
}

AInfStructure mc_extend(const AInfStructure& mu, int from, const std::map<int, HochschildCochain>& prescribed,
                        int order)
{
    const FieldSpec& spec = mu.spec();
    if (!spec.inverts(2))
        throw Error("Maurer-Cartan extension needs 2 invertible");
    if (from < 3)
        throw Error("extension starts at order 3 or later");
    if (!mu.is_minimal())
        throw Error("Maurer-Cartan extension needs a minimal structure");
    AInfStructure out = mu;
    out.set_order(order);
    for (int d = from; d <= order; ++d)
        out.clear_arity(d);
    const auto& cat = out.category();
    const FieldValue minus_half = make_fraction(spec, -1, 2);
    for (int d = from; d <= order; ++d) {
        HochschildCochain rhs{d + 1, 2 - d, {}};
        for (int j = 3; j <= d - 1; ++j) {
            HochschildCochain a = cochain_of(out, j), b = cochain_of(out, d + 2 - j);
            if (a.empty() || b.empty())
                continue;
            axpy(rhs, minus_half, gerstenhaber(cat, spec, a, b));
        }
        HochschildCochain value{d, 2 - d, {}};
        if (!rhs.empty()) {
            auto res = is_coboundary(out, rhs);
            if (!res.primitive)
                throw Error("Maurer-Cartan equation has no solution at order " + std::to_string(d));
            value = *res.primitive;
        }
        if (auto it = prescribed.find(d); it != prescribed.end()) {
            if (it->second.r != d || it->second.s != 2 - d)
                throw Error("prescribed cocycle has the wrong bidegree at order " + std::to_string(d));
            if (!coboundary(out, it->second).empty())
                throw Error("prescribed cochain at order " + std::to_string(d) + " is not a cocycle");
            axpy(value, FieldValue::one(spec), it->second);
        }
        store_cochain(out, value);
    }
    return out;
}

AInfStructure mc_realize(const FieldSpec& spec, const FieldValue& a, const FieldValue& b, int order)
{
    require_char(spec);
    std::map<int, HochschildCochain> prescribed;
    if (order >= 6 && !a.is_zero())
        prescribed[6] = scaled(basis_cocycle_m6(spec), a);
    if (order >= 8 && !b.is_zero())
        prescribed[8] = scaled(basis_cocycle_m8(spec), b);
    return mc_extend(preset_A(spec, order), 3, prescribed, order);
}

M6Certificate m6_certificate(const AInfStructure& algebra, const HochschildCochain& mu6)
{
    const FieldSpec& spec = algebra.spec();
    const auto& cat = algebra.category();
    if (mu6.r != 6 || mu6.s != -4)
        throw Error("m6 certificate expects a cochain of length 6 and internal degree -4");
    M6Certificate cert;
    cert.cocycle = coboundary(algebra, mu6).empty();
    auto res = is_coboundary(algebra, mu6);
    cert.nonzero = !res.primitive;
    if (res.certificate)
        cert.dual = *res.certificate;

    if (!spec.inverts(2) || !spec.inverts(3))
        return cert;
    const FieldValue scale(spec, 144L);
    struct Witness
    {
        Word word;
        int output;
    };
    const int f0 = cat.generator_id("f0"), f1 = cat.generator_id("f1");
    const std::vector<Witness> witnesses{{W(cat, {"u", "v", "f1", "u", "e1", "v"}), f0},
                                         {W(cat, {"f1", "u", "v", "u", "e1", "v"}), f0},
                                         {W(cat, {"f1", "u", "e1", "v", "u", "v"}), f0},
                                         {W(cat, {"f1", "f1", "u", "e1", "v", "f1"}), f1}};

    // Rows of delta nu = 144 mu6 at the witness components; columns absent
    // from the cochain space are excluded by degree.
    CochainSpace from(cat, 5, -4), to(cat, 6, -4);
    SparseMatrix delta = delta_matrix(algebra, from, to);
    std::vector<SparseVec> rows;
    std::vector<FieldValue> rhs;
    for (const auto& wit : witnesses) {
        Element v;
        if (const Element* e = mu6.at(wit.word))
            v = *e;
        v.scale(scale);
        cert.values.push_back("144 mu6" + cat.word_name(wit.word) + " = " + format_element(cat, v));
        auto idx = to.index(wit.word, wit.output);
        rows.push_back(idx ? delta.row_data[*idx] : SparseVec{});
        rhs.push_back(v.at(wit.output, spec));
    }

    auto unknown = [&](int col) {
        const auto& [w, g] = from.basis(col);
        return "nu" + cat.word_name(w) + "[" + cat.generator(g).name + "]";
    };
    std::map<int, FieldValue> known;
    std::vector<bool> used(rows.size(), false);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i])
                continue;
            int free_col = -1, free_count = 0;
            FieldValue acc = rhs[i];
            FieldValue free_coeff = FieldValue::zero(spec);
            for (const auto& [col, c] : rows[i].entries()) {
                if (auto it = known.find(col); it != known.end())
                    acc -= c * it->second;
                else {
                    ++free_count;
                    free_col = col;
                    free_coeff = c;
                }
            }
            if (free_count == 1) {
                FieldValue value = acc / free_coeff;
                known.emplace(free_col, value);
                cert.chain.push_back("row " + std::to_string(i + 1) + " forces " + unknown(free_col) + " = " +
                                     value.to_string());
                used[i] = true;
                progress = true;
            } else if (free_count == 0) {
                used[i] = true;
                progress = true;
                if (!acc.is_zero()) {
                    cert.chain_closed = true;
                    FieldValue lhs = rhs[i] - acc;
                    cert.chain.push_back("row " + std::to_string(i + 1) + " then reads " + lhs.to_string() +
                                         " = " + rhs[i].to_string() + ", a contradiction");
                } else {
                    cert.chain.push_back("row " + std::to_string(i + 1) + " is consistent");
                }
            }
        }
    }
    if (!cert.chain_closed) {
        // Fall back to the exact subsystem check.
        SparseMatrix sub(rows.size(), from.size());
        SparseVec b;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            sub.row_data[i] = rows[i];
            b.add(static_cast<int>(i), rhs[i]);
        }
        if (solve(sub, b, spec).certificate) {
            cert.chain_closed = true;
            cert.chain.push_back("the four witness rows are jointly inconsistent");
        }
    }
    return cert;
}

std::string dump_gauge(const GaugeTransformation& g)
{
    std::ostringstream os;
    os << "FIELD " << g.spec().name() << "\n";
    os << "ORDER " << g.order() << "\n";
    os << dump_category(g.category());
    for (int d = 2; d <= g.order(); ++d)
        if (!g.table(d).empty())
            os << dump_table(g.category(), g.category(), "G" + std::to_string(d), g.table(d));
    return os.str();
}

GaugeTransformation load_gauge(std::string_view text, std::optional<FieldSpec> field)
{
    auto sections = split_sections(text, {"FIELD", "ORDER", "OBJECTS", "GENERATORS", "IDENTITIES", "G*"});
    FieldSpec spec = field.value_or(FieldSpec::rationals());
    int order = 12;
    for (const auto& s : sections) {
        if (s.name == "FIELD") {
            if (s.args.size() != 1 || !s.body.empty())
                throw ParseError(s.header.number, "expected 'FIELD <name>'");
            if (!field) {
                try {
                    spec = FieldSpec::parse(s.args[0]);
                } catch (const Error& e) {
                    throw ParseError(s.header.number, e.what());
                }
            }
        } else if (s.name == "ORDER") {
            if (s.args.size() != 1 || !s.body.empty())
                throw ParseError(s.header.number, "expected 'ORDER <n>'");
            try {
                std::size_t used = 0;
                order = std::stoi(s.args[0], &used);
                if (used != s.args[0].size() || order < 1)
                    throw Error("");
            } catch (...) {
                throw ParseError(s.header.number, "malformed order '" + s.args[0] + "'");
            }
        }
    }
    GaugeTransformation g(spec, parse_category(sections), order);
    std::set<int> seen;
    for (const auto& s : sections) {
        int d = 0;
        if (!keyword_arity(s.name, "G", d))
            continue;
        if (d < 2 || d > order)
            throw ParseError(s.header.number, s.name + " is outside 2.." + std::to_string(order));
        if (!seen.insert(d).second)
            throw ParseError(s.header.number, "duplicate section " + s.name);
        for (auto& [w, e] : parse_table(g.category(), g.category(), spec, s, d, 1 - d)) {
            try {
                g.set(w, e);
            } catch (const ParseError&) {
                throw;
            } catch (const Error& err) {
                throw ParseError(s.header.number, err.what());
            }
        }
    }
    return g;
}

} // namespace torusfk
