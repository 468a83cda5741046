#include "torusfk/hochschild.hpp"

#include <sstream>

namespace torusfk
{

namespace
{

FieldValue sign(const FieldSpec& spec, long exponent)
{
    return FieldValue(spec, (exponent % 2 == 0) ? 1L : -1L);
}

// Preimages of each generator under mu^2 restricted to non-identity pairs.
struct ProductData
{
    std::vector<std::vector<std::tuple<int, int, FieldValue>>> preimage;
    std::vector<int> non_identity;

    explicit ProductData(const AInfStructure& algebra)
    {
        const auto& cat = algebra.category();
        preimage.resize(cat.generator_count());
        for (std::size_t g = 0; g < cat.generator_count(); ++g)
            if (!cat.is_identity(static_cast<int>(g)))
                non_identity.push_back(static_cast<int>(g));
        for (const auto& [w, e] : algebra.table(2)) {
            if (cat.is_identity(w[0]) || cat.is_identity(w[1]))
                continue;
            for (const auto& [t, c] : e.entries())
                preimage[t].emplace_back(w[0], w[1], c);
        }
    }
};

// Applies delta to the single-term cochain c * [w -> g] and feeds every
// resulting (word, element) contribution to `sink`.
template <class Sink>
void delta_term(const AInfStructure& algebra, const ProductData& pd, const Word& w, int r, int s, int g,
                const FieldValue& c, Sink&& sink)
{
    const auto& cat = algebra.category();
    const FieldSpec& spec = algebra.spec();
    const int shifted = r + s - 1;
    const int src = cochain_word_source(cat, w);
    const int tgt = cochain_word_target(cat, w);
    const Word base = (r == 0) ? Word{} : w;

    Word out;
    for (int x : pd.non_identity) {
        const auto& gx = cat.generator(x);
        if (gx.source == tgt) {
            if (const Element* val = algebra.find({x, g})) {
                out.clear();
                out.push_back(x);
                out.insert(out.end(), base.begin(), base.end());
                Element e = *val;
                e.scale(c);
                sink(out, e);
            }
        }
        if (gx.target == src) {
            if (const Element* val = algebra.find({g, x})) {
                out.assign(base.begin(), base.end());
                out.push_back(x);
                Element e = *val;
                e.scale(c * sign(spec, static_cast<long>(shifted) * (gx.degree - 1)));
                sink(out, e);
            }
        }
    }
    if (r == 0)
        return;
    // Contractions: a pair (p, q) in the new word multiplies to a term on w[k].
    int star = 0; // koszul prefix over the i innermost entries, i = r - 1 - k
    for (int k = r - 1; k >= 0; --k) {
        if (k < r - 1)
            star += cat.generator(w[k + 1]).degree - 1;
        for (const auto& [p, q, cc] : pd.preimage[w[k]]) {
            out.assign(w.begin(), w.begin() + k);
            out.push_back(p);
            out.push_back(q);
            out.insert(out.end(), w.begin() + k + 1, w.end());
            FieldValue coeff = -(sign(spec, shifted) * sign(spec, star)) * cc * c;
            sink(out, Element::term(g, coeff));
        }
    }
}

} // namespace

const Element* HochschildCochain::at(const Word& w) const
{
    auto it = table.find(w);
    return it == table.end() ? nullptr : &it->second;
}

void HochschildCochain::add(const Word& w, const Element& value, const FieldSpec& spec)
{
    if (value.empty())
        return;
    auto it = table.find(w);
    if (it == table.end()) {
        table.emplace(w, value);
        return;
    }
    it->second.axpy(FieldValue::one(spec), value);
    if (it->second.empty())
        table.erase(it);
}

void axpy(HochschildCochain& y, const FieldValue& c, const HochschildCochain& x)
{
    if (y.r != x.r || y.s != x.s)
        throw Error("cochains of different bidegrees cannot be added");
    if (c.is_zero())
        return;
    for (const auto& [w, e] : x.table) {
        Element t = e;
        t.scale(c);
        y.add(w, t, c.spec());
    }
}

HochschildCochain scaled(const HochschildCochain& x, const FieldValue& c)
{
    HochschildCochain y{x.r, x.s, {}};
    axpy(y, c, x);
    return y;
}

HochschildCochain cochain_of(const AInfStructure& mu, int d)
{
    HochschildCochain c{d, 2 - d, mu.table(d)};
    return c;
}

void store_cochain(AInfStructure& mu, const HochschildCochain& c)
{
    if (c.s != 2 - c.r)
        throw Error("cochain of internal degree " + std::to_string(c.s) + " cannot be an operation of arity " +
                    std::to_string(c.r));
    mu.clear_arity(c.r);
    for (const auto& [w, e] : c.table)
        mu.set(w, e);
}

int cochain_word_source(const QuiverCategory& cat, const Word& w)
{
    return is_object_key(w) ? ~w[0] : cat.word_source(w);
}

int cochain_word_target(const QuiverCategory& cat, const Word& w)
{
    return is_object_key(w) ? ~w[0] : cat.word_target(w);
}

CochainSpace::CochainSpace(const QuiverCategory& cat, int r, int s) : m_r(r), m_s(s)
{
    if (r < 0)
        throw Error("negative cochain length");
    if (r == 0) {
        for (std::size_t o = 0; o < cat.object_count(); ++o)
            m_words.push_back(object_key(static_cast<int>(o)));
    } else {
        m_words = cat.composable_words(r, true);
    }
    for (const Word& w : m_words) {
        const int deg = is_object_key(w) ? 0 : cat.word_degree(w);
        auto& slot = m_index[w];
        for (int g : cat.hom_basis(cochain_word_source(cat, w), cochain_word_target(cat, w), deg + s)) {
            slot[g] = static_cast<int>(m_basis.size());
            m_basis.emplace_back(w, g);
        }
    }
}

std::optional<int> CochainSpace::index(const Word& w, int g) const
{
    auto it = m_index.find(w);
    if (it == m_index.end())
        return std::nullopt;
    auto jt = it->second.find(g);
    if (jt == it->second.end())
        return std::nullopt;
    return jt->second;
}

SparseVec CochainSpace::to_vector(const HochschildCochain& c) const
{
    if (c.r != m_r || c.s != m_s)
        throw Error("cochain does not live in this space");
    SparseVec v;
    for (const auto& [w, e] : c.table)
        for (const auto& [g, x] : e.entries()) {
            auto i = index(w, g);
            if (!i)
                throw Error("cochain entry outside the normalized basis");
            v.add(*i, x);
        }
    return v;
}

HochschildCochain CochainSpace::from_vector(const SparseVec& v) const
{
    HochschildCochain c{m_r, m_s, {}};
    for (const auto& [i, x] : v.entries()) {
        const auto& [w, g] = m_basis.at(i);
        c.add(w, Element::term(g, x), x.spec());
    }
    return c;
}

HochschildCochain coboundary(const AInfStructure& algebra, const HochschildCochain& phi)
{
    ProductData pd(algebra);
    HochschildCochain out{phi.r + 1, phi.s, {}};
    const FieldSpec& spec = algebra.spec();
    for (const auto& [w, e] : phi.table)
        for (const auto& [g, c] : e.entries())
            delta_term(algebra, pd, w, phi.r, phi.s, g, c,
                       [&](const Word& w2, const Element& v) { out.add(w2, v, spec); });
    return out;
}

SparseMatrix delta_matrix(const AInfStructure& algebra, const CochainSpace& from, const CochainSpace& to)
{
    if (to.r() != from.r() + 1 || to.s() != from.s())
        throw Error("delta_matrix: incompatible spaces");
    ProductData pd(algebra);
    SparseMatrix m(to.size(), from.size());
    const FieldValue one = FieldValue::one(algebra.spec());
    for (std::size_t j = 0; j < from.size(); ++j) {
        const auto& [w, g] = from.basis(j);
        delta_term(algebra, pd, w, from.r(), from.s(), g, one, [&](const Word& w2, const Element& v) {
            for (const auto& [h, c] : v.entries()) {
                auto i = to.index(w2, h);
                if (!i)
                    throw Error("coboundary left the normalized complex");
                m.add(*i, static_cast<int>(j), c);
            }
        });
    }
    return m;
}

HochschildCochain compose(const QuiverCategory& cat, const FieldSpec& spec, const HochschildCochain& phi,
                          const HochschildCochain& psi)
{
    HochschildCochain out{phi.r + psi.r - 1, phi.s + psi.s, {}};
    if (phi.r == 0 || out.r < 0 || phi.empty() || psi.empty())
        return out;
    const int n = out.r;
    const int k = psi.r;
    const long psi_deg = psi.shifted_degree();
    std::vector<Word> words;
    if (n == 0) {
        for (std::size_t o = 0; o < cat.object_count(); ++o)
            words.push_back(object_key(static_cast<int>(o)));
    } else {
        words = cat.composable_words(n, true);
    }
    Word inner, outer;
    for (const Word& W : words) {
        const Word base = (n == 0) ? Word{} : W;
        Element total;
        int star = 0;
        for (int i = 0; i + k <= n; ++i) {
            if (i > 0)
                star += cat.generator(base[n - i]).degree - 1;
            if (k == 0) {
                int obj = (i == 0) ? cochain_word_source(cat, W) : cat.generator(base[n - i]).target;
                inner = object_key(obj);
            } else {
                inner.assign(base.begin() + (n - i - k), base.begin() + (n - i));
            }
            const Element* val = psi.at(inner);
            if (!val)
                continue;
            const FieldValue sg = sign(spec, psi_deg * star);
            for (const auto& [h, c] : val->entries()) {
                outer.assign(base.begin(), base.begin() + (n - i - k));
                outer.push_back(h);
                outer.insert(outer.end(), base.begin() + (n - i), base.end());
                if (const Element* o = phi.at(outer))
                    total.axpy(sg * c, *o);
            }
        }
        if (!total.empty())
            out.table.emplace(W, std::move(total));
    }
    return out;
}

HochschildCochain gerstenhaber(const QuiverCategory& cat, const FieldSpec& spec, const HochschildCochain& phi,
                               const HochschildCochain& psi)
{
    HochschildCochain out = compose(cat, spec, phi, psi);
    HochschildCochain back = compose(cat, spec, psi, phi);
    const long e = static_cast<long>(phi.shifted_degree()) * psi.shifted_degree();
    axpy(out, -sign(spec, e), back);
    return out;
}

HochschildCochain euler_derivation(const QuiverCategory& cat, const FieldSpec& spec)
{
    HochschildCochain e{1, 0, {}};
    for (const Word& w : cat.composable_words(1, true)) {
        const int d = cat.generator(w[0]).degree;
        e.add(w, Element::term(w[0], FieldValue(spec, static_cast<long>(d))), spec);
    }
    return e;
}

std::size_t BigradedTable::at(int r, int s) const
{
    auto it = dims.find({r, s});
    return it == dims.end() ? 0 : it->second;
}

std::string BigradedTable::format_table() const
{
    int s_hi = 1, s_lo = 0;
    for (const auto& [rs, d] : dims) {
        if (d == 0)
            continue;
        s_hi = std::max(s_hi, rs.second);
        s_lo = std::min(s_lo, rs.second);
    }
    auto cell = [](std::size_t d) -> std::string {
        if (d == 0)
            return "";
        if (d == 1)
            return "K";
        return "K^" + std::to_string(d);
    };
    const int width = 5;
    auto pad = [&](const std::string& s) { return std::string(width - std::min<int>(width, s.size()), ' ') + s; };
    std::ostringstream os;
    os << "HH^{r+s}(A,A)^s over " << field.name() << "\n";
    os << pad("s\\r") << " |";
    for (int r = 0; r <= r_max; ++r)
        os << pad(std::to_string(r));
    os << "\n" << std::string(width + 2 + width * (r_max + 1), '-') << "\n";
    for (int s = s_hi; s >= s_lo; --s) {
        os << pad(std::to_string(s)) << " |";
        for (int r = 0; r <= r_max; ++r)
            os << pad(cell(at(r, s)));
        // trim trailing blanks for byte-stable output
        std::string line = os.str();
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        os.str("");
        os << line << "\n";
    }
    return os.str();
}

std::string BigradedTable::format_records() const
{
    std::ostringstream os;
    for (const auto& [rs, d] : dims)
        if (d != 0)
            os << "(" << rs.first << ", " << rs.second << ", " << d << ")\n";
    return os.str();
}

BigradedTable hh_bar(const AInfStructure& algebra, int r_max)
{
    const auto& cat = algebra.category();
    const FieldSpec& spec = algebra.spec();
    BigradedTable t{spec, r_max, {}};
    int max_deg = 0, min_deg = 0;
    for (const auto& g : cat.generators()) {
        max_deg = std::max(max_deg, g.degree);
        min_deg = std::min(min_deg, g.degree);
    }
    // s ranges over values for which some output degree is attainable.
    for (int r = 0; r <= r_max; ++r) {
        const int s_lo = min_deg - r * max_deg;
        const int s_hi = max_deg - r * min_deg;
        for (int s = s_lo; s <= s_hi; ++s) {
            CochainSpace here(cat, r, s);
            if (here.size() == 0)
                continue;
            CochainSpace next(cat, r + 1, s);
            std::size_t rank_out = rank(delta_matrix(algebra, here, next), spec);
            std::size_t rank_in = 0;
            if (r > 0) {
                CochainSpace prev(cat, r - 1, s);
                rank_in = rank(delta_matrix(algebra, prev, here), spec);
            }
            std::size_t d = here.size() - rank_out - rank_in;
            if (d)
                t.dims[{r, s}] = d;
        }
    }
    return t;
}

BigradedTable reference_hh_table(const FieldSpec& spec)
{
    BigradedTable t;
    t.field = spec;
    t.r_max = 8;
    t.dims = {{{0, 1}, 2}, {{0, 0}, 1}, {{1, 0}, 1}, {{6, -4}, 1}, {{7, -4}, 1}, {{8, -6}, 1}};
    if (spec.characteristic() == 2)
        for (auto rs : {std::pair{2, -1}, {3, -1}, {4, -3}, {5, -3}})
            t.dims[rs] = 1;
    if (spec.characteristic() == 3)
        for (auto rs : {std::pair{3, -2}, {4, -2}})
            t.dims[rs] = 1;
    return t;
}

BigradedTable hh_bar(const FieldSpec& spec, int r_max)
{
    return hh_bar(preset_A(spec), r_max);
}

CoboundaryResult is_coboundary(const AInfStructure& algebra, const HochschildCochain& phi)
{
    if (phi.r < 1)
        throw Error("only cochains of positive length can be coboundaries");
    const auto& cat = algebra.category();
    CochainSpace target(cat, phi.r, phi.s);
    CochainSpace source(cat, phi.r - 1, phi.s);
    SparseMatrix m = delta_matrix(algebra, source, target);
    auto res = solve(m, target.to_vector(phi), algebra.spec());
    CoboundaryResult out;
    if (res.solution)
        out.primitive = source.from_vector(*res.solution);
    else
        out.certificate = target.from_vector(*res.certificate);
    return out;
}

std::vector<HochschildCochain> cohomology_basis(const AInfStructure& algebra, int r, int s)
{
    const auto& cat = algebra.category();
    const FieldSpec& spec = algebra.spec();
    CochainSpace here(cat, r, s);
    CochainSpace next(cat, r + 1, s);
    Echelon span(spec);
    if (r > 0) {
        CochainSpace prev(cat, r - 1, s);
        SparseMatrix in = delta_matrix(algebra, prev, here).transpose();
        for (auto& col : in.row_data)
            span.insert(col);
    }
    std::vector<HochschildCochain> out;
    for (auto& z : kernel_basis(delta_matrix(algebra, here, next), spec))
        if (span.insert(z))
            out.push_back(here.from_vector(z));
    return out;
}

FieldValue pair_dual(const HochschildCochain& y, const HochschildCochain& phi, const FieldSpec& spec)
{
    FieldValue total = FieldValue::zero(spec);
    for (const auto& [w, e] : y.table)
        if (const Element* p = phi.at(w))
            total += dot(e, *p, spec);
    return total;
}

std::string format_cochain(const QuiverCategory& cat, const HochschildCochain& c)
{
    std::ostringstream os;
    for (const auto& [w, e] : c.table) {
        if (is_object_key(w))
            os << "[" << cat.object_name(~w[0]) << "]";
        else
            os << cat.word_name(w);
        os << " -> " << format_element(cat, e) << "\n";
    }
    return os.str();
}

} // namespace torusfk
