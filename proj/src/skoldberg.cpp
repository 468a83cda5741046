#include "torusfk/skoldberg.hpp"

#include <array>
#include <cstdlib>
#include <map>
#include <tuple>

namespace torusfk
{

namespace
{

constexpr int object_a = 0;
constexpr int object_b = 1;

} // namespace

SkoldbergComplex::SkoldbergComplex(const FieldSpec& spec, int k_max)
    : m_spec(spec), m_algebra(preset_A(spec)), m_k_max(k_max)
{
    if (k_max < 0)
        throw Error("negative resolution length");
    const auto& cat = m_algebra.category();
    m_u = cat.generator_id("u");
    m_v = cat.generator_id("v");
    m_paths.resize(k_max + 1);
    for (int k = 0; k <= k_max; ++k) {
        const int L = path_length(k);
        for (int start : {object_b, object_a}) {
            // c_1 leaves `start`; arrows alternate
            Word w(L);
            int obj = start;
            for (int i = 1; i <= L; ++i) {
                int arrow = (obj == object_a) ? m_u : m_v;
                w[L - i] = arrow;
                obj = cat.generator(arrow).target;
            }
            m_paths[k].push_back(w);
        }
    }

    m_diff.resize(k_max + 1);
    for (int k = 1; k <= k_max; ++k) {
        m_diff[k].resize(2);
        const int L = path_length(k);
        for (int idx = 0; idx < 2; ++idx) {
            const Word& w = m_paths[k][idx];
            const int start = path_source(k, idx);
            // object reached after c_1 .. c_i
            std::vector<int> obj(L + 1, start);
            for (int i = 1; i <= L; ++i)
                obj[i] = cat.generator(w[L - i]).target;
            auto sub = [&](int hi, int lo) { // c_hi .. c_lo, empty when hi < lo
                if (hi < lo)
                    return Word{};
                return Word(w.begin() + (L - hi), w.begin() + (L - lo + 1));
            };
            auto term = [&](int hi, int lo, long coeff) {
                int x = evaluate_path(sub(L, hi + 1), obj[hi]);
                int y = evaluate_path(sub(lo - 1, 1), obj[0]);
                if (x < 0 || y < 0)
                    return;
                int b = path_index(sub(hi, lo), obj[lo - 1], k - 1);
                m_diff[k][idx].push_back(ResolutionTerm{FieldValue(m_spec, coeff), x, b, y});
            };
            if (k % 2 == 0) {
                term(L, 3, 1);
                term(L - 1, 2, 1);
                term(L - 2, 1, 1);
            } else {
                term(L - 1, 1, 1);
                term(L, 2, -1);
            }
        }
    }
}

int SkoldbergComplex::path_source(int k, int index) const
{
    (void)k;
    return index == 0 ? object_b : object_a;
}

int SkoldbergComplex::path_target(int k, int index) const
{
    const int src = path_source(k, index);
    return path_length(k) % 2 == 0 ? src : (src == object_a ? object_b : object_a);
}

int SkoldbergComplex::path_degree(int k, int index) const
{
    int d = 0;
    for (int g : m_paths.at(k).at(index))
        d += (g == m_u);
    return d;
}

int SkoldbergComplex::evaluate_path(const Word& arrows, int start_object) const
{
    const auto& cat = m_algebra.category();
    if (arrows.empty())
        return *cat.identity(start_object);
    if (arrows.size() == 1)
        return arrows[0];
    if (arrows.size() == 2) {
        auto p = multiply(arrows[0], arrows[1]);
        if (!p || !p->second.is_one())
            throw Error("unexpected path product");
        return p->first;
    }
    return -1;
}

int SkoldbergComplex::path_index(const Word& arrows, int start_object, int k) const
{
    if (static_cast<int>(arrows.size()) != path_length(k))
        throw Error("resolution term has the wrong path length");
    return start_object == object_b ? 0 : 1;
}

std::optional<std::pair<int, FieldValue>> SkoldbergComplex::multiply(int x, int y) const
{
    const auto& cat = m_algebra.category();
    if (cat.generator(y).target != cat.generator(x).source)
        return std::nullopt;
    const Element* e = m_algebra.find({x, y});
    if (!e)
        return std::nullopt;
    if (e->size() != 1)
        throw Error("product is not a monomial");
    FieldValue c = e->lead_value();
    if (cat.generator(y).degree % 2)
        c = -c;
    return std::make_pair(e->lead(), c);
}

bool SkoldbergComplex::composites_vanish(int k) const
{
    if (k < 2 || k > m_k_max)
        throw Error("composite index out of range");
    for (int idx = 0; idx < 2; ++idx) {
        std::map<std::tuple<int, int, int>, FieldValue> acc;
        for (const auto& t : differential(k, idx))
            for (const auto& t2 : differential(k - 1, t.path)) {
                auto xl = multiply(t.left, t2.left);
                auto yr = multiply(t2.right, t.right);
                if (!xl || !yr)
                    continue;
                FieldValue c = t.coeff * t2.coeff * xl->second * yr->second;
                auto key = std::make_tuple(xl->first, t2.path, yr->first);
                auto it = acc.find(key);
                if (it == acc.end())
                    acc.emplace(key, c);
                else
                    it->second += c;
            }
        for (const auto& [key, c] : acc)
            if (!c.is_zero())
                return false;
    }
    return true;
}

bool SkoldbergComplex::augmentation_vanishes() const
{
    if (m_k_max < 1)
        return true;
    for (int idx = 0; idx < 2; ++idx) {
        Element total;
        for (const auto& t : differential(1, idx))
            if (auto p = multiply(t.left, t.right))
                total.add(p->first, t.coeff * p->second);
        if (!total.empty())
            return false;
    }
    return true;
}

std::vector<std::pair<int, int>> SkoldbergComplex::dual_basis(int k, int s) const
{
    std::vector<std::pair<int, int>> out;
    const auto& cat = m_algebra.category();
    for (int idx = 0; idx < 2; ++idx)
        for (int g : cat.hom_basis(path_source(k, idx), path_target(k, idx), path_degree(k, idx) + s))
            out.emplace_back(idx, g);
    return out;
}

SparseMatrix SkoldbergComplex::dual_matrix(int k, int s) const
{
    auto cols = dual_basis(k - 1, s);
    auto rows = dual_basis(k, s);
    SparseMatrix m(rows.size(), cols.size());
    const auto& cat = m_algebra.category();
    auto row_of = [&](int idx, int g) {
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i] == std::make_pair(idx, g))
                return static_cast<int>(i);
        throw Error("dual differential left its target space");
    };
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto [b, g] = cols[j];
        for (int idx = 0; idx < 2; ++idx)
            for (const auto& t : differential(k, idx)) {
                if (t.path != b)
                    continue;
                // theta(x [b] y) = (-1)^{s|x|} x theta(b) y
                auto xg = multiply(t.left, g);
                if (!xg)
                    continue;
                auto xgy = multiply(xg->first, t.right);
                if (!xgy)
                    continue;
                FieldValue c = t.coeff * xg->second * xgy->second;
                if ((static_cast<long>(s) * cat.generator(t.left).degree) % 2)
                    c = -c;
                m.add(row_of(idx, xgy->first), static_cast<int>(j), c);
            }
    }
    return m;
}

namespace
{

template <class MatrixFn, class BasisFn>
BigradedTable cohomology_table(const FieldSpec& spec, int k_max, MatrixFn&& matrix, BasisFn&& basis)
{
    BigradedTable t{spec, k_max, {}};
    for (int k = 0; k <= k_max; ++k) {
        const int s_lo = -SkoldbergComplex::path_length(k) - 1;
        for (int s = s_lo; s <= 1; ++s) {
            std::size_t n = basis(k, s);
            if (n == 0)
                continue;
            std::size_t out = rank(matrix(k + 1, s), spec);
            std::size_t in = k > 0 ? rank(matrix(k, s), spec) : 0;
            if (std::size_t d = n - out - in)
                t.dims[{k, s}] = d;
        }
    }
    return t;
}

} // namespace

BigradedTable skoldberg_hh(const FieldSpec& spec, int k_max)
{
    SkoldbergComplex cx(spec, k_max + 1);
    return cohomology_table(
        spec, k_max, [&](int k, int s) { return cx.dual_matrix(k, s); },
        [&](int k, int s) { return cx.dual_basis(k, s).size(); });
}

namespace
{

// Sum of terms coeff * l(left) r(right); -1 means no multiplication.
struct LadderOp
{
    std::vector<std::tuple<long, int, int>> terms;
};

} // namespace

BigradedTable ladder_hh(const FieldSpec& spec, int k_max)
{
    SkoldbergComplex cx(spec, k_max + 1);
    const auto& cat = cx.algebra().category();
    const int u = cat.generator_id("u"), v = cat.generator_id("v");
    const int e1 = cat.generator_id("e1"), f1 = cat.generator_id("f1");
    const int none = -1;

    auto ladder = [&](int m) {
        const int k = (m - 1) / 4;
        const long eta = (k % 2 == 0) ? 1 : -1;
        using Row = std::array<LadderOp, 2>;
        std::array<Row, 2> M;
        switch (m % 4) {
        case 1:
            M[0][0].terms = {{1, v, none}};
            M[0][1].terms = {{-1, none, v}};
            M[1][0].terms = {{-1, none, u}};
            M[1][1].terms = {{eta, u, none}};
            break;
        case 2:
            M[0][0].terms = {{eta, e1, none}, {1, none, f1}};
            M[0][1].terms = {{1, v, v}};
            M[1][0].terms = {{eta, u, u}};
            M[1][1].terms = {{-eta, f1, none}, {1, none, e1}};
            break;
        case 3:
            M[0][0].terms = {{-eta, u, none}};
            M[0][1].terms = {{-1, none, v}};
            M[1][0].terms = {{-1, none, u}};
            M[1][1].terms = {{1, v, none}};
            break;
        default:
            M[0][0].terms = {{eta, f1, none}, {1, none, f1}};
            M[0][1].terms = {{eta, u, v}};
            M[1][0].terms = {{1, v, u}};
            M[1][1].terms = {{eta, e1, none}, {1, none, e1}};
            break;
        }
        return M;
    };

    auto matrix = [&](int m, int s) {
        auto cols = cx.dual_basis(m - 1, s);
        auto rows = cx.dual_basis(m, s);
        SparseMatrix mat(rows.size(), cols.size());
        auto M = ladder(m);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const auto [b, g] = cols[j];
            for (int i = 0; i < 2; ++i)
                for (const auto& [coeff, left, right] : M[i][b].terms) {
                    FieldValue c(spec, coeff);
                    int h = g;
                    if (left != none) {
                        auto p = cx.multiply(left, h);
                        if (!p)
                            continue;
                        h = p->first;
                        c *= p->second;
                    }
                    if (right != none) {
                        auto p = cx.multiply(h, right);
                        if (!p)
                            continue;
                        h = p->first;
                        c *= p->second;
                    }
                    bool placed = false;
                    for (std::size_t r = 0; r < rows.size(); ++r)
                        if (rows[r] == std::make_pair(i, h)) {
                            mat.add(static_cast<int>(r), static_cast<int>(j), c);
                            placed = true;
                        }
                    if (!placed)
                        throw Error("ladder map left its target space");
                }
        }
        return mat;
    };
    return cohomology_table(
        spec, k_max, matrix, [&](int k, int s) { return cx.dual_basis(k, s).size(); });
}

std::vector<std::pair<int, int>> periodicity_defects(const BigradedTable& t, int r_lo, int r_hi, int dr, int ds)
{
    std::vector<std::pair<int, int>> out;
    if (r_hi + dr > t.r_max)
        throw Error("periodicity range exceeds the computed table");
    for (int r = r_lo; r <= r_hi; ++r) {
        for (int s = -2 * (r + dr) - 10 - std::abs(ds); s <= 3 + std::abs(ds); ++s)
            if (t.at(r, s) != t.at(r + dr, s + ds))
                out.emplace_back(r, s);
    }
    return out;
}

} // namespace torusfk
