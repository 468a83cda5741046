#include "torusfk/linalg.hpp"

#include <algorithm>

namespace torusfk
{

void SparseVec::add(int index, const FieldValue& c)
{
    if (c.is_zero())
        return;
    auto it = std::lower_bound(m_entries.begin(), m_entries.end(), index,
                               [](const Entry& e, int i) { return e.first < i; });
    if (it != m_entries.end() && it->first == index) {
        it->second += c;
        if (it->second.is_zero())
            m_entries.erase(it);
    } else {
        m_entries.insert(it, Entry{index, c});
    }
}

FieldValue SparseVec::at(int index, const FieldSpec& spec) const
{
    auto it = std::lower_bound(m_entries.begin(), m_entries.end(), index,
                               [](const Entry& e, int i) { return e.first < i; });
    if (it != m_entries.end() && it->first == index)
        return it->second;
    return FieldValue::zero(spec);
}

void SparseVec::axpy(const FieldValue& c, const SparseVec& other)
{
    if (c.is_zero() || other.empty())
        return;
    std::vector<Entry> out;
    out.reserve(m_entries.size() + other.m_entries.size());
    auto a = m_entries.begin();
    auto b = other.m_entries.begin();
    while (a != m_entries.end() || b != other.m_entries.end()) {
        if (b == other.m_entries.end() || (a != m_entries.end() && a->first < b->first)) {
            out.push_back(std::move(*a));
            ++a;
        } else if (a == m_entries.end() || b->first < a->first) {
            out.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            FieldValue v = a->second + c * b->second;
            if (!v.is_zero())
                out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    m_entries = std::move(out);
}

void SparseVec::scale(const FieldValue& c)
{
    if (c.is_zero()) {
        m_entries.clear();
        return;
    }
    for (auto& e : m_entries)
        e.second *= c;
}

FieldValue dot(const SparseVec& a, const SparseVec& b, const FieldSpec& spec)
{
    FieldValue s = FieldValue::zero(spec);
    auto i = a.entries().begin();
    auto j = b.entries().begin();
    while (i != a.entries().end() && j != b.entries().end()) {
        if (i->first < j->first)
            ++i;
        else if (j->first < i->first)
            ++j;
        else {
            s += i->second * j->second;
            ++i;
            ++j;
        }
    }
    return s;
}

SparseVec SparseMatrix::apply(const SparseVec& x, const FieldSpec& spec) const
{
    SparseVec y;
    for (std::size_t r = 0; r < rows; ++r) {
        FieldValue v = dot(row_data[r], x, spec);
        if (!v.is_zero())
            y.add(static_cast<int>(r), v);
    }
    return y;
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
        for (const auto& [c, v] : row_data[r].entries())
            t.row_data[c].add(static_cast<int>(r), v);
    return t;
}

bool Echelon::insert(SparseVec row)
{
    SparseVec comb;
    if (m_track)
        comb.add(static_cast<int>(m_inserted), FieldValue::one(m_spec));
    ++m_inserted;
    while (!row.empty()) {
        auto it = m_pivots.find(row.lead());
        if (it == m_pivots.end())
            break;
        FieldValue f = -row.lead_value();
        row.axpy(f, it->second.row);
        if (m_track)
            comb.axpy(f, it->second.combination);
    }
    if (row.empty()) {
        if (m_track)
            m_dependencies.push_back(std::move(comb));
        return false;
    }
    FieldValue inv = row.lead_value().inverse();
    row.scale(inv);
    if (m_track)
        comb.scale(inv);
    int lead = row.lead();
    m_pivots.emplace(lead, Pivot{std::move(row), std::move(comb)});
    return true;
}

SparseVec Echelon::reduce(SparseVec v) const
{
    return reduce_tracked(std::move(v)).first;
}

std::pair<SparseVec, SparseVec> Echelon::reduce_tracked(SparseVec v) const
{
    // Full reduction: eliminate every pivot column, not only the lead.
    SparseVec used;
    SparseVec residue;
    while (!v.empty()) {
        int lead = v.lead();
        auto it = m_pivots.find(lead);
        if (it == m_pivots.end()) {
            residue.add(lead, v.lead_value());
            SparseVec head;
            head.add(lead, v.lead_value());
            v.axpy(-FieldValue::one(m_spec), head);
            continue;
        }
        FieldValue f = v.lead_value();
        v.axpy(-f, it->second.row);
        if (m_track)
            used.axpy(f, it->second.combination);
    }
    return {std::move(residue), std::move(used)};
}

std::size_t rank(const SparseMatrix& m, const FieldSpec& spec)
{
    Echelon e(spec);
    for (const auto& r : m.row_data)
        e.insert(r);
    return e.rank();
}

namespace
{

// Fully reduced pivot rows keyed by pivot column.
std::map<int, SparseVec> rref(const SparseMatrix& m, const FieldSpec& spec)
{
    Echelon e(spec);
    for (const auto& r : m.row_data)
        e.insert(r);
    std::map<int, SparseVec> rows;
    for (const auto& [c, p] : e.pivots())
        rows.emplace(c, p.row);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        const int c = it->first;
        for (auto& [c2, row] : rows) {
            if (c2 >= c)
                break;
            FieldValue f = row.at(c, spec);
            if (!f.is_zero())
                row.axpy(-f, it->second);
        }
    }
    return rows;
}

} // namespace

std::vector<SparseVec> kernel_basis(const SparseMatrix& m, const FieldSpec& spec)
{
    auto rows = rref(m, spec);
    std::vector<SparseVec> basis;
    for (std::size_t f = 0; f < m.cols; ++f) {
        if (rows.count(static_cast<int>(f)))
            continue;
        SparseVec x;
        x.add(static_cast<int>(f), FieldValue::one(spec));
        for (const auto& [c, row] : rows) {
            FieldValue a = row.at(static_cast<int>(f), spec);
            if (!a.is_zero())
                x.add(c, -a);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

SolveResult solve(const SparseMatrix& m, const SparseVec& b, const FieldSpec& spec)
{
    const int rhs_col = static_cast<int>(m.cols);
    Echelon e(spec, true);
    for (std::size_t r = 0; r < m.rows; ++r) {
        SparseVec row = m.row_data[r];
        FieldValue br = b.at(static_cast<int>(r), spec);
        row.add(rhs_col, br);
        e.insert(std::move(row));
    }
    SolveResult result;
    auto bad = e.pivots().find(rhs_col);
    if (bad != e.pivots().end()) {
        result.certificate = bad->second.combination;
        return result;
    }
    // Back substitution over pivots in decreasing column order.
    SparseVec x;
    for (auto it = e.pivots().rbegin(); it != e.pivots().rend(); ++it) {
        const int c = it->first;
        FieldValue v = it->second.row.at(rhs_col, spec);
        for (const auto& [j, a] : it->second.row.entries()) {
            if (j == c || j == rhs_col)
                continue;
            v -= a * x.at(j, spec);
        }
        x.add(c, v);
    }
    result.solution = std::move(x);
    return result;
}

} // namespace torusfk
