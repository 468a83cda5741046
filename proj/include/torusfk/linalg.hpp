#ifndef TORUSFK_LINALG_HPP
#define TORUSFK_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "torusfk/scalars.hpp"

namespace torusfk
{

// Sparse vector: strictly increasing indices, no zero entries.
class SparseVec
{
public:
    using Entry = std::pair<int, FieldValue>;

    SparseVec() = default;

    const std::vector<Entry>& entries() const { return m_entries; }
    bool empty() const { return m_entries.empty(); }
    std::size_t size() const { return m_entries.size(); }

    // Adds c * e_index; entries may be added in any order.
    void add(int index, const FieldValue& c);
    FieldValue at(int index, const FieldSpec& spec) const;

    // this += c * other
    void axpy(const FieldValue& c, const SparseVec& other);
    void scale(const FieldValue& c);

    int lead() const { return m_entries.front().first; }
    const FieldValue& lead_value() const { return m_entries.front().second; }

    friend bool operator==(const SparseVec&, const SparseVec&) = default;

private:
    std::vector<Entry> m_entries;
};

FieldValue dot(const SparseVec& a, const SparseVec& b, const FieldSpec& spec);

// A column-indexed sparse matrix: rows x cols, stored row-wise.
struct SparseMatrix
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<SparseVec> row_data;

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), row_data(r) {}

    void add(int row, int col, const FieldValue& v) { row_data[row].add(col, v); }
    SparseVec apply(const SparseVec& x, const FieldSpec& spec) const;
    SparseMatrix transpose() const;
};

// Incremental row echelon form. Pivots are leading (smallest) indices, so
// the reduction and every derived primitive is deterministic in the basis
// order.
class Echelon
{
public:
    explicit Echelon(FieldSpec spec, bool track_combinations = false)
        : m_spec(std::move(spec)), m_track(track_combinations)
    {
    }

    // Inserts a row; returns false when it was already in the span.
    bool insert(SparseVec row);
    // Reduces v modulo the span; the residue is zero iff v lies in the span.
    SparseVec reduce(SparseVec v) const;
    // Same, also returning the combination c (over inserted rows) with
    // v - residue = sum c_i row_i.
    std::pair<SparseVec, SparseVec> reduce_tracked(SparseVec v) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    std::size_t rank() const { return m_pivots.size(); }
    std::size_t inserted() const { return m_inserted; }

    // Inserted rows that reduced to zero, as combinations over inserted rows.
    const std::vector<SparseVec>& dependencies() const { return m_dependencies; }

    struct Pivot
    {
        SparseVec row; // leading entry is 1
        SparseVec combination;
    };
    const std::map<int, Pivot>& pivots() const { return m_pivots; }

private:
    FieldSpec m_spec;
    bool m_track;
    std::map<int, Pivot> m_pivots;
    std::vector<SparseVec> m_dependencies;
    std::size_t m_inserted = 0;
};

std::size_t rank(const SparseMatrix& m, const FieldSpec& spec);

// Basis of the null space {x : M x = 0}, one vector per free column,
// ordered by free column index.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m, const FieldSpec& spec);

struct SolveResult
{
    // Set when M x = b is consistent; free variables are zero.
    std::optional<SparseVec> solution;
    // Set when inconsistent: y with y^T M = 0 and y . b != 0.
    std::optional<SparseVec> certificate;
};

SolveResult solve(const SparseMatrix& m, const SparseVec& b, const FieldSpec& spec);

} // namespace torusfk

#endif
