#ifndef TORUSFK_SKOLDBERG_HPP
#define TORUSFK_SKOLDBERG_HPP

#include <string>
#include <vector>

#include "torusfk/ainf.hpp"
#include "torusfk/hochschild.hpp"

namespace torusfk
{

// One term coeff * x [b] y of a resolution differential, with x, y basis
// elements of A (generator ids) and b an index into the previous basis.
struct ResolutionTerm
{
    FieldValue coeff;
    int left = 0;
    int path = 0;
    int right = 0;
};

// The small bimodule resolution P_k = A (x)_S B_k (x)_S A, where B_k is
// spanned by the two paths of length 3j (k = 2j) or 3j + 1 (k = 2j + 1).
// Basis index 0 is the path starting at b, index 1 the path starting at a.
class SkoldbergComplex
{
public:
    SkoldbergComplex(const FieldSpec& spec, int k_max);

    const AInfStructure& algebra() const { return m_algebra; }
    int k_max() const { return m_k_max; }
    static int path_length(int k) { return k % 2 == 0 ? 3 * (k / 2) : 3 * (k / 2) + 1; }
    // Arrows of a basis path in display order (outermost first).
    const Word& path(int k, int index) const { return m_paths.at(k).at(index); }
    int path_source(int k, int index) const;
    int path_target(int k, int index) const;
    int path_degree(int k, int index) const;

    // p_k applied to 1 [path(k, index)] 1, for 1 <= k <= k_max.
    const std::vector<ResolutionTerm>& differential(int k, int index) const
    {
        return m_diff.at(k).at(index);
    }

    // Associative product in A (path composition), as a generator with a
    // coefficient; nullopt when the product vanishes.
    std::optional<std::pair<int, FieldValue>> multiply(int x, int y) const;

    // p_{k-1} o p_k on both basis paths (2 <= k <= k_max) and eps o p_1.
    bool composites_vanish(int k) const;
    bool augmentation_vanishes() const;

    // Matrix of p_k^*: Hom(P_{k-1}, A[s]) -> Hom(P_k, A[s]).
    SparseMatrix dual_matrix(int k, int s) const;
    // Dimension of Hom(P_k, A[s]) and its basis (path index, generator).
    std::vector<std::pair<int, int>> dual_basis(int k, int s) const;

private:
    FieldSpec m_spec;
    AInfStructure m_algebra;
    int m_k_max;
    std::vector<std::vector<Word>> m_paths;
    std::vector<std::vector<std::vector<ResolutionTerm>>> m_diff;
    int m_u = 0, m_v = 0;

    int evaluate_path(const Word& arrows, int start_object) const; // generator id or -1
    int path_index(const Word& arrows, int start_object, int k) const;
};

// Ext^r(A, A[s]) via the dual of the resolution, 0 <= r <= k_max.
BigradedTable skoldberg_hh(const FieldSpec& spec, int k_max);
// Same dimensions from the explicit four-step periodic ladder of maps
// built from left and right multiplications.
BigradedTable ladder_hh(const FieldSpec& spec, int k_max);

// Cells (r, s) with r_lo <= r <= r_hi where dims(r + dr, s + ds) differs
// from dims(r, s); empty when the shift is a symmetry on that range.
std::vector<std::pair<int, int>> periodicity_defects(const BigradedTable& t, int r_lo, int r_hi, int dr, int ds);

} // namespace torusfk

#endif
