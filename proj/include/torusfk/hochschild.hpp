#ifndef TORUSFK_HOCHSCHILD_HPP
#define TORUSFK_HOCHSCHILD_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "torusfk/ainf.hpp"

namespace torusfk
{

// Key under which a length-0 cochain stores its value at an object.
inline Word object_key(int object) { return Word{~object}; }
inline bool is_object_key(const Word& w) { return w.size() == 1 && w[0] < 0; }

// A normalized Hochschild cochain of length r and internal degree s: a map
// from composable words of non-identity generators to elements of degree
// deg(word) + s. Its shifted degree r + s - 1 drives every sign.
struct HochschildCochain
{
    int r = 0;
    int s = 0;
    Table table;

    int shifted_degree() const { return r + s - 1; }
    bool empty() const { return table.empty(); }
    const Element* at(const Word& w) const;
    void add(const Word& w, const Element& value, const FieldSpec& spec);

    friend bool operator==(const HochschildCochain&, const HochschildCochain&) = default;
};

// y += c * x; the two cochains must share (r, s).
void axpy(HochschildCochain& y, const FieldValue& c, const HochschildCochain& x);
HochschildCochain scaled(const HochschildCochain& x, const FieldValue& c);

// mu^d read as a cochain of length d and internal degree 2 - d.
HochschildCochain cochain_of(const AInfStructure& mu, int d);
// Writes the cochain into mu^r (replacing the table).
void store_cochain(AInfStructure& mu, const HochschildCochain& c);

// Source and target objects of a cochain word (object keys included).
int cochain_word_source(const QuiverCategory& cat, const Word& w);
int cochain_word_target(const QuiverCategory& cat, const Word& w);

// Ordered basis of C^{r,s}: pairs (word, output generator) with the word in
// canonical order and generators in declaration order.
class CochainSpace
{
public:
    CochainSpace(const QuiverCategory& cat, int r, int s);

    int r() const { return m_r; }
    int s() const { return m_s; }
    std::size_t size() const { return m_basis.size(); }
    const std::pair<Word, int>& basis(std::size_t i) const { return m_basis[i]; }
    const std::vector<Word>& words() const { return m_words; }
    std::optional<int> index(const Word& w, int g) const;

    SparseVec to_vector(const HochschildCochain& c) const;
    HochschildCochain from_vector(const SparseVec& v) const;

private:
    int m_r, m_s;
    std::vector<Word> m_words;
    std::vector<std::pair<Word, int>> m_basis;
    std::map<Word, std::map<int, int>> m_index;
};

// Coboundary delta phi = [mu^2, phi] using the binary product of `algebra`:
//   mu2(a_{r+1}, phi(a_r..a_1)) + (-1)^{|phi|(|a_1|-1)} mu2(phi(a_{r+1}..a_2), a_1)
//   - (-1)^{|phi|} sum_i (-1)^{koszul_prefix(i)} phi(.., mu2(a_{i+2}, a_{i+1}), a_i, ..)
HochschildCochain coboundary(const AInfStructure& algebra, const HochschildCochain& phi);
// Matrix of delta: C^{r,s} -> C^{r+1,s}, columns indexed by `from`.
SparseMatrix delta_matrix(const AInfStructure& algebra, const CochainSpace& from, const CochainSpace& to);

// Gerstenhaber composition and bracket on normalized cochains:
//   (phi o psi)(..) = sum_i (-1)^{|psi| koszul_prefix(i)} phi(.., psi(a_{i+k}..a_{i+1}), a_i..a_1)
//   [phi, psi] = phi o psi - (-1)^{|phi||psi|} psi o phi
// phi is evaluated through `lookup`, so non-normalized cochains (mu^2 with
// its unit entries) can sit in the outer slot.
HochschildCochain compose(const QuiverCategory& cat, const FieldSpec& spec, const HochschildCochain& phi,
                          const HochschildCochain& psi);
HochschildCochain gerstenhaber(const QuiverCategory& cat, const FieldSpec& spec, const HochschildCochain& phi,
                               const HochschildCochain& psi);

// The Euler derivation x -> deg(x) x (length 1, internal degree 0).
HochschildCochain euler_derivation(const QuiverCategory& cat, const FieldSpec& spec);

// Dimensions indexed by (r, s); absent entries are zero.
struct BigradedTable
{
    FieldSpec field;
    int r_max = 0;
    std::map<std::pair<int, int>, std::size_t> dims;

    std::size_t at(int r, int s) const;
    // Rows s (descending) by columns r, cells "K", "K^2", blank for zero.
    std::string format_table() const;
    // One "(r, s, dim)" record per nonzero cell, ordered by r then s.
    std::string format_records() const;

    friend bool operator==(const BigradedTable& a, const BigradedTable& b)
    {
        return a.field == b.field && a.r_max == b.r_max && a.dims == b.dims;
    }
};

// The published table for 0 <= r <= 8; the 2- and 3-torsion cells are
// switched on in characteristic 2 and 3.
BigradedTable reference_hh_table(const FieldSpec& spec);

// HH^{r+s}(A,A)^s for 0 <= r <= r_max from the normalized bar complex.
BigradedTable hh_bar(const FieldSpec& spec, int r_max);
// Same, for any strictly unital algebra given by its mu^2.
BigradedTable hh_bar(const AInfStructure& algebra, int r_max);

struct CoboundaryResult
{
    std::optional<HochschildCochain> primitive;
    // Dual functional y on C^{r,s}: y vanishes on every coboundary while
    // y(phi) != 0. Stored in cochain shape, coefficient per (word, output).
    std::optional<HochschildCochain> certificate;
};

// Solves delta nu = phi for nu of length r - 1.
CoboundaryResult is_coboundary(const AInfStructure& algebra, const HochschildCochain& phi);

// Deterministic representatives of a basis of HH at (r, s): kernel vectors
// (first free column first) that are independent modulo the image.
std::vector<HochschildCochain> cohomology_basis(const AInfStructure& algebra, int r, int s);

// Pairing sum y(w)_g * phi(w)_g.
FieldValue pair_dual(const HochschildCochain& y, const HochschildCochain& phi, const FieldSpec& spec);

std::string format_cochain(const QuiverCategory& cat, const HochschildCochain& c);

} // namespace torusfk

#endif
