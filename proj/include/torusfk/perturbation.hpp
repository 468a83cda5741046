#ifndef TORUSFK_PERTURBATION_HPP
#define TORUSFK_PERTURBATION_HPP

#include <string>
#include <vector>

#include "torusfk/ainf.hpp"

namespace torusfk
{

// A splitting of a dg category into harmonic part plus acyclic complement:
// inclusion i, projection p and homotopy T with i p - id = mu1 T + T mu1.
struct SplittingData
{
    AInfStructure ambient;
    QuiverCategory harmonic;
    std::vector<Element> inclusion;  // harmonic generator -> ambient element
    std::vector<Element> projection; // ambient generator -> harmonic element
    std::vector<Element> homotopy;   // ambient generator -> ambient element
};

// The splitting of the eight-generator model: harmonic basis e0, e1, f0,
// f1, u -> u01, v -> v0 + v1; complement spanned by v1, v01; T(v01) = -v1.
SplittingData preset_splitting_C(const FieldSpec& spec);

struct SplittingReport
{
    bool projection_splits = false; // p i = id
    bool homotopy_equation = false;  // i p - id = mu1 T + T mu1
    bool homotopy_squares_zero = false;
    bool homotopy_kills_inclusion = false;  // T i = 0
    bool projection_kills_homotopy = false; // p T = 0
    bool harmonic_closed = false;           // mu1 i = 0
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

SplittingReport check_splitting(const SplittingData& split);

struct TransferResult
{
    AInfStructure minimal;   // on the harmonic category
    std::vector<Table> iota; // iota[d]: harmonic words -> ambient elements
};

// Runs the recursion
//   I^d = sum_{0<m<d} T mu2(I^{d-m}(a_d..a_{m+1}), I^m(a_m..a_1))
//   mu^d = sum_{0<m<d} p mu2(I^{d-m}(..), I^m(..))
// for 2 <= d <= order. Throws when the splitting side conditions fail.
TransferResult transfer(const SplittingData& split, int order);

struct LemmaReport
{
    int checked_up_to = 0;
    std::size_t nonzero_entries = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Compares the transferred structure with the closed form: mu^2 equals the
// product of A, and for d >= 3 the only nonzero values are
//   mu^d(u, e1 x (d-3), v, f1) = (-1)^{d+1} f1,  mu^d(u, e1 x (d-2), v) = (-1)^d f1.
LemmaReport lemma_check(const TransferResult& result, int up_to);

// Canonical dump of the minimal structure plus IOTA<d> sections.
std::string dump_transfer(const TransferResult& result, const SplittingData& split);

} // namespace torusfk

#endif
