#ifndef TORUSFK_GAUGE_HPP
#define TORUSFK_GAUGE_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "torusfk/ainf.hpp"
#include "torusfk/hochschild.hpp"

namespace torusfk
{

// A formal diffeomorphism with g^1 = id: components g^d (d >= 2) of degree
// 1 - d, normalized (zero on words containing identities).
class GaugeTransformation
{
public:
    GaugeTransformation() = default;
    GaugeTransformation(FieldSpec spec, QuiverCategory cat, int order = 12);

    const FieldSpec& spec() const { return m_spec; }
    const QuiverCategory& category() const { return m_cat; }
    int order() const { return m_order; }

    // Validates arity (2 <= d <= order), composability, normalization and degree.
    void set(const Word& w, Element value);
    void add(const Word& w, const Element& value);
    // g^d for d >= 2; empty table above the order.
    const Table& table(int d) const;
    const Element* find(const Word& w) const;
    bool is_identity() const;
    // The cochain (d, 1 - d) holding g^d.
    HochschildCochain component(int d) const;
    void set_component(const HochschildCochain& c);

    friend bool operator==(const GaugeTransformation&, const GaugeTransformation&) = default;

private:
    FieldSpec m_spec;
    QuiverCategory m_cat;
    int m_order = 12;
    std::vector<Table> m_tables; // index d
};

// (G_* mu)^d = sum (-1)^{koszul_prefix(i)} g^{d-j+1}(.., mu^j(..), a_i..a_1)
//            - sum_{r<d} (G_* mu)^r(g^{s_r}(..), .., g^{s_1}(..))
// evaluated arity by arity for 2 <= d <= order. mu must be minimal.
AInfStructure gauge_apply(const GaugeTransformation& g, const AInfStructure& mu, int order);
// The composite with (H o G)_* = H_* G_*:
//   (H o G)^d = sum_r h^r(g^{s_r}(..), .., g^{s_1}(..)).
GaugeTransformation compose(const GaugeTransformation& h, const GaugeTransformation& g);

// The quadratic gauge killing mu^3 of the transferred model, and the cubic
// gauge killing the resulting mu^4.
GaugeTransformation preset_gauge_G(const FieldSpec& spec, int order = 12);
GaugeTransformation preset_gauge_H(const FieldSpec& spec, int order = 12);
// The thirteen nonzero mu^4 values after applying G.
Table expected_mu4_after_G(const FieldSpec& spec);

// Raised when a targeted order carries a nonzero class.
class ObstructionError : public Error
{
public:
    ObstructionError(int order, HochschildCochain cocycle, HochschildCochain certificate, const std::string& what);
    int order() const { return m_order; }
    const HochschildCochain& cocycle() const { return m_cocycle; }
    const HochschildCochain& certificate() const { return m_certificate; }

private:
    int m_order;
    HochschildCochain m_cocycle;
    HochschildCochain m_certificate;
};

struct KillResult
{
    GaugeTransformation gauge; // composite of the gauges applied
    AInfStructure structure;
};

// For each d in increasing order: solves delta nu = mu^d with the pivot-order
// primitive and applies g^{d-1} = nu. Throws ObstructionError when mu^d is not
// a coboundary, and Error when it is not a cocycle.
KillResult kill_orders(const AInfStructure& mu, const std::set<int>& orders, int order);

// Fixed basis cocycles: the first cohomology basis vector at (6, -4) and (8, -6).
HochschildCochain basis_cocycle_m6(const FieldSpec& spec);
HochschildCochain basis_cocycle_m8(const FieldSpec& spec);
// Coordinate of a cocycle against a basis cocycle of a one-dimensional cell.
FieldValue class_coordinate(const AInfStructure& algebra, const HochschildCochain& cocycle,
                            const HochschildCochain& basis);

struct DeformationClass
{
    FieldValue m6;
    FieldValue m8;
    HochschildCochain mu6; // normalized representatives
    HochschildCochain mu8;
};

// Kills orders 3, 4, 5, then 7, and reads mu^6 and mu^8 against the basis
// cocycles. Requires characteristic other than 2 and 3 and order >= 8.
DeformationClass extract_invariants(const AInfStructure& mu);

// A sparse gauge with components of arity 2..max_arity: each basis slot is
// filled with probability `density` by a small integer over a small
// denominator, deterministically from `seed`.
GaugeTransformation random_gauge(const FieldSpec& spec, const QuiverCategory& cat, int max_arity, int order,
                                 std::uint64_t seed, double density = 0.3);

// Rescaling mu^d -> t^{d-2} mu^d.
AInfStructure rescale(const AInfStructure& mu, const FieldValue& t);

// Extends mu (relations holding below `from`) order by order through
// `order` by solving delta mu^d = -1/2 sum_{j=3}^{d-1} [mu^j, mu^{d+2-j}] with
// the pivot-order primitive, then adding prescribed cocycles. Throws Error if
// a right-hand side is not a coboundary.
AInfStructure mc_extend(const AInfStructure& mu, int from, const std::map<int, HochschildCochain>& prescribed,
                        int order);
// The structure realizing (a, b) against the basis cocycles, from A.
AInfStructure mc_realize(const FieldSpec& spec, const FieldValue& a, const FieldValue& b, int order);

// Infeasibility proof for mu^6 = delta nu.
struct M6Certificate
{
    bool cocycle = false;
    bool nonzero = false;       // no primitive exists
    bool chain_closed = false;  // the four-row subsystem alone is inconsistent
    std::vector<std::string> values; // 144 mu^6 at the four witness words
    std::vector<std::string> chain;  // forced values and the contradiction
    HochschildCochain dual;          // functional killing coboundaries, nonzero on mu^6
};

M6Certificate m6_certificate(const AInfStructure& algebra, const HochschildCochain& mu6);

// Text form: the category followed by G<d> sections.
std::string dump_gauge(const GaugeTransformation& g);
GaugeTransformation load_gauge(std::string_view text, std::optional<FieldSpec> field = std::nullopt);

} // namespace torusfk

#endif
