#ifndef TORUSFK_AINF_HPP
#define TORUSFK_AINF_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torusfk/quiver.hpp"
#include "torusfk/textio.hpp"

namespace torusfk
{

// Sparse multilinear map: absent words mean zero.
using Table = std::map<Word, Element>;

// Sign exponent sum_{k <= i} (|a_k| - 1) for the innermost i entries of w.
int koszul_prefix(const QuiverCategory& cat, const Word& w, int i);

// Operations mu^d for 1 <= d <= order on a graded quiver category. mu^d
// has degree 2 - d.
class AInfStructure
{
public:
    AInfStructure() = default;
    AInfStructure(FieldSpec spec, QuiverCategory cat, int order = 12);

    const FieldSpec& spec() const { return m_spec; }
    const QuiverCategory& category() const { return m_cat; }
    int order() const { return m_order; }
    // Changing the order drops every table above the new order.
    void set_order(int order);

    // Validates composability, arity and degrees; a zero value erases.
    void set(const Word& w, Element value);
    void add(const Word& w, const Element& value);
    void clear_arity(int d);

    // Table lookup with checks: throws on noncomposable words or arity
    // beyond the order.
    Element evaluate(const Word& w) const;
    // Unchecked lookup used on hot paths.
    const Element* find(const Word& w) const;
    // Multilinear extension: mu^d(args[0], ..., args[d-1]) in display order.
    Element apply(const std::vector<Element>& args) const;

    const Table& table(int d) const;
    bool is_minimal() const { return table(1).empty(); }
    // Largest d with a nonzero entry (0 when everything vanishes).
    int top_arity() const;

    friend bool operator==(const AInfStructure&, const AInfStructure&) = default;

private:
    FieldSpec m_spec;
    QuiverCategory m_cat;
    int m_order = 12;
    std::vector<Table> m_tables; // index d
};

// Throws Error unless every term of `value` has the given endpoints and
// degree, i.e. lies in hom(source, target)^degree.
void check_output(const QuiverCategory& cat, const Word& w, const Element& value, int degree_shift);
// Same, for maps whose outputs live in a second category on the same objects.
void check_output(const QuiverCategory& in, const QuiverCategory& out, const Word& w, const Element& value,
                  int degree_shift);

struct Violation
{
    int arity = 0;
    Word tuple;
    Element value; // the nonzero left-hand side of the relation
};

enum class CheckMode
{
    full,       // every composable word
    normalized, // words avoiding identities (enough for strictly unital structures)
};

// sum_{i,j} (-1)^{koszul_prefix(i)} mu^{n-j+1}(.., mu^j(a_{i+j}..a_{i+1}), a_i..a_1)
Element ainf_relation(const AInfStructure& mu, const Word& w);
std::vector<Violation> ainf_check(const AInfStructure& mu, int up_to, CheckMode mode = CheckMode::full);

// The six-dimensional algebra: e0, e1 on a; f0, f1 on b; u: a -> b in
// degree 1; v: b -> a in degree 0; products (-1)^{|y|} x.y of the
// path algebra modulo paths of length three.
AInfStructure preset_A(const FieldSpec& spec, int order = 12);
// The eight-generator dg model with mu^1(v0) = -v01, mu^1(v1) = v01.
AInfStructure preset_C(const FieldSpec& spec, int order = 12);
// The sixteen-generator dg category containing the model above.
AInfStructure preset_D(const FieldSpec& spec, int order = 12);

// Image of each C generator inside D (e0 -> x0 + x1 + x2, e1 -> x01, ...).
std::vector<Element> embedding_C_into_D(const AInfStructure& c, const AInfStructure& d);

// Canonical text form: FIELD, ORDER, OBJECTS, GENERATORS, IDENTITIES, then
// MU<d> blocks with entries "g_d ... g_1 -> combination".
std::string dump(const AInfStructure& mu);
// Parses the canonical form; `field` overrides the FIELD line. Errors carry
// line numbers.
AInfStructure load(std::string_view text, std::optional<FieldSpec> field = std::nullopt);

// Building blocks shared by other text formats.
std::string dump_category(const QuiverCategory& cat);
std::string dump_table(const QuiverCategory& in, const QuiverCategory& out, const std::string& header,
                       const Table& table);
QuiverCategory parse_category(const std::vector<TextSection>& sections);
// Parses entries of a section whose words have the given arity; output
// degree must equal input degree + degree_shift.
Table parse_table(const QuiverCategory& in, const QuiverCategory& out, const FieldSpec& spec,
                  const TextSection& section, int arity, int degree_shift);

} // namespace torusfk

#endif
