#ifndef TORUSFK_QUIVER_HPP
#define TORUSFK_QUIVER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torusfk/linalg.hpp"
#include "torusfk/scalars.hpp"

namespace torusfk
{

// A sequence of generator ids in display order (a_d, ..., a_1): index 0 is
// the outermost (last applied) morphism and the back is a_1.
using Word = std::vector<int>;

struct Generator
{
    std::string name;
    int source = 0;
    int target = 0;
    int degree = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
};

// Objects plus graded generating morphisms; the generators form a basis of
// every hom-space.
class QuiverCategory
{
public:
    int add_object(std::string name);
    int add_generator(std::string name, int source, int target, int degree);
    void set_identity(int object, int generator);

    std::size_t object_count() const { return m_objects.size(); }
    std::size_t generator_count() const { return m_generators.size(); }
    const std::string& object_name(int o) const { return m_objects.at(o); }
    const Generator& generator(int g) const { return m_generators.at(g); }
    const std::vector<Generator>& generators() const { return m_generators; }

    std::optional<int> find_object(std::string_view name) const;
    std::optional<int> find_generator(std::string_view name) const;
    int generator_id(std::string_view name) const; // throws on unknown names

    std::optional<int> identity(int object) const { return m_identity.at(object); }
    bool is_identity(int g) const;

    // target(a_i) == source(a_{i+1}) along the word
    bool composable(const Word& w) const;
    int word_source(const Word& w) const { return generator(w.back()).source; }
    int word_target(const Word& w) const { return generator(w.front()).target; }
    int word_degree(const Word& w) const;

    // Generators g with the given source, target and degree.
    std::vector<int> hom_basis(int source, int target, int degree) const;

    // All composable words of the given length in canonical order
    // (lexicographic in declaration order). Identities are skipped when
    // skip_identities is set.
    std::vector<Word> composable_words(int length, bool skip_identities) const;

    std::string word_name(const Word& w) const;

    friend bool operator==(const QuiverCategory&, const QuiverCategory&) = default;

private:
    std::vector<std::string> m_objects;
    std::vector<Generator> m_generators;
    std::vector<std::optional<int>> m_identity;
};

// Linear combination of generators; zero coefficients are pruned and terms
// are sorted by generator id.
class Element : public SparseVec
{
public:
    Element() = default;
    explicit Element(SparseVec v) : SparseVec(std::move(v)) {}

    static Element basis(int g, const FieldSpec& spec)
    {
        Element e;
        e.add(g, FieldValue::one(spec));
        return e;
    }
    static Element term(int g, const FieldValue& c)
    {
        Element e;
        e.add(g, c);
        return e;
    }
};

// Throws Error when the terms do not share source, target and degree.
void check_homogeneous(const QuiverCategory& cat, const Element& e);

std::string format_element(const QuiverCategory& cat, const Element& e);
Element parse_element(const QuiverCategory& cat, const FieldSpec& spec, std::string_view text);

} // namespace torusfk

#endif
