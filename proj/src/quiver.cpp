#include "torusfk/quiver.hpp"

#include <algorithm>
#include <cctype>

namespace torusfk
{

int QuiverCategory::add_object(std::string name)
{
    if (find_object(name))
        throw Error("duplicate object '" + name + "'");
    m_objects.push_back(std::move(name));
    m_identity.emplace_back();
    return static_cast<int>(m_objects.size()) - 1;
}

int QuiverCategory::add_generator(std::string name, int source, int target, int degree)
{
    if (find_generator(name))
        throw Error("duplicate generator '" + name + "'");
    if (source < 0 || target < 0 || source >= static_cast<int>(m_objects.size()) ||
        target >= static_cast<int>(m_objects.size()))
        throw Error("generator '" + name + "' refers to an unknown object");
    m_generators.push_back(Generator{std::move(name), source, target, degree});
    return static_cast<int>(m_generators.size()) - 1;
}

void QuiverCategory::set_identity(int object, int generator)
{
    const auto& g = m_generators.at(generator);
    if (g.source != object || g.target != object || g.degree != 0)
        throw Error("identity '" + g.name + "' must be a degree-0 endomorphism of '" + m_objects.at(object) + "'");
    m_identity.at(object) = generator;
}

std::optional<int> QuiverCategory::find_object(std::string_view name) const
{
    for (std::size_t i = 0; i < m_objects.size(); ++i)
        if (m_objects[i] == name)
            return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> QuiverCategory::find_generator(std::string_view name) const
{
    for (std::size_t i = 0; i < m_generators.size(); ++i)
        if (m_generators[i].name == name)
            return static_cast<int>(i);
    return std::nullopt;
}

int QuiverCategory::generator_id(std::string_view name) const
{
    auto g = find_generator(name);
    if (!g)
        throw Error("unknown generator '" + std::string(name) + "'");
    return *g;
}

bool QuiverCategory::is_identity(int g) const
{
    const auto& gen = m_generators.at(g);
    return gen.source == gen.target && m_identity.at(gen.source) == g;
}

bool QuiverCategory::composable(const Word& w) const
{
    for (int g : w)
        if (g < 0 || g >= static_cast<int>(m_generators.size()))
            return false;
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (m_generators[w[k + 1]].target != m_generators[w[k]].source)
            return false;
    return true;
}

int QuiverCategory::word_degree(const Word& w) const
{
    int d = 0;
    for (int g : w)
        d += m_generators.at(g).degree;
    return d;
}

std::vector<int> QuiverCategory::hom_basis(int source, int target, int degree) const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < m_generators.size(); ++i) {
        const auto& g = m_generators[i];
        if (g.source == source && g.target == target && g.degree == degree)
            out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<Word> QuiverCategory::composable_words(int length, bool skip_identities) const
{
    std::vector<Word> out;
    if (length <= 0)
        return out;
    std::vector<int> usable;
    for (std::size_t i = 0; i < m_generators.size(); ++i)
        if (!skip_identities || !is_identity(static_cast<int>(i)))
            usable.push_back(static_cast<int>(i));
    // Build in display order: the first entry is the outermost morphism.
    Word w;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == length) {
            out.push_back(w);
            return;
        }
        for (int g : usable) {
            if (!w.empty() && m_generators[g].target != m_generators[w.back()].source)
                continue;
            w.push_back(g);
            self(self);
            w.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::string QuiverCategory::word_name(const Word& w) const
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ",";
        s += m_generators.at(w[i]).name;
    }
    return s + ")";
}

void check_homogeneous(const QuiverCategory& cat, const Element& e)
{
    if (e.empty())
        return;
    const auto& first = cat.generator(e.lead());
    for (const auto& [g, c] : e.entries()) {
        const auto& gen = cat.generator(g);
        if (gen.source != first.source || gen.target != first.target || gen.degree != first.degree)
            throw Error("inhomogeneous element: " + format_element(cat, e));
    }
}

std::string format_element(const QuiverCategory& cat, const Element& e)
{
    if (e.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& [g, c] : e.entries()) {
        bool neg = false;
        std::string mag;
        if (c.spec().is_rational()) {
            neg = sgn(c.rational()) < 0;
            mpq_class a = abs(c.rational());
            mag = a == 1 ? std::string() : a.get_str() + "*";
        } else {
            mag = c.is_one() ? std::string() : c.to_string() + "*";
        }
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        s += mag + cat.generator(g).name;
        first = false;
    }
    return s;
}

Element parse_element(const QuiverCategory& cat, const FieldSpec& spec, std::string_view text)
{
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            compact.push_back(ch);
    if (compact.empty())
        throw Error("empty combination");
    Element out;
    if (compact == "0")
        return out;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        bool negative = false;
        if (compact[pos] == '+' || compact[pos] == '-') {
            negative = compact[pos] == '-';
            ++pos;
        }
        std::size_t end = compact.find_first_of("+-", pos);
        if (end == std::string::npos)
            end = compact.size();
        std::string_view term(compact.data() + pos, end - pos);
        if (term.empty())
            throw Error("malformed combination '" + std::string(text) + "'");
        FieldValue coeff = FieldValue::one(spec);
        std::string_view name = term;
        if (auto star = term.find('*'); star != std::string_view::npos) {
            coeff = parse_scalar(term.substr(0, star), spec);
            name = term.substr(star + 1);
        }
        if (negative)
            coeff = -coeff;
        out.add(cat.generator_id(name), coeff);
        pos = end;
    }
    return out;
}

} // namespace torusfk
