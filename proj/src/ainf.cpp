#include "torusfk/ainf.hpp"

#include <sstream>

namespace torusfk
{

int koszul_prefix(const QuiverCategory& cat, const Word& w, int i)
{
    const int n = static_cast<int>(w.size());
    int s = 0;
    for (int k = 1; k <= i; ++k)
        s += cat.generator(w[n - k]).degree - 1;
    return s;
}

AInfStructure::AInfStructure(FieldSpec spec, QuiverCategory cat, int order)
    : m_spec(std::move(spec)), m_cat(std::move(cat)), m_order(order), m_tables(order + 1)
{
    if (order < 1)
        throw Error("truncation order must be positive");
}

void AInfStructure::set_order(int order)
{
    if (order < 1)
        throw Error("truncation order must be positive");
    m_order = order;
    m_tables.resize(order + 1);
}

void check_output(const QuiverCategory& in, const QuiverCategory& out, const Word& w, const Element& value,
                  int degree_shift)
{
    const int src = in.word_source(w);
    const int tgt = in.word_target(w);
    const int deg = in.word_degree(w) + degree_shift;
    for (const auto& [g, c] : value.entries()) {
        if (g < 0 || g >= static_cast<int>(out.generator_count()))
            throw Error("output refers to an unknown generator");
        const auto& gen = out.generator(g);
        if (gen.source != src || gen.target != tgt)
            throw Error("output term " + gen.name + " of " + in.word_name(w) + " has the wrong endpoints");
        if (gen.degree != deg)
            throw Error("output term " + gen.name + " of " + in.word_name(w) + " has degree " +
                        std::to_string(gen.degree) + ", expected " + std::to_string(deg));
    }
}

void check_output(const QuiverCategory& cat, const Word& w, const Element& value, int degree_shift)
{
    check_output(cat, cat, w, value, degree_shift);
}

void AInfStructure::set(const Word& w, Element value)
{
    const int d = static_cast<int>(w.size());
    if (d < 1 || d > m_order)
        throw Error("arity " + std::to_string(d) + " outside 1.." + std::to_string(m_order));
    if (!m_cat.composable(w))
        throw Error("noncomposable tuple " + m_cat.word_name(w));
    check_output(m_cat, w, value, 2 - d);
    if (value.empty())
        m_tables[d].erase(w);
    else
        m_tables[d][w] = std::move(value);
}

void AInfStructure::add(const Word& w, const Element& value)
{
    Element cur;
    if (const Element* e = find(w))
        cur = *e;
    cur.axpy(FieldValue::one(m_spec), value);
    set(w, std::move(cur));
}

void AInfStructure::clear_arity(int d)
{
    if (d >= 1 && d <= m_order)
        m_tables[d].clear();
}

Element AInfStructure::evaluate(const Word& w) const
{
    const int d = static_cast<int>(w.size());
    if (d < 1 || d > m_order)
        throw Error("arity " + std::to_string(d) + " beyond the truncation order " + std::to_string(m_order));
    if (!m_cat.composable(w))
        throw Error("noncomposable tuple " + m_cat.word_name(w));
    const Element* e = find(w);
    return e ? *e : Element();
}

const Element* AInfStructure::find(const Word& w) const
{
    const std::size_t d = w.size();
    if (d == 0 || d >= m_tables.size())
        return nullptr;
    auto it = m_tables[d].find(w);
    return it == m_tables[d].end() ? nullptr : &it->second;
}

Element AInfStructure::apply(const std::vector<Element>& args) const
{
    Element out;
    if (args.empty() || static_cast<int>(args.size()) > m_order)
        return out;
    for (const auto& a : args)
        if (a.empty())
            return out;
    Word w(args.size());
    auto rec = [&](auto&& self, std::size_t k, const FieldValue& coeff) -> void {
        if (k == args.size()) {
            if (const Element* e = find(w))
                out.axpy(coeff, *e);
            return;
        }
        for (const auto& [g, c] : args[k].entries()) {
            if (k > 0 && m_cat.generator(g).target != m_cat.generator(w[k - 1]).source)
                continue;
            w[k] = g;
            self(self, k + 1, coeff * c);
        }
    };
    rec(rec, 0, FieldValue::one(m_spec));
    return out;
}

const Table& AInfStructure::table(int d) const
{
    static const Table empty;
    if (d < 1 || d >= static_cast<int>(m_tables.size()))
        return empty;
    return m_tables[d];
}

int AInfStructure::top_arity() const
{
    for (int d = static_cast<int>(m_tables.size()) - 1; d >= 1; --d)
        if (!m_tables[d].empty())
            return d;
    return 0;
}

Element ainf_relation(const AInfStructure& mu, const Word& w)
{
    const auto& cat = mu.category();
    const FieldSpec& spec = mu.spec();
    const int n = static_cast<int>(w.size());
    Element total;
    Word outer;
    for (int j = 1; j <= n; ++j) {
        if (mu.table(j).empty() || mu.table(n - j + 1).empty())
            continue;
        int star = 0; // koszul_prefix(w, i), updated incrementally
        for (int i = 0; i + j <= n; ++i) {
            if (i > 0)
                star += cat.generator(w[n - i]).degree - 1;
            Word inner(w.begin() + (n - i - j), w.begin() + (n - i));
            const Element* in = mu.find(inner);
            if (!in)
                continue;
            const FieldValue sign = FieldValue(spec, (star % 2 == 0) ? 1L : -1L);
            for (const auto& [g, c] : in->entries()) {
                outer.assign(w.begin(), w.begin() + (n - i - j));
                outer.push_back(g);
                outer.insert(outer.end(), w.begin() + (n - i), w.end());
                if (const Element* o = mu.find(outer))
                    total.axpy(sign * c, *o);
            }
        }
    }
    return total;
}

std::vector<Violation> ainf_check(const AInfStructure& mu, int up_to, CheckMode mode)
{
    if (up_to > mu.order())
        throw Error("relation check beyond the truncation order");
    std::vector<Violation> out;
    const auto& cat = mu.category();
    for (int n = 1; n <= up_to; ++n) {
        for (const Word& w : cat.composable_words(n, mode == CheckMode::normalized)) {
            Element r = ainf_relation(mu, w);
            if (!r.empty())
                out.push_back(Violation{n, w, std::move(r)});
        }
    }
    return out;
}

namespace
{

struct Builder
{
    AInfStructure mu;

    Builder(const FieldSpec& spec, QuiverCategory cat, int order) : mu(spec, std::move(cat), order) {}

    int g(const char* name) const { return mu.category().generator_id(name); }

    void put(std::initializer_list<const char*> word, long coeff, const char* out)
    {
        Word w;
        for (const char* n : word)
            w.push_back(g(n));
        mu.add(w, Element::term(g(out), FieldValue(mu.spec(), coeff)));
    }
};

QuiverCategory two_objects()
{
    QuiverCategory cat;
    cat.add_object("a");
    cat.add_object("b");
    return cat;
}

} // namespace

AInfStructure preset_A(const FieldSpec& spec, int order)
{
    QuiverCategory cat = two_objects();
    const int a = 0, b = 1;
    cat.add_generator("e0", a, a, 0);
    cat.add_generator("e1", a, a, 1);
    cat.add_generator("f0", b, b, 0);
    cat.add_generator("f1", b, b, 1);
    cat.add_generator("u", a, b, 1);
    cat.add_generator("v", b, a, 0);
    cat.set_identity(a, 0);
    cat.set_identity(b, 2);
    Builder B(spec, std::move(cat), order);
    B.put({"e0", "e0"}, 1, "e0");
    B.put({"e0", "e1"}, -1, "e1");
    B.put({"e1", "e0"}, 1, "e1");
    B.put({"f0", "f0"}, 1, "f0");
    B.put({"f0", "f1"}, -1, "f1");
    B.put({"f1", "f0"}, 1, "f1");
    B.put({"v", "f0"}, 1, "v");
    B.put({"e0", "v"}, 1, "v");
    B.put({"f0", "u"}, -1, "u");
    B.put({"u", "e0"}, 1, "u");
    B.put({"v", "u"}, -1, "e1");
    B.put({"u", "v"}, 1, "f1");
    return std::move(B.mu);
}

AInfStructure preset_C(const FieldSpec& spec, int order)
{
    QuiverCategory cat = two_objects();
    const int a = 0, b = 1;
    cat.add_generator("e0", a, a, 0);
    cat.add_generator("e1", a, a, 1);
    cat.add_generator("f0", b, b, 0);
    cat.add_generator("f1", b, b, 1);
    cat.add_generator("v0", b, a, 0);
    cat.add_generator("v1", b, a, 0);
    cat.add_generator("v01", b, a, 1);
    cat.add_generator("u01", a, b, 1);
    cat.set_identity(a, 0);
    cat.set_identity(b, 2);
    Builder B(spec, std::move(cat), order);
    B.put({"v0"}, -1, "v01");
    B.put({"v1"}, 1, "v01");

    B.put({"e0", "e0"}, 1, "e0");
    B.put({"e0", "e1"}, -1, "e1");
    B.put({"e1", "e0"}, 1, "e1");
    B.put({"f0", "f0"}, 1, "f0");
    B.put({"f0", "f1"}, -1, "f1");
    B.put({"f1", "f0"}, 1, "f1");

    B.put({"v0", "f0"}, 1, "v0");
    B.put({"v1", "f0"}, 1, "v1");
    B.put({"v01", "f0"}, 1, "v01");
    B.put({"v0", "f1"}, -1, "v01");
    B.put({"e0", "v0"}, 1, "v0");
    B.put({"e0", "v1"}, 1, "v1");
    B.put({"e1", "v1"}, 1, "v01");
    B.put({"e0", "v01"}, -1, "v01");

    B.put({"f0", "u01"}, -1, "u01");
    B.put({"u01", "e0"}, 1, "u01");

    B.put({"v0", "u01"}, -1, "e1");
    B.put({"u01", "v1"}, 1, "f1");
    return std::move(B.mu);
}

AInfStructure preset_D(const FieldSpec& spec, int order)
{
    QuiverCategory cat = two_objects();
    const int a = 0, b = 1;
    for (const char* n : {"x0", "x1", "x2"})
        cat.add_generator(n, a, a, 0);
    for (const char* n : {"x01", "x12", "x02"})
        cat.add_generator(n, a, a, 1);
    for (const char* n : {"y0", "y1", "y2"})
        cat.add_generator(n, b, b, 0);
    for (const char* n : {"y01", "y12", "y02"})
        cat.add_generator(n, b, b, 1);
    cat.add_generator("v0", b, a, 0);
    cat.add_generator("v1", b, a, 0);
    cat.add_generator("v01", b, a, 1);
    cat.add_generator("u01", a, b, 1);
    Builder B(spec, std::move(cat), order);

    for (const char* p : {"x", "y"}) {
        auto n = [&](const char* suffix) { return std::string(p) + suffix; };
        const std::string g0 = n("0"), g1 = n("1"), g2 = n("2"), g01 = n("01"), g12 = n("12"), g02 = n("02");
        B.put({g0.c_str()}, -1, g01.c_str());
        B.put({g0.c_str()}, -1, g02.c_str());
        B.put({g1.c_str()}, 1, g01.c_str());
        B.put({g1.c_str()}, -1, g12.c_str());
        B.put({g2.c_str()}, 1, g12.c_str());
        B.put({g2.c_str()}, 1, g02.c_str());

        B.put({g0.c_str(), g0.c_str()}, 1, g0.c_str());
        B.put({g1.c_str(), g1.c_str()}, 1, g1.c_str());
        B.put({g2.c_str(), g2.c_str()}, 1, g2.c_str());
        B.put({g0.c_str(), g01.c_str()}, -1, g01.c_str());
        B.put({g01.c_str(), g1.c_str()}, 1, g01.c_str());
        B.put({g1.c_str(), g12.c_str()}, -1, g12.c_str());
        B.put({g12.c_str(), g2.c_str()}, 1, g12.c_str());
        B.put({g0.c_str(), g02.c_str()}, -1, g02.c_str());
        B.put({g02.c_str(), g2.c_str()}, 1, g02.c_str());
    }
    B.put({"v0"}, -1, "v01");
    B.put({"v1"}, 1, "v01");

    // hom(b,a) x hom(b,b) and hom(a,a) x hom(b,a)
    B.put({"v0", "y0"}, 1, "v0");
    B.put({"v1", "y1"}, 1, "v1");
    B.put({"v01", "y1"}, 1, "v01");
    B.put({"v0", "y01"}, -1, "v01");
    B.put({"x0", "v0"}, 1, "v0");
    B.put({"x1", "v1"}, 1, "v1");
    B.put({"x01", "v1"}, 1, "v01");
    B.put({"x0", "v01"}, -1, "v01");

    B.put({"y0", "u01"}, -1, "u01");
    B.put({"u01", "x1"}, 1, "u01");

    B.put({"v0", "u01"}, -1, "x01");
    B.put({"u01", "v1"}, 1, "y01");
    return std::move(B.mu);
}

std::vector<Element> embedding_C_into_D(const AInfStructure& c, const AInfStructure& d)
{
    const auto& dc = d.category();
    const FieldSpec& spec = d.spec();
    auto sum = [&](std::initializer_list<const char*> names) {
        Element e;
        for (const char* n : names)
            e.add(dc.generator_id(n), FieldValue::one(spec));
        return e;
    };
    std::vector<Element> out;
    for (const auto& g : c.category().generators()) {
        if (g.name == "e0")
            out.push_back(sum({"x0", "x1", "x2"}));
        else if (g.name == "f0")
            out.push_back(sum({"y0", "y1", "y2"}));
        else if (g.name == "e1")
            out.push_back(sum({"x01"}));
        else if (g.name == "f1")
            out.push_back(sum({"y01"}));
        else
            out.push_back(sum({g.name.c_str()}));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Text format

std::string dump_category(const QuiverCategory& cat)
{
    std::ostringstream os;
    os << "OBJECTS\n";
    for (std::size_t o = 0; o < cat.object_count(); ++o)
        os << cat.object_name(static_cast<int>(o)) << "\n";
    os << "GENERATORS\n";
    for (const auto& g : cat.generators())
        os << g.name << " " << cat.object_name(g.source) << " " << cat.object_name(g.target) << " " << g.degree
           << "\n";
    bool any = false;
    for (std::size_t o = 0; o < cat.object_count(); ++o)
        any = any || cat.identity(static_cast<int>(o)).has_value();
    if (any) {
        os << "IDENTITIES\n";
        for (std::size_t o = 0; o < cat.object_count(); ++o)
            if (auto id = cat.identity(static_cast<int>(o)))
                os << cat.object_name(static_cast<int>(o)) << " " << cat.generator(*id).name << "\n";
    }
    return os.str();
}

std::string dump_table(const QuiverCategory& in, const QuiverCategory& out, const std::string& header,
                       const Table& table)
{
    std::ostringstream os;
    os << header << "\n";
    for (const auto& [w, e] : table) {
        for (int g : w)
            os << in.generator(g).name << " ";
        os << "-> " << format_element(out, e) << "\n";
    }
    return os.str();
}

std::string dump(const AInfStructure& mu)
{
    std::ostringstream os;
    os << "FIELD " << mu.spec().name() << "\n";
    os << "ORDER " << mu.order() << "\n";
    os << dump_category(mu.category());
    for (int d = 1; d <= mu.order(); ++d)
        if (!mu.table(d).empty())
            os << dump_table(mu.category(), mu.category(), "MU" + std::to_string(d), mu.table(d));
    return os.str();
}

QuiverCategory parse_category(const std::vector<TextSection>& sections)
{
    QuiverCategory cat;
    const TextSection* objects = nullptr;
    const TextSection* generators = nullptr;
    const TextSection* identities = nullptr;
    for (const auto& s : sections) {
        const TextSection** slot = s.name == "OBJECTS"      ? &objects
                                   : s.name == "GENERATORS" ? &generators
                                   : s.name == "IDENTITIES" ? &identities
                                                            : nullptr;
        if (!slot)
            continue;
        if (*slot)
            throw ParseError(s.header.number, "duplicate section " + s.name);
        *slot = &s;
    }
    if (!objects)
        throw ParseError(1, "missing OBJECTS section");
    if (!generators)
        throw ParseError(objects->header.number, "missing GENERATORS section");
    auto wrap = [](const TextLine& line, auto&& fn) {
        try {
            fn();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(line.number, e.what());
        }
    };
    for (const auto& line : objects->body)
        for (const auto& w : split_words(line.text))
            wrap(line, [&] { cat.add_object(w); });
    for (const auto& line : generators->body) {
        auto w = split_words(line.text);
        if (w.size() != 4)
            throw ParseError(line.number, "expected 'name source target degree'");
        wrap(line, [&] {
            auto src = cat.find_object(w[1]);
            auto tgt = cat.find_object(w[2]);
            if (!src || !tgt)
                throw Error("unknown object in '" + line.text + "'");
            int deg = 0;
            try {
                std::size_t used = 0;
                deg = std::stoi(w[3], &used);
                if (used != w[3].size())
                    throw Error("");
            } catch (...) {
                throw Error("malformed degree '" + w[3] + "'");
            }
            cat.add_generator(w[0], *src, *tgt, deg);
        });
    }
    if (identities) {
        for (const auto& line : identities->body) {
            auto w = split_words(line.text);
            if (w.size() != 2)
                throw ParseError(line.number, "expected 'object generator'");
            wrap(line, [&] {
                auto o = cat.find_object(w[0]);
                if (!o)
                    throw Error("unknown object '" + w[0] + "'");
                cat.set_identity(*o, cat.generator_id(w[1]));
            });
        }
    }
    return cat;
}

Table parse_table(const QuiverCategory& in, const QuiverCategory& out, const FieldSpec& spec,
                  const TextSection& section, int arity, int degree_shift)
{
    Table t;
    for (const auto& line : section.body) {
        auto arrow = line.text.find("->");
        if (arrow == std::string::npos)
            throw ParseError(line.number, "expected 'inputs -> combination'");
        try {
            Word w;
            for (const auto& name : split_words(line.text.substr(0, arrow)))
                w.push_back(in.generator_id(name));
            if (static_cast<int>(w.size()) != arity)
                throw Error("expected " + std::to_string(arity) + " inputs in " + section.name);
            if (!in.composable(w))
                throw Error("noncomposable tuple " + in.word_name(w));
            if (t.count(w))
                throw Error("duplicate entry " + in.word_name(w));
            Element e = parse_element(out, spec, line.text.substr(arrow + 2));
            check_output(in, out, w, e, degree_shift);
            if (!e.empty())
                t.emplace(std::move(w), std::move(e));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(line.number, e.what());
        }
    }
    return t;
}

AInfStructure load(std::string_view text, std::optional<FieldSpec> field)
{
    auto sections = split_sections(text, {"FIELD", "ORDER", "OBJECTS", "GENERATORS", "IDENTITIES", "MU*"});
    FieldSpec spec = field.value_or(FieldSpec::rationals());
    int order = 12;
    for (const auto& s : sections) {
        if (s.name == "FIELD") {
            if (s.args.size() != 1 || !s.body.empty())
                throw ParseError(s.header.number, "expected 'FIELD <name>'");
            if (!field) {
                try {
                    spec = FieldSpec::parse(s.args[0]);
                } catch (const Error& e) {
                    throw ParseError(s.header.number, e.what());
                }
            }
        } else if (s.name == "ORDER") {
            if (s.args.size() != 1 || !s.body.empty())
                throw ParseError(s.header.number, "expected 'ORDER <n>'");
            try {
                std::size_t used = 0;
                order = std::stoi(s.args[0], &used);
                if (used != s.args[0].size() || order < 1)
                    throw Error("");
            } catch (...) {
                throw ParseError(s.header.number, "malformed order '" + s.args[0] + "'");
            }
        }
    }
    AInfStructure mu(spec, parse_category(sections), order);
    std::vector<bool> seen(order + 1, false);
    for (const auto& s : sections) {
        int d = 0;
        if (!keyword_arity(s.name, "MU", d))
            continue;
        if (d < 1 || d > order)
            throw ParseError(s.header.number, s.name + " exceeds the order " + std::to_string(order));
        if (seen[d])
            throw ParseError(s.header.number, "duplicate section " + s.name);
        seen[d] = true;
        for (auto& [w, e] : parse_table(mu.category(), mu.category(), spec, s, d, 2 - d))
            mu.set(w, e);
    }
    return mu;
}

} // namespace torusfk
