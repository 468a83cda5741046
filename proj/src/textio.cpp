#include "torusfk/textio.hpp"

#include <cctype>
#include <sstream>

namespace torusfk
{

std::vector<std::string> split_words(std::string_view s)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w)
        out.push_back(w);
    return out;
}

bool keyword_arity(std::string_view word, std::string_view prefix, int& arity)
{
    if (word.size() <= prefix.size() || word.substr(0, prefix.size()) != prefix)
        return false;
    int n = 0;
    for (char c : word.substr(prefix.size())) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
        n = n * 10 + (c - '0');
        if (n > 100000)
            return false;
    }
    arity = n;
    return true;
}

namespace
{

bool matches_keyword(const std::string& word, const std::vector<std::string>& keywords)
{
    for (const auto& k : keywords) {
        if (!k.empty() && k.back() == '*') {
            int a = 0;
            if (keyword_arity(word, std::string_view(k).substr(0, k.size() - 1), a))
                return true;
        } else if (word == k) {
            return true;
        }
    }
    return false;
}

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

} // namespace

std::vector<TextSection> split_sections(std::string_view text, const std::vector<std::string>& keywords)
{
    std::vector<TextSection> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view raw = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (line.empty()) {
            if (nl == text.size())
                break;
            continue;
        }
        auto words = split_words(line);
        if (matches_keyword(words.front(), keywords)) {
            TextSection s;
            s.header = TextLine{number, line};
            s.name = words.front();
            s.args.assign(words.begin() + 1, words.end());
            out.push_back(std::move(s));
        } else {
            if (out.empty())
                throw ParseError(number, "content before the first section header");
            out.back().body.push_back(TextLine{number, line});
        }
        if (nl == text.size())
            break;
    }
    return out;
}

} // namespace torusfk
