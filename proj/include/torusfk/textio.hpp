#ifndef TORUSFK_TEXTIO_HPP
#define TORUSFK_TEXTIO_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torusfk/scalars.hpp"

namespace torusfk
{

class ParseError : public Error
{
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), m_line(line)
    {
    }
    int line() const { return m_line; }

private:
    int m_line;
};

struct TextLine
{
    int number = 0;
    std::string text; // trimmed, comment stripped
};

// A header line (an upper-case keyword, optionally followed by arguments)
// and the body lines up to the next header.
struct TextSection
{
    TextLine header;
    std::string name;              // first word of the header
    std::vector<std::string> args; // remaining words of the header
    std::vector<TextLine> body;
};

// Splits text into sections. Lines starting with an upper-case keyword from
// `keywords` open a new section; '#' starts a comment; blank lines are
// ignored. A keyword may carry a numeric suffix when listed with a trailing
// '*' (e.g. "MU*" matches MU1, MU7).
std::vector<TextSection> split_sections(std::string_view text, const std::vector<std::string>& keywords);

std::vector<std::string> split_words(std::string_view s);

// Parses "name" followed by digits, e.g. "MU12" with prefix "MU" -> 12.
bool keyword_arity(std::string_view word, std::string_view prefix, int& arity);

} // namespace torusfk

#endif
