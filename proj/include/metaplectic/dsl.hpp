#ifndef METAPLECTIC_DSL_HPP
#define METAPLECTIC_DSL_HPP

// Expression language:
//
//   document  := prelude? series
//   prelude   := "unitary" decl ("," decl)* ";"
//   decl      := sym ":" ("1" | "2" | "inf")
//   series    := (factor ("x" factor)*)? "|x" anchor
//   anchor    := "omega0" | "so1"
//   factor    := atom ("*" atom)*
//   atom      := "nu" ("^" rational)? | sym ("^" int)? | "1"
//   rational  := int | "{" int ("/" int)? "}"
//   int       := "-"? digits
//
// Words (the GL side of a tensor) use `factor ("x" factor)*`, or `1` for the
// empty word; a factor may be wrapped as `chi(...)`.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <metaplectic/formal_ring.hpp>
#include <metaplectic/irreducibility.hpp>
#include <metaplectic/jacquet.hpp>

namespace metaplectic
{

class ParseError : public std::runtime_error
{
public:
    enum class Kind { syntax, unknown_symbol, malformed_rational, declaration };

    ParseError(Kind kind, std::size_t offset, std::vector<std::string> expected, const std::string &message);

    Kind kind() const { return m_kind; }
    /// Byte offset into the input.
    std::size_t offset() const { return m_offset; }
    const std::vector<std::string> &expected() const { return m_expected; }

private:
    Kind m_kind;
    std::size_t m_offset;
    std::vector<std::string> m_expected;
};

namespace ast
{

struct SymbolPower {
    std::string name;
    std::int64_t power;
    std::size_t offset;
};

struct CharacterLiteral {
    Rational nu_exponent;
    std::vector<SymbolPower> symbols;
    std::size_t offset;
};

using Product = std::vector<CharacterLiteral>;

enum class Anchor { omega0, so1 };

struct Declaration {
    std::string name;
    std::int64_t order;
    std::size_t offset;
};

struct Series {
    std::vector<Declaration> prelude;
    Product factors;
    Anchor anchor;
};

} // namespace ast

ast::Series parse_series_ast(std::string_view text);
ast::Product parse_word_ast(std::string_view text);

/// Parses a principal series. Symbols come from `table`, extended by the
/// document's prelude when it has one.
PrincipalSeries parse_series(std::string_view text, const SymbolTablePtr &table);
Word parse_word(std::string_view text, const SymbolTablePtr &table, bool genuine);
/// Symplectic words share the series syntax; the anchor fixes genuineness.
SpWord parse_sp_word(std::string_view text, const SymbolTablePtr &table);
Character parse_character(std::string_view text, const SymbolTablePtr &table);

/// `name:order` as given on the command line.
UnitarySymbolTable::Generator parse_symbol_declaration(std::string_view text);

enum class OutputFormat { text, json };

OutputFormat parse_output_format(std::string_view text);

std::string render(const PrincipalSeries &ps);
std::string render(const Element<WordTensor> &x);
std::string render(const Element<WordSpTensor> &x);
std::string render(const Verdict &v, const PrincipalSeries &ps);

nlohmann::json to_json(const Character &c);
nlohmann::json to_json(const Word &w);
nlohmann::json to_json(const SpWord &w);
nlohmann::json to_json(const PrincipalSeries &ps);
nlohmann::json to_json(const Element<WordTensor> &x);
nlohmann::json to_json(const Element<WordSpTensor> &x);
nlohmann::json to_json(const Verdict &v, const PrincipalSeries &ps);

} // namespace metaplectic

#endif
