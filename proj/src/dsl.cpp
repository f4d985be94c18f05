#include <metaplectic/dsl.hpp>

#include <cctype>
#include <limits>
#include <sstream>

namespace metaplectic
{

ParseError::ParseError(Kind kind, std::size_t offset, std::vector<std::string> expected, const std::string &message)
    : std::runtime_error(message + " at offset " + std::to_string(offset)), m_kind(kind), m_offset(offset),
      m_expected(std::move(expected))
{
}

namespace
{

enum class Tok { ident, integer, caret, lbrace, rbrace, slash, star, minus, colon, comma, semi, lparen, rparen, rtimes, end };

struct Token {
    Tok kind;
    std::string_view text;
    std::size_t offset;
};

std::string describe(const Token &t)
{
    if (t.kind == Tok::end) {
        return "end of input";
    }
    return "'" + std::string(t.text) + "'";
}

std::vector<Token> lex(std::string_view text)
{
    std::vector<Token> out;
    std::size_t i = 0;
    const auto n = text.size();
    while (i < n) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const auto start = i;
        if (std::isalpha(c) || c == '_') {
            while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                ++i;
            }
            out.push_back({Tok::ident, text.substr(start, i - start), start});
            continue;
        }
        if (std::isdigit(c)) {
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                ++i;
            }
            out.push_back({Tok::integer, text.substr(start, i - start), start});
            continue;
        }
        if (c == '|') {
            if (i + 1 < n && text[i + 1] == 'x' &&
                !(i + 2 < n && (std::isalnum(static_cast<unsigned char>(text[i + 2])) || text[i + 2] == '_'))) {
                out.push_back({Tok::rtimes, text.substr(start, 2), start});
                i += 2;
                continue;
            }
            throw ParseError(ParseError::Kind::syntax, start, {"|x"}, "stray '|'");
        }
        Tok kind;
        switch (c) {
        case '^': kind = Tok::caret; break;
        case '{': kind = Tok::lbrace; break;
        case '}': kind = Tok::rbrace; break;
        case '/': kind = Tok::slash; break;
        case '*': kind = Tok::star; break;
        case '-': kind = Tok::minus; break;
        case ':': kind = Tok::colon; break;
        case ',': kind = Tok::comma; break;
        case ';': kind = Tok::semi; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        default:
            throw ParseError(ParseError::Kind::syntax, start, {"nu", "symbol", "x", "|x"},
                             "unexpected character '" + std::string(1, text[i]) + "'");
        }
        out.push_back({kind, text.substr(start, 1), start});
        ++i;
    }
    out.push_back({Tok::end, {}, n});
    return out;
}

bool reserved(std::string_view name)
{
    return name == "nu" || name == "x" || name == "omega0" || name == "so1" || name == "chi" || name == "unitary";
}

class Parser
{
public:
    explicit Parser(std::string_view text) : m_tokens(lex(text)) {}

    ast::Series series_document()
    {
        ast::Series s;
        s.prelude = prelude();
        if (peek().kind != Tok::rtimes) {
            s.factors = product(false);
        }
        expect(Tok::rtimes, "|x");
        const auto &a = peek();
        if (a.kind == Tok::ident && a.text == "omega0") {
            s.anchor = ast::Anchor::omega0;
        } else if (a.kind == Tok::ident && a.text == "so1") {
            s.anchor = ast::Anchor::so1;
        } else {
            fail({"omega0", "so1"}, "expected an anchor");
        }
        next();
        expect(Tok::end, "end of input");
        return s;
    }

    ast::Product word_document()
    {
        ast::Product p;
        if (peek().kind == Tok::end) {
            return p;
        }
        if (peek().kind == Tok::integer && peek().text == "1" && m_tokens[m_pos + 1].kind == Tok::end) {
            next();
            return p;
        }
        p = product(true);
        expect(Tok::end, "end of input");
        return p;
    }

    ast::CharacterLiteral character_document()
    {
        auto c = factor();
        expect(Tok::end, "end of input");
        return c;
    }

private:
    std::vector<Token> m_tokens;
    std::size_t m_pos = 0;

    const Token &peek() const { return m_tokens[m_pos]; }
    const Token &next() { return m_tokens[m_pos++]; }

    [[noreturn]] void fail(std::vector<std::string> expected, const std::string &what,
                           ParseError::Kind kind = ParseError::Kind::syntax) const
    {
        std::string msg = what + ", found " + describe(peek()) + " (expected ";
        for (std::size_t k = 0; k < expected.size(); ++k) {
            msg += (k ? ", '" : "'") + expected[k] + "'";
        }
        throw ParseError(kind, peek().offset, std::move(expected), msg + ")");
    }

    const Token &expect(Tok kind, const std::string &display)
    {
        if (peek().kind != kind) {
            fail({display}, "expected '" + display + "'");
        }
        return next();
    }

    bool at_ident(std::string_view text) const { return peek().kind == Tok::ident && peek().text == text; }

    std::vector<ast::Declaration> prelude()
    {
        std::vector<ast::Declaration> decls;
        if (!at_ident("unitary")) {
            return decls;
        }
        next();
        do {
            const auto &name = peek();
            if (name.kind != Tok::ident || reserved(name.text)) {
                fail({"symbol"}, "expected a symbol name", ParseError::Kind::declaration);
            }
            next();
            expect(Tok::colon, ":");
            const auto &order = peek();
            if (order.kind != Tok::ident && order.kind != Tok::integer) {
                fail({"1", "2", "inf"}, "expected a symbol order", ParseError::Kind::declaration);
            }
            std::int64_t value;
            try {
                value = parse_symbol_order(order.text);
            } catch (const std::invalid_argument &) {
                fail({"1", "2", "inf"}, "invalid symbol order", ParseError::Kind::declaration);
            }
            next();
            decls.push_back({std::string(name.text), value, name.offset});
        } while (peek().kind == Tok::comma && (next(), true));
        expect(Tok::semi, ";");
        return decls;
    }

    ast::Product product(bool allow_chi)
    {
        ast::Product p;
        do {
            if (allow_chi && at_ident("chi")) {
                next();
                expect(Tok::lparen, "(");
                p.push_back(factor());
                expect(Tok::rparen, ")");
            } else {
                p.push_back(factor());
            }
        } while (at_ident("x") && (next(), true));
        return p;
    }

    ast::CharacterLiteral factor()
    {
        ast::CharacterLiteral lit{Rational(0), {}, peek().offset};
        atom(lit);
        while (peek().kind == Tok::star) {
            next();
            atom(lit);
        }
        return lit;
    }

    void atom(ast::CharacterLiteral &lit)
    {
        const auto &t = peek();
        if (t.kind == Tok::integer && t.text == "1") {
            next();
            return;
        }
        if (t.kind != Tok::ident || (reserved(t.text) && t.text != "nu")) {
            fail({"nu", "symbol", "1"}, "expected a character");
        }
        next();
        if (t.text == "nu") {
            lit.nu_exponent += peek().kind == Tok::caret ? (next(), rational()) : Rational(1);
            return;
        }
        std::int64_t power = 1;
        if (peek().kind == Tok::caret) {
            next();
            if (peek().kind == Tok::lbrace) {
                next();
                power = small_int();
                expect(Tok::rbrace, "}");
            } else {
                power = small_int();
            }
        }
        lit.symbols.push_back({std::string(t.text), power, t.offset});
    }

    Integer integer()
    {
        bool negative = false;
        if (peek().kind == Tok::minus) {
            next();
            negative = true;
        }
        const auto &t = expect(Tok::integer, "integer");
        Integer v(std::string(t.text));
        return negative ? Integer(-v) : v;
    }

    std::int64_t small_int()
    {
        const auto offset = peek().offset;
        const auto v = integer();
        if (v > std::numeric_limits<std::int32_t>::max() || v < std::numeric_limits<std::int32_t>::min()) {
            throw ParseError(ParseError::Kind::malformed_rational, offset, {"integer"}, "symbol power out of range");
        }
        return v.convert_to<std::int64_t>();
    }

    Rational rational()
    {
        if (peek().kind != Tok::lbrace) {
            if (peek().kind != Tok::minus && peek().kind != Tok::integer) {
                fail({"integer", "{"}, "expected an exponent");
            }
            return Rational(integer());
        }
        next();
        const auto num = integer();
        Integer den = 1;
        std::size_t den_offset = peek().offset;
        if (peek().kind == Tok::slash) {
            next();
            den_offset = peek().offset;
            den = integer();
        }
        expect(Tok::rbrace, "}");
        if (den == 0) {
            throw ParseError(ParseError::Kind::malformed_rational, den_offset, {"nonzero integer"},
                             "zero denominator in exponent");
        }
        return Rational(num, den);
    }
};

Character elaborate(const ast::CharacterLiteral &lit, const SymbolTablePtr &table)
{
    auto c = Character::nu(table, lit.nu_exponent);
    for (const auto &s : lit.symbols) {
        const auto idx = table->find(s.name);
        if (!idx) {
            throw ParseError(ParseError::Kind::unknown_symbol, s.offset, {"declared symbol"},
                             "unknown symbol '" + s.name + "'");
        }
        c = char_mul(c, Character::symbol(table, *idx, s.power));
    }
    return c;
}

std::vector<Character> elaborate(const ast::Product &p, const SymbolTablePtr &table)
{
    std::vector<Character> out;
    out.reserve(p.size());
    for (const auto &lit : p) {
        out.push_back(elaborate(lit, table));
    }
    return out;
}

SymbolTablePtr apply_prelude(const std::vector<ast::Declaration> &prelude, const SymbolTablePtr &table)
{
    if (prelude.empty()) {
        return table;
    }
    auto extended = *table;
    for (const auto &d : prelude) {
        try {
            extended.declare(d.name, d.order);
        } catch (const std::invalid_argument &e) {
            throw ParseError(ParseError::Kind::declaration, d.offset, {"symbol"}, e.what());
        }
    }
    return make_symbol_table(std::move(extended));
}

std::string coefficient_text(const Integer &c)
{
    std::ostringstream os;
    os << c;
    return os.str();
}

nlohmann::json coefficient_json(const Integer &c)
{
    if (c <= std::numeric_limits<std::int64_t>::max() && c >= std::numeric_limits<std::int64_t>::min()) {
        return c.convert_to<std::int64_t>();
    }
    return coefficient_text(c);
}

std::string signed_text(const Rational &q)
{
    return (q > 0 ? "+" : "") + to_string(q);
}

template <class Right>
std::string render_terms(const Element<std::pair<Word, Right>> &x)
{
    if (x.empty()) {
        return "0\n";
    }
    std::string out;
    for (const auto &[t, c] : x) {
        out += coefficient_text(c) + " (" + to_string(t.first) + ") ⊗ (" + to_string(t.second) + ")\n";
    }
    return out;
}

template <class Right>
nlohmann::json terms_json(const Element<std::pair<Word, Right>> &x)
{
    auto terms = nlohmann::json::array();
    for (const auto &[t, c] : x) {
        terms.push_back({{"coeff", coefficient_json(c)}, {"left", to_json(t.first)}, {"right", to_json(t.second)}});
    }
    return {{"terms", std::move(terms)}, {"mass", coefficient_json(x.mass())}};
}

} // namespace

ast::Series parse_series_ast(std::string_view text)
{
    return Parser(text).series_document();
}

ast::Product parse_word_ast(std::string_view text)
{
    return Parser(text).word_document();
}

PrincipalSeries parse_series(std::string_view text, const SymbolTablePtr &table)
{
    const auto doc = parse_series_ast(text);
    const auto effective = apply_prelude(doc.prelude, table);
    return PrincipalSeries(effective, elaborate(doc.factors, effective),
                           doc.anchor == ast::Anchor::omega0 ? GroupTag::metaplectic : GroupTag::so_odd);
}

Word parse_word(std::string_view text, const SymbolTablePtr &table, bool genuine)
{
    return Word(genuine, elaborate(parse_word_ast(text), table));
}

SpWord parse_sp_word(std::string_view text, const SymbolTablePtr &table)
{
    const auto ps = parse_series(text, table);
    return SpWord(ps.genuine(), {ps.chars().begin(), ps.chars().end()});
}

Character parse_character(std::string_view text, const SymbolTablePtr &table)
{
    return elaborate(Parser(text).character_document(), table);
}

UnitarySymbolTable::Generator parse_symbol_declaration(std::string_view text)
{
    const auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0) {
        throw ParseError(ParseError::Kind::declaration, colon == 0 ? 0 : text.size(), {":"},
                         "symbol declaration must look like name:order");
    }
    const auto name = text.substr(0, colon);
    for (std::size_t k = 0; k < name.size(); ++k) {
        const auto c = static_cast<unsigned char>(name[k]);
        if (!(std::isalpha(c) || c == '_' || (k > 0 && std::isdigit(c)))) {
            throw ParseError(ParseError::Kind::declaration, k, {"symbol"}, "invalid symbol name");
        }
    }
    try {
        return {std::string(name), parse_symbol_order(text.substr(colon + 1))};
    } catch (const std::invalid_argument &e) {
        throw ParseError(ParseError::Kind::declaration, colon + 1, {"1", "2", "inf"}, e.what());
    }
}

OutputFormat parse_output_format(std::string_view text)
{
    if (text == "text") {
        return OutputFormat::text;
    }
    if (text == "json") {
        return OutputFormat::json;
    }
    throw std::invalid_argument("output format must be 'text' or 'json'");
}

std::string render(const PrincipalSeries &ps)
{
    std::string out;
    for (const auto &c : ps.chars()) {
        out += (out.empty() ? "" : " x ") + to_string(c);
    }
    return out + (out.empty() ? "" : " ") + (ps.group() == GroupTag::metaplectic ? "|x omega0" : "|x so1");
}

std::string render(const Element<WordTensor> &x)
{
    return render_terms(x);
}

std::string render(const Element<WordSpTensor> &x)
{
    return render_terms(x);
}

std::string render(const Verdict &v, const PrincipalSeries &ps)
{
    std::string out = render(ps) + "\n";
    if (v.irreducible) {
        return out + "irreducible\n";
    }
    out += "reducible\n";
    if (const auto *w = std::get_if<Cond1Witness>(&v.witness)) {
        out += "witness: condition 1, i=" + std::to_string(w->position) + ", xi=" + to_string(w->xi) +
               ", sign=" + signed_text(w->sign) + "  (xi_" + std::to_string(w->position) + " = nu^{" +
               signed_text(w->sign) + "} xi, xi = xi^-1)\n";
    } else if (const auto *w = std::get_if<Cond2Witness>(&v.witness)) {
        const auto i = std::to_string(w->first);
        const auto j = std::to_string(w->second);
        const auto s1 = std::string(w->outer > 0 ? "+1" : "-1");
        const auto s2 = std::string(w->inner > 0 ? "+1" : "-1");
        out += "witness: condition 2, i=" + i + ", j=" + j + ", signs=" + s1 + "," + s2 + "  (xi_" + i + " = nu^{" + s1 +
               "} xi_" + j + "^{" + s2 + "})\n";
    }
    return out;
}

nlohmann::json to_json(const Character &c)
{
    return to_string(c);
}

nlohmann::json to_json(const Word &w)
{
    auto chars = nlohmann::json::array();
    for (const auto &c : w.chars()) {
        chars.push_back(to_json(c));
    }
    return {{"genuine", w.genuine()}, {"chars", std::move(chars)}};
}

nlohmann::json to_json(const SpWord &w)
{
    auto chars = nlohmann::json::array();
    for (const auto &c : w.chars()) {
        chars.push_back(to_json(c));
    }
    return {{"genuine", w.genuine()}, {"anchor", w.genuine() ? "omega0" : "so1"}, {"chars", std::move(chars)}};
}

nlohmann::json to_json(const PrincipalSeries &ps)
{
    auto chars = nlohmann::json::array();
    for (const auto &c : ps.chars()) {
        chars.push_back(to_json(c));
    }
    return {{"group", ps.group() == GroupTag::metaplectic ? "metaplectic" : "so_odd"},
            {"chars", std::move(chars)},
            {"text", render(ps)}};
}

nlohmann::json to_json(const Element<WordTensor> &x)
{
    return terms_json(x);
}

nlohmann::json to_json(const Element<WordSpTensor> &x)
{
    return terms_json(x);
}

nlohmann::json to_json(const Verdict &v, const PrincipalSeries &ps)
{
    nlohmann::json out = {{"series", to_json(ps)},
                          {"irreducible", v.irreducible},
                          {"verdict", v.irreducible ? "irreducible" : "reducible"},
                          {"witness", nullptr}};
    if (const auto *w = std::get_if<Cond1Witness>(&v.witness)) {
        out["witness"] = {{"condition", 1}, {"i", w->position}, {"xi", to_json(w->xi)}, {"sign", to_string(w->sign)}};
    } else if (const auto *w = std::get_if<Cond2Witness>(&v.witness)) {
        out["witness"] = {{"condition", 2}, {"i", w->first}, {"j", w->second}, {"signs", {w->outer, w->inner}}};
    }
    return out;
}

} // namespace metaplectic
