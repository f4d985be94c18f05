#include <metaplectic/characters.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace metaplectic
{

namespace
{

std::int64_t reduce(std::int64_t value, std::int64_t order)
{
    if (order == UnitarySymbolTable::infinite_order) {
        return value;
    }
    const auto r = value % order;
    return r < 0 ? r + order : r;
}

void check_order(std::int64_t order)
{
    if (order != 1 && order != 2 && order != UnitarySymbolTable::infinite_order) {
        throw std::invalid_argument("unitary generator order must be 1, 2 or inf, got " + std::to_string(order));
    }
}

void require_same_table(const Character &a, const Character &b)
{
    if (!same_table(a.table(), b.table())) {
        throw SemanticError("characters are defined over different unitary symbol tables");
    }
}

} // namespace

UnitarySymbolTable::UnitarySymbolTable(std::int64_t eta_order)
{
    if (eta_order != 1 && eta_order != 2) {
        throw std::invalid_argument("order of eta must be 1 or 2, got " + std::to_string(eta_order));
    }
    m_generators.push_back({std::string(eta_name), eta_order});
}

std::size_t UnitarySymbolTable::declare(std::string name, std::int64_t order)
{
    check_order(order);
    if (name.empty()) {
        throw std::invalid_argument("empty symbol name");
    }
    if (name == "nu" || name == "x" || name == "omega0" || name == "so1" || name == "chi" || name == "unitary") {
        throw std::invalid_argument("'" + name + "' is a reserved word and cannot name a unitary symbol");
    }
    if (find(name)) {
        throw std::invalid_argument("symbol '" + name + "' declared twice");
    }
    m_generators.push_back({std::move(name), order});
    return m_generators.size() - 1;
}

std::optional<std::size_t> UnitarySymbolTable::find(std::string_view name) const
{
    const auto it = std::find_if(m_generators.begin(), m_generators.end(),
                                 [&](const Generator &g) { return g.name == name; });
    if (it == m_generators.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - m_generators.begin());
}

SymbolTablePtr make_symbol_table(UnitarySymbolTable table)
{
    return std::make_shared<const UnitarySymbolTable>(std::move(table));
}

std::int64_t parse_symbol_order(std::string_view text)
{
    if (text == "inf" || text == "oo" || text == "infinity") {
        return UnitarySymbolTable::infinite_order;
    }
    if (text == "1") {
        return 1;
    }
    if (text == "2") {
        return 2;
    }
    throw std::invalid_argument("symbol order must be 1, 2 or inf, got '" + std::string(text) + "'");
}

bool same_table(const SymbolTablePtr &a, const SymbolTablePtr &b)
{
    return a == b || (a && b && *a == *b);
}

Character::Character(SymbolTablePtr table) : m_table(std::move(table))
{
    if (!m_table) {
        throw std::invalid_argument("character needs a symbol table");
    }
    m_unitary.assign(m_table->size(), 0);
}

Character::Character(SymbolTablePtr table, Rational exponent, std::vector<std::int64_t> unitary)
    : m_table(std::move(table)), m_exponent(std::move(exponent)), m_unitary(std::move(unitary))
{
    if (!m_table) {
        throw std::invalid_argument("character needs a symbol table");
    }
    if (m_unitary.size() != m_table->size()) {
        throw std::invalid_argument("unitary exponent vector does not match the symbol table");
    }
    for (std::size_t k = 0; k < m_unitary.size(); ++k) {
        m_unitary[k] = reduce(m_unitary[k], m_table->generator(k).order);
    }
}

Character Character::nu(SymbolTablePtr table, Rational exponent)
{
    const auto n = table->size();
    return Character(std::move(table), std::move(exponent), std::vector<std::int64_t>(n, 0));
}

Character Character::symbol(SymbolTablePtr table, std::size_t generator, std::int64_t power)
{
    std::vector<std::int64_t> unitary(table->size(), 0);
    unitary.at(generator) = power;
    return Character(std::move(table), Rational(0), std::move(unitary));
}

bool Character::is_trivial() const
{
    return m_exponent == 0 && std::all_of(m_unitary.begin(), m_unitary.end(), [](auto v) { return v == 0; });
}

bool operator==(const Character &a, const Character &b)
{
    return a.m_exponent == b.m_exponent && a.m_unitary == b.m_unitary && same_table(a.m_table, b.m_table);
}

bool operator<(const Character &a, const Character &b)
{
    if (a.m_exponent != b.m_exponent) {
        return a.m_exponent < b.m_exponent;
    }
    return a.m_unitary < b.m_unitary;
}

Character char_mul(const Character &a, const Character &b)
{
    require_same_table(a, b);
    std::vector<std::int64_t> unitary(a.unitary().begin(), a.unitary().end());
    for (std::size_t k = 0; k < unitary.size(); ++k) {
        unitary[k] += b.unitary_exponent(k);
    }
    return Character(a.table(), a.exponent() + b.exponent(), std::move(unitary));
}

Character char_inv(const Character &a)
{
    std::vector<std::int64_t> unitary(a.unitary().begin(), a.unitary().end());
    for (auto &v : unitary) {
        v = -v;
    }
    return Character(a.table(), -a.exponent(), std::move(unitary));
}

Character char_pow(const Character &a, std::int64_t k)
{
    std::vector<std::int64_t> unitary(a.unitary().begin(), a.unitary().end());
    for (auto &v : unitary) {
        v *= k;
    }
    return Character(a.table(), a.exponent() * k, std::move(unitary));
}

bool is_self_dual(const Character &a)
{
    if (a.exponent() != 0) {
        return false;
    }
    const auto &table = *a.table();
    for (std::size_t k = 0; k < table.size(); ++k) {
        const auto order = table.generator(k).order;
        const auto v = a.unitary_exponent(k);
        if (order == UnitarySymbolTable::infinite_order ? v != 0 : (2 * v) % order != 0) {
            return false;
        }
    }
    return true;
}

Character inversion_class_representative(const Character &a)
{
    if (a.exponent() > 0) {
        return a;
    }
    auto inverse = char_inv(a);
    if (a.exponent() < 0) {
        return inverse;
    }
    return inverse < a ? inverse : a;
}

std::string to_string(const Rational &q)
{
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) {
        os << '/' << denominator(q);
    }
    return os.str();
}

std::string to_string(const Character &a)
{
    std::vector<std::string> factors;
    const auto &e = a.exponent();
    if (e == 1) {
        factors.emplace_back("nu");
    } else if (e != 0) {
        factors.push_back(denominator(e) == 1 ? "nu^" + to_string(e) : "nu^{" + to_string(e) + "}");
    }
    const auto &table = *a.table();
    for (std::size_t k = 0; k < table.size(); ++k) {
        const auto v = a.unitary_exponent(k);
        if (v == 0) {
            continue;
        }
        auto f = table.generator(k).name;
        if (v != 1) {
            f += "^" + std::to_string(v);
        }
        factors.push_back(std::move(f));
    }
    if (factors.empty()) {
        return "nu^0";
    }
    std::string out = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) {
        out += "*" + factors[k];
    }
    return out;
}

} // namespace metaplectic
