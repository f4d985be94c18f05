#ifndef METAPLECTIC_CHARACTERS_HPP
#define METAPLECTIC_CHARACTERS_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace metaplectic
{

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an operation is applied to values it is not defined on
/// (characters over different symbol tables, mixed genuineness, ...).
class SemanticError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// The finitely generated abelian group in which unitary parts of characters
/// live. Generator 0 is always the quadratic symbol eta = (., -1)_F, whose
/// order (1 or 2) depends on whether -1 is a square in F.
class UnitarySymbolTable
{
public:
    /// Order value standing for "no relation declared".
    static constexpr std::int64_t infinite_order = 0;
    static constexpr std::size_t eta_index = 0;
    static constexpr std::string_view eta_name = "eta";

    struct Generator {
        std::string name;
        std::int64_t order;

        friend bool operator==(const Generator &, const Generator &) = default;
    };

    explicit UnitarySymbolTable(std::int64_t eta_order = 2);

    /// Adds a generator of order 1, 2 or infinite_order and returns its index.
    std::size_t declare(std::string name, std::int64_t order);

    std::optional<std::size_t> find(std::string_view name) const;
    const Generator &generator(std::size_t index) const { return m_generators.at(index); }
    std::span<const Generator> generators() const { return m_generators; }
    std::size_t size() const { return m_generators.size(); }
    std::int64_t eta_order() const { return m_generators[eta_index].order; }

    friend bool operator==(const UnitarySymbolTable &, const UnitarySymbolTable &) = default;

private:
    std::vector<Generator> m_generators;
};

using SymbolTablePtr = std::shared_ptr<const UnitarySymbolTable>;

SymbolTablePtr make_symbol_table(UnitarySymbolTable table);

/// Parses an order token: "1", "2", "inf" (also "oo", "infinity").
std::int64_t parse_symbol_order(std::string_view text);

bool same_table(const SymbolTablePtr &a, const SymbolTablePtr &b);

/// A character phi = nu^{e(phi)} phi_u of F^x, with e(phi) rational and the
/// unitary part given by generator exponents reduced modulo their orders.
class Character
{
public:
    /// The trivial character.
    explicit Character(SymbolTablePtr table);
    Character(SymbolTablePtr table, Rational exponent, std::vector<std::int64_t> unitary);

    static Character nu(SymbolTablePtr table, Rational exponent);
    static Character symbol(SymbolTablePtr table, std::size_t generator, std::int64_t power = 1);
    static Character eta(SymbolTablePtr table) { return symbol(std::move(table), UnitarySymbolTable::eta_index); }

    const Rational &exponent() const { return m_exponent; }
    std::span<const std::int64_t> unitary() const { return m_unitary; }
    std::int64_t unitary_exponent(std::size_t generator) const { return m_unitary.at(generator); }
    const SymbolTablePtr &table() const { return m_table; }

    Character unitary_part() const { return Character(m_table, Rational(0), m_unitary); }
    bool is_trivial() const;

    friend bool operator==(const Character &a, const Character &b);
    /// Total order: exponent first, then unitary exponents lexicographically.
    friend bool operator<(const Character &a, const Character &b);

private:
    SymbolTablePtr m_table;
    Rational m_exponent;
    std::vector<std::int64_t> m_unitary;
};

Character char_mul(const Character &a, const Character &b);
Character char_inv(const Character &a);
Character char_pow(const Character &a, std::int64_t k);
bool is_self_dual(const Character &a);

inline Character operator*(const Character &a, const Character &b) { return char_mul(a, b); }

/// Canonical member of {a, a^-1}: positive exponent wins, and at exponent 0
/// the smaller of the two in the total order.
Character inversion_class_representative(const Character &a);

/// Text form `nu^{p/q}*sym^k*...`. The trivial character prints as `nu^0`,
/// leaving `1` for the empty word.
std::string to_string(const Character &a);
std::string to_string(const Rational &q);

} // namespace metaplectic

#endif
