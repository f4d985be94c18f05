#ifndef METAPLECTIC_IRREDUCIBILITY_HPP
#define METAPLECTIC_IRREDUCIBILITY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include <metaplectic/characters.hpp>

namespace metaplectic
{

enum class GroupTag {
    /// (chi xi_1) x ... x (chi xi_n) |x omega0 of the metaplectic Sp(2n)~.
    metaplectic,
    /// xi_1 x ... x xi_n |x 1_SO(1) of split SO(2n+1).
    so_odd,
};

class PrincipalSeries
{
public:
    PrincipalSeries(SymbolTablePtr table, std::vector<Character> chars, GroupTag group = GroupTag::metaplectic);

    const SymbolTablePtr &table() const { return m_table; }
    std::span<const Character> chars() const { return m_chars; }
    std::size_t rank() const { return m_chars.size(); }
    GroupTag group() const { return m_group; }
    bool genuine() const { return m_group == GroupTag::metaplectic; }

    PrincipalSeries with_group(GroupTag group) const { return PrincipalSeries(m_table, m_chars, group); }

    friend bool operator==(const PrincipalSeries &a, const PrincipalSeries &b);

private:
    SymbolTablePtr m_table;
    std::vector<Character> m_chars;
    GroupTag m_group;
};

/// xi_i = nu^{sign} xi with xi self-dual; `sign` is +1/2 or -1/2.
struct Cond1Witness {
    std::size_t position; // 1-based
    Character xi;
    Rational sign;
};

/// xi_i = nu^{outer} xi_j^{inner} with outer, inner in {+1, -1}.
struct Cond2Witness {
    std::size_t first;  // 1-based, first < second
    std::size_t second;
    int outer;
    int inner;
};

using Witness = std::variant<std::monostate, Cond1Witness, Cond2Witness>;

struct Verdict {
    bool irreducible;
    Witness witness;
};

/// Replaces characters of negative exponent by their inverses and sorts by
/// exponent descending; ties on the exponent are broken by the unitary part.
PrincipalSeries canonicalize(const PrincipalSeries &ps);

/// Scan order: ascending position, +1/2 before -1/2.
std::optional<Cond1Witness> find_condition1_witness(std::span<const Character> chars);

/// Scan order: (i, j) lexicographic, then signs (+,+), (+,-), (-,+), (-,-).
std::optional<Cond2Witness> find_condition2_witness(std::span<const Character> chars);

Verdict decide(const PrincipalSeries &ps);
Verdict decide_so_odd(std::span<const Character> chars);

/// Checks a certificate directly against its defining equation.
bool witness_holds(const Witness &witness, std::span<const Character> chars);

} // namespace metaplectic

#endif
