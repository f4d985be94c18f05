#include <metaplectic/irreducibility.hpp>

#include <algorithm>
#include <stdexcept>

namespace metaplectic
{

PrincipalSeries::PrincipalSeries(SymbolTablePtr table, std::vector<Character> chars, GroupTag group)
    : m_table(std::move(table)), m_chars(std::move(chars)), m_group(group)
{
    if (!m_table) {
        throw std::invalid_argument("principal series needs a symbol table");
    }
    for (const auto &c : m_chars) {
        if (!same_table(c.table(), m_table)) {
            throw SemanticError("principal series mixes characters over different symbol tables");
        }
    }
}

bool operator==(const PrincipalSeries &a, const PrincipalSeries &b)
{
    return a.m_group == b.m_group && a.m_chars == b.m_chars && same_table(a.m_table, b.m_table);
}

PrincipalSeries canonicalize(const PrincipalSeries &ps)
{
    std::vector<Character> chars;
    chars.reserve(ps.rank());
    for (const auto &c : ps.chars()) {
        chars.push_back(c.exponent() < 0 ? char_inv(c) : c);
    }
    std::stable_sort(chars.begin(), chars.end(), [](const Character &a, const Character &b) {
        if (a.exponent() != b.exponent()) {
            return a.exponent() > b.exponent();
        }
        return a < b;
    });
    return PrincipalSeries(ps.table(), std::move(chars), ps.group());
}

std::optional<Cond1Witness> find_condition1_witness(std::span<const Character> chars)
{
    const Rational half(1, 2);
    for (std::size_t i = 0; i < chars.size(); ++i) {
        for (const auto &sign : {half, Rational(-half)}) {
            if (chars[i].exponent() != sign) {
                continue;
            }
            // xi_i = nu^{e} (xi_i)_u, so the only candidate is the unitary part.
            auto xi = chars[i].unitary_part();
            if (is_self_dual(xi)) {
                return Cond1Witness{i + 1, std::move(xi), sign};
            }
        }
    }
    return std::nullopt;
}

std::optional<Cond2Witness> find_condition2_witness(std::span<const Character> chars)
{
    static constexpr int signs[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
    for (std::size_t i = 0; i < chars.size(); ++i) {
        for (std::size_t j = i + 1; j < chars.size(); ++j) {
            for (const auto &[outer, inner] : signs) {
                const auto rhs = char_mul(Character::nu(chars[j].table(), Rational(outer)), char_pow(chars[j], inner));
                if (chars[i] == rhs) {
                    return Cond2Witness{i + 1, j + 1, outer, inner};
                }
            }
        }
    }
    return std::nullopt;
}

Verdict decide(const PrincipalSeries &ps)
{
    // The criterion is the same for both group tags.
    if (auto w = find_condition1_witness(ps.chars())) {
        return {false, std::move(*w)};
    }
    if (auto w = find_condition2_witness(ps.chars())) {
        return {false, *w};
    }
    return {true, std::monostate{}};
}

Verdict decide_so_odd(std::span<const Character> chars)
{
    if (chars.empty()) {
        return {true, std::monostate{}};
    }
    return decide(PrincipalSeries(chars.front().table(), {chars.begin(), chars.end()}, GroupTag::so_odd));
}

bool witness_holds(const Witness &witness, std::span<const Character> chars)
{
    if (const auto *w = std::get_if<Cond1Witness>(&witness)) {
        if (w->position < 1 || w->position > chars.size() || !is_self_dual(w->xi)) {
            return false;
        }
        if (w->sign != Rational(1, 2) && w->sign != Rational(-1, 2)) {
            return false;
        }
        return chars[w->position - 1] == char_mul(Character::nu(w->xi.table(), w->sign), w->xi);
    }
    if (const auto *w = std::get_if<Cond2Witness>(&witness)) {
        if (w->first < 1 || w->first >= w->second || w->second > chars.size()) {
            return false;
        }
        if ((w->outer != 1 && w->outer != -1) || (w->inner != 1 && w->inner != -1)) {
            return false;
        }
        const auto &xj = chars[w->second - 1];
        return chars[w->first - 1] == char_mul(Character::nu(xj.table(), Rational(w->outer)), char_pow(xj, w->inner));
    }
    return false;
}

} // namespace metaplectic
