#ifndef METAPLECTIC_TESTS_FIXTURES_HPP
#define METAPLECTIC_TESTS_FIXTURES_HPP

#include <random>
#include <vector>

#include <metaplectic/characters.hpp>

namespace metaplectic::testing
{

/// eta plus u (order inf), v (order inf) and xi (order 2).
inline SymbolTablePtr standard_table(std::int64_t eta_order = 2)
{
    UnitarySymbolTable t(eta_order);
    t.declare("u", UnitarySymbolTable::infinite_order);
    t.declare("v", UnitarySymbolTable::infinite_order);
    t.declare("xi", 2);
    return make_symbol_table(std::move(t));
}

inline Character nu(const SymbolTablePtr &t, std::int64_t p, std::int64_t q = 1)
{
    return Character::nu(t, Rational(p, q));
}

inline Character sym(const SymbolTablePtr &t, const char *name, std::int64_t power = 1)
{
    return Character::symbol(t, *t->find(name), power);
}

/// Random character with exponent in {k/4 : |k| <= 8} and small unitary part.
inline Character random_character(const SymbolTablePtr &t, std::mt19937 &rng)
{
    std::uniform_int_distribution<int> e(-8, 8);
    std::uniform_int_distribution<int> p(-2, 2);
    std::vector<std::int64_t> unitary(t->size());
    for (auto &x : unitary) {
        x = p(rng);
    }
    return Character(t, Rational(e(rng), 4), std::move(unitary));
}

/// The criterion pool: nu^e * s for e in {0, +-1/4, +-1/2, +-1, +-3/2} and
/// s in {1, eta, u, u^-1}.
inline std::vector<Character> criterion_pool(const SymbolTablePtr &t)
{
    const std::vector<Rational> exponents = {Rational(0),  Rational(1, 4), Rational(-1, 4), Rational(1, 2),
                                             Rational(-1, 2), Rational(1), Rational(-1),    Rational(3, 2),
                                             Rational(-3, 2)};
    const std::vector<Character> unitary = {Character(t), Character::eta(t), sym(t, "u"), sym(t, "u", -1)};
    std::vector<Character> pool;
    for (const auto &e : exponents) {
        for (const auto &s : unitary) {
            pool.push_back(char_mul(Character::nu(t, e), s));
        }
    }
    return pool;
}

} // namespace metaplectic::testing

#endif
