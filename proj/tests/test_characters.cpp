#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <metaplectic/characters.hpp>

#include "support/fixtures.hpp"

using namespace metaplectic;
using namespace metaplectic::testing;

TEST_CASE("char_mul examples")
{
    const auto t = standard_table();
    const auto u = sym(t, "u");

    // nu^{1/2} u * nu^{1/2} u^-1 = nu
    CHECK(char_mul(nu(t, 1, 2) * u, nu(t, 1, 2) * sym(t, "u", -1)) == nu(t, 1));
    // eta * eta = 1 when eta has order 2
    CHECK(char_mul(Character::eta(t), Character::eta(t)).is_trivial());
    // nu^{1/3} u * nu^{1/6} u = nu^{1/2} u^2
    const auto prod = char_mul(nu(t, 1, 3) * u, nu(t, 1, 6) * u);
    CHECK(prod.exponent() == Rational(1, 2));
    CHECK(prod.unitary_exponent(*t->find("u")) == 2);
    CHECK(prod == nu(t, 1, 2) * sym(t, "u", 2));
}

TEST_CASE("char_inv examples")
{
    const auto t = standard_table();
    CHECK(char_inv(Character(t)) == Character(t));
    // order-2 symbols are self-inverse
    CHECK(char_inv(nu(t, 1, 2) * sym(t, "xi")) == nu(t, -1, 2) * sym(t, "xi"));
    CHECK(char_inv(nu(t, 2) * sym(t, "u")) == nu(t, -2) * sym(t, "u", -1));
}

TEST_CASE("is_self_dual examples")
{
    const auto t = standard_table();
    CHECK(is_self_dual(Character(t)));
    CHECK(is_self_dual(Character::eta(t)));
    CHECK(is_self_dual(sym(t, "xi") * Character::eta(t)));
    CHECK_FALSE(is_self_dual(nu(t, 1, 2)));
    CHECK_FALSE(is_self_dual(sym(t, "u")));
}

TEST_CASE("finite orders reduce exponents")
{
    const auto t = standard_table(1);
    CHECK(Character::eta(t).is_trivial());
    const auto t2 = standard_table(2);
    CHECK(sym(t2, "xi", 5) == sym(t2, "xi"));
    CHECK(sym(t2, "xi", -1).unitary_exponent(*t2->find("xi")) == 1);
    CHECK(sym(t2, "u", -7).unitary_exponent(*t2->find("u")) == -7);
}

TEST_CASE("mismatched symbol tables are rejected")
{
    const auto a = standard_table();
    UnitarySymbolTable other(2);
    other.declare("w", UnitarySymbolTable::infinite_order);
    const auto b = make_symbol_table(other);
    CHECK_THROWS_AS(char_mul(Character(a), Character(b)), SemanticError);
    // Equal contents count as the same table.
    CHECK_NOTHROW(char_mul(Character(a), Character(standard_table())));
}

TEST_CASE("symbol table validation")
{
    UnitarySymbolTable t(2);
    CHECK_THROWS(UnitarySymbolTable(3));
    CHECK_THROWS(t.declare("u", 3));
    CHECK_THROWS(t.declare("nu", 2));
    CHECK_THROWS(t.declare("eta", 2));
    t.declare("u", UnitarySymbolTable::infinite_order);
    CHECK_THROWS(t.declare("u", 2));
    CHECK(parse_symbol_order("inf") == UnitarySymbolTable::infinite_order);
    CHECK(parse_symbol_order("2") == 2);
    CHECK_THROWS(parse_symbol_order("3"));
}

TEST_CASE("character group laws on random triples")
{
    std::mt19937 rng(7);
    for (const auto eta_order : {1, 2}) {
        const auto t = standard_table(eta_order);
        for (int k = 0; k < 500; ++k) {
            const auto a = random_character(t, rng);
            const auto b = random_character(t, rng);
            const auto c = random_character(t, rng);
            CHECK(char_mul(char_mul(a, b), c) == char_mul(a, char_mul(b, c)));
            CHECK(char_mul(a, b) == char_mul(b, a));
            CHECK(char_mul(a, char_inv(a)).is_trivial());
            CHECK(char_mul(a, Character(t)) == a);
            CHECK(char_mul(a, b).exponent() == a.exponent() + b.exponent());
            CHECK(is_self_dual(a) == (a == char_inv(a)));
            CHECK(char_pow(a, 3) == char_mul(a, char_mul(a, a)));
            CHECK(char_pow(a, -1) == char_inv(a));
        }
    }
}

TEST_CASE("inversion class representative")
{
    std::mt19937 rng(11);
    const auto t = standard_table();
    for (int k = 0; k < 300; ++k) {
        const auto a = random_character(t, rng);
        const auto r = inversion_class_representative(a);
        CHECK((r == a || r == char_inv(a)));
        CHECK(r == inversion_class_representative(char_inv(a)));
        CHECK(r.exponent() >= 0);
    }
}

TEST_CASE("text form")
{
    const auto t = standard_table();
    CHECK(to_string(Character(t)) == "nu^0");
    CHECK(to_string(nu(t, 1)) == "nu");
    CHECK(to_string(nu(t, -1)) == "nu^-1");
    CHECK(to_string(nu(t, 1, 2) * sym(t, "u", -1)) == "nu^{1/2}*u^-1");
    CHECK(to_string(nu(t, -3, 2) * Character::eta(t) * sym(t, "xi")) == "nu^{-3/2}*eta*xi");
}
