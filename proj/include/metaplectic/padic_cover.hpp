#ifndef METAPLECTIC_PADIC_COVER_HPP
#define METAPLECTIC_PADIC_COVER_HPP

#include <cstdint>
#include <vector>

#include <metaplectic/characters.hpp>

namespace metaplectic
{

/// Q_p, with rationals embedded as field elements.
class PAdicField
{
public:
    explicit PAdicField(std::int64_t p);
    std::int64_t prime() const { return m_p; }

private:
    std::int64_t m_p;
};

/// A nonzero rational split as p^valuation * unit.
struct PAdicDecomposition {
    std::int64_t valuation;
    Rational unit;
};

PAdicDecomposition decompose(const Rational &a, const PAdicField &field);

/// Hilbert symbol (a, b)_p in {+1, -1}. Throws std::domain_error on zero input.
int hilbert(const Rational &a, const Rational &b, const PAdicField &field);

/// Element (g, eps) of GL(n)~ seen through det(g); the cocycle only
/// depends on determinants.
struct CoverElement {
    Rational det;
    int sign;

    friend bool operator==(const CoverElement &, const CoverElement &) = default;
};

CoverElement make_cover_element(Rational det, int sign);
CoverElement cover_identity();
CoverElement cover_mul(const CoverElement &x, const CoverElement &y, const PAdicField &field);
CoverElement cover_inverse(const CoverElement &x, const PAdicField &field);

/// alpha((g, eps)) = (det g, -1)_p.
int alpha_eval(const CoverElement &x, const PAdicField &field);

/// 1 if -1 is a square in Q_p (p = 1 mod 4), else 2.
std::int64_t eta_minus1_order(const PAdicField &field);

/// Representatives generating Q_p^x / (Q_p^x)^2.
std::vector<Rational> square_class_generators(const PAdicField &field);

UnitarySymbolTable symbol_table_for(const PAdicField &field);

bool is_prime(std::int64_t n);

} // namespace metaplectic

#endif
