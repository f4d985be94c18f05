#include <metaplectic/padic_cover.hpp>

#include <stdexcept>
#include <string>

namespace metaplectic
{

namespace
{

std::int64_t mod(const Integer &n, std::int64_t m)
{
    Integer r = n % m;
    if (r < 0) {
        r += m;
    }
    return r.convert_to<std::int64_t>();
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m)
{
    __int128 result = 1;
    __int128 b = base % m;
    while (exp > 0) {
        if (exp & 1) {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

// Legendre symbol of an integer coprime to the odd prime p (Euler's criterion).
int legendre(const Integer &n, std::int64_t p)
{
    return pow_mod(mod(n, p), (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::int64_t strip(Integer &n, std::int64_t p)
{
    std::int64_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

// Unit class in (Z/8)^x of an odd rational n/d; d^-1 = d mod 8 for odd d.
std::int64_t unit_mod8(const Rational &u)
{
    return mod(numerator(u) * denominator(u), 8);
}

} // namespace

bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

PAdicField::PAdicField(std::int64_t p) : m_p(p)
{
    if (!is_prime(p)) {
        throw std::invalid_argument(std::to_string(p) + " is not a prime");
    }
}

PAdicDecomposition decompose(const Rational &a, const PAdicField &field)
{
    if (a == 0) {
        throw std::domain_error("zero has no p-adic unit decomposition");
    }
    const auto p = field.prime();
    Integer num = numerator(a);
    Integer den = denominator(a);
    const auto v = strip(num, p) - strip(den, p);
    return {v, Rational(num, den)};
}

int hilbert(const Rational &a, const Rational &b, const PAdicField &field)
{
    if (a == 0 || b == 0) {
        throw std::domain_error("Hilbert symbol is only defined on nonzero elements");
    }
    const auto p = field.prime();
    const auto [alpha, u] = decompose(a, field);
    const auto [beta, v] = decompose(b, field);

    if (p == 2) {
        const auto u8 = unit_mod8(u);
        const auto v8 = unit_mod8(v);
        const auto eps = [](std::int64_t x) { return (x % 4 == 3) ? 1 : 0; };
        const auto omega = [](std::int64_t x) { return (x == 3 || x == 5) ? 1 : 0; };
        const auto exponent = eps(u8) * eps(v8) + (alpha & 1) * omega(v8) + (beta & 1) * omega(u8);
        return exponent % 2 == 0 ? 1 : -1;
    }

    int sign = 1;
    if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) {
        sign = -sign;
    }
    if (beta & 1) {
        sign *= legendre(numerator(u), p) * legendre(denominator(u), p);
    }
    if (alpha & 1) {
        sign *= legendre(numerator(v), p) * legendre(denominator(v), p);
    }
    return sign;
}

CoverElement make_cover_element(Rational det, int sign)
{
    if (det == 0) {
        throw std::invalid_argument("cover element needs a nonzero determinant");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("cover element sign must be +1 or -1");
    }
    return {std::move(det), sign};
}

CoverElement cover_identity()
{
    return {Rational(1), 1};
}

CoverElement cover_mul(const CoverElement &x, const CoverElement &y, const PAdicField &field)
{
    return {x.det * y.det, x.sign * y.sign * hilbert(x.det, y.det, field)};
}

CoverElement cover_inverse(const CoverElement &x, const PAdicField &field)
{
    // (d, e)(1/d, e') = (1, e e' (d, 1/d)), so e' = e (d, 1/d).
    const Rational inv = 1 / x.det;
    return {inv, x.sign * hilbert(x.det, inv, field)};
}

int alpha_eval(const CoverElement &x, const PAdicField &field)
{
    return hilbert(x.det, Rational(-1), field);
}

std::int64_t eta_minus1_order(const PAdicField &field)
{
    return field.prime() % 4 == 1 ? 1 : 2;
}

std::vector<Rational> square_class_generators(const PAdicField &field)
{
    const auto p = field.prime();
    if (p == 2) {
        return {Rational(-1), Rational(5), Rational(2)};
    }
    std::int64_t n = 2;
    while (pow_mod(n, (p - 1) / 2, p) == 1) {
        ++n;
    }
    return {Rational(n), Rational(p)};
}

UnitarySymbolTable symbol_table_for(const PAdicField &field)
{
    return UnitarySymbolTable(eta_minus1_order(field));
}

} // namespace metaplectic
