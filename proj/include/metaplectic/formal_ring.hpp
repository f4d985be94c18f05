#ifndef METAPLECTIC_FORMAL_RING_HPP
#define METAPLECTIC_FORMAL_RING_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <metaplectic/characters.hpp>

namespace metaplectic
{

/// Basis element of R (non-genuine) or R^gen (genuine): the product
/// xi_1 x ... x xi_k, resp. (chi xi_1) x ... x (chi xi_k), of GL(1)-characters.
/// Stored as a sorted multiset, so all orderings of the factors coincide.
class Word
{
public:
    Word() = default;
    Word(bool genuine, std::vector<Character> chars);

    static Word unit(bool genuine) { return Word(genuine, {}); }

    bool genuine() const { return m_genuine; }
    std::span<const Character> chars() const { return m_chars; }
    std::size_t size() const { return m_chars.size(); }
    bool empty() const { return m_chars.empty(); }

    friend bool operator==(const Word &, const Word &) = default;
    friend bool operator<(const Word &a, const Word &b)
    {
        return std::tie(a.m_genuine, a.m_chars) < std::tie(b.m_genuine, b.m_chars);
    }

private:
    bool m_genuine = false;
    std::vector<Character> m_chars;
};

/// Basis element of the symplectic side: xi_1 x ... x xi_k |x 1_SO(1)
/// (non-genuine) or (chi xi_1) x ... x (chi xi_k) |x omega0 (genuine).
/// Each character is kept up to inversion, since xi |x s = xi^-1 |x s in the
/// Grothendieck group.
class SpWord
{
public:
    SpWord() = default;
    SpWord(bool genuine, std::vector<Character> chars);

    static SpWord anchor(bool genuine) { return SpWord(genuine, {}); }

    bool genuine() const { return m_genuine; }
    std::span<const Character> chars() const { return m_chars; }
    std::size_t size() const { return m_chars.size(); }

    friend bool operator==(const SpWord &, const SpWord &) = default;
    friend bool operator<(const SpWord &a, const SpWord &b)
    {
        return std::tie(a.m_genuine, a.m_chars) < std::tie(b.m_genuine, b.m_chars);
    }

private:
    bool m_genuine = false;
    std::vector<Character> m_chars;
};

using WordTensor = std::pair<Word, Word>;
using WordTriple = std::tuple<Word, Word, Word>;
using WordSpTensor = std::pair<Word, SpWord>;

/// Formal Z-linear combination over an ordered basis. Zero coefficients are
/// never stored, so equality of elements is equality of the term maps.
template <class Basis>
class Element
{
public:
    using basis_type = Basis;
    using container_type = std::map<Basis, Integer>;
    using const_iterator = typename container_type::const_iterator;

    Element() = default;
    explicit Element(Basis b, Integer c = 1) { add(std::move(b), c); }

    void add(Basis b, const Integer &c)
    {
        if (c == 0) {
            return;
        }
        auto [it, inserted] = m_terms.try_emplace(std::move(b), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                m_terms.erase(it);
            }
        }
    }

    Integer coefficient(const Basis &b) const
    {
        const auto it = m_terms.find(b);
        return it == m_terms.end() ? Integer(0) : it->second;
    }

    /// Sum of all coefficients.
    Integer mass() const
    {
        Integer total = 0;
        for (const auto &[b, c] : m_terms) {
            total += c;
        }
        return total;
    }

    const_iterator begin() const { return m_terms.begin(); }
    const_iterator end() const { return m_terms.end(); }
    std::size_t size() const { return m_terms.size(); }
    bool empty() const { return m_terms.empty(); }
    const container_type &terms() const { return m_terms; }

    Element &operator+=(const Element &other)
    {
        for (const auto &[b, c] : other.m_terms) {
            add(b, c);
        }
        return *this;
    }
    Element &operator-=(const Element &other)
    {
        for (const auto &[b, c] : other.m_terms) {
            add(b, -c);
        }
        return *this;
    }
    Element &operator*=(const Integer &k)
    {
        if (k == 0) {
            m_terms.clear();
        } else {
            for (auto &[b, c] : m_terms) {
                c *= k;
            }
        }
        return *this;
    }

    friend Element operator+(Element a, const Element &b) { return a += b; }
    friend Element operator-(Element a, const Element &b) { return a -= b; }
    friend Element operator-(Element a) { return a *= Integer(-1); }
    friend Element operator*(const Integer &k, Element a) { return a *= k; }
    friend bool operator==(const Element &, const Element &) = default;

private:
    container_type m_terms;
};

template <class Basis>
Integer coefficient(const Element<Basis> &x, const Basis &b)
{
    return x.coefficient(b);
}

/// Linear extension of a basis map f: Basis -> Other.
template <class Other, class Basis, class F>
Element<Other> map_basis(const Element<Basis> &x, F &&f)
{
    Element<Other> out;
    for (const auto &[b, c] : x) {
        out.add(f(b), c);
    }
    return out;
}

/// Linear extension of f: Basis -> Element<Other>.
template <class Other, class Basis, class F>
Element<Other> expand(const Element<Basis> &x, F &&f)
{
    Element<Other> out;
    for (const auto &[b, c] : x) {
        for (const auto &[b2, c2] : f(b)) {
            out.add(b2, c * c2);
        }
    }
    return out;
}

Word mult(const Word &a, const Word &b);
Element<Word> mult(const Element<Word> &a, const Element<Word> &b);

/// m*: sum over sub-multisets S of S (x) complement.
Element<WordTensor> comult(const Word &w);
Element<WordTensor> comult(const Element<Word> &x);

/// Legwise product (a (x) b)(c (x) d) = ac (x) bd.
Element<WordTensor> tensor_mult(const Element<WordTensor> &a, const Element<WordTensor> &b);

Element<WordTensor> kappa(const Element<WordTensor> &x);

Word contragredient(const Word &w);
Word alpha_twist(const Word &w);
Element<Word> contragredient(const Element<Word> &x);
Element<Word> alpha_twist(const Element<Word> &x);

enum class TwistDirection { forward, inverse };

/// Multiplication by chi_psi (forward, R -> R^gen) or by its inverse.
Word chi_twist(const Word &w, TwistDirection direction);
Element<Word> chi_twist(const Element<Word> &x, TwistDirection direction);
Element<WordTensor> chi_twist_legs(const Element<WordTensor> &x, TwistDirection direction);

/// Terms whose left (resp. right) leg is the empty word, projected to the
/// other leg. Counit on either side of comult(w) gives back w.
Element<Word> counit_left(const Element<WordTensor> &x);
Element<Word> counit_right(const Element<WordTensor> &x);

std::string to_string(const Word &w);
std::string to_string(const SpWord &w);

} // namespace metaplectic

#endif
