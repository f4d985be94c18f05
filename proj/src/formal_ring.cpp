#include <metaplectic/formal_ring.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace metaplectic
{

namespace
{

void require_flag(const Word &w, bool genuine, const char *what)
{
    if (w.genuine() != genuine) {
        throw SemanticError(std::string(what) + ": mixed genuine and non-genuine words");
    }
}

} // namespace

Word::Word(bool genuine, std::vector<Character> chars) : m_genuine(genuine), m_chars(std::move(chars))
{
    for (std::size_t k = 1; k < m_chars.size(); ++k) {
        if (!same_table(m_chars[0].table(), m_chars[k].table())) {
            throw SemanticError("word mixes characters over different symbol tables");
        }
    }
    std::sort(m_chars.begin(), m_chars.end());
}

SpWord::SpWord(bool genuine, std::vector<Character> chars) : m_genuine(genuine)
{
    m_chars.reserve(chars.size());
    for (const auto &c : chars) {
        if (!m_chars.empty() && !same_table(m_chars.front().table(), c.table())) {
            throw SemanticError("symplectic word mixes characters over different symbol tables");
        }
        m_chars.push_back(inversion_class_representative(c));
    }
    std::sort(m_chars.begin(), m_chars.end());
}

Word mult(const Word &a, const Word &b)
{
    require_flag(b, a.genuine(), "mult");
    std::vector<Character> chars(a.chars().begin(), a.chars().end());
    chars.insert(chars.end(), b.chars().begin(), b.chars().end());
    return Word(a.genuine(), std::move(chars));
}

Element<Word> mult(const Element<Word> &a, const Element<Word> &b)
{
    // The flag check has to cover every word, including the case where one
    // operand's words would never meet the other's in a product.
    std::optional<bool> flag;
    for (const auto *x : {&a, &b}) {
        for (const auto &[w, c] : *x) {
            if (flag && *flag != w.genuine()) {
                throw SemanticError("mult: mixed genuine and non-genuine words");
            }
            flag = w.genuine();
        }
    }
    Element<Word> out;
    for (const auto &[wa, ca] : a) {
        for (const auto &[wb, cb] : b) {
            out.add(mult(wa, wb), ca * cb);
        }
    }
    return out;
}

Element<WordTensor> comult(const Word &w)
{
    const auto chars = w.chars();
    const auto k = chars.size();
    if (k >= 8 * sizeof(std::size_t) - 1) {
        throw std::length_error("comult: word too long");
    }
    Element<WordTensor> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<Character> left, right;
        for (std::size_t i = 0; i < k; ++i) {
            (mask >> i & 1 ? left : right).push_back(chars[i]);
        }
        out.add({Word(w.genuine(), std::move(left)), Word(w.genuine(), std::move(right))}, 1);
    }
    return out;
}

Element<WordTensor> comult(const Element<Word> &x)
{
    return expand<WordTensor>(x, [](const Word &w) { return comult(w); });
}

Element<WordTensor> tensor_mult(const Element<WordTensor> &a, const Element<WordTensor> &b)
{
    Element<WordTensor> out;
    for (const auto &[ta, ca] : a) {
        for (const auto &[tb, cb] : b) {
            out.add({mult(ta.first, tb.first), mult(ta.second, tb.second)}, ca * cb);
        }
    }
    return out;
}

Element<WordTensor> kappa(const Element<WordTensor> &x)
{
    return map_basis<WordTensor>(x, [](const WordTensor &t) { return WordTensor{t.second, t.first}; });
}

Word contragredient(const Word &w)
{
    std::vector<Character> chars;
    chars.reserve(w.size());
    for (const auto &c : w.chars()) {
        // (chi xi)~ = chi^-1 xi^-1 = alpha chi xi^-1, and alpha is eta on GL(1).
        chars.push_back(w.genuine() ? char_mul(Character::eta(c.table()), char_inv(c)) : char_inv(c));
    }
    return Word(w.genuine(), std::move(chars));
}

Word alpha_twist(const Word &w)
{
    std::vector<Character> chars;
    chars.reserve(w.size());
    for (const auto &c : w.chars()) {
        chars.push_back(char_mul(Character::eta(c.table()), c));
    }
    return Word(w.genuine(), std::move(chars));
}

Element<Word> contragredient(const Element<Word> &x)
{
    return map_basis<Word>(x, [](const Word &w) { return contragredient(w); });
}

Element<Word> alpha_twist(const Element<Word> &x)
{
    return map_basis<Word>(x, [](const Word &w) { return alpha_twist(w); });
}

Word chi_twist(const Word &w, TwistDirection direction)
{
    const bool forward = direction == TwistDirection::forward;
    if (w.genuine() == forward) {
        throw SemanticError(forward ? "chi_twist forward expects non-genuine words"
                                    : "chi_twist inverse expects genuine words");
    }
    return Word(forward, std::vector<Character>(w.chars().begin(), w.chars().end()));
}

Element<Word> chi_twist(const Element<Word> &x, TwistDirection direction)
{
    return map_basis<Word>(x, [direction](const Word &w) { return chi_twist(w, direction); });
}

Element<WordTensor> chi_twist_legs(const Element<WordTensor> &x, TwistDirection direction)
{
    return map_basis<WordTensor>(x, [direction](const WordTensor &t) {
        return WordTensor{chi_twist(t.first, direction), chi_twist(t.second, direction)};
    });
}

Element<Word> counit_left(const Element<WordTensor> &x)
{
    Element<Word> out;
    for (const auto &[t, c] : x) {
        if (t.first.empty()) {
            out.add(t.second, c);
        }
    }
    return out;
}

Element<Word> counit_right(const Element<WordTensor> &x)
{
    Element<Word> out;
    for (const auto &[t, c] : x) {
        if (t.second.empty()) {
            out.add(t.first, c);
        }
    }
    return out;
}

std::string to_string(const Word &w)
{
    if (w.empty()) {
        return "1";
    }
    std::string out;
    for (const auto &c : w.chars()) {
        if (!out.empty()) {
            out += " x ";
        }
        out += w.genuine() ? "chi(" + to_string(c) + ")" : to_string(c);
    }
    return out;
}

std::string to_string(const SpWord &w)
{
    std::string out;
    for (const auto &c : w.chars()) {
        out += to_string(c) + " x ";
    }
    if (!out.empty()) {
        out.erase(out.size() - 2);
    }
    return out + (w.genuine() ? "|x omega0" : "|x so1");
}

} // namespace metaplectic
