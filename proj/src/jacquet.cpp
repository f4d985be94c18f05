#include <metaplectic/jacquet.hpp>

#include <algorithm>
#include <stdexcept>

namespace metaplectic
{

namespace
{

// (m (x) id) o (dual (x) m*) o kappa o m*, shared by the linear and the
// metaplectic comultiplications; they differ only in `dual` and in the flag of
// the words fed in.
template <class Dual>
Element<WordTensor> mstar_chain(const Element<Word> &x, Dual &&dual)
{
    const auto swapped = kappa(comult(x));
    const auto triple = expand<WordTriple>(swapped, [&](const WordTensor &t) {
        Element<WordTriple> out;
        const auto d = dual(t.first);
        for (const auto &[split, c] : comult(t.second)) {
            out.add({d, split.first, split.second}, c);
        }
        return out;
    });
    return map_basis<WordTensor>(triple, [](const WordTriple &t) {
        return WordTensor{mult(std::get<0>(t), std::get<1>(t)), std::get<2>(t)};
    });
}

void require_flag(const Element<Word> &x, bool genuine, const char *what)
{
    for (const auto &[w, c] : x) {
        if (w.genuine() != genuine) {
            throw SemanticError(std::string(what) + (genuine ? " expects genuine words" : " expects non-genuine words"));
        }
    }
}

Word single(const Character &c, bool genuine)
{
    return Word(genuine, {c});
}

} // namespace

Element<WordTensor> big_mstar(const Element<Word> &x)
{
    require_flag(x, false, "big_mstar");
    return mstar_chain(x, [](const Word &w) { return contragredient(w); });
}

Element<WordTensor> big_mstar(const Word &w)
{
    return big_mstar(Element<Word>(w));
}

Element<WordTensor> big_mstar_gen(const Element<Word> &x)
{
    require_flag(x, true, "big_mstar_gen");
    return mstar_chain(x, [](const Word &w) { return alpha_twist(contragredient(w)); });
}

Element<WordTensor> big_mstar_gen(const Word &w)
{
    return big_mstar_gen(Element<Word>(w));
}

SpWord rtimes(const Word &g, const SpWord &e)
{
    if (g.genuine() != e.genuine()) {
        throw SemanticError("rtimes: genuineness of the GL and symplectic factors differs");
    }
    std::vector<Character> chars(e.chars().begin(), e.chars().end());
    chars.insert(chars.end(), g.chars().begin(), g.chars().end());
    return SpWord(e.genuine(), std::move(chars));
}

Element<WordSpTensor> rtimes(const Element<WordTensor> &gl, const Element<WordSpTensor> &sp)
{
    Element<WordSpTensor> out;
    for (const auto &[bg, c1] : gl) {
        for (const auto &[de, c2] : sp) {
            out.add({mult(bg.first, de.first), rtimes(bg.second, de.second)}, c1 * c2);
        }
    }
    return out;
}

JacquetExpansion mu_star(const PrincipalSeries &ps, FactorOrder order)
{
    const bool genuine = ps.genuine();
    const auto mstar = [genuine](const Word &w) { return genuine ? big_mstar_gen(w) : big_mstar(w); };

    // mu*(omega0) = 1 (x) omega0, resp. mu*(1_SO(1)) = 1 (x) 1_SO(1).
    Element<WordSpTensor> value({Word::unit(genuine), SpWord::anchor(genuine)});
    const auto chars = ps.chars();
    switch (order) {
    case FactorOrder::right_to_left:
        for (auto it = chars.rbegin(); it != chars.rend(); ++it) {
            value = rtimes(mstar(single(*it, genuine)), value);
        }
        break;
    case FactorOrder::left_to_right:
        for (const auto &c : chars) {
            value = rtimes(mstar(single(c, genuine)), value);
        }
        break;
    case FactorOrder::whole_word:
        value = rtimes(mstar(Word(genuine, {chars.begin(), chars.end()})), value);
        break;
    }
    return {std::move(value), ps};
}

Integer jacquet_multiplicity(const PrincipalSeries &ps, const Word &left, const SpWord &right)
{
    if (left.genuine() != ps.genuine() || right.genuine() != ps.genuine()) {
        throw SemanticError("jacquet_multiplicity: term genuineness does not match the principal series");
    }
    // Re-normalize in case the caller built `right` from un-normalized data.
    const SpWord normal(right.genuine(), {right.chars().begin(), right.chars().end()});
    return coefficient(mu_star(ps).value, WordSpTensor{left, normal});
}

LemmaReport verify_lemma(const Word &w)
{
    if (!w.genuine()) {
        throw SemanticError("verify_lemma expects a genuine word");
    }
    LemmaReport report{false, big_mstar_gen(w), {}, {}};
    const auto linear = big_mstar(chi_twist(Element<Word>(w), TwistDirection::inverse));
    report.linear_side = chi_twist_legs(linear, TwistDirection::forward);
    report.difference = report.metaplectic_side - report.linear_side;
    report.holds = report.difference.empty();
    return report;
}

std::vector<Word> words_up_to(std::span<const Character> pool, std::size_t max_len, bool genuine)
{
    std::vector<Word> out;
    std::vector<std::size_t> idx;
    // Nondecreasing index sequences enumerate multisets exactly once.
    const auto rec = [&](auto &&self, std::size_t start) -> void {
        std::vector<Character> chars;
        chars.reserve(idx.size());
        for (auto k : idx) {
            chars.push_back(pool[k]);
        }
        out.emplace_back(genuine, std::move(chars));
        if (idx.size() == max_len) {
            return;
        }
        for (std::size_t k = start; k < pool.size(); ++k) {
            idx.push_back(k);
            self(self, k);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

LemmaSweepReport verify_lemma_sweep(std::span<const Character> pool, std::size_t max_len)
{
    LemmaSweepReport sweep;
    for (const auto &w : words_up_to(pool, max_len, true)) {
        ++sweep.cases;
        auto report = verify_lemma(w);
        if (!report.holds) {
            ++sweep.failures;
            if (!sweep.first_counterexample) {
                sweep.first_counterexample = w;
                sweep.first_counterexample_report = std::move(report);
            }
        }
    }
    return sweep;
}

std::vector<Character> default_character_pool(const SymbolTablePtr &table, std::size_t size)
{
    const std::vector<Rational> exponents = {Rational(0),     Rational(1, 2),  Rational(-1),   Rational(1),
                                             Rational(-1, 2), Rational(1, 4),  Rational(3, 2), Rational(-3, 2),
                                             Rational(2),     Rational(-1, 4), Rational(1, 3), Rational(-2)};
    std::vector<Character> unitary = {Character(table)};
    for (std::size_t g = 0; g < table->size(); ++g) {
        unitary.push_back(Character::symbol(table, g));
        if (table->generator(g).order == UnitarySymbolTable::infinite_order) {
            unitary.push_back(Character::symbol(table, g, -1));
        }
    }

    std::vector<Character> pool;
    // Diagonal walk over (exponent, unitary) so small pools mix both.
    for (std::size_t s = 0; pool.size() < size && s < exponents.size() + unitary.size(); ++s) {
        for (std::size_t u = 0; u <= s && pool.size() < size; ++u) {
            const auto e = s - u;
            if (u >= unitary.size() || e >= exponents.size()) {
                continue;
            }
            auto c = char_mul(Character::nu(table, exponents[e]), unitary[u]);
            if (std::find(pool.begin(), pool.end(), c) == pool.end()) {
                pool.push_back(std::move(c));
            }
        }
    }
    if (pool.size() < size) {
        throw std::invalid_argument("symbol table supports at most " + std::to_string(pool.size()) +
                                    " distinct pool characters");
    }
    return pool;
}

} // namespace metaplectic
