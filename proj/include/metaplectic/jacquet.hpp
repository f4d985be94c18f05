#ifndef METAPLECTIC_JACQUET_HPP
#define METAPLECTIC_JACQUET_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <metaplectic/formal_ring.hpp>
#include <metaplectic/irreducibility.hpp>

namespace metaplectic
{

/// M* = (m (x) id) o (~ (x) m*) o kappa o m* on a non-genuine word.
Element<WordTensor> big_mstar(const Word &w);
Element<WordTensor> big_mstar(const Element<Word> &x);

/// The metaplectic M*_~, with alpha.~ in place of ~ and the genuine m, m*.
Element<WordTensor> big_mstar_gen(const Word &w);
Element<WordTensor> big_mstar_gen(const Element<Word> &x);

/// Action of R (x) R on R (x) R_S: (b (x) g) |x (d (x) e) = bd (x) (g |x e).
Element<WordSpTensor> rtimes(const Element<WordTensor> &gl, const Element<WordSpTensor> &sp);

/// g |x e: appends the characters of g to the symplectic word e.
SpWord rtimes(const Word &g, const SpWord &e);

struct JacquetExpansion {
    Element<WordSpTensor> value;
    PrincipalSeries source;
};

/// How the factors of the principal series are fed through
/// mu*(pi |x sigma) = M*(pi) |x mu*(sigma).
enum class FactorOrder {
    /// xi_1 |x (xi_2 |x (... |x anchor)), innermost factor first.
    right_to_left,
    /// Outermost factor first.
    left_to_right,
    /// One application with pi = xi_1 x ... x xi_n.
    whole_word,
};

JacquetExpansion mu_star(const PrincipalSeries &ps, FactorOrder order = FactorOrder::right_to_left);

/// Coefficient of left (x) right in mu_star(ps). Both arguments are brought
/// to normal form first; genuineness must match the series' group.
Integer jacquet_multiplicity(const PrincipalSeries &ps, const Word &left, const SpWord &right);

struct LemmaReport {
    bool holds;
    /// M*_~(w).
    Element<WordTensor> metaplectic_side;
    /// (chi (x) chi)(M*(chi^-1 w)).
    Element<WordTensor> linear_side;
    /// metaplectic_side - linear_side; empty iff holds.
    Element<WordTensor> difference;
};

LemmaReport verify_lemma(const Word &w);

struct LemmaSweepReport {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::optional<Word> first_counterexample;
    std::optional<LemmaReport> first_counterexample_report;
};

/// Checks the lemma on every genuine word (multiset) of length <= max_len
/// over the pool.
LemmaSweepReport verify_lemma_sweep(std::span<const Character> pool, std::size_t max_len);

/// All multisets of size <= max_len drawn from the pool, as words.
std::vector<Word> words_up_to(std::span<const Character> pool, std::size_t max_len, bool genuine);

/// A deterministic pool of characters mixing exponents 0, +-1/2, +-1, ...
/// with the unitary generators of the table.
std::vector<Character> default_character_pool(const SymbolTablePtr &table, std::size_t size);

} // namespace metaplectic

#endif
