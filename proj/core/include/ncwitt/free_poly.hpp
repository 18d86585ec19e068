#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>

#include "ncwitt/coefficient_ring.hpp"
#include "ncwitt/generator_set.hpp"
#include "ncwitt/word.hpp"

namespace ncwitt {

/// A sparse element of the free associative algebra over ℤ or ℤ/m: a finite
/// map from words to nonzero coefficients.
///
/// Every constructor and operation returns the canonical sparse form (no zero
/// coefficients, modular residues normalized), so structural equality is
/// semantic equality. Values are immutable after construction and freely
/// shareable across threads.
class FreePoly {
public:
    using TermMap = std::map<Word, mpz_class>;

    /// The zero polynomial.
    FreePoly(GeneratorSetPtr gens, CoefficientRing ring);

    static FreePoly zero(GeneratorSetPtr gens, CoefficientRing ring);
    static FreePoly constant(GeneratorSetPtr gens, CoefficientRing ring, const mpz_class& c);
    static FreePoly one(GeneratorSetPtr gens, CoefficientRing ring);
    static FreePoly generator(GeneratorSetPtr gens, CoefficientRing ring, std::size_t index);
    static FreePoly monomial(GeneratorSetPtr gens, CoefficientRing ring, Word w,
                             const mpz_class& c = 1);

    /// Canonicalizes: normalizes coefficients, drops zeros, validates words.
    static FreePoly from_terms(GeneratorSetPtr gens, CoefficientRing ring, TermMap terms);

    const GeneratorSetPtr& generators() const { return gens_; }
    const GeneratorSet& generator_set() const { return *gens_; }
    const CoefficientRing& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Length of the longest word present; 0 for the zero polynomial.
    std::size_t degree() const;
    /// 0 when the word is absent.
    mpz_class coeff(const Word& w) const;

    FreePoly operator+(const FreePoly& rhs) const;
    FreePoly operator-(const FreePoly& rhs) const;
    FreePoly operator*(const FreePoly& rhs) const;
    FreePoly operator-() const;
    FreePoly scaled(const mpz_class& c) const;

    bool operator==(const FreePoly& rhs) const;

private:
    GeneratorSetPtr gens_;
    CoefficientRing ring_;
    TermMap terms_;
};

/// k-th power by square-and-multiply; pow(f, 0) is the constant 1.
FreePoly pow(const FreePoly& f, unsigned long k);

/// fg - gf.
FreePoly commutator(const FreePoly& f, const FreePoly& g);

/// Coefficientwise reduction ℤ -> ℤ/m; terms that vanish are dropped.
FreePoly reduce_mod(const FreePoly& f, const mpz_class& m);

/// Terms in degree-then-lex order, decimal coefficients, words as generator
/// names separated by '*'. parse(format(f)) == f.
std::string format(const FreePoly& f);

/// Deterministic total order (generators, ring, then term maps); used for
/// map keys, not for any algebraic meaning. Returns <0, 0, >0.
int compare(const FreePoly& a, const FreePoly& b);

} // namespace ncwitt
