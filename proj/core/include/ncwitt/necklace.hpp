#pragma once

#include <string>

#include "ncwitt/free_poly.hpp"

namespace ncwitt {

/// Lexicographically least cyclic rotation of w, under the generator index
/// order. Linear time (Booth's algorithm on the doubled word). Idempotent,
/// and the output is always a rotation of the input.
Word min_rotation(const Word& w);

/// An element of A/[A,A] represented by its canonical necklace expansion:
/// a finite map from minimal-rotation words to nonzero coefficients.
///
/// Cyclic word classes form a basis of A/[A,A] for a free algebra, so
/// structural equality of canonical forms is semantic equality of classes.
class NecklacePoly {
public:
    /// The zero class.
    NecklacePoly(GeneratorSetPtr gens, CoefficientRing ring);

    static NecklacePoly zero(GeneratorSetPtr gens, CoefficientRing ring);

    const GeneratorSetPtr& generators() const { return poly_.generators(); }
    const CoefficientRing& ring() const { return poly_.ring(); }
    const FreePoly::TermMap& terms() const { return poly_.terms(); }
    bool is_zero() const { return poly_.is_zero(); }
    std::size_t term_count() const { return poly_.term_count(); }

    /// The canonical-word representative, re-embedded in the free algebra.
    const FreePoly& representative() const { return poly_; }

    NecklacePoly operator+(const NecklacePoly& rhs) const;
    NecklacePoly operator-(const NecklacePoly& rhs) const;
    NecklacePoly operator-() const;
    NecklacePoly scaled(const mpz_class& c) const;

    bool operator==(const NecklacePoly& rhs) const { return poly_ == rhs.poly_; }

    friend NecklacePoly project(const FreePoly& f);
    friend NecklacePoly reduce_mod(const NecklacePoly& f, const mpz_class& m);

private:
    explicit NecklacePoly(FreePoly canonical) : poly_(std::move(canonical)) {}

    FreePoly poly_; // invariant: every key equals its own minimal rotation
};

/// The quotient map A -> A/[A,A]: replaces each word by its minimal rotation,
/// summing coefficients. Additive, and kills every commutator.
NecklacePoly project(const FreePoly& f);

/// True iff f ≡ g in A/[A,A], i.e. project(f - g) = 0.
bool necklace_eq(const FreePoly& f, const FreePoly& g);

/// Coefficientwise reduction of a class, ℤ -> ℤ/m (or ℤ/m with the same m).
NecklacePoly reduce_mod(const NecklacePoly& f, const mpz_class& m);

/// The p-power map on A/([A,A] + pA): project(g^p) for any representative g
/// of f. Representative independence and additivity are invariants of the
/// quotient, exercised by the property suite. Requires f over ℤ/p, p prime.
NecklacePoly frobenius_p(const NecklacePoly& f, const mpz_class& p);

std::string format(const NecklacePoly& f);

} // namespace ncwitt
