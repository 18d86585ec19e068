#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <vector>

#include "ncwitt/free_poly.hpp"
#include "ncwitt/ghost.hpp"

namespace ncwitt {

/// A generator witness V^m(<a_1> ... <a_r>): the shift m and the ordered
/// (non-commutative) Teichmuller factors.
class TeichWitness {
public:
    TeichWitness(unsigned long shift, std::vector<FreePoly> factors); // r >= 1

    unsigned long shift() const { return shift_; }
    const std::vector<FreePoly>& factors() const { return factors_; }

    bool operator==(const TeichWitness& rhs) const;
    /// Deterministic total order so witnesses can key maps.
    bool operator<(const TeichWitness& rhs) const;

private:
    unsigned long shift_;
    std::vector<FreePoly> factors_;
};

/// The power-sequence Teichmuller lift: (a, a^p, ..., a^{p^{n-1}}).
std::vector<FreePoly> cd_teichmuller(const FreePoly& a, std::size_t n,
                                     const mpz_class& p);

/// The p-scaled shift (0, p a_0, ..., p a_{n-2}), same length.
std::vector<FreePoly> cd_verschiebung(const std::vector<FreePoly>& v,
                                      const mpz_class& p);

/// Coordinates of V^m(<a_1> ... <a_r>) in A^n: coordinate k is
/// p^m * (a_1^{p^{k-m}} ... a_r^{p^{k-m}}) for k >= m, else 0.
std::vector<FreePoly> realize(const TeichWitness& w, std::size_t n,
                              const mpz_class& p);

/// An element of X_n(A) carried together with its membership certificate:
/// a formal integer combination of generator witnesses whose realization is
/// recomputed on construction and must reproduce the stored coordinates.
class XElement {
public:
    using Combo = std::map<TeichWitness, mpz_class>;

    /// Zero coefficients are dropped; the combo must keep at least one
    /// witness (the algebra is read off the witnesses). Cancellation through
    /// arithmetic may still produce the zero element.
    XElement(mpz_class prime, std::size_t trunc, Combo combo);

    const mpz_class& prime() const { return prime_; }
    std::size_t trunc() const { return trunc_; }
    const Combo& combo() const { return combo_; }
    const std::vector<FreePoly>& realized() const { return realized_; }

    XElement operator+(const XElement& rhs) const;
    XElement scaled(const mpz_class& c) const;

    /// Re-derives the realization from the combo and compares.
    bool certificate_ok() const;

private:
    XElement(mpz_class prime, std::size_t trunc, Combo combo, GeneratorSetPtr gens);

    friend XElement omega_embed(const std::vector<FreePoly>& coords, const mpz_class& p);

    mpz_class prime_;
    std::size_t trunc_;
    GeneratorSetPtr gens_;
    Combo combo_;
    std::vector<FreePoly> realized_;
};

/// The coordinatewise ghost identity w_k(a) = sum_{i<=k} p^i a_i^{p^{k-i}},
/// read as a witness combination: sum_i V^i(<a_i>). The returned element's
/// realization equals ghost_components(coords, p) exactly; a mismatch is an
/// internal invariant violation.
XElement omega_embed(const std::vector<FreePoly>& coords, const mpz_class& p);

/// Coordinatewise necklace projection of a realized vector.
GhostVector gamma_bar(const std::vector<FreePoly>& v, const mpz_class& p);

/// A formal element of E_n(A) = X_n(ℤA)/X_n(I): an integer combination of
/// witnesses V^m(<[r_1]> ... <[r_k]>) whose factors are brackets wrapping
/// canonical free-algebra elements. No arithmetic happens in the monoid
/// algebra beyond this bookkeeping: products are formed at the witness level
/// by concatenating factor lists.
class ESymbol {
public:
    using Combo = std::map<TeichWitness, mpz_class>; // factors = bracket contents

    ESymbol(mpz_class prime, std::size_t trunc, Combo combo);

    /// <[b_1]> <[b_2]> ... <[b_r]>.
    static ESymbol teichmuller_product(mpz_class prime, std::size_t trunc,
                                       std::vector<FreePoly> brackets);

    const mpz_class& prime() const { return prime_; }
    std::size_t trunc() const { return trunc_; }
    const Combo& combo() const { return combo_; }

    ESymbol operator+(const ESymbol& rhs) const;

    friend ESymbol verschiebung(const ESymbol& e);
    friend GhostVector eta_bar(const ESymbol& e);

private:
    ESymbol(mpz_class prime, std::size_t trunc, Combo combo, GeneratorSetPtr gens);

    mpz_class prime_;
    std::size_t trunc_;
    GeneratorSetPtr gens_;
    Combo combo_;
};

/// V on E(A): shifts every witness, by additivity.
ESymbol verschiebung(const ESymbol& e);

/// The ghost map on E_n(A): apply the bracket-erasing projection [r] -> r,
/// realize in A^n, project coordinatewise. Well defined on classes because
/// the projection kills X(I) by construction.
GhostVector eta_bar(const ESymbol& e);

} // namespace ncwitt
