#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "ncwitt/coefficient_ring.hpp"
#include "ncwitt/free_poly.hpp"

namespace ncwitt {

/// A dense square matrix over ℤ or ℤ/m, the target of evaluation
/// homomorphisms. Entries follow the ring's normalization.
class Matrix {
public:
    Matrix(std::size_t dim, CoefficientRing ring); // zero matrix

    static Matrix identity(std::size_t dim, CoefficientRing ring);
    static Matrix from_rows(CoefficientRing ring,
                            const std::vector<std::vector<mpz_class>>& rows);

    std::size_t dim() const { return dim_; }
    const CoefficientRing& ring() const { return ring_; }

    const mpz_class& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const mpz_class& v);

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix scaled(const mpz_class& c) const;

    mpz_class trace() const;

    bool operator==(const Matrix& rhs) const = default;

private:
    std::size_t dim_;
    CoefficientRing ring_;
    std::vector<mpz_class> entries_; // row-major
};

Matrix pow(const Matrix& m, unsigned long k);

/// One matrix per generator, all sharing dimension and ring.
class MatrixAssignment {
public:
    MatrixAssignment(GeneratorSetPtr gens, std::vector<Matrix> matrices);

    const GeneratorSetPtr& generators() const { return gens_; }
    std::size_t dim() const;
    const CoefficientRing& ring() const;
    const Matrix& matrix_for(std::size_t generator_index) const;

private:
    GeneratorSetPtr gens_;
    std::vector<Matrix> matrices_;
};

/// Substitutes matrices for generators. A unital ring homomorphism:
/// eval(fg) = eval(f)eval(g), eval(f+g) = eval(f)+eval(g), eval(1) = I.
///
/// An integer polynomial may evaluate into a modular matrix ring (the one
/// documented coercion); a modular polynomial requires the matching ring.
Matrix eval_matrix(const FreePoly& f, const MatrixAssignment& assignment);

} // namespace ncwitt
