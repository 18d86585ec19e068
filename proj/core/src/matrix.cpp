#include "ncwitt/matrix.hpp"

#include "ncwitt/error.hpp"

namespace ncwitt {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw MismatchError("matrix dimensions differ");
    if (a.ring() != b.ring()) throw MismatchError("matrix rings differ");
}

} // namespace

Matrix::Matrix(std::size_t dim, CoefficientRing ring)
    : dim_(dim), ring_(std::move(ring)), entries_(dim * dim, mpz_class(0)) {
    if (dim == 0) throw DomainError("matrix dimension must be at least 1");
}

Matrix Matrix::identity(std::size_t dim, CoefficientRing ring) {
    Matrix m(dim, std::move(ring));
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(CoefficientRing ring,
                         const std::vector<std::vector<mpz_class>>& rows) {
    Matrix m(rows.size(), std::move(ring));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw DomainError("matrix rows must form a square");
        }
        for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

const mpz_class& Matrix::at(std::size_t i, std::size_t j) const {
    return entries_.at(i * dim_ + j);
}

void Matrix::set(std::size_t i, std::size_t j, const mpz_class& v) {
    entries_.at(i * dim_ + j) = ring_.normalize(v);
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_same_shape(*this, rhs);
    Matrix out(dim_, ring_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = ring_.normalize(entries_[k] + rhs.entries_[k]);
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    require_same_shape(*this, rhs);
    Matrix out(dim_, ring_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = ring_.normalize(entries_[k] - rhs.entries_[k]);
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_shape(*this, rhs);
    Matrix out(dim_, ring_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            mpz_class acc = 0;
            for (std::size_t k = 0; k < dim_; ++k) {
                acc += at(i, k) * rhs.at(k, j);
            }
            out.entries_[i * dim_ + j] = ring_.normalize(std::move(acc));
        }
    }
    return out;
}

Matrix Matrix::scaled(const mpz_class& c) const {
    Matrix out(dim_, ring_);
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        out.entries_[k] = ring_.normalize(entries_[k] * c);
    }
    return out;
}

mpz_class Matrix::trace() const {
    mpz_class acc = 0;
    for (std::size_t i = 0; i < dim_; ++i) acc += at(i, i);
    return ring_.normalize(std::move(acc));
}

Matrix pow(const Matrix& m, unsigned long k) {
    Matrix result = Matrix::identity(m.dim(), m.ring());
    if (k == 0) return result;
    Matrix base = m;
    while (true) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k == 0) break;
        base = base * base;
    }
    return result;
}

MatrixAssignment::MatrixAssignment(GeneratorSetPtr gens, std::vector<Matrix> matrices)
    : gens_(std::move(gens)), matrices_(std::move(matrices)) {
    if (!gens_) throw DomainError("null generator set");
    if (matrices_.size() != gens_->size()) {
        throw MismatchError("assignment must cover every generator exactly once");
    }
    for (const auto& m : matrices_) {
        if (m.dim() != matrices_.front().dim() || m.ring() != matrices_.front().ring()) {
            throw MismatchError("assigned matrices must share dimension and ring");
        }
    }
}

std::size_t MatrixAssignment::dim() const { return matrices_.front().dim(); }

const CoefficientRing& MatrixAssignment::ring() const {
    return matrices_.front().ring();
}

const Matrix& MatrixAssignment::matrix_for(std::size_t generator_index) const {
    return matrices_.at(generator_index);
}

Matrix eval_matrix(const FreePoly& f, const MatrixAssignment& assignment) {
    if (!same_generators(f.generators(), assignment.generators())) {
        throw MismatchError("assignment does not cover the polynomial's generators");
    }
    // integer polynomials may evaluate into any matrix ring; modular ones
    // only into the matching modulus
    if (f.ring().is_modular() && f.ring() != assignment.ring()) {
        throw MismatchError("polynomial ring " + f.ring().to_string() +
                            " does not match matrix ring " +
                            assignment.ring().to_string());
    }
    Matrix acc(assignment.dim(), assignment.ring());
    for (const auto& [w, c] : f.terms()) {
        Matrix m = Matrix::identity(assignment.dim(), assignment.ring());
        for (std::size_t k = 0; k < w.length(); ++k) {
            m = m * assignment.matrix_for(w.letter(k));
        }
        acc = acc + m.scaled(c);
    }
    return acc;
}

} // namespace ncwitt
