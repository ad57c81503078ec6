#pragma once

#include <optional>
#include <vector>

#include "cktweb/rational.hpp"
#include "cktweb/unipoly.hpp"

namespace cktweb {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void append_row(const RationalVector& row);
    RationalVector row(std::size_t r) const;
    RationalVector column(std::size_t c) const;
    RationalMatrix transpose() const;
    RationalVector operator*(const RationalVector& v) const;
    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    RationalMatrix& operator-=(const RationalMatrix& o);
    bool operator==(const RationalMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct Echelon {
    RationalMatrix reduced;            // reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

// Fraction-free (Bareiss) elimination on the integer-cleared rows, then back-substitution.
Echelon row_reduce(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
std::vector<RationalVector> kernel(const RationalMatrix& m);  // basis of {v : m v = 0}
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);
RationalMatrix inverse(const RationalMatrix& m);  // DomainError if singular

// det(x I - m), via reduction to Hessenberg form.
UniPoly characteristic_polynomial(const RationalMatrix& m);

}  // namespace cktweb
