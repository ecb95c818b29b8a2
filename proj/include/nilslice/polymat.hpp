#pragma once

#include <vector>

#include "nilslice/poly.hpp"
#include "nilslice/rational_matrix.hpp"

namespace nilslice {

/// Dense square-friendly matrix with polynomial entries.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols, std::shared_ptr<const VarTable> vt)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, MultiPoly(vt)) {}

    static PolyMatrix from_constant(const RationalMatrix& m,
                                    std::shared_ptr<const VarTable> vt);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    MultiPoly& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const MultiPoly& at(int r, int c) const {
        return a_[static_cast<size_t>(r) * cols_ + c];
    }

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;

private:
    int rows_, cols_;
    std::vector<MultiPoly> a_;
};

/// Determinant by cofactor expansion along the first row.  Exponential;
/// reference oracle for small sizes only.
MultiPoly determinant_cofactor(const PolyMatrix& m, int cap = -1);

/// Coefficients c[0..N] of the characteristic polynomial
/// det(T*I - A) = sum_m c[m] * T^(N-m), with c[0] = 1.  Computed by a
/// column-subset dynamic program over minors; every c[m] is truncated to
/// standard degree <= cap in the matrix variables (cap < 0: exact).
std::vector<MultiPoly> char_poly(const PolyMatrix& a, int cap = -1);

/// Pfaffian of an antisymmetric matrix of polynomials, by memoized
/// first-index expansion over index subsets.  Throws if the size is odd or
/// the matrix is not antisymmetric.
MultiPoly pfaffian(const PolyMatrix& m, int cap = -1);

/// Faddeev-LeVerrier data for a rational square matrix A:
///   det(T*I - A) = sum_m coeffs[m] * T^(N-m),     coeffs[0] = 1,
///   adj(T*I - A) = sum_k T^(N-1-k) * M[k],        M[0] = I.
/// The directional derivative of coeffs[m] along a matrix direction W is
/// -tr(M[m-1] * W).
struct CharPolyFL {
    std::vector<Rat> coeffs;
    std::vector<RationalMatrix> M;
};

CharPolyFL faddeev_leverrier(const RationalMatrix& a);

/// Pfaffian of an antisymmetric rational matrix (memoized expansion).
Rat pfaffian_value(const RationalMatrix& m);

/// Directional derivative d/ds pf(M + s W) at s = 0, computed exactly by
/// interpolating the degree-(N/2) polynomial s -> pf(M + s W).
Rat pfaffian_directional(const RationalMatrix& m, const RationalMatrix& w);

}  // namespace nilslice
