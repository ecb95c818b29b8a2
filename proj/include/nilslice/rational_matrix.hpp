#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nilslice/rational.hpp"

namespace nilslice {

using RationalVector = std::vector<Rat>;

/// Dense matrix of exact rationals. All elimination-based queries
/// (rank, kernel, solve) run fraction-free (Bareiss) on a row-scaled
/// integer copy, so no rounding can ever occur.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const RationalMatrix& o) const = default;

    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator*(const Rat& s) const;
    RationalMatrix transpose() const;

    /// Matrix power by repeated multiplication (exponent >= 0).
    RationalMatrix pow(int k) const;

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

inline RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y) {
    return x * y - y * x;
}

/// Exact rank via fraction-free elimination.
int rank_of(const RationalMatrix& m);

/// Basis of the right null space {v : M v = 0}; size == cols - rank.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// One exact solution of M x = b, or nullopt if inconsistent.
/// Throws std::invalid_argument on dimension mismatch.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

}  // namespace nilslice
