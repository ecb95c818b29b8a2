#include "nilslice/rational_matrix.hpp"

#include <sstream>
#include <utility>

namespace nilslice {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix add: shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sub: shape mismatch");
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
    RationalMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rat& bkj = o.at(k, j);
                if (bkj != 0) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

RationalMatrix RationalMatrix::operator*(const Rat& s) const {
    RationalMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RationalMatrix RationalMatrix::pow(int k) const {
    if (rows_ != cols_) throw std::invalid_argument("matrix pow: not square");
    RationalMatrix r = identity(rows_);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << '[';
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).get_str();
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

// Row-echelon form of an integer copy of m, via Bareiss one-step
// fraction-free elimination (exact divisions keep entries integral and
// bounded by minors). Returns echelon rows and pivot column indices.
struct Echelon {
    std::vector<std::vector<Int>> rows;
    std::vector<int> pivot_cols;
};

Echelon echelon_form(const RationalMatrix& m, const RationalVector* aug) {
    const int nr = m.rows();
    const int nc = m.cols() + (aug ? 1 : 0);
    std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc));
    for (int i = 0; i < nr; ++i) {
        Int lcm = 1;
        for (int j = 0; j < m.cols(); ++j) {
            Int d = m.at(i, j).get_den();
            lcm = ::lcm(lcm, d);
        }
        if (aug) lcm = ::lcm(lcm, Int((*aug)[i].get_den()));
        for (int j = 0; j < m.cols(); ++j) {
            Rat v = m.at(i, j) * Rat(lcm);
            a[i][j] = v.get_num();
        }
        if (aug) {
            Rat v = (*aug)[i] * Rat(lcm);
            a[i][m.cols()] = v.get_num();
        }
    }

    Echelon e;
    Int prev = 1;
    int row = 0;
    // The augmented column (if any) never serves as pivot.
    for (int col = 0; col < m.cols() && row < nr; ++col) {
        int piv = -1;
        for (int i = row; i < nr; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[row], a[piv]);
        const Int p = a[row][col];
        for (int i = row + 1; i < nr; ++i) {
            const Int m_ic = a[i][col];
            for (int j = col; j < nc; ++j) {
                Int t = a[i][j] * p - a[row][j] * m_ic;
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
        }
        prev = p;
        e.pivot_cols.push_back(col);
        ++row;
    }
    e.rows = std::move(a);
    return e;
}

// Back-substitute pivot variables of an echelon system, given values for
// the free variables already placed in x.
void back_substitute(const Echelon& e, int ncols, RationalVector& x, int aug_col) {
    for (int r = static_cast<int>(e.pivot_cols.size()) - 1; r >= 0; --r) {
        const int pc = e.pivot_cols[r];
        Rat s = aug_col >= 0 ? Rat(e.rows[r][aug_col]) : Rat(0);
        for (int c = pc + 1; c < ncols; ++c)
            if (e.rows[r][c] != 0) s -= Rat(e.rows[r][c]) * x[c];
        x[pc] = s / Rat(e.rows[r][pc]);
    }
}

}  // namespace

int rank_of(const RationalMatrix& m) {
    return static_cast<int>(echelon_form(m, nullptr).pivot_cols.size());
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
    const int nc = m.cols();
    Echelon e = echelon_form(m, nullptr);
    std::vector<bool> is_pivot(nc, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (int fc = 0; fc < nc; ++fc) {
        if (is_pivot[fc]) continue;
        RationalVector x(nc, Rat(0));
        x[fc] = 1;
        back_substitute(e, nc, x, -1);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    const int nc = m.cols();
    Echelon e = echelon_form(m, &b);
    const int rank = static_cast<int>(e.pivot_cols.size());
    for (int i = rank; i < m.rows(); ++i)
        if (e.rows[i][nc] != 0) return std::nullopt;
    RationalVector x(nc, Rat(0));
    back_substitute(e, nc, x, nc);
    return x;
}

}  // namespace nilslice
