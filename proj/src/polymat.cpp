#include "nilslice/polymat.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace nilslice {

PolyMatrix PolyMatrix::from_constant(const RationalMatrix& m,
                                     std::shared_ptr<const VarTable> vt) {
    PolyMatrix r(m.rows(), m.cols(), vt);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) r.at(i, j) = MultiPoly::constant(vt, m.at(i, j));
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("poly matrix add: shape mismatch");
    PolyMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("poly matrix sub: shape mismatch");
    PolyMatrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

namespace {

MultiPoly det_cofactor_impl(const PolyMatrix& m, std::vector<int>& cols, int row,
                            int cap) {
    const auto& vt = m.at(0, 0).table();
    if (cols.empty()) return MultiPoly::constant(vt, Rat(1));
    MultiPoly acc(vt);
    for (size_t i = 0; i < cols.size(); ++i) {
        const int c = cols[i];
        const MultiPoly& entry = m.at(row, c);
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (size_t j = 0; j < cols.size(); ++j)
            if (j != i) rest.push_back(cols[j]);
        MultiPoly minor = det_cofactor_impl(m, rest, row + 1, cap);
        MultiPoly signedEntry = (i % 2 == 0) ? entry : -entry;
        acc.add_mul_truncated(signedEntry, minor, cap);
    }
    return acc;
}

}  // namespace

MultiPoly determinant_cofactor(const PolyMatrix& m, int cap) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    std::vector<int> cols(m.cols());
    for (int i = 0; i < m.cols(); ++i) cols[i] = i;
    return det_cofactor_impl(m, cols, 0, cap);
}

std::vector<MultiPoly> char_poly(const PolyMatrix& a, int cap) {
    if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: not square");
    const int n = a.rows();
    if (n > 20) throw std::invalid_argument("char_poly: size too large for subset DP");
    const auto& vt = a.at(0, 0).table();

    // D[S] is the determinant of the submatrix of T*I - A with rows
    // 0..|S|-1 and columns S, stored as coefficients of powers of T.
    // Only two popcount levels are alive at a time to bound peak memory.
    using TPoly = std::vector<MultiPoly>;
    std::unordered_map<unsigned, TPoly> prev, cur;
    prev.emplace(0u, TPoly{MultiPoly::constant(vt, Rat(1))});

    for (int sz = 1; sz <= n; ++sz) {
        const int row = sz - 1;
        cur.clear();
        for (unsigned S = 0; S < (1u << n); ++S) {
            if (std::popcount(S) != sz) continue;
            TPoly res(sz + 1, MultiPoly(vt));
            int pos = 0;
            for (int c = 0; c < n; ++c) {
                if (!(S & (1u << c))) { continue; }
                const TPoly& sub = prev.at(S ^ (1u << c));
                // cofactor sign along the expansion row
                const bool even = ((row + pos) % 2 == 0);
                const MultiPoly& entry = a.at(row, c);
                if (!entry.is_zero()) {
                    // contribution of the -A part of the pivot entry
                    MultiPoly signedEntry = even ? -entry : entry;
                    for (int t = 0; t < sz; ++t)
                        if (!sub[t].is_zero())
                            res[t].add_mul_truncated(signedEntry, sub[t], cap);
                }
                if (row == c) {
                    // contribution of the T part of the pivot entry
                    for (int t = 0; t < sz; ++t) {
                        if (sub[t].is_zero()) continue;
                        if (even)
                            res[t + 1] += sub[t];
                        else
                            res[t + 1] -= sub[t];
                    }
                }
                ++pos;
            }
            cur.emplace(S, std::move(res));
        }
        prev = std::move(cur);
    }

    TPoly& full = prev.at((1u << n) - 1);
    // full[t] multiplies T^t; report c[m] with m = n - t.
    std::vector<MultiPoly> coeffs(n + 1, MultiPoly(vt));
    for (int t = 0; t <= n; ++t) coeffs[n - t] = std::move(full[t]);
    return coeffs;
}

namespace {

MultiPoly pfaffian_impl(const PolyMatrix& m, unsigned mask,
                        std::vector<std::optional<MultiPoly>>& memo, int cap) {
    const auto& vt = m.at(0, 0).table();
    if (mask == 0) return MultiPoly::constant(vt, Rat(1));
    if (memo[mask]) return *memo[mask];
    const int i = std::countr_zero(mask);
    MultiPoly acc(vt);
    int between = 0;
    for (int j = i + 1; j < m.rows(); ++j) {
        if (!(mask & (1u << j))) continue;
        const MultiPoly& entry = m.at(i, j);
        if (!entry.is_zero()) {
            MultiPoly sub =
                pfaffian_impl(m, mask & ~(1u << i) & ~(1u << j), memo, cap);
            MultiPoly signedEntry = (between % 2 == 0) ? entry : -entry;
            acc.add_mul_truncated(signedEntry, sub, cap);
        }
        ++between;
    }
    memo[mask] = acc;
    return acc;
}

}  // namespace

MultiPoly pfaffian(const PolyMatrix& m, int cap) {
    const int n = m.rows();
    if (n != m.cols() || n % 2 != 0)
        throw std::invalid_argument("pfaffian: need an even-size square matrix");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (!(m.at(i, j) == -m.at(j, i)))
                throw std::invalid_argument("pfaffian: matrix is not antisymmetric");
    std::vector<std::optional<MultiPoly>> memo(size_t(1) << n);
    return pfaffian_impl(m, (1u << n) - 1, memo, cap);
}

CharPolyFL faddeev_leverrier(const RationalMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("faddeev_leverrier: not square");
    const int n = a.rows();
    CharPolyFL r;
    r.coeffs.assign(n + 1, Rat(0));
    r.coeffs[0] = 1;
    r.M.reserve(n);
    r.M.push_back(RationalMatrix::identity(n));
    for (int k = 1; k <= n; ++k) {
        RationalMatrix am = a * r.M[k - 1];
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += am.at(i, i);
        r.coeffs[k] = -tr / Rat(k);
        RationalMatrix next = am;
        for (int i = 0; i < n; ++i) next.at(i, i) += r.coeffs[k];
        if (k < n)
            r.M.push_back(std::move(next));
        else if (!next.is_zero())
            throw std::logic_error("faddeev_leverrier: Cayley-Hamilton check failed");
    }
    return r;
}

namespace {

Rat pfaffian_value_impl(const RationalMatrix& m, unsigned mask,
                        std::vector<std::optional<Rat>>& memo) {
    if (mask == 0) return Rat(1);
    if (memo[mask]) return *memo[mask];
    const int i = std::countr_zero(mask);
    Rat acc(0);
    int between = 0;
    for (int j = i + 1; j < m.rows(); ++j) {
        if (!(mask & (1u << j))) continue;
        const Rat& entry = m.at(i, j);
        if (entry != 0) {
            Rat sub = pfaffian_value_impl(m, mask & ~(1u << i) & ~(1u << j), memo);
            if (sub != 0) acc += (between % 2 == 0 ? entry : Rat(-entry)) * sub;
        }
        ++between;
    }
    memo[mask] = acc;
    return acc;
}

}  // namespace

Rat pfaffian_value(const RationalMatrix& m) {
    const int n = m.rows();
    if (n != m.cols() || n % 2 != 0)
        throw std::invalid_argument("pfaffian: need an even-size square matrix");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (m.at(i, j) != -m.at(j, i))
                throw std::invalid_argument("pfaffian: matrix is not antisymmetric");
    std::vector<std::optional<Rat>> memo(size_t(1) << n);
    return pfaffian_value_impl(m, (1u << n) - 1, memo);
}

Rat pfaffian_directional(const RationalMatrix& m, const RationalMatrix& w) {
    const int n = m.rows();
    const int d = n / 2;  // degree of s -> pf(M + s W)
    // Sample at s = 0..d and solve the Vandermonde system exactly.
    RationalMatrix vand(d + 1, d + 1);
    RationalVector vals(d + 1);
    for (int s = 0; s <= d; ++s) {
        Rat sp(1);
        for (int p = 0; p <= d; ++p) {
            vand.at(s, p) = sp;
            sp *= Rat(s);
        }
        vals[s] = pfaffian_value(m + w * Rat(s));
    }
    auto sol = solve(vand, vals);
    if (!sol) throw std::logic_error("pfaffian_directional: interpolation failed");
    return (*sol)[1];
}

}  // namespace nilslice
