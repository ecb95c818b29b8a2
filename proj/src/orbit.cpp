#include "nilslice/orbit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "nilslice/polymat.hpp"

namespace nilslice {

SL2Triple build_sl2(const Partition& lam, const AlgebraType& alg) {
    SL2Triple t;
    t.alg = alg;
    t.lam = lam;
    const int N = lam.total;
    // Self-dual parts get a single block carrying the restricted form;
    // the rest pair up with an equal neighbour.
    int offset = 0;
    for (size_t i = 0; i < lam.parts.size();) {
        const int d = lam.parts[i];
        const bool selfDual = alg.orthogonal() ? (d % 2 == 1) : (d % 2 == 0);
        if (selfDual) {
            t.blocks.push_back({d, offset, -1});
            offset += d;
            ++i;
        } else {
            if (i + 1 >= lam.parts.size() || lam.parts[i + 1] != d)
                throw std::invalid_argument("build_sl2: part needs an equal partner");
            t.blocks.push_back({d, offset, offset + d});
            offset += 2 * d;
            i += 2;
        }
    }
    if (offset != N) throw std::logic_error("build_sl2: block layout size mismatch");

    const int eps = alg.orthogonal() ? 1 : -1;
    t.J = RationalMatrix(N, N);
    t.e = RationalMatrix(N, N);
    t.h = RationalMatrix(N, N);
    t.f = RationalMatrix(N, N);
    t.diagWeights.assign(N, 0);

    auto fill_sl2_block = [&](int start, int d) {
        for (int j = 0; j < d; ++j) {
            t.h.at(start + j, start + j) = d - 1 - 2 * j;
            t.diagWeights[start + j] = d - 1 - 2 * j;
            if (j >= 1) t.e.at(start + j - 1, start + j) = 1;
            if (j + 1 < d) t.f.at(start + j + 1, start + j) = Rat((j + 1) * (d - 1 - j));
        }
    };

    for (const Block& b : t.blocks) {
        const int d = b.part;
        fill_sl2_block(b.uStart, d);
        if (b.vStart < 0) {
            // <u_i, u_(d-1-i)> = (-1)^i
            for (int i = 0; i < d; ++i)
                t.J.at(b.uStart + i, b.uStart + d - 1 - i) = (i % 2 == 0) ? 1 : -1;
        } else {
            fill_sl2_block(b.vStart, d);
            // <u_i, v_(d-1-i)> = (-1)^i, partner entries by (anti)symmetry
            for (int i = 0; i < d; ++i) {
                const int s = (i % 2 == 0) ? 1 : -1;
                t.J.at(b.uStart + i, b.vStart + d - 1 - i) = s;
                t.J.at(b.vStart + d - 1 - i, b.uStart + i) = eps * s;
            }
        }
    }

    t.detJ = determinant(t.J);
    if (t.detJ != 1 && t.detJ != -1)
        throw std::logic_error("build_sl2: Gram determinant is not a unit");
    if (!in_algebra(t.e, t.J) || !in_algebra(t.h, t.J) || !in_algebra(t.f, t.J))
        throw std::logic_error("build_sl2: triple does not preserve the form");
    if (!(commutator(t.e, t.f) == t.h))
        throw std::logic_error("build_sl2: [e,f] != h");
    return t;
}

WeightVectorBasis lie_algebra_basis(const SL2Triple& t) {
    const int N = t.J.rows();
    const int eps = t.alg.orthogonal() ? 1 : -1;
    const RationalMatrix Jinv = inverse(t.J);
    WeightVectorBasis b;
    for (int a = 0; a < N; ++a) {
        for (int c = a; c < N; ++c) {
            if (eps == 1 && a == c) continue;  // E_aa - E_aa = 0
            RationalMatrix A(N, N);
            A.at(a, c) += 1;
            A.at(c, a) -= Rat(eps);
            RationalMatrix X = Jinv * A;
            if (X.is_zero()) continue;
            b.mats.push_back(std::move(X));
            b.weights.push_back(-(t.diagWeights[a] + t.diagWeights[c]));
        }
    }
    return b;
}

WeightVectorBasis centralizer_basis(const SL2Triple& t, const RationalMatrix& y) {
    WeightVectorBasis g = lie_algebra_basis(t);
    const int N = t.J.rows();
    // The constraint [y, X] = 0 respects the weight grading when y is an
    // ad-h weight vector (it is for y = e or y = f), so solve weight by
    // weight to keep the kernel basis graded.
    std::map<int, std::vector<int>> byWeight;
    for (int i = 0; i < g.size(); ++i) byWeight[g.weights[i]].push_back(i);

    WeightVectorBasis out;
    for (const auto& [w, idxs] : byWeight) {
        RationalMatrix cons(N * N, static_cast<int>(idxs.size()));
        for (size_t k = 0; k < idxs.size(); ++k) {
            RationalMatrix c = commutator(y, g.mats[idxs[k]]);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) cons.at(i * N + j, static_cast<int>(k)) = c.at(i, j);
        }
        for (const RationalVector& v : kernel_basis(cons)) {
            RationalMatrix X(N, N);
            for (size_t k = 0; k < idxs.size(); ++k)
                if (v[k] != 0) X = X + g.mats[idxs[k]] * v[k];
            out.mats.push_back(std::move(X));
            out.weights.push_back(w);
        }
    }
    return out;
}

bool in_algebra(const RationalMatrix& x, const RationalMatrix& j) {
    return (x.transpose() * j + j * x).is_zero();
}

std::vector<int> jordan_type(const RationalMatrix& x) {
    const int N = x.rows();
    std::vector<int> ranks{N};  // rank of x^0
    RationalMatrix p = x;
    while (true) {
        const int r = rank_of(p);
        ranks.push_back(r);
        if (r == 0) break;
        p = p * x;
    }
    // parts of size >= m: ranks[m-1] - ranks[m]
    std::vector<int> atLeast;
    for (size_t m = 1; m < ranks.size(); ++m) atLeast.push_back(ranks[m - 1] - ranks[m]);
    std::vector<int> parts;
    for (size_t m = 0; m < atLeast.size(); ++m) {
        const int exactly =
            atLeast[m] - (m + 1 < atLeast.size() ? atLeast[m + 1] : 0);
        for (int i = 0; i < exactly; ++i) parts.push_back(static_cast<int>(m) + 1);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    const int n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a.at(r, col) != 0) { piv = r; break; }
        if (piv < 0) throw std::invalid_argument("inverse: singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        const Rat p = a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const Rat factor = a.at(r, col);
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= factor * a.at(col, j);
                inv.at(r, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

Rat determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const int n = m.rows();
    if (n == 0) return Rat(1);
    CharPolyFL fl = faddeev_leverrier(m);
    Rat det = fl.coeffs[n];
    if (n % 2 == 1) det = -det;
    return det;
}

}  // namespace nilslice
