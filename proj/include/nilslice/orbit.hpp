#pragma once

#include <vector>

#include "nilslice/partition.hpp"
#include "nilslice/rational_matrix.hpp"

namespace nilslice {

/// One cyclic block of the module underlying an sl2 triple.  A block of
/// size d carries basis vectors u_0..u_(d-1); when the part is not
/// self-dual for the form it comes with a partner block v_0..v_(d-1) and
/// vStart >= 0 points at v_0.
struct Block {
    int part;
    int uStart;
    int vStart;  // -1 for a self-paired single block
};

/// Concrete matrix realization of the sl2 triple attached to a partition:
/// a Gram matrix J for the bilinear form, the nilpotent e (one shift per
/// block), the semisimple h (weights d-1-2j per block) and the opposite
/// nilpotent f, all preserving the form.
struct SL2Triple {
    AlgebraType alg;
    Partition lam;
    std::vector<Block> blocks;
    RationalMatrix J;
    Rat detJ;
    RationalMatrix e, h, f;
    std::vector<int> diagWeights;  // eigenvalue of h on each basis vector
};

SL2Triple build_sl2(const Partition& lam, const AlgebraType& alg);

/// Basis of a graded subspace of matrices; weights[i] is the ad-h weight
/// of mats[i].
struct WeightVectorBasis {
    std::vector<RationalMatrix> mats;
    std::vector<int> weights;

    int size() const { return static_cast<int>(mats.size()); }
};

/// Weight-graded basis of the algebra preserving the form of t:
/// X^T J + J X = 0, spanned by J^{-1}(E_ab - eps E_ba).
WeightVectorBasis lie_algebra_basis(const SL2Triple& t);

/// Weight-graded basis of {X in g : [y, X] = 0}.  Used with y = e for the
/// centralizer grading and with y = f for the Slodowy-slice coordinates.
WeightVectorBasis centralizer_basis(const SL2Triple& t, const RationalMatrix& y);

/// Membership test X^T J + J X = 0.
bool in_algebra(const RationalMatrix& x, const RationalMatrix& j);

/// Jordan type of a nilpotent matrix, from the ranks of its powers.
std::vector<int> jordan_type(const RationalMatrix& x);

/// Exact inverse; throws std::invalid_argument if singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Exact determinant, via the characteristic polynomial.
Rat determinant(const RationalMatrix& m);

}  // namespace nilslice
