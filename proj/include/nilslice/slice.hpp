#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilslice/orbit.hpp"
#include "nilslice/polymat.hpp"

namespace nilslice {

inline constexpr uint64_t kDefaultSeed = 90210u;

/// Deterministic, platform-independent RNG (splitmix64); the library never
/// uses std::rand so results are reproducible from the recorded seed.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t s) : state(s) {}
    uint64_t next();
};

/// Random rational with |numerator| and denominator bounded by 10^6.
Rat random_rational(SplitMix64& rng);

/// Point for trial number `trial` of a seeded run; independent of call order.
std::vector<Rat> random_point(int n, uint64_t seed, uint64_t trial);

/// Slodowy slice e + g^f with one coordinate per g^f basis vector; the
/// variable attached to a weight-(-m) vector carries table weight m, so
/// its graded degree is m + 2.
struct SliceContext {
    SL2Triple triple;
    WeightVectorBasis gE, gF;
    std::shared_ptr<const VarTable> coords;
    int ell = 0;                // number of generators (= rank)
    bool typeD = false;         // last generator is a Pfaffian
    std::vector<int> genDegrees;  // d_i
    int dimGe = 0;
};

SliceContext make_context(const Partition& lam, const AlgebraType& alg);

/// The matrix e + sum_l x_l Z_l with affine-linear polynomial entries.
PolyMatrix generic_point(const SliceContext& ctx);

/// kappa(q_i) for i = 1..ell (index 0 unused), truncated to standard
/// degree <= cap; a nonzero truncation pins the initial component exactly.
std::vector<MultiPoly> kappa_all_truncated(const SliceContext& ctx, int cap);

struct GeneratorReport {
    int index = 0;
    int generatorDegree = 0;  // d_i
    int slodowyDegree = 0;    // 2 d_i
    int delta = 0;
    bool slodowyHomogeneous = false;
    MultiPoly kappa;    // truncated; empty in evaluation mode
    MultiPoly initial;  // empty in evaluation mode
};

struct SliceReport {
    Partition lam;
    AlgebraType alg{};
    bool symbolic = false;
    uint64_t seed = 0;
    int ell = 0;
    int dimGe = 0;
    std::vector<GeneratorReport> gens;
    int sumDelta = 0;
    int defect = 0;
    int jacobianRank = 0;
    bool independent = false;
};

/// Full slice computation.  symbolic = full polynomial expansion with
/// adaptive truncation; otherwise an exact evaluation/interpolation probe
/// whose degree multiset is certified against the combinatorial degree sum.
SliceReport slice_report(const SliceContext& ctx, bool symbolic,
                         uint64_t seed = kDefaultSeed);

/// Max over `trials` seeded random points of the exact rank of the
/// Jacobian of `polys`.
int jacobian_rank(const std::vector<MultiPoly>& polys, int trials, uint64_t seed);

/// Variables eq1..eqell used to express relations among the initial
/// components.
std::shared_ptr<const VarTable> relation_vars(int ell);

enum class RelationMode { Identical, Randomized };

/// Checks that `expr`, after substituting the computed initial components
/// for eq1..eqell, vanishes.  In type D the last generator is computed as a
/// Pfaffian; even powers absorb the sign convention and odd powers are
/// accepted if either sign works.
bool verify_relation(const SliceContext& ctx, const MultiPoly& expr,
                     RelationMode mode, uint64_t seed = kDefaultSeed);

/// Block data of a partition with an even prefix: strictly decreasing
/// prefix values mu[s] with even multiplicities mult[s]; pairs 1..kprime/2
/// are grouped into index blocks I_s.
struct StarBlocks {
    int kprime = 0;
    std::vector<int> mu;
    std::vector<int> mult;
    std::vector<std::pair<int, int>> pairRange;  // per s: [first,last] 1-based pair indices
};

StarBlocks star_blocks(const Partition& lam);

/// Closed-form restricted invariant for block s, inner index j, as a
/// polynomial in z_1..z_(kprime/2).
MultiPoly pca3_predicted(const Partition& lam, int s, int j);
/// Same, addressed by the flat index idx = mult_1+...+mult_(s-1)+j.
MultiPoly pca3_predicted_flat(const Partition& lam, int idx);

/// Restriction computed from the matrix model: coefficient of
/// T^(N-2 nu_idx) of det(T - e - sum s_i w_i) with normalized per-block
/// lowest-weight directions, homogeneous part of degree idx, in z-vars.
MultiPoly pca3_observed(const Partition& lam, const AlgebraType& alg, int idx);

struct ModifiedGenerator {
    int replacedIndex = 0;   // which generator index (nu_j) is replaced
    int requiredBound = 0;   // proven lower bound on deg of the initial part
    bool boundHolds = false;
    int observedDegree = 0;  // min degree observed at random points
    std::string formula;     // human-readable definition of r
};

struct Tca3Certificate {
    bool applicable = false;
    int variant = 0;  // 1 or 2
    std::vector<ModifiedGenerator> modified;
    int modifiedDefect = 0;  // computed with the proven bounds
    int jacobianRank = 0;
    bool independent = false;
    int pfaffianSign = 1;  // sign choice when the Pfaffian enters odd powers
    bool success = false;
    std::string detail;
};

/// Modified-generator goodness certificate for a constant even prefix
/// (variant 1) or a length-4 all-even partition (variant 2).
Tca3Certificate tca3_certificate(const Partition& lam, const AlgebraType& alg,
                                 uint64_t seed = kDefaultSeed);

/// Exact values of the initial components at a point (Pfaffian-based for
/// the last type-D generator); deltas must be the certified degrees.
std::vector<Rat> initial_values_at(const SliceContext& ctx,
                                   const std::vector<Rat>& point,
                                   const std::vector<int>& deltas);

/// Coefficient lists by interpolation: coefficient vector of the
/// polynomial with values[i] at nodes[i].
std::vector<Rat> interpolate_coeffs(const std::vector<Rat>& nodes,
                                    const std::vector<Rat>& values);

}  // namespace nilslice
