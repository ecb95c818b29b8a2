#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nilslice {

enum class AlgKind { A, B, C, D };

/// Classical algebra identified by its kind, rank and the dimension of the
/// natural module V.  so(2l+1) is B_l, so(2l) is D_l, sp(2l) is C_l.
struct AlgebraType {
    AlgKind kind;
    int rank;
    int dimV;

    static AlgebraType so(int N);
    static AlgebraType sp(int N);
    bool orthogonal() const { return kind == AlgKind::B || kind == AlgKind::D; }
};

const char* kind_name(AlgKind k);

/// Weakly decreasing sequence of positive integers; total is the dimension
/// of the module it partitions.
struct Partition {
    std::vector<int> parts;
    int total = 0;

    int k() const { return static_cast<int>(parts.size()); }
    std::string to_string() const;
};

struct PartitionError : std::runtime_error {
    enum Code { NotDecreasing, WrongTotal, BadMultiplicity };
    Code code;
    int value;  // offending part value for BadMultiplicity, else 0
    PartitionError(Code c, int v, const std::string& msg)
        : std::runtime_error(msg), code(c), value(v) {}
};

/// Checks parts against the orbit-validity rules for alg and wraps them.
/// Orthogonal: every even value occurs an even number of times.
/// Symplectic: every odd value occurs an even number of times.
Partition validate(const std::vector<int>& parts, const AlgebraType& alg);

/// Validity test without exception (orthogonal rules, any total).
bool valid_orthogonal_parts(const std::vector<int>& parts);

int n_lambda(const std::vector<int>& parts);  // number of even parts

/// Signed sum over the fixed points of the pairing involution: equal even
/// parts are paired consecutively, so the fixed indices are exactly those
/// carrying odd parts.  Returns sum of odd fixed indices minus sum of even
/// fixed indices (indices are 1-based).
int s_lambda(const Partition& p);

/// Which of the five tail-parity conditions the sequence satisfies (1..5).
/// Exactly one holds for every valid orthogonal sequence.
int condition_number(const std::vector<int>& parts);

Partition lambda_star(const Partition& p);

int d_lambda(const std::vector<int>& parts);
inline int d_lambda(const Partition& p) { return d_lambda(p.parts); }

struct DefectReport {
    int nLambda = 0;
    int sLambda = 0;
    int dLambda = 0;
    int k = 0;
    int dimCentralizer = 0;
    int sumDelta = 0;  // back-solved from defect and dimCentralizer
    int defect = 0;    // dim g^e + rank - 2*sumDelta
};

/// Closed form for dim g^e from the dual partition:
/// orthogonal (sum of squares - #odd)/2, symplectic (sum + #odd)/2.
int dim_centralizer(const Partition& p, const AlgebraType& alg);

/// Computes the defect through two independent expressions (the signed-sum
/// form and the recursive d-form), asserts they agree, and back-solves the
/// degree sum.
DefectReport defect(const Partition& p, const AlgebraType& alg);

bool is_very_good(const std::vector<int>& parts);
inline bool is_very_good(const Partition& p) { return is_very_good(p.parts); }

/// Independent decision procedure for very-goodness: block-concatenation
/// characterization (odd length: odd head plus same-parity pairs; even
/// length: split into both-odd pairs and odd-even...-even-odd blocks).
bool is_very_good_concat(const std::vector<int>& parts);

/// If some even k' in {2..k} has all of parts[0..k'-1] even and a very good
/// tail, returns that k' (it is unique: the tail must start with an odd
/// part); otherwise nullopt.
std::optional<int> satisfies_star(const Partition& p);

/// Half partial sums nu_i = (l_1+...+l_i)/2 for i = 1..kprime.
std::vector<int> nu_sequence(const Partition& p, int kprime);

enum class VerdictTag {
    GoodVeryGood,
    GoodDefectZero,
    GoodTca3i,
    GoodTca3ii,
    GoodTypeAC,
    PolynomialNotGood,
    NotPolynomial,
    Unknown,
};

const char* tag_name(VerdictTag t);
bool tag_is_good(VerdictTag t);

struct Verdict {
    VerdictTag tag;
    std::string provenance;
};

Verdict classify(const Partition& p, const AlgebraType& alg);

/// Catalogued generator degrees for the small-rank orbits whose invariant
/// ring is polynomial although the element is not good; empty if p is not
/// one of them.
std::vector<int> catalogued_not_good_degrees(const Partition& p, const AlgebraType& alg);

/// All orthogonally valid partitions of N, weakly decreasing, in
/// lexicographically decreasing order.
std::vector<std::vector<int>> enumerate_orthogonal_partitions(int N);

}  // namespace nilslice
