#pragma once

#include <string>
#include <vector>

namespace nilslice {

/// One frozen row of reference data for a nilpotent orbit in an exceptional
/// Lie algebra, recorded in its smallest faithful matrix model.
struct ExceptionalFixture {
    std::string group;         // "E6", "F4" or "G2"
    int rank = 0;              // rank of the group (= number of generators)
    std::string label;         // Bala-Carter label of the orbit
    std::string weightedDynkin;  // weighted Dynkin diagram, digits per node
    int dimGe = 0;             // dimension of the centralizer of e
    std::vector<int> partition;  // Jordan type in the small module
    std::vector<int> degrees;  // restricted degrees of the generators
    std::vector<int> adhWeights;  // grading weights of the generator directions
    int maxAdhEigenvalue = 0;  // largest grading eigenvalue on the algebra
    int sigma = 0;             // recorded degree sum
    int sigmaPrime = 0;        // recorded (dimGe + rank) / 2
};

const std::vector<ExceptionalFixture>& exceptional_fixtures();

/// Invariant degrees of the group (needed for the weight identity check).
std::vector<int> exceptional_invariant_degrees(const std::string& group);

struct FixtureCheckResult {
    int rowsChecked = 0;
    int discrepancies = 0;
    std::vector<std::string> messages;
};

/// Cross-checks every fixture row: the recorded degree sum against the
/// listed degrees, the recorded half-sum against (dimGe + rank)/2, the
/// weight identity adhWeights[i] + 2*degrees[i] = 2*d_i, the module
/// dimension carried by the partition, and the extra degree-sum identity
/// that holds for every G2 row.
FixtureCheckResult check_exceptional_fixtures();

}  // namespace nilslice
