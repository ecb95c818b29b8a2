#include "nilslice/fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nilslice {

const std::vector<ExceptionalFixture>& exceptional_fixtures() {
    static const std::vector<ExceptionalFixture> rows = {
        // E6: matrix model of dimension 27, invariant degrees 2,5,6,8,9,12
        {"E6", 6, "E6", "22222;2", 6, {17, 9, 1}, {1, 1, 1, 1, 1, 1},
         {2, 8, 10, 14, 16, 22}, 16, 6, 6},
        {"E6", 6, "E6(a1)", "22022;2", 8, {13, 9, 5}, {1, 1, 1, 1, 1, 1},
         {2, 8, 10, 14, 16, 22}, 16, 6, 7},
        {"E6", 6, "D5", "20202;2", 10, {11, 9, 5, 1, 1}, {1, 1, 1, 1, 1, 1},
         {2, 8, 10, 14, 16, 22}, 14, 6, 8},
        {"E6", 6, "A5+A1", "20202;0", 12, {9, 7, 5, 5, 1}, {1, 1, 1, 1, 1, 2},
         {2, 8, 10, 14, 16, 20}, 10, 7, 9},
        {"E6", 6, "D5(a1)", "11011;2", 14, {8, 7, 6, 3, 2, 1}, {1, 1, 1, 1, 2, 2},
         {2, 8, 10, 14, 14, 20}, 10, 8, 10},
        {"E6", 6, "A5", "21012;1", 14, {9, 6, 6, 5, 1}, {1, 1, 1, 1, 1, 2},
         {2, 8, 10, 14, 16, 20}, 10, 7, 10},
        {"E6", 6, "A4+A1", "11011;1", 16, {7, 6, 5, 4, 3, 2}, {1, 1, 1, 2, 2, 2},
         {2, 8, 10, 12, 14, 20}, 8, 9, 11},
        {"E6", 6, "D4", "00200;2", 18, {7, 7, 7, 1, 1, 1, 1, 1, 1},
         {1, 1, 1, 2, 2, 2}, {2, 8, 10, 12, 14, 20}, 10, 9, 12},
        {"E6", 6, "A3+2A1", "00200;0", 20, {5, 5, 5, 3, 3, 3, 1, 1, 1},
         {1, 1, 2, 2, 2, 3}, {2, 8, 8, 12, 14, 18}, 6, 11, 13},
        {"E6", 6, "A1+2A2", "10101;0", 24, {5, 4, 4, 3, 3, 3, 2, 2, 1},
         {1, 1, 2, 2, 2, 3}, {2, 8, 8, 12, 14, 18}, 5, 11, 15},
        // F4: matrix model of dimension 26, invariant degrees 2,6,8,12
        {"F4", 4, "F4", "2222", 4, {17, 9}, {1, 1, 1, 1}, {2, 10, 14, 22}, 22, 4, 4},
        {"F4", 4, "B4", "2202", 6, {11, 9, 5, 1}, {1, 1, 1, 1}, {2, 10, 14, 22},
         14, 4, 5},
        {"F4", 4, "C3+A1", "0202", 8, {9, 7, 5, 5}, {1, 1, 1, 2}, {2, 10, 14, 20},
         10, 5, 6},
        {"F4", 4, "C3", "1012", 10, {9, 6, 6, 5}, {1, 1, 1, 2}, {2, 10, 14, 20},
         10, 5, 7},
        {"F4", 4, "B3", "2200", 10, {7, 7, 7, 1, 1, 1, 1, 1}, {1, 1, 2, 2},
         {2, 10, 12, 20}, 10, 6, 7},
        {"F4", 4, "A2+~A2", "0200", 12, {5, 5, 5, 3, 3, 3, 1, 1}, {1, 2, 2, 3},
         {2, 8, 12, 18}, 6, 8, 8},
        {"F4", 4, "B2+A1", "1010", 14, {5, 5, 4, 4, 3, 2, 2, 1}, {1, 2, 2, 3},
         {2, 8, 12, 18}, 6, 8, 9},
        {"F4", 4, "~A2+A1", "0101", 16, {5, 4, 4, 3, 3, 3, 2, 2}, {1, 2, 2, 3},
         {2, 8, 12, 18}, 5, 8, 10},
        // G2: matrix model of dimension 7, invariant degrees 2,6
        {"G2", 2, "G2", "22", 2, {7}, {1, 1}, {2, 10}, 10, 2, 2},
        {"G2", 2, "A1+~A1", "02", 4, {3, 3, 1}, {1, 2}, {2, 8}, 4, 3, 3},
        {"G2", 2, "~A1", "10", 6, {3, 2, 2}, {1, 3}, {2, 6}, 3, 4, 4},
        {"G2", 2, "A1", "01", 8, {2, 2, 1, 1, 1}, {1, 4}, {2, 4}, 2, 5, 5},
    };
    return rows;
}

std::vector<int> exceptional_invariant_degrees(const std::string& group) {
    if (group == "E6") return {2, 5, 6, 8, 9, 12};
    if (group == "F4") return {2, 6, 8, 12};
    if (group == "G2") return {2, 6};
    throw std::invalid_argument("unknown exceptional group: " + group);
}

namespace {

int module_dimension(const std::string& group) {
    if (group == "E6") return 27;
    if (group == "F4") return 26;
    return 7;
}

}  // namespace

FixtureCheckResult check_exceptional_fixtures() {
    FixtureCheckResult res;
    for (const ExceptionalFixture& f : exceptional_fixtures()) {
        ++res.rowsChecked;
        auto complain = [&](const std::string& what) {
            ++res.discrepancies;
            res.messages.push_back(f.group + " " + f.label + ": " + what);
        };
        const std::vector<int> d = exceptional_invariant_degrees(f.group);
        if (static_cast<int>(f.degrees.size()) != f.rank ||
            static_cast<int>(f.adhWeights.size()) != f.rank) {
            complain("wrong number of generator entries");
            continue;
        }
        const int degSum = std::accumulate(f.degrees.begin(), f.degrees.end(), 0);
        if (degSum != f.sigma) {
            std::ostringstream os;
            os << "degree sum " << degSum << " != recorded " << f.sigma;
            complain(os.str());
        }
        if ((f.dimGe + f.rank) % 2 != 0 || (f.dimGe + f.rank) / 2 != f.sigmaPrime) {
            std::ostringstream os;
            os << "(dimGe + rank)/2 = " << (f.dimGe + f.rank) / 2.0
               << " != recorded " << f.sigmaPrime;
            complain(os.str());
        }
        for (int i = 0; i < f.rank; ++i)
            if (f.adhWeights[i] + 2 * f.degrees[i] != 2 * d[i]) {
                std::ostringstream os;
                os << "weight identity fails at generator " << i + 1;
                complain(os.str());
            }
        const int tot =
            std::accumulate(f.partition.begin(), f.partition.end(), 0);
        if (tot != module_dimension(f.group)) {
            std::ostringstream os;
            os << "partition total " << tot << " != module dimension";
            complain(os.str());
        }
        if (f.group == "G2" && f.sigma != f.sigmaPrime)
            complain("degree sum differs from the half-sum bound");
    }
    return res;
}

}  // namespace nilslice
