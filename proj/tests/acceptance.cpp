// Acceptance harness: runs the ten primary checks and prints one line per
// criterion.  Exit code 0 iff every criterion passes.  An optional argument
// restricts the run to a comma-separated list of criterion numbers.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nilslice/fixtures.hpp"
#include "nilslice/slice.hpp"

using namespace nilslice;
using Clock = std::chrono::steady_clock;

namespace {

bool gAllHomogeneous = true;  // aggregated over criteria 3-5
int gSlicesChecked = 0;

void note_homogeneity(const SliceReport& rep) {
    for (const GeneratorReport& g : rep.gens)
        gAllHomogeneous = gAllHomogeneous && g.slodowyHomogeneous;
    ++gSlicesChecked;
}

// ---------------------------------------------------------------- 1

bool table_reproduction(std::string& detail) {
    // frozen non-good rows for ranks up to 6 (everything else must be good)
    const std::map<std::pair<int, char>, std::set<std::vector<int>>> expected = {
        {{5, 'B'}, {{3, 3, 2, 2, 1}}},
        {{5, 'D'}, {{3, 3, 2, 2}}},
        {{6, 'B'}, {{5, 3, 2, 2, 1}, {4, 4, 2, 2, 1}, {3, 3, 2, 2, 1, 1, 1}}},
        {{6, 'D'}, {{5, 3, 2, 2}, {3, 3, 2, 2, 1, 1}}},
    };
    const std::map<std::vector<int>, std::vector<int>> expectedDegrees = {
        {{3, 3, 2, 2, 1}, {1, 1, 2, 2, 7}},
        {{3, 3, 2, 2}, {1, 1, 2, 2, 5}},
        {{5, 3, 2, 2, 1}, {1, 1, 1, 2, 2, 7}},
        {{4, 4, 2, 2, 1}, {1, 1, 2, 2, 3, 6}},
        {{3, 3, 2, 2, 1, 1, 1}, {1, 1, 2, 2, 6, 7}},
        {{5, 3, 2, 2}, {1, 1, 1, 2, 2, 5}},
        {{3, 3, 2, 2, 1, 1}, {1, 1, 2, 2, 3, 7}},
    };
    int orbits = 0;
    for (int r = 1; r <= 6; ++r) {
        for (const char type : {'B', 'D'}) {
            if (type == 'D' && r < 2) continue;
            const int N = type == 'B' ? 2 * r + 1 : 2 * r;
            const AlgebraType alg = AlgebraType::so(N);
            std::set<std::vector<int>> notGood;
            for (const auto& parts : enumerate_orthogonal_partitions(N)) {
                ++orbits;
                const Partition lam = validate(parts, alg);
                const Verdict v = classify(lam, alg);
                if (v.tag == VerdictTag::Unknown) {
                    detail = "unclassified orbit " + lam.to_string();
                    return false;
                }
                if (!tag_is_good(v.tag)) {
                    notGood.insert(parts);
                    auto it = expectedDegrees.find(parts);
                    if (it == expectedDegrees.end() ||
                        catalogued_not_good_degrees(lam, alg) != it->second) {
                        detail = "degree list mismatch for " + lam.to_string();
                        return false;
                    }
                }
            }
            const auto it = expected.find({r, type});
            const std::set<std::vector<int>> want =
                it == expected.end() ? std::set<std::vector<int>>{} : it->second;
            if (notGood != want) {
                std::ostringstream os;
                os << "non-good set mismatch at rank " << r << type;
                detail = os.str();
                return false;
            }
        }
    }
    std::ostringstream os;
    os << orbits << " orbits classified";
    detail = os.str();
    return true;
}

// ---------------------------------------------------------------- 2

bool defect_equivalence(std::string& detail) {
    // defect() evaluates both closed forms and throws on any disagreement
    int count = 0;
    for (int n = 2; n <= 20; ++n) {
        const AlgebraType alg = AlgebraType::so(n);
        for (const auto& parts : enumerate_orthogonal_partitions(n)) {
            try {
                (void)defect(validate(parts, alg), alg);
            } catch (const std::exception& e) {
                detail = std::string("mismatch: ") + e.what();
                return false;
            }
            ++count;
        }
    }
    std::ostringstream os;
    os << count << " partitions, both formulas agree";
    detail = os.str();
    return true;
}

// ---------------------------------------------------------------- 3

bool example_so10(std::string& detail) {
    const AlgebraType alg = AlgebraType::so(10);
    const Partition lam = validate({3, 3, 2, 2}, alg);
    SliceContext ctx = make_context(lam, alg);
    SliceReport rep = slice_report(ctx, /*symbolic=*/true);
    note_homogeneity(rep);
    if (rep.dimGe != 17) {
        detail = "centralizer dimension mismatch";
        return false;
    }
    const std::vector<int> expect{1, 2, 2, 3, 2};
    for (int i = 0; i < rep.ell; ++i)
        if (rep.gens[i].delta != expect[i]) {
            detail = "degree mismatch";
            return false;
        }
    const MultiPoly rel = MultiPoly::parse(relation_vars(5), "eq4^2 - 4*eq3*eq5^2");
    if (!verify_relation(ctx, rel, RelationMode::Identical)) {
        detail = "relation does not expand to zero";
        return false;
    }
    detail = "degrees 1,2,2,3,2 and identical relation verified";
    return true;
}

// ---------------------------------------------------------------- 4

bool example_so14(std::string& detail) {
    const AlgebraType alg = AlgebraType::so(14);
    const Partition lam = validate({3, 3, 2, 2, 2, 2}, alg);
    SliceContext ctx = make_context(lam, alg);
    SliceReport rep = slice_report(ctx, /*symbolic=*/false);
    note_homogeneity(rep);
    if (rep.dimGe != 37) {
        detail = "centralizer dimension mismatch";
        return false;
    }
    const std::vector<int> expect{1, 2, 2, 3, 4, 5, 3};
    for (int i = 0; i < rep.ell; ++i)
        if (rep.gens[i].delta != expect[i]) {
            detail = "degree mismatch";
            return false;
        }
    auto vt = relation_vars(7);
    for (const char* text :
         {"16*eq3^2*eq5^2 + eq4^4 - 8*eq3*eq5*eq4^2 - 64*eq3^3*eq7^2",
          "eq3*eq6^2 - eq7^2*eq4^2"}) {
        if (!verify_relation(ctx, MultiPoly::parse(vt, text),
                             RelationMode::Randomized)) {
            detail = std::string("relation fails at random points: ") + text;
            return false;
        }
    }
    detail = "degrees 1,2,2,3,4,5,3 and both relations verified at 50 points";
    return true;
}

// ---------------------------------------------------------------- 5

bool criterion_iff(std::string& detail) {
    int count = 0;
    for (int n = 2; n <= 11; ++n) {
        const AlgebraType alg = AlgebraType::so(n);
        if (alg.rank < 1) continue;
        for (const auto& parts : enumerate_orthogonal_partitions(n)) {
            const Partition lam = validate(parts, alg);
            try {
                SliceContext ctx = make_context(lam, alg);
                SliceReport rep = slice_report(ctx, /*symbolic=*/false);
                note_homogeneity(rep);
                const DefectReport dr = defect(lam, alg);
                if ((rep.jacobianRank == rep.ell) != (dr.defect == 0)) {
                    detail = "iff violated at so(" + std::to_string(n) + ") " +
                             lam.to_string();
                    return false;
                }
            } catch (const std::exception& e) {
                detail = "so(" + std::to_string(n) + ") " + lam.to_string() +
                         ": " + e.what();
                return false;
            }
            ++count;
        }
    }
    std::ostringstream os;
    os << count << " orbits, independence iff zero defect";
    detail = os.str();
    return true;
}

// ---------------------------------------------------------------- 6

bool homogeneity(std::string& detail) {
    std::ostringstream os;
    os << "every restricted generator graded-homogeneous of degree 2d_i on "
       << gSlicesChecked << " slices";
    detail = os.str();
    if (gSlicesChecked == 0) {
        detail = "criteria 3-5 did not run; nothing to aggregate";
        return false;
    }
    return gAllHomogeneous;
}

// ---------------------------------------------------------------- 7

bool closed_form(std::string& detail) {
    struct Case {
        std::vector<int> parts;
        int dim;
    };
    int checks = 0;
    for (const Case& c : {Case{{4, 4, 3, 1}, 12}, Case{{4, 4, 2, 2}, 12},
                          Case{{6, 6, 3, 1}, 16}}) {
        const AlgebraType alg = AlgebraType::so(c.dim);
        const Partition lam = validate(c.parts, alg);
        const StarBlocks b = star_blocks(lam);
        for (int j = 1; j <= b.kprime; ++j) {
            if (!(pca3_predicted_flat(lam, j) == pca3_observed(lam, alg, j))) {
                detail = "mismatch at " + lam.to_string() + " index " +
                         std::to_string(j);
                return false;
            }
            ++checks;
        }
    }
    std::ostringstream os;
    os << checks << " exact polynomial identities";
    detail = os.str();
    return true;
}

// ---------------------------------------------------------------- 8

bool certificates(std::string& detail) {
    struct Case {
        std::vector<int> parts;
        int dim;
    };
    for (const Case& c : {Case{{2, 2, 1}, 5}, Case{{4, 4, 3, 1}, 12},
                          Case{{4, 4, 2, 2}, 12}}) {
        const AlgebraType alg = AlgebraType::so(c.dim);
        const Partition lam = validate(c.parts, alg);
        const Tca3Certificate cert = tca3_certificate(lam, alg);
        if (!cert.success) {
            detail = "certificate failed for so(" + std::to_string(c.dim) + ") " +
                     lam.to_string() + " (" + cert.detail + ")";
            return false;
        }
    }
    detail = "all three modified-generator certificates succeed";
    return true;
}

// ---------------------------------------------------------------- 9

void all_partitions_rec(int n, int maxPart, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxPart); p >= 1; --p) {
        cur.push_back(p);
        all_partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

bool round_trip(std::string& detail) {
    int count = 0;
    for (int n = 2; n <= 14; ++n) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        all_partitions_rec(n, n, cur, parts);
        for (const bool sympl : {false, true}) {
            if (sympl && n % 2 != 0) continue;
            const AlgebraType alg =
                sympl ? AlgebraType::sp(n) : AlgebraType::so(n);
            for (const auto& p : parts) {
                Partition lam;
                try {
                    lam = validate(p, alg);
                } catch (const PartitionError&) {
                    continue;
                }
                const SL2Triple t = build_sl2(lam, alg);
                if (jordan_type(t.e) != p) {
                    detail = "Jordan type mismatch for " + lam.to_string();
                    return false;
                }
                if (centralizer_basis(t, t.e).size() != dim_centralizer(lam, alg)) {
                    detail = "centralizer dimension mismatch for " + lam.to_string();
                    return false;
                }
                ++count;
            }
        }
    }
    std::ostringstream os;
    os << count << " orbits round-tripped, closed form matches the kernel oracle";
    detail = os.str();
    return true;
}

// ---------------------------------------------------------------- 10

bool fixtures(std::string& detail) {
    const FixtureCheckResult res = check_exceptional_fixtures();
    std::ostringstream os;
    os << res.rowsChecked << " rows, " << res.discrepancies << " discrepancies";
    detail = os.str();
    return res.discrepancies == 0;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only;
    if (argc > 1) {
        std::stringstream ss(argv[1]);
        std::string tok;
        while (std::getline(ss, tok, ',')) only.insert(std::stoi(tok));
    }

    struct Criterion {
        int id;
        const char* name;
        bool (*fn)(std::string&);
    };
    const Criterion list[] = {
        {1, "classification table ranks <= 6", table_reproduction},
        {2, "defect formula equivalence |lambda| <= 20", defect_equivalence},
        {3, "so(10) worked orbit, identical mode", example_so10},
        {4, "so(14) worked orbit, randomized mode", example_so14},
        {5, "independence iff zero defect, |lambda| <= 11", criterion_iff},
        {6, "graded homogeneity on all computed slices", homogeneity},
        {7, "closed-form restricted invariants", closed_form},
        {8, "modified-generator certificates", certificates},
        {9, "construction round-trip |lambda| <= 14", round_trip},
        {10, "exceptional fixture tables", fixtures},
    };

    bool allPass = true;
    for (const Criterion& c : list) {
        if (!only.empty() && !only.count(c.id)) continue;
        std::string detail;
        const auto start = Clock::now();
        bool ok = false;
        try {
            ok = c.fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(Clock::now() - start).count();
        std::ostringstream line;
        line << "criterion " << c.id << " [" << c.name << "]: "
             << (ok ? "PASS" : "FAIL") << " (" << detail << ", "
             << static_cast<int>(secs * 10) / 10.0 << "s)";
        std::cout << line.str() << std::endl;
        allPass = allPass && ok;
    }
    return allPass ? 0 : 1;
}
