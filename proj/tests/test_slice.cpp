#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "nilslice/slice.hpp"

using namespace nilslice;

namespace {

SliceReport symbolic_report(std::vector<int> parts, int dim) {
    const AlgebraType alg = AlgebraType::so(dim);
    const Partition lam = validate(parts, alg);
    SliceContext ctx = make_context(lam, alg);
    return slice_report(ctx, /*symbolic=*/true);
}

std::string golden_path(const std::string& name) {
    return std::string(NILSLICE_GOLDEN_DIR) + "/" + name;
}

std::string report_fingerprint(const SliceReport& rep) {
    std::ostringstream os;
    for (const GeneratorReport& g : rep.gens)
        os << "q" << g.index << " delta=" << g.delta
           << " initial=" << g.initial.to_string() << "\n";
    return os.str();
}

}  // namespace

TEST_CASE("minimal even-prefix orbit in so(5)") {
    SliceReport rep = symbolic_report({2, 2, 1}, 5);
    CHECK(rep.ell == 2);
    CHECK(rep.dimGe == 6);
    CHECK(rep.defect == 2);
    CHECK(rep.sumDelta == 3);
    CHECK(rep.gens[0].delta == 1);
    CHECK(rep.gens[1].delta == 2);
    CHECK(!rep.independent);
    for (const GeneratorReport& g : rep.gens) {
        CHECK(g.slodowyHomogeneous);
        // the restriction vanishes at the base point of the slice
        CHECK(g.kappa.evaluate(std::vector<Rat>(rep.dimGe, Rat(0))) == 0);
    }
}

TEST_CASE("very good orbit in so(7) has independent initial components") {
    SliceReport rep = symbolic_report({3, 3, 1}, 7);
    CHECK(rep.ell == 3);
    CHECK(rep.defect == 0);
    CHECK(rep.jacobianRank == 3);
    CHECK(rep.independent);
    CHECK(2 * rep.sumDelta == rep.dimGe + rep.ell);
    for (const GeneratorReport& g : rep.gens) CHECK(g.slodowyHomogeneous);
}

TEST_CASE("so(10) subregular-type orbit: degrees, relation, golden file") {
    SliceReport rep = symbolic_report({3, 3, 2, 2}, 10);
    CHECK(rep.dimGe == 17);
    const std::vector<int> expect{1, 2, 2, 3, 2};
    for (int i = 0; i < 5; ++i) CHECK(rep.gens[i].delta == expect[i]);
    CHECK(2 * rep.sumDelta <= rep.dimGe + rep.ell);
    CHECK(!rep.independent);

    const AlgebraType alg = AlgebraType::so(10);
    SliceContext ctx = make_context(validate({3, 3, 2, 2}, alg), alg);
    const MultiPoly rel =
        MultiPoly::parse(relation_vars(5), "eq4^2 - 4*eq3*eq5^2");
    CHECK(verify_relation(ctx, rel, RelationMode::Identical));
    CHECK(verify_relation(ctx, rel, RelationMode::Randomized));
    // a wrong relation must be rejected in both modes
    const MultiPoly bad = MultiPoly::parse(relation_vars(5), "eq4^2 - 4*eq3^2");
    CHECK(!verify_relation(ctx, bad, RelationMode::Identical));
    CHECK(!verify_relation(ctx, bad, RelationMode::Randomized));

    std::ifstream in(golden_path("so10_3-3-2-2.txt"), std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "golden file missing");
    std::ostringstream want;
    want << in.rdbuf();
    CHECK(report_fingerprint(rep) == want.str());
}

TEST_CASE("so(7) golden file") {
    SliceReport rep = symbolic_report({3, 3, 1}, 7);
    std::ifstream in(golden_path("so7_3-3-1.txt"), std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "golden file missing");
    std::ostringstream want;
    want << in.rdbuf();
    CHECK(report_fingerprint(rep) == want.str());
}

TEST_CASE("evaluation probe agrees with the symbolic engine") {
    const AlgebraType alg = AlgebraType::so(10);
    const Partition lam = validate({3, 3, 2, 2}, alg);
    SliceContext ctx = make_context(lam, alg);
    SliceReport sym = slice_report(ctx, true);
    SliceReport ev = slice_report(ctx, false);
    REQUIRE(sym.gens.size() == ev.gens.size());
    for (size_t i = 0; i < sym.gens.size(); ++i) {
        CHECK(sym.gens[i].delta == ev.gens[i].delta);
        CHECK(ev.gens[i].slodowyHomogeneous);
    }
    CHECK(sym.jacobianRank == ev.jacobianRank);
    CHECK(sym.sumDelta == ev.sumDelta);
}

TEST_CASE("predicted and observed restricted invariants") {
    const AlgebraType so12 = AlgebraType::so(12);
    const Partition p1 = validate({4, 4, 3, 1}, so12);
    // closed forms quoted for the prefix of one repeated even value
    CHECK(pca3_predicted_flat(p1, 1) ==
          MultiPoly::parse(VarTable::make({"z1"}, {0}), "-2*z1"));
    CHECK(pca3_predicted_flat(p1, 2) ==
          MultiPoly::parse(VarTable::make({"z1"}, {0}), "z1^2"));
    for (int j = 1; j <= 2; ++j)
        CHECK(pca3_predicted_flat(p1, j) == pca3_observed(p1, so12, j));

    const Partition p2 = validate({4, 4, 2, 2}, so12);
    const StarBlocks b = star_blocks(p2);
    CHECK(b.kprime == 4);
    CHECK(b.mu == std::vector<int>{4, 2});
    CHECK(b.mult == std::vector<int>{2, 2});
    for (int j = 1; j <= 4; ++j)
        CHECK(pca3_predicted_flat(p2, j) == pca3_observed(p2, so12, j));
}

TEST_CASE("modified-generator certificate for the so(5) orbit") {
    const AlgebraType alg = AlgebraType::so(5);
    const Partition lam = validate({2, 2, 1}, alg);
    const Tca3Certificate cert = tca3_certificate(lam, alg);
    CHECK(cert.applicable);
    CHECK(cert.variant == 1);
    REQUIRE(cert.modified.size() == 1);
    CHECK(cert.modified[0].replacedIndex == 2);
    CHECK(cert.modified[0].requiredBound == 3);
    CHECK(cert.modified[0].boundHolds);
    CHECK(cert.modifiedDefect <= 0);
    CHECK(cert.independent);
    CHECK(cert.success);
}

TEST_CASE("certificate does not apply off its hypotheses") {
    const AlgebraType alg = AlgebraType::so(10);
    const Tca3Certificate cert =
        tca3_certificate(validate({3, 3, 2, 2}, alg), alg);
    CHECK(!cert.applicable);
    CHECK(!cert.success);
}
