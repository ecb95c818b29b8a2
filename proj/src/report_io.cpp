#include "nilslice/report_io.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nilslice {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string algebra_name(const AlgebraType& alg) {
    std::ostringstream os;
    os << (alg.kind == AlgKind::C ? "sp" : "so") << "(" << alg.dimV << ")";
    return os.str();
}

ordered_json partition_json(const Partition& lam) {
    ordered_json a = ordered_json::array();
    for (int p : lam.parts) a.push_back(p);
    return a;
}

ordered_json defect_json(const DefectReport& dr) {
    ordered_json j;
    j["n_lambda"] = dr.nLambda;
    j["s_lambda"] = dr.sLambda;
    j["d_lambda"] = dr.dLambda;
    j["k"] = dr.k;
    j["dim_centralizer"] = dr.dimCentralizer;
    j["sum_delta"] = dr.sumDelta;
    j["defect"] = dr.defect;
    return j;
}

}  // namespace

std::string verdict_json(const Partition& lam, const AlgebraType& alg,
                         const Verdict& v, const std::optional<DefectReport>& dr) {
    ordered_json j;
    j["algebra"] = algebra_name(alg);
    j["rank"] = alg.rank;
    j["partition"] = partition_json(lam);
    j["verdict"] = tag_name(v.tag);
    j["good"] = tag_is_good(v.tag);
    j["provenance"] = v.provenance;
    j["defect_report"] = dr ? defect_json(*dr) : ordered_json(nullptr);
    return j.dump(2) + "\n";
}

std::string verdict_text(const Partition& lam, const AlgebraType& alg,
                         const Verdict& v, const std::optional<DefectReport>& dr) {
    std::ostringstream os;
    os << algebra_name(alg) << " partition " << lam.to_string() << "\n"
       << "verdict: " << tag_name(v.tag) << (tag_is_good(v.tag) ? " (good)" : "")
       << "\n"
       << "provenance: " << v.provenance << "\n";
    if (dr)
        os << "defect: " << dr->defect << "  (n=" << dr->nLambda
           << ", s=" << dr->sLambda << ", d=" << dr->dLambda
           << ", dim g^e=" << dr->dimCentralizer
           << ", degree sum=" << dr->sumDelta << ")\n";
    return os.str();
}

std::string slice_report_json(const SliceReport& rep) {
    ordered_json j;
    j["engine_version"] = kEngineVersion;
    j["algebra"] = algebra_name(rep.alg);
    j["partition"] = partition_json(rep.lam);
    j["mode"] = rep.symbolic ? "symbolic" : "evaluation";
    j["seed"] = rep.seed;
    j["rank"] = rep.ell;
    j["dim_centralizer"] = rep.dimGe;
    j["sum_delta"] = rep.sumDelta;
    j["defect"] = rep.defect;
    j["jacobian_rank"] = rep.jacobianRank;
    j["independent"] = rep.independent;
    ordered_json gens = ordered_json::array();
    for (const GeneratorReport& g : rep.gens) {
        ordered_json gj;
        gj["index"] = g.index;
        gj["generator_degree"] = g.generatorDegree;
        gj["graded_degree"] = g.slodowyDegree;
        gj["delta"] = g.delta;
        gj["graded_homogeneous"] = g.slodowyHomogeneous;
        if (rep.symbolic) {
            gj["initial"] = g.initial.to_string();
            gj["kappa_truncated"] = g.kappa.to_string();
        }
        gens.push_back(std::move(gj));
    }
    j["generators"] = std::move(gens);
    return j.dump(2) + "\n";
}

std::string classification_table_csv(int maxRank) {
    std::ostringstream os;
    os << "rank,type,partition,n_lambda,s_lambda,d_lambda,defect,verdict,provenance\n";
    for (int r = 1; r <= maxRank; ++r) {
        for (const char type : {'B', 'D'}) {
            const int N = type == 'B' ? 2 * r + 1 : 2 * r;
            if (type == 'D' && r < 2) continue;
            const AlgebraType alg = AlgebraType::so(N);
            for (const std::vector<int>& parts : enumerate_orthogonal_partitions(N)) {
                const Partition lam = validate(parts, alg);
                const DefectReport dr = defect(lam, alg);
                const Verdict v = classify(lam, alg);
                os << r << ',' << type << ',';
                for (size_t i = 0; i < parts.size(); ++i)
                    os << (i ? "+" : "") << parts[i];
                os << ',' << dr.nLambda << ',' << dr.sLambda << ',' << dr.dLambda
                   << ',' << dr.defect << ',' << tag_name(v.tag) << ",\""
                   << v.provenance << "\"\n";
            }
        }
    }
    return os.str();
}

ReportCache::ReportCache() {
    const char* env = std::getenv("NILSLICE_CACHE_DIR");
    dir_ = env && *env ? env : ".nilslice-cache";
}

ReportCache::ReportCache(std::string dir) : dir_(std::move(dir)) {}

std::string ReportCache::key_for(const Partition& lam, const AlgebraType& alg,
                                 bool symbolic, uint64_t seed) {
    std::ostringstream os;
    os << (alg.kind == AlgKind::C ? "sp" : "so") << alg.dimV << "_";
    for (size_t i = 0; i < lam.parts.size(); ++i)
        os << (i ? "-" : "") << lam.parts[i];
    os << "_" << (symbolic ? "sym" : "eval") << "_seed" << seed << "_v"
       << kEngineVersion;
    return os.str();
}

std::optional<std::string> ReportCache::load(const std::string& key) const {
    const fs::path p = fs::path(dir_) / (key + ".json");
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void ReportCache::store(const std::string& key, const std::string& payload) const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    const fs::path p = fs::path(dir_) / (key + ".json");
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << payload;
}

}  // namespace nilslice
