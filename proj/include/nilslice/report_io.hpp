#pragma once

#include <optional>
#include <string>

#include "nilslice/partition.hpp"
#include "nilslice/slice.hpp"

namespace nilslice {

/// Bumped whenever a change could alter any serialized output; part of
/// every cache key so stale entries can never be replayed.
inline constexpr const char* kEngineVersion = "1";

/// Stable-key-order JSON for a classification run.  The defect report is
/// absent for symplectic input, where the defect combinatorics do not apply.
std::string verdict_json(const Partition& lam, const AlgebraType& alg,
                         const Verdict& v, const std::optional<DefectReport>& dr);

/// Human-readable classification summary (one paragraph).
std::string verdict_text(const Partition& lam, const AlgebraType& alg,
                         const Verdict& v, const std::optional<DefectReport>& dr);

/// Stable-key-order JSON for a slice run (byte-identical across replays of
/// the same key).
std::string slice_report_json(const SliceReport& rep);

/// CSV classification table over both odd and even orthogonal algebras of
/// rank 1..maxRank.  Header:
/// rank,type,partition,n_lambda,s_lambda,d_lambda,defect,verdict,provenance
std::string classification_table_csv(int maxRank);

/// One-file-per-key JSON cache.  The directory is taken from the
/// NILSLICE_CACHE_DIR environment variable when set, else `.nilslice-cache`
/// under the current directory; it is created on first store.
class ReportCache {
public:
    ReportCache();
    explicit ReportCache(std::string dir);

    static std::string key_for(const Partition& lam, const AlgebraType& alg,
                               bool symbolic, uint64_t seed);

    std::optional<std::string> load(const std::string& key) const;
    void store(const std::string& key, const std::string& payload) const;

    const std::string& dir() const { return dir_; }

private:
    std::string dir_;
};

}  // namespace nilslice
