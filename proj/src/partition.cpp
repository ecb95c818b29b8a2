#include "nilslice/partition.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

namespace nilslice {

AlgebraType AlgebraType::so(int N) {
    if (N < 2) throw std::invalid_argument("so(N) needs N >= 2");
    if (N % 2 == 1) return {AlgKind::B, (N - 1) / 2, N};
    return {AlgKind::D, N / 2, N};
}

AlgebraType AlgebraType::sp(int N) {
    if (N < 2 || N % 2 == 1) throw std::invalid_argument("sp(N) needs even N >= 2");
    return {AlgKind::C, N / 2, N};
}

const char* kind_name(AlgKind k) {
    switch (k) {
        case AlgKind::A: return "A";
        case AlgKind::B: return "B";
        case AlgKind::C: return "C";
        case AlgKind::D: return "D";
    }
    return "?";
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
    }
    os << ')';
    return os.str();
}

namespace {

// Value -> multiplicity, for the parity-multiplicity rule.
std::map<int, int> multiplicities(const std::vector<int>& parts) {
    std::map<int, int> m;
    for (int v : parts) ++m[v];
    return m;
}

bool weakly_decreasing(const std::vector<int>& parts) {
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) return false;
    return true;
}

}  // namespace

Partition validate(const std::vector<int>& parts, const AlgebraType& alg) {
    if (parts.empty()) throw std::invalid_argument("empty partition");
    for (int v : parts)
        if (v < 1) throw PartitionError(PartitionError::NotDecreasing, v, "parts must be positive");
    if (!weakly_decreasing(parts))
        throw PartitionError(PartitionError::NotDecreasing, 0, "parts must be weakly decreasing");
    int total = std::accumulate(parts.begin(), parts.end(), 0);
    if (total != alg.dimV) {
        std::ostringstream os;
        os << "parts sum to " << total << ", expected " << alg.dimV;
        throw PartitionError(PartitionError::WrongTotal, total, os.str());
    }
    if (alg.kind != AlgKind::A) {
        // Orthogonal: even values need even multiplicity; symplectic: odd values.
        const int badParity = alg.orthogonal() ? 0 : 1;
        for (const auto& [value, mult] : multiplicities(parts)) {
            if (value % 2 == badParity && mult % 2 != 0) {
                std::ostringstream os;
                os << "part " << value << " occurs " << mult << " times";
                throw PartitionError(PartitionError::BadMultiplicity, value, os.str());
            }
        }
    }
    return Partition{parts, total};
}

bool valid_orthogonal_parts(const std::vector<int>& parts) {
    if (parts.empty() || !weakly_decreasing(parts) || parts.back() < 1) return false;
    for (const auto& [value, mult] : multiplicities(parts))
        if (value % 2 == 0 && mult % 2 != 0) return false;
    return true;
}

int n_lambda(const std::vector<int>& parts) {
    return static_cast<int>(std::count_if(parts.begin(), parts.end(),
                                          [](int v) { return v % 2 == 0; }));
}

int s_lambda(const Partition& p) {
    int s = 0;
    for (int i = 1; i <= p.k(); ++i) {
        if (p.parts[i - 1] % 2 == 0) continue;  // paired, not fixed
        s += (i % 2 == 1) ? i : -i;
    }
    return s;
}

int condition_number(const std::vector<int>& parts) {
    const int k = static_cast<int>(parts.size());
    if (k == 1) return 5;
    const bool lastOdd = parts[k - 1] % 2 != 0;
    const bool prevOdd = parts[k - 2] % 2 != 0;
    if (lastOdd && prevOdd) return 1;
    if (!lastOdd && !prevOdd) return 2;
    if (!lastOdd) throw std::logic_error("condition_number: unreachable parity pattern");
    // Last part odd, previous even: locate the largest odd index below k-1.
    int j = 0;
    for (int i = k - 2; i >= 1; --i) {
        if (parts[i - 1] % 2 != 0) { j = i; break; }
    }
    if (j == 0) return 5;
    if (j == 1 && k > 3) return 3;
    if (j >= 2 && k > 4) return 4;
    throw std::logic_error("condition_number: no condition applies (invalid sequence?)");
}

namespace {

// Largest odd index k' in {2..k-2} with an all-even run up to k-1; the
// truncation point used when condition (4) holds.
int condition4_kprime(const std::vector<int>& parts) {
    const int k = static_cast<int>(parts.size());
    for (int i = k - 2; i >= 2; --i)
        if (parts[i - 1] % 2 != 0) return i;
    throw std::logic_error("condition4_kprime: no odd index found");
}

}  // namespace

Partition lambda_star(const Partition& p) {
    const int k = p.k();
    if (k == 2) return p;
    const int cond = condition_number(p.parts);
    std::vector<int> out;
    switch (cond) {
        case 3:
        case 5:
            return p;
        case 1:
        case 2:
            out.assign(p.parts.begin(), p.parts.end() - 2);
            break;
        case 4: {
            const int kp = condition4_kprime(p.parts);
            out.assign(p.parts.begin(), p.parts.begin() + (kp - 1));
            break;
        }
        default:
            throw std::logic_error("lambda_star: bad condition");
    }
    return Partition{out, std::accumulate(out.begin(), out.end(), 0)};
}

int d_lambda(const std::vector<int>& parts) {
    const int k = static_cast<int>(parts.size());
    if (k == 0) return 0;
    if (k == 2) return n_lambda(parts);
    const int cond = condition_number(parts);
    switch (cond) {
        case 1: {
            std::vector<int> star(parts.begin(), parts.end() - 2);
            return d_lambda(star);
        }
        case 2: {
            std::vector<int> star(parts.begin(), parts.end() - 2);
            return d_lambda(star) + 2;
        }
        case 4: {
            const int kp = condition4_kprime(parts);
            std::vector<int> star(parts.begin(), parts.begin() + (kp - 1));
            return d_lambda(star);
        }
        case 3:
        case 5:
            return 0;
        default:
            throw std::logic_error("d_lambda: bad condition");
    }
}

int dim_centralizer(const Partition& p, const AlgebraType& alg) {
    // Dual-partition closed form.
    const int maxPart = p.parts.front();
    long sumSq = 0;
    for (int j = 1; j <= maxPart; ++j) {
        long cnt = std::count_if(p.parts.begin(), p.parts.end(),
                                 [j](int v) { return v >= j; });
        sumSq += cnt * cnt;
    }
    long odd = std::count_if(p.parts.begin(), p.parts.end(),
                             [](int v) { return v % 2 != 0; });
    if (alg.kind == AlgKind::A) return static_cast<int>(sumSq);
    long twice = alg.orthogonal() ? sumSq - odd : sumSq + odd;
    assert(twice % 2 == 0);
    return static_cast<int>(twice / 2);
}

DefectReport defect(const Partition& p, const AlgebraType& alg) {
    if (!alg.orthogonal()) throw std::invalid_argument("defect: orthogonal types only");
    DefectReport r;
    r.k = p.k();
    r.nLambda = n_lambda(p.parts);
    r.sLambda = s_lambda(p);
    r.dLambda = d_lambda(p);
    const bool kOdd = r.k % 2 != 0;
    const int bySignedSum = kOdd ? (r.nLambda - r.k - 1) / 2 + r.sLambda
                                 : (r.nLambda + r.k) / 2 + r.sLambda;
    const int byRecursion = kOdd ? r.nLambda - r.dLambda : r.dLambda;
    if (bySignedSum != byRecursion) {
        std::ostringstream os;
        os << "defect formula mismatch for " << p.to_string() << ": "
           << bySignedSum << " vs " << byRecursion;
        throw std::logic_error(os.str());
    }
    r.defect = bySignedSum;
    r.dimCentralizer = dim_centralizer(p, alg);
    const int twiceSum = r.dimCentralizer + alg.rank - r.defect;
    assert(twiceSum % 2 == 0);
    r.sumDelta = twiceSum / 2;
    return r;
}

bool is_very_good(const std::vector<int>& parts) {
    const int k = static_cast<int>(parts.size());
    if (k == 0) return true;
    const int n = n_lambda(parts);
    const int d = d_lambda(parts);
    return (k % 2 != 0) ? n == d : d == 0;
}

namespace {

// Even-length case: can the sequence split into consecutive blocks, each a
// both-odd pair or an odd/even.../even/odd run of length > 3?
bool splits_even_case(const std::vector<int>& parts, size_t from,
                      std::vector<signed char>& memo) {
    const size_t n = parts.size();
    if (from == n) return true;
    if (memo[from] != -1) return memo[from] != 0;
    bool ok = false;
    if (from + 1 < n && parts[from] % 2 != 0 && parts[from + 1] % 2 != 0)
        ok = splits_even_case(parts, from + 2, memo);
    if (!ok && parts[from] % 2 != 0) {
        for (size_t end = from + 3; end < n && !ok; ++end) {
            if (parts[end] % 2 == 0) continue;
            bool middleEven = true;
            for (size_t i = from + 1; i < end; ++i)
                if (parts[i] % 2 != 0) { middleEven = false; break; }
            if (middleEven) ok = splits_even_case(parts, end + 1, memo);
        }
    }
    memo[from] = ok ? 1 : 0;
    return ok;
}

}  // namespace

bool is_very_good_concat(const std::vector<int>& parts) {
    const int k = static_cast<int>(parts.size());
    if (k == 0) return true;
    if (k % 2 != 0) {
        if (parts[0] % 2 == 0) return false;
        // Tail must be consecutive same-parity pairs.
        for (int i = 1; i + 1 < k; i += 2)
            if (parts[i] % 2 != parts[i + 1] % 2) return false;
        return true;
    }
    std::vector<signed char> memo(parts.size() + 1, -1);
    return splits_even_case(parts, 0, memo);
}

std::optional<int> satisfies_star(const Partition& p) {
    const int k = p.k();
    for (int kp = k - (k % 2); kp >= 2; kp -= 2) {
        bool prefixEven = true;
        for (int i = 0; i < kp; ++i)
            if (p.parts[i] % 2 != 0) { prefixEven = false; break; }
        if (!prefixEven) continue;
        std::vector<int> tail(p.parts.begin() + kp, p.parts.end());
        if (is_very_good(tail)) return kp;
    }
    return std::nullopt;
}

std::vector<int> nu_sequence(const Partition& p, int kprime) {
    std::vector<int> nu;
    int sum = 0;
    for (int i = 0; i < kprime; ++i) {
        sum += p.parts[i];
        assert(sum % 2 == 0);
        nu.push_back(sum / 2);
    }
    return nu;
}

const char* tag_name(VerdictTag t) {
    switch (t) {
        case VerdictTag::GoodVeryGood: return "GoodVeryGood";
        case VerdictTag::GoodDefectZero: return "GoodDefectZero";
        case VerdictTag::GoodTca3i: return "GoodTca3i";
        case VerdictTag::GoodTca3ii: return "GoodTca3ii";
        case VerdictTag::GoodTypeAC: return "GoodTypeAC";
        case VerdictTag::PolynomialNotGood: return "PolynomialNotGood";
        case VerdictTag::NotPolynomial: return "NotPolynomial";
        case VerdictTag::Unknown: return "Unknown";
    }
    return "?";
}

bool tag_is_good(VerdictTag t) {
    switch (t) {
        case VerdictTag::GoodVeryGood:
        case VerdictTag::GoodDefectZero:
        case VerdictTag::GoodTca3i:
        case VerdictTag::GoodTca3ii:
        case VerdictTag::GoodTypeAC:
            return true;
        default:
            return false;
    }
}

namespace {

struct NotGoodRow {
    AlgKind kind;
    int rank;
    std::vector<int> parts;
    std::vector<int> degrees;
};

// Small-rank orbits (rank <= 6) whose invariant ring of the centralizer is
// polynomial although the element is not good, with the degrees of a
// generating family.
const std::vector<NotGoodRow>& not_good_catalog() {
    static const std::vector<NotGoodRow> rows = {
        {AlgKind::B, 5, {3, 3, 2, 2, 1}, {1, 1, 2, 2, 7}},
        {AlgKind::D, 5, {3, 3, 2, 2}, {1, 1, 2, 2, 5}},
        {AlgKind::B, 6, {5, 3, 2, 2, 1}, {1, 1, 1, 2, 2, 7}},
        {AlgKind::B, 6, {4, 4, 2, 2, 1}, {1, 1, 2, 2, 3, 6}},
        {AlgKind::B, 6, {3, 3, 2, 2, 1, 1, 1}, {1, 1, 2, 2, 6, 7}},
        {AlgKind::D, 6, {5, 3, 2, 2}, {1, 1, 1, 2, 2, 5}},
        {AlgKind::D, 6, {3, 3, 2, 2, 1, 1}, {1, 1, 2, 2, 3, 7}},
    };
    return rows;
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

}  // namespace

std::vector<int> catalogued_not_good_degrees(const Partition& p, const AlgebraType& alg) {
    for (const auto& row : not_good_catalog())
        if (row.kind == alg.kind && row.rank == alg.rank && row.parts == p.parts)
            return row.degrees;
    return {};
}

Verdict classify(const Partition& p, const AlgebraType& alg) {
    if (alg.kind == AlgKind::A || alg.kind == AlgKind::C)
        return {VerdictTag::GoodTypeAC,
                "types A and C: every nilpotent element is good"};
    if (is_very_good(p))
        return {VerdictTag::GoodVeryGood,
                "very good partition: the combinatorial defect is forced to zero"};
    DefectReport r = defect(p, alg);
    if (r.defect == 0)
        return {VerdictTag::GoodDefectZero,
                "defect zero: the initial components of the standard generators "
                "are algebraically independent"};
    if (auto kp = satisfies_star(p)) {
        bool allEqual = true;
        for (int i = 1; i < *kp; ++i)
            if (p.parts[i] != p.parts[0]) { allEqual = false; break; }
        if (allEqual)
            return {VerdictTag::GoodTca3i,
                    "constant even prefix with very good tail: a modified "
                    "generating family closes the defect"};
    }
    if (p.k() == 4 && n_lambda(p.parts) == 4)
        return {VerdictTag::GoodTca3ii,
                "four even parts: a modified generating family closes the defect"};
    if (alg.kind == AlgKind::D && alg.rank == 7 && p.parts == std::vector<int>{3, 3, 2, 2, 2, 2})
        return {VerdictTag::NotPolynomial,
                "known counter-example: the invariant ring of the centralizer "
                "is not polynomial"};
    if (auto degs = catalogued_not_good_degrees(p, alg); !degs.empty())
        return {VerdictTag::PolynomialNotGood,
                "catalogued small-rank case: invariant ring polynomial with "
                "generator degrees " + join_ints(degs) + ", element not good"};
    return {VerdictTag::Unknown, ""};
}

namespace {

void enumerate_rec(int remaining, int maxPart, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        if (valid_orthogonal_parts(cur)) out.push_back(cur);
        return;
    }
    for (int v = std::min(maxPart, remaining); v >= 1; --v) {
        cur.push_back(v);
        enumerate_rec(remaining - v, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_orthogonal_partitions(int N) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    enumerate_rec(N, N, cur, out);
    return out;
}

}  // namespace nilslice
