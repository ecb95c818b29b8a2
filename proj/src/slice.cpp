#include "nilslice/slice.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nilslice {

// ---------------------------------------------------------------- RNG

uint64_t SplitMix64::next() {
    state += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rat random_rational(SplitMix64& rng) {
    const long num = static_cast<long>(rng.next() % 2000001ULL) - 1000000L;
    const long den = static_cast<long>(rng.next() % 1000000ULL) + 1L;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::vector<Rat> random_point(int n, uint64_t seed, uint64_t trial) {
    SplitMix64 rng(seed ^ (0xa0761d6478bd642fULL * (trial + 1)));
    std::vector<Rat> p(n);
    for (int i = 0; i < n; ++i) p[i] = random_rational(rng);
    return p;
}

// ------------------------------------------------------ small helpers

std::vector<Rat> interpolate_coeffs(const std::vector<Rat>& nodes,
                                    const std::vector<Rat>& values) {
    const int n = static_cast<int>(nodes.size());
    RationalMatrix vand(n, n);
    for (int i = 0; i < n; ++i) {
        Rat p(1);
        for (int j = 0; j < n; ++j) {
            vand.at(i, j) = p;
            p *= nodes[i];
        }
    }
    auto sol = solve(vand, values);
    if (!sol) throw std::logic_error("interpolate_coeffs: singular node set");
    return *sol;
}

namespace {

Rat trace_mul(const RationalMatrix& a, const RationalMatrix& b) {
    Rat t(0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0 && b.at(j, i) != 0) t += a.at(i, j) * b.at(j, i);
    return t;
}

PolyMatrix rational_times_poly(const RationalMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.rows(), b.cols(), b.at(0, 0).table());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += b.at(k, j) * a.at(i, k);
        }
    return r;
}

}  // namespace

// ------------------------------------------------------- SliceContext

SliceContext make_context(const Partition& lam, const AlgebraType& alg) {
    SliceContext ctx;
    ctx.triple = build_sl2(lam, alg);
    ctx.gE = centralizer_basis(ctx.triple, ctx.triple.e);
    ctx.gF = centralizer_basis(ctx.triple, ctx.triple.f);
    ctx.dimGe = dim_centralizer(lam, alg);
    if (ctx.gE.size() != ctx.dimGe || ctx.gF.size() != ctx.dimGe)
        throw std::logic_error("make_context: centralizer dimension mismatch");

    // Nondegeneracy of the trace-form pairing between g^e and g^f.
    RationalMatrix pairing(ctx.dimGe, ctx.dimGe);
    for (int i = 0; i < ctx.dimGe; ++i)
        for (int j = 0; j < ctx.dimGe; ++j)
            pairing.at(i, j) = trace_mul(ctx.gE.mats[i], ctx.gF.mats[j]);
    if (rank_of(pairing) != ctx.dimGe)
        throw std::logic_error("make_context: degenerate slice pairing");

    std::vector<std::string> names;
    std::vector<int> weights;
    for (int l = 0; l < ctx.dimGe; ++l) {
        names.push_back("x" + std::to_string(l + 1));
        weights.push_back(-ctx.gF.weights[l]);  // positive: minus the ad-h weight
    }
    ctx.coords = VarTable::make(std::move(names), std::move(weights));

    ctx.ell = alg.rank;
    ctx.typeD = alg.kind == AlgKind::D;
    ctx.genDegrees.assign(ctx.ell + 1, 0);
    for (int i = 1; i <= ctx.ell; ++i)
        ctx.genDegrees[i] = (ctx.typeD && i == ctx.ell) ? ctx.ell : 2 * i;
    return ctx;
}

PolyMatrix generic_point(const SliceContext& ctx) {
    const int N = ctx.triple.J.rows();
    PolyMatrix m(N, N, ctx.coords);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
            if (ctx.triple.e.at(r, c) != 0)
                m.at(r, c) = MultiPoly::constant(ctx.coords, ctx.triple.e.at(r, c));
    for (int l = 0; l < ctx.dimGe; ++l) {
        const RationalMatrix& z = ctx.gF.mats[l];
        MultiPoly x = MultiPoly::variable(ctx.coords, l);
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c)
                if (z.at(r, c) != 0) m.at(r, c) += x * z.at(r, c);
    }
    return m;
}

std::vector<MultiPoly> kappa_all_truncated(const SliceContext& ctx, int cap) {
    PolyMatrix x = generic_point(ctx);
    std::vector<MultiPoly> coeffs = char_poly(x, cap);
    std::vector<MultiPoly> out(ctx.ell + 1, MultiPoly(ctx.coords));
    for (int i = 1; i <= ctx.ell; ++i) {
        if (ctx.typeD && i == ctx.ell)
            out[i] = pfaffian(rational_times_poly(ctx.triple.J, x), cap);
        else
            out[i] = coeffs[2 * i];
    }
    return out;
}

// ------------------------------------------------- evaluation probes

namespace {

RationalMatrix point_matrix(const SliceContext& ctx, const std::vector<Rat>& p) {
    RationalMatrix m = ctx.triple.e;
    for (int l = 0; l < ctx.dimGe; ++l)
        if (p[l] != 0) m = m + ctx.gF.mats[l] * p[l];
    return m;
}

// Values of kappa(q_i)(t * point) organized by power of t; index 0 of the
// outer vector is unused.
std::vector<std::vector<Rat>> probe_tcoeffs(const SliceContext& ctx,
                                            const std::vector<Rat>& point) {
    const int N = ctx.triple.J.rows();
    const int Dmax = *std::max_element(ctx.genDegrees.begin(), ctx.genDegrees.end());
    std::vector<Rat> nodes;
    std::vector<std::vector<Rat>> valsByGen(ctx.ell + 1);
    for (int t = 0; t <= Dmax; ++t) {
        nodes.push_back(Rat(t));
        RationalMatrix base(N, N);
        for (int l = 0; l < ctx.dimGe; ++l)
            if (point[l] != 0) base = base + ctx.gF.mats[l] * (point[l] * Rat(t));
        RationalMatrix a = ctx.triple.e + base;
        CharPolyFL fl = faddeev_leverrier(a);
        for (int i = 1; i <= ctx.ell; ++i) {
            if (ctx.typeD && i == ctx.ell)
                valsByGen[i].push_back(pfaffian_value(ctx.triple.J * a));
            else
                valsByGen[i].push_back(fl.coeffs[2 * i]);
        }
    }
    std::vector<std::vector<Rat>> out(ctx.ell + 1);
    for (int i = 1; i <= ctx.ell; ++i)
        out[i] = interpolate_coeffs(nodes, valsByGen[i]);
    return out;
}

int min_nonzero_index(const std::vector<Rat>& coeffs) {
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) return static_cast<int>(i);
    return -1;
}

// Gradient of the degree-(rowPows[i]) homogeneous part of kappa(q_i) at
// `point`: rows indexed by generator, columns by slice coordinate.
RationalMatrix probe_gradient_rows(const SliceContext& ctx,
                                   const std::vector<Rat>& point,
                                   const std::vector<int>& rowPows) {
    const int N = ctx.triple.J.rows();
    const int Dmax = *std::max_element(ctx.genDegrees.begin(), ctx.genDegrees.end());
    std::vector<Rat> nodes;
    // grads[i][l][node]
    std::vector<std::vector<std::vector<Rat>>> grads(
        ctx.ell + 1, std::vector<std::vector<Rat>>(ctx.dimGe));
    for (int t = 0; t <= Dmax; ++t) {
        nodes.push_back(Rat(t));
        RationalMatrix a = ctx.triple.e;
        for (int l = 0; l < ctx.dimGe; ++l)
            if (point[l] != 0) a = a + ctx.gF.mats[l] * (point[l] * Rat(t));
        CharPolyFL fl = faddeev_leverrier(a);
        for (int i = 1; i <= ctx.ell; ++i) {
            if (ctx.typeD && i == ctx.ell) {
                const RationalMatrix ja = ctx.triple.J * a;
                const Rat pf = pfaffian_value(ja);
                bool fast = false;
                RationalMatrix inv;
                if (pf != 0) {
                    inv = inverse(ja);
                    fast = true;
                }
                for (int l = 0; l < ctx.dimGe; ++l) {
                    const RationalMatrix jz = ctx.triple.J * ctx.gF.mats[l];
                    Rat g = fast ? Rat(pf * trace_mul(inv, jz) / 2)
                                 : pfaffian_directional(ja, jz);
                    grads[i][l].push_back(g);
                }
            } else {
                const RationalMatrix& m = fl.M[2 * i - 1];
                for (int l = 0; l < ctx.dimGe; ++l)
                    grads[i][l].push_back(-trace_mul(m, ctx.gF.mats[l]));
            }
        }
    }
    RationalMatrix rows(ctx.ell, ctx.dimGe);
    for (int i = 1; i <= ctx.ell; ++i) {
        const int pw = rowPows[i];
        if (pw < 0) continue;
        for (int l = 0; l < ctx.dimGe; ++l) {
            std::vector<Rat> cs = interpolate_coeffs(nodes, grads[i][l]);
            if (pw < static_cast<int>(cs.size())) rows.at(i - 1, l) = cs[pw];
        }
    }
    return rows;
}

struct ProbeSummary {
    std::vector<int> delta;  // index 0 unused
    int sumDelta = 0;
    int jacobianRank = 0;
    uint64_t trialUsed = 0;
};

ProbeSummary probe_slice(const SliceContext& ctx, const DefectReport& dr,
                         uint64_t seed) {
    ProbeSummary out;
    const int maxTrials = 10;
    bool certified = false;
    std::vector<Rat> goodPoint;
    for (uint64_t trial = 0; trial < maxTrials && !certified; ++trial) {
        std::vector<Rat> p = random_point(ctx.dimGe, seed, trial);
        auto tc = probe_tcoeffs(ctx, p);
        std::vector<int> delta(ctx.ell + 1, -1);
        int sum = 0;
        bool ok = true;
        for (int i = 1; i <= ctx.ell; ++i) {
            delta[i] = min_nonzero_index(tc[i]);
            if (delta[i] < 0) { ok = false; break; }
            sum += delta[i];
        }
        // Observed degrees can only overshoot; matching the combinatorial
        // degree sum certifies every individual degree exactly.
        if (ok && sum == dr.sumDelta) {
            certified = true;
            out.delta = delta;
            out.sumDelta = sum;
            out.trialUsed = trial;
            goodPoint = std::move(p);
        }
    }
    if (!certified)
        throw std::logic_error("probe_slice: could not certify degree multiset");

    std::vector<int> rowPows(ctx.ell + 1, -1);
    for (int i = 1; i <= ctx.ell; ++i) rowPows[i] = out.delta[i] - 1;
    int best = 0;
    for (uint64_t extra = 0; extra < 3 && best < ctx.ell; ++extra) {
        std::vector<Rat> p = extra == 0
                                 ? goodPoint
                                 : random_point(ctx.dimGe, seed, out.trialUsed + 17 + extra);
        best = std::max(best, rank_of(probe_gradient_rows(ctx, p, rowPows)));
    }
    out.jacobianRank = best;
    return out;
}

// Randomized certification that every kappa(q_i) is graded-homogeneous of
// degree 2 d_i: scaling identity at `npoints` seeded points.
bool scaling_homogeneous(const SliceContext& ctx, int npoints, uint64_t seed) {
    for (int j = 0; j < npoints; ++j) {
        SplitMix64 rng(seed ^ (0x100000001b3ULL * (j + 1)));
        std::vector<Rat> p = random_point(ctx.dimGe, seed + 77, j);
        Rat t(static_cast<long>(rng.next() % 7 + 2),
              static_cast<long>(rng.next() % 3 + 1));
        t.canonicalize();
        std::vector<Rat> scaled(ctx.dimGe);
        for (int l = 0; l < ctx.dimGe; ++l) {
            Rat tp(1);
            for (int w = 0; w < ctx.coords->weights[l] + 2; ++w) tp *= t;
            scaled[l] = p[l] * tp;
        }
        RationalMatrix a = point_matrix(ctx, p);
        RationalMatrix as = point_matrix(ctx, scaled);
        CharPolyFL fl = faddeev_leverrier(a);
        CharPolyFL fls = faddeev_leverrier(as);
        for (int i = 1; i <= ctx.ell; ++i) {
            Rat lhs, rhs;
            if (ctx.typeD && i == ctx.ell) {
                lhs = pfaffian_value(ctx.triple.J * as);
                rhs = pfaffian_value(ctx.triple.J * a);
            } else {
                lhs = fls.coeffs[2 * i];
                rhs = fl.coeffs[2 * i];
            }
            Rat tp(1);
            for (int w = 0; w < 2 * ctx.genDegrees[i]; ++w) tp *= t;
            if (lhs != rhs * tp) return false;
        }
    }
    return true;
}

// Adaptive fully symbolic initial components (index 0 unused); capOut is
// the truncation level finally used.
std::vector<MultiPoly> symbolic_kappas(const SliceContext& ctx, int* capOut) {
    for (int cap = 1; cap <= ctx.dimGe + ctx.ell; ++cap) {
        std::vector<MultiPoly> ks = kappa_all_truncated(ctx, cap);
        bool allNonzero = true;
        for (int i = 1; i <= ctx.ell; ++i)
            if (ks[i].is_zero()) { allNonzero = false; break; }
        if (allNonzero) {
            if (capOut) *capOut = cap;
            return ks;
        }
    }
    throw std::logic_error("symbolic_kappas: a generator vanished on the slice");
}

}  // namespace

// --------------------------------------------------------- reports

int jacobian_rank(const std::vector<MultiPoly>& polys, int trials, uint64_t seed) {
    if (polys.empty()) return 0;
    const auto& vt = polys[0].table();
    const int nv = vt->size();
    std::vector<std::vector<MultiPoly>> derivs;
    for (const MultiPoly& p : polys) {
        std::vector<MultiPoly> row;
        for (int l = 0; l < nv; ++l) row.push_back(p.derivative(l));
        derivs.push_back(std::move(row));
    }
    int best = 0;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<Rat> p = random_point(nv, seed, trial);
        RationalMatrix m(static_cast<int>(polys.size()), nv);
        for (size_t i = 0; i < polys.size(); ++i)
            for (int l = 0; l < nv; ++l) m.at(static_cast<int>(i), l) = derivs[i][l].evaluate(p);
        best = std::max(best, rank_of(m));
        if (best == std::min<int>(static_cast<int>(polys.size()), nv)) break;
    }
    return best;
}

SliceReport slice_report(const SliceContext& ctx, bool symbolic, uint64_t seed) {
    SliceReport rep;
    rep.lam = ctx.triple.lam;
    rep.alg = ctx.triple.alg;
    rep.symbolic = symbolic;
    rep.seed = seed;
    rep.ell = ctx.ell;
    rep.dimGe = ctx.dimGe;
    const DefectReport dr = defect(ctx.triple.lam, ctx.triple.alg);
    rep.defect = dr.defect;

    if (symbolic) {
        int cap = 0;
        std::vector<MultiPoly> ks = symbolic_kappas(ctx, &cap);
        std::vector<MultiPoly> initials;
        rep.sumDelta = 0;
        for (int i = 1; i <= ctx.ell; ++i) {
            GeneratorReport g;
            g.index = i;
            g.generatorDegree = ctx.genDegrees[i];
            g.slodowyDegree = 2 * ctx.genDegrees[i];
            g.kappa = ks[i];
            g.initial = ks[i].initial_component(Grading::Standard);
            g.delta = g.initial.degree();
            auto hd = ks[i].homogeneous_degree(Grading::Slodowy);
            g.slodowyHomogeneous = hd && *hd == g.slodowyDegree;
            rep.sumDelta += g.delta;
            initials.push_back(g.initial);
            rep.gens.push_back(std::move(g));
        }
        if (rep.sumDelta != dr.sumDelta)
            throw std::logic_error("slice_report: degree sum disagrees with formula");
        rep.jacobianRank = jacobian_rank(initials, 6, seed);
    } else {
        ProbeSummary ps = probe_slice(ctx, dr, seed);
        const bool homog = scaling_homogeneous(ctx, 50, seed);
        rep.sumDelta = ps.sumDelta;
        for (int i = 1; i <= ctx.ell; ++i) {
            GeneratorReport g;
            g.index = i;
            g.generatorDegree = ctx.genDegrees[i];
            g.slodowyDegree = 2 * ctx.genDegrees[i];
            g.kappa = MultiPoly(ctx.coords);
            g.initial = MultiPoly(ctx.coords);
            g.delta = ps.delta[i];
            g.slodowyHomogeneous = homog;
            rep.gens.push_back(std::move(g));
        }
        rep.jacobianRank = ps.jacobianRank;
    }
    rep.independent = rep.jacobianRank == ctx.ell;
    if ((rep.defect == 0) != rep.independent)
        throw std::logic_error(
            "slice_report: independence does not match the defect criterion");
    return rep;
}

// --------------------------------------------------------- relations

std::shared_ptr<const VarTable> relation_vars(int ell) {
    std::vector<std::string> names;
    for (int i = 1; i <= ell; ++i) names.push_back("eq" + std::to_string(i));
    return VarTable::make(std::move(names), std::vector<int>(ell, 0));
}

namespace {

// If the Gram determinant is -1, the square-normalized last generator
// differs from the Pfaffian by a fourth root of unity: rewrite even powers
// eq_ell^(2t) with a factor (-1)^t so the expression is Pfaffian-ready.
MultiPoly relation_for_pfaffian(const MultiPoly& expr, int ell, const Rat& detJ) {
    if (detJ == 1) return expr;
    MultiPoly out(expr.table());
    for (const auto& [e, c] : expr.terms()) {
        const int p = e[ell - 1];
        if (p % 2 != 0)
            throw std::invalid_argument(
                "relation: odd power of the Pfaffian generator with Gram determinant -1");
        Rat cc = (p / 2) % 2 == 0 ? c : Rat(-c);
        out.add_term(e, cc);
    }
    return out;
}

}  // namespace

bool verify_relation(const SliceContext& ctx, const MultiPoly& expr,
                     RelationMode mode, uint64_t seed) {
    if (expr.table()->size() != ctx.ell)
        throw std::invalid_argument("verify_relation: wrong symbol count");
    const MultiPoly rel =
        ctx.typeD ? relation_for_pfaffian(expr, ctx.ell, ctx.triple.detJ) : expr;

    if (mode == RelationMode::Identical) {
        std::vector<MultiPoly> ks = symbolic_kappas(ctx, nullptr);
        std::vector<MultiPoly> args;
        for (int i = 1; i <= ctx.ell; ++i)
            args.push_back(ks[i].initial_component(Grading::Standard));
        for (int sign = 0; sign < 2; ++sign) {
            MultiPoly v = rel.compose(args, ctx.coords);
            if (v.is_zero()) return true;
            if (!ctx.typeD) break;
            args[ctx.ell - 1] = -args[ctx.ell - 1];
        }
        return false;
    }

    const DefectReport dr = defect(ctx.triple.lam, ctx.triple.alg);
    ProbeSummary ps = probe_slice(ctx, dr, seed);
    std::vector<int> deltas(ps.delta.begin() + 1, ps.delta.end());
    bool okPlus = true, okMinus = true;
    for (int j = 0; j < 50 && (okPlus || okMinus); ++j) {
        std::vector<Rat> p = random_point(ctx.dimGe, seed + 31337, j);
        std::vector<Rat> vals = initial_values_at(ctx, p, deltas);
        if (rel.evaluate(vals) != 0) okPlus = false;
        if (ctx.typeD) {
            std::vector<Rat> neg = vals;
            neg[ctx.ell - 1] = -neg[ctx.ell - 1];
            if (rel.evaluate(neg) != 0) okMinus = false;
        } else {
            okMinus = okPlus;
        }
    }
    return okPlus || okMinus;
}

std::vector<Rat> initial_values_at(const SliceContext& ctx,
                                   const std::vector<Rat>& point,
                                   const std::vector<int>& deltas) {
    auto tc = probe_tcoeffs(ctx, point);
    std::vector<Rat> vals(ctx.ell, Rat(0));
    for (int i = 1; i <= ctx.ell; ++i) {
        const int d = deltas[i - 1];
        if (d >= 0 && d < static_cast<int>(tc[i].size())) vals[i - 1] = tc[i][d];
    }
    return vals;
}

// --------------------------------------------------------- star blocks

StarBlocks star_blocks(const Partition& lam) {
    auto kp = satisfies_star(lam);
    if (!kp)
        throw std::invalid_argument(
            "partition lacks an even prefix with a very good tail");
    StarBlocks b;
    b.kprime = *kp;
    int i = 0;
    int pairBase = 0;
    while (i < b.kprime) {
        int j = i;
        while (j < b.kprime && lam.parts[j] == lam.parts[i]) ++j;
        b.mu.push_back(lam.parts[i]);
        b.mult.push_back(j - i);
        b.pairRange.emplace_back(pairBase + 1, pairBase + (j - i) / 2);
        pairBase += (j - i) / 2;
        i = j;
    }
    return b;
}

namespace {

std::shared_ptr<const VarTable> z_table(int K) {
    std::vector<std::string> names;
    for (int i = 1; i <= K; ++i) names.push_back("z" + std::to_string(i));
    return VarTable::make(std::move(names), std::vector<int>(K, 0));
}

// Elementary symmetric polynomial of degree j in the variables of
// [first,last] (1-based, inclusive); degree 0 gives 1, out of range 0.
MultiPoly elem_sym(std::shared_ptr<const VarTable> vt, int first, int last, int j) {
    if (j == 0) return MultiPoly::constant(vt, Rat(1));
    if (j < 0 || j > last - first + 1) return MultiPoly(vt);
    std::vector<MultiPoly> byDeg(j + 1, MultiPoly(vt));
    byDeg[0] = MultiPoly::constant(vt, Rat(1));
    for (int v = first; v <= last; ++v) {
        MultiPoly zv = MultiPoly::variable(vt, v - 1);
        for (int d = j; d >= 1; --d)
            if (!byDeg[d - 1].is_zero()) byDeg[d] += byDeg[d - 1] * zv;
    }
    return byDeg[j];
}

}  // namespace

MultiPoly pca3_predicted(const Partition& lam, int s, int j) {
    StarBlocks b = star_blocks(lam);
    const int m = static_cast<int>(b.mu.size());
    if (s < 1 || s > m || j < 1 || j > b.mult[s - 1])
        throw std::invalid_argument("pca3_predicted: index out of range");
    const int K = b.kprime / 2;
    auto vt = z_table(K);
    MultiPoly pre = MultiPoly::constant(vt, Rat(1));
    for (int t = 1; t < s; ++t) {
        MultiPoly top = elem_sym(vt, b.pairRange[t - 1].first, b.pairRange[t - 1].second,
                                 b.mult[t - 1] / 2);
        pre = pre * top;
    }
    pre = pre * pre;
    MultiPoly sum(vt);
    const auto [lo, hi] = b.pairRange[s - 1];
    for (int r = 0; r <= j; ++r) {
        MultiPoly a = elem_sym(vt, lo, hi, j - r);
        MultiPoly c = elem_sym(vt, lo, hi, r);
        if (!a.is_zero() && !c.is_zero()) sum += a * c;
    }
    MultiPoly res = pre * sum;
    return (j % 2 == 0) ? res : -res;
}

MultiPoly pca3_predicted_flat(const Partition& lam, int idx) {
    StarBlocks b = star_blocks(lam);
    int acc = 0;
    for (size_t s = 0; s < b.mu.size(); ++s) {
        if (idx <= acc + b.mult[s]) return pca3_predicted(lam, static_cast<int>(s) + 1, idx - acc);
        acc += b.mult[s];
    }
    throw std::invalid_argument("pca3_predicted_flat: index out of range");
}

namespace {

// Multidimensional interpolation over the grid {0,1,2}^K (values flattened
// base-3 with axis 0 as the least significant digit) -> coefficient array
// of the same shape.
std::vector<Rat> tensor_interpolate(std::vector<Rat> vals, int K) {
    const std::vector<Rat> nodes{Rat(0), Rat(1), Rat(2)};
    int stride = 1;
    const int total = static_cast<int>(vals.size());
    for (int axis = 0; axis < K; ++axis) {
        for (int base = 0; base < total; ++base) {
            if ((base / stride) % 3 != 0) continue;
            std::vector<Rat> line{vals[base], vals[base + stride], vals[base + 2 * stride]};
            std::vector<Rat> cs = interpolate_coeffs(nodes, line);
            vals[base] = cs[0];
            vals[base + stride] = cs[1];
            vals[base + 2 * stride] = cs[2];
        }
        stride *= 3;
    }
    return vals;
}

}  // namespace

MultiPoly pca3_observed(const Partition& lam, const AlgebraType& alg, int idx) {
    StarBlocks b = star_blocks(lam);
    const int K = b.kprime / 2;
    if (idx < 1 || idx > b.kprime)
        throw std::invalid_argument("pca3_observed: index out of range");
    SL2Triple t = build_sl2(lam, alg);
    const int N = lam.total;

    // Per paired prefix block: the lowest-weight direction and its
    // normalization from the block characteristic polynomial
    // T^(2 mu) + b0 s T^mu + a0 s^2 with b0^2 = 4 a0.
    std::vector<RationalMatrix> w(K);
    for (int i = 0; i < K; ++i) {
        const Block& blk = t.blocks[i];
        if (blk.vStart < 0 || blk.part % 2 != 0)
            throw std::logic_error("pca3_observed: prefix block is not an even pair");
        const int d = blk.part;
        RationalMatrix w0(N, N);
        // J^{-1}(E_{u0,v0} - E_{v0,u0})
        RationalMatrix a(N, N);
        a.at(blk.uStart, blk.vStart) = 1;
        a.at(blk.vStart, blk.uStart) = -1;
        w0 = inverse(t.J) * a;
        if (!commutator(t.f, w0).is_zero())
            throw std::logic_error("pca3_observed: direction not in the f-centralizer");

        // Restrict to the 2d-dimensional pair subspace and interpolate the
        // block characteristic polynomial in s.
        std::vector<int> idxs;
        for (int r = 0; r < d; ++r) idxs.push_back(blk.uStart + r);
        for (int r = 0; r < d; ++r) idxs.push_back(blk.vStart + r);
        auto restrict_to = [&](const RationalMatrix& m) {
            RationalMatrix r(2 * d, 2 * d);
            for (int p = 0; p < 2 * d; ++p)
                for (int q = 0; q < 2 * d; ++q) r.at(p, q) = m.at(idxs[p], idxs[q]);
            return r;
        };
        RationalMatrix eSub = restrict_to(t.e);
        RationalMatrix wSub = restrict_to(w0);
        const std::vector<Rat> nodes{Rat(0), Rat(1), Rat(2)};
        std::vector<std::vector<Rat>> coeffBySample;
        for (int s = 0; s <= 2; ++s)
            coeffBySample.push_back(
                faddeev_leverrier(eSub + wSub * Rat(s)).coeffs);
        Rat b0(0), a0(0);
        for (int m2 = 1; m2 <= 2 * d; ++m2) {
            std::vector<Rat> line{coeffBySample[0][m2], coeffBySample[1][m2],
                                  coeffBySample[2][m2]};
            std::vector<Rat> cs = interpolate_coeffs(nodes, line);
            for (int p = 0; p <= 2; ++p) {
                const bool allowed = (m2 == d && p == 1) || (m2 == 2 * d && p == 2);
                if (!allowed && cs[p] != 0)
                    throw std::logic_error("pca3_observed: unexpected block coefficient");
                if (m2 == d && p == 1) b0 = cs[p];
                if (m2 == 2 * d && p == 2) a0 = cs[p];
            }
        }
        if (b0 == 0 || b0 * b0 != a0 * 4)
            throw std::logic_error("pca3_observed: block normalization failed");
        w[i] = w0 * (Rat(-2) / b0);
    }

    // Full determinant coefficient on the grid {0,1,2}^K, then exact
    // tensor interpolation (each s_i enters with degree <= 2).
    const std::vector<int> nus = nu_sequence(lam, b.kprime);
    const int m2 = 2 * nus[idx - 1];
    int total = 1;
    for (int i = 0; i < K; ++i) total *= 3;
    std::vector<Rat> vals(total);
    for (int g = 0; g < total; ++g) {
        RationalMatrix a = t.e;
        int rem = g;
        for (int i = 0; i < K; ++i) {
            const int digit = rem % 3;
            rem /= 3;
            if (digit != 0) a = a + w[i] * Rat(digit);
        }
        vals[g] = faddeev_leverrier(a).coeffs[m2];
    }
    std::vector<Rat> coeffs = tensor_interpolate(std::move(vals), K);

    auto vt = z_table(K);
    MultiPoly full(vt);
    for (int g = 0; g < total; ++g) {
        if (coeffs[g] == 0) continue;
        Expo e(K, 0);
        int rem = g;
        for (int i = 0; i < K; ++i) {
            e[i] = rem % 3;
            rem /= 3;
        }
        full.add_term(e, coeffs[g]);
    }
    // The restricted initial component sits in standard z-degree idx.
    MultiPoly out(vt);
    for (const auto& [e, c] : full.terms())
        if (full.degree_of(e, Grading::Standard) == idx) out.add_term(e, c);
    return out;
}

// ------------------------------------------------------ certificates

namespace {

std::shared_ptr<const VarTable> rho_table(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("rho" + std::to_string(i));
    return VarTable::make(std::move(names), std::vector<int>(n, 0));
}

// sigma[0..K] over rho_1..rho_K via the half-sum recursion.
std::vector<MultiPoly> sigma_polys(std::shared_ptr<const VarTable> vt, int K) {
    std::vector<MultiPoly> sigma(K + 1, MultiPoly(vt));
    sigma[0] = MultiPoly::constant(vt, Rat(1));
    if (K >= 1) sigma[1] = MultiPoly::variable(vt, 0) * Rat(-1, 2);
    for (int j = 2; j <= K; ++j) {
        MultiPoly acc = MultiPoly::variable(vt, j - 1) * Rat(j % 2 == 0 ? 1 : -1);
        for (int r = 1; r <= j - 1; ++r) acc -= sigma[j - r] * sigma[r];
        sigma[j] = acc * Rat(1, 2);
    }
    return sigma;
}

MultiPoly R_poly(const std::vector<MultiPoly>& sigma, int K, int j,
                 std::shared_ptr<const VarTable> vt) {
    MultiPoly acc(vt);
    for (int r = 0; r <= j; ++r) {
        const int a = j - r;
        if (a > K || r > K) continue;
        acc += sigma[a] * sigma[r];
    }
    return (j % 2 == 0) ? acc : -acc;
}

struct Replacement {
    int genIndex;        // nu_j, 1-based generator index
    int bound;           // proven lower bound for deg of the initial part
    MultiPoly subtract;  // S with r = q_{nu_j} - S(q_{nu_1},...,q_{nu_P})
    std::string formula;
};

}  // namespace

Tca3Certificate tca3_certificate(const Partition& lam, const AlgebraType& alg,
                                 uint64_t seed) {
    Tca3Certificate cert;
    std::optional<StarBlocks> sb;
    try {
        sb = star_blocks(lam);
    } catch (const std::invalid_argument&) {
    }
    const int k = lam.k();
    const bool allEven =
        std::all_of(lam.parts.begin(), lam.parts.end(), [](int p) { return p % 2 == 0; });
    int variant = 0;
    if (sb && sb->mu.size() == 1)
        variant = 1;
    else if (k == 4 && allEven)
        variant = 2;
    if (variant == 0) {
        cert.detail = "hypothesis not satisfied";
        return cert;
    }
    cert.applicable = true;
    cert.variant = variant;

    const int kprime = sb ? sb->kprime : 4;
    const int K = kprime / 2;
    const std::vector<int> nus = nu_sequence(lam, kprime);
    auto vt = rho_table(kprime);  // rho_u stands for q_{nu_u}

    std::vector<Replacement> reps;
    if (variant == 1) {
        std::vector<MultiPoly> sigma = sigma_polys(vt, K);
        const int hi = (kprime < k) ? kprime : k - 1;
        for (int j = K + 1; j <= hi; ++j) {
            Replacement r;
            r.genIndex = nus[j - 1];
            r.bound = j + 1;
            r.subtract = R_poly(sigma, K, j, vt);
            r.formula = "q" + std::to_string(r.genIndex) + " - R_" + std::to_string(j) +
                        "(q-prefix)";
            reps.push_back(std::move(r));
        }
        if (kprime == k) {
            Replacement r;
            r.genIndex = nus[k - 1];
            r.bound = K + 1;
            r.subtract = sigma[K];
            r.formula = "q" + std::to_string(r.genIndex) + " - Rtilde(q-prefix)";
            reps.push_back(std::move(r));
        }
    } else {
        Replacement r2;
        r2.genIndex = nus[1];
        r2.bound = 3;
        r2.subtract = MultiPoly::variable(vt, 0) * MultiPoly::variable(vt, 0) * Rat(1, 4);
        r2.formula = "q" + std::to_string(nus[1]) + " - (1/4) q" + std::to_string(nus[0]) + "^2";
        reps.push_back(std::move(r2));
        Replacement r3;
        r3.genIndex = nus[2];
        r3.bound = 4;
        r3.subtract = MultiPoly::variable(vt, 0) * MultiPoly::variable(vt, 3);
        r3.formula = "q" + std::to_string(nus[2]) + " - q" + std::to_string(nus[0]) + " q" +
                     std::to_string(nus[3]);
        reps.push_back(std::move(r3));
    }

    SliceContext ctx = make_context(lam, alg);
    const DefectReport dr = defect(lam, alg);

    // Does any rho_u with nu_u = ell (the Pfaffian generator in type D)
    // enter to an odd power anywhere, or get replaced itself?
    auto is_pf = [&](int genIndex) {
        return ctx.typeD && genIndex == ctx.ell;
    };
    bool pfOdd = false;
    for (const Replacement& r : reps) {
        if (is_pf(r.genIndex)) pfOdd = true;
        for (const auto& [e, c] : r.subtract.terms())
            for (int u = 0; u < kprime; ++u)
                if (e[u] % 2 == 1 && is_pf(nus[u])) pfOdd = true;
    }
    if (pfOdd && ctx.triple.detJ != 1)
        throw std::logic_error("tca3_certificate: odd Pfaffian power with Gram determinant -1");

    // Symbolic truncations at the largest needed cap.
    int maxCap = 0;
    for (const Replacement& r : reps) maxCap = std::max(maxCap, r.bound - 1);
    std::vector<MultiPoly> ks = kappa_all_truncated(ctx, maxCap);

    const std::vector<int> signs = pfOdd ? std::vector<int>{1, -1} : std::vector<int>{1};
    int chosenSign = 0;
    std::vector<bool> holds(reps.size(), false);
    for (int sign : signs) {
        std::vector<MultiPoly> args;
        for (int u = 0; u < kprime; ++u) {
            MultiPoly a = ks[nus[u]];
            if (is_pf(nus[u]) && sign < 0) a = -a;
            args.push_back(std::move(a));
        }
        bool all = true;
        std::vector<bool> h(reps.size(), false);
        for (size_t ri = 0; ri < reps.size(); ++ri) {
            const Replacement& r = reps[ri];
            const int cap = r.bound - 1;
            MultiPoly lead = ks[r.genIndex];
            if (is_pf(r.genIndex) && sign < 0) lead = -lead;
            MultiPoly diff =
                lead.truncated(cap) - r.subtract.compose(args, ctx.coords, cap);
            h[ri] = diff.is_zero();
            all = all && h[ri];
        }
        if (all) {
            chosenSign = sign;
            holds = h;
            break;
        }
        if (sign == signs.back()) holds = h;  // report the last attempt
    }
    cert.pfaffianSign = chosenSign == 0 ? 1 : chosenSign;
    for (size_t ri = 0; ri < reps.size(); ++ri) {
        ModifiedGenerator mg;
        mg.replacedIndex = reps[ri].genIndex;
        mg.requiredBound = reps[ri].bound;
        mg.boundHolds = holds[ri];
        mg.formula = reps[ri].formula;
        cert.modified.push_back(std::move(mg));
    }
    const bool boundsOk = chosenSign != 0;

    // Certified degrees of the untouched generators, then the improved sum.
    ProbeSummary ps = probe_slice(ctx, dr, seed);
    int sumMod = 0;
    std::vector<bool> replaced(ctx.ell + 1, false);
    for (const Replacement& r : reps) replaced[r.genIndex] = true;
    for (int i = 1; i <= ctx.ell; ++i)
        if (!replaced[i]) sumMod += ps.delta[i];
    for (const Replacement& r : reps) sumMod += r.bound;
    cert.modifiedDefect = ctx.dimGe + ctx.ell - 2 * sumMod;

    // Jacobian of the modified family at seeded points (evaluation path).
    int Dr = 0;
    for (int i = 1; i <= ctx.ell; ++i) Dr = std::max(Dr, ctx.genDegrees[i]);
    for (const Replacement& r : reps)
        for (const auto& [e, c] : r.subtract.terms()) {
            int d = 0;
            for (int u = 0; u < kprime; ++u) d += e[u] * ctx.genDegrees[nus[u]];
            Dr = std::max(Dr, d);
        }
    const int sign = cert.pfaffianSign;
    const int N = ctx.triple.J.rows();
    int bestRank = 0;
    for (uint64_t trial = 0; trial < 3 && bestRank < ctx.ell; ++trial) {
        std::vector<Rat> p = random_point(ctx.dimGe, seed + 4242, trial);
        std::vector<Rat> nodes;
        // values[i][node] for generators, rvals[ri][node] for replacements,
        // grads[i][l][node], rgrads[ri][l][node]
        std::vector<std::vector<Rat>> values(ctx.ell + 1);
        std::vector<std::vector<Rat>> rvals(reps.size());
        std::vector<std::vector<std::vector<Rat>>> grads(
            ctx.ell + 1, std::vector<std::vector<Rat>>(ctx.dimGe));
        std::vector<std::vector<std::vector<Rat>>> rgrads(
            reps.size(), std::vector<std::vector<Rat>>(ctx.dimGe));
        for (int tnode = 0; tnode <= Dr; ++tnode) {
            nodes.push_back(Rat(tnode));
            RationalMatrix a = ctx.triple.e;
            for (int l = 0; l < ctx.dimGe; ++l)
                if (p[l] != 0) a = a + ctx.gF.mats[l] * (p[l] * Rat(tnode));
            CharPolyFL fl = faddeev_leverrier(a);
            // generator values and gradients
            for (int i = 1; i <= ctx.ell; ++i) {
                if (ctx.typeD && i == ctx.ell) {
                    const RationalMatrix ja = ctx.triple.J * a;
                    Rat pf = pfaffian_value(ja);
                    values[i].push_back(Rat(sign) * pf);
                    RationalMatrix inv;
                    const bool fast = pf != 0;
                    if (fast) inv = inverse(ja);
                    for (int l = 0; l < ctx.dimGe; ++l) {
                        const RationalMatrix jz = ctx.triple.J * ctx.gF.mats[l];
                        Rat g = fast ? Rat(pf * trace_mul(inv, jz) / 2)
                                     : pfaffian_directional(ja, jz);
                        grads[i][l].push_back(Rat(sign) * g);
                    }
                } else {
                    values[i].push_back(fl.coeffs[2 * i]);
                    for (int l = 0; l < ctx.dimGe; ++l)
                        grads[i][l].push_back(-trace_mul(fl.M[2 * i - 1], ctx.gF.mats[l]));
                }
            }
            // replacement values and gradients via the chain rule
            std::vector<Rat> rho(kprime);
            for (int u = 0; u < kprime; ++u) rho[u] = values[nus[u]].back();
            for (size_t ri = 0; ri < reps.size(); ++ri) {
                const Replacement& r = reps[ri];
                rvals[ri].push_back(values[r.genIndex].back() - r.subtract.evaluate(rho));
                std::vector<Rat> dS(kprime);
                for (int u = 0; u < kprime; ++u)
                    dS[u] = r.subtract.derivative(u).evaluate(rho);
                for (int l = 0; l < ctx.dimGe; ++l) {
                    Rat g = grads[r.genIndex][l].back();
                    for (int u = 0; u < kprime; ++u)
                        if (dS[u] != 0) g -= dS[u] * grads[nus[u]][l].back();
                    rgrads[ri][l].push_back(g);
                }
            }
        }
        // Build the Jacobian rows of the modified initial components.
        RationalMatrix rows(ctx.ell, ctx.dimGe);
        bool ok = true;
        int rowIdx = 0;
        for (int i = 1; i <= ctx.ell && ok; ++i) {
            if (replaced[i]) continue;
            const int pw = ps.delta[i] - 1;
            for (int l = 0; l < ctx.dimGe; ++l) {
                std::vector<Rat> cs = interpolate_coeffs(nodes, grads[i][l]);
                if (pw >= 0 && pw < static_cast<int>(cs.size()))
                    rows.at(rowIdx, l) = cs[pw];
            }
            ++rowIdx;
        }
        for (size_t ri = 0; ri < reps.size() && ok; ++ri) {
            std::vector<Rat> vcs = interpolate_coeffs(nodes, rvals[ri]);
            const int m = min_nonzero_index(vcs);
            if (m < 0) { ok = false; break; }
            if (cert.modified[ri].observedDegree == 0 ||
                m < cert.modified[ri].observedDegree)
                cert.modified[ri].observedDegree = m;
            for (int l = 0; l < ctx.dimGe; ++l) {
                std::vector<Rat> cs = interpolate_coeffs(nodes, rgrads[ri][l]);
                if (m - 1 >= 0 && m - 1 < static_cast<int>(cs.size()))
                    rows.at(rowIdx, l) = cs[m - 1];
            }
            ++rowIdx;
        }
        if (ok) bestRank = std::max(bestRank, rank_of(rows));
        (void)N;
    }
    cert.jacobianRank = bestRank;
    cert.independent = bestRank == ctx.ell;
    cert.success = boundsOk && cert.modifiedDefect <= 0 && cert.independent;
    std::ostringstream os;
    os << "variant " << variant << ", modified defect " << cert.modifiedDefect
       << ", jacobian rank " << cert.jacobianRank;
    cert.detail = os.str();
    return cert;
}

}  // namespace nilslice
