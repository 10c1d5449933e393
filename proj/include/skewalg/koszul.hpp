#pragma once

#include "skew.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace skewalg {

// Graded algebra: a degree per basis element, components A_0..A_top,
// generated in degrees 0 and 1, unit and E concentrated in degree 0.
template <class K>
struct GradedAlgebra {
    AlgebraPtr<K> alg;
    std::vector<long> deg;
    long top = 0;

    std::vector<size_t> component(long d) const
    {
        std::vector<size_t> c;
        for (size_t i = 0; i < deg.size(); ++i)
            if (deg[i] == d)
                c.push_back(i);
        return c;
    }
};

template <class K>
long degree_of_vector(const Vec<K>& v, const std::vector<long>& deg)
{
    long d = -1;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero())
            continue;
        if (d == -1)
            d = deg[i];
        else if (deg[i] != d)
            return -1;
    }
    return d;
}

// Split a graded subspace into homogeneous rref vectors (per degree).
template <class K>
std::vector<Vec<K>> homogeneous_basis(const Subspace<K>& s, const std::vector<long>& deg,
                                      typename K::Field f)
{
    long top = 0;
    for (long d : deg)
        top = std::max(top, d);
    std::vector<Vec<K>> out;
    size_t total = 0;
    for (long d = 0; d <= top; ++d) {
        std::vector<Vec<K>> indicator;
        for (size_t i = 0; i < deg.size(); ++i)
            if (deg[i] == d) {
                Vec<K> e = vec_zero<K>(f, deg.size());
                e[i] = K::one(f);
                indicator.push_back(std::move(e));
            }
        if (indicator.empty())
            continue;
        auto meet = subspace_intersect<K>(f, deg.size(),
                                          {s.basis_vectors(), indicator});
        for (auto& v : meet) {
            out.push_back(std::move(v));
            ++total;
        }
    }
    if (total != s.dim())
        fail(ErrorCode::Internal, "subspace is not graded");
    return out;
}

template <class K>
GradedAlgebra<K> grade_algebra(AlgebraPtr<K> alg, std::vector<long> deg)
{
    const Algebra<K>& a = *alg;
    if (deg.size() != a.dim)
        fail(ErrorCode::GradingInconsistent, "one degree per basis element required");
    for (long d : deg)
        if (d < 0)
            fail(ErrorCode::GradingInconsistent, "negative degree");
    GradedAlgebra<K> g;
    g.alg = std::move(alg);
    g.deg = std::move(deg);
    for (long d : g.deg)
        g.top = std::max(g.top, d);

    // unit and E in degree 0
    if (degree_of_vector(a.unit, g.deg) != 0)
        fail(ErrorCode::GradingInconsistent, "unit not in degree 0");
    for (const auto& e : a.idems)
        if (degree_of_vector(e, g.deg) != 0)
            fail(ErrorCode::GradingInconsistent, "idempotent not in degree 0");

    // A_i · A_j ⊆ A_{i+j}
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j)
            for (const auto& [idx, c] : a.entry(i, j)) {
                (void)c;
                if (g.deg[idx] != g.deg[i] + g.deg[j])
                    fail(ErrorCode::GradingInconsistent,
                         "product of degrees " + std::to_string(g.deg[i]) + "," +
                             std::to_string(g.deg[j]) + " lands in degree " +
                             std::to_string(g.deg[idx]));
            }

    // generated in degrees 0 and 1: A_1·A_d spans A_{d+1}
    auto f = a.field;
    for (long d = 0; d + 1 <= g.top; ++d) {
        auto next = g.component(d + 1);
        if (next.empty())
            continue;
        std::vector<Vec<K>> prods;
        for (size_t i : g.component(1))
            for (size_t j : g.component(d))
                prods.push_back(sparse_to_dense(a, a.entry(i, j)));
        Subspace<K> span = Subspace<K>::from_vectors(f, a.dim, prods);
        if (span.dim() != next.size())
            fail(ErrorCode::NotDegreeOneGenerated,
                 "A_1 * A_" + std::to_string(d) + " does not span A_" + std::to_string(d + 1));
    }
    return g;
}

// Skew algebra of a graded algebra under a grade-preserving action:
// deg(λ⊗g) = deg(λ), (ΛG)_0 = Λ_0 ⊗ kG.
template <class K>
struct GradedSkew {
    SkewAlgebra<K> skew;
    GradedAlgebra<K> graded;
};

template <class K>
GradedSkew<K> grade_skew(const GradedAlgebra<K>& ga, const AlgebraAction<K>& act)
{
    if (ga.alg != act.alg)
        fail(ErrorCode::AlgebraMismatch, "action is not on the graded algebra");
    for (size_t e = 0; e < act.grp->order(); ++e) {
        const Mat<K>& m = act.maps[e];
        for (size_t c = 0; c < m.cols(); ++c)
            for (size_t r = 0; r < m.rows(); ++r)
                if (!m.at(r, c).is_zero() && ga.deg[r] != ga.deg[c])
                    fail(ErrorCode::NotGradePreserving,
                         "group element " + std::to_string(e) + " mixes degrees");
    }
    GradedSkew<K> out;
    out.skew = build_skew(act, false);
    std::vector<long> deg;
    for (size_t e = 0; e < act.grp->order(); ++e)
        for (size_t i = 0; i < ga.alg->dim; ++i)
            deg.push_back(ga.deg[i]);
    out.graded = grade_algebra(out.skew.alg, std::move(deg));
    return out;
}

// --------------------------------------------------------------------------
// Graded modules and graded minimal resolutions

template <class K>
struct GradedRep {
    Rep<K> rep;
    std::vector<long> deg;
};

template <class K>
std::vector<std::string> verify_graded_rep(const GradedAlgebra<K>& ga, const GradedRep<K>& m)
{
    auto bad = verify_rep(m.rep);
    for (size_t i = 0; i < ga.alg->dim && bad.size() < 4; ++i)
        for (size_t c = 0; c < m.rep.dim; ++c)
            for (size_t r = 0; r < m.rep.dim; ++r)
                if (!m.rep.act[i].at(r, c).is_zero() &&
                    m.deg[r] != m.deg[c] + ga.deg[i]) {
                    bad.push_back("action of degree " + std::to_string(ga.deg[i]) +
                                  " does not shift module degrees");
                    break;
                }
    return bad;
}

// A_0 = A/J as a graded module in degree 0.
template <class K>
GradedRep<K> degree_zero_quotient_module(const GradedAlgebra<K>& ga)
{
    auto f = ga.alg->field;
    std::vector<Vec<K>> jvecs;
    for (size_t i = 0; i < ga.alg->dim; ++i)
        if (ga.deg[i] > 0) {
            Vec<K> e = vec_zero<K>(f, ga.alg->dim);
            e[i] = K::one(f);
            jvecs.push_back(std::move(e));
        }
    Subspace<K> j = Subspace<K>::from_vectors(f, ga.alg->dim, jvecs);
    Rep<K> reg = regular_module(ga.alg);
    auto q = quotient_module(reg, j);
    GradedRep<K> out;
    out.rep = std::move(q.rep);
    out.deg.assign(out.rep.dim, 0);
    return out;
}

// The degree-0 part as a standalone algebra, with its embedding.
template <class K>
struct DegreeZeroPart {
    AlgebraPtr<K> alg;
    SubalgebraEmbedding<K> embedding;
    std::vector<size_t> coords; // A-coordinates of degree 0
};

template <class K>
DegreeZeroPart<K> degree_zero_subalgebra(const GradedAlgebra<K>& ga)
{
    const Algebra<K>& a = *ga.alg;
    auto f = a.field;
    DegreeZeroPart<K> out;
    out.coords = ga.component(0);
    Algebra<K> a0;
    a0.field = f;
    a0.dim = out.coords.size();
    a0.table.resize(a0.dim * a0.dim);
    for (size_t i = 0; i < a0.dim; ++i)
        a0.labels.push_back(a.labels[out.coords[i]]);
    auto coord_pos = [&](size_t idx) -> size_t {
        for (size_t i = 0; i < out.coords.size(); ++i)
            if (out.coords[i] == idx)
                return i;
        fail(ErrorCode::Internal, "degree-0 product escapes degree 0");
    };
    for (size_t i = 0; i < a0.dim; ++i)
        for (size_t j = 0; j < a0.dim; ++j) {
            typename Algebra<K>::SparseVec sv;
            for (const auto& [idx, c] : a.entry(out.coords[i], out.coords[j]))
                sv.emplace_back(coord_pos(idx), c);
            a0.entry(i, j) = std::move(sv);
        }
    a0.unit = vec_zero<K>(f, a0.dim);
    for (size_t i = 0; i < a0.dim; ++i)
        a0.unit[i] = a.unit[out.coords[i]];
    for (const auto& e : a.idems) {
        Vec<K> v = vec_zero<K>(f, a0.dim);
        for (size_t i = 0; i < a0.dim; ++i)
            v[i] = e[out.coords[i]];
        a0.idems.push_back(std::move(v));
    }
    out.alg = std::make_shared<Algebra<K>>(std::move(a0));
    out.embedding.sub = out.alg;
    out.embedding.big = ga.alg;
    out.embedding.embed = Mat<K>(f, a.dim, out.coords.size());
    for (size_t i = 0; i < out.coords.size(); ++i)
        out.embedding.embed.at(out.coords[i], i) = K::one(f);
    return out;
}

// Degree-d component of a graded module as an A_0-module.
template <class K>
Rep<K> component_module(const GradedRep<K>& m, long d, const DegreeZeroPart<K>& a0)
{
    auto f = a0.alg->field;
    std::vector<size_t> idxs;
    for (size_t i = 0; i < m.rep.dim; ++i)
        if (m.deg[i] == d)
            idxs.push_back(i);
    Rep<K> out;
    out.alg = a0.alg;
    out.dim = idxs.size();
    for (size_t j = 0; j < a0.alg->dim; ++j) {
        Mat<K> big = m.rep.act_vec(a0.embedding.embed.col(j));
        Mat<K> blk(f, out.dim, out.dim);
        for (size_t r = 0; r < idxs.size(); ++r)
            for (size_t c = 0; c < idxs.size(); ++c)
                blk.at(r, c) = big.at(idxs[r], idxs[c]);
        out.act.push_back(std::move(blk));
    }
    return out;
}

template <class K>
struct GradedCoverStep {
    std::vector<long> generator_degrees; // one per cover summand, sorted
    size_t cover_dim = 0;
    size_t syzygy_dim = 0;
};

template <class K>
struct GradedCoverResult {
    GradedRep<K> syzygy;
    GradedCoverStep<K> info;
};

// Minimal graded projective cover: same selection as the ungraded cover, with
// homogeneous picks and degree bookkeeping.
template <class K>
GradedCoverResult<K> graded_cover(AlgebraCtx<K>& ctx, const GradedAlgebra<K>& ga,
                                  const GradedRep<K>& m)
{
    const Algebra<K>& a = *ctx.A;
    auto f = a.field;
    GradedCoverResult<K> out;
    if (m.rep.dim == 0) {
        out.syzygy.rep = zero_module(ctx.A);
        return out;
    }

    // homogeneous radical of the algebra
    auto hrad = homogeneous_basis(ctx.rad(), ga.deg, f);
    std::vector<Vec<K>> rm;
    for (const auto& r : hrad) {
        Mat<K> act = m.rep.act_vec(r);
        for (size_t c = 0; c < m.rep.dim; ++c)
            rm.push_back(act.col(c));
    }
    Subspace<K> radm = Subspace<K>::from_vectors(f, m.rep.dim, rm);
    auto mtop = quotient_module(m.rep, radm);
    std::vector<long> top_deg;
    {
        std::vector<bool> is_pivot(m.rep.dim, false);
        for (size_t c : radm.pivots())
            is_pivot[c] = true;
        for (size_t i = 0; i < m.rep.dim; ++i)
            if (!is_pivot[i])
                top_deg.push_back(m.deg[i]);
    }

    const auto& projs = ctx.projectives();
    const auto& prims = ctx.prim_idems();

    struct Pick {
        size_t j;
        Vec<K> v;
        long d;
    };
    std::vector<Pick> picks;
    Subspace<K> covered(f, mtop.rep.dim);
    // homogeneous candidates, lowest degree first for determinism
    std::vector<Pick> candidates;
    for (size_t j = 0; j < prims.size(); ++j) {
        Mat<K> fm = m.rep.act_vec(prims[j]);
        std::vector<Vec<K>> cols;
        for (size_t c = 0; c < m.rep.dim; ++c)
            cols.push_back(fm.col(c));
        Subspace<K> img = Subspace<K>::from_vectors(f, m.rep.dim, cols);
        for (auto& v : homogeneous_basis(img, m.deg, f)) {
            long d = degree_of_vector(v, m.deg);
            candidates.push_back({j, std::move(v), d});
        }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Pick& x, const Pick& y) { return x.d < y.d; });
    for (const auto& cand : candidates) {
        if (covered.dim() == mtop.rep.dim)
            break;
        Vec<K> tv = mtop.projection.apply(cand.v);
        if (vec_is_zero(tv) || covered.contains(tv))
            continue;
        picks.push_back(cand);
        covered = subspace_sum(covered, invariant_closure(mtop.rep, {tv}));
    }
    if (covered.dim() != mtop.rep.dim)
        fail(ErrorCode::Internal, "graded cover selection incomplete");

    // assemble the cover with degree shifts
    Rep<K> P = zero_module(ctx.A);
    std::vector<long> pdeg;
    std::vector<Mat<K>> cols;
    for (const auto& pk : picks) {
        const auto& pj = projs[pk.j];
        out.info.generator_degrees.push_back(pk.d);
        Mat<K> blk(f, m.rep.dim, pj.rep.dim);
        for (size_t c = 0; c < pj.rep.dim; ++c) {
            Vec<K> u = pj.inclusion.col(c);
            blk.set_col(c, m.rep.act_vec(u).apply(pk.v));
            long du = degree_of_vector(u, ga.deg);
            if (du < 0)
                fail(ErrorCode::Internal, "projective basis not homogeneous");
            pdeg.push_back(du + pk.d);
        }
        cols.push_back(std::move(blk));
        P = direct_sum(P, pj.rep);
    }
    std::sort(out.info.generator_degrees.begin(), out.info.generator_degrees.end());
    out.info.cover_dim = P.dim;

    Mat<K> surj(f, m.rep.dim, P.dim);
    {
        size_t off = 0;
        for (const auto& blk : cols) {
            for (size_t i = 0; i < m.rep.dim; ++i)
                for (size_t c = 0; c < blk.cols(); ++c)
                    surj.at(i, off + c) = blk.at(i, c);
            off += blk.cols();
        }
    }
    if (surj.rank() != m.rep.dim)
        fail(ErrorCode::Internal, "graded cover map is not surjective");
    Subspace<K> ker = Subspace<K>::from_vectors(f, P.dim, surj.kernel_basis());
    auto hker = homogeneous_basis(ker, pdeg, f);
    Subspace<K> kers = Subspace<K>::from_vectors(f, P.dim, hker);
    auto sub = submodule(P, kers);
    out.syzygy.rep = std::move(sub.rep);
    for (size_t i = 0; i < kers.dim(); ++i) {
        long d = degree_of_vector(kers.basis_matrix().row(i), pdeg);
        if (d < 0)
            fail(ErrorCode::Internal, "syzygy basis not homogeneous");
        out.syzygy.deg.push_back(d);
    }
    out.info.syzygy_dim = out.syzygy.rep.dim;
    return out;
}

template <class K>
struct GradedResolution {
    std::vector<GradedCoverStep<K>> steps;
    GradedRep<K> last_syzygy;
};

template <class K>
GradedResolution<K> minimal_graded_resolution(AlgebraCtx<K>& ctx, const GradedAlgebra<K>& ga,
                                              GradedRep<K> m, size_t steps)
{
    GradedResolution<K> out;
    for (size_t s = 0; s < steps && m.rep.dim > 0; ++s) {
        auto cov = graded_cover(ctx, ga, m);
        out.steps.push_back(cov.info);
        m = cov.syzygy;
    }
    out.last_syzygy = std::move(m);
    return out;
}

// --------------------------------------------------------------------------
// Generalized Koszul verification up to a degree bound

struct KoszulVerdict {
    size_t bound = 0;
    std::vector<std::vector<long>> step_degrees; // cover generator degrees per step
    std::vector<bool> omega_component_projective;
    bool linear = false;
    size_t fails_at = 0;
    long offending_degree = 0;

    bool same_outcome(const KoszulVerdict& o) const
    {
        if (linear != o.linear)
            return false;
        return linear || fails_at == o.fails_at;
    }
};

template <class K>
KoszulVerdict is_koszul_up_to(const GradedAlgebra<K>& ga, size_t n)
{
    AlgebraCtx<K> ctx(ga.alg);
    auto a0 = degree_zero_subalgebra(ga);
    AlgebraCtx<K> a0ctx(a0.alg);
    GradedRep<K> m = degree_zero_quotient_module(ga);

    KoszulVerdict v;
    v.bound = n;
    v.linear = true;
    // Ω^0(M)_0 = M_0 = A_0, projective over itself
    v.omega_component_projective.push_back(true);
    for (size_t step = 0; step < n && m.rep.dim > 0; ++step) {
        auto cov = graded_cover(ctx, ga, m);
        v.step_degrees.push_back(cov.info.generator_degrees);
        for (long d : cov.info.generator_degrees)
            if (d != (long)step) {
                v.linear = false;
                v.fails_at = step;
                v.offending_degree = d;
                return v;
            }
        m = cov.syzygy;
        if (m.rep.dim > 0) {
            Rep<K> comp = component_module(m, (long)step + 1, a0);
            v.omega_component_projective.push_back(is_projective(a0ctx, comp));
        }
    }
    return v;
}

// Theorem 5.7 at a bounded depth: Λ and ΛG are generalized Koszul together.
template <class K>
struct KoszulTransfer {
    KoszulVerdict lambda;
    KoszulVerdict skew;
    bool agree = false;
};

template <class K>
KoszulTransfer<K> koszul_transfer_check(const GradedAlgebra<K>& ga, const AlgebraAction<K>& act,
                                        size_t n)
{
    KoszulTransfer<K> out;
    auto gs = grade_skew(ga, act);
    out.lambda = is_koszul_up_to(ga, n);
    out.skew = is_koszul_up_to(gs.graded, n);
    out.agree = out.lambda.same_outcome(out.skew);
    return out;
}

// --------------------------------------------------------------------------
// Ā = A/(A·rad(A_0)·A) and the classical cross-check

template <class K>
struct AbarReduction {
    GradedAlgebra<K> abar;
    bool hyp_a_projective_over_a0 = false;
    bool hyp_rad_commutes = false;
    std::vector<std::string> skipped_reasons;
    std::optional<bool> agreement; // verdicts compared when hypotheses hold
};

template <class K>
AbarReduction<K> abar_reduction(const GradedAlgebra<K>& ga, size_t check_depth = 6)
{
    const Algebra<K>& a = *ga.alg;
    auto f = a.field;
    AbarReduction<K> out;
    auto a0 = degree_zero_subalgebra(ga);
    Subspace<K> r0 = radical(*a0.alg);

    // embed rad(A_0) into A and close to a two-sided ideal
    std::vector<Vec<K>> gens;
    for (const auto& rv : r0.basis_vectors())
        gens.push_back(a0.embedding.embed.apply(rv));
    Subspace<K> ideal = ideal_closure(a, gens);
    auto q = quotient_algebra(a, ideal);
    std::vector<long> qdeg;
    for (size_t r : q.reps)
        qdeg.push_back(ga.deg[r]);
    AlgebraPtr<K> qa = std::make_shared<Algebra<K>>(std::move(q.alg));
    out.abar = grade_algebra(qa, std::move(qdeg));

    // hypotheses of the reduction theorem
    {
        Rep<K> reg = regular_module(ga.alg);
        Rep<K> a_over_a0 = restrict_module(reg, a0.embedding);
        AlgebraCtx<K> a0ctx(a0.alg);
        out.hyp_a_projective_over_a0 = is_projective(a0ctx, a_over_a0);
        if (!out.hyp_a_projective_over_a0)
            out.skipped_reasons.push_back("A is not projective as a left A_0-module");
    }
    {
        std::vector<Vec<K>> left, right;
        for (const auto& rv : r0.basis_vectors()) {
            Vec<K> r_in_a = a0.embedding.embed.apply(rv);
            for (size_t i : ga.component(1)) {
                left.push_back(a.mul(r_in_a, a.basis_vec(i)));
                right.push_back(a.mul(a.basis_vec(i), r_in_a));
            }
        }
        Subspace<K> ls = Subspace<K>::from_vectors(f, a.dim, left);
        Subspace<K> rs = Subspace<K>::from_vectors(f, a.dim, right);
        out.hyp_rad_commutes = (ls == rs);
        if (!out.hyp_rad_commutes)
            out.skipped_reasons.push_back("rad(A_0)·A_1 differs from A_1·rad(A_0)");
    }
    if (out.hyp_a_projective_over_a0 && out.hyp_rad_commutes) {
        auto va = is_koszul_up_to(ga, check_depth);
        auto vb = is_koszul_up_to(out.abar, check_depth);
        out.agreement = va.same_outcome(vb);
    }
    return out;
}

// --------------------------------------------------------------------------
// Lemma 5.11 at the dimension level:
// dim Ext^s_{ΛG}(M⊗kG, N⊗kG) = |G| · dim Ext^s_Λ(M, N)

struct ExtDimTable {
    std::vector<size_t> lambda_dims;
    std::vector<size_t> skew_dims;
    size_t group_order = 0;
    bool identity_holds = false;
};

template <class K>
ExtDimTable ext_dim_table(const SkewAlgebra<K>& sk, const GradedAlgebra<K>& ga,
                          const Rep<K>& m, const std::vector<long>& mdeg, const Rep<K>& n,
                          size_t smax)
{
    if (m.alg != sk.alg || n.alg != sk.alg)
        fail(ErrorCode::AlgebraMismatch, "ext table expects ΛG-modules");
    auto emb = sk.lambda_embedding();
    Rep<K> mres = restrict_module(m, emb);
    Rep<K> nres = restrict_module(n, emb);

    // precondition: M restricted to Λ is generalized Koszul up to smax
    {
        AlgebraCtx<K> lam_ctx(sk.lambda);
        GradedRep<K> gm{mres, mdeg};
        auto bad = verify_graded_rep(ga, gm);
        if (!bad.empty())
            fail(ErrorCode::PreconditionFailed, "module grading invalid: " + bad[0]);
        GradedRep<K> cur = gm;
        for (size_t s = 0; s < smax && cur.rep.dim > 0; ++s) {
            auto cov = graded_cover(lam_ctx, ga, cur);
            for (long d : cov.info.generator_degrees)
                if (d != (long)s)
                    fail(ErrorCode::PreconditionFailed,
                         "M is not generalized Koszul as a Λ-module (step " +
                             std::to_string(s) + " generated in degree " + std::to_string(d) +
                             ")");
            cur = cov.syzygy;
        }
    }

    ExtDimTable out;
    out.group_order = sk.grp->order();
    {
        AlgebraCtx<K> lam_ctx(sk.lambda);
        out.lambda_dims = ext_dims(lam_ctx, mres, nres, smax);
    }
    {
        // M ⊗ kG ≅ (M↓)↑ along the trivial subgroup
        Subgroup triv = subgroup_from_elements(*sk.grp, {0});
        auto sub = skew_subalgebra(sk, triv);
        Rep<K> m_over_sub = mres;
        m_over_sub.alg = sub.sub.alg;
        Rep<K> n_over_sub = nres;
        n_over_sub.alg = sub.sub.alg;
        Rep<K> mup = induce_module(sk, sub, m_over_sub);
        Rep<K> nup = induce_module(sk, sub, n_over_sub);
        AlgebraCtx<K> sk_ctx(sk.alg);
        out.skew_dims = ext_dims(sk_ctx, mup, nup, smax);
    }
    out.identity_holds = true;
    for (size_t s = 0; s <= smax; ++s)
        if (out.skew_dims[s] != out.group_order * out.lambda_dims[s])
            out.identity_holds = false;
    return out;
}

} // namespace skewalg
