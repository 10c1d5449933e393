#pragma once

#include "group.hpp"
#include "poset.hpp"
#include "quiver.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skewalg {

// Action of a finite group on an algebra: one invertible matrix per group
// element, columns = images of basis vectors.
template <class K>
struct AlgebraAction {
    AlgebraPtr<K> alg;
    GroupPtr grp;
    std::vector<Mat<K>> maps; // indexed like grp->elements

    const Mat<K>& map_of(size_t g) const { return maps[g]; }
    Vec<K> apply(size_t g, const Vec<K>& v) const { return maps[g].apply(v); }
};

template <class K>
AlgebraAction<K> trivial_action(AlgebraPtr<K> alg, GroupPtr grp)
{
    AlgebraAction<K> a;
    a.alg = std::move(alg);
    a.grp = std::move(grp);
    a.maps.assign(a.grp->order(), Mat<K>::identity(a.alg->field, a.alg->dim));
    return a;
}

// Extend generator matrices to the whole group along BFS words; the element
// discovered as gen∘parent gets matrix M_gen·M_parent. Well-definedness is
// checked on all generator × element pairs, which pins every pair of words
// evaluating to the same element.
template <class K>
AlgebraAction<K> action_from_generator_matrices(AlgebraPtr<K> alg, GroupPtr grp,
                                                const std::vector<Mat<K>>& gen_maps)
{
    const PermGroup& g = *grp;
    AlgebraAction<K> act;
    act.alg = alg;
    act.grp = grp;
    act.maps.assign(g.order(), Mat<K>());
    act.maps[0] = Mat<K>::identity(alg->field, alg->dim);
    for (size_t i = 1; i < g.order(); ++i) {
        auto [parent, gi] = g.bfs_parent[i];
        act.maps[i] = gen_maps.at(gi) * act.maps[parent];
    }
    for (size_t gi = 0; gi < g.generators.size(); ++gi)
        for (size_t h = 0; h < g.order(); ++h) {
            size_t gh = g.mul(g.generators[gi], h);
            if (!(gen_maps[gi] * act.maps[h] == act.maps[gh]))
                fail(ErrorCode::ActionError,
                     "generator maps do not induce a well-defined action");
        }
    return act;
}

// One generator of a path-algebra action: a vertex permutation plus the image
// of each arrow as a linear combination of arrows.
template <class K>
struct QuiverGeneratorMap {
    Perm vertex_perm;                                        // on quiver vertices
    std::vector<std::vector<std::pair<K, std::string>>> arrow_images; // per arrow
};

template <class K>
Mat<K> quiver_map_matrix(const PathAlgebraData<K>& pa, const QuiverGeneratorMap<K>& gm)
{
    const Algebra<K>& a = *pa.alg;
    const QuiverPresentation& q = *pa.quiver;
    if (gm.vertex_perm.size() != q.vertices.size() || gm.arrow_images.size() != q.arrows.size())
        fail(ErrorCode::ActionError, "generator map shape mismatch");

    std::vector<Vec<K>> arrow_img;
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        Vec<K> v = a.zero_vec();
        for (const auto& [c, name] : gm.arrow_images[ai]) {
            size_t bi = pa.arrow_basis[q.arrow_index(name)];
            v[bi] += c;
        }
        arrow_img.push_back(std::move(v));
    }

    Mat<K> m(a.field, a.dim, a.dim);
    for (size_t b = 0; b < a.dim; ++b) {
        const PathWord& w = pa.words[b];
        Vec<K> img;
        if (w.trivial()) {
            img = a.basis_vec(pa.vertex_basis[gm.vertex_perm[w.src]]);
        } else {
            img = arrow_img[w.arrows[0]];
            for (size_t i = 1; i < w.arrows.size(); ++i)
                img = a.mul(arrow_img[w.arrows[i]], img);
        }
        m.set_col(b, img);
    }
    return m;
}

template <class K>
AlgebraAction<K> action_on_path_algebra(const PathAlgebraData<K>& pa, GroupPtr grp,
                                        const std::vector<QuiverGeneratorMap<K>>& gens)
{
    std::vector<Mat<K>> mats;
    for (const auto& gm : gens)
        mats.push_back(quiver_map_matrix(pa, gm));
    return action_from_generator_matrices(pa.alg, std::move(grp), mats);
}

// A poset action induces an incidence-algebra action by (a,b) -> (g(a), g(b)).
template <class K>
AlgebraAction<K> action_on_incidence_algebra(const IncidenceData<K>& inc,
                                             const PosetAction& pact)
{
    pact.validate();
    std::vector<Mat<K>> mats;
    for (size_t gi : pact.grp->generators) {
        const Perm& perm = pact.perms[gi];
        Mat<K> m(inc.alg->field, inc.alg->dim, inc.alg->dim);
        for (size_t b = 0; b < inc.alg->dim; ++b) {
            auto [x, y] = inc.pairs[b];
            m.at(inc.pair_index(perm[x], perm[y]), b) = K::one(inc.alg->field);
        }
        mats.push_back(std::move(m));
    }
    return action_from_generator_matrices(inc.alg, pact.grp, mats);
}

template <class K>
AlgebraAction<K> action_on_incidence_algebra(const IncidenceData<K>& inc, GroupPtr grp)
{
    return action_on_incidence_algebra(inc, natural_poset_action(*inc.poset, std::move(grp)));
}

struct ActionReport {
    std::vector<std::string> violations;
    bool e_closed = true;

    bool valid() const { return violations.empty(); }
};

template <class K>
ActionReport verify_action(const AlgebraAction<K>& act)
{
    ActionReport rep;
    const Algebra<K>& a = *act.alg;
    const PermGroup& g = *act.grp;
    if (act.maps.size() != g.order()) {
        rep.violations.push_back("one matrix per group element required");
        return rep;
    }
    for (size_t e = 0; e < g.order() && rep.violations.size() < 8; ++e) {
        const Mat<K>& m = act.maps[e];
        if (m.rows() != a.dim || m.cols() != a.dim) {
            rep.violations.push_back("map " + std::to_string(e) + " has wrong shape");
            continue;
        }
        if (m.rank() != a.dim)
            rep.violations.push_back("map " + std::to_string(e) + " is not invertible");
        if (m.apply(a.unit) != a.unit)
            rep.violations.push_back("map " + std::to_string(e) + " moves the unit");
        for (size_t i = 0; i < a.dim && rep.violations.size() < 8; ++i)
            for (size_t j = 0; j < a.dim; ++j) {
                Vec<K> lhs = m.apply(sparse_to_dense(a, a.entry(i, j)));
                Vec<K> rhs = a.mul(m.apply(a.basis_vec(i)), m.apply(a.basis_vec(j)));
                if (lhs != rhs) {
                    rep.violations.push_back("map " + std::to_string(e) +
                                             " is not multiplicative");
                    break;
                }
            }
    }
    for (size_t x = 0; x < g.order() && rep.violations.size() < 8; ++x)
        for (size_t y = 0; y < g.order(); ++y) {
            if (!(act.maps[x] * act.maps[y] == act.maps[g.mul(x, y)])) {
                rep.violations.push_back("action axiom fails on element pair (" +
                                         std::to_string(x) + "," + std::to_string(y) + ")");
                break;
            }
        }
    // E-closure (recorded, not a violation: the hypothesis is optional)
    for (size_t e = 0; e < g.order() && rep.e_closed; ++e)
        for (const auto& idem : a.idems) {
            Vec<K> img = act.maps[e].apply(idem);
            bool found = false;
            for (const auto& other : a.idems)
                if (img == other) {
                    found = true;
                    break;
                }
            if (!found) {
                rep.e_closed = false;
                break;
            }
        }
    return rep;
}

// Permutation each group element induces on E (requires closure).
template <class K>
std::vector<Perm> e_permutations(const AlgebraAction<K>& act)
{
    const Algebra<K>& a = *act.alg;
    const PermGroup& g = *act.grp;
    std::vector<Perm> perms(g.order(), Perm(a.idems.size()));
    for (size_t e = 0; e < g.order(); ++e)
        for (size_t i = 0; i < a.idems.size(); ++i) {
            Vec<K> img = act.maps[e].apply(a.idems[i]);
            bool found = false;
            for (size_t j = 0; j < a.idems.size(); ++j)
                if (img == a.idems[j]) {
                    perms[e][i] = j;
                    found = true;
                    break;
                }
            if (!found)
                fail(ErrorCode::ENotClosed, "E is not closed under the action");
        }
    return perms;
}

template <class K>
struct IdempotentOrbits {
    std::vector<std::vector<size_t>> orbits; // sorted members, sorted by representative
    std::vector<size_t> representatives;     // lowest index in each orbit
    Vec<K> epsilon;                          // sum of representatives
    std::vector<Perm> e_perms;               // permutation of E per group element
};

template <class K>
IdempotentOrbits<K> idempotent_orbits(const AlgebraAction<K>& act)
{
    const Algebra<K>& a = *act.alg;
    auto perms = e_permutations(act);
    size_t n = a.idems.size();
    std::vector<bool> seen(n, false);
    IdempotentOrbits<K> out;
    out.e_perms = perms;
    for (size_t i = 0; i < n; ++i) {
        if (seen[i])
            continue;
        std::vector<size_t> orbit;
        std::vector<size_t> stack{i};
        seen[i] = true;
        while (!stack.empty()) {
            size_t x = stack.back();
            stack.pop_back();
            orbit.push_back(x);
            for (const auto& p : perms)
                if (!seen[p[x]]) {
                    seen[p[x]] = true;
                    stack.push_back(p[x]);
                }
        }
        std::sort(orbit.begin(), orbit.end());
        out.representatives.push_back(orbit[0]);
        out.orbits.push_back(std::move(orbit));
    }
    out.epsilon = a.zero_vec();
    for (size_t r : out.representatives)
        for (size_t k = 0; k < a.dim; ++k)
            out.epsilon[k] += a.idems[r][k];
    return out;
}

template <class K>
struct FreenessResult {
    bool free = true;
    size_t witness_elem = 0; // group element fixing an idempotent
    size_t witness_idem = 0;
};

template <class K>
FreenessResult<K> is_free_on_idempotents(const AlgebraAction<K>& act)
{
    auto perms = e_permutations(act);
    FreenessResult<K> r;
    for (size_t e = 1; e < perms.size(); ++e)
        for (size_t i = 0; i < perms[e].size(); ++i)
            if (perms[e][i] == i) {
                r.free = false;
                r.witness_elem = e;
                r.witness_idem = i;
                return r;
            }
    return r;
}

// The fixed subalgebra Λ^G = ⋂_g ker(map(g) − id), with induced structure
// constants.  When E is closed under the action, the orbit sums of E become
// the distinguished idempotents of Λ^G.
template <class K>
struct FixedSubalgebra {
    AlgebraPtr<K> alg;
    std::vector<Vec<K>> basis; // vectors inside Λ
    Mat<K> embed;              // dim(Λ) × dim(Λ^G)
};

template <class K>
FixedSubalgebra<K> fixed_subalgebra(const AlgebraAction<K>& act)
{
    const Algebra<K>& a = *act.alg;
    const PermGroup& g = *act.grp;
    std::vector<std::vector<Vec<K>>> kernels;
    for (size_t gi : g.generators) {
        Mat<K> diff = act.maps[gi] - Mat<K>::identity(a.field, a.dim);
        kernels.push_back(diff.kernel_basis());
    }
    std::vector<Vec<K>> fixed = kernels.empty()
                                    ? Subspace<K>::full(a.field, a.dim).basis_vectors()
                                    : subspace_intersect<K>(a.field, a.dim, kernels);
    Subspace<K> sub = Subspace<K>::from_vectors(a.field, a.dim, fixed);

    Algebra<K> s;
    s.field = a.field;
    s.dim = sub.dim();
    s.table.resize(s.dim * s.dim);
    auto basis = sub.basis_vectors();
    for (size_t i = 0; i < s.dim; ++i)
        s.labels.push_back("f" + std::to_string(i));
    for (size_t i = 0; i < s.dim; ++i)
        for (size_t j = 0; j < s.dim; ++j) {
            Vec<K> prod = a.mul(basis[i], basis[j]);
            if (!sub.contains(prod))
                fail(ErrorCode::Internal, "fixed subspace not closed under multiplication");
            set_sparse_from_dense<K>(s.entry(i, j), sub.coords(prod));
        }
    s.unit = sub.coords(a.unit);

    // try orbit sums of E as the idempotent set
    bool closed = true;
    try {
        auto orb = idempotent_orbits(act);
        for (const auto& o : orb.orbits) {
            Vec<K> sum = a.zero_vec();
            for (size_t i : o)
                for (size_t k = 0; k < a.dim; ++k)
                    sum[k] += a.idems[i][k];
            s.idems.push_back(sub.coords(sum));
        }
    } catch (const Error&) {
        closed = false;
    }
    if (!closed || s.idems.empty())
        s.idems = {s.unit};

    FixedSubalgebra<K> out;
    out.basis = basis;
    out.embed = Mat<K>::from_cols(a.field, basis);
    out.alg = std::make_shared<Algebra<K>>(std::move(s));
    return out;
}

// Restrict an action to a subgroup.
template <class K>
AlgebraAction<K> restrict_action(const AlgebraAction<K>& act, const Subgroup& sub)
{
    AlgebraAction<K> r;
    r.alg = act.alg;
    r.grp = std::make_shared<PermGroup>(sub.group);
    for (size_t i = 0; i < sub.group.order(); ++i)
        r.maps.push_back(act.maps[sub.parent_indices[i]]);
    return r;
}

} // namespace skewalg
