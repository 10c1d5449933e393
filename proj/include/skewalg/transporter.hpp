#pragma once

#include "skew.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace skewalg {

// Morphism of T = G∝P: a poset relation α: x ≤ y twisted by g; the morphism
// αg has source g^{-1}(x) and target y.
struct TransporterMorphism {
    size_t pair = 0; // index into relation pairs (x, y)
    size_t g = 0;    // group element index
};

struct TransporterCategory {
    PosetAction action;
    std::vector<std::pair<size_t, size_t>> pairs;
    std::vector<TransporterMorphism> morphisms;
    std::vector<long> comp; // comp[i*m+j] = index of m_i ∘ m_j, or -1

    const PosetData& poset() const { return *action.poset; }
    const PermGroup& group() const { return *action.grp; }

    size_t size() const { return morphisms.size(); }

    size_t source(size_t m) const
    {
        size_t x = pairs[morphisms[m].pair].first;
        return perm_inverse(action.perms[morphisms[m].g])[x];
    }

    size_t target(size_t m) const { return pairs[morphisms[m].pair].second; }

    long compose(size_t i, size_t j) const { return comp[i * size() + j]; }

    size_t identity_morphism(size_t obj) const
    {
        for (size_t m = 0; m < size(); ++m)
            if (morphisms[m].g == 0 && pairs[morphisms[m].pair].first == obj &&
                pairs[morphisms[m].pair].second == obj)
                return m;
        fail(ErrorCode::Internal, "identity morphism missing");
    }

    std::vector<size_t> hom_set(size_t x, size_t y) const
    {
        std::vector<size_t> hs;
        for (size_t m = 0; m < size(); ++m)
            if (source(m) == x && target(m) == y)
                hs.push_back(m);
        return hs;
    }

    std::vector<size_t> stabilizer(size_t x) const
    {
        std::vector<size_t> st;
        for (size_t e = 0; e < group().order(); ++e)
            if (action.perms[e][x] == x)
                st.push_back(e);
        return st;
    }
};

inline TransporterCategory build_transporter(const PosetAction& pact)
{
    pact.poset->validate();
    pact.validate();
    TransporterCategory t;
    t.action = pact;
    const PosetData& p = *pact.poset;
    const PermGroup& g = *pact.grp;
    t.pairs = p.relation_pairs();
    for (size_t pr = 0; pr < t.pairs.size(); ++pr)
        for (size_t e = 0; e < g.order(); ++e)
            t.morphisms.push_back({pr, e});

    size_t m = t.morphisms.size();
    t.comp.assign(m * m, -1);
    auto pair_index = [&](size_t a, size_t b) -> size_t {
        for (size_t i = 0; i < t.pairs.size(); ++i)
            if (t.pairs[i].first == a && t.pairs[i].second == b)
                return i;
        fail(ErrorCode::Internal, "pair lookup failed");
    };
    for (size_t i = 0; i < m; ++i) {
        auto [xi, yi] = t.pairs[t.morphisms[i].pair];
        size_t gi = t.morphisms[i].g;
        const Perm& gperm = pact.perms[gi];
        size_t src_i = perm_inverse(gperm)[xi];
        for (size_t j = 0; j < m; ++j) {
            // m_i ∘ m_j: apply m_j first; need target(m_j) = source(m_i)
            if (t.pairs[t.morphisms[j].pair].second != src_i)
                continue;
            // composite (α ∘ g(β), g·h): pair (g(x_j), y_i)
            size_t gxj = gperm[t.pairs[t.morphisms[j].pair].first];
            size_t comp_pair = pair_index(gxj, yi);
            size_t comp_g = g.mul(gi, t.morphisms[j].g);
            for (size_t k = 0; k < m; ++k)
                if (t.morphisms[k].pair == comp_pair && t.morphisms[k].g == comp_g) {
                    t.comp[i * m + j] = (long)k;
                    break;
                }
        }
    }
    return t;
}

inline TransporterCategory build_transporter(const PosetData& p, GroupPtr grp)
{
    return build_transporter(natural_poset_action(p, std::move(grp)));
}

// Every endomorphism has a two-sided inverse (the EI property).
inline bool ei_check(const TransporterCategory& t)
{
    for (size_t m = 0; m < t.size(); ++m) {
        size_t x = t.source(m);
        if (x != t.target(m))
            continue;
        size_t idm = t.identity_morphism(x);
        bool invertible = false;
        for (size_t n = 0; n < t.size() && !invertible; ++n)
            if (t.compose(m, n) == (long)idm && t.compose(n, m) == (long)idm)
                invertible = true;
        if (!invertible)
            return false;
    }
    return true;
}

// Category algebra kT: morphisms as basis, composable products.
template <class K>
AlgebraPtr<K> category_algebra(const TransporterCategory& t, typename K::Field field)
{
    Algebra<K> a;
    a.field = field;
    a.dim = t.size();
    a.table.resize(a.dim * a.dim);
    for (size_t m = 0; m < t.size(); ++m) {
        auto [x, y] = t.pairs[t.morphisms[m].pair];
        a.labels.push_back("(" + t.poset().elements[x] + "<=" + t.poset().elements[y] + ")g" +
                           std::to_string(t.morphisms[m].g));
    }
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j) {
            long c = t.compose(i, j);
            if (c >= 0)
                a.entry(i, j) = {{(size_t)c, K::one(field)}};
        }
    a.unit = vec_zero<K>(field, a.dim);
    for (size_t x = 0; x < t.poset().size(); ++x) {
        size_t id = t.identity_morphism(x);
        Vec<K> e = vec_zero<K>(field, a.dim);
        e[id] = K::one(field);
        a.idems.push_back(e);
        a.unit[id] = K::one(field);
    }
    auto bad = verify_algebra(a);
    if (!bad.empty())
        fail(ErrorCode::Internal, "category algebra failed invariants: " + bad[0]);
    return std::make_shared<Algebra<K>>(std::move(a));
}

// Skeleton: one object per G-orbit; its algebra is the corner of kT at the
// representatives' identities.
template <class K>
struct SkeletonResult {
    std::vector<size_t> objects; // orbit representatives
    std::vector<std::vector<size_t>> hom_sizes;
    CornerAlgebra<K> algebra;
};

template <class K>
SkeletonResult<K> skeleton(const TransporterCategory& t, typename K::Field field)
{
    const PosetData& p = t.poset();
    std::vector<long> orbit_of(p.size(), -1);
    std::vector<size_t> reps;
    for (size_t x = 0; x < p.size(); ++x) {
        if (orbit_of[x] != -1)
            continue;
        reps.push_back(x);
        for (size_t e = 0; e < t.group().order(); ++e)
            orbit_of[t.action.perms[e][x]] = (long)(reps.size() - 1);
    }
    auto alg = category_algebra<K>(t, field);
    Vec<K> eps = vec_zero<K>(field, alg->dim);
    std::vector<Vec<K>> corner_idems;
    for (size_t r : reps) {
        size_t id = t.identity_morphism(r);
        eps[id] = K::one(field);
        Vec<K> e = vec_zero<K>(field, alg->dim);
        e[id] = K::one(field);
        corner_idems.push_back(std::move(e));
    }
    SkeletonResult<K> out;
    out.objects = reps;
    out.hom_sizes.assign(reps.size(), std::vector<size_t>(reps.size(), 0));
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = 0; j < reps.size(); ++j)
            out.hom_sizes[i][j] = t.hom_set(reps[i], reps[j]).size();
    out.algebra = corner(*alg, eps, corner_idems);
    return out;
}

// dim kT = dim kP·|G| plus a Morita fingerprint match against the skew algebra.
template <class K>
struct CategoryAlgebraCheck {
    AlgebraPtr<K> cat;
    SkewAlgebra<K> skew;
    bool dims_match = false;
    bool fingerprints_match = false;
};

template <class K>
CategoryAlgebraCheck<K> category_algebra_check(const TransporterCategory& t,
                                               typename K::Field field)
{
    CategoryAlgebraCheck<K> out;
    out.cat = category_algebra<K>(t, field);
    auto inc = build_incidence_algebra<K>(t.poset(), field);
    auto act = action_on_incidence_algebra<K>(inc, t.action);
    out.skew = build_skew(act, false);
    out.dims_match = out.cat->dim == out.skew.alg->dim;

    AlgebraCtx<K> c1(out.cat), c2(out.skew.alg);
    auto dims_of = [](AlgebraCtx<K>& c) {
        std::vector<size_t> d;
        for (const auto& s : c.simples())
            d.push_back(s.dim);
        std::sort(d.begin(), d.end());
        return d;
    };
    out.fingerprints_match = out.dims_match &&
                             radical_series_dims(*out.cat) == radical_series_dims(*out.skew.alg) &&
                             dims_of(c1) == dims_of(c2);
    return out;
}

// --------------------------------------------------------------------------
// §4 witnesses

inline void require_free_poset_action(const PosetAction& pact)
{
    pact.validate();
    if (auto w = pact.non_free_witness())
        fail(ErrorCode::FreeActionRequired,
             "element " + std::to_string(w->first) + " fixes " +
                 pact.poset->elements[w->second]);
}

struct Lemma46Witness {
    size_t x = 0, y = 0, z = 0;
    size_t g = 0;       // g(z) = y
    bool above = false; // true: x < y, x < z; false: y < x, z < x
};

// Distinct y, z in one G-orbit, both on the same side of x.
inline std::optional<Lemma46Witness> lemma46_witness(const PosetAction& pact)
{
    require_free_poset_action(pact);
    const PosetData& p = *pact.poset;
    const PermGroup& g = *pact.grp;
    std::vector<std::vector<bool>> same_orbit(p.size(), std::vector<bool>(p.size(), false));
    for (size_t x = 0; x < p.size(); ++x)
        for (size_t e = 0; e < g.order(); ++e)
            same_orbit[x][pact.perms[e][x]] = true;
    for (size_t x = 0; x < p.size(); ++x)
        for (size_t y = 0; y < p.size(); ++y)
            for (size_t z = 0; z < p.size(); ++z) {
                if (y == z || x == y || x == z || !same_orbit[y][z])
                    continue;
                bool above = p.less(x, y) && p.less(x, z);
                bool below = p.less(y, x) && p.less(z, x);
                if (!above && !below)
                    continue;
                for (size_t e = 1; e < g.order(); ++e)
                    if (pact.perms[e][z] == y)
                        return Lemma46Witness{x, y, z, e, above};
            }
    return std::nullopt;
}

struct CycleWitness {
    std::vector<size_t> elements; // cyclic order
    std::vector<bool> is_max;     // per position
    size_t g = 0;                 // nonidentity element with g(C) = C
};

// Re-validate a cycle witness from scratch: self-avoiding, alternating
// maxima/minima along comparable steps, closed under <g>, length >= 4.
inline bool validate_cycle_witness(const PosetAction& pact, const CycleWitness& c)
{
    const PosetData& p = *pact.poset;
    size_t n = c.elements.size();
    if (n < 4 || n % 2 != 0 || c.g == 0)
        return false;
    std::vector<bool> seen(p.size(), false);
    for (size_t e : c.elements) {
        if (seen[e])
            return false;
        seen[e] = true;
    }
    for (size_t i = 0; i < n; ++i) {
        size_t cur = c.elements[i];
        size_t nxt = c.elements[(i + 1) % n];
        size_t prv = c.elements[(i + n - 1) % n];
        if (c.is_max[i]) {
            if (!(p.less(nxt, cur) && p.less(prv, cur)))
                return false;
        } else {
            if (!(p.less(cur, nxt) && p.less(cur, prv)))
                return false;
        }
    }
    const Perm& gp = pact.perms[c.g];
    for (size_t e : c.elements)
        if (!seen[gp[e]])
            return false;
    return true;
}

// The cycle is a full subposet when the only comparabilities among its
// elements are the cyclic adjacencies (the "crown" shape).
inline bool cycle_is_full_subposet(const PosetData& p, const CycleWitness& c)
{
    size_t n = c.elements.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            bool adjacent = (j == (i + 1) % n) || (i == (j + 1) % n);
            if (!adjacent && p.comparable(c.elements[i], c.elements[j]))
                return false;
        }
    return true;
}

namespace detail {

inline std::vector<std::vector<size_t>> comparability_adj(const PosetData& p)
{
    std::vector<std::vector<size_t>> adj(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p.size(); ++j)
            if (i != j && p.comparable(i, j))
                adj[i].push_back(j);
    return adj;
}

// lexicographically smallest shortest path from x to y in the comparability graph
inline std::optional<std::vector<size_t>> lex_shortest_path(const PosetData& p, size_t x,
                                                            size_t y)
{
    auto adj = comparability_adj(p);
    std::vector<long> dist(p.size(), -1);
    std::vector<size_t> queue{y};
    dist[y] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        size_t u = queue[head];
        for (size_t v : adj[u])
            if (dist[v] == -1) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    if (dist[x] == -1)
        return std::nullopt;
    std::vector<size_t> path{x};
    size_t cur = x;
    while (cur != y) {
        for (size_t v : adj[cur])
            if (dist[v] == dist[cur] - 1) {
                path.push_back(v);
                cur = v;
                break;
            }
    }
    return path;
}

// glue <g>-translates of a path from x to g(x) and keep the local extremes
inline std::optional<CycleWitness> glue_cycle(const PosetAction& pact, size_t g,
                                              const std::vector<size_t>& gamma)
{
    const PosetData& p = *pact.poset;
    const Perm& gp = pact.perms[g];
    // order of the permutation image of g
    size_t n = 1;
    {
        Perm cur = gp;
        while (cur != perm_identity(p.size())) {
            cur = perm_compose(gp, cur);
            ++n;
        }
    }
    std::vector<size_t> cycle;
    Perm cur = perm_identity(p.size());
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j + 1 < gamma.size(); ++j)
            cycle.push_back(cur[gamma[j]]);
        cur = perm_compose(gp, cur);
    }
    {
        std::vector<bool> seen(p.size(), false);
        for (size_t e : cycle) {
            if (seen[e])
                return std::nullopt;
            seen[e] = true;
        }
    }
    // keep local extremes in cyclic order
    size_t m = cycle.size();
    std::vector<size_t> keep;
    std::vector<bool> kmax;
    for (size_t i = 0; i < m; ++i) {
        size_t prv = cycle[(i + m - 1) % m];
        size_t curx = cycle[i];
        size_t nxt = cycle[(i + 1) % m];
        bool up_in = p.less(prv, curx);
        bool up_out = p.less(curx, nxt);
        if (up_in && !up_out) {
            keep.push_back(curx);
            kmax.push_back(true);
        } else if (!up_in && up_out) {
            keep.push_back(curx);
            kmax.push_back(false);
        }
    }
    CycleWitness w;
    w.elements = std::move(keep);
    w.is_max = std::move(kmax);
    w.g = g;
    if (!validate_cycle_witness(pact, w))
        return std::nullopt;
    return w;
}

inline void all_simple_paths(const std::vector<std::vector<size_t>>& adj, size_t cur,
                             size_t target, std::vector<size_t>& path,
                             std::vector<bool>& used, size_t max_len,
                             std::vector<std::vector<size_t>>& out, size_t cap)
{
    if (out.size() >= cap || path.size() > max_len)
        return;
    for (size_t v : adj[cur]) {
        if (v == target) {
            path.push_back(v);
            out.push_back(path);
            path.pop_back();
            continue;
        }
        if (used[v])
            continue;
        used[v] = true;
        path.push_back(v);
        all_simple_paths(adj, v, target, path, used, max_len, out, cap);
        path.pop_back();
        used[v] = false;
    }
}

} // namespace detail

// Lemma 4.8: a non-oriented cycle of extremes, closed under some g ≠ 1,
// built by gluing <g>-translates of a minimal same-orbit connecting path.
inline CycleWitness lemma48_cycle(const PosetAction& pact)
{
    const PosetData& p = *pact.poset;
    if (!p.connected())
        fail(ErrorCode::ConnectedRequired, "lemma 4.8 needs a connected poset");
    if (pact.grp->order() <= 1)
        fail(ErrorCode::TrivialGroup, "lemma 4.8 needs a nontrivial group");
    require_free_poset_action(pact);

    std::optional<std::vector<size_t>> best;
    size_t best_x = 0, best_y = 0;
    for (size_t x = 0; x < p.size(); ++x)
        for (size_t e = 1; e < pact.grp->order(); ++e) {
            size_t y = pact.perms[e][x];
            if (y == x)
                continue;
            auto path = detail::lex_shortest_path(p, x, y);
            if (!path)
                continue;
            if (!best || path->size() < best->size() ||
                (path->size() == best->size() && *path < *best)) {
                best = path;
                best_x = x;
                best_y = y;
            }
        }
    if (!best)
        fail(ErrorCode::Internal, "no same-orbit connecting path in a connected poset");
    size_t g = 0;
    for (size_t e = 1; e < pact.grp->order(); ++e)
        if (pact.perms[e][best_x] == best_y) {
            g = e;
            break;
        }
    auto w = detail::glue_cycle(pact, g, *best);
    if (!w)
        fail(ErrorCode::Internal, "glued cycle failed validation");
    return *w;
}

// Prop 4.10 certificate: Case I is a Lemma 4.6 witness, Case II a verified
// full crown cycle (minimal, ties broken lexicographically).
struct Prop410Certificate {
    enum class Case { I, II } which = Case::I;
    std::optional<Lemma46Witness> witness;
    std::optional<CycleWitness> cycle;
};

inline Prop410Certificate prop410_certificate(const PosetAction& pact)
{
    const PosetData& p = *pact.poset;
    if (!p.connected())
        fail(ErrorCode::ConnectedRequired, "prop 4.10 needs a connected poset");
    if (pact.grp->order() <= 1)
        fail(ErrorCode::TrivialGroup, "prop 4.10 needs a nontrivial group");
    require_free_poset_action(pact);

    Prop410Certificate cert;
    if (auto w = lemma46_witness(pact)) {
        cert.which = Prop410Certificate::Case::I;
        cert.witness = w;
        return cert;
    }

    auto adj = detail::comparability_adj(p);
    std::vector<CycleWitness> cands;
    for (size_t e = 1; e < pact.grp->order(); ++e)
        for (size_t x = 0; x < p.size(); ++x) {
            size_t y = pact.perms[e][x];
            if (y == x)
                continue;
            std::vector<std::vector<size_t>> paths;
            std::vector<size_t> path{x};
            std::vector<bool> used(p.size(), false);
            used[x] = true;
            detail::all_simple_paths(adj, x, y, path, used, p.size(), paths, 4000);
            for (const auto& pa : paths)
                if (auto w = detail::glue_cycle(pact, e, pa))
                    cands.push_back(*w);
        }
    auto canonical = [](const CycleWitness& w) {
        size_t n = w.elements.size();
        size_t best_rot = 0;
        for (size_t i = 1; i < n; ++i)
            if (w.elements[i] < w.elements[best_rot])
                best_rot = i;
        std::vector<size_t> fwd, bwd;
        for (size_t i = 0; i < n; ++i)
            fwd.push_back(w.elements[(best_rot + i) % n]);
        for (size_t i = 0; i < n; ++i)
            bwd.push_back(w.elements[(best_rot + n - i) % n]);
        return std::min(fwd, bwd);
    };
    std::sort(cands.begin(), cands.end(), [&](const CycleWitness& a, const CycleWitness& b) {
        if (a.elements.size() != b.elements.size())
            return a.elements.size() < b.elements.size();
        return canonical(a) < canonical(b);
    });
    for (const auto& w : cands)
        if (cycle_is_full_subposet(p, w)) {
            cert.which = Prop410Certificate::Case::II;
            cert.cycle = w;
            return cert;
        }
    fail(ErrorCode::Internal, "no full crown cycle found (contradicts Prop 4.10)");
}

// --------------------------------------------------------------------------
// Theorem 4.12 classifier

inline ClassifierVerdict classify_transporter(const PosetAction& pact, long long charp,
                                              const RepTypeOracle& oracle)
{
    const PosetData& p = *pact.poset;
    ClassifierVerdict v;
    v.question = "transporter-reptype";
    v.field_note = charp == 0 ? "computed over Q" : "computed over F_" + std::to_string(charp);
    pact.validate();

    if (charp == 2 || charp == 3) {
        v.answer = "unknown";
        v.hypotheses.push_back({"p not in {2,3}", "violated"});
        v.certificate["reason"] = "Theorem 4.12 excludes characteristic 2 and 3";
        return v;
    }
    v.hypotheses.push_back({"p not in {2,3}", "verified"});
    if (!p.connected()) {
        v.answer = "unknown";
        v.hypotheses.push_back({"poset connected", "violated"});
        v.certificate["reason"] = "the poset is not connected";
        return v;
    }
    v.hypotheses.push_back({"poset connected", "verified"});

    // branch 2: singleton poset, kG representation type by the cyclic-Sylow test
    if (p.size() == 1) {
        auto ga = RepTypeOracle::group_verdict(*pact.grp, charp);
        v.answer = ga.finite ? "finite" : "infinite";
        v.certificate["branch"] = "singleton-poset";
        v.certificate["oracle"] = ga.source;
        v.certificate["sylow_cyclic"] = ga.finite;
        return v;
    }

    bool p_divides = charp != 0 && pact.grp->order() % (size_t)charp == 0;
    if (!p_divides) {
        // branch 1: |G| invertible in k, the poset's representation type decides
        auto pv = oracle.poset_verdict(p);
        if (!pv.decided()) {
            v.answer = "unknown";
            v.certificate["reason"] = "poset oracle returned unknown";
            v.certificate["oracle_used"] = "poset";
            return v;
        }
        v.answer = pv.finite ? "finite" : "infinite";
        v.certificate["branch"] = "invertible-order";
        v.certificate["oracle"] = pv.source;
        return v;
    }

    // p divides |G| and |P| > 1: infinite, with a certificate
    Subgroup syl = sylow_subgroup(*pact.grp, charp);
    v.certificate["sylow_order"] = syl.group.order();
    PosetAction sact = restrict_poset_action(pact, syl);
    v.answer = "infinite";
    if (auto nf = sact.non_free_witness()) {
        v.certificate["witness"] = {{"type", "non-free-sylow"},
                                    {"group_element", nf->first},
                                    {"fixed_element", p.elements[nf->second]}};
        return v;
    }
    auto cert = prop410_certificate(sact);
    if (cert.which == Prop410Certificate::Case::I) {
        const auto& w = *cert.witness;
        v.certificate["witness"] = {{"type", "prop410-case1"},
                                    {"x", p.elements[w.x]},
                                    {"y", p.elements[w.y]},
                                    {"z", p.elements[w.z]},
                                    {"g", w.g},
                                    {"side", w.above ? "above" : "below"}};
    } else {
        const auto& c = *cert.cycle;
        json elems = json::array();
        for (size_t e : c.elements)
            elems.push_back(p.elements[e]);
        v.certificate["witness"] = {{"type", "prop410-case2-crown"},
                                    {"cycle", elems},
                                    {"g", c.g},
                                    {"full_subposet", true}};
    }
    return v;
}

} // namespace skewalg
