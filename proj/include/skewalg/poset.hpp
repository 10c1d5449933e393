#pragma once

#include "algebra.hpp"
#include "group.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skewalg {

// Finite poset: elements by name, order as a reflexive bit table.
struct PosetData {
    std::vector<std::string> elements;
    std::vector<std::vector<bool>> leq; // leq[i][j] <=> i <= j

    size_t size() const { return elements.size(); }

    size_t index_of(const std::string& name) const
    {
        for (size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == name)
                return i;
        fail(ErrorCode::InvalidPoset, "unknown element " + name);
    }

    void validate() const
    {
        size_t n = size();
        if (leq.size() != n)
            fail(ErrorCode::InvalidPoset, "leq table size mismatch");
        for (size_t i = 0; i < n; ++i) {
            if (leq[i].size() != n)
                fail(ErrorCode::InvalidPoset, "leq row size mismatch");
            if (!leq[i][i])
                fail(ErrorCode::InvalidPoset, "order not reflexive at " + elements[i]);
        }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (i != j && leq[i][j] && leq[j][i])
                    fail(ErrorCode::InvalidPoset,
                         "antisymmetry fails on " + elements[i] + "," + elements[j]);
                if (leq[i][j])
                    for (size_t k = 0; k < n; ++k)
                        if (leq[j][k] && !leq[i][k])
                            fail(ErrorCode::InvalidPoset, "order not transitive");
            }
    }

    bool less(size_t i, size_t j) const { return i != j && leq[i][j]; }
    bool comparable(size_t i, size_t j) const { return leq[i][j] || leq[j][i]; }

    // Hasse diagram: i < j with nothing strictly between.
    std::vector<std::pair<size_t, size_t>> cover_edges() const
    {
        std::vector<std::pair<size_t, size_t>> covers;
        size_t n = size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (!less(i, j))
                    continue;
                bool cover = true;
                for (size_t k = 0; k < n && cover; ++k)
                    if (k != i && k != j && less(i, k) && less(k, j))
                        cover = false;
                if (cover)
                    covers.emplace_back(i, j);
            }
        return covers;
    }

    bool connected() const
    {
        size_t n = size();
        if (n <= 1)
            return true;
        std::vector<bool> seen(n, false);
        std::vector<size_t> stack{0};
        seen[0] = true;
        size_t count = 1;
        while (!stack.empty()) {
            size_t u = stack.back();
            stack.pop_back();
            for (size_t v = 0; v < n; ++v)
                if (!seen[v] && u != v && comparable(u, v)) {
                    seen[v] = true;
                    ++count;
                    stack.push_back(v);
                }
        }
        return count == n;
    }

    // comparable pairs (a, b) with a <= b, a-major order
    std::vector<std::pair<size_t, size_t>> relation_pairs() const
    {
        std::vector<std::pair<size_t, size_t>> pairs;
        for (size_t a = 0; a < size(); ++a)
            for (size_t b = 0; b < size(); ++b)
                if (leq[a][b])
                    pairs.emplace_back(a, b);
        return pairs;
    }
};

// Build a poset from elements plus the pairs a <= b (reflexivity and
// transitivity are completed automatically).
inline PosetData make_poset(std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& rels)
{
    PosetData p;
    p.elements = std::move(elements);
    size_t n = p.elements.size();
    p.leq.assign(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        p.leq[i][i] = true;
    for (const auto& [a, b] : rels)
        p.leq[p.index_of(a)][p.index_of(b)] = true;
    // transitive closure
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            if (p.leq[i][k])
                for (size_t j = 0; j < n; ++j)
                    if (p.leq[k][j])
                        p.leq[i][j] = true;
    p.validate();
    return p;
}

// An action of a finite group on a poset: a homomorphism into Aut(P), given
// by one order-preserving permutation of the elements per group element. The
// action need not be faithful (a nontrivial group may act trivially).
struct PosetAction {
    std::shared_ptr<const PosetData> poset;
    GroupPtr grp;
    std::vector<Perm> perms; // on poset elements, indexed like grp->elements

    const Perm& perm_of(size_t g) const { return perms[g]; }

    void validate() const
    {
        const PosetData& p = *poset;
        if (perms.size() != grp->order())
            fail(ErrorCode::NotAPosetAction, "one permutation per group element required");
        for (size_t gi : grp->generators) {
            const Perm& q = perms[gi];
            if (q.size() != p.size())
                fail(ErrorCode::NotAPosetAction, "permutation length mismatch");
            for (size_t i = 0; i < p.size(); ++i)
                for (size_t j = 0; j < p.size(); ++j)
                    if (p.leq[i][j] != p.leq[q[i]][q[j]])
                        fail(ErrorCode::NotAPosetAction,
                             "permutation does not preserve the order");
        }
        for (size_t gi : grp->generators)
            for (size_t h = 0; h < grp->order(); ++h)
                if (perms[grp->mul(gi, h)] != perm_compose(perms[gi], perms[h]))
                    fail(ErrorCode::NotAPosetAction, "permutations do not form an action");
    }

    // (g, x) with g ≠ 1 and g(x) = x, if any
    std::optional<std::pair<size_t, size_t>> non_free_witness() const
    {
        for (size_t e = 1; e < grp->order(); ++e)
            for (size_t x = 0; x < poset->size(); ++x)
                if (perms[e][x] == x)
                    return std::make_pair(e, x);
        return std::nullopt;
    }

    bool free() const { return !non_free_witness().has_value(); }
};

inline PosetAction poset_action_from_generators(const PosetData& p, GroupPtr grp,
                                                const std::vector<Perm>& gen_perms)
{
    PosetAction a;
    a.poset = std::make_shared<PosetData>(p);
    a.grp = grp;
    a.perms.assign(grp->order(), Perm{});
    a.perms[0] = perm_identity(p.size());
    for (size_t i = 1; i < grp->order(); ++i) {
        auto [parent, gi] = grp->bfs_parent[i];
        a.perms[i] = perm_compose(gen_perms.at(gi), a.perms[parent]);
    }
    a.validate();
    return a;
}

// The group's own permutations act on the poset (domain = elements).
inline PosetAction natural_poset_action(const PosetData& p, GroupPtr grp)
{
    if (grp->domain.size() != p.size())
        fail(ErrorCode::NotAPosetAction, "group domain does not match the poset");
    PosetAction a;
    a.poset = std::make_shared<PosetData>(p);
    a.grp = grp;
    a.perms = grp->elements;
    a.validate();
    return a;
}

inline PosetAction trivial_poset_action(const PosetData& p, GroupPtr grp)
{
    PosetAction a;
    a.poset = std::make_shared<PosetData>(p);
    a.grp = std::move(grp);
    a.perms.assign(a.grp->order(), perm_identity(p.size()));
    return a;
}

// Restriction of a poset action to a subgroup.
inline PosetAction restrict_poset_action(const PosetAction& a, const Subgroup& h)
{
    PosetAction r;
    r.poset = a.poset;
    r.grp = std::make_shared<PermGroup>(h.group);
    for (size_t e = 0; e < h.group.order(); ++e)
        r.perms.push_back(a.perms[h.parent_indices[e]]);
    return r;
}

template <class K>
struct IncidenceData {
    AlgebraPtr<K> alg;
    std::shared_ptr<const PosetData> poset;
    std::vector<std::pair<size_t, size_t>> pairs; // basis element i is the pair (a, b), a <= b

    size_t pair_index(size_t a, size_t b) const
    {
        for (size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i].first == a && pairs[i].second == b)
                return i;
        fail(ErrorCode::Internal, "pair lookup failed");
    }
};

// Incidence algebra kP: basis (a,b) for a <= b with (a,b)·(c,d) = delta_{d,a} (c,b).
template <class K>
IncidenceData<K> build_incidence_algebra(const PosetData& p, typename K::Field field)
{
    p.validate();
    IncidenceData<K> out;
    out.poset = std::make_shared<PosetData>(p);
    out.pairs = p.relation_pairs();

    Algebra<K> alg;
    alg.field = field;
    alg.dim = out.pairs.size();
    alg.table.resize(alg.dim * alg.dim);
    for (auto& [a, b] : out.pairs)
        alg.labels.push_back("(" + p.elements[a] + "," + p.elements[b] + ")");

    for (size_t i = 0; i < alg.dim; ++i)
        for (size_t j = 0; j < alg.dim; ++j) {
            auto [a, b] = out.pairs[i];
            auto [c, d] = out.pairs[j];
            if (d == a)
                alg.entry(i, j) = {{out.pair_index(c, b), K::one(field)}};
        }

    alg.unit = vec_zero<K>(field, alg.dim);
    std::vector<Vec<K>> rad;
    for (size_t i = 0; i < alg.dim; ++i) {
        auto [a, b] = out.pairs[i];
        if (a == b) {
            Vec<K> e = vec_zero<K>(field, alg.dim);
            e[i] = K::one(field);
            alg.idems.push_back(e);
            alg.unit[i] = K::one(field);
        } else {
            Vec<K> v = vec_zero<K>(field, alg.dim);
            v[i] = K::one(field);
            rad.push_back(std::move(v));
        }
    }
    alg.radical_hint = std::move(rad);

    auto violations = verify_algebra(alg);
    if (!violations.empty())
        fail(ErrorCode::Internal, "incidence algebra failed invariants: " + violations[0]);

    out.alg = std::make_shared<Algebra<K>>(std::move(alg));
    return out;
}

} // namespace skewalg
