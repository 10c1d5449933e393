#pragma once

#include "errors.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace skewalg {

using Perm = std::vector<size_t>; // images: g(i) = perm[i]

inline Perm perm_identity(size_t n)
{
    Perm p(n);
    for (size_t i = 0; i < n; ++i)
        p[i] = i;
    return p;
}

inline Perm perm_compose(const Perm& a, const Perm& b) // (a ∘ b)(i) = a(b(i))
{
    Perm r(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

inline Perm perm_inverse(const Perm& a)
{
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        r[a[i]] = i;
    return r;
}

// Finite permutation group with the full element list in BFS discovery order;
// element 0 is the identity. Each element records one generator word
// (parent, generator) so algebra actions can be extended along words.
struct PermGroup {
    std::vector<std::string> domain;
    std::vector<Perm> elements;
    std::vector<size_t> generators;                    // indices into elements
    std::vector<std::pair<size_t, size_t>> bfs_parent; // (parent element, generator position); identity = (0,SIZE_MAX)

    size_t order() const { return elements.size(); }
    const Perm& identity() const { return elements[0]; }

    size_t index_of(const Perm& p) const
    {
        auto it = index_.find(p);
        if (it == index_.end())
            fail(ErrorCode::Internal, "permutation not in group");
        return it->second;
    }

    size_t mul(size_t a, size_t b) const { return index_of(perm_compose(elements[a], elements[b])); }
    size_t inv(size_t a) const { return index_of(perm_inverse(elements[a])); }

    size_t element_order(size_t a) const
    {
        size_t e = a, n = 1;
        while (e != 0) {
            e = mul(e, a);
            ++n;
        }
        return n;
    }

    // generator positions applied left to right: g = gen[w_k] ∘ ... ∘ gen[w_1]
    std::vector<size_t> word_of(size_t a) const
    {
        std::vector<size_t> w;
        while (a != 0) {
            w.push_back(bfs_parent[a].second);
            a = bfs_parent[a].first;
        }
        std::reverse(w.begin(), w.end());
        return w;
    }

    void build_index()
    {
        index_.clear();
        for (size_t i = 0; i < elements.size(); ++i)
            index_[elements[i]] = i;
    }

private:
    std::map<Perm, size_t> index_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

inline constexpr size_t kDefaultGroupCap = 5040;

inline PermGroup generate_group(std::vector<std::string> domain, const std::vector<Perm>& gens,
                                size_t cap = kDefaultGroupCap)
{
    size_t n = domain.size();
    for (const auto& g : gens) {
        if (g.size() != n)
            fail(ErrorCode::InvalidPermutation, "generator length mismatch");
        std::vector<bool> hit(n, false);
        for (size_t i : g) {
            if (i >= n || hit[i])
                fail(ErrorCode::InvalidPermutation, "generator is not a bijection");
            hit[i] = true;
        }
    }

    PermGroup grp;
    grp.domain = std::move(domain);
    grp.elements.push_back(perm_identity(n));
    grp.bfs_parent.emplace_back(0, SIZE_MAX);
    std::map<Perm, size_t> seen;
    seen[grp.elements[0]] = 0;

    // record generators as elements first (they may coincide with identity)
    std::vector<size_t> gen_elem;
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        auto it = seen.find(gens[gi]);
        if (it == seen.end()) {
            grp.elements.push_back(gens[gi]);
            grp.bfs_parent.emplace_back(0, gi);
            seen[gens[gi]] = grp.elements.size() - 1;
            gen_elem.push_back(grp.elements.size() - 1);
        } else {
            gen_elem.push_back(it->second);
        }
    }
    grp.generators = gen_elem;

    for (size_t head = 0; head < grp.elements.size(); ++head) {
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            Perm next = perm_compose(gens[gi], grp.elements[head]);
            if (seen.count(next))
                continue;
            if (grp.elements.size() >= cap)
                fail(ErrorCode::GroupTooLarge,
                     "group order exceeds cap " + std::to_string(cap));
            grp.elements.push_back(next);
            grp.bfs_parent.emplace_back(head, gi);
            seen[next] = grp.elements.size() - 1;
        }
    }
    grp.build_index();
    return grp;
}

// Subgroup materialized as its own PermGroup (same domain), remembering the
// indices of its elements inside the parent.
struct Subgroup {
    PermGroup group;
    std::vector<size_t> parent_indices; // parent index of each subgroup element
};

inline Subgroup subgroup_from_elements(const PermGroup& g, std::vector<size_t> idxs)
{
    std::sort(idxs.begin(), idxs.end());
    std::vector<Perm> gens;
    for (size_t i : idxs)
        gens.push_back(g.elements[i]);
    PermGroup sub = generate_group(g.domain, gens, g.order() + 1);
    Subgroup out;
    out.parent_indices.reserve(sub.order());
    for (const auto& p : sub.elements)
        out.parent_indices.push_back(g.index_of(p));
    out.group = std::move(sub);
    return out;
}

// Deterministic Sylow p-subgroup: grow a p-subgroup by adjoining p-elements in
// element order whenever the span stays a p-group.  Any p-subgroup lies in a
// Sylow subgroup, so the greedy extension always reaches full order.
inline Subgroup sylow_subgroup(const PermGroup& g, long long p)
{
    if (p < 0)
        fail(ErrorCode::InvalidPrime, "negative characteristic");
    if (p > 1) {
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0)
                fail(ErrorCode::InvalidPrime, std::to_string(p) + " is composite");
    }
    if (p == 1)
        fail(ErrorCode::InvalidPrime, "1 is not a prime");

    size_t target = 1;
    if (p > 0) {
        size_t n = g.order();
        while (n % (size_t)p == 0) {
            n /= (size_t)p;
            target *= (size_t)p;
        }
    }

    auto is_p_power = [&](size_t n) {
        if (p == 0)
            return n == 1;
        while (n % (size_t)p == 0)
            n /= (size_t)p;
        return n == 1;
    };

    std::vector<size_t> current{0};
    while (current.size() < target) {
        bool extended = false;
        for (size_t cand = 1; cand < g.order() && !extended; ++cand) {
            if (!is_p_power(g.element_order(cand)))
                continue;
            if (std::find(current.begin(), current.end(), cand) != current.end())
                continue;
            auto trial = current;
            trial.push_back(cand);
            Subgroup sub = subgroup_from_elements(g, trial);
            if (sub.group.order() > current.size() && is_p_power(sub.group.order()) &&
                sub.group.order() <= target) {
                current = sub.parent_indices;
                extended = true;
            }
        }
        if (!extended)
            fail(ErrorCode::Internal, "sylow extension stalled");
    }
    return subgroup_from_elements(g, current);
}

inline bool is_cyclic(const PermGroup& g)
{
    for (size_t i = 0; i < g.order(); ++i)
        if (g.element_order(i) == g.order())
            return true;
    return false;
}

// kG has finite representation type iff the Sylow p-subgroups are cyclic
// (trivially so when p does not divide |G|).
inline bool group_algebra_finite_type(const PermGroup& g, long long p)
{
    if (p == 0 || g.order() % (size_t)p != 0)
        return true;
    return is_cyclic(sylow_subgroup(g, p).group);
}

// All cyclic subgroups plus the full group; handy for test corpora.
inline std::vector<std::vector<size_t>> cyclic_subgroups(const PermGroup& g)
{
    std::vector<std::vector<size_t>> subs;
    auto add_unique = [&](std::vector<size_t> s) {
        std::sort(s.begin(), s.end());
        if (std::find(subs.begin(), subs.end(), s) == subs.end())
            subs.push_back(std::move(s));
    };
    add_unique({0});
    for (size_t i = 1; i < g.order(); ++i) {
        std::vector<size_t> s{0};
        size_t e = i;
        while (e != 0) {
            s.push_back(e);
            e = g.mul(e, i);
        }
        add_unique(std::move(s));
    }
    return subs;
}

} // namespace skewalg
