#pragma once

#include "algebra.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace skewalg {

struct QuiverArrow {
    std::string name;
    size_t src = 0;
    size_t tgt = 0;
};

struct QuiverPresentation {
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;

    size_t vertex_index(const std::string& name) const
    {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name)
                return i;
        fail(ErrorCode::PresentationError, "unknown vertex " + name);
    }

    size_t arrow_index(const std::string& name) const
    {
        for (size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].name == name)
                return i;
        fail(ErrorCode::PresentationError, "unknown arrow " + name);
    }
};

// A path stored with its arrows in application order (arrows[0] acts first);
// the product p·q composes right to left, so word(p·q) = word(q) ++ word(p).
struct PathWord {
    size_t src = 0;
    std::vector<size_t> arrows;

    size_t length() const { return arrows.size(); }
    bool trivial() const { return arrows.empty(); }

    size_t target(const QuiverPresentation& q) const
    {
        return arrows.empty() ? src : q.arrows[arrows.back()].tgt;
    }

    bool operator==(const PathWord& o) const { return src == o.src && arrows == o.arrows; }
};

// degree-lexicographic, larger first
struct PathDeglexGreater {
    bool operator()(const PathWord& a, const PathWord& b) const
    {
        if (a.arrows.size() != b.arrows.size())
            return a.arrows.size() > b.arrows.size();
        if (a.arrows != b.arrows)
            return a.arrows < b.arrows;
        return a.src < b.src;
    }
};

template <class K>
using PathPoly = std::map<PathWord, K, PathDeglexGreater>;

// One term of a relation: coefficient times a path written in composition
// order (rightmost arrow acts first, matching the usual αβ notation).
template <class K>
struct RelationTerm {
    K coeff;
    std::vector<std::string> path;
};

template <class K>
using Relation = std::vector<RelationTerm<K>>;

namespace detail {

inline bool composable(const QuiverPresentation& q, const PathWord& a, const PathWord& b)
{
    return a.target(q) == b.src;
}

inline PathWord concat(const QuiverPresentation& q, const PathWord& a, const PathWord& b)
{
    PathWord w;
    w.src = a.src;
    w.arrows = a.arrows;
    w.arrows.insert(w.arrows.end(), b.arrows.begin(), b.arrows.end());
    (void)q;
    return w;
}

template <class K>
void poly_add_term(PathPoly<K>& p, const PathWord& w, const K& c)
{
    if (c.is_zero())
        return;
    auto it = p.find(w);
    if (it == p.end()) {
        p.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            p.erase(it);
    }
}

// x ++ f ++ y, bilinear extension of concatenation
template <class K>
PathPoly<K> sandwich(const QuiverPresentation& q, const PathWord& x, const PathPoly<K>& f,
                     const PathWord& y)
{
    PathPoly<K> r;
    for (const auto& [m, c] : f) {
        PathWord w = concat(q, concat(q, x, m), y);
        poly_add_term(r, w, c);
    }
    return r;
}

// first position where `pat` occurs as a contiguous subword, or npos
inline size_t find_subword(const std::vector<size_t>& hay, const std::vector<size_t>& pat)
{
    if (pat.size() > hay.size())
        return std::string::npos;
    for (size_t i = 0; i + pat.size() <= hay.size(); ++i) {
        bool ok = true;
        for (size_t j = 0; j < pat.size(); ++j)
            if (hay[i + j] != pat[j]) {
                ok = false;
                break;
            }
        if (ok)
            return i;
    }
    return std::string::npos;
}

template <class K>
struct PathGB {
    const QuiverPresentation* quiver;
    std::vector<PathPoly<K>> elems; // monic, tails reduced

    PathWord subword(const PathWord& w, size_t from, size_t len) const
    {
        PathWord s;
        s.arrows.assign(w.arrows.begin() + from, w.arrows.begin() + from + len);
        s.src = (len == 0) ? (from == 0 ? w.src : quiver->arrows[w.arrows[from - 1]].tgt)
                           : quiver->arrows[s.arrows[0]].src;
        return s;
    }

    // reduce p to normal form; every replacement strictly decreases in deglex order
    PathPoly<K> reduce(PathPoly<K> p) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& [m, c] : p) {
                for (const auto& g : elems) {
                    const PathWord& lead = g.begin()->first;
                    size_t pos = find_subword(m.arrows, lead.arrows);
                    if (pos == std::string::npos)
                        continue;
                    PathWord left = subword(m, 0, pos);
                    left.src = m.src;
                    PathWord right = subword(m, pos + lead.length(), m.length() - pos - lead.length());
                    PathPoly<K> tail = g;
                    tail.erase(tail.begin());
                    K coeff = c;
                    poly_add_term(p, m, -coeff);
                    for (const auto& [tm, tc] : tail)
                        poly_add_term(p, concat(*quiver, concat(*quiver, left, tm), right), -(coeff * tc));
                    changed = true;
                    break;
                }
                if (changed)
                    break;
            }
        }
        return p;
    }
};

} // namespace detail

template <class K>
struct PathAlgebraData {
    AlgebraPtr<K> alg;
    std::shared_ptr<const QuiverPresentation> quiver; // stable address for the GB
    std::vector<PathWord> words;                      // per basis element
    std::vector<size_t> vertex_basis;                 // basis index of each trivial path
    std::vector<size_t> arrow_basis;                  // basis index of each arrow
    std::vector<long> degrees;                        // path length per basis element
    detail::PathGB<K> gb;

    // normal form of an arbitrary composable word, as algebra coordinates
    Vec<K> nf_coords(const PathWord& w) const
    {
        PathPoly<K> p;
        p.emplace(w, K::one(alg->field));
        p = gb.reduce(std::move(p));
        Vec<K> v = alg->zero_vec();
        for (const auto& [m, c] : p) {
            bool found = false;
            for (size_t i = 0; i < words.size(); ++i)
                if (words[i] == m) {
                    v[i] = c;
                    found = true;
                    break;
                }
            if (!found)
                fail(ErrorCode::Internal, "normal form outside basis");
        }
        return v;
    }
};

// Build the path algebra kQ/I.  Relations must be admissible combinations:
// all paths of length >= 2, composable, and sharing source and target within
// one relation.  The relation set is closed under overlaps up to the length
// cap and the basis is the set of standard paths; if standard paths survive
// at the cap length, the quotient is reported as not finite-dimensional.
template <class K>
PathAlgebraData<K> build_path_algebra(const QuiverPresentation& q,
                                      const std::vector<Relation<K>>& relations,
                                      typename K::Field field, size_t length_cap = 32)
{
    for (const auto& a : q.arrows) {
        if (a.src >= q.vertices.size() || a.tgt >= q.vertices.size())
            fail(ErrorCode::PresentationError, "arrow endpoint out of range");
    }

    // parse relations into path polynomials
    std::vector<PathPoly<K>> polys;
    for (const auto& rel : relations) {
        PathPoly<K> p;
        long src = -1, tgt = -1;
        for (const auto& term : rel) {
            if (term.path.size() < 2)
                fail(ErrorCode::PresentationError, "relation path shorter than 2 (ideal not admissible)");
            PathWord w;
            // composition order input: rightmost name acts first
            for (auto it = term.path.rbegin(); it != term.path.rend(); ++it)
                w.arrows.push_back(q.arrow_index(*it));
            w.src = q.arrows[w.arrows[0]].src;
            for (size_t i = 0; i + 1 < w.arrows.size(); ++i)
                if (q.arrows[w.arrows[i]].tgt != q.arrows[w.arrows[i + 1]].src)
                    fail(ErrorCode::PresentationError, "non-composable path in relation");
            long s = (long)w.src, t = (long)w.target(q);
            if (src == -1) {
                src = s;
                tgt = t;
            } else if (s != src || t != tgt) {
                fail(ErrorCode::PresentationError, "relation mixes source/target");
            }
            detail::poly_add_term(p, w, term.coeff);
        }
        if (!p.empty())
            polys.push_back(std::move(p));
    }

    detail::PathGB<K> gb;
    gb.quiver = &q;
    auto add_elem = [&](PathPoly<K> p) -> bool {
        p = gb.reduce(std::move(p));
        if (p.empty())
            return false;
        K lead = p.begin()->second;
        for (auto& [m, c] : p)
            c = c / lead;
        gb.elems.push_back(std::move(p));
        return true;
    };
    for (auto& p : polys)
        add_elem(std::move(p));

    // overlap closure (bounded by the length cap)
    bool grew = true;
    while (grew) {
        grew = false;
        size_t cnt = gb.elems.size();
        for (size_t a = 0; a < cnt && !grew; ++a)
            for (size_t b = 0; b < cnt && !grew; ++b) {
                const PathWord& u = gb.elems[a].begin()->first;
                const PathWord& v = gb.elems[b].begin()->first;
                // containment: u proper subword of v
                if (a != b && u.length() < v.length()) {
                    size_t pos = detail::find_subword(v.arrows, u.arrows);
                    if (pos != std::string::npos) {
                        PathWord left = gb.subword(v, 0, pos);
                        left.src = v.src;
                        PathWord right = gb.subword(v, pos + u.length(), v.length() - pos - u.length());
                        PathPoly<K> s = detail::sandwich(q, left, gb.elems[a], right);
                        for (const auto& [m, c] : gb.elems[b])
                            detail::poly_add_term(s, m, -c);
                        if (add_elem(std::move(s)))
                            grew = true;
                        continue;
                    }
                }
                // proper overlap: u = x ++ c, v = c ++ y with nonempty x, y, c
                for (size_t clen = 1; clen < std::min(u.length(), v.length()) && !grew; ++clen) {
                    if (u.length() + v.length() - clen > length_cap)
                        continue;
                    bool match = true;
                    for (size_t i = 0; i < clen; ++i)
                        if (u.arrows[u.length() - clen + i] != v.arrows[i]) {
                            match = false;
                            break;
                        }
                    if (!match)
                        continue;
                    PathWord x = gb.subword(u, 0, u.length() - clen);
                    x.src = u.src;
                    PathWord y = gb.subword(v, clen, v.length() - clen);
                    PathWord triv_src;
                    triv_src.src = u.src; // f's monomials all start here
                    PathWord triv_tgt;
                    triv_tgt.src = v.target(q);
                    // x ++ g  minus  f ++ y; both lead with the ambient word
                    PathPoly<K> s = detail::sandwich(q, x, gb.elems[b], triv_tgt);
                    for (const auto& [m, c] : detail::sandwich(q, triv_src, gb.elems[a], y))
                        detail::poly_add_term(s, m, -c);
                    if (add_elem(std::move(s)))
                        grew = true;
                }
            }
    }

    // minimalize: drop elements whose lead contains another lead as a proper subword
    for (size_t i = 0; i < gb.elems.size();) {
        bool redundant = false;
        for (size_t j = 0; j < gb.elems.size() && !redundant; ++j) {
            if (i == j)
                continue;
            const auto& li = gb.elems[i].begin()->first;
            const auto& lj = gb.elems[j].begin()->first;
            if (lj.length() < li.length() &&
                detail::find_subword(li.arrows, lj.arrows) != std::string::npos)
                redundant = true;
        }
        if (redundant)
            gb.elems.erase(gb.elems.begin() + i);
        else
            ++i;
    }
    // tail-reduce for a canonical rewriting system
    for (size_t i = 0; i < gb.elems.size(); ++i) {
        PathPoly<K> head;
        head.insert(*gb.elems[i].begin());
        PathPoly<K> tail = gb.elems[i];
        tail.erase(tail.begin());
        detail::PathGB<K> others;
        others.quiver = &q;
        for (size_t j = 0; j < gb.elems.size(); ++j)
            if (j != i)
                others.elems.push_back(gb.elems[j]);
        tail = others.reduce(std::move(tail));
        for (const auto& [m, c] : tail)
            detail::poly_add_term(head, m, c);
        gb.elems[i] = std::move(head);
    }

    // standard paths, degree by degree
    std::vector<PathWord> basis;
    std::vector<PathWord> layer;
    for (size_t v = 0; v < q.vertices.size(); ++v) {
        PathWord w;
        w.src = v;
        layer.push_back(w);
        basis.push_back(w);
    }
    size_t len = 0;
    while (!layer.empty()) {
        ++len;
        if (len > length_cap)
            fail(ErrorCode::NotFiniteDimensional,
                 "standard paths survive at length cap " + std::to_string(length_cap));
        std::vector<PathWord> next;
        for (const auto& w : layer)
            for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
                if (q.arrows[ai].src != w.target(q))
                    continue;
                PathWord ext = w;
                if (ext.trivial())
                    ext.src = q.arrows[ai].src;
                ext.arrows.push_back(ai);
                bool standard = true;
                for (const auto& g : gb.elems) {
                    const auto& lead = g.begin()->first;
                    if (lead.length() > ext.length())
                        continue;
                    // only suffix checks are needed: prefixes were standard
                    bool suffix = true;
                    for (size_t i = 0; i < lead.length(); ++i)
                        if (ext.arrows[ext.length() - lead.length() + i] != lead.arrows[i]) {
                            suffix = false;
                            break;
                        }
                    if (suffix) {
                        standard = false;
                        break;
                    }
                }
                if (standard)
                    next.push_back(ext);
            }
        for (const auto& w : next)
            basis.push_back(w);
        layer = std::move(next);
    }

    PathAlgebraData<K> out;
    out.quiver = std::make_shared<QuiverPresentation>(q);
    out.words = basis;
    out.gb = std::move(gb);
    out.gb.quiver = out.quiver.get();

    Algebra<K> alg;
    alg.field = field;
    alg.dim = basis.size();
    alg.table.resize(alg.dim * alg.dim);

    auto label_of = [&](const PathWord& w) {
        if (w.trivial())
            return q.vertices[w.src];
        std::string s;
        for (auto it = w.arrows.rbegin(); it != w.arrows.rend(); ++it) {
            if (!s.empty())
                s += "*";
            s += q.arrows[*it].name;
        }
        return s;
    };
    for (const auto& w : basis)
        alg.labels.push_back(label_of(w));

    auto index_of = [&](const PathWord& w) -> size_t {
        for (size_t i = 0; i < basis.size(); ++i)
            if (basis[i] == w)
                return i;
        fail(ErrorCode::Internal, "basis lookup failed");
    };

    const QuiverPresentation& qr = *out.quiver;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) {
            // b_i · b_j applies b_j first
            if (!detail::composable(qr, basis[j], basis[i]))
                continue;
            PathPoly<K> p;
            p.emplace(detail::concat(qr, basis[j], basis[i]), K::one(field));
            p = out.gb.reduce(std::move(p));
            typename Algebra<K>::SparseVec sv;
            for (const auto& [m, c] : p)
                sv.emplace_back(index_of(m), c);
            std::sort(sv.begin(), sv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            alg.entry(i, j) = std::move(sv);
        }

    alg.unit = vec_zero<K>(field, alg.dim);
    for (size_t v = 0; v < q.vertices.size(); ++v) {
        size_t idx = index_of(PathWord{v, {}});
        out.vertex_basis.push_back(idx);
        Vec<K> e = vec_zero<K>(field, alg.dim);
        e[idx] = K::one(field);
        alg.idems.push_back(e);
        alg.unit[idx] = K::one(field);
    }
    for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        PathWord w;
        w.src = q.arrows[ai].src;
        w.arrows.push_back(ai);
        out.arrow_basis.push_back(index_of(w));
    }
    for (const auto& w : basis)
        out.degrees.push_back((long)w.length());

    // arrow ideal = radical for an admissible quotient
    std::vector<Vec<K>> rad;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!basis[i].trivial()) {
            Vec<K> v = vec_zero<K>(field, alg.dim);
            v[i] = K::one(field);
            rad.push_back(std::move(v));
        }
    alg.radical_hint = std::move(rad);

    auto violations = verify_algebra(alg);
    if (!violations.empty())
        fail(ErrorCode::Internal, "path algebra failed invariants: " + violations[0]);

    out.alg = std::make_shared<Algebra<K>>(std::move(alg));
    return out;
}

} // namespace skewalg
