#pragma once

#include "module.hpp"

namespace skewalg {

// Structure-constant isomorphism search for small algebras.  Candidate images
// of a generating set are filtered by minimal-polynomial equality, the linear
// map is interpolated from a spanning word set, and the result is verified on
// all basis pairs.  Exhaustive within the budget, so a nullopt answer means
// "not isomorphic" whenever the candidate enumeration was complete.

namespace detail {

template <class K>
std::vector<Vec<K>> all_vectors(const Algebra<K>& b, size_t cap)
{
    std::vector<Vec<K>> out;
    if constexpr (std::is_same_v<K, Fp>) {
        auto f = b.field;
        double total = 1;
        for (size_t i = 0; i < b.dim; ++i) {
            total *= (double)f.p;
            if (total > (double)cap)
                fail(ErrorCode::ResourceCap, "isomorphism candidate space too large");
        }
        std::vector<long long> digits(b.dim, 0);
        while (true) {
            Vec<K> v = b.zero_vec();
            for (size_t i = 0; i < b.dim; ++i)
                v[i] = Fp(digits[i], f);
            out.push_back(std::move(v));
            size_t pos = 0;
            while (pos < b.dim && ++digits[pos] == f.p) {
                digits[pos] = 0;
                ++pos;
            }
            if (pos == b.dim)
                break;
        }
    } else {
        auto f = b.field;
        double total = 1;
        for (size_t i = 0; i < b.dim; ++i) {
            total *= 5.0;
            if (total > (double)cap)
                fail(ErrorCode::UnsupportedOverQ,
                     "isomorphism search over Q limited to small dimensions");
        }
        std::vector<long long> digits(b.dim, 0);
        while (true) {
            Vec<K> v = b.zero_vec();
            for (size_t i = 0; i < b.dim; ++i)
                v[i] = K::from_int(digits[i] - 2, f);
            out.push_back(std::move(v));
            size_t pos = 0;
            while (pos < b.dim && ++digits[pos] == 5) {
                digits[pos] = 0;
                ++pos;
            }
            if (pos == b.dim)
                break;
        }
    }
    return out;
}

// spanning words in the generators
struct WordNode {
    enum class Kind { Unit, Gen, RightProd, LeftProd } kind;
    size_t w = 0; // word operand
    size_t g = 0; // generator position
};

template <class K>
struct WordSet {
    std::vector<Vec<K>> values; // in A
    std::vector<WordNode> structure;
};

template <class K>
WordSet<K> spanning_words(const Algebra<K>& a, const std::vector<size_t>& gens)
{
    WordSet<K> ws;
    ws.values.push_back(a.unit);
    ws.structure.push_back({WordNode::Kind::Unit, 0, 0});
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        ws.values.push_back(a.basis_vec(gens[gi]));
        ws.structure.push_back({WordNode::Kind::Gen, 0, gi});
    }
    Subspace<K> span = Subspace<K>::from_vectors(a.field, a.dim, ws.values);
    size_t head = 0;
    while (span.dim() < a.dim && head < ws.values.size()) {
        for (size_t gi = 0; gi < gens.size() && span.dim() < a.dim; ++gi) {
            Vec<K> prod = a.mul(ws.values[head], a.basis_vec(gens[gi]));
            if (!span.contains(prod)) {
                std::vector<Vec<K>> vs = span.basis_vectors();
                vs.push_back(prod);
                span = Subspace<K>::from_vectors(a.field, a.dim, vs);
                ws.values.push_back(prod);
                ws.structure.push_back({WordNode::Kind::RightProd, head, gi});
            }
            Vec<K> prod2 = a.mul(a.basis_vec(gens[gi]), ws.values[head]);
            if (span.dim() < a.dim && !span.contains(prod2)) {
                std::vector<Vec<K>> vs = span.basis_vectors();
                vs.push_back(prod2);
                span = Subspace<K>::from_vectors(a.field, a.dim, vs);
                ws.values.push_back(prod2);
                ws.structure.push_back({WordNode::Kind::LeftProd, head, gi});
            }
        }
        ++head;
    }
    if (span.dim() < a.dim)
        fail(ErrorCode::Internal, "generators do not span the algebra");
    return ws;
}

} // namespace detail

template <class K>
std::optional<Mat<K>> algebra_isomorphism(const Algebra<K>& a, const Algebra<K>& b,
                                          size_t candidate_cap = 250000,
                                          size_t tuple_budget = 4000000)
{
    auto f = a.field;
    if (a.dim != b.dim)
        return std::nullopt;
    if (a.dim == 0)
        return Mat<K>(f, 0, 0);
    if (a.table == b.table && a.unit == b.unit)
        return Mat<K>::identity(f, a.dim);

    // cheap invariants
    if (radical_series_dims(a) != radical_series_dims(b))
        return std::nullopt;
    if (algebra_center(a).dim() != algebra_center(b).dim())
        return std::nullopt;

    auto gens = algebra_generators(a);
    if (gens.empty()) {
        // both are spanned by the unit: k itself
        return Mat<K>::identity(f, a.dim);
    }
    auto words = detail::spanning_words(a, gens);

    // candidate images per generator, filtered by minimal polynomial
    auto vectors = detail::all_vectors(b, candidate_cap);
    std::vector<std::vector<Vec<K>>> cands(gens.size());
    for (size_t gi = 0; gi < gens.size(); ++gi) {
        Poly<K> mp = min_poly(a, a.basis_vec(gens[gi]));
        for (const auto& v : vectors)
            if (min_poly(b, v) == mp)
                cands[gi].push_back(v);
        if (cands[gi].empty())
            return std::nullopt;
    }

    double tuples = 1;
    for (const auto& c : cands)
        tuples *= (double)c.size();
    if (tuples > (double)tuple_budget)
        fail(ErrorCode::ResourceCap, "isomorphism search budget exceeded");

    std::vector<size_t> pick(gens.size(), 0);
    Mat<K> aw = Mat<K>::from_cols(f, words.values);
    while (true) {
        // evaluate the words in b at the picked generator images
        std::vector<Vec<K>> bvals(words.values.size());
        for (size_t w = 0; w < words.values.size(); ++w) {
            const auto& node = words.structure[w];
            switch (node.kind) {
                case detail::WordNode::Kind::Unit: bvals[w] = b.unit; break;
                case detail::WordNode::Kind::Gen: bvals[w] = cands[node.g][pick[node.g]]; break;
                case detail::WordNode::Kind::RightProd:
                    bvals[w] = b.mul(bvals[node.w], cands[node.g][pick[node.g]]);
                    break;
                case detail::WordNode::Kind::LeftProd:
                    bvals[w] = b.mul(cands[node.g][pick[node.g]], bvals[node.w]);
                    break;
            }
        }
        Mat<K> bw = Mat<K>::from_cols(f, bvals);
        // interpolate φ: φ·aw = bw  ⇔  awᵀ·φᵀ = bwᵀ
        auto phit = solve(aw.transpose(), bw.transpose());
        if (phit) {
            Mat<K> phi = phit->transpose();
            bool ok = phi.rank() == a.dim && phi.apply(a.unit) == b.unit;
            for (size_t i = 0; i < a.dim && ok; ++i)
                for (size_t j = 0; j < a.dim && ok; ++j) {
                    Vec<K> lhs = phi.apply(sparse_to_dense(a, a.entry(i, j)));
                    Vec<K> rhs = b.mul(phi.apply(a.basis_vec(i)), phi.apply(a.basis_vec(j)));
                    if (lhs != rhs)
                        ok = false;
                }
            if (ok)
                return phi;
        }
        size_t pos = 0;
        while (pos < gens.size() && ++pick[pos] == cands[pos].size()) {
            pick[pos] = 0;
            ++pos;
        }
        if (pos == gens.size())
            break;
    }
    return std::nullopt;
}

template <class K>
bool algebras_isomorphic(const Algebra<K>& a, const Algebra<K>& b)
{
    return algebra_isomorphism(a, b).has_value();
}

} // namespace skewalg
