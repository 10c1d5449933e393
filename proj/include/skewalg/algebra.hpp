#pragma once

#include "matrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skewalg {

// Finite-dimensional associative unital algebra given by structure constants,
// together with a distinguished complete set of orthogonal idempotents E.
// Products of basis elements are stored sparsely: mult(i,j) lists the nonzero
// coordinates of b_i·b_j.
template <class K>
struct Algebra {
    using Field = typename K::Field;
    using SparseVec = std::vector<std::pair<size_t, K>>;

    Field field;
    size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<SparseVec> table; // table[i*dim+j] = b_i·b_j
    Vec<K> unit;
    std::vector<Vec<K>> idems; // E

    // Builders that know the radical (path/incidence algebras) record it here;
    // radical() uses the generic algorithm otherwise.
    std::optional<std::vector<Vec<K>>> radical_hint;

    const SparseVec& entry(size_t i, size_t j) const { return table[i * dim + j]; }
    SparseVec& entry(size_t i, size_t j) { return table[i * dim + j]; }

    Vec<K> zero_vec() const { return vec_zero<K>(field, dim); }

    Vec<K> basis_vec(size_t i) const
    {
        Vec<K> v = zero_vec();
        v[i] = K::one(field);
        return v;
    }

    Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const
    {
        Vec<K> r = zero_vec();
        for (size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero())
                continue;
            for (size_t j = 0; j < dim; ++j) {
                if (y[j].is_zero())
                    continue;
                K c = x[i] * y[j];
                for (const auto& [idx, s] : entry(i, j))
                    r[idx] += c * s;
            }
        }
        return r;
    }

    // Matrix of left multiplication by x in the basis.
    Mat<K> left_mult(const Vec<K>& x) const
    {
        Mat<K> m(field, dim, dim);
        for (size_t j = 0; j < dim; ++j) {
            for (size_t i = 0; i < dim; ++i) {
                if (x[i].is_zero())
                    continue;
                for (const auto& [idx, s] : entry(i, j))
                    m.at(idx, j) += x[i] * s;
            }
        }
        return m;
    }

    Mat<K> right_mult(const Vec<K>& x) const
    {
        Mat<K> m(field, dim, dim);
        for (size_t i = 0; i < dim; ++i) {
            for (size_t j = 0; j < dim; ++j) {
                if (x[j].is_zero())
                    continue;
                for (const auto& [idx, s] : entry(i, j))
                    m.at(idx, i) += x[j] * s;
            }
        }
        return m;
    }

    // Linear functional z -> trace of left multiplication by z.
    Vec<K> trace_functional() const
    {
        Vec<K> t = zero_vec();
        for (size_t j = 0; j < dim; ++j)
            for (size_t i = 0; i < dim; ++i)
                for (const auto& [idx, s] : entry(j, i))
                    if (idx == i)
                        t[j] += s;
        return t;
    }

    K trace_of(const Vec<K>& z, const Vec<K>& tf) const
    {
        K r = K::zero(field);
        for (size_t i = 0; i < dim; ++i)
            if (!z[i].is_zero())
                r += z[i] * tf[i];
        return r;
    }

    Vec<K> power(Vec<K> x, size_t n) const
    {
        Vec<K> r = unit;
        while (n > 0) {
            if (n & 1)
                r = mul(r, x);
            x = mul(x, x);
            n >>= 1;
        }
        return r;
    }

    bool is_idempotent(const Vec<K>& e) const
    {
        Vec<K> sq = mul(e, e);
        for (size_t i = 0; i < dim; ++i)
            if (sq[i] != e[i])
                return false;
        return true;
    }
};

template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

template <class K>
void set_sparse_from_dense(typename Algebra<K>::SparseVec& sv, const Vec<K>& v)
{
    sv.clear();
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            sv.emplace_back(i, v[i]);
}

template <class K>
Vec<K> sparse_to_dense(const Algebra<K>& a, const typename Algebra<K>::SparseVec& sv)
{
    Vec<K> v = a.zero_vec();
    for (const auto& [i, c] : sv)
        v[i] = c;
    return v;
}

// Exhaustive invariant check: unit law, associativity on all basis triples,
// and E complete orthogonal. Returns the violations found.
template <class K>
std::vector<std::string> verify_algebra(const Algebra<K>& a)
{
    std::vector<std::string> bad;
    for (size_t i = 0; i < a.dim; ++i) {
        Vec<K> b = a.basis_vec(i);
        if (a.mul(a.unit, b) != b || a.mul(b, a.unit) != b) {
            bad.push_back("unit law fails on basis " + std::to_string(i));
            break;
        }
    }
    for (size_t i = 0; i < a.dim && bad.size() < 8; ++i)
        for (size_t j = 0; j < a.dim && bad.size() < 8; ++j) {
            Vec<K> ij = sparse_to_dense(a, a.entry(i, j));
            for (size_t k = 0; k < a.dim; ++k) {
                Vec<K> left = a.mul(ij, a.basis_vec(k));
                Vec<K> right = a.mul(a.basis_vec(i), sparse_to_dense(a, a.entry(j, k)));
                if (left != right) {
                    bad.push_back("associativity fails on (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")");
                    break;
                }
            }
        }
    Vec<K> s = a.zero_vec();
    for (size_t i = 0; i < a.idems.size(); ++i) {
        for (size_t j = 0; j < a.idems.size(); ++j) {
            Vec<K> p = a.mul(a.idems[i], a.idems[j]);
            Vec<K> want = (i == j) ? a.idems[i] : a.zero_vec();
            if (p != want) {
                bad.push_back("idempotents " + std::to_string(i) + "," + std::to_string(j) +
                              " not orthogonal idempotent");
            }
        }
        for (size_t k = 0; k < a.dim; ++k)
            s[k] += a.idems[i][k];
    }
    if (!a.idems.empty() && s != a.unit)
        bad.push_back("idempotents do not sum to the unit");
    return bad;
}

// ---------------------------------------------------------------------------
// Subspace machinery inside an algebra

// Two-sided ideal generated by the given vectors.
template <class K>
Subspace<K> ideal_closure(const Algebra<K>& a, std::vector<Vec<K>> gens)
{
    Subspace<K> span = Subspace<K>::from_vectors(a.field, a.dim, gens);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vec<K>> next = span.basis_vectors();
        size_t before = span.dim();
        for (const auto& v : span.basis_vectors())
            for (size_t i = 0; i < a.dim; ++i) {
                next.push_back(a.mul(a.basis_vec(i), v));
                next.push_back(a.mul(v, a.basis_vec(i)));
            }
        span = Subspace<K>::from_vectors(a.field, a.dim, next);
        grew = span.dim() > before;
    }
    return span;
}

template <class K>
bool is_two_sided_ideal(const Algebra<K>& a, const Subspace<K>& s)
{
    for (const auto& v : s.basis_vectors())
        for (size_t i = 0; i < a.dim; ++i) {
            if (!s.contains(a.mul(a.basis_vec(i), v)))
                return false;
            if (!s.contains(a.mul(v, a.basis_vec(i))))
                return false;
        }
    return true;
}

// Product span U·V.
template <class K>
Subspace<K> subspace_product(const Algebra<K>& a, const Subspace<K>& u, const Subspace<K>& v)
{
    std::vector<Vec<K>> prods;
    for (const auto& x : u.basis_vectors())
        for (const auto& y : v.basis_vectors())
            prods.push_back(a.mul(x, y));
    return Subspace<K>::from_vectors(a.field, a.dim, prods);
}

template <class K>
bool is_nilpotent_ideal(const Algebra<K>& a, const Subspace<K>& s)
{
    Subspace<K> pw = s;
    for (size_t step = 0; step <= a.dim; ++step) {
        if (pw.dim() == 0)
            return true;
        Subspace<K> next = subspace_product(a, pw, s);
        if (next.dim() >= pw.dim() && next == pw)
            return false;
        pw = next;
    }
    return pw.dim() == 0;
}

// ---------------------------------------------------------------------------
// Jacobson radical
//
// char 0: Dickson's criterion, rad = kernel of the trace form (x,y) ->
// tr(L_{xy}).  char p: the trace-form chain of Ivanyos–Rónyai: x survives
// level i iff Tr((XY)^{p^i}) ≡ 0 mod p^{i+1} for all y in the previous level,
// where X, Y are integer lifts of the regular representation; levels run while
// p^i ≤ dim.  The result is verified to be a nilpotent two-sided ideal.

namespace detail {

using IntMat = std::vector<long long>;

inline IntMat imat_mul(const IntMat& a, const IntMat& b, size_t n, long long mod)
{
    IntMat r(n * n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            long long v = a[i * n + k];
            if (v == 0)
                continue;
            for (size_t j = 0; j < n; ++j)
                r[i * n + j] = (r[i * n + j] + v * b[k * n + j]) % mod;
        }
    return r;
}

inline IntMat imat_pow(IntMat x, size_t e, size_t n, long long mod)
{
    IntMat r(n * n, 0);
    for (size_t i = 0; i < n; ++i)
        r[i * n + i] = 1 % mod;
    while (e > 0) {
        if (e & 1)
            r = imat_mul(r, x, n, mod);
        x = imat_mul(x, x, n, mod);
        e >>= 1;
    }
    return r;
}

inline long long imat_trace(const IntMat& m, size_t n, long long mod)
{
    long long t = 0;
    for (size_t i = 0; i < n; ++i)
        t = (t + m[i * n + i]) % mod;
    return t;
}

} // namespace detail

template <class K>
Subspace<K> radical_generic(const Algebra<K>& a);

inline Subspace<Rat> radical_generic_impl(const Algebra<Rat>& a)
{
    Vec<Rat> tf = a.trace_functional();
    Mat<Rat> gram(a.field, a.dim, a.dim);
    for (size_t u = 0; u < a.dim; ++u)
        for (size_t v = 0; v < a.dim; ++v) {
            Rat t = Rat::zero(a.field);
            for (const auto& [idx, c] : a.entry(u, v))
                t += c * tf[idx];
            gram.at(u, v) = t;
        }
    return Subspace<Rat>::from_vectors(a.field, a.dim, gram.kernel_basis());
}

inline Subspace<Fp> radical_generic_impl(const Algebra<Fp>& a)
{
    const long long p = a.field.p;
    const size_t n = a.dim;
    auto f = a.field;

    // Level 0 is the plain trace form, computed from structure constants.
    Vec<Fp> tf = a.trace_functional();
    Mat<Fp> gram(f, n, n);
    for (size_t u = 0; u < n; ++u)
        for (size_t v = 0; v < n; ++v) {
            Fp t = Fp::zero(f);
            for (const auto& [idx, c] : a.entry(u, v))
                t += c * tf[idx];
            gram.at(u, v) = t;
        }
    Subspace<Fp> cur = Subspace<Fp>::from_vectors(f, n, gram.kernel_basis());

    // Integer lifts of left-multiplication matrices for the current basis.
    auto lift_left_mult = [&](const Vec<Fp>& x) {
        detail::IntMat m(n * n, 0);
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) {
                if (x[i].is_zero())
                    continue;
                for (const auto& [idx, s] : a.entry(i, j))
                    m[idx * n + j] = (m[idx * n + j] + x[i].residue() * s.residue()) % p;
            }
        return m;
    };

    long long pk = p;
    for (size_t lvl = 1; pk <= (long long)n && cur.dim() > 0; ++lvl, pk *= p) {
        long long mod = pk * p; // p^{lvl+1}
        auto basis = cur.basis_vectors();
        std::vector<detail::IntMat> lifts;
        lifts.reserve(basis.size());
        for (const auto& v : basis)
            lifts.push_back(lift_left_mult(v));
        // One linear constraint per y: Σ_x α_x·T_lvl(v_x·y) = 0, using the
        // additivity of T_lvl on the previous chain member.
        Mat<Fp> rows(f, basis.size(), basis.size());
        for (size_t yi = 0; yi < basis.size(); ++yi)
            for (size_t xi = 0; xi < basis.size(); ++xi) {
                detail::IntMat prod = detail::imat_mul(lifts[xi], lifts[yi], n, mod);
                detail::IntMat pw = detail::imat_pow(prod, (size_t)pk, n, mod);
                long long t = detail::imat_trace(pw, n, mod);
                if (t % pk != 0)
                    fail(ErrorCode::Internal, "radical trace level not divisible");
                rows.at(yi, xi) = Fp(t / pk, f);
            }
        std::vector<Vec<Fp>> next;
        for (auto& ker : rows.kernel_basis()) {
            Vec<Fp> v = vec_zero<Fp>(f, n);
            for (size_t i = 0; i < basis.size(); ++i)
                vec_add_scaled(v, basis[i], ker[i]);
            next.push_back(std::move(v));
        }
        cur = Subspace<Fp>::from_vectors(f, n, next);
    }
    return cur;
}

template <class K>
Subspace<K> radical_generic(const Algebra<K>& a)
{
    Subspace<K> r = radical_generic_impl(a);
    if (!is_two_sided_ideal(a, r) || !is_nilpotent_ideal(a, r))
        fail(ErrorCode::InvalidAlgebra, "radical postcondition failed (input not associative?)");
    return r;
}

template <class K>
Subspace<K> radical(const Algebra<K>& a)
{
    if (a.radical_hint)
        return Subspace<K>::from_vectors(a.field, a.dim, *a.radical_hint);
    return radical_generic(a);
}

// Dimensions of rad^0 = A, rad, rad^2, ... down to zero.
template <class K>
std::vector<size_t> radical_series_dims(const Algebra<K>& a)
{
    std::vector<size_t> dims{a.dim};
    Subspace<K> r = radical(a);
    Subspace<K> pw = r;
    while (pw.dim() > 0) {
        dims.push_back(pw.dim());
        pw = subspace_product(a, pw, r);
    }
    dims.push_back(0);
    return dims;
}

// ---------------------------------------------------------------------------
// Quotient by a two-sided ideal. Quotient coordinates are the non-pivot
// coordinates of the ideal's rref basis.
template <class K>
struct QuotientAlgebra {
    Algebra<K> alg;
    Mat<K> projection;        // dim(quot) x dim(a)
    std::vector<size_t> reps; // original coordinate index of each quotient basis vector
};

template <class K>
QuotientAlgebra<K> quotient_algebra(const Algebra<K>& a, const Subspace<K>& ideal)
{
    std::vector<bool> is_pivot(a.dim, false);
    for (size_t c : ideal.pivots())
        is_pivot[c] = true;
    std::vector<size_t> reps;
    for (size_t i = 0; i < a.dim; ++i)
        if (!is_pivot[i])
            reps.push_back(i);
    size_t qd = reps.size();

    Mat<K> proj(a.field, qd, a.dim);
    for (size_t i = 0; i < a.dim; ++i) {
        Vec<K> red = ideal.reduce(a.basis_vec(i));
        for (size_t r = 0; r < qd; ++r)
            proj.at(r, i) = red[reps[r]];
    }

    Algebra<K> q;
    q.field = a.field;
    q.dim = qd;
    q.table.resize(qd * qd);
    for (size_t r = 0; r < qd; ++r)
        q.labels.push_back(a.labels.empty() ? "q" + std::to_string(r) : a.labels[reps[r]]);
    for (size_t i = 0; i < qd; ++i)
        for (size_t j = 0; j < qd; ++j) {
            Vec<K> prod = a.mul(a.basis_vec(reps[i]), a.basis_vec(reps[j]));
            set_sparse_from_dense<K>(q.entry(i, j), proj.apply(prod));
        }
    q.unit = proj.apply(a.unit);
    for (const auto& e : a.idems) {
        Vec<K> img = proj.apply(e);
        if (!vec_is_zero(img))
            q.idems.push_back(img);
    }
    return QuotientAlgebra<K>{std::move(q), std::move(proj), std::move(reps)};
}

// ---------------------------------------------------------------------------
// Corner algebra e·A·e with unit e.
template <class K>
struct CornerAlgebra {
    Algebra<K> alg;
    std::vector<Vec<K>> embedding; // basis vectors of the corner inside A
};

template <class K>
CornerAlgebra<K> corner(const Algebra<K>& a, const Vec<K>& e,
                        const std::vector<Vec<K>>& corner_idems = {})
{
    if (!a.is_idempotent(e))
        fail(ErrorCode::NotIdempotent, "corner: e is not idempotent");
    std::vector<Vec<K>> span;
    for (size_t i = 0; i < a.dim; ++i)
        span.push_back(a.mul(e, a.mul(a.basis_vec(i), e)));
    Subspace<K> sub = Subspace<K>::from_vectors(a.field, a.dim, span);

    Algebra<K> c;
    c.field = a.field;
    c.dim = sub.dim();
    c.table.resize(c.dim * c.dim);
    auto basis = sub.basis_vectors();
    for (size_t i = 0; i < c.dim; ++i)
        c.labels.push_back("c" + std::to_string(i));
    for (size_t i = 0; i < c.dim; ++i)
        for (size_t j = 0; j < c.dim; ++j)
            set_sparse_from_dense<K>(c.entry(i, j), sub.coords(a.mul(basis[i], basis[j])));
    c.unit = sub.coords(e);
    if (!corner_idems.empty()) {
        for (const auto& f : corner_idems)
            c.idems.push_back(sub.coords(f));
    } else {
        // keep the idempotents of A that survive whole: e·e_i·e == e_i
        for (const auto& f : a.idems) {
            Vec<K> g = a.mul(e, a.mul(f, e));
            if (g == f)
                c.idems.push_back(sub.coords(f));
        }
        Vec<K> s = vec_zero<K>(a.field, c.dim);
        for (const auto& f : c.idems)
            for (size_t k = 0; k < c.dim; ++k)
                s[k] += f[k];
        if (c.idems.empty() || s != c.unit)
            c.idems = {c.unit};
    }
    return CornerAlgebra<K>{std::move(c), std::move(basis)};
}

template <class K>
bool is_local(const Algebra<K>& a)
{
    return a.dim - radical(a).dim() == 1;
}

// Connectivity of the graph on E with i ~ j iff e_i A e_j or e_j A e_i is nonzero.
template <class K>
bool is_connected(const Algebra<K>& a)
{
    size_t n = a.idems.size();
    if (n <= 1)
        return true;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            for (size_t k = 0; k < a.dim && !adj[i][j]; ++k) {
                Vec<K> v = a.mul(a.idems[i], a.mul(a.basis_vec(k), a.idems[j]));
                if (!vec_is_zero(v))
                    adj[i][j] = adj[j][i] = true;
            }
        }
    std::vector<bool> seen(n, false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    size_t count = 1;
    while (!stack.empty()) {
        size_t u = stack.back();
        stack.pop_back();
        for (size_t v = 0; v < n; ++v)
            if (adj[u][v] && !seen[v]) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
    }
    return count == n;
}

// e_i is primitive iff e_i A e_i is local.
template <class K>
std::vector<bool> primitivity_check(const Algebra<K>& a)
{
    std::vector<bool> prim;
    prim.reserve(a.idems.size());
    for (const auto& e : a.idems)
        prim.push_back(is_local(corner(a, e).alg));
    return prim;
}

template <class K>
Algebra<K> opposite(const Algebra<K>& a)
{
    Algebra<K> op = a;
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j)
            op.entry(i, j) = a.entry(j, i);
    return op; // radical_hint carries over: the radical is a two-sided ideal
}

} // namespace skewalg
