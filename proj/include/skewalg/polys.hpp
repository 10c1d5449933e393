#pragma once

#include "scalar.hpp"

#include <optional>
#include <vector>

namespace skewalg {

// Dense univariate polynomials, ascending coefficients, trailing zeros trimmed.
template <class K>
using Poly = std::vector<K>;

template <class K>
void poly_trim(Poly<K>& p)
{
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

template <class K>
long poly_deg(const Poly<K>& p)
{
    return (long)p.size() - 1; // -1 for the zero polynomial
}

template <class K>
Poly<K> poly_mul(const Poly<K>& a, const Poly<K>& b, typename K::Field f)
{
    if (a.empty() || b.empty())
        return {};
    Poly<K> r(a.size() + b.size() - 1, K::zero(f));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

template <class K>
Poly<K> poly_sub(Poly<K> a, const Poly<K>& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    poly_trim(a);
    return a;
}

template <class K>
Poly<K> poly_monic(Poly<K> p)
{
    if (p.empty())
        return p;
    K inv = p.back().inv();
    for (auto& c : p)
        c *= inv;
    return p;
}

// remainder of a mod b (b nonzero)
template <class K>
Poly<K> poly_mod(Poly<K> a, const Poly<K>& b, typename K::Field f)
{
    (void)f;
    if (b.empty())
        fail(ErrorCode::ShapeError, "poly_mod by zero");
    poly_trim(a);
    K lead_inv = b.back().inv();
    while (a.size() >= b.size()) {
        K c = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        poly_trim(a);
    }
    return a;
}

template <class K>
Poly<K> poly_div_exact(Poly<K> a, const Poly<K>& b, typename K::Field f)
{
    Poly<K> q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, K::zero(f));
    K lead_inv = b.back().inv();
    while (a.size() >= b.size()) {
        K c = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        poly_trim(a);
    }
    if (!a.empty())
        fail(ErrorCode::Internal, "poly_div_exact: nonzero remainder");
    poly_trim(q);
    return q;
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b, typename K::Field f)
{
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly<K> r = poly_mod(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(std::move(a));
}

template <class K>
Poly<K> poly_derivative(const Poly<K>& p, typename K::Field f)
{
    Poly<K> d;
    for (size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * K::from_int((long long)i, f));
    poly_trim(d);
    return d;
}

template <class K>
K poly_eval(const Poly<K>& p, const K& x, typename K::Field f)
{
    K r = K::zero(f);
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        r = r * x + *it;
    return r;
}

template <class K>
Poly<K> poly_squarefree_part(const Poly<K>& p, typename K::Field f)
{
    Poly<K> d = poly_derivative(p, f);
    if (d.empty())
        return poly_monic(p); // p' = 0 can only happen for constants at desk scale fields we split
    Poly<K> g = poly_gcd(p, d, f);
    if (poly_deg(g) <= 0)
        return poly_monic(p);
    return poly_monic(poly_div_exact(p, g, f));
}

template <class K>
Poly<K> poly_pow_mod(Poly<K> base, long long e, const Poly<K>& m, typename K::Field f)
{
    Poly<K> r{K::one(f)};
    base = poly_mod(std::move(base), m, f);
    while (e > 0) {
        if (e & 1)
            r = poly_mod(poly_mul(r, base, f), m, f);
        base = poly_mod(poly_mul(base, base, f), m, f);
        e >>= 1;
    }
    return r;
}

// Nontrivial monic factor of a squarefree monic polynomial over F_p, or
// nothing when irreducible.  Linear roots are scanned first, then
// distinct-degree splitting via gcd(t^{p^d} − t, m).
inline std::optional<Poly<Fp>> fp_find_factor(const Poly<Fp>& m, Fp::Field f)
{
    long deg = poly_deg(m);
    if (deg <= 1)
        return std::nullopt;
    for (long long a = 0; a < f.p; ++a) {
        Fp x(a, f);
        if (poly_eval(m, x, f).is_zero())
            return Poly<Fp>{-x, Fp::one(f)};
    }
    Poly<Fp> t{Fp::zero(f), Fp::one(f)};
    Poly<Fp> h = t;
    for (long d = 1; 2 * d <= deg; ++d) {
        h = poly_pow_mod(h, f.p, m, f);
        Poly<Fp> g = poly_gcd(poly_sub(h, t), m, f);
        if (poly_deg(g) > 0 && poly_deg(g) < deg)
            return g;
    }
    return std::nullopt;
}

// Rational root scan for monic rational polynomials; candidates are small
// integers and small fractions, enough for the split semisimple quotients
// this toolkit decomposes over Q.
inline std::vector<Rat> rat_root_scan(const Poly<Rat>& m)
{
    std::vector<Rat> roots;
    Rat::Field f;
    auto try_root = [&](const Rat& x) {
        if (poly_eval(m, x, f).is_zero()) {
            for (const auto& r : roots)
                if (r == x)
                    return;
            roots.push_back(x);
        }
    };
    for (long long n = -16; n <= 16; ++n)
        try_root(Rat(n, 1));
    for (long long d = 2; d <= 6; ++d)
        for (long long n = -16; n <= 16; ++n)
            if (n % d != 0)
                try_root(Rat(n, d));
    return roots;
}

} // namespace skewalg
