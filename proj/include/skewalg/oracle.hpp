#pragma once

#include "group.hpp"
#include "module.hpp"
#include "poset.hpp"

#include <map>
#include <string>

namespace skewalg {

// Canonical form of a poset: the lexicographically smallest leq bit string
// over all relabelings. Exhaustive, capped at 9 elements.
inline std::string canonical_poset_hash(const PosetData& p)
{
    size_t n = p.size();
    if (n > 9)
        fail(ErrorCode::ResourceCap, "poset canonicalization capped at 9 elements");
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i)
        perm[i] = i;
    std::string best;
    do {
        std::string bits;
        bits.reserve(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                bits.push_back(p.leq[perm[i]][perm[j]] ? '1' : '0');
        if (best.empty() || bits < best)
            best = bits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

inline bool poset_is_chain(const PosetData& p)
{
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p.size(); ++j)
            if (!p.comparable(i, j))
                return false;
    return true;
}

inline bool poset_is_antichain(const PosetData& p)
{
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < p.size(); ++j)
            if (i != j && p.comparable(i, j))
                return false;
    return true;
}

struct OracleAnswer {
    enum class V { Unknown, Finite, Infinite } v = V::Unknown;
    bool finite = false;
    std::string source;

    bool decided() const { return v != V::Unknown; }

    static OracleAnswer make_finite(std::string src)
    {
        return OracleAnswer{V::Finite, true, std::move(src)};
    }
    static OracleAnswer make_infinite(std::string src)
    {
        return OracleAnswer{V::Infinite, false, std::move(src)};
    }
    static OracleAnswer unknown() { return OracleAnswer{}; }
};

// Representation-type oracle: built-in answers for semisimple algebras, local
// Nakayama algebras and group algebras (cyclic Sylow criterion); everything
// else comes from a user-supplied table of known verdicts or stays unknown.
// The cited classifications (Loupias; Bautista–Bongartz) are data, not code.
class RepTypeOracle {
public:
    std::map<std::string, bool> poset_table;   // canonical hash -> finite?
    std::map<std::string, bool> algebra_table; // fingerprint string -> finite?

    template <class K>
    static std::string algebra_fingerprint(const Algebra<K>& a)
    {
        auto dims = radical_series_dims(a);
        std::string s = "char" + std::to_string(a.field.characteristic()) + ":dim" +
                        std::to_string(a.dim) + ":rad";
        for (size_t d : dims)
            s += "." + std::to_string(d);
        return s;
    }

    template <class K>
    OracleAnswer algebra_verdict(const Algebra<K>& a) const
    {
        Subspace<K> rad = radical(a);
        if (rad.dim() == 0)
            return OracleAnswer::make_finite("builtin:semisimple");
        if (a.dim - rad.dim() == 1) {
            // local; Nakayama when the radical is principal
            Subspace<K> rad2 = subspace_product(a, rad, rad);
            if (rad.dim() - rad2.dim() <= 1)
                return OracleAnswer::make_finite("builtin:local-nakayama");
        }
        auto it = algebra_table.find(algebra_fingerprint(a));
        if (it != algebra_table.end())
            return it->second ? OracleAnswer::make_finite("table:algebra")
                              : OracleAnswer::make_infinite("table:algebra");
        return OracleAnswer::unknown();
    }

    OracleAnswer poset_verdict(const PosetData& p) const
    {
        if (poset_is_chain(p))
            return OracleAnswer::make_finite("builtin:chain");
        if (poset_is_antichain(p))
            return OracleAnswer::make_finite("builtin:antichain");
        std::string h;
        try {
            h = canonical_poset_hash(p);
        } catch (const Error&) {
            return OracleAnswer::unknown();
        }
        auto it = poset_table.find(h);
        if (it != poset_table.end())
            return it->second ? OracleAnswer::make_finite("table:poset")
                              : OracleAnswer::make_infinite("table:poset");
        return OracleAnswer::unknown();
    }

    // kG: finite representation type iff the Sylow p-subgroups are cyclic.
    static OracleAnswer group_verdict(const PermGroup& g, long long p)
    {
        return group_algebra_finite_type(g, p)
                   ? OracleAnswer::make_finite("builtin:cyclic-sylow")
                   : OracleAnswer::make_infinite("builtin:cyclic-sylow");
    }
};

} // namespace skewalg
