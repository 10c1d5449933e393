#pragma once

#include "errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace skewalg {

// Exact scalars. Two field types share one interface:
//   Fp  — prime field F_p, residues stored reduced in [0, p)
//   Rat — rational numbers, always in lowest terms (cpp_rational invariant)
// Every scalar knows its characteristic; mixing moduli raises
// CharacteristicMismatch. A default-constructed Fp is an "unbound" zero that
// adopts the modulus of the other operand, so vectors can be resized freely.

class Fp {
public:
    struct Field {
        long long p = 0;
        long long characteristic() const { return p; }
        bool operator==(const Field&) const = default;
    };

    Fp() = default;

    Fp(long long v, Field f) : p_(f.p)
    {
        v_ = v % p_;
        if (v_ < 0)
            v_ += p_;
    }

    static Fp zero(Field f) { return Fp(0, f); }
    static Fp one(Field f) { return Fp(1, f); }
    static Fp from_int(long long v, Field f) { return Fp(v, f); }

    Field field() const { return Field{p_}; }
    long long characteristic() const { return p_; }
    long long residue() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return p_ != 0 && v_ == 1; }

    Fp operator+(const Fp& o) const
    {
        long long p = join(o);
        if (p == 0)
            return Fp();
        return raw((v_ + o.v_) % p, p);
    }

    Fp operator-(const Fp& o) const
    {
        long long p = join(o);
        if (p == 0)
            return Fp();
        return raw((v_ - o.v_ + p) % p, p);
    }

    Fp operator-() const
    {
        if (p_ == 0)
            return Fp();
        return raw(v_ == 0 ? 0 : p_ - v_, p_);
    }

    Fp operator*(const Fp& o) const
    {
        long long p = join(o);
        if (p == 0)
            return Fp();
        return raw((v_ * o.v_) % p, p);
    }

    Fp inv() const
    {
        if (p_ == 0 || v_ == 0)
            fail(ErrorCode::ShapeError, "inverse of zero in F_p");
        // extended Euclid
        long long a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            long long t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        return Fp(x0, Field{p_});
    }

    Fp operator/(const Fp& o) const { return *this * o.inv(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool operator==(const Fp& o) const
    {
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
            fail(ErrorCode::CharacteristicMismatch, "comparing residues of different moduli");
        return v_ == o.v_;
    }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    static Fp raw(long long v, long long p)
    {
        Fp r;
        r.v_ = v;
        r.p_ = p;
        return r;
    }

    // Unbound zeros (p_ == 0) adopt the partner's modulus.
    long long join(const Fp& o) const
    {
        if (p_ == 0)
            return o.p_;
        if (o.p_ == 0)
            return p_;
        if (p_ != o.p_)
            fail(ErrorCode::CharacteristicMismatch, "mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
        return p_;
    }

    long long v_ = 0;
    long long p_ = 0;
};

class Rat {
public:
    struct Field {
        long long characteristic() const { return 0; }
        bool operator==(const Field&) const = default;
    };

    using Q = boost::multiprecision::cpp_rational;

    Rat() = default;
    explicit Rat(Q q) : q_(std::move(q)) {}
    Rat(long long num, long long den) : q_(num, den) {}

    static Rat zero(Field) { return Rat(); }
    static Rat one(Field) { return Rat(Q(1)); }
    static Rat from_int(long long v, Field) { return Rat(Q(v)); }

    Field field() const { return Field{}; }
    long long characteristic() const { return 0; }
    const Q& value() const { return q_; }
    bool is_zero() const { return q_.is_zero(); }
    bool is_one() const { return q_ == 1; }

    Rat operator+(const Rat& o) const { return Rat(q_ + o.q_); }
    Rat operator-(const Rat& o) const { return Rat(q_ - o.q_); }
    Rat operator-() const { return Rat(-q_); }
    Rat operator*(const Rat& o) const { return Rat(q_ * o.q_); }

    Rat inv() const
    {
        if (q_.is_zero())
            fail(ErrorCode::ShapeError, "inverse of zero rational");
        return Rat(1 / q_);
    }

    Rat operator/(const Rat& o) const { return Rat(q_ / o.q_); }

    Rat& operator+=(const Rat& o)
    {
        q_ += o.q_;
        return *this;
    }
    Rat& operator-=(const Rat& o)
    {
        q_ -= o.q_;
        return *this;
    }
    Rat& operator*=(const Rat& o)
    {
        q_ *= o.q_;
        return *this;
    }

    bool operator==(const Rat& o) const { return q_ == o.q_; }
    bool operator!=(const Rat& o) const { return q_ != o.q_; }

    std::string str() const { return q_.str(); }

private:
    Q q_;
};

// Parse "n" or "n/d" into a scalar of the given field.
template <class K>
K scalar_from_string(const std::string& s, typename K::Field f)
{
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return K::from_int(std::stoll(s), f);
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0)
        fail(ErrorCode::InputError, "zero denominator in scalar " + s);
    return K::from_int(num, f) / K::from_int(den, f);
}

} // namespace skewalg
