#pragma once

// Exact scalar arithmetic for the supported base rings.
//
// A Ring value describes one of four coefficient rings, each sitting inside
// an explicit fraction field:
//
//   ZZ        : integers, fraction field QQ
//   ZZ_LOCAL  : integers localized at a prime p (denominators coprime to p),
//               fraction field QQ
//   QQ        : the rationals themselves (field)
//   GF        : the prime field F_p (field); elements are canonical residues
//               0..p-1 stored with denominator 1
//
// Every element is carried as an exact rational (Rat).  The Ring decides
// membership, units, canonical associates, division with canonical
// remainder, and the extended gcd used by the echelon-form routines.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace ffgs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

// p-adic valuation of a nonzero rational.
inline long p_valuation(const Int& p, const Rat& x)
{
    if (x == 0)
        throw std::invalid_argument("p_valuation: zero has no finite valuation");
    long v = 0;
    Int n = rat_num(x);
    for (; n % p == 0; n /= p)
        ++v;
    Int d = rat_den(x);
    for (; d % p == 0; d /= p)
        --v;
    return v;
}

enum class RingKind { ZZ, ZZ_LOCAL, QQ, GF };

struct Ring {
    RingKind kind = RingKind::QQ;
    Int p = 0;  // prime for ZZ_LOCAL / GF

    static Ring ZZ() { return Ring{RingKind::ZZ, 0}; }
    static Ring ZZ_local(const Int& p) { return checked(RingKind::ZZ_LOCAL, p); }
    static Ring QQ() { return Ring{RingKind::QQ, 0}; }
    static Ring GF(const Int& p) { return checked(RingKind::GF, p); }

    bool is_field() const { return kind == RingKind::QQ || kind == RingKind::GF; }

    // Fraction field as a Ring (QQ for the PID kinds, itself for fields).
    Ring fraction_field() const
    {
        if (kind == RingKind::ZZ || kind == RingKind::ZZ_LOCAL)
            return QQ();
        return *this;
    }

    bool operator==(const Ring& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    // Canonical form of a scalar in this ring's fraction field.  For GF the
    // value is reduced to the residue 0..p-1 (denominators are inverted).
    Rat normalize(const Rat& x) const
    {
        if (kind != RingKind::GF)
            return x;
        Int n = rat_num(x) % p;
        Int d = rat_den(x) % p;
        if (d == 0)
            throw std::domain_error("GF(p): denominator divisible by p");
        Int inv = mod_inverse(d, p);
        Int r = (n * inv) % p;
        if (r < 0)
            r += p;
        return Rat(r);
    }

    Rat add(const Rat& a, const Rat& b) const { return normalize(a + b); }
    Rat sub(const Rat& a, const Rat& b) const { return normalize(a - b); }
    Rat mul(const Rat& a, const Rat& b) const { return normalize(a * b); }
    Rat neg(const Rat& a) const { return normalize(-a); }

    // Division in the fraction field.
    Rat div(const Rat& a, const Rat& b) const
    {
        if (b == 0)
            throw std::domain_error("division by zero");
        return normalize(a / b);
    }

    // Membership in the ring itself (not just its fraction field).
    bool contains(const Rat& x) const
    {
        switch (kind) {
            case RingKind::ZZ: return rat_den(x) == 1;
            case RingKind::ZZ_LOCAL: return rat_den(x) % p != 0;
            case RingKind::QQ: return true;
            case RingKind::GF: {
                Rat r = normalize(x);
                return r == x;
            }
        }
        return false;
    }

    bool is_unit(const Rat& x) const
    {
        if (x == 0)
            return false;
        switch (kind) {
            case RingKind::ZZ: return x == 1 || x == -1;
            case RingKind::ZZ_LOCAL: return p_valuation(p, x) == 0;
            case RingKind::QQ:
            case RingKind::GF: return true;
        }
        return false;
    }

    // Canonical associate: the distinguished generator of the ideal (x).
    //   ZZ: |x|;  ZZ_LOCAL: p^v(x);  fields: 1.
    Rat canonical_associate(const Rat& x) const
    {
        if (x == 0)
            return Rat(0);
        switch (kind) {
            case RingKind::ZZ: return x < 0 ? Rat(-x) : x;
            case RingKind::ZZ_LOCAL: {
                long v = p_valuation(p, x);
                return Rat(boost::multiprecision::pow(p, static_cast<unsigned>(v)));
            }
            case RingKind::QQ:
            case RingKind::GF: return Rat(1);
        }
        return x;
    }

    // Exact division inside the ring: a/b if the quotient lies in the ring.
    std::optional<Rat> divide_exact(const Rat& a, const Rat& b) const
    {
        if (b == 0)
            return a == 0 ? std::optional<Rat>(Rat(0)) : std::nullopt;
        Rat q = div(a, b);
        if (!contains(q))
            return std::nullopt;
        return q;
    }

    // Division with canonical remainder: a = q*d + r with r the canonical
    // representative of a modulo (d).  For fields r = 0.  For ZZ, r in
    // [0, |d|).  For ZZ_LOCAL with d ~ p^k, r is the integer in [0, p^k)
    // congruent to a.
    void div_canonical(const Rat& a, const Rat& d, Rat& q, Rat& r) const
    {
        if (d == 0)
            throw std::domain_error("div_canonical: zero divisor");
        switch (kind) {
            case RingKind::QQ:
            case RingKind::GF:
                q = div(a, d);
                r = Rat(0);
                return;
            case RingKind::ZZ: {
                Int ai = rat_num(a), di = rat_num(d);
                Int ri = ai % di;
                if (ri < 0)
                    ri += boost::multiprecision::abs(di);
                r = Rat(ri);
                q = Rat(Int((ai - ri) / di));
                return;
            }
            case RingKind::ZZ_LOCAL: {
                long k = p_valuation(p, d);
                Int pk = boost::multiprecision::pow(p, static_cast<unsigned>(k));
                // residue of a modulo p^k: num * den^{-1} mod p^k
                Int n = rat_num(a) % pk, den = rat_den(a) % pk;
                Int inv = mod_inverse(den, pk);
                Int ri = (n * inv) % pk;
                if (ri < 0)
                    ri += pk;
                r = Rat(ri);
                q = (a - r) / d;
                if (!contains(q))
                    throw std::logic_error("div_canonical: quotient left the ring");
                return;
            }
        }
    }

    // Extended gcd: returns (g, s, t) with s*a + t*b = g, g the canonical
    // associate of gcd(a, b).
    void xgcd(const Rat& a, const Rat& b, Rat& g, Rat& s, Rat& t) const
    {
        if (a == 0 && b == 0) {
            g = 0; s = 0; t = 0;
            return;
        }
        switch (kind) {
            case RingKind::QQ:
            case RingKind::GF:
                if (a != 0) {
                    g = 1; s = div(Rat(1), a); t = 0;
                } else {
                    g = 1; s = 0; t = div(Rat(1), b);
                }
                return;
            case RingKind::ZZ: {
                Int x = rat_num(a), y = rat_num(b);
                Int g0, s0, t0;
                int_xgcd(x, y, g0, s0, t0);
                g = Rat(g0); s = Rat(s0); t = Rat(t0);
                return;
            }
            case RingKind::ZZ_LOCAL: {
                // gcd is the smaller p-power; the matching cofactor is a unit.
                long va = a == 0 ? -1 : p_valuation(p, a);
                long vb = b == 0 ? -1 : p_valuation(p, b);
                if (b == 0 || (a != 0 && va <= vb)) {
                    g = canonical_associate(a);
                    s = div(g, a);
                    t = 0;
                } else {
                    g = canonical_associate(b);
                    s = 0;
                    t = div(g, b);
                }
                return;
            }
        }
    }

    std::string to_string() const
    {
        switch (kind) {
            case RingKind::ZZ: return "ZZ";
            case RingKind::ZZ_LOCAL: return "ZZ_(" + p.str() + ")";
            case RingKind::QQ: return "QQ";
            case RingKind::GF: return "GF(" + p.str() + ")";
        }
        return "?";
    }

    static Int mod_inverse(const Int& a, const Int& m)
    {
        Int g, s, t;
        int_xgcd(a % m, m, g, s, t);
        if (g != 1)
            throw std::domain_error("mod_inverse: not invertible");
        Int r = s % m;
        if (r < 0)
            r += m;
        return r;
    }

    static void int_xgcd(Int a, Int b, Int& g, Int& s, Int& t)
    {
        Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (b != 0) {
            Int q = a / b;
            Int r = a - q * b;
            a = b; b = r;
            Int s2 = s0 - q * s1; s0 = s1; s1 = s2;
            Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
        }
        if (a < 0) {
            a = -a; s0 = -s0; t0 = -t0;
        }
        g = a; s = s0; t = t0;
    }

private:
    static Ring checked(RingKind k, const Int& p)
    {
        if (p < 2)
            throw std::invalid_argument("prime must be >= 2");
        for (Int d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw std::invalid_argument("p is not prime: " + p.str());
        return Ring{k, p};
    }
};

// Rational <-> string, "a/b" with the denominator omitted when 1.
inline std::string rat_to_string(const Rat& x)
{
    if (rat_den(x) == 1)
        return rat_num(x).str();
    return rat_num(x).str() + "/" + rat_den(x).str();
}

inline Rat rat_from_string(const std::string& s)
{
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(Int(s));
        Int n(s.substr(0, slash));
        Int d(s.substr(slash + 1));
        if (d == 0)
            throw std::invalid_argument("zero denominator");
        return Rat(n) / Rat(d);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: \"" + s + "\"");
    }
}

}  // namespace ffgs
