// Laurent polynomial rings K[q^±] and K[q1^±, q2^±] over a field K.
//
// One variable over a field is a PID (units are c*q^k); the divmod needed by
// Smith reduction is ordinary polynomial division after stripping the q-power
// offset. The two-variable ring supports only basic arithmetic: it is not a
// PID and is used for complex construction and rendering.

#pragma once

#include "numeric.hpp"
#include "rings.hpp"

#include <map>
#include <utility>
#include <vector>

namespace salv {

// value = q^off * sum coef[i] q^i; canonical: coef empty (zero) or
// coef.front() != 0 and coef.back() != 0.
template <typename C>
struct LaurentPoly {
    int off = 0;
    std::vector<C> coef;

    bool operator==(const LaurentPoly&) const = default;
};

template <typename K>
struct LaurentRing {
    using Coef = typename K::Elem;
    using Elem = LaurentPoly<Coef>;
    static constexpr bool is_field = false;
    static constexpr bool is_pid = true;  // one variable over a field

    K base;
    std::string var = "q";

    explicit LaurentRing(K k = K(), std::string v = "q") : base(std::move(k)), var(std::move(v)) {}

    Elem normalized(int off, std::vector<Coef> c) const {
        std::size_t lo = 0;
        while (lo < c.size() && base.is_zero(c[lo])) ++lo;
        std::size_t hi = c.size();
        while (hi > lo && base.is_zero(c[hi - 1])) --hi;
        if (lo == hi) return Elem{};
        Elem e;
        e.off = off + static_cast<int>(lo);
        e.coef.assign(c.begin() + lo, c.begin() + hi);
        return e;
    }

    Elem zero() const { return Elem{}; }
    Elem one() const { return Elem{0, {base.one()}}; }
    Elem from_int(long v) const { return normalized(0, {base.from_int(v)}); }
    Elem from_integer(const Integer& v) const { return normalized(0, {base.from_integer(v)}); }
    Elem from_coef(const Coef& c) const { return normalized(0, {c}); }
    // the variable itself
    Elem gen(int power = 1) const { return Elem{power, {base.one()}}; }
    Elem monomial(const Coef& c, int power) const { return normalized(power, {c}); }

    bool is_zero(const Elem& a) const { return a.coef.empty(); }
    bool eq(const Elem& a, const Elem& b) const {
        if (a.coef.size() != b.coef.size()) return false;
        if (a.coef.empty()) return true;
        if (a.off != b.off) return false;
        for (std::size_t i = 0; i < a.coef.size(); ++i)
            if (!base.eq(a.coef[i], b.coef[i])) return false;
        return true;
    }

    Elem add(const Elem& a, const Elem& b) const {
        if (a.coef.empty()) return b;
        if (b.coef.empty()) return a;
        int off = std::min(a.off, b.off);
        int hi = std::max(a.off + static_cast<int>(a.coef.size()),
                          b.off + static_cast<int>(b.coef.size()));
        std::vector<Coef> c(static_cast<std::size_t>(hi - off), base.zero());
        for (std::size_t i = 0; i < a.coef.size(); ++i)
            c[i + (a.off - off)] = base.add(c[i + (a.off - off)], a.coef[i]);
        for (std::size_t i = 0; i < b.coef.size(); ++i)
            c[i + (b.off - off)] = base.add(c[i + (b.off - off)], b.coef[i]);
        return normalized(off, std::move(c));
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& c : r.coef) c = base.neg(c);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const {
        if (a.coef.empty() || b.coef.empty()) return Elem{};
        std::vector<Coef> c(a.coef.size() + b.coef.size() - 1, base.zero());
        for (std::size_t i = 0; i < a.coef.size(); ++i) {
            if (base.is_zero(a.coef[i])) continue;
            for (std::size_t j = 0; j < b.coef.size(); ++j)
                c[i + j] = base.add(c[i + j], base.mul(a.coef[i], b.coef[j]));
        }
        return normalized(a.off + b.off, std::move(c));
    }

    bool is_unit(const Elem& a) const { return a.coef.size() == 1; }

    // degree span; the Euclidean size for Smith reduction
    long edeg(const Elem& a) const { return static_cast<long>(a.coef.size()) - 1; }

    // polynomial division on the offset-stripped parts:
    // a = q*b + r with span(r) < span(b); offsets handled as units.
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const {
        if (b.coef.empty()) throw std::domain_error("Laurent divmod by zero");
        if (a.coef.empty()) return {Elem{}, Elem{}};
        if (a.coef.size() < b.coef.size()) return {Elem{}, a};
        std::vector<Coef> rem = a.coef;
        std::vector<Coef> quo(a.coef.size() - b.coef.size() + 1, base.zero());
        Coef lead_inv = base.inv(b.coef.back());
        for (std::size_t i = quo.size(); i-- > 0;) {
            Coef c = base.mul(rem[i + b.coef.size() - 1], lead_inv);
            if (base.is_zero(c)) continue;
            quo[i] = c;
            for (std::size_t j = 0; j < b.coef.size(); ++j)
                rem[i + j] = base.sub(rem[i + j], base.mul(c, b.coef[j]));
        }
        return {normalized(a.off - b.off, std::move(quo)), normalized(a.off, std::move(rem))};
    }

    // unit u with u*a monic with lowest exponent 0
    Elem normal_unit(const Elem& a) const {
        if (a.coef.empty()) return one();
        return Elem{-a.off, {base.inv(a.coef.back())}};
    }
    // unit u with u*a having constant term 1 (quasi-Poincare normalization)
    Elem comonic_unit(const Elem& a) const {
        if (a.coef.empty()) return one();
        return Elem{-a.off, {base.inv(a.coef.front())}};
    }

    bool divides(const Elem& a, const Elem& b) const {
        if (a.coef.empty()) return b.coef.empty();
        return is_zero(divmod(b, a).second);
    }
    Elem exact_div(const Elem& a, const Elem& b) const {
        auto [q, r] = divmod(a, b);
        if (!is_zero(r)) throw std::domain_error("Laurent exact_div: nonzero remainder");
        return q;
    }
    Elem gcd(const Elem& a, const Elem& b) const {
        Elem x = a, y = b;
        while (!is_zero(y)) {
            Elem r = divmod(x, y).second;
            x = y;
            y = r;
        }
        return mul(normal_unit(x), x);  // monic representative
    }
    Elem lcm(const Elem& a, const Elem& b) const {
        if (is_zero(a) || is_zero(b)) return Elem{};
        Elem g = gcd(a, b);
        Elem l = mul(a, exact_div(b, g));
        return mul(normal_unit(l), l);
    }

    Elem from_ipoly(const IntPoly& p) const {
        std::vector<Coef> c;
        c.reserve(p.size());
        for (const Integer& v : p) c.push_back(base.from_integer(v));
        return normalized(0, std::move(c));
    }

    // evaluation of the offset-stripped polynomial part is not meaningful for
    // Laurent elements in general; substitute() maps q -> x in another ring
    // for elements with off >= 0, which covers differential coefficients.
    template <typename R2>
    typename R2::Elem substitute(const R2& target, const Elem& a,
                                 const typename R2::Elem& x) const;

    std::string to_string(const Elem& a) const {
        if (a.coef.empty()) return "0";
        std::string s;
        bool first = true;
        for (std::size_t i = 0; i < a.coef.size(); ++i) {
            if (base.is_zero(a.coef[i])) continue;
            int e = a.off + static_cast<int>(i);
            std::string cs = base.to_string(a.coef[i]);
            bool negc = !cs.empty() && cs[0] == '-';
            if (first) {
                if (negc) { s += "-"; cs = cs.substr(1); }
            } else {
                s += negc ? " - " : " + ";
                if (negc) cs = cs.substr(1);
            }
            if (e == 0) s += cs;
            else {
                if (cs != "1") s += cs + "*";
                s += var;
                if (e != 1) s += "^" + std::to_string(e);
            }
            first = false;
        }
        return s.empty() ? "0" : s;
    }
    std::string name() const { return base.name() + "[" + var + "^+-]"; }
};

// ------------------------------------------------------------ two variables

template <typename C>
struct LaurentPoly2 {
    // exponent pair -> coefficient, zero coefficients never stored
    std::map<std::pair<int, int>, C> terms;
    bool operator==(const LaurentPoly2&) const = default;
};

template <typename K>
struct Laurent2Ring {
    using Coef = typename K::Elem;
    using Elem = LaurentPoly2<Coef>;
    static constexpr bool is_field = false;
    static constexpr bool is_pid = false;

    K base;
    std::string var1 = "q1", var2 = "q2";

    explicit Laurent2Ring(K k = K()) : base(std::move(k)) {}

    Elem zero() const { return Elem{}; }
    Elem one() const { return monomial(base.one(), 0, 0); }
    Elem from_int(long v) const { return monomial(base.from_int(v), 0, 0); }
    Elem from_integer(const Integer& v) const { return monomial(base.from_integer(v), 0, 0); }
    Elem monomial(const Coef& c, int e1, int e2) const {
        Elem e;
        if (!base.is_zero(c)) e.terms[{e1, e2}] = c;
        return e;
    }
    Elem gen(int which) const { return which == 1 ? monomial(base.one(), 1, 0) : monomial(base.one(), 0, 1); }

    bool is_zero(const Elem& a) const { return a.terms.empty(); }
    bool eq(const Elem& a, const Elem& b) const {
        if (a.terms.size() != b.terms.size()) return false;
        auto it = b.terms.begin();
        for (const auto& [e, c] : a.terms) {
            if (it->first != e || !base.eq(it->second, c)) return false;
            ++it;
        }
        return true;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (const auto& [e, c] : b.terms) {
            auto it = r.terms.find(e);
            if (it == r.terms.end()) r.terms[e] = c;
            else {
                it->second = base.add(it->second, c);
                if (base.is_zero(it->second)) r.terms.erase(it);
            }
        }
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& [e, c] : r.terms) c = base.neg(c);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem r;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                std::pair<int, int> e{ea.first + eb.first, ea.second + eb.second};
                Coef prod = base.mul(ca, cb);
                auto it = r.terms.find(e);
                if (it == r.terms.end()) {
                    if (!base.is_zero(prod)) r.terms[e] = prod;
                } else {
                    it->second = base.add(it->second, prod);
                    if (base.is_zero(it->second)) r.terms.erase(it);
                }
            }
        return r;
    }
    bool is_unit(const Elem& a) const { return a.terms.size() == 1; }

    std::string to_string(const Elem& a) const {
        if (a.terms.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : a.terms) {
            std::string cs = base.to_string(c);
            bool negc = !cs.empty() && cs[0] == '-';
            if (first) {
                if (negc) { s += "-"; cs = cs.substr(1); }
            } else {
                s += negc ? " - " : " + ";
                if (negc) cs = cs.substr(1);
            }
            std::string mono;
            if (e.first != 0) {
                mono += var1;
                if (e.first != 1) mono += "^" + std::to_string(e.first);
            }
            if (e.second != 0) {
                if (!mono.empty()) mono += "*";
                mono += var2;
                if (e.second != 1) mono += "^" + std::to_string(e.second);
            }
            if (mono.empty()) s += cs;
            else {
                if (cs != "1") s += cs + "*";
                s += mono;
            }
            first = false;
        }
        return s;
    }
    std::string name() const { return base.name() + "[" + var1 + "^+-," + var2 + "^+-]"; }
};

template <typename K>
template <typename R2>
typename R2::Elem LaurentRing<K>::substitute(const R2& target, const Elem& a,
                                             const typename R2::Elem& x) const {
    if (a.coef.empty()) return target.zero();
    if (a.off < 0) throw std::domain_error("Laurent substitute: negative exponent");
    typename R2::Elem acc = target.zero();
    for (std::size_t i = a.coef.size(); i-- > 0;) {
        // coefficient must be rational/integer-like; route through strings is
        // avoided by requiring Coef = Rational or integral in practice.
        acc = target.add(target.mul(acc, x), coef_to<R2>(target, a.coef[i]));
    }
    for (int k = 0; k < a.off; ++k) acc = target.mul(acc, x);
    return acc;
}

// coefficient embeddings used by substitute(); Rational -> R2 requires R2 to
// divide by the denominator.
template <typename R2>
typename R2::Elem coef_to(const R2& target, const Rational& c) {
    typename R2::Elem num = target.from_integer(c.get_num());
    if (c.get_den() == 1) return num;
    if constexpr (R2::is_field) {
        return target.div(num, target.from_integer(c.get_den()));
    } else {
        throw std::domain_error("cannot embed non-integral rational into non-field ring");
    }
}
template <typename R2>
typename R2::Elem coef_to(const R2& target, std::uint64_t c) {
    return target.from_integer(Integer(static_cast<unsigned long>(c)));
}

}  // namespace salv
