// Cyclotomic polynomials, q-analogs and the quotient fields Q[q]/(phi_h).

#pragma once

#include "laurent.hpp"
#include "numeric.hpp"
#include "rings.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace salv {

// phi_h as an integer polynomial, phi_n = (q^n - 1) / prod_{d|n, d<n} phi_d.
inline IntPoly cyclotomic(unsigned h) {
    if (h == 0) throw validation_error("cyclotomic: h must be >= 1");
    static std::map<unsigned, IntPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(h);
    if (it != cache.end()) return it->second;
    IntPoly num(h + 1, Integer(0));
    num[0] = -1;
    num[h] = 1;
    for (unsigned d = 1; d < h; ++d) {
        if (h % d != 0) continue;
        auto dit = cache.find(d);
        IntPoly pd;
        if (dit != cache.end()) pd = dit->second;
        else {
            // unlocked recursion would deadlock; compute inline
            IntPoly nd(d + 1, Integer(0));
            nd[0] = -1;
            nd[d] = 1;
            for (unsigned e = 1; e < d; ++e)
                if (d % e == 0) nd = ipoly_div_exact(nd, cache.at(e));
            cache[d] = nd;
            pd = nd;
        }
        num = ipoly_div_exact(num, pd);
    }
    cache[h] = num;
    return num;
}

// [n] = 1 + q + ... + q^{n-1}
inline IntPoly q_int(unsigned n) { return ipoly_q_int(n); }

// [n]! = [1][2]...[n]
inline IntPoly q_factorial(unsigned n) {
    IntPoly p{Integer(1)};
    for (unsigned k = 1; k <= n; ++k) p = ipoly_mul(p, q_int(k));
    return p;
}

// Gaussian binomial [n choose k] = [n]!/([k]![n-k]!)
inline IntPoly q_binomial(unsigned n, unsigned k) {
    if (k > n) throw validation_error("q_binomial: k out of range");
    IntPoly num{Integer(1)};
    for (unsigned j = 0; j < k; ++j) num = ipoly_mul(num, q_int(n - j));
    return ipoly_div_exact(num, q_factorial(k));
}

// ------------------------------------------------- Q[q]/(phi_h), a field

// Elements are coefficient vectors of length deg(phi_h) (fixed size, zero
// padded). phi_h is irreducible over Q, so the quotient is a field.
struct CyclotomicField {
    using Elem = std::vector<Rational>;
    static constexpr bool is_field = true;
    static constexpr bool is_pid = true;

    unsigned h;
    IntPoly phi;
    std::size_t deg;

    explicit CyclotomicField(unsigned h_) : h(h_), phi(cyclotomic(h_)), deg(phi.size() - 1) {
        if (deg == 0) throw validation_error("CyclotomicField: trivial quotient");
    }

    Elem zero() const { return Elem(deg, Rational(0)); }
    Elem one() const {
        Elem e = zero();
        e[0] = 1;
        return e;
    }
    Elem from_int(long v) const {
        Elem e = zero();
        e[0] = v;
        return e;
    }
    Elem from_integer(const Integer& v) const {
        Elem e = zero();
        e[0] = Rational(v);
        return e;
    }
    // the class of q
    Elem gen() const {
        Elem e = zero();
        if (deg == 1) {
            // q = root of linear phi: q = -phi[0]/phi[1]
            e[0] = Rational(-phi[0]) / Rational(phi[1]);
        } else {
            e[1] = 1;
        }
        return e;
    }

    bool is_zero(const Elem& a) const {
        for (const auto& c : a)
            if (c != 0) return false;
        return true;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return !is_zero(a); }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r(deg);
        for (std::size_t i = 0; i < deg; ++i) r[i] = a[i] + b[i];
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r(deg);
        for (std::size_t i = 0; i < deg; ++i) r[i] = a[i] - b[i];
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(deg);
        for (std::size_t i = 0; i < deg; ++i) r[i] = -a[i];
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<Rational> prod(2 * deg - 1, Rational(0));
        for (std::size_t i = 0; i < deg; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < deg; ++j)
                if (b[j] != 0) prod[i + j] += a[i] * b[j];
        }
        // reduce mod phi (monic)
        for (std::size_t i = prod.size(); i-- > deg;) {
            if (prod[i] == 0) continue;
            Rational c = prod[i];
            prod[i] = 0;
            for (std::size_t j = 0; j < deg; ++j) prod[i - deg + j] -= c * Rational(phi[j]);
        }
        prod.resize(deg);
        return prod;
    }

    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw std::domain_error("division by zero in Q[q]/phi");
        // extended Euclid over Q[x] between a (lifted) and phi
        using Poly = std::vector<Rational>;
        auto trim = [](Poly& p) {
            while (!p.empty() && p.back() == 0) p.pop_back();
        };
        auto pdivmod = [&trim](Poly a_, const Poly& b_) {
            Poly q(a_.size() >= b_.size() ? a_.size() - b_.size() + 1 : 0, Rational(0));
            for (std::size_t i = q.size(); i-- > 0;) {
                Rational c = a_[i + b_.size() - 1] / b_.back();
                q[i] = c;
                for (std::size_t j = 0; j < b_.size(); ++j) a_[i + j] -= c * b_[j];
            }
            trim(a_);
            return std::pair<Poly, Poly>{q, a_};
        };
        auto psub = [&trim](Poly x, const Poly& y) {
            if (y.size() > x.size()) x.resize(y.size(), Rational(0));
            for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
            trim(x);
            return x;
        };
        auto pmulq = [&trim](const Poly& x, const Poly& y) {
            if (x.empty() || y.empty()) return Poly{};
            Poly r(x.size() + y.size() - 1, Rational(0));
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
            trim(r);
            return r;
        };
        Poly r0;
        for (const Integer& c : phi) r0.push_back(Rational(c));
        Poly r1(a.begin(), a.end());
        trim(r1);
        Poly s0{}, s1{Rational(1)};
        while (!r1.empty()) {
            auto [q, r2] = pdivmod(r0, r1);
            Poly s2 = psub(s0, pmulq(q, s1));
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
        }
        // r0 = gcd = nonzero constant (phi irreducible)
        if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: gcd not constant");
        Elem res = zero();
        for (std::size_t i = 0; i < s0.size() && i < deg; ++i) res[i] = s0[i] / r0[0];
        return res;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    long edeg(const Elem& a) const { return is_zero(a) ? -1 : 0; }
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const { return {div(a, b), zero()}; }
    Elem normal_unit(const Elem& a) const { return is_zero(a) ? one() : inv(a); }
    bool divides(const Elem& a, const Elem& b) const { return !is_zero(a) || is_zero(b); }
    Elem exact_div(const Elem& a, const Elem& b) const { return div(a, b); }
    Elem gcd(const Elem& a, const Elem& b) const {
        return (is_zero(a) && is_zero(b)) ? zero() : one();
    }

    std::string to_string(const Elem& a) const {
        std::string s;
        bool first = true;
        for (std::size_t i = 0; i < deg; ++i) {
            if (a[i] == 0) continue;
            std::string cs = a[i].get_str();
            bool negc = cs[0] == '-';
            if (first) {
                if (negc) { s += "-"; cs = cs.substr(1); }
            } else {
                s += negc ? " - " : " + ";
                if (negc) cs = cs.substr(1);
            }
            if (i == 0) s += cs;
            else {
                if (cs != "1") s += cs + "*";
                s += "q";
                if (i > 1) s += "^" + std::to_string(i);
            }
            first = false;
        }
        return first ? "0" : s;
    }
    std::string name() const { return "Q[q]/(Phi_" + std::to_string(h) + ")"; }
};

// --------------------------------------- cyclotomic factorization of divisors

struct CyclotomicFactorization {
    std::vector<std::pair<unsigned, unsigned>> factors;  // (h, multiplicity)
    bool fully_factored = true;
    std::string remainder;  // leftover factor, rendered; empty if none

    std::string to_string() const {
        if (factors.empty() && remainder.empty()) return "1";
        std::string s;
        for (const auto& [h, m] : factors) {
            if (!s.empty()) s += " * ";
            s += "Phi_" + std::to_string(h);
            if (m > 1) s += "^" + std::to_string(m);
        }
        if (!remainder.empty()) {
            if (!s.empty()) s += " * ";
            s += "(" + remainder + ")";
        }
        return s;
    }
};

// Trial division by phi_d for d <= bound. Works on normalized divisors living
// in Q[q^±]; the remainder (if any) is reported unfactored.
template <typename K>
CyclotomicFactorization cyclotomic_factor(const LaurentRing<K>& ring,
                                          typename LaurentRing<K>::Elem f,
                                          unsigned bound = 200) {
    CyclotomicFactorization out;
    f = ring.mul(ring.normal_unit(f), f);
    for (unsigned d = 1; d <= bound && ring.edeg(f) > 0; ++d) {
        IntPoly phi = cyclotomic(d);
        if (static_cast<long>(phi.size()) - 1 > ring.edeg(f)) continue;
        auto phie = ring.from_ipoly(phi);
        unsigned mult = 0;
        while (ring.divides(phie, f)) {
            f = ring.exact_div(f, phie);
            ++mult;
        }
        if (mult > 0) out.factors.push_back({d, mult});
    }
    if (ring.edeg(f) > 0) {
        out.fully_factored = false;
        out.remainder = ring.to_string(ring.mul(ring.normal_unit(f), f));
    }
    return out;
}

}  // namespace salv
