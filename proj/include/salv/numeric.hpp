// Exact integer/rational scalars and dense integer polynomials.
//
// Big-number arithmetic is delegated to GMP; everything built on top of it
// (polynomials, q-analogs, ring wrappers) is defined in this library.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace salv {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer int_binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Dense polynomial over Z, coefficients in ascending degree order.
// Canonical form: empty vector is zero, otherwise the last coefficient is nonzero.
using IntPoly = std::vector<Integer>;

inline void ipoly_trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly ipoly_add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ipoly_trim(r);
    return r;
}

inline IntPoly ipoly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ipoly_trim(r);
    return r;
}

// Exact division; throws if the division leaves a remainder.
inline IntPoly ipoly_div_exact(IntPoly a, const IntPoly& b) {
    if (b.empty()) throw std::invalid_argument("ipoly_div_exact: division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::invalid_argument("ipoly_div_exact: non-exact division");
    IntPoly q(a.size() - b.size() + 1, Integer(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        Integer c = a[i + b.size() - 1];
        if (c == 0) continue;
        if (!mpz_divisible_p(c.get_mpz_t(), b.back().get_mpz_t()))
            throw std::invalid_argument("ipoly_div_exact: non-exact division");
        c /= b.back();
        q[i] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    for (const Integer& c : a)
        if (c != 0) throw std::invalid_argument("ipoly_div_exact: nonzero remainder");
    return q;
}

// [k] = 1 + q + ... + q^{k-1}
inline IntPoly ipoly_q_int(unsigned k) { return IntPoly(k, Integer(1)); }

// Horner evaluation in any ring through the ring object.
template <typename R>
typename R::Elem ipoly_eval(const R& ring, const IntPoly& p, const typename R::Elem& x) {
    typename R::Elem acc = ring.zero();
    for (std::size_t i = p.size(); i-- > 0;)
        acc = ring.add(ring.mul(acc, x), ring.from_integer(p[i]));
    return acc;
}

inline std::string ipoly_to_string(const IntPoly& p, const std::string& var = "q") {
    if (p.empty()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        Integer c = p[i];
        if (first) {
            if (c < 0) { s += "-"; c = -c; }
        } else {
            s += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (i == 0) s += c.get_str();
        else {
            if (c != 1) s += c.get_str() + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
        first = false;
    }
    return s.empty() ? "0" : s;
}

}  // namespace salv
