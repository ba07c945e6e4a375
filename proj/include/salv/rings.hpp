// Coefficient rings as value-semantic ring objects.
//
// Every ring type R exposes:
//   using Elem = ...;                       element value type
//   static constexpr bool is_field, is_pid;
//   zero(), one(), from_int(long), from_integer(Integer)
//   add, sub, mul, neg, is_zero, eq, to_string
// Fields additionally provide inv/div. Euclidean rings (every PID here)
// provide edeg (degree/size ranking for pivot choice), divmod, normal_unit
// (a unit u such that u*a is the canonical associate), gcd.
//
// Elements do not carry a pointer to their ring; all arithmetic goes
// through the ring object, so runtime-parametrized rings (F_p, Q[q]/phi_h)
// cost nothing per element.

#pragma once

#include "numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace salv {

struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct unsupported_ring_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- Z

struct IntegerRing {
    using Elem = Integer;
    static constexpr bool is_field = false;
    static constexpr bool is_pid = true;

    Elem zero() const { return Integer(0); }
    Elem one() const { return Integer(1); }
    Elem from_int(long v) const { return Integer(v); }
    Elem from_integer(const Integer& v) const { return v; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return a == 1 || a == -1; }

    // Euclidean structure: |a|, centered remainder keeps pivots small.
    long edeg(const Elem& a) const {
        return a == 0 ? -1 : static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
    }
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const {
        Integer q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Integer ab = abs(b);
        if (r * 2 > ab) { r -= ab; q += (b > 0 ? 1 : -1); }
        return {q, r};
    }
    Elem normal_unit(const Elem& a) const { return a < 0 ? Integer(-1) : Integer(1); }
    bool divides(const Elem& a, const Elem& b) const {
        if (a == 0) return b == 0;
        return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
    }
    Elem exact_div(const Elem& a, const Elem& b) const {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    Elem gcd(const Elem& a, const Elem& b) const { return int_gcd(a, b); }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    std::string name() const { return "Z"; }
};

// ---------------------------------------------------------------- Q

struct RationalField {
    using Elem = Rational;
    static constexpr bool is_field = true;
    static constexpr bool is_pid = true;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_int(long v) const { return Rational(v); }
    Elem from_integer(const Integer& v) const { return Rational(v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_unit(const Elem& a) const { return a != 0; }

    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("division by zero in Q");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    long edeg(const Elem& a) const { return a == 0 ? -1 : 0; }
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const {
        return {a / inv_guard(b), Rational(0)};
    }
    Elem normal_unit(const Elem& a) const { return a == 0 ? Rational(1) : 1 / a; }
    bool divides(const Elem& a, const Elem& b) const { return a != 0 || b == 0; }
    Elem exact_div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }
    Elem gcd(const Elem& a, const Elem& b) const {
        return (a == 0 && b == 0) ? Rational(0) : Rational(1);
    }

    std::string to_string(const Elem& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }

  private:
    static const Elem& inv_guard(const Elem& b) {
        if (b == 0) throw std::domain_error("division by zero in Q");
        return b;
    }
};

// ---------------------------------------------------------------- F_p

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Prime field with runtime modulus p < 2^31. Elements are canonical
// representatives in [0, p).
struct PrimeField {
    using Elem = std::uint64_t;
    static constexpr bool is_field = true;
    static constexpr bool is_pid = true;

    explicit PrimeField(std::uint64_t p_) : p(p_) {
        if (p >= (1ull << 31) || !is_prime_u64(p))
            throw validation_error("PrimeField: modulus " + std::to_string(p_) + " is not a prime < 2^31");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        long m = v % static_cast<long>(p);
        if (m < 0) m += static_cast<long>(p);
        return static_cast<Elem>(m);
    }
    Elem from_integer(const Integer& v) const {
        Integer m = v % static_cast<long>(p);
        if (m < 0) m += static_cast<long>(p);
        return m.get_ui();
    }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p ? s - p : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    bool is_unit(Elem a) const { return a != 0; }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero in F_p");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p),
                     nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    long edeg(Elem a) const { return a == 0 ? -1 : 0; }
    std::pair<Elem, Elem> divmod(Elem a, Elem b) const { return {div(a, b), 0}; }
    Elem normal_unit(Elem a) const { return a == 0 ? one() : inv(a); }
    bool divides(Elem a, Elem b) const { return a != 0 || b == 0; }
    Elem exact_div(Elem a, Elem b) const { return div(a, b); }
    Elem gcd(Elem a, Elem b) const { return (a == 0 && b == 0) ? 0 : one(); }

    std::string to_string(Elem a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p); }

    std::uint64_t p;
};

}  // namespace salv
