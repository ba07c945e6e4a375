// Canonical text grammar for ring elements, shared by rendering and the CLI.
//
//   expr  := ['-'] term (('+'|'-') term)*
//   term  := coef ['*' mono] | mono
//   mono  := var ['^' int] ['*' mono]
//   coef  := int ['/' int]
//   var   := 'q' | 'q1' | 'q2'
//
// to_string on each ring emits exactly this grammar; parse_element accepts it.

#pragma once

#include "cyclotomic.hpp"
#include "laurent.hpp"
#include "rings.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace salv {

namespace detail {

struct PolyTerm {
    Rational coef{1};
    int e1 = 0;  // exponent of q / q1
    int e2 = 0;  // exponent of q2
};

class TermParser {
  public:
    explicit TermParser(const std::string& s) : s_(s) {}

    std::vector<PolyTerm> parse() {
        std::vector<PolyTerm> terms;
        skip_ws();
        bool neg = eat('-');
        if (at_end()) throw parse_error("empty polynomial");
        terms.push_back(parse_term(neg));
        skip_ws();
        while (!at_end()) {
            bool minus;
            if (eat('+')) minus = false;
            else if (eat('-')) minus = true;
            else throw parse_error("expected '+' or '-' at \"" + rest() + "\"");
            terms.push_back(parse_term(minus));
            skip_ws();
        }
        return terms;
    }

  private:
    PolyTerm parse_term(bool neg) {
        skip_ws();
        PolyTerm t;
        bool have_coef = false;
        if (!at_end() && (std::isdigit(static_cast<unsigned char>(cur())))) {
            t.coef = parse_rational();
            have_coef = true;
        }
        skip_ws();
        bool expect_var = false;
        if (have_coef) {
            if (eat('*')) expect_var = true;
        } else {
            expect_var = true;
        }
        if (expect_var) {
            parse_monomial(t);
        }
        if (neg) t.coef = -t.coef;
        return t;
    }

    void parse_monomial(PolyTerm& t) {
        while (true) {
            skip_ws();
            if (at_end() || cur() != 'q') throw parse_error("expected variable at \"" + rest() + "\"");
            ++pos_;
            int which = 1;
            if (!at_end() && cur() == '1') { which = 1; ++pos_; }
            else if (!at_end() && cur() == '2') { which = 2; ++pos_; }
            int e = 1;
            skip_ws();
            if (eat('^')) {
                skip_ws();
                e = parse_int();
            }
            if (which == 1) t.e1 += e;
            else t.e2 += e;
            skip_ws();
            std::size_t save = pos_;
            if (eat('*')) {
                skip_ws();
                if (!at_end() && cur() == 'q') continue;
                pos_ = save;  // the '*' belongs elsewhere; not in this grammar
                throw parse_error("expected variable after '*'");
            }
            break;
        }
    }

    Rational parse_rational() {
        Integer num = parse_uint_big();
        if (eat('/')) {
            Integer den = parse_uint_big();
            if (den == 0) throw parse_error("zero denominator");
            return Rational(num) / Rational(den);
        }
        return Rational(num);
    }
    Integer parse_uint_big() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(cur()))) ++pos_;
        if (start == pos_) throw parse_error("expected number at \"" + rest() + "\"");
        return Integer(s_.substr(start, pos_ - start));
    }
    int parse_int() {
        bool neg = eat('-');
        Integer v = parse_uint_big();
        if (v > 1000000) throw parse_error("exponent too large");
        long x = v.get_si();
        return static_cast<int>(neg ? -x : x);
    }

    char cur() const { return s_[pos_]; }
    bool at_end() const { return pos_ >= s_.size(); }
    bool eat(char c) {
        if (!at_end() && cur() == c) { ++pos_; return true; }
        return false;
    }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(cur()))) ++pos_;
    }
    std::string rest() const { return s_.substr(pos_); }

    const std::string& s_;
    std::size_t pos_ = 0;
};

inline std::vector<PolyTerm> parse_terms(const std::string& s) { return TermParser(s).parse(); }

}  // namespace detail

inline Integer parse_element(const IntegerRing&, const std::string& s) {
    auto terms = detail::parse_terms(s);
    Rational acc(0);
    for (const auto& t : terms) {
        if (t.e1 || t.e2) throw parse_error("unexpected variable in integer: " + s);
        acc += t.coef;
    }
    if (acc.get_den() != 1) throw parse_error("not an integer: " + s);
    return acc.get_num();
}

inline Rational parse_element(const RationalField&, const std::string& s) {
    auto terms = detail::parse_terms(s);
    Rational acc(0);
    for (const auto& t : terms) {
        if (t.e1 || t.e2) throw parse_error("unexpected variable in rational: " + s);
        acc += t.coef;
    }
    return acc;
}

inline PrimeField::Elem parse_element(const PrimeField& ring, const std::string& s) {
    auto terms = detail::parse_terms(s);
    PrimeField::Elem acc = 0;
    for (const auto& t : terms) {
        if (t.e1 || t.e2) throw parse_error("unexpected variable in F_p element: " + s);
        auto num = ring.from_integer(t.coef.get_num());
        auto den = ring.from_integer(t.coef.get_den());
        acc = ring.add(acc, ring.div(num, den));
    }
    return acc;
}

template <typename K>
typename LaurentRing<K>::Elem parse_element(const LaurentRing<K>& ring, const std::string& s) {
    auto terms = detail::parse_terms(s);
    auto acc = ring.zero();
    for (const auto& t : terms) {
        if (t.e2) throw parse_error("unexpected variable q2 in one-variable polynomial: " + s);
        acc = ring.add(acc, ring.monomial(coef_to(ring.base, t.coef), t.e1));
    }
    return acc;
}

template <typename K>
typename Laurent2Ring<K>::Elem parse_element(const Laurent2Ring<K>& ring, const std::string& s) {
    auto terms = detail::parse_terms(s);
    auto acc = ring.zero();
    for (const auto& t : terms)
        acc = ring.add(acc, ring.monomial(coef_to(ring.base, t.coef), t.e1, t.e2));
    return acc;
}

inline CyclotomicField::Elem parse_element(const CyclotomicField& ring, const std::string& s) {
    auto terms = detail::parse_terms(s);
    auto acc = ring.zero();
    auto q = ring.gen();
    for (const auto& t : terms) {
        if (t.e2) throw parse_error("unexpected variable q2 in cyclotomic element: " + s);
        if (t.e1 < 0) throw parse_error("negative exponent in cyclotomic element: " + s);
        auto term = ring.one();
        term[0] = t.coef;
        for (int k = 0; k < t.e1; ++k) term = ring.mul(term, q);
        acc = ring.add(acc, term);
    }
    return acc;
}

}  // namespace salv
