#ifndef MFK_POLY_HPP
#define MFK_POLY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mfk/ring.hpp"

namespace mfk {

struct Term {
    Monomial mono;
    std::int64_t coeff = 0; // canonical representative in [0, p)
};

// Exact sparse multivariate polynomial over F_p.  Terms are kept in strictly
// descending monomial order with nonzero coefficients; this canonical form
// makes equality a plain term-list comparison and printing deterministic.
class Poly {
public:
    Poly() = default;

    static Poly zero(const Ctx& ctx);
    static Poly constant(const Ctx& ctx, std::int64_t c);
    static Poly variable(const Ctx& ctx, std::size_t index);
    static Poly monomial(const Ctx& ctx, Monomial m, std::int64_t c = 1);
    static Poly from_terms(const Ctx& ctx, std::vector<Term> terms); // any order, merged

    // Grammar: terms joined by + / -, term = optional integer coefficient and
    // *-separated powers `x^k`; whitespace ignored.  Example: x^3 - 2*x*y + 7
    static Poly parse(const Ctx& ctx, const std::string& text);

    const Ctx& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::int64_t constant_value() const; // coefficient of the 1-monomial

    const Term& leading_term() const; // throws on zero
    std::int64_t leading_coeff() const;
    const Monomial& leading_monomial() const;
    std::uint64_t total_degree() const; // 0 for the zero polynomial

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scale(std::int64_t c) const;
    Poly monic() const; // divide by leading coefficient
    Poly mul_term(const Monomial& m, std::int64_t c) const;
    Poly pow(std::uint32_t k) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Total order extending the monomial order; used for deterministic sorts.
    int compare(const Poly& o) const;

    std::string str() const;

private:
    Ctx ctx_;
    std::vector<Term> terms_;

    void normalize_sorted(); // merge duplicates, drop zeros; input sorted desc
};

inline Poly operator*(std::int64_t c, const Poly& f) { return f.scale(c); }

} // namespace mfk

#endif
