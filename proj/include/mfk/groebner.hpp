#ifndef MFK_GROEBNER_HPP
#define MFK_GROEBNER_HPP

#include <vector>

#include "mfk/modgb.hpp"
#include "mfk/poly.hpp"

namespace mfk {

struct DivisionResult {
    std::vector<Poly> cofactors;
    Poly remainder;
};

// Multivariate division with the divisors tried in the given order:
// f = sum cofactors[i] * divisors[i] + remainder, and no term of the
// remainder is divisible by any divisor's leading term.
DivisionResult divide(const Poly& f, const std::vector<Poly>& divisors);

// Reduced Groebner basis of an ideal, with the combination trace.
struct GroebnerBasis {
    std::vector<Poly> polys; // monic, inter-reduced, ascending leading terms
    bool reduced = true;
    // polys[k] == sum_i combinations[k][i] * generators[i]
    std::vector<std::vector<Poly>> combinations;
};

GroebnerBasis groebner_basis(const std::vector<Poly>& generators);

Poly normal_form(const Poly& f, const GroebnerBasis& gb);

bool ideal_membership(const Poly& f, const GroebnerBasis& gb);

} // namespace mfk

#endif
