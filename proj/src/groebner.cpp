#include "mfk/groebner.hpp"

namespace mfk {

namespace {

RingMatrix as_row(const Ctx& ctx, const std::vector<Poly>& polys) {
    RingMatrix m(ctx, 1, polys.size());
    for (std::size_t j = 0; j < polys.size(); ++j) m.set(0, j, polys[j]);
    return m;
}

} // namespace

DivisionResult divide(const Poly& f, const std::vector<Poly>& divisors) {
    const Ctx& ctx = f.context();
    for (const auto& d : divisors) {
        if (!d.context()) throw ValidationError("divisor without context");
        require_compatible(*ctx, *d.context(), "divide");
        if (d.is_zero()) throw ValidationError("zero divisor");
    }
    RingMatrix v(ctx, 1, 1);
    v.set(0, 0, f);
    NormalFormResult nf = normal_form_columns(v, as_row(ctx, divisors));
    DivisionResult out;
    out.remainder = nf.remainder.at(0, 0);
    out.cofactors.reserve(divisors.size());
    for (std::size_t k = 0; k < divisors.size(); ++k) out.cofactors.push_back(nf.cofactors.at(k, 0));
    return out;
}

GroebnerBasis groebner_basis(const std::vector<Poly>& generators) {
    GroebnerBasis out;
    if (generators.empty()) return out;
    const Ctx& ctx = generators[0].context();
    ModuleGB gb = module_groebner(as_row(ctx, generators), Over::S);
    for (std::size_t k = 0; k < gb.gens.cols(); ++k) {
        out.polys.push_back(gb.gens.at(0, k));
        std::vector<Poly> comb;
        comb.reserve(generators.size());
        for (std::size_t i = 0; i < generators.size(); ++i) comb.push_back(gb.reps.at(i, k));
        out.combinations.push_back(std::move(comb));
    }
    return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& gb) {
    return divide(f, gb.polys).remainder;
}

bool ideal_membership(const Poly& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

} // namespace mfk
