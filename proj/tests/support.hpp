#ifndef MFK_TESTS_SUPPORT_HPP
#define MFK_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mfk/matrix.hpp"
#include "mfk/poly.hpp"

namespace mfk::test {

using Rng = std::mt19937_64;

inline Ctx ring1(const std::string& var = "x") {
    return RingContext::make(32003, {var});
}

inline Ctx ring2() { return RingContext::make(32003, {"x", "y"}); }
inline Ctx ring3() { return RingContext::make(32003, {"x", "y", "z"}); }

inline Poly P(const Ctx& ctx, const std::string& text) { return Poly::parse(ctx, text); }

inline Poly random_poly(const Ctx& ctx, Rng& rng, std::uint32_t max_deg = 3,
                        std::size_t max_terms = 4, bool allow_zero = true) {
    std::uniform_int_distribution<std::size_t> nterms(allow_zero ? 0 : 1, max_terms);
    std::uniform_int_distribution<std::uint32_t> dexp(0, max_deg);
    std::uniform_int_distribution<std::int64_t> dcoef(1, ctx->characteristic() - 1);
    std::vector<Term> terms;
    std::size_t n = nterms(rng);
    for (std::size_t t = 0; t < n; ++t) {
        Monomial m(ctx->nvars(), 0);
        std::uint32_t budget = dexp(rng);
        for (std::size_t i = 0; i < ctx->nvars() && budget; ++i) {
            std::uniform_int_distribution<std::uint32_t> de(0, budget);
            std::uint32_t e = de(rng);
            m[i] = e;
            budget -= e;
        }
        terms.push_back(Term{m, dcoef(rng)});
    }
    return Poly::from_terms(ctx, terms);
}

inline RingMatrix random_matrix(const Ctx& ctx, Rng& rng, std::size_t rows, std::size_t cols,
                                std::uint32_t max_deg = 2) {
    RingMatrix m(ctx, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, random_poly(ctx, rng, max_deg, 3));
    return m;
}

} // namespace mfk::test

#endif
