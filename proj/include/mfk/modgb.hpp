#ifndef MFK_MODGB_HPP
#define MFK_MODGB_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mfk/matrix.hpp"

namespace mfk {

// Leading term of a free-module element under position-over-term order:
// lower component index beats higher, ties decided by the ring order.
struct ModLead {
    std::size_t comp = 0;
    Monomial mono;
    std::int64_t coeff = 0;
};

// Reduced Groebner basis of the column span of an input matrix, with the
// transformation trace: input * reps == gens.  When computed over R the
// inputs were extended by the columns of wprime * I before reduction and
// `n_inputs` marks how many columns were real.
struct ModuleGB {
    RingMatrix gens;
    RingMatrix reps;
    std::size_t n_inputs = 0;
    std::vector<ModLead> leads;
};

struct NormalFormResult {
    RingMatrix remainder; // same shape as the reduced columns
    RingMatrix cofactors; // divisors.cols x v.cols, v = divisors*cofactors + remainder
};

struct LiftResult {
    std::optional<RingMatrix> solution;
    std::size_t failed_column = 0; // valid when no solution
    RingMatrix certificate;        // nonzero normal form of the failing column

    bool ok() const { return solution.has_value(); }
};

// Full normal form of each column of v against the columns of divisors,
// tried in the given order; zero divisor columns are skipped.  Exact:
// v == divisors * cofactors + remainder.
NormalFormResult normal_form_columns(const RingMatrix& v, const RingMatrix& divisors);

// Buchberger for submodules of a free module, position-over-term order,
// normal pair-selection strategy, chain criterion (plus the product
// criterion in the ideal case), full inter-reduction, output sorted
// ascending by leading term.  Over R the generators wprime*e_i are adjoined
// before reduction.
ModuleGB module_groebner(const RingMatrix& input, Over over = Over::S);

// Schreyer relations of a reduced basis: one column per same-component
// pair, spanning the syzygy module of gb.gens.
RingMatrix schreyer_syzygies(const ModuleGB& gb);

// Canonical generators of ker(M) over the stated ring: columns K with
// M*K = 0 and span(K) = kernel.  Over R the result omits columns that are
// zero in R^cols (every entry divisible by wprime).
RingMatrix syzygy(const RingMatrix& M, Over over);

// Canonical (reduced-GB) generators of the column span over the stated
// ring; over R, trivially-zero columns are dropped as in `syzygy`.
RingMatrix span_gb(const RingMatrix& columns, Over over);

// Membership of every column of v in the span of gens over the stated ring.
bool in_span(const RingMatrix& v, const RingMatrix& gens, Over over);

// Drops columns that lie in the span of the remaining ones; deterministic
// (scans from the last column, repeats to a fixed point).
RingMatrix trim_generators(const RingMatrix& gens, Over over);

// Solve A * X = B over the stated ring.
LiftResult lift(const RingMatrix& A, const RingMatrix& B, Over over);

// The columns of wprime * I_n (the implicit relations of R^n).
RingMatrix wprime_columns(const Ctx& ctx, std::size_t n);

} // namespace mfk

#endif
