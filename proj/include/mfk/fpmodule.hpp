#ifndef MFK_FPMODULE_HPP
#define MFK_FPMODULE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mfk/modgb.hpp"

namespace mfk {

// A k-vector-space dimension that may be infinite.
class KDim {
public:
    static KDim finite(std::uint64_t v) { return KDim(true, v); }
    static KDim infinite() { return KDim(false, 0); }

    bool is_finite() const { return finite_; }
    std::uint64_t value() const {
        if (!finite_) throw ValidationError("dimension is infinite");
        return value_;
    }
    bool operator==(const KDim& o) const {
        return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
    }
    bool operator!=(const KDim& o) const { return !(*this == o); }
    std::string str() const { return finite_ ? std::to_string(value_) : "Infinite"; }

private:
    KDim(bool f, std::uint64_t v) : finite_(f), value_(v) {}
    bool finite_;
    std::uint64_t value_;
};

// Finitely presented module over S or over the fiber ring R = S/(W - w0):
// `generators` free generators, relations = columns of the presentation
// matrix (over R the relations wprime * e_i are implicit).
class FPModuleR {
public:
    FPModuleR(Ctx ctx, std::size_t generators, RingMatrix presentation, Over over);

    static FPModuleR free_module(const Ctx& ctx, std::size_t generators, Over over);

    const Ctx& context() const { return ctx_; }
    std::size_t generators() const { return gens_; }
    const RingMatrix& presentation() const { return presentation_; }
    Over over() const { return over_; }

    // Canonical generators of the relation span (reduced GB over the ring).
    RingMatrix canonical_span() const;
    bool is_zero() const;
    bool is_free_presentation() const { return presentation_.cols() == 0; }

    // Same generator count and the same relation span.
    bool presentation_equivalent(const FPModuleR& o) const;

    // Copy whose presentation columns are the canonical span generators.
    FPModuleR canonicalized() const;

private:
    Ctx ctx_;
    std::size_t gens_;
    RingMatrix presentation_;
    Over over_;
};

// Gaussian elimination of unit entries: smaller presentation of the same
// module (generator count may drop; zero relation columns are removed).
FPModuleR minimize_presentation(const FPModuleR& m);

// dim_k of the module via the standard-monomial staircase of the leading
// term module; Infinite when some component's staircase is unbounded.
KDim k_dimension(const FPModuleR& m);

// The subquotient span(Z)/span(B) of a free module, presented on the
// columns of Z.  Over R the implicit wprime relations are included.
FPModuleR subquotient(const RingMatrix& Z, const RingMatrix& B, Over over);

struct HomModule {
    FPModuleR module; // presentation of Hom_R(M, N)
    // interpretation of each generator as a g_N x g_M matrix over R
    std::vector<RingMatrix> generator_maps;
};

// Presentation of Hom_R(M, N) for modules over R.
HomModule hom_module(const FPModuleR& M, const FPModuleR& N);

// dim_k Ext^i_R(M, R) for i >= 1 via an iterated-syzygy free resolution.
KDim ext_dim(const FPModuleR& M, unsigned i);

// Canonical generating set for a named module: span generators with
// redundant columns trimmed away.
RingMatrix module_generators(const RingMatrix& columns, Over over);

} // namespace mfk

#endif
