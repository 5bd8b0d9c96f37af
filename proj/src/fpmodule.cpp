#include "mfk/fpmodule.hpp"

#include <algorithm>
#include <map>

namespace mfk {

FPModuleR::FPModuleR(Ctx ctx, std::size_t generators, RingMatrix presentation, Over over)
    : ctx_(std::move(ctx)), gens_(generators), presentation_(std::move(presentation)),
      over_(over) {
    if (presentation_.rows() != gens_)
        throw ShapeError("presentation must have one row per generator");
    if (over_ == Over::R && !ctx_->has_potential())
        throw ValidationError("module over R needs a ring potential");
}

FPModuleR FPModuleR::free_module(const Ctx& ctx, std::size_t generators, Over over) {
    return FPModuleR(ctx, generators, RingMatrix(ctx, generators, 0), over);
}

RingMatrix FPModuleR::canonical_span() const { return span_gb(presentation_, over_); }

bool FPModuleR::is_zero() const {
    if (gens_ == 0) return true;
    return in_span(RingMatrix::identity(ctx_, gens_), presentation_, over_);
}

bool FPModuleR::presentation_equivalent(const FPModuleR& o) const {
    if (gens_ != o.gens_ || over_ != o.over_) return false;
    return canonical_span() == o.canonical_span();
}

FPModuleR FPModuleR::canonicalized() const {
    return FPModuleR(ctx_, gens_, canonical_span(), over_);
}

FPModuleR minimize_presentation(const FPModuleR& m) {
    const Ctx& ctx = m.context();
    std::size_t g = m.generators();
    RingMatrix p = m.presentation();
    for (;;) {
        bool found = false;
        std::size_t ui = 0, uj = 0;
        for (std::size_t j = 0; j < p.cols() && !found; ++j)
            for (std::size_t i = 0; i < g && !found; ++i)
                if (!p.at(i, j).is_zero() && p.at(i, j).is_constant()) {
                    ui = i;
                    uj = j;
                    found = true;
                }
        if (!found) break;
        Poly inv_u = Poly::constant(ctx, ctx->inv(p.at(ui, uj).constant_value()));
        RingMatrix next(ctx, g - 1, p.cols() - 1);
        std::size_t jc = 0;
        for (std::size_t j = 0; j < p.cols(); ++j) {
            if (j == uj) continue;
            Poly factor = p.at(ui, j) * inv_u;
            std::size_t ic = 0;
            for (std::size_t i = 0; i < g; ++i) {
                if (i == ui) continue;
                next.set(ic, jc, p.at(i, j) - factor * p.at(i, uj));
                ++ic;
            }
            ++jc;
        }
        p = next;
        --g;
    }
    // drop zero relation columns
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < p.cols(); ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < g && zero; ++i) zero = p.at(i, j).is_zero();
        if (!zero) keep.push_back(j);
    }
    return FPModuleR(ctx, g, p.columns(keep), m.over());
}

KDim k_dimension(const FPModuleR& m) {
    const Ctx& ctx = m.context();
    std::size_t g = m.generators();
    if (g == 0) return KDim::finite(0);
    ModuleGB gb = module_groebner(m.presentation(), m.over());

    std::size_t nv = ctx->nvars();
    std::uint64_t total = 0;
    for (std::size_t comp = 0; comp < g; ++comp) {
        std::vector<Monomial> leads;
        for (const auto& l : gb.leads)
            if (l.comp == comp) leads.push_back(l.mono);
        // bounding box from pure powers; absence of one means an infinite
        // staircase in that variable
        std::vector<std::uint64_t> bound(nv, 0);
        bool boxed = true;
        for (std::size_t v = 0; v < nv && boxed; ++v) {
            bool have = false;
            std::uint64_t best = 0;
            for (const auto& mono : leads) {
                bool pure = true;
                for (std::size_t w = 0; w < nv; ++w)
                    if (w != v && mono[w] != 0) pure = false;
                if (pure && (!have || mono[v] < best)) {
                    have = true;
                    best = mono[v];
                }
            }
            if (!have)
                boxed = false;
            else
                bound[v] = best;
        }
        if (!boxed) return KDim::infinite();

        std::uint64_t box = 1;
        for (std::size_t v = 0; v < nv; ++v) {
            box *= bound[v] == 0 ? 1 : bound[v];
            if (box > 50000000ULL)
                throw ResourceLimitError("standard-monomial staircase too large");
        }
        // walk the box and count monomials under the staircase
        Monomial cur(nv, 0);
        std::uint64_t count = 0;
        for (;;) {
            bool standard = true;
            for (const auto& mono : leads)
                if (monomial_divides(mono, cur)) {
                    standard = false;
                    break;
                }
            if (standard) ++count;
            std::size_t v = 0;
            while (v < nv) {
                if (bound[v] > 0 && cur[v] + 1 < bound[v]) {
                    ++cur[v];
                    break;
                }
                cur[v] = 0;
                ++v;
            }
            if (v == nv) break;
        }
        total += count;
    }
    return KDim::finite(total);
}

FPModuleR subquotient(const RingMatrix& Z, const RingMatrix& B, Over over) {
    const Ctx& ctx = Z.context();
    if (Z.rows() != B.rows()) throw ShapeError("subquotient: ambient ranks differ");
    std::size_t t = Z.cols();
    RingMatrix stacked = Z.hcat(B);
    if (over == Over::R) stacked = stacked.hcat(wprime_columns(ctx, Z.rows()));
    RingMatrix relations = syzygy(stacked, Over::S).top_rows(t);
    return FPModuleR(ctx, t, span_gb(relations, over), over);
}

RingMatrix module_generators(const RingMatrix& columns, Over over) {
    return trim_generators(span_gb(columns, over), over);
}

HomModule hom_module(const FPModuleR& M, const FPModuleR& N) {
    if (M.over() != Over::R || N.over() != Over::R)
        throw ValidationError("hom_module expects modules over R");
    require_compatible(*M.context(), *N.context(), "hom_module");
    const Ctx& ctx = M.context();
    std::size_t gm = M.generators(), gn = N.generators();
    std::size_t dim = gn * gm;
    const RingMatrix& pm = M.presentation();
    const RingMatrix& pn = N.presentation();

    // phi respects relations: vec(phi * P_M) lands in the span of
    // blockdiag(P_N) plus the implicit wprime relations.
    RingMatrix K(ctx, dim, 0);
    if (pm.cols() == 0 || dim == 0) {
        K = RingMatrix::identity(ctx, dim);
    } else {
        RingMatrix L = pm.transpose().kron(RingMatrix::identity(ctx, gn));
        RingMatrix qhat = RingMatrix::identity(ctx, pm.cols()).kron(pn);
        RingMatrix target = L.hcat(qhat).hcat(wprime_columns(ctx, gn * pm.cols()));
        K = syzygy(target, Over::S).top_rows(dim);
    }
    K = module_generators(K, Over::R);
    std::size_t t = K.cols();

    // maps landing in the relation span of N are the zero morphism
    RingMatrix jmat = RingMatrix::identity(ctx, gm).kron(pn);
    RingMatrix rel_raw =
        t == 0 ? RingMatrix(ctx, 0, 0)
               : syzygy(K.hcat(jmat).hcat(wprime_columns(ctx, dim)), Over::S).top_rows(t);

    HomModule out{FPModuleR(ctx, t, span_gb(rel_raw, Over::R), Over::R), {}};
    for (std::size_t j = 0; j < t; ++j)
        out.generator_maps.push_back(RingMatrix::unvec(K.columns({j}), gn, gm));
    return out;
}

KDim ext_dim(const FPModuleR& M, unsigned i) {
    if (i < 1) throw ValidationError("ext_dim needs i >= 1");
    if (M.over() != Over::R) throw ValidationError("ext_dim expects a module over R");

    // free resolution d_1, ..., d_{i+1} over R
    std::vector<RingMatrix> d;
    d.push_back(M.presentation());
    for (unsigned k = 1; k <= i; ++k)
        d.push_back(trim_generators(syzygy(d.back(), Over::R), Over::R));

    const RingMatrix& di = d[i - 1]; // d_i : b_{i-1} x b_i
    const RingMatrix& dnext = d[i];  // d_{i+1} : b_i x b_{i+1}
    std::size_t bi = dnext.rows();
    if (di.cols() != bi) throw Error("internal: resolution rank mismatch");
    if (bi == 0) return KDim::finite(0);

    RingMatrix Z = syzygy(dnext.transpose(), Over::R);
    RingMatrix B = di.transpose();
    return k_dimension(subquotient(Z, B, Over::R));
}

} // namespace mfk
