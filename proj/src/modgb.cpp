#include "mfk/modgb.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mfk {

namespace {

using Vec = std::vector<Poly>; // one free-module element, index = component

bool vec_is_zero(const Vec& v) {
    for (const auto& f : v)
        if (!f.is_zero()) return false;
    return true;
}

// Leading term under position-over-term: the first nonzero component wins,
// inside it the ring order decides.
ModLead vec_lead(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero())
            return ModLead{i, v[i].leading_monomial(), v[i].leading_coeff()};
    }
    throw ValidationError("zero vector has no leading term");
}

int lead_compare(const RingContext& ctx, const ModLead& a, const ModLead& b) {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return ctx.compare(a.mono, b.mono);
}

Vec axpy(const Ctx& ctx, const Vec& v, const Vec& g, const Monomial& m, std::int64_t c) {
    // v - c * x^m * g
    Vec r = v;
    std::int64_t nc = ctx->neg(c);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!g[i].is_zero()) r[i] = r[i] + g[i].mul_term(m, nc);
    }
    return r;
}

struct Basis {
    Ctx ctx;
    std::size_t rank = 0;     // components of the free module
    std::size_t n_inputs = 0; // columns of the (extended) input
    std::vector<Vec> gens;    // monic
    std::vector<Vec> reps;    // gens[k] = sum_i reps[k][i] * input_i
    std::vector<ModLead> leads;
};

// Full tail reduction of v against basis elements (tried in index order).
// Returns the remainder; cofactors (if requested) satisfy
// v = sum_k cof[k] * gens[k] + remainder.
Vec reduce_full(const Basis& B, Vec v, std::vector<Poly>* cof) {
    Vec rem(v.size(), Poly::zero(B.ctx));
    if (cof) cof->assign(B.gens.size(), Poly::zero(B.ctx));
    while (!vec_is_zero(v)) {
        ModLead lt = vec_lead(v);
        bool reduced = false;
        for (std::size_t k = 0; k < B.gens.size(); ++k) {
            const ModLead& gl = B.leads[k];
            if (gl.comp != lt.comp || !monomial_divides(gl.mono, lt.mono)) continue;
            Monomial q = monomial_div(lt.mono, gl.mono);
            std::int64_t c = B.ctx->div(lt.coeff, gl.coeff);
            v = axpy(B.ctx, v, B.gens[k], q, c);
            if (cof) (*cof)[k] = (*cof)[k] + Poly::monomial(B.ctx, q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the irreducible leading term to the remainder
            Poly t = Poly::monomial(B.ctx, lt.mono, lt.coeff);
            rem[lt.comp] = rem[lt.comp] + t;
            v[lt.comp] = v[lt.comp] - t;
        }
    }
    return rem;
}

struct Pair {
    std::uint64_t deg;
    std::size_t i, j;
    bool operator<(const Pair& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

std::vector<Vec> matrix_columns(const RingMatrix& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    return cols;
}

RingMatrix columns_matrix(const Ctx& ctx, std::size_t rows, const std::vector<Vec>& cols) {
    return RingMatrix::from_columns(ctx, rows, cols);
}

Basis buchberger(const Ctx& ctx, std::size_t rank, const std::vector<Vec>& input) {
    Basis B;
    B.ctx = ctx;
    B.rank = rank;
    B.n_inputs = input.size();

    auto add_element = [&](Vec v, Vec rep) -> std::optional<std::size_t> {
        if (vec_is_zero(v)) return std::nullopt;
        ModLead lt = vec_lead(v);
        std::int64_t ic = ctx->inv(lt.coeff);
        for (auto& f : v) f = f.scale(ic);
        for (auto& f : rep) f = f.scale(ic);
        B.gens.push_back(std::move(v));
        B.reps.push_back(std::move(rep));
        lt.coeff = 1;
        B.leads.push_back(std::move(lt));
        return B.gens.size() - 1;
    };

    std::set<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> considered;

    auto queue_pairs_with = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
            if (B.leads[i].comp != B.leads[t].comp) continue;
            Monomial l = monomial_lcm(B.leads[i].mono, B.leads[t].mono);
            pending.insert(Pair{monomial_degree(l), i, t});
        }
    };

    for (std::size_t idx = 0; idx < input.size(); ++idx) {
        Vec rep(input.size(), Poly::zero(ctx));
        rep[idx] = Poly::constant(ctx, 1);
        auto pos = add_element(input[idx], std::move(rep));
        if (pos) queue_pairs_with(*pos);
    }

    std::size_t processed = 0;
    while (!pending.empty()) {
        if (++processed > engine_limits().max_pairs)
            throw ResourceLimitError("Groebner pair-queue bound exceeded");
        Pair pr = *pending.begin();
        pending.erase(pending.begin());
        considered.insert({pr.i, pr.j});

        const ModLead &li = B.leads[pr.i], &lj = B.leads[pr.j];
        Monomial l = monomial_lcm(li.mono, lj.mono);
        // product criterion, valid in the ideal (rank-1) case
        if (rank == 1 && monomial_coprime(li.mono, lj.mono)) continue;
        // chain criterion
        bool chained = false;
        for (std::size_t k = 0; k < B.gens.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (B.leads[k].comp != li.comp || !monomial_divides(B.leads[k].mono, l)) continue;
            auto key = [](std::size_t a, std::size_t b) {
                return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
            };
            if (considered.count(key(pr.i, k)) && considered.count(key(pr.j, k))) chained = true;
        }
        if (chained) continue;

        Monomial u = monomial_div(l, li.mono), w = monomial_div(l, lj.mono);
        Vec s(rank, Poly::zero(ctx)), rep(input.size(), Poly::zero(ctx));
        for (std::size_t c = 0; c < rank; ++c)
            s[c] = B.gens[pr.i][c].mul_term(u, 1) - B.gens[pr.j][c].mul_term(w, 1);
        for (std::size_t c = 0; c < input.size(); ++c)
            rep[c] = B.reps[pr.i][c].mul_term(u, 1) - B.reps[pr.j][c].mul_term(w, 1);

        std::vector<Poly> cof;
        Vec r = reduce_full(B, std::move(s), &cof);
        if (vec_is_zero(r)) continue;
        for (std::size_t k = 0; k < cof.size(); ++k)
            if (!cof[k].is_zero())
                for (std::size_t c = 0; c < input.size(); ++c)
                    rep[c] = rep[c] - cof[k] * B.reps[k][c];
        auto pos = add_element(std::move(r), std::move(rep));
        if (pos) queue_pairs_with(*pos);
    }

    // minimalize: drop elements whose lead is divisible by another kept lead
    std::vector<std::size_t> order(B.gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        int c = lead_compare(*ctx, B.leads[a], B.leads[b]);
        if (c != 0) return c < 0;
        return a < b;
    });
    Basis M;
    M.ctx = ctx;
    M.rank = rank;
    M.n_inputs = input.size();
    for (std::size_t idx : order) {
        bool redundant = false;
        for (std::size_t k = 0; k < M.gens.size() && !redundant; ++k)
            redundant = M.leads[k].comp == B.leads[idx].comp &&
                        monomial_divides(M.leads[k].mono, B.leads[idx].mono);
        if (!redundant) {
            M.gens.push_back(B.gens[idx]);
            M.reps.push_back(B.reps[idx]);
            M.leads.push_back(B.leads[idx]);
        }
    }

    // tail-reduce each element against the others
    for (std::size_t i = 0; i < M.gens.size(); ++i) {
        Basis others;
        others.ctx = ctx;
        others.rank = rank;
        for (std::size_t k = 0; k < M.gens.size(); ++k) {
            if (k == i) continue;
            others.gens.push_back(M.gens[k]);
            others.leads.push_back(M.leads[k]);
        }
        std::vector<Poly> cof;
        Vec r = reduce_full(others, M.gens[i], &cof);
        std::size_t c2 = 0;
        for (std::size_t k = 0; k < M.gens.size(); ++k) {
            if (k == i) continue;
            if (!cof[c2].is_zero())
                for (std::size_t c = 0; c < input.size(); ++c)
                    M.reps[i][c] = M.reps[i][c] - cof[c2] * M.reps[k][c];
            ++c2;
        }
        M.gens[i] = std::move(r);
    }
    return M;
}

} // namespace

RingMatrix wprime_columns(const Ctx& ctx, std::size_t n) {
    return RingMatrix::scalar(ctx, n, ctx->wprime());
}

NormalFormResult normal_form_columns(const RingMatrix& v, const RingMatrix& divisors) {
    require_compatible(*v.context(), *divisors.context(), "normal form");
    if (v.rows() != divisors.rows()) throw ShapeError("normal form: row counts differ");
    Basis B;
    B.ctx = v.context();
    B.rank = v.rows();
    for (std::size_t j = 0; j < divisors.cols(); ++j) {
        Vec g = divisors.column(j);
        if (vec_is_zero(g)) {
            // zero divisors can never reduce: give them an unmatchable component
            B.leads.push_back(ModLead{v.rows() + 1, Monomial(v.context()->nvars(), 0), 1});
        } else {
            B.leads.push_back(vec_lead(g));
        }
        B.gens.push_back(std::move(g));
    }

    NormalFormResult out;
    out.remainder = RingMatrix(v.context(), v.rows(), v.cols());
    out.cofactors = RingMatrix(v.context(), divisors.cols(), v.cols());
    for (std::size_t j = 0; j < v.cols(); ++j) {
        std::vector<Poly> cof;
        Vec r = reduce_full(B, v.column(j), &cof);
        for (std::size_t i = 0; i < v.rows(); ++i) out.remainder.set(i, j, r[i]);
        for (std::size_t k = 0; k < divisors.cols(); ++k) out.cofactors.set(k, j, cof[k]);
    }
    return out;
}

ModuleGB module_groebner(const RingMatrix& input, Over over) {
    RingMatrix ext = input;
    if (over == Over::R) ext = input.hcat(wprime_columns(input.context(), input.rows()));
    Basis B = buchberger(input.context(), ext.rows(), matrix_columns(ext));
    ModuleGB out;
    out.n_inputs = ext.cols();
    out.gens = columns_matrix(input.context(), ext.rows(), B.gens);
    out.reps = RingMatrix(input.context(), ext.cols(), B.gens.size());
    for (std::size_t k = 0; k < B.reps.size(); ++k)
        for (std::size_t i = 0; i < ext.cols(); ++i) out.reps.set(i, k, B.reps[k][i]);
    out.leads = B.leads;
    return out;
}

RingMatrix schreyer_syzygies(const ModuleGB& gb) {
    const Ctx& ctx = gb.gens.context();
    std::size_t t = gb.gens.cols();
    Basis B;
    B.ctx = ctx;
    B.rank = gb.gens.rows();
    B.gens = matrix_columns(gb.gens);
    B.leads = gb.leads;

    std::vector<Vec> zcols;
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) {
            if (gb.leads[i].comp != gb.leads[j].comp) continue;
            Monomial l = monomial_lcm(gb.leads[i].mono, gb.leads[j].mono);
            Monomial u = monomial_div(l, gb.leads[i].mono);
            Monomial w = monomial_div(l, gb.leads[j].mono);
            Vec s(B.rank, Poly::zero(ctx));
            for (std::size_t c = 0; c < B.rank; ++c)
                s[c] = B.gens[i][c].mul_term(u, 1) - B.gens[j][c].mul_term(w, 1);
            std::vector<Poly> cof;
            Vec r = reduce_full(B, std::move(s), &cof);
            if (!vec_is_zero(r))
                throw Error("internal: S-vector of a reduced basis did not reduce to zero");
            Vec z(t, Poly::zero(ctx));
            z[i] = Poly::monomial(ctx, u, 1);
            z[j] = z[j] - Poly::monomial(ctx, w, 1);
            for (std::size_t k = 0; k < t; ++k) z[k] = z[k] - cof[k];
            zcols.push_back(std::move(z));
        }
    }
    return columns_matrix(ctx, t, zcols);
}

RingMatrix span_gb(const RingMatrix& columns, Over over) {
    ModuleGB gb = module_groebner(columns, over);
    if (over == Over::S) return gb.gens;
    // over R: drop generators that are zero in R^rank
    const Ctx& ctx = columns.context();
    RingMatrix wcols = wprime_columns(ctx, columns.rows());
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < gb.gens.cols(); ++j) {
        NormalFormResult nf =
            normal_form_columns(gb.gens.columns(std::vector<std::size_t>{j}), wcols);
        if (!nf.remainder.is_zero()) keep.push_back(j);
    }
    return gb.gens.columns(keep);
}

RingMatrix syzygy(const RingMatrix& M, Over over) {
    const Ctx& ctx = M.context();
    RingMatrix ext = M;
    if (over == Over::R) ext = M.hcat(wprime_columns(ctx, M.rows()));
    std::size_t s = ext.cols();

    ModuleGB gb = module_groebner(ext, Over::S);
    RingMatrix raw(ctx, s, 0);
    if (gb.gens.cols() == 0) {
        // every input column is zero: the kernel is everything
        raw = RingMatrix::identity(ctx, s);
    } else {
        NormalFormResult nf = normal_form_columns(ext, gb.gens);
        if (!nf.remainder.is_zero())
            throw Error("internal: inputs did not reduce to zero against their basis");
        RingMatrix almost = RingMatrix::identity(ctx, s) - gb.reps * nf.cofactors;
        RingMatrix z = schreyer_syzygies(gb);
        raw = almost.hcat(gb.reps * z);
    }
    if (over == Over::R) raw = raw.top_rows(M.cols());
    return span_gb(raw, over);
}

bool in_span(const RingMatrix& v, const RingMatrix& gens, Over over) {
    ModuleGB gb = module_groebner(gens, over);
    NormalFormResult nf = normal_form_columns(v, gb.gens);
    return nf.remainder.is_zero();
}

RingMatrix trim_generators(const RingMatrix& gens, Over over) {
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < gens.cols(); ++j) keep.push_back(j);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t pos = keep.size(); pos-- > 0;) {
            std::vector<std::size_t> rest;
            for (std::size_t k = 0; k < keep.size(); ++k)
                if (k != pos) rest.push_back(keep[k]);
            RingMatrix candidate = gens.columns({keep[pos]});
            if (in_span(candidate, gens.columns(rest), over)) {
                keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(pos));
                changed = true;
                break;
            }
        }
    }
    return gens.columns(keep);
}

LiftResult lift(const RingMatrix& A, const RingMatrix& B, Over over) {
    require_compatible(*A.context(), *B.context(), "lift");
    if (A.rows() != B.rows()) throw ShapeError("lift: row counts differ");
    const Ctx& ctx = A.context();
    RingMatrix ext = A;
    if (over == Over::R) ext = A.hcat(wprime_columns(ctx, A.rows()));

    LiftResult out;
    out.certificate = RingMatrix(ctx, A.rows(), 0);
    ModuleGB gb = module_groebner(ext, Over::S);
    if (gb.gens.cols() == 0) {
        if (!B.is_zero()) {
            for (std::size_t j = 0; j < B.cols(); ++j) {
                RingMatrix col = B.columns({j});
                if (!col.is_zero()) {
                    out.failed_column = j;
                    out.certificate = col;
                    return out;
                }
            }
        }
        out.solution = RingMatrix(ctx, A.cols(), B.cols());
        return out;
    }
    NormalFormResult nf = normal_form_columns(B, gb.gens);
    for (std::size_t j = 0; j < B.cols(); ++j) {
        RingMatrix rem = nf.remainder.columns({j});
        if (!rem.is_zero()) {
            out.failed_column = j;
            out.certificate = rem;
            return out;
        }
    }
    RingMatrix x_ext = gb.reps * nf.cofactors;
    out.solution = x_ext.top_rows(A.cols());
    return out;
}

} // namespace mfk
