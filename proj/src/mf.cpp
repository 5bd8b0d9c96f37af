#include "mfk/mf.hpp"

#include <sstream>

namespace mfk {

namespace {

std::string entry_report(const RingMatrix& got, const RingMatrix& want) {
    for (std::size_t i = 0; i < got.rows(); ++i)
        for (std::size_t j = 0; j < got.cols(); ++j)
            if (got.at(i, j) != want.at(i, j)) {
                std::ostringstream os;
                os << "entry (" << i << "," << j << "): got " << got.at(i, j).str()
                   << ", want " << want.at(i, j).str();
                return os.str();
            }
    return "equal";
}

} // namespace

MatrixFactorization MatrixFactorization::make(const Ctx& ctx, RingMatrix e1, RingMatrix e0,
                                              std::string name) {
    if (!ctx->has_potential())
        throw ValidationError("matrix factorization needs a ring with a potential");
    require_compatible(*ctx, *e1.context(), "mf");
    require_compatible(*ctx, *e0.context(), "mf");
    if (e1.rows() != e1.cols() || e0.rows() != e0.cols() || e1.rows() != e0.rows())
        throw ShapeError("matrix factorization needs square matrices of equal rank");
    std::size_t r = e1.rows();
    RingMatrix wid = RingMatrix::scalar(ctx, r, ctx->wprime());
    RingMatrix c01 = e0 * e1, c10 = e1 * e0;
    if (c01 != wid)
        throw CompositionError("e0*e1 != wprime*I at " + entry_report(c01, wid));
    if (c10 != wid)
        throw CompositionError("e1*e0 != wprime*I at " + entry_report(c10, wid));
    MatrixFactorization mf;
    mf.ctx_ = ctx;
    mf.rank_ = r;
    mf.e1_ = std::move(e1);
    mf.e0_ = std::move(e0);
    mf.name_ = std::move(name);
    return mf;
}

MatrixFactorization trivial_pair(const Ctx& ctx, std::size_t rank,
                                 TrivialOrientation orientation) {
    RingMatrix id = RingMatrix::identity(ctx, rank);
    RingMatrix w = RingMatrix::scalar(ctx, rank, ctx->wprime());
    if (orientation == TrivialOrientation::IdFirst)
        return MatrixFactorization::make(ctx, id, w);
    return MatrixFactorization::make(ctx, w, id);
}

MfMorphism MfMorphism::make(const MatrixFactorization& src, const MatrixFactorization& dst,
                            RingMatrix p1, RingMatrix p0) {
    require_compatible(*src.context(), *dst.context(), "morphism");
    if (p1.rows() != dst.rank() || p1.cols() != src.rank() || p0.rows() != dst.rank() ||
        p0.cols() != src.rank())
        throw ShapeError("morphism blocks must be dst.rank x src.rank");
    RingMatrix lhs1 = p1 * src.e0(), rhs1 = dst.e0() * p0;
    if (lhs1 != rhs1)
        throw ValidationError("morphism: p1*e0 != f0*p0 at " + entry_report(lhs1, rhs1));
    RingMatrix lhs2 = dst.e1() * p1, rhs2 = p0 * src.e1();
    if (lhs2 != rhs2)
        throw ValidationError("morphism: f1*p1 != p0*e1 at " + entry_report(lhs2, rhs2));
    MfMorphism m;
    m.src_ = src;
    m.dst_ = dst;
    m.p1_ = std::move(p1);
    m.p0_ = std::move(p0);
    return m;
}

MfMorphism MfMorphism::identity(const MatrixFactorization& e) {
    RingMatrix id = RingMatrix::identity(e.context(), e.rank());
    return make(e, e, id, id);
}

MfMorphism MfMorphism::zero(const MatrixFactorization& src, const MatrixFactorization& dst) {
    return make(src, dst, RingMatrix(src.context(), dst.rank(), src.rank()),
                RingMatrix(src.context(), dst.rank(), src.rank()));
}

MfMorphism MfMorphism::operator+(const MfMorphism& o) const {
    if (!(src_ == o.src_) || !(dst_ == o.dst_))
        throw ShapeError("morphism add: endpoints differ");
    return make(src_, dst_, p1_ + o.p1_, p0_ + o.p0_);
}

MfMorphism MfMorphism::operator-() const { return make(src_, dst_, -p1_, -p0_); }

MfMorphism MfMorphism::scale(std::int64_t c) const {
    Poly cc = Poly::constant(src_.context(), c);
    return make(src_, dst_, p1_.scale(cc), p0_.scale(cc));
}

MfMorphism compose(const MfMorphism& p, const MfMorphism& q) {
    if (!(p.dst() == q.src())) throw ShapeError("compose: p.dst != q.src");
    return MfMorphism::make(p.src(), q.dst(), q.p1() * p.p1(), q.p0() * p.p0());
}

bool witnesses(const HomotopyWitness& w, const MfMorphism& p) {
    const MatrixFactorization &e = p.src(), &f = p.dst();
    return p.p1() == f.e0() * w.s1 + w.s0 * e.e1() &&
           p.p0() == w.s1 * e.e0() + f.e1() * w.s0;
}

HomotopyResult null_homotopy(const MfMorphism& p) {
    const MatrixFactorization &e = p.src(), &f = p.dst();
    const Ctx& ctx = e.context();
    std::size_t re = e.rank(), rf = f.rank();
    // unknowns u = [vec(s0); vec(s1)], both rf x re
    // identity 1: s0*e1 + f0*s1 = p1  ->  (e1^T (x) I_rf) vec(s0) + (I_re (x) f0) vec(s1)
    // identity 2: f1*s0 + s1*e0 = p0  ->  (I_re (x) f1) vec(s0) + (e0^T (x) I_rf) vec(s1)
    RingMatrix i_re = RingMatrix::identity(ctx, re);
    RingMatrix i_rf = RingMatrix::identity(ctx, rf);
    RingMatrix a11 = e.e1().transpose().kron(i_rf);
    RingMatrix a12 = i_re.kron(f.e0());
    RingMatrix a21 = i_re.kron(f.e1());
    RingMatrix a22 = e.e0().transpose().kron(i_rf);
    RingMatrix big = RingMatrix::block({{a11, a12}, {a21, a22}});
    RingMatrix rhs = p.p1().vec().vcat(p.p0().vec());

    HomotopyResult out;
    out.certificate = RingMatrix(ctx, rhs.rows(), 0);
    LiftResult lf = lift(big, rhs, Over::S);
    if (!lf.ok()) {
        out.certificate = lf.certificate;
        return out;
    }
    std::size_t n = rf * re;
    RingMatrix u = *lf.solution;
    RingMatrix s0 = RingMatrix::unvec(u.top_rows(n), rf, re);
    RingMatrix vec_s1(ctx, n, 1);
    for (std::size_t i = 0; i < n; ++i) vec_s1.set(i, 0, u.at(n + i, 0));
    RingMatrix s1 = RingMatrix::unvec(vec_s1, rf, re);
    HomotopyWitness w{std::move(s0), std::move(s1)};
    if (!witnesses(w, p)) throw Error("internal: homotopy solution failed verification");
    out.witness = std::move(w);
    return out;
}

MatrixFactorization shift(const MatrixFactorization& e) {
    return MatrixFactorization::make(e.context(), -e.e0(), -e.e1());
}

MfMorphism shift(const MfMorphism& p) {
    return MfMorphism::make(shift(p.src()), shift(p.dst()), p.p0(), p.p1());
}

DirectSum direct_sum(const MatrixFactorization& e, const MatrixFactorization& f) {
    const Ctx& ctx = e.context();
    require_compatible(*ctx, *f.context(), "direct sum");
    std::size_t re = e.rank(), rf = f.rank();
    RingMatrix z_ef(ctx, re, rf), z_fe(ctx, rf, re);
    RingMatrix e1 = RingMatrix::block({{e.e1(), z_ef}, {z_fe, f.e1()}});
    RingMatrix e0 = RingMatrix::block({{e.e0(), z_ef}, {z_fe, f.e0()}});
    MatrixFactorization sum = MatrixFactorization::make(ctx, e1, e0);

    RingMatrix ide = RingMatrix::identity(ctx, re), idf = RingMatrix::identity(ctx, rf);
    RingMatrix il = ide.vcat(z_fe), ir = z_ef.vcat(idf);
    RingMatrix pl = ide.hcat(z_ef), pr = z_fe.hcat(idf);
    DirectSum out{sum,
                  MfMorphism::make(e, sum, il, il),
                  MfMorphism::make(f, sum, ir, ir),
                  MfMorphism::make(sum, e, pl, pl),
                  MfMorphism::make(sum, f, pr, pr)};
    return out;
}

ConeResult cone(const MfMorphism& p) {
    const MatrixFactorization &e = p.src(), &f = p.dst();
    const Ctx& ctx = e.context();
    std::size_t re = e.rank(), rf = f.rank();
    RingMatrix z_fe(ctx, re, rf);
    // Cone1 = F1 + E0, Cone0 = F0 + E1
    RingMatrix c1 = RingMatrix::block({{f.e1(), p.p0()}, {z_fe, -e.e0()}});
    RingMatrix c0 = RingMatrix::block({{f.e0(), p.p1()}, {z_fe, -e.e1()}});
    MatrixFactorization cn = MatrixFactorization::make(ctx, c1, c0);

    RingMatrix idf = RingMatrix::identity(ctx, rf);
    RingMatrix q1 = idf.vcat(RingMatrix(ctx, re, rf));
    MfMorphism q = MfMorphism::make(f, cn, q1, q1);

    RingMatrix ide = RingMatrix::identity(ctx, re);
    RingMatrix r1 = RingMatrix(ctx, re, rf).hcat(-ide);
    MfMorphism r = MfMorphism::make(cn, shift(e), r1, r1);
    return ConeResult{std::move(cn), std::move(q), std::move(r)};
}

HomElement HomElement::degree0(const MatrixFactorization& e, const MatrixFactorization& f,
                               RingMatrix h11, RingMatrix h00) {
    HomElement h;
    h.parity = 0;
    h.block[1][1] = std::move(h11);
    h.block[0][0] = std::move(h00);
    h.block[1][0] = RingMatrix(e.context(), f.rank(), e.rank());
    h.block[0][1] = RingMatrix(e.context(), f.rank(), e.rank());
    return h;
}

HomElement HomElement::degree1(const MatrixFactorization& e, const MatrixFactorization& f,
                               RingMatrix h10, RingMatrix h01) {
    HomElement h;
    h.parity = 1;
    h.block[1][0] = std::move(h10);
    h.block[0][1] = std::move(h01);
    h.block[1][1] = RingMatrix(e.context(), f.rank(), e.rank());
    h.block[0][0] = RingMatrix(e.context(), f.rank(), e.rank());
    return h;
}

HomElement hom_differential(const HomElement& h, const MatrixFactorization& e,
                            const MatrixFactorization& f) {
    const Ctx& ctx = e.context();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (h.block[i][j].rows() != f.rank() || h.block[i][j].cols() != e.rank())
                throw ShapeError("hom element blocks must be f.rank x e.rank");
            if (((i - j) % 2 + 2) % 2 != h.parity % 2 && !h.block[i][j].is_zero())
                throw ValidationError("hom element support does not match its parity");
        }
    auto emap = [&](int i) -> const RingMatrix& { return i == 1 ? e.e1() : e.e0(); };
    auto fmap = [&](int j) -> const RingMatrix& { return j == 1 ? f.e1() : f.e0(); };
    HomElement out;
    out.parity = (h.parity + 1) % 2;
    std::int64_t sign = h.parity % 2 == 0 ? 1 : -1;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            // (D h)_{i,j} = f_{1-j} h_{i,1-j} - (-1)^k h_{1-i,j} e_i
            RingMatrix v = fmap(1 - j) * h.block[i][1 - j] -
                           (h.block[1 - i][j] * emap(i)).scale(Poly::constant(ctx, sign));
            out.block[i][j] = std::move(v);
        }
    return out;
}

PairComplex::PairComplex(std::vector<MatrixFactorization> objects,
                         std::vector<MfMorphism> diffs)
    : objects_(std::move(objects)), diffs_(std::move(diffs)) {
    if (objects_.empty()) throw ValidationError("complex needs at least one object");
    if (diffs_.size() + 1 != objects_.size())
        throw ShapeError("complex needs one differential between consecutive objects");
    for (std::size_t i = 0; i < diffs_.size(); ++i) {
        if (!(diffs_[i].src() == objects_[i]) || !(diffs_[i].dst() == objects_[i + 1]))
            throw ShapeError("complex differential endpoints do not match objects");
    }
    is_complex_ = true;
    for (std::size_t i = 0; i + 1 < diffs_.size(); ++i) {
        MfMorphism c = compose(diffs_[i], diffs_[i + 1]);
        if (!c.p1().is_zero() || !c.p0().is_zero()) is_complex_ = false;
    }
}

MatrixFactorization totalize(const PairComplex& c) {
    if (!c.is_complex())
        throw NotAComplexError("totalize: consecutive differentials do not compose to zero");
    const auto& objs = c.objects();
    const Ctx& ctx = objs[0].context();

    // components (m, k): object index m, side k in {0, 1}
    struct Comp {
        std::size_t m;
        int k;
        std::size_t rank;
    };
    std::vector<Comp> t1, t0; // k + m odd goes to T1, even to T0
    for (std::size_t m = 0; m < objs.size(); ++m)
        for (int k = 0; k <= 1; ++k) {
            Comp comp{m, k, objs[m].rank()};
            if ((m + static_cast<std::size_t>(k)) % 2 == 1)
                t1.push_back(comp);
            else
                t0.push_back(comp);
        }

    auto assemble = [&](const std::vector<Comp>& to, const std::vector<Comp>& from) {
        std::vector<std::vector<RingMatrix>> blocks(to.size());
        for (std::size_t bi = 0; bi < to.size(); ++bi) {
            for (std::size_t bj = 0; bj < from.size(); ++bj) {
                const Comp &dstc = to[bi], &srcc = from[bj];
                RingMatrix blk(ctx, dstc.rank, srcc.rank);
                // differential part: d^m on side k
                if (dstc.m == srcc.m + 1 && dstc.k == srcc.k) {
                    const MfMorphism& d = c.diffs()[srcc.m];
                    blk = blk + (srcc.k == 1 ? d.p1() : d.p0());
                }
                // internal part: (-1)^m e_k
                if (dstc.m == srcc.m && dstc.k == 1 - srcc.k) {
                    const MatrixFactorization& obj = objs[srcc.m];
                    RingMatrix emap = srcc.k == 1 ? obj.e1() : obj.e0();
                    if (srcc.m % 2 == 1) emap = -emap;
                    blk = blk + emap;
                }
                blocks[bi].push_back(std::move(blk));
            }
        }
        return RingMatrix::block(blocks);
    };

    std::size_t rank1 = 0, rank0 = 0;
    for (const auto& comp : t1) rank1 += comp.rank;
    for (const auto& comp : t0) rank0 += comp.rank;
    if (rank1 == 0 && rank0 == 0)
        return MatrixFactorization::make(ctx, RingMatrix(ctx, 0, 0), RingMatrix(ctx, 0, 0));
    if (rank1 != rank0)
        throw ValidationError("totalize: total ranks of the two sides differ");

    RingMatrix tmap1 = assemble(t0, t1); // T1 -> T0
    RingMatrix tmap0 = assemble(t1, t0); // T0 -> T1
    return MatrixFactorization::make(ctx, tmap1, tmap0);
}

ContractibilityResult is_contractible(const MatrixFactorization& e) {
    HomotopyResult h = null_homotopy(MfMorphism::identity(e));
    ContractibilityResult out;
    out.contractible = h.ok();
    out.witness = std::move(h.witness);
    return out;
}

bool is_homotopy_equivalence(const MfMorphism& p) {
    return is_contractible(cone(p).cone).contractible;
}

KDim hom_space_dimension(const MatrixFactorization& e, const MatrixFactorization& f) {
    require_compatible(*e.context(), *f.context(), "hom_space_dimension");
    const Ctx& ctx = e.context();
    std::size_t re = e.rank(), rf = f.rank();
    std::size_t n = rf * re;
    if (n == 0) return KDim::finite(0);

    RingMatrix i_re = RingMatrix::identity(ctx, re);
    RingMatrix i_rf = RingMatrix::identity(ctx, rf);

    // degree-0 differential on u = [vec(h11); vec(h00)]:
    //   (Dh)_{1,0} = f1 h11 - h00 e1,  (Dh)_{0,1} = f0 h00 - h11 e0
    RingMatrix d0 = RingMatrix::block(
        {{i_re.kron(f.e1()), -(e.e1().transpose().kron(i_rf))},
         {-(e.e0().transpose().kron(i_rf)), i_re.kron(f.e0())}});
    // degree-1 differential on [vec(h10); vec(h01)]:
    //   (Dh)_{1,1} = f0 h10 + h01 e1,  (Dh)_{0,0} = f1 h01 + h10 e0
    RingMatrix d1 = RingMatrix::block(
        {{i_re.kron(f.e0()), e.e1().transpose().kron(i_rf)},
         {e.e0().transpose().kron(i_rf), i_re.kron(f.e1())}});

    RingMatrix closed = syzygy(d0, Over::S);
    return k_dimension(subquotient(closed, d1, Over::S));
}

} // namespace mfk
