#include "mfk/catalog.hpp"

namespace mfk {

namespace {

MatrixFactorization rank1(const Ctx& ctx, const std::string& a, const std::string& b,
                          const std::string& name) {
    RingMatrix e1(ctx, 1, 1), e0(ctx, 1, 1);
    e1.set(0, 0, Poly::parse(ctx, a));
    e0.set(0, 0, Poly::parse(ctx, b));
    return MatrixFactorization::make(ctx, e1, e0, name);
}

FPModuleR cyclic(const Ctx& ctx, const std::vector<std::string>& relations) {
    RingMatrix p(ctx, 1, relations.size());
    for (std::size_t j = 0; j < relations.size(); ++j) p.set(0, j, Poly::parse(ctx, relations[j]));
    return FPModuleR(ctx, 1, p, Over::R);
}

CatalogCase a_series(std::int64_t p, MonomialOrder order, unsigned n) {
    auto base = RingContext::make(p, {"x"}, order);
    Monomial w{n + 1};
    auto ctx = base->with_potential(Poly::monomial(base, w));
    CatalogCase c;
    c.name = "a" + std::to_string(n);
    c.description = "one variable, potential x^" + std::to_string(n + 1);
    c.ctx = ctx;
    for (unsigned a = 1; a <= n; ++a) {
        std::string e1 = "x^" + std::to_string(a);
        std::string e0 = "x^" + std::to_string(n + 1 - a);
        std::string name = "E" + std::to_string(a);
        c.mfs.emplace_back(name, rank1(ctx, e1, e0, name));
    }
    return c;
}

} // namespace

std::vector<CatalogCase> build_catalog(std::int64_t characteristic, MonomialOrder order) {
    std::vector<CatalogCase> out;

    CatalogCase a2 = a_series(characteristic, order, 2);
    a2.modules.emplace_back("m1", cyclic(a2.ctx, {"x"}));
    out.push_back(a2);

    CatalogCase a3 = a_series(characteristic, order, 3);
    a3.modules.emplace_back("m2", cyclic(a3.ctx, {"x^2"}));
    out.push_back(a3);

    out.push_back(a_series(characteristic, order, 5));

    {
        auto base = RingContext::make(characteristic, {"x", "y"}, order);
        auto ctx = base->with_potential(Poly::parse(base, "x*y"));
        CatalogCase c;
        c.name = "node";
        c.description = "two variables, potential x*y";
        c.ctx = ctx;
        c.mfs.emplace_back("N", rank1(ctx, "x", "y", "N"));
        c.modules.emplace_back("rx", cyclic(ctx, {"x"}));
        c.modules.emplace_back("k", cyclic(ctx, {"x", "y"}));
        out.push_back(c);
    }
    {
        auto base = RingContext::make(characteristic, {"x", "y"}, order);
        auto ctx = base->with_potential(Poly::parse(base, "x^3 - y^2"));
        CatalogCase c;
        c.name = "cusp";
        c.description = "two variables, potential x^3 - y^2";
        c.ctx = ctx;
        RingMatrix e1 = RingMatrix::from_rows(
            ctx, {{Poly::parse(ctx, "x"), Poly::parse(ctx, "y")},
                  {Poly::parse(ctx, "y"), Poly::parse(ctx, "x^2")}});
        RingMatrix e0 = RingMatrix::from_rows(
            ctx, {{Poly::parse(ctx, "x^2"), Poly::parse(ctx, "-y")},
                  {Poly::parse(ctx, "-y"), Poly::parse(ctx, "x")}});
        c.mfs.emplace_back("C", MatrixFactorization::make(ctx, e1, e0, "C"));
        c.modules.emplace_back("m", FPModuleR(ctx, 2, e1, Over::R));
        c.modules.emplace_back("k", cyclic(ctx, {"x", "y"}));
        out.push_back(c);
    }
    {
        auto base = RingContext::make(characteristic, {"x", "y", "z"}, order);
        auto ctx = base->with_potential(Poly::parse(base, "x^3 + y^3 + z^3"));
        CatalogCase c;
        c.name = "fermat3";
        c.description = "three variables, potential x^3 + y^3 + z^3";
        c.ctx = ctx;
        // x^3 + y^3 = (x+y)(x^2-x*y+y^2) glued with z*z^2
        RingMatrix e1 = RingMatrix::from_rows(
            ctx, {{Poly::parse(ctx, "x + y"), Poly::parse(ctx, "-z^2")},
                  {Poly::parse(ctx, "z"), Poly::parse(ctx, "x^2 - x*y + y^2")}});
        RingMatrix e0 = RingMatrix::from_rows(
            ctx, {{Poly::parse(ctx, "x^2 - x*y + y^2"), Poly::parse(ctx, "z^2")},
                  {Poly::parse(ctx, "-z"), Poly::parse(ctx, "x + y")}});
        c.mfs.emplace_back("F", MatrixFactorization::make(ctx, e1, e0, "F"));
        c.modules.emplace_back("mod", FPModuleR(ctx, 2, e1, Over::R));
        out.push_back(c);
    }
    return out;
}

Bundle catalog_bundle(const CatalogCase& c) {
    Bundle b;
    b.ctx = c.ctx;
    for (const auto& [name, e] : c.mfs) {
        b.mfs.emplace(name, e);
        b.items.emplace_back("mf", name);
    }
    for (const auto& [name, m] : c.modules) {
        b.modules.emplace(name, m);
        b.items.emplace_back("module", name);
    }
    return b;
}

} // namespace mfk
