#ifndef MFK_CATALOG_HPP
#define MFK_CATALOG_HPP

#include <string>
#include <utility>
#include <vector>

#include "mfk/bundle.hpp"

namespace mfk {

// One shipped example: a potential with a set of matrix factorizations and
// modules over its fiber ring.
struct CatalogCase {
    std::string name;
    std::string description;
    Ctx ctx;
    std::vector<std::pair<std::string, MatrixFactorization>> mfs;
    std::vector<std::pair<std::string, FPModuleR>> modules;
};

// A-series potentials x^{n+1} for n in {2,3,5}, the node xy, the cusp
// x^3 - y^2, and the Fermat cubic x^3 + y^3 + z^3.
std::vector<CatalogCase> build_catalog(std::int64_t characteristic = 32003,
                                       MonomialOrder order = MonomialOrder::Grevlex);

// The catalog case rendered as a bundle (parsable with the CLI).
Bundle catalog_bundle(const CatalogCase& c);

} // namespace mfk

#endif
