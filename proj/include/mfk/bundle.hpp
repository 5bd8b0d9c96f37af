#ifndef MFK_BUNDLE_HPP
#define MFK_BUNDLE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mfk/singcat.hpp"

namespace mfk {

// A named collection over one ring: matrix factorizations, pair morphisms,
// and finitely presented modules, as read from the line-oriented bundle
// format.  Everything is validated on load.
struct Bundle {
    Ctx ctx;
    std::map<std::string, MatrixFactorization> mfs;
    std::map<std::string, MfMorphism> morphisms;
    std::map<std::string, FPModuleR> modules;
    std::vector<std::pair<std::string, std::string>> items; // (kind, name), file order

    const MatrixFactorization& mf(const std::string& name) const;
    const MfMorphism& morphism(const std::string& name) const;
    const FPModuleR& module(const std::string& name) const;
    bool has(const std::string& name) const;

    std::string str() const;
    bool operator==(const Bundle& o) const;
};

// Grammar (one directive per line, '#' starts a comment):
//   ring <p> <var> ...
//   potential <poly>
//   value <w0>
//   mf <name> <r>          followed by r rows of e1, a "/" line, r rows of e0
//   morphism <name> <src> <dst>   p1 rows, "/", p0 rows
//   module <name> <g>      relation columns, one per line, until a blank
//                          line or the next directive
// Matrix rows are comma-separated polynomial expressions.
Bundle parse_bundle(const std::string& text,
                    MonomialOrder order = MonomialOrder::Grevlex);

std::vector<std::string> mf_block(const std::string& name, const MatrixFactorization& e);
std::vector<std::string> module_block(const std::string& name, const FPModuleR& m);
std::vector<std::string> morphism_block(const std::string& name, const MfMorphism& p);

} // namespace mfk

#endif
