#ifndef MFK_MF_HPP
#define MFK_MF_HPP

#include <optional>
#include <string>
#include <vector>

#include "mfk/fpmodule.hpp"
#include "mfk/modgb.hpp"

namespace mfk {

// A matrix factorization of W - w0: free modules E1, E0 of equal rank with
// maps e1 : E1 -> E0 and e0 : E0 -> E1 whose both composites are
// multiplication by wprime = W - w0.  Validated on construction.
class MatrixFactorization {
public:
    static MatrixFactorization make(const Ctx& ctx, RingMatrix e1, RingMatrix e0,
                                    std::string name = "");

    const Ctx& context() const { return ctx_; }
    std::size_t rank() const { return rank_; }
    const RingMatrix& e1() const { return e1_; }
    const RingMatrix& e0() const { return e0_; }
    const std::string& name() const { return name_; }
    void rename(std::string name) { name_ = std::move(name); }

    bool operator==(const MatrixFactorization& o) const {
        return e1_ == o.e1_ && e0_ == o.e0_;
    }

    MatrixFactorization() = default; // empty placeholder; use make()

private:
    Ctx ctx_;
    std::size_t rank_ = 0;
    RingMatrix e1_, e0_;
    std::string name_;
};

enum class TrivialOrientation { IdFirst, WFirst };

// The contractible pair (I, W') or (W', I) of the given rank.
MatrixFactorization trivial_pair(const Ctx& ctx, std::size_t rank,
                                 TrivialOrientation orientation);

// Degree-0 closed element of the hom complex: p1 : E1 -> F1, p0 : E0 -> F0
// with p1 e0 = f0 p0 and f1 p1 = p0 e1.  Validated on construction.
class MfMorphism {
public:
    static MfMorphism make(const MatrixFactorization& src, const MatrixFactorization& dst,
                           RingMatrix p1, RingMatrix p0);
    static MfMorphism identity(const MatrixFactorization& e);
    static MfMorphism zero(const MatrixFactorization& src, const MatrixFactorization& dst);

    const MatrixFactorization& src() const { return src_; }
    const MatrixFactorization& dst() const { return dst_; }
    const RingMatrix& p1() const { return p1_; }
    const RingMatrix& p0() const { return p0_; }

    MfMorphism operator+(const MfMorphism& o) const;
    MfMorphism operator-() const;
    MfMorphism scale(std::int64_t c) const;

    bool operator==(const MfMorphism& o) const { return p1_ == o.p1_ && p0_ == o.p0_; }

private:
    MfMorphism() = default;
    MatrixFactorization src_, dst_;
    RingMatrix p1_, p0_;
};

// q after p.
MfMorphism compose(const MfMorphism& p, const MfMorphism& q);

// Witness that a morphism is null-homotopic: s0 : E0 -> F1, s1 : E1 -> F0
// with p1 = f0 s1 + s0 e1 and p0 = s1 e0 + f1 s0.
struct HomotopyWitness {
    RingMatrix s0, s1;
};

bool witnesses(const HomotopyWitness& w, const MfMorphism& p);

struct HomotopyResult {
    std::optional<HomotopyWitness> witness;
    RingMatrix certificate; // nonzero normal form when no witness exists
    bool ok() const { return witness.has_value(); }
};

// Decides null-homotopy by one lift over S in the entries of (s0, s1).
HomotopyResult null_homotopy(const MfMorphism& p);

// Shift E[1] = (E0, E1; -e0, -e1); on morphisms it swaps the components.
MatrixFactorization shift(const MatrixFactorization& e);
MfMorphism shift(const MfMorphism& p);

struct DirectSum {
    MatrixFactorization sum;
    MfMorphism incl_left, incl_right;  // E -> E+F, F -> E+F
    MfMorphism proj_left, proj_right;  // E+F -> E, E+F -> F
};

DirectSum direct_sum(const MatrixFactorization& e, const MatrixFactorization& f);

struct ConeResult {
    MatrixFactorization cone;
    MfMorphism from_target;      // q = (id, 0) : F -> Cone(p)
    MfMorphism to_shifted_source; // r = (0, -id) : Cone(p) -> E[1]
};

ConeResult cone(const MfMorphism& p);

// Z/2-graded hom-complex element between fixed E and F: blocks
// block[i][j] : E_i -> F_j, supported on (i - j) = parity mod 2.
struct HomElement {
    int parity = 0;
    // indexed block[i][j]; off-parity blocks are zero matrices
    RingMatrix block[2][2];

    static HomElement degree0(const MatrixFactorization& e, const MatrixFactorization& f,
                              RingMatrix h11, RingMatrix h00);
    static HomElement degree1(const MatrixFactorization& e, const MatrixFactorization& f,
                              RingMatrix h10, RingMatrix h01);
};

// D h = f . h - (-1)^k h . e
HomElement hom_differential(const HomElement& h, const MatrixFactorization& e,
                            const MatrixFactorization& f);

// A finite complex of pairs: objects[0] -> objects[1] -> ... with each
// consecutive composite the zero morphism.
class PairComplex {
public:
    PairComplex(std::vector<MatrixFactorization> objects, std::vector<MfMorphism> diffs);

    const std::vector<MatrixFactorization>& objects() const { return objects_; }
    const std::vector<MfMorphism>& diffs() const { return diffs_; }
    bool is_complex() const { return is_complex_; }

private:
    std::vector<MatrixFactorization> objects_;
    std::vector<MfMorphism> diffs_;
    bool is_complex_ = false;
};

// Signed totalization of a complex of pairs into a single pair.
MatrixFactorization totalize(const PairComplex& c);

struct ContractibilityResult {
    bool contractible = false;
    std::optional<HomotopyWitness> witness;
};

ContractibilityResult is_contractible(const MatrixFactorization& e);

// p is invertible up to homotopy iff its cone is contractible.
bool is_homotopy_equivalence(const MfMorphism& p);

// dim_k H^0 of the hom complex: closed degree-0 elements modulo boundaries.
KDim hom_space_dimension(const MatrixFactorization& e, const MatrixFactorization& f);

} // namespace mfk

#endif
