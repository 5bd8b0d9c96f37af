#ifndef MFK_RING_HPP
#define MFK_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfk/errors.hpp"

namespace mfk {

class Poly;

// Exponent vector; length equals the number of ring variables.
using Monomial = std::vector<std::uint32_t>;

enum class MonomialOrder { Grevlex, Lex };

// Which ring a module-level computation runs over: the polynomial ring S
// itself, or the hypersurface quotient R = S/(W - w0).
enum class Over { S, R };

// Process-wide resource caps, set once by the CLI before any work starts.
struct Limits {
    std::size_t max_pairs = 200000; // Buchberger pair-queue bound
    std::size_t max_resolution = 50;
};

Limits& engine_limits();

std::uint64_t monomial_degree(const Monomial& m);
bool monomial_divides(const Monomial& a, const Monomial& b); // a | b
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b); // requires b | a
Monomial monomial_lcm(const Monomial& a, const Monomial& b);
bool monomial_coprime(const Monomial& a, const Monomial& b);

// The ambient data every value carries: prime field F_p, named variables,
// a monomial order, and (optionally) a potential W with critical value w0.
// Instances are immutable; polynomials and matrices hold shared pointers.
class RingContext {
public:
    static constexpr std::int64_t kDefaultCharacteristic = 32003;

    static std::shared_ptr<const RingContext> make(
        std::int64_t characteristic,
        std::vector<std::string> variables,
        MonomialOrder order = MonomialOrder::Grevlex);

    // Returns a copy of this context carrying potential W and critical value
    // w0.  Enforces that W - w0 is nonconstant.  The stored polynomial
    // wprime() = W - w0 is what all quotient-ring computations use.
    std::shared_ptr<const RingContext> with_potential(const Poly& potential,
                                                      std::int64_t w0 = 0) const;

    std::int64_t characteristic() const { return p_; }
    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    MonomialOrder order() const { return order_; }

    bool has_potential() const;
    const Poly& potential() const; // throws if absent
    std::int64_t critical_value() const { return w0_; }
    const Poly& wprime() const; // W - w0; throws if absent

    int variable_index(const std::string& name) const; // -1 if unknown

    // Field arithmetic on canonical representatives in [0, p).
    std::int64_t normalize(std::int64_t c) const;
    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const;
    std::int64_t neg(std::int64_t a) const;
    std::int64_t inv(std::int64_t a) const;
    std::int64_t div(std::int64_t a, std::int64_t b) const;

    // <0, 0, >0 as a <, =, > b in the ring's monomial order.
    int compare(const Monomial& a, const Monomial& b) const;

    // Two contexts are compatible when polynomials can be mixed: same
    // characteristic, variables, and order.  The potential may differ.
    bool compatible_with(const RingContext& other) const;

    ~RingContext();

private:
    RingContext() = default;

    std::int64_t p_ = kDefaultCharacteristic;
    std::vector<std::string> vars_;
    MonomialOrder order_ = MonomialOrder::Grevlex;
    std::unique_ptr<Poly> potential_;
    std::unique_ptr<Poly> wprime_;
    std::int64_t w0_ = 0;
};

using Ctx = std::shared_ptr<const RingContext>;

void require_compatible(const RingContext& a, const RingContext& b,
                        const char* where);

bool is_prime(std::int64_t n);

} // namespace mfk

#endif
