#include "mfk/ring.hpp"

#include <algorithm>
#include <set>

#include "mfk/poly.hpp"

namespace mfk {

Limits& engine_limits() {
    static Limits limits;
    return limits;
}

std::uint64_t monomial_degree(const Monomial& m) {
    std::uint64_t d = 0;
    for (auto e : m) d += e;
    return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool monomial_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::shared_ptr<const RingContext> RingContext::make(std::int64_t characteristic,
                                                     std::vector<std::string> variables,
                                                     MonomialOrder order) {
    if (!is_prime(characteristic))
        throw ValidationError("characteristic " + std::to_string(characteristic) + " is not prime");
    if (variables.empty())
        throw ValidationError("ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw ValidationError("empty variable name");
        if (!seen.insert(v).second)
            throw ValidationError("duplicate variable name '" + v + "'");
    }
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->p_ = characteristic;
    ctx->vars_ = std::move(variables);
    ctx->order_ = order;
    return ctx;
}

std::shared_ptr<const RingContext> RingContext::with_potential(const Poly& potential,
                                                               std::int64_t w0) const {
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->p_ = p_;
    ctx->vars_ = vars_;
    ctx->order_ = order_;
    ctx->w0_ = normalize(w0);
    Poly w = potential - Poly::constant(potential.context(), ctx->w0_);
    if (w.is_zero() || w.is_constant())
        throw ValidationError("potential minus critical value must be nonconstant");
    ctx->potential_ = std::make_unique<Poly>(potential);
    ctx->wprime_ = std::make_unique<Poly>(w);
    return ctx;
}

RingContext::~RingContext() = default;

bool RingContext::has_potential() const { return potential_ != nullptr; }

const Poly& RingContext::potential() const {
    if (!potential_) throw ValidationError("ring context has no potential");
    return *potential_;
}

const Poly& RingContext::wprime() const {
    if (!wprime_) throw ValidationError("ring context has no potential");
    return *wprime_;
}

int RingContext::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

std::int64_t RingContext::normalize(std::int64_t c) const {
    c %= p_;
    if (c < 0) c += p_;
    return c;
}

std::int64_t RingContext::add(std::int64_t a, std::int64_t b) const {
    std::int64_t r = a + b;
    if (r >= p_) r -= p_;
    return r;
}

std::int64_t RingContext::sub(std::int64_t a, std::int64_t b) const {
    std::int64_t r = a - b;
    if (r < 0) r += p_;
    return r;
}

std::int64_t RingContext::mul(std::int64_t a, std::int64_t b) const {
    return (a * b) % p_;
}

std::int64_t RingContext::neg(std::int64_t a) const {
    return a == 0 ? 0 : p_ - a;
}

std::int64_t RingContext::inv(std::int64_t a) const {
    if (a == 0) throw ValidationError("division by zero in F_p");
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return normalize(t);
}

std::int64_t RingContext::div(std::int64_t a, std::int64_t b) const {
    return mul(a, inv(b));
}

int RingContext::compare(const Monomial& a, const Monomial& b) const {
    if (order_ == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        }
        return 0;
    }
    // grevlex: higher total degree wins; on ties the rightmost differing
    // exponent decides, smaller exponent winning.
    std::uint64_t da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

bool RingContext::compatible_with(const RingContext& other) const {
    return p_ == other.p_ && order_ == other.order_ && vars_ == other.vars_;
}

void require_compatible(const RingContext& a, const RingContext& b, const char* where) {
    if (!a.compatible_with(b))
        throw ContextMismatchError(std::string(where) + ": operands from different rings");
}

} // namespace mfk
