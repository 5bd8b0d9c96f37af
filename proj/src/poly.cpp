#include "mfk/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace mfk {

Poly Poly::zero(const Ctx& ctx) {
    Poly f;
    f.ctx_ = ctx;
    return f;
}

Poly Poly::constant(const Ctx& ctx, std::int64_t c) {
    return monomial(ctx, Monomial(ctx->nvars(), 0), c);
}

Poly Poly::variable(const Ctx& ctx, std::size_t index) {
    if (index >= ctx->nvars()) throw ValidationError("variable index out of range");
    Monomial m(ctx->nvars(), 0);
    m[index] = 1;
    return monomial(ctx, std::move(m), 1);
}

Poly Poly::monomial(const Ctx& ctx, Monomial m, std::int64_t c) {
    if (m.size() != ctx->nvars()) throw ValidationError("monomial has wrong arity");
    Poly f;
    f.ctx_ = ctx;
    c = ctx->normalize(c);
    if (c != 0) f.terms_.push_back(Term{std::move(m), c});
    return f;
}

Poly Poly::from_terms(const Ctx& ctx, std::vector<Term> terms) {
    Poly f;
    f.ctx_ = ctx;
    for (auto& t : terms) t.coeff = ctx->normalize(t.coeff);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return ctx->compare(a.mono, b.mono) > 0;
    });
    f.terms_ = std::move(terms);
    f.normalize_sorted();
    return f;
}

void Poly::normalize_sorted() {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff = ctx_->add(out.back().coeff, t.coeff);
            if (out.back().coeff == 0) out.pop_back();
        } else if (t.coeff != 0) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_[0].mono) == 0);
}

std::int64_t Poly::constant_value() const {
    for (const auto& t : terms_)
        if (monomial_degree(t.mono) == 0) return t.coeff;
    return 0;
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw ValidationError("zero polynomial has no leading term");
    return terms_.front();
}

std::int64_t Poly::leading_coeff() const { return leading_term().coeff; }
const Monomial& Poly::leading_monomial() const { return leading_term().mono; }

std::uint64_t Poly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, monomial_degree(t.mono));
    return d;
}

Poly Poly::operator+(const Poly& o) const {
    require_compatible(*ctx_, *o.ctx_, "poly add");
    Poly r;
    r.ctx_ = ctx_;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ctx_->compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            std::int64_t s = ctx_->add(terms_[i].coeff, o.terms_[j].coeff);
            if (s != 0) r.terms_.push_back(Term{terms_[i].mono, s});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = ctx_->neg(t.coeff);
    return r;
}

Poly Poly::mul_term(const Monomial& m, std::int64_t c) const {
    Poly r;
    r.ctx_ = ctx_;
    c = ctx_->normalize(c);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::int64_t cc = ctx_->mul(t.coeff, c);
        if (cc != 0) r.terms_.push_back(Term{monomial_mul(t.mono, m), cc});
    }
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    require_compatible(*ctx_, *o.ctx_, "poly mul");
    auto cmp = [this](const Monomial& a, const Monomial& b) {
        return ctx_->compare(a, b) > 0;
    };
    std::map<Monomial, std::int64_t, decltype(cmp)> acc(cmp);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = monomial_mul(a.mono, b.mono);
            auto it = acc.find(m);
            std::int64_t c = ctx_->mul(a.coeff, b.coeff);
            if (it == acc.end()) {
                if (c != 0) acc.emplace(std::move(m), c);
            } else {
                it->second = ctx_->add(it->second, c);
                if (it->second == 0) acc.erase(it);
            }
        }
    }
    Poly r;
    r.ctx_ = ctx_;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms_.push_back(Term{m, c});
    return r;
}

Poly Poly::scale(std::int64_t c) const {
    Poly r;
    r.ctx_ = ctx_;
    c = ctx_->normalize(c);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::int64_t cc = ctx_->mul(t.coeff, c);
        if (cc != 0) r.terms_.push_back(Term{t.mono, cc});
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scale(ctx_->inv(leading_coeff()));
}

Poly Poly::pow(std::uint32_t k) const {
    Poly r = Poly::constant(ctx_, 1);
    Poly base = *this;
    while (k) {
        if (k & 1u) r = r * base;
        base = base * base;
        k >>= 1u;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].mono != o.terms_[i].mono)
            return false;
    return true;
}

int Poly::compare(const Poly& o) const {
    std::size_t n = std::min(terms_.size(), o.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = ctx_->compare(terms_[i].mono, o.terms_[i].mono);
        if (c != 0) return c;
        if (terms_[i].coeff != o.terms_[i].coeff)
            return terms_[i].coeff > o.terms_[i].coeff ? 1 : -1;
    }
    if (terms_.size() != o.terms_.size())
        return terms_.size() > o.terms_.size() ? 1 : -1;
    return 0;
}

namespace {

// Balanced coefficient display: values above p/2 print as negatives.
std::int64_t display_coeff(std::int64_t c, std::int64_t p) {
    return c > p / 2 ? c - p : c;
}

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1, col = 1;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            if (text[pos] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++pos;
        }
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    char get() {
        skip_ws();
        char c = text[pos++];
        ++col;
        return c;
    }

    std::int64_t integer() {
        skip_ws();
        std::int64_t v = 0;
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (v > (std::int64_t(1) << 53))
                throw ParseError("integer literal too large", line, col);
            v = v * 10 + (text[pos] - '0');
            ++pos;
            ++col;
        }
        if (pos == start) throw ParseError("expected integer", line, col);
        return v;
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() &&
            (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            ++pos;
            ++col;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                         text[pos] == '_')) {
                ++pos;
                ++col;
            }
        }
        if (pos == start) throw ParseError("expected identifier", line, col);
        return text.substr(start, pos - start);
    }
};

} // namespace

Poly Poly::parse(const Ctx& ctx, const std::string& text) {
    Lexer lx(text);
    Poly result = Poly::zero(ctx);
    bool first = true;
    while (!lx.eof()) {
        // sign
        std::int64_t sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            if (c == '-') sign = -1;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", lx.line, lx.col);
        }
        first = false;
        // term: factors separated by '*'
        std::int64_t coeff = ctx->normalize(sign);
        Monomial mono(ctx->nvars(), 0);
        bool saw_factor = false;
        for (;;) {
            char f = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                std::int64_t v = lx.integer();
                coeff = ctx->mul(coeff, ctx->normalize(v));
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
                int before_line = lx.line, before_col = lx.col;
                std::string name = lx.identifier();
                int idx = ctx->variable_index(name);
                if (idx < 0)
                    throw ParseError("unknown variable '" + name + "'", before_line, before_col);
                std::uint32_t e = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    std::int64_t v = lx.integer();
                    if (v < 0 || v > 1000000)
                        throw ParseError("exponent out of range", lx.line, lx.col);
                    e = static_cast<std::uint32_t>(v);
                }
                mono[static_cast<std::size_t>(idx)] += e;
                saw_factor = true;
            } else {
                throw ParseError("expected coefficient or variable", lx.line, lx.col);
            }
            if (lx.peek() == '*') {
                lx.get();
                continue;
            }
            break;
        }
        if (!saw_factor) throw ParseError("empty term", lx.line, lx.col);
        result = result + Poly::monomial(ctx, std::move(mono), coeff);
    }
    return result;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    const std::int64_t p = ctx_->characteristic();
    bool first = true;
    for (const auto& t : terms_) {
        std::int64_t c = display_coeff(t.coeff, p);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::int64_t abs_c = c < 0 ? -c : c;
        bool has_vars = monomial_degree(t.mono) > 0;
        if (abs_c != 1 || !has_vars) os << abs_c;
        bool need_star = abs_c != 1;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (need_star) os << "*";
            os << ctx_->variables()[i];
            if (t.mono[i] > 1) os << "^" << t.mono[i];
            need_star = true;
        }
    }
    return os.str();
}

} // namespace mfk
