#include "mfk/bundle.hpp"

#include <sstream>

namespace mfk {

namespace {

struct Line {
    std::string text;
    int number;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream is(text);
    std::string l;
    int n = 0;
    while (std::getline(is, l)) {
        ++n;
        auto hash = l.find('#');
        if (hash != std::string::npos) l.erase(hash);
        // trim
        auto b = l.find_first_not_of(" \t\r");
        auto e = l.find_last_not_of(" \t\r");
        lines.push_back({b == std::string::npos ? "" : l.substr(b, e - b + 1), n});
    }
    return lines;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

bool is_directive(const std::string& line) {
    auto w = split_ws(line);
    if (w.empty()) return false;
    return w[0] == "ring" || w[0] == "potential" || w[0] == "value" || w[0] == "mf" ||
           w[0] == "morphism" || w[0] == "module";
}

std::vector<Poly> parse_row(const Ctx& ctx, const Line& line, std::size_t expect) {
    std::vector<Poly> row;
    std::string cur;
    std::istringstream is(line.text);
    while (std::getline(is, cur, ',')) {
        try {
            row.push_back(Poly::parse(ctx, cur));
        } catch (const ParseError& e) {
            throw ParseError(std::string("bad entry: ") + e.what(), line.number, 1);
        }
    }
    if (expect != 0 && row.size() != expect)
        throw ParseError("expected " + std::to_string(expect) + " entries, got " +
                             std::to_string(row.size()),
                         line.number, 1);
    return row;
}

} // namespace

const MatrixFactorization& Bundle::mf(const std::string& name) const {
    auto it = mfs.find(name);
    if (it == mfs.end()) throw ValidationError("no matrix factorization named '" + name + "'");
    return it->second;
}

const MfMorphism& Bundle::morphism(const std::string& name) const {
    auto it = morphisms.find(name);
    if (it == morphisms.end()) throw ValidationError("no morphism named '" + name + "'");
    return it->second;
}

const FPModuleR& Bundle::module(const std::string& name) const {
    auto it = modules.find(name);
    if (it == modules.end()) throw ValidationError("no module named '" + name + "'");
    return it->second;
}

bool Bundle::has(const std::string& name) const {
    return mfs.count(name) || morphisms.count(name) || modules.count(name);
}

Bundle parse_bundle(const std::string& text, MonomialOrder order) {
    std::vector<Line> lines = split_lines(text);
    Bundle b;
    std::size_t i = 0;
    std::int64_t w0 = 0;
    bool have_potential = false;
    std::string potential_text;
    int potential_line = 0;

    auto need_ctx = [&](const Line& at) -> const Ctx& {
        if (!b.ctx) throw ParseError("directive before the ring line", at.number, 1);
        return b.ctx;
    };
    auto need_potential = [&](const Line& at) {
        if (!b.ctx) throw ParseError("directive before the ring line", at.number, 1);
        if (have_potential && !b.ctx->has_potential()) {
            try {
                Poly w = Poly::parse(b.ctx, potential_text);
                b.ctx = b.ctx->with_potential(w, w0);
            } catch (const ValidationError& e) {
                throw ParseError(e.what(), potential_line, 1);
            }
        }
        if (!b.ctx->has_potential())
            throw ParseError("objects need a potential; add a `potential` line", at.number, 1);
    };
    auto check_fresh_name = [&](const std::string& name, const Line& at) {
        if (b.has(name)) throw ParseError("duplicate name '" + name + "'", at.number, 1);
    };
    auto take_matrix = [&](std::size_t rows, std::size_t cols) {
        std::vector<std::vector<Poly>> rws;
        for (std::size_t r = 0; r < rows; ++r) {
            while (i < lines.size() && lines[i].text.empty()) ++i;
            if (i >= lines.size())
                throw ParseError("unexpected end of file inside a matrix block",
                                 lines.empty() ? 1 : lines.back().number, 1);
            rws.push_back(parse_row(b.ctx, lines[i], cols));
            ++i;
        }
        return RingMatrix::from_rows(b.ctx, rws);
    };
    auto take_slash = [&]() {
        while (i < lines.size() && lines[i].text.empty()) ++i;
        if (i >= lines.size() || lines[i].text != "/")
            throw ParseError("expected '/' between the two matrices",
                             i < lines.size() ? lines[i].number : 1, 1);
        ++i;
    };

    while (i < lines.size()) {
        const Line& line = lines[i];
        if (line.text.empty()) {
            ++i;
            continue;
        }
        auto words = split_ws(line.text);
        const std::string& kw = words[0];
        if (kw == "ring") {
            if (b.ctx) throw ParseError("duplicate ring line", line.number, 1);
            if (words.size() < 3)
                throw ParseError("usage: ring <p> <var> ...", line.number, 1);
            std::int64_t p = 0;
            try {
                p = std::stoll(words[1]);
            } catch (...) {
                throw ParseError("bad characteristic '" + words[1] + "'", line.number, 1);
            }
            std::vector<std::string> vars(words.begin() + 2, words.end());
            try {
                b.ctx = RingContext::make(p, vars, order);
            } catch (const ValidationError& e) {
                throw ParseError(e.what(), line.number, 1);
            }
            ++i;
        } else if (kw == "potential") {
            need_ctx(line);
            if (have_potential) throw ParseError("duplicate potential line", line.number, 1);
            potential_text = line.text.substr(std::string("potential").size());
            have_potential = true;
            potential_line = line.number;
            ++i;
        } else if (kw == "value") {
            need_ctx(line);
            if (b.ctx->has_potential())
                throw ParseError("value must come before the first object", line.number, 1);
            if (words.size() != 2) throw ParseError("usage: value <w0>", line.number, 1);
            try {
                w0 = std::stoll(words[1]);
            } catch (...) {
                throw ParseError("bad critical value", line.number, 1);
            }
            ++i;
        } else if (kw == "mf") {
            need_potential(line);
            if (words.size() != 3) throw ParseError("usage: mf <name> <r>", line.number, 1);
            const std::string& name = words[1];
            check_fresh_name(name, line);
            std::size_t r = 0;
            try {
                r = static_cast<std::size_t>(std::stoull(words[2]));
            } catch (...) {
                throw ParseError("bad rank", line.number, 1);
            }
            ++i;
            RingMatrix e1 = take_matrix(r, r);
            take_slash();
            RingMatrix e0 = take_matrix(r, r);
            try {
                b.mfs.emplace(name, MatrixFactorization::make(b.ctx, e1, e0, name));
            } catch (const Error& e) {
                throw ValidationError("mf '" + name + "' (line " + std::to_string(line.number) +
                                      "): " + e.what());
            }
            b.items.emplace_back("mf", name);
        } else if (kw == "morphism") {
            need_potential(line);
            if (words.size() != 4)
                throw ParseError("usage: morphism <name> <src> <dst>", line.number, 1);
            const std::string& name = words[1];
            check_fresh_name(name, line);
            auto src_it = b.mfs.find(words[2]);
            auto dst_it = b.mfs.find(words[3]);
            if (src_it == b.mfs.end() || dst_it == b.mfs.end())
                throw ParseError("morphism endpoints must name earlier mf blocks", line.number, 1);
            ++i;
            RingMatrix p1 = take_matrix(dst_it->second.rank(), src_it->second.rank());
            take_slash();
            RingMatrix p0 = take_matrix(dst_it->second.rank(), src_it->second.rank());
            try {
                b.morphisms.emplace(
                    name, MfMorphism::make(src_it->second, dst_it->second, p1, p0));
            } catch (const Error& e) {
                throw ValidationError("morphism '" + name + "' (line " +
                                      std::to_string(line.number) + "): " + e.what());
            }
            b.items.emplace_back("morphism", name);
        } else if (kw == "module") {
            need_potential(line);
            if (words.size() != 3) throw ParseError("usage: module <name> <g>", line.number, 1);
            const std::string& name = words[1];
            check_fresh_name(name, line);
            std::size_t g = 0;
            try {
                g = static_cast<std::size_t>(std::stoull(words[2]));
            } catch (...) {
                throw ParseError("bad generator count", line.number, 1);
            }
            ++i;
            std::vector<std::vector<Poly>> cols;
            while (i < lines.size() && !lines[i].text.empty() && !is_directive(lines[i].text))
                cols.push_back(parse_row(b.ctx, lines[i++], g));
            RingMatrix pres(b.ctx, g, cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j)
                for (std::size_t rix = 0; rix < g; ++rix) pres.set(rix, j, cols[j][rix]);
            b.modules.emplace(name, FPModuleR(b.ctx, g, pres, Over::R));
            b.items.emplace_back("module", name);
        } else {
            throw ParseError("unknown directive '" + kw + "'", line.number, 1);
        }
    }
    if (!b.ctx) throw ParseError("bundle has no ring line", 1, 1);
    return b;
}

std::vector<std::string> mf_block(const std::string& name, const MatrixFactorization& e) {
    std::vector<std::string> out;
    out.push_back("mf " + name + " " + std::to_string(e.rank()));
    for (const auto& r : e.e1().row_strings()) out.push_back(r);
    out.push_back("/");
    for (const auto& r : e.e0().row_strings()) out.push_back(r);
    return out;
}

std::vector<std::string> morphism_block(const std::string& name, const MfMorphism& p) {
    std::vector<std::string> out;
    out.push_back("morphism " + name + " " + p.src().name() + " " + p.dst().name());
    for (const auto& r : p.p1().row_strings()) out.push_back(r);
    out.push_back("/");
    for (const auto& r : p.p0().row_strings()) out.push_back(r);
    return out;
}

std::vector<std::string> module_block(const std::string& name, const FPModuleR& m) {
    std::vector<std::string> out;
    out.push_back("module " + name + " " + std::to_string(m.generators()));
    const RingMatrix& p = m.presentation();
    for (std::size_t j = 0; j < p.cols(); ++j) {
        std::ostringstream os;
        for (std::size_t i = 0; i < p.rows(); ++i) {
            if (i) os << ", ";
            os << p.at(i, j).str();
        }
        out.push_back(os.str());
    }
    return out;
}

std::string Bundle::str() const {
    std::ostringstream os;
    os << "ring " << ctx->characteristic();
    for (const auto& v : ctx->variables()) os << " " << v;
    os << "\n";
    if (ctx->has_potential()) {
        os << "potential " << ctx->potential().str() << "\n";
        if (ctx->critical_value() != 0) os << "value " << ctx->critical_value() << "\n";
    }
    for (const auto& [kind, name] : items) {
        os << "\n";
        std::vector<std::string> block;
        if (kind == "mf")
            block = mf_block(name, mfs.at(name));
        else if (kind == "morphism")
            block = morphism_block(name, morphisms.at(name));
        else
            block = module_block(name, modules.at(name));
        for (const auto& l : block) os << l << "\n";
    }
    return os.str();
}

bool Bundle::operator==(const Bundle& o) const {
    if (items != o.items) return false;
    if (!ctx->compatible_with(*o.ctx)) return false;
    if (ctx->has_potential() != o.ctx->has_potential()) return false;
    if (ctx->has_potential() &&
        (!(ctx->wprime() == o.ctx->wprime()) || ctx->critical_value() != o.ctx->critical_value()))
        return false;
    for (const auto& [name, e] : mfs) {
        auto it = o.mfs.find(name);
        if (it == o.mfs.end() || !(it->second == e)) return false;
    }
    for (const auto& [name, p] : morphisms) {
        auto it = o.morphisms.find(name);
        if (it == o.morphisms.end() || !(it->second == p)) return false;
    }
    for (const auto& [name, m] : modules) {
        auto it = o.modules.find(name);
        if (it == o.modules.end() || it->second.generators() != m.generators() ||
            it->second.presentation() != m.presentation())
            return false;
    }
    return true;
}

} // namespace mfk
