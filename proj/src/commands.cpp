#include "mfk/commands.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "mfk/catalog.hpp"

namespace mfk {

namespace {

// input problems that map to exit code 1
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

struct Config {
    bool json = false;
    std::int64_t field_char = RingContext::kDefaultCharacteristic;
    MonomialOrder order = MonomialOrder::Grevlex;
};

struct ReportRow {
    std::string case_name, op, expected, got;
    bool pass = true;
};

struct Report {
    std::vector<ReportRow> rows;
    std::vector<std::string> plain; // extra human-readable lines

    void add(std::string case_name, std::string op, std::string expected, std::string got,
             bool pass) {
        rows.push_back({std::move(case_name), std::move(op), std::move(expected),
                        std::move(got), pass});
    }
    void info(std::string case_name, std::string op, std::string got) {
        add(std::move(case_name), std::move(op), "", std::move(got), true);
    }
    void line(std::string l) { plain.push_back(std::move(l)); }

    bool all_pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }

    void emit(bool json, std::ostream& out) const {
        if (json) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (const auto& r : rows) {
                nlohmann::ordered_json row;
                row["case"] = r.case_name;
                row["op"] = r.op;
                row["expected"] = r.expected;
                row["got"] = r.got;
                row["pass"] = r.pass;
                arr.push_back(row);
            }
            out << arr.dump(2) << "\n";
            return;
        }
        for (const auto& l : plain) out << l << "\n";
        for (const auto& r : rows) {
            out << (r.pass ? "PASS" : "FAIL") << "  " << r.case_name << "  " << r.op;
            if (!r.expected.empty()) out << "  expected=" << r.expected;
            if (!r.got.empty()) out << "  got=" << r.got;
            out << "\n";
        }
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open bundle file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Bundle load_bundle(const std::string& path, const Config& cfg) {
    return parse_bundle(read_file(path), cfg.order);
}

const MatrixFactorization& want_mf(const Bundle& b, const std::string& name) {
    auto it = b.mfs.find(name);
    if (it == b.mfs.end()) throw UsageError("unknown matrix factorization '" + name + "'");
    return it->second;
}

const MfMorphism& want_morphism(const Bundle& b, const std::string& name) {
    auto it = b.morphisms.find(name);
    if (it == b.morphisms.end()) throw UsageError("unknown morphism '" + name + "'");
    return it->second;
}

// modules may be named directly or induced from a matrix factorization
FPModuleR want_module(const Bundle& b, const std::string& name) {
    auto it = b.modules.find(name);
    if (it != b.modules.end()) return it->second;
    auto mf_it = b.mfs.find(name);
    if (mf_it != b.mfs.end()) return cok(mf_it->second);
    throw UsageError("unknown module '" + name + "'");
}

void print_block(Report& rep, const std::vector<std::string>& block) {
    for (const auto& l : block) rep.line(l);
}

std::string dim_str(const KDim& d) { return d.str(); }

void run_catalog_case(const CatalogCase& c, Report& rep, bool table_only) {
    // validity is established by construction; record it
    for (const auto& [name, e] : c.mfs) {
        std::string id = c.name + "." + name;
        rep.add(id, "check", "valid", "valid", true);
        rep.add(id, "periodicity", "image(e0)=ker(e1)",
                two_periodicity_check(e) ? "equal" : "differs", two_periodicity_check(e));
        bool sigma = sigma_reflects_zero_check(e);
        rep.add(id, "sigma-zero", "contractible iff stable End = 0", sigma ? "agree" : "differ",
                sigma);
        bool rt = roundtrip_check(e);
        rep.add(id, "roundtrip", "stabilize(cok E) ~ E", rt ? "equivalent" : "inequivalent", rt);
    }
    for (const auto& [name, m] : c.modules) {
        std::string id = c.name + "." + name;
        MatrixFactorization st = stabilize(m);
        rep.add(id, "stabilize", "valid pair", "valid", true);
        bool rt = st.rank() == 0 ? true : roundtrip_check(st);
        rep.add(id, "roundtrip", "stabilize round trip", rt ? "equivalent" : "inequivalent", rt);
    }
    // hom-dimension agreement on all ordered pairs including shifts
    std::vector<std::pair<std::string, MatrixFactorization>> objs;
    for (const auto& [name, e] : c.mfs) {
        objs.emplace_back(name, e);
        objs.emplace_back(name + "[1]", shift(e));
    }
    if (table_only) {
        std::ostringstream head;
        head << "hom-dimension table for " << c.name << ":";
        rep.line(head.str());
    }
    for (const auto& [na, ea] : objs) {
        std::ostringstream tr;
        for (const auto& [nb, eb] : objs) {
            FFReport r = verify_fully_faithful(ea, eb);
            std::string id = c.name + "." + na + "," + nb;
            bool pass = r.verdict == FFVerdict::Pass;
            rep.add(id, "verify-ff", r.module_side.str(), r.mf_side.str(), pass);
            tr << (tr.str().empty() ? "" : " ") << r.mf_side.str();
        }
        if (table_only) rep.line("  " + na + ": " + tr.str());
    }
}

int run(const Config& cfg, std::vector<std::string> pos, std::ostream& out) {
    Report rep;
    const std::string cmd = pos.empty() ? "" : pos[0];
    pos.erase(pos.begin(), pos.begin() + (pos.empty() ? 0 : 1));

    auto arity = [&](std::size_t lo, std::size_t hi, const char* use) {
        if (pos.size() < lo || pos.size() > hi)
            throw UsageError(std::string("usage: ") + use);
    };

    if (cmd == "check") {
        arity(1, 1, "check <bundle>");
        Bundle b = load_bundle(pos[0], cfg);
        std::ostringstream os;
        os << "OK p=" << b.ctx->characteristic() << " vars=";
        for (std::size_t i = 0; i < b.ctx->nvars(); ++i)
            os << (i ? "," : "") << b.ctx->variables()[i];
        if (b.ctx->has_potential()) os << " potential=" << b.ctx->potential().str();
        os << " mfs=" << b.mfs.size() << " morphisms=" << b.morphisms.size()
           << " modules=" << b.modules.size();
        rep.line(os.str());
        rep.info(pos[0], "check", "ok");
    } else if (cmd == "shift") {
        arity(2, 2, "shift <bundle> <mf>");
        Bundle b = load_bundle(pos[0], cfg);
        print_block(rep, mf_block(pos[1] + "[1]", shift(want_mf(b, pos[1]))));
        rep.info(pos[1], "shift", "ok");
    } else if (cmd == "sum") {
        arity(3, 3, "sum <bundle> <mf> <mf>");
        Bundle b = load_bundle(pos[0], cfg);
        DirectSum ds = direct_sum(want_mf(b, pos[1]), want_mf(b, pos[2]));
        print_block(rep, mf_block(pos[1] + "+" + pos[2], ds.sum));
        rep.info(pos[1] + "," + pos[2], "sum", "rank " + std::to_string(ds.sum.rank()));
    } else if (cmd == "cone") {
        arity(2, 2, "cone <bundle> <morphism>");
        Bundle b = load_bundle(pos[0], cfg);
        ConeResult cr = cone(want_morphism(b, pos[1]));
        print_block(rep, mf_block("Cone(" + pos[1] + ")", cr.cone));
        rep.info(pos[1], "cone", "rank " + std::to_string(cr.cone.rank()));
    } else if (cmd == "totalize") {
        arity(2, 64, "totalize <bundle> <morphism> [<morphism> ...]");
        Bundle b = load_bundle(pos[0], cfg);
        std::vector<MfMorphism> diffs;
        for (std::size_t i = 1; i < pos.size(); ++i) diffs.push_back(want_morphism(b, pos[i]));
        std::vector<MatrixFactorization> objs;
        objs.push_back(diffs[0].src());
        for (const auto& d : diffs) {
            if (!(d.src() == objs.back()))
                throw UsageError("morphisms do not chain into a complex");
            objs.push_back(d.dst());
        }
        MatrixFactorization t = totalize(PairComplex(objs, diffs));
        print_block(rep, mf_block("T", t));
        rep.info("complex", "totalize", "rank " + std::to_string(t.rank()));
    } else if (cmd == "homotopy") {
        arity(2, 2, "homotopy <bundle> <morphism>");
        Bundle b = load_bundle(pos[0], cfg);
        HomotopyResult h = null_homotopy(want_morphism(b, pos[1]));
        if (h.ok()) {
            rep.line("NULL-HOMOTOPIC");
            rep.line("s0:");
            for (const auto& r : h.witness->s0.row_strings()) rep.line("  " + r);
            rep.line("s1:");
            for (const auto& r : h.witness->s1.row_strings()) rep.line("  " + r);
            rep.info(pos[1], "homotopy", "null-homotopic");
        } else {
            rep.line("NOT NULL-HOMOTOPIC");
            rep.line("certificate:");
            for (const auto& r : h.certificate.row_strings()) rep.line("  " + r);
            rep.info(pos[1], "homotopy", "not null-homotopic");
        }
    } else if (cmd == "contract") {
        arity(2, 2, "contract <bundle> <mf>");
        Bundle b = load_bundle(pos[0], cfg);
        ContractibilityResult r = is_contractible(want_mf(b, pos[1]));
        if (r.contractible) {
            rep.line("CONTRACTIBLE");
            rep.line("s0:");
            for (const auto& row : r.witness->s0.row_strings()) rep.line("  " + row);
            rep.line("s1:");
            for (const auto& row : r.witness->s1.row_strings()) rep.line("  " + row);
        } else {
            rep.line("NOT CONTRACTIBLE");
        }
        rep.info(pos[1], "contract", r.contractible ? "contractible" : "not contractible");
    } else if (cmd == "homdim") {
        arity(3, 3, "homdim <bundle> <mf> <mf>");
        Bundle b = load_bundle(pos[0], cfg);
        KDim d = hom_space_dimension(want_mf(b, pos[1]), want_mf(b, pos[2]));
        rep.line(dim_str(d));
        rep.info(pos[1] + "," + pos[2], "homdim", dim_str(d));
    } else if (cmd == "cok") {
        arity(2, 2, "cok <bundle> <mf>");
        Bundle b = load_bundle(pos[0], cfg);
        print_block(rep, module_block("cok(" + pos[1] + ")", cok(want_mf(b, pos[1]))));
        rep.info(pos[1], "cok", "ok");
    } else if (cmd == "syzygy") {
        arity(2, 2, "syzygy <bundle> <module>");
        Bundle b = load_bundle(pos[0], cfg);
        FPModuleR s = syzygy_R(want_module(b, pos[1]));
        print_block(rep, module_block("syzygy(" + pos[1] + ")", s));
        rep.info(pos[1], "syzygy", std::to_string(s.generators()) + " generators");
    } else if (cmd == "resolve") {
        arity(2, 3, "resolve <bundle> <module> [length]");
        Bundle b = load_bundle(pos[0], cfg);
        std::size_t len = 2 * b.ctx->nvars() + 4;
        if (pos.size() == 3) {
            try {
                len = static_cast<std::size_t>(std::stoull(pos[2]));
            } catch (...) {
                throw UsageError("bad resolution length");
            }
        }
        ResolutionR res = free_resolution_R(want_module(b, pos[1]), len);
        std::ostringstream rk;
        rk << "ranks:";
        for (auto r : res.ranks()) rk << " " << r;
        rep.line(rk.str());
        rep.line(res.periodic_from()
                     ? "periodic_from: " + std::to_string(*res.periodic_from())
                     : "periodic_from: none detected");
        for (std::size_t k = 0; k < res.maps().size(); ++k) {
            rep.line("d" + std::to_string(k + 1) + ":");
            for (const auto& r : res.maps()[k].row_strings()) rep.line("  " + r);
        }
        rep.info(pos[1], "resolve",
                 res.periodic_from() ? "periodic_from " + std::to_string(*res.periodic_from())
                                     : "aperiodic");
    } else if (cmd == "mcm") {
        arity(2, 2, "mcm <bundle> <module>");
        Bundle b = load_bundle(pos[0], cfg);
        bool ok = mcm_check(want_module(b, pos[1]));
        rep.line(ok ? "MCM" : "NOT MCM");
        rep.info(pos[1], "mcm", ok ? "mcm" : "not mcm");
    } else if (cmd == "stabilize") {
        arity(2, 2, "stabilize <bundle> <module>");
        Bundle b = load_bundle(pos[0], cfg);
        MatrixFactorization st = stabilize(want_module(b, pos[1]));
        print_block(rep, mf_block("stabilize(" + pos[1] + ")", st));
        rep.info(pos[1], "stabilize", "rank " + std::to_string(st.rank()));
    } else if (cmd == "transport") {
        arity(3, 64, "transport <bundle> <F> <E> [entry ...]");
        Bundle b = load_bundle(pos[0], cfg);
        const MatrixFactorization& f = want_mf(b, pos[1]);
        const MatrixFactorization& e = want_mf(b, pos[2]);
        RingMatrix a(b.ctx, e.rank(), f.rank());
        if (pos.size() == 3) {
            if (e.rank() != f.rank())
                throw UsageError("transport without entries needs equal ranks (identity)");
            a = RingMatrix::identity(b.ctx, e.rank());
        } else {
            if (pos.size() - 3 != e.rank() * f.rank())
                throw UsageError("transport needs rank(E)*rank(F) entries, row-major");
            for (std::size_t i = 0; i < e.rank(); ++i)
                for (std::size_t j = 0; j < f.rank(); ++j)
                    a.set(i, j, Poly::parse(b.ctx, pos[3 + i * f.rank() + j]));
        }
        TransportResult tr = transport_morphism(a, f, e);
        tr.source.rename("Fprime");
        print_block(rep, mf_block("Fprime", tr.source));
        rep.line("");
        print_block(rep, morphism_block("p", tr.to_e));
        rep.line("");
        print_block(rep, morphism_block("s", tr.to_f));
        rep.info(pos[1] + "->" + pos[2], "transport", "rank " + std::to_string(tr.source.rank()));
    } else if (cmd == "stablehom") {
        arity(3, 3, "stablehom <bundle> <module> <module>");
        Bundle b = load_bundle(pos[0], cfg);
        StableHomResult sh =
            stable_hom_dimension(want_module(b, pos[1]), want_module(b, pos[2]));
        rep.line(dim_str(sh.dimension));
        for (const auto& g : sh.generators) {
            rep.line("generator:");
            for (const auto& r : g.row_strings()) rep.line("  " + r);
        }
        rep.info(pos[1] + "," + pos[2], "stablehom", dim_str(sh.dimension));
    } else if (cmd == "verify-ff") {
        arity(3, 3, "verify-ff <bundle> <mf> <mf>");
        Bundle b = load_bundle(pos[0], cfg);
        FFReport r = verify_fully_faithful(want_mf(b, pos[1]), want_mf(b, pos[2]));
        rep.line(r.str());
        rep.add(pos[1] + "," + pos[2], "verify-ff", r.module_side.str(), r.mf_side.str(),
                r.verdict == FFVerdict::Pass);
    } else if (cmd == "catalog") {
        std::optional<std::string> only;
        for (std::size_t i = 0; i < pos.size(); ++i) {
            if (pos[i] == "--only" && i + 1 < pos.size())
                only = pos[++i];
            else
                throw UsageError("usage: catalog [--only <case>]");
        }
        auto cases = build_catalog(cfg.field_char, cfg.order);
        bool matched = false;
        for (const auto& c : cases) {
            if (only && c.name != *only) continue;
            matched = true;
            run_catalog_case(c, rep, only.has_value());
        }
        if (!matched) throw UsageError("no catalog case named '" + *only + "'");
        std::size_t passes = 0, fails = 0;
        for (const auto& r : rep.rows) (r.pass ? passes : fails) += 1;
        rep.line("catalog summary: " + std::to_string(passes) + " passed, " +
                 std::to_string(fails) + " failed");
    } else {
        throw UsageError(cmd.empty() ? "no command given" : "unknown command '" + cmd + "'");
    }

    rep.emit(cfg.json, out);
    if (!rep.all_pass()) {
        for (const auto& r : rep.rows)
            if (!r.pass) {
                out << "failing case: " << r.case_name << " (" << r.op << ")\n";
                break;
            }
        return kExitValidation;
    }
    return kExitOk;
}

} // namespace

std::string usage() {
    return "usage: mfk [--json] [--field-char P] [--order grevlex|lex]\n"
           "           [--max-steps N] [--max-resolution N] <command> [args]\n"
           "commands:\n"
           "  check <bundle>                     parse and validate a bundle file\n"
           "  shift <bundle> <mf>                print the shifted pair\n"
           "  sum <bundle> <mf> <mf>             direct sum\n"
           "  cone <bundle> <morphism>           mapping cone\n"
           "  totalize <bundle> <morphism>...    totalization of a complex\n"
           "  homotopy <bundle> <morphism>       null-homotopy witness or certificate\n"
           "  contract <bundle> <mf>             contractibility of a pair\n"
           "  homdim <bundle> <mf> <mf>          dim of the degree-0 hom space\n"
           "  cok <bundle> <mf>                  cokernel module of e1\n"
           "  syzygy <bundle> <module>           first syzygy over the fiber ring\n"
           "  resolve <bundle> <module> [len]    free resolution with periodicity\n"
           "  mcm <bundle> <module>              maximal Cohen-Macaulay test\n"
           "  stabilize <bundle> <module>        matrix factorization of a module\n"
           "  transport <bundle> <F> <E> [a...]  realize a cokernel morphism\n"
           "  stablehom <bundle> <M> <N>         stable hom dimension\n"
           "  verify-ff <bundle> <mf> <mf>       compare the two hom pipelines\n"
           "  catalog [--only <case>]            run the shipped example suite\n";
}

namespace {

struct LimitsGuard {
    Limits saved = engine_limits();
    ~LimitsGuard() { engine_limits() = saved; }
};

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    std::vector<std::string> pos;
    LimitsGuard guard;
    try {
        for (std::size_t i = 0; i < args.size(); ++i) {
            const std::string& a = args[i];
            auto value = [&](const char* flag) -> std::string {
                if (i + 1 >= args.size())
                    throw UsageError(std::string(flag) + " needs a value");
                return args[++i];
            };
            if (a == "--json") {
                cfg.json = true;
            } else if (a == "--field-char") {
                cfg.field_char = std::stoll(value("--field-char"));
            } else if (a == "--order") {
                std::string v = value("--order");
                if (v == "grevlex")
                    cfg.order = MonomialOrder::Grevlex;
                else if (v == "lex")
                    cfg.order = MonomialOrder::Lex;
                else
                    throw UsageError("--order must be grevlex or lex");
            } else if (a == "--max-steps") {
                engine_limits().max_pairs = std::stoull(value("--max-steps"));
            } else if (a == "--max-resolution") {
                engine_limits().max_resolution = std::stoull(value("--max-resolution"));
            } else if (a == "--only" || a.rfind("--", 0) != 0) {
                pos.push_back(a); // catalog's own flag or a positional
            } else {
                throw UsageError("unknown flag '" + a + "'");
            }
        }
        return run(cfg, std::move(pos), out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << usage();
        return kExitInput;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceLimitError& e) {
        err << "resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const ContextMismatchError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

} // namespace mfk
