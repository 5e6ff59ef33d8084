#include "zetalg/cli.hpp"

#include "io_detail.hpp"
#include "zetalg/builtins.hpp"
#include "zetalg/character.hpp"
#include "zetalg/errors.hpp"
#include "zetalg/io.hpp"
#include "zetalg/table_algebra.hpp"
#include "zetalg/zeta.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace zetalg::cli {

namespace {

using detail::json_int;
using detail::json_int_list;
using detail::json_rat;
using detail::ordered_json;

struct Options {
    std::string builtin;
    std::string input;
    bool json = false;
    bool dump_lattices = false;
    int64_t prime = 0;
    int kmax = -1; // genus: -1 = pick from the local index
    int64_t terms = 20;
    std::string engine = "both";
    uint64_t budget = 100000000ull;
    int threads = -1; // -1 = unset, fall back to ZETALG_THREADS then all cores
};

Engine parse_engine(const std::string& s) {
    if (s == "counting") return Engine::counting;
    if (s == "genus") return Engine::genus;
    if (s == "both") return Engine::both;
    throw BadInput("--engine: expected counting, genus, or both, got \"" + s + "\"");
}

void check_prime(int64_t p) {
    if (p < 2 || prime_factors(Int(p)) != std::vector<int64_t>{p})
        throw BadInput("--prime: " + std::to_string(p) + " is not prime");
}

int resolve_threads(const Options& o) {
    if (o.threads >= 0) return o.threads;
    const char* env = std::getenv("ZETALG_THREADS");
    if (!env) return 0;
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw BadInput("ZETALG_THREADS: expected a nonnegative integer, got \"" + s + "\"");
    return std::atoi(s.c_str());
}

EnumerationBudget make_budget(const Options& o) {
    EnumerationBudget b;
    b.max_cells = o.budget;
    b.threads = resolve_threads(o);
    return b;
}

TableAlgebra load_algebra(const Options& o) {
    if (!o.builtin.empty() && !o.input.empty())
        throw BadInput("give either --builtin or --input, not both");
    if (!o.builtin.empty()) return make_builtin(o.builtin);
    if (o.input.empty()) throw BadInput("give one of --builtin or --input");
    std::string text;
    if (o.input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(o.input);
        if (!f) throw BadInput("cannot read input file: " + o.input);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    return parse_algebra_json(text);
}

std::string rat_string(const Rat& q) {
    Int num = numerator_of(q);
    Int den = denominator_of(q);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

std::string int_list_string(const std::vector<Int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s;
}

std::string bracket_list(const std::vector<Int>& v) { return "[" + int_list_string(v) + "]"; }

// Ascending pretty-printer: [1, -1, 2] -> "1 - t + 2*t^2".
std::string poly_string(const std::vector<Int>& g) {
    std::string s;
    for (size_t k = 0; k < g.size(); ++k) {
        if (g[k] == 0) continue;
        Int a = g[k];
        if (s.empty()) {
            if (a < 0) s += "-";
        } else {
            s += a < 0 ? " - " : " + ";
        }
        Int abs_a = a < 0 ? Int(-a) : a;
        if (k == 0) {
            s += abs_a.str();
        } else {
            if (abs_a != 1) s += abs_a.str() + "*";
            s += k == 1 ? "t" : "t^" + std::to_string(k);
        }
    }
    return s.empty() ? "0" : s;
}

std::string lattice_row_string(const PLattice& L, int i) {
    std::string s = "[";
    for (int k = 0; k < L.rank(); ++k) {
        if (k) s += ", ";
        s += plattice_entry_string(L.entry(i, k), L.p());
    }
    return s + "]";
}

void emit(const ordered_json& doc, std::ostream& out) { out << doc.dump() << "\n"; }

void cmd_analyze(const TableAlgebra& T, const Options& o, std::ostream& out) {
    CharacterTable C = character_table(T);
    IdempotentBasis E = idempotents(T, C);
    Int frame = frame_number(T, C);
    RelevantPrimes RP = relevant_primes(T, E);
    const int r = T.rank();

    if (o.json) {
        ordered_json j;
        j["rank"] = r;
        j["order"] = json_int(T.order());
        j["degrees"] = json_int_list(T.degrees());
        ordered_json inv = ordered_json::array();
        for (int i = 0; i < r; ++i) inv.push_back(T.star(i));
        j["involution"] = std::move(inv);
        ordered_json chars = ordered_json::array();
        for (int i = 0; i < r; ++i) {
            std::vector<Int> row(C.values.begin() + static_cast<size_t>(i) * r,
                                 C.values.begin() + static_cast<size_t>(i + 1) * r);
            chars.push_back(json_int_list(row));
        }
        j["characters"] = std::move(chars);
        ordered_json mult = ordered_json::array();
        for (int i = 0; i < r; ++i) mult.push_back(json_rat(C.multiplicities[i]));
        j["multiplicities"] = std::move(mult);
        ordered_json idem = ordered_json::array();
        for (int i = 0; i < r; ++i) {
            ordered_json row = ordered_json::array();
            for (int k = 0; k < r; ++k)
                row.push_back(json_rat(E.coeff[static_cast<size_t>(i) * r + k]));
            idem.push_back(std::move(row));
        }
        j["idempotents"] = std::move(idem);
        j["frame"] = json_int(frame);
        j["f"] = json_int(RP.f);
        j["relevant_primes"] = RP.primes;
        emit(j, out);
        return;
    }

    out << "rank: " << r << "\n";
    out << "order: " << T.order() << "\n";
    out << "degrees: " << bracket_list(T.degrees()) << "\n";
    out << "involution:";
    for (int i = 0; i < r; ++i) out << " " << T.star(i);
    out << "\n";
    out << "character table (rows chi_i, columns b_j):\n";
    for (int i = 0; i < r; ++i) {
        std::vector<Int> row(C.values.begin() + static_cast<size_t>(i) * r,
                             C.values.begin() + static_cast<size_t>(i + 1) * r);
        out << "  " << bracket_list(row) << "\n";
    }
    out << "multiplicities:";
    for (int i = 0; i < r; ++i) out << " " << rat_string(C.multiplicities[i]);
    out << "\n";
    out << "primitive idempotents (e_i over b_j):\n";
    for (int i = 0; i < r; ++i) {
        out << "  [";
        for (int k = 0; k < r; ++k) {
            if (k) out << ", ";
            out << rat_string(E.coeff[static_cast<size_t>(i) * r + k]);
        }
        out << "]\n";
    }
    out << "frame number: " << frame << "\n";
    out << "f: " << RP.f << "\n";
    out << "relevant primes:";
    for (int64_t p : RP.primes) out << " " << p;
    out << "\n";
}

void cmd_local_zeta(const TableAlgebra& T, const Options& o, std::ostream& out) {
    check_prime(o.prime);
    LocalZeta z = local_zeta(T, o.prime, parse_engine(o.engine), make_budget(o));
    if (o.json) {
        emit(detail::json_local(z), out);
        return;
    }
    out << "p: " << z.p << "\n";
    out << "rank: " << z.rank << "\n";
    out << "numerator: " << bracket_list(z.numerator) << "\n";
    out << "g(t) = " << poly_string(z.numerator) << "\n";
}

void cmd_global_zeta(const TableAlgebra& T, const Options& o, std::ostream& out) {
    GlobalZeta Z = global_zeta(T, parse_engine(o.engine), make_budget(o));
    std::vector<Int> a = expand_dirichlet(Z, o.terms);
    if (o.json) {
        ordered_json j = detail::json_global(Z);
        j["dirichlet"] = json_int_list(a);
        emit(j, out);
        return;
    }
    out << "rank: " << Z.rank << "\n";
    out << "relevant primes:";
    for (const auto& [p, zp] : Z.locals) {
        (void)zp;
        out << " " << p;
    }
    out << "\n";
    for (const auto& [p, zp] : Z.locals)
        out << "p = " << p << ": numerator " << bracket_list(zp.numerator) << ", g(t) = "
            << poly_string(zp.numerator) << "\n";
    out << "a_1..a_" << o.terms << ": " << int_list_string(a) << "\n";
}

void cmd_count(const TableAlgebra& T, const Options& o, std::ostream& out) {
    check_prime(o.prime);
    PowerSeriesZ s = count_ideals(T, o.prime, o.kmax, make_budget(o));
    if (o.json) {
        ordered_json j;
        j["p"] = s.p;
        j["kmax"] = s.kmax();
        j["counts"] = json_int_list(s.coeff);
        emit(j, out);
        return;
    }
    out << "p: " << s.p << "\n";
    out << "kmax: " << s.kmax() << "\n";
    out << "counts: " << int_list_string(s.coeff) << "\n";
}

void cmd_genus(const TableAlgebra& T, const Options& o, std::ostream& out) {
    check_prime(o.prime);
    Engine eng = parse_engine(o.engine);
    int kmax = o.kmax;
    if (kmax < 0) {
        // same starting depth the adaptive local factor uses
        CharacterTable C = character_table(T);
        IdempotentBasis E = idempotents(T, C);
        LocalOrder L = local_order(T, E, o.prime);
        int64_t d = L.lambda.pivot_exponent_sum();
        kmax = static_cast<int>(2 * d) + std::max(3, T.rank());
    }
    GenusDecomposition D = genus_decomposition(T, o.prime, kmax, eng, make_budget(o));

    if (o.json) {
        ordered_json j;
        j["p"] = D.p;
        j["rank"] = D.rank;
        j["kmax"] = kmax;
        ordered_json classes = ordered_json::array();
        for (const GenusClass& c : D.classes) {
            ordered_json jc;
            jc["index_exponent"] = c.index_exponent;
            jc["order"] = c.order;
            if (eng != Engine::counting) jc["measure"] = json_rat(c.measure);
            if (!c.by_integral.coeff.empty()) jc["by_integral"] = json_int_list(c.by_integral.coeff);
            if (!c.by_counting.coeff.empty()) jc["by_counting"] = json_int_list(c.by_counting.coeff);
            if (o.dump_lattices) jc["representative"] = detail::json_plattice(c.representative);
            classes.push_back(std::move(jc));
        }
        j["classes"] = std::move(classes);
        j["total"] = json_int_list(D.total.coeff);
        emit(j, out);
        return;
    }

    out << "p: " << D.p << "\n";
    out << "rank: " << D.rank << "\n";
    out << "classes: " << D.classes.size() << "\n";
    for (size_t i = 0; i < D.classes.size(); ++i) {
        const GenusClass& c = D.classes[i];
        out << "class " << i << ": index " << D.p << "^" << c.index_exponent
            << " over lambda, " << (c.order ? "order" : "not an order");
        if (eng != Engine::counting) out << ", measure " << rat_string(c.measure);
        out << "\n";
        if (!c.by_integral.coeff.empty())
            out << "  by_integral: " << int_list_string(c.by_integral.coeff) << "\n";
        if (!c.by_counting.coeff.empty())
            out << "  by_counting: " << int_list_string(c.by_counting.coeff) << "\n";
        if (o.dump_lattices)
            for (int row = 0; row < D.rank; ++row)
                out << "  " << (row == 0 ? "rows: " : "      ")
                    << lattice_row_string(c.representative, row) << "\n";
    }
    out << "total: " << int_list_string(D.total.coeff) << "\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
    if (!o.input.empty())
        throw BadInput("verify checks built-ins only; --input is not supported");
    std::vector<std::string> names;
    if (o.builtin.empty() || o.builtin == "all")
        names = verify_builtin_names();
    else
        names.push_back(o.builtin);

    EnumerationBudget budget = make_budget(o);
    ordered_json results = ordered_json::array();
    bool all_ok = true;

    for (const std::string& name : names) {
        std::vector<std::string> faults;
        try {
            TableAlgebra T = make_builtin(name);
            GlobalZeta ref = builtin_reference(name);
            GlobalZeta got = global_zeta(T, Engine::both, budget);
            if (got.rank != ref.rank)
                faults.push_back("rank " + std::to_string(got.rank) + " vs formula rank " +
                                 std::to_string(ref.rank));
            for (const auto& [p, zp] : ref.locals) {
                auto it = got.locals.find(p);
                if (it == got.locals.end()) {
                    faults.push_back("p = " + std::to_string(p) +
                                     " missing from the computed relevant primes");
                } else if (it->second.numerator != zp.numerator) {
                    faults.push_back("p = " + std::to_string(p) + ": engines " +
                                     bracket_list(it->second.numerator) + " vs formula " +
                                     bracket_list(zp.numerator));
                }
            }
            for (const auto& [p, zp] : got.locals) {
                (void)zp;
                if (!ref.locals.count(p))
                    faults.push_back("p = " + std::to_string(p) +
                                     " relevant but absent from the formula");
            }
        } catch (const CrossCheckFailure& e) {
            faults.push_back(std::string("engine cross-check: ") + e.what());
        }

        if (o.json) {
            ordered_json jr;
            jr["builtin"] = name;
            jr["ok"] = faults.empty();
            if (!faults.empty()) jr["faults"] = faults;
            results.push_back(std::move(jr));
        } else if (faults.empty()) {
            out << name << ": ok\n";
        } else {
            out << name << ": MISMATCH\n";
            for (const std::string& f : faults) out << "  " << f << "\n";
        }
        all_ok = all_ok && faults.empty();
    }

    if (o.json) {
        ordered_json j;
        j["results"] = std::move(results);
        j["ok"] = all_ok;
        emit(j, out);
    } else {
        out << (all_ok ? "verified " + std::to_string(names.size()) + " built-ins: all ok"
                       : "verification failed")
            << "\n";
    }
    return all_ok ? 0 : 2;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solomon zeta functions of integral table algebras", "zetalg"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "zetalg 0.1.0");

    Options o;
    app.add_flag("--json", o.json, "one machine-readable JSON document on stdout");
    app.add_option("--builtin", o.builtin,
                   "built-in algebra: kn:<n>, petersen, square, gq21, crown:<n>");
    app.add_option("--input", o.input, "algebra description JSON file (- for stdin)");
    app.add_option("--threads", o.threads,
                   "worker cap for enumeration, 0 = all cores (env ZETALG_THREADS)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--budget", o.budget, "HNF cell budget for brute-force enumeration")
        ->check(CLI::PositiveNumber);

    CLI::App* analyze = app.add_subcommand(
        "analyze", "axioms, character table, idempotents, Frame number, relevant primes");
    CLI::App* local = app.add_subcommand("local-zeta", "local factor g(t)/(1-t)^r at a prime");
    local->add_option("--prime", o.prime, "prime p")->required();
    local->add_option("--engine", o.engine, "counting | genus | both");
    CLI::App* global =
        app.add_subcommand("global-zeta", "relevant local factors and Dirichlet coefficients");
    global->add_option("--terms", o.terms, "Dirichlet coefficients a_1..a_N to expand")
        ->check(CLI::PositiveNumber);
    global->add_option("--engine", o.engine, "counting | genus | both");
    CLI::App* count =
        app.add_subcommand("count", "brute-force sublattice counts N(p^k), k = 0..kmax");
    count->add_option("--prime", o.prime, "prime p")->required();
    count->add_option("--kmax", o.kmax, "truncation depth")
        ->required()
        ->check(CLI::NonNegativeNumber);
    CLI::App* genus = app.add_subcommand("genus", "genus decomposition table at a prime");
    genus->add_option("--prime", o.prime, "prime p")->required();
    genus->add_option("--kmax", o.kmax, "series truncation (default: from the local index)")
        ->check(CLI::NonNegativeNumber);
    genus->add_option("--engine", o.engine, "counting | genus | both");
    genus->add_flag("--dump-lattices", o.dump_lattices, "include representative lattice rows");
    CLI::App* verify =
        app.add_subcommand("verify", "check both engines against the reference formulas");

    for (CLI::App* s : {analyze, local, global, count, genus, verify}) s->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) return cmd_verify(o, out);
        TableAlgebra T = load_algebra(o);
        if (analyze->parsed())
            cmd_analyze(T, o, out);
        else if (local->parsed())
            cmd_local_zeta(T, o, out);
        else if (global->parsed())
            cmd_global_zeta(T, o, out);
        else if (count->parsed())
            cmd_count(T, o, out);
        else if (genus->parsed())
            cmd_genus(T, o, out);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == Error::Kind::cross_check_failure ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace zetalg::cli
