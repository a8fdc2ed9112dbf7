#include "iwasawa/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "iwasawa/analytic_oracle.hpp"
#include "iwasawa/cohomology.hpp"
#include "iwasawa/lambda_formulas.hpp"
#include "iwasawa/splitting.hpp"

namespace iwasawa::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

// Machine-size integers become JSON numbers; anything wider is a decimal string.
Json json_int(const Integer& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

Json json_ints(const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(json_int(x));
    return a;
}

Json json_matrix(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(json_ints(m.row(i)));
    return rows;
}

std::vector<Integer> parse_list(const std::string& text) {
    std::vector<Integer> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw InvalidInput("empty entry in list '" + text + "'");
        out.push_back(parse_integer(item.substr(b, e - b + 1)));
    }
    return out;
}

struct Document {
    std::string command;
    Json inputs = Json::object();
    Json result = Json::object();
    std::vector<std::string> assumptions;
    std::string provenance = "formula";
    std::string format = "json";
    // CSV rendering, filled by tabular commands
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    int exit_code = kSuccess;

    void assume(const std::vector<std::string>& items) {
        for (const auto& a : items)
            if (std::find(assumptions.begin(), assumptions.end(), a) == assumptions.end()) assumptions.push_back(a);
    }

    Json envelope() const {
        Json j;
        j["schema"] = kSchema;
        j["command"] = command;
        j["inputs"] = inputs;
        j["result"] = result;
        j["assumptions"] = assumptions;
        j["provenance"] = provenance;
        return j;
    }

    std::string render() const {
        if (format != "csv") return envelope().dump(2) + "\n";
        std::string s = "# schema: " + std::to_string(kSchema) + "\n# command: " + command + "\n";
        auto line = [&s](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
            s += "\n";
        };
        line(csv_header);
        for (const auto& r : csv_rows) line(r);
        return s;
    }
};

std::string error_document(const Document& doc, const std::string& kind, const std::string& message) {
    Json j;
    j["schema"] = kSchema;
    j["command"] = doc.command;
    j["inputs"] = doc.inputs;
    j["error"] = {{"kind", kind}, {"message", message}};
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------- lambda

struct LambdaFlags {
    std::string d;
    int p = 2;
    std::string method = "formula";
    unsigned max_level = 4;
    std::string format = "json";
};

Json breakdown_json(const std::vector<std::pair<Integer, Integer>>& entries) {
    Json a = Json::array();
    for (const auto& [q, c] : entries) a.push_back({{"q", json_int(q)}, {"places", json_int(c)}});
    return a;
}

void cmd_lambda(const LambdaFlags& f, Document& doc) {
    const Integer d = parse_integer(f.d);
    doc.inputs = {{"d", json_int(d)}, {"p", f.p}, {"method", f.method}, {"max_level", f.max_level}, {"format", f.format}};
    doc.format = f.format;
    doc.provenance = f.method;
    if (!is_supported_fermat_prime(f.p))
        throw InvalidInput("base prime p = " + std::to_string(f.p) + " is not one of 2, 3, 5, 17, 257");
    const bool want_formula = f.method != "oracle", want_oracle = f.method != "formula";
    if (want_oracle && f.p != 2) throw InvalidInput("the analytic oracle only covers the tower over Q (p = 2)");

    doc.result["d"] = json_int(d);
    doc.result["p"] = f.p;
    std::optional<long> formula_lambda, oracle_lambda;

    if (want_formula) {
        const LambdaResult main = main_lambda(d, f.p);
        Json j{{"lambda", main.lambda}, {"base", main.base.to_string()}, {"method", to_string(main.method)},
               {"breakdown", breakdown_json(main.breakdown)}};
        if (f.p == 2) {
            const LambdaResult fer = ferrero_lambda(d);
            if (fer.lambda != main.lambda)
                throw VerificationFailure("ferrero formula gives " + std::to_string(fer.lambda) +
                                          ", the ramified-place count gives " + std::to_string(main.lambda));
            j["cross_check"] = {{"method", to_string(fer.method)}, {"lambda", fer.lambda}};
            doc.assume(fer.assumptions);
        }
        doc.assume(main.assumptions);
        doc.result["formula"] = j;
        formula_lambda = main.lambda;
        doc.csv_header = {"q", "places"};
        for (const auto& [q, c] : main.breakdown) doc.csv_rows.push_back({q.get_str(), c.get_str()});
    }

    if (want_oracle) {
        const OracleRun run = run_oracle(d, f.max_level);
        Json levels = Json::array();
        doc.csv_header = {"n", "conductor", "characters", "odd_characters", "w", "h_minus", "ord2", "unit_index"};
        doc.csv_rows.clear();
        for (const auto& lv : run.levels) {
            levels.push_back({{"n", lv.level},
                              {"conductor", lv.conductor},
                              {"characters", lv.character_count},
                              {"odd_characters", lv.odd_character_count},
                              {"w", lv.w},
                              {"h_minus", lv.h_minus.get_str()},
                              {"ord2", lv.ord2},
                              {"unit_index", to_string(lv.q_ambiguity)}});
            doc.csv_rows.push_back({std::to_string(lv.level), std::to_string(lv.conductor),
                                    std::to_string(lv.character_count), std::to_string(lv.odd_character_count),
                                    std::to_string(lv.w), lv.h_minus.get_str(), std::to_string(lv.ord2),
                                    to_string(lv.q_ambiguity)});
        }
        doc.result["oracle"] = {{"lambda", run.result.lambda}, {"levels", levels}, {"differences", run.differences}};
        doc.assume(run.result.assumptions);
        oracle_lambda = run.result.lambda;
    }

    if (formula_lambda && oracle_lambda) {
        const bool agree = *formula_lambda == *oracle_lambda;
        doc.result["verdict"] = agree ? "agree" : "disagree";
        doc.result["lambda"] = agree ? Json(*formula_lambda) : Json(nullptr);
        if (!agree) doc.exit_code = kMismatch;
    } else {
        doc.result["lambda"] = formula_lambda ? *formula_lambda : *oracle_lambda;
    }
}

// ---------------------------------------------------------------- splitting

struct SplittingFlags {
    std::string q;
    std::optional<int> p;
    unsigned levels = 6;
    std::string format = "json";
};

void cmd_splitting(const SplittingFlags& f, Document& doc) {
    const Integer q = parse_integer(f.q);
    doc.inputs = {{"q", json_int(q)}, {"p", f.p ? Json(*f.p) : Json(nullptr)}, {"levels", f.levels}, {"format", f.format}};
    doc.format = f.format;
    const TowerBase base = f.p ? TowerBase::fermat(*f.p) : TowerBase::rationals();

    const Integer stable = stable_prime_count(q, base);
    const unsigned from = stabilization_level(q, base);
    Json rows = Json::array();
    doc.csv_header = {"n", "e", "f", "g", "degree", "stabilized"};
    for (unsigned n = 0; n < f.levels; ++n) {
        const auto r = split_in_tower(q, base, n);
        const bool stabilized = n >= from;
        rows.push_back({{"n", n},
                        {"e", json_int(r.e)},
                        {"f", json_int(r.f)},
                        {"g", json_int(r.g)},
                        {"degree", json_int(r.field_degree())},
                        {"stabilized", stabilized}});
        doc.csv_rows.push_back({std::to_string(n), r.e.get_str(), r.f.get_str(), r.g.get_str(),
                                r.field_degree().get_str(), stabilized ? "true" : "false"});
    }
    doc.result = {{"q", json_int(q)},
                  {"base", base.to_string()},
                  {"rows", rows},
                  {"stable_count", json_int(stable)},
                  {"stabilization_level", from}};
    doc.assume({"q is an odd prime, unramified in the tower"});
}

// ---------------------------------------------------------------- cohomology

struct CohomologyFlags {
    std::string file;
    std::string builtin;
    std::optional<int> p;
    bool verify = false;
};

IntMatrix grid_from_json(const nlohmann::json& j, std::size_t rows, const std::string& name) {
    if (!j.is_array()) throw InvalidInput("'" + name + "' must be an array of rows");
    if (j.empty()) return IntMatrix(rows, 0);
    if (j.size() != rows)
        throw InvalidInput("'" + name + "' has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
    std::vector<std::vector<Integer>> data;
    std::size_t cols = 0;
    for (const auto& row : j) {
        if (!row.is_array()) throw InvalidInput("'" + name + "' rows must be arrays");
        std::vector<Integer> r;
        for (const auto& x : row) {
            if (x.is_number_integer())
                r.emplace_back(static_cast<long>(x.get<std::int64_t>()));
            else if (x.is_string())
                r.push_back(parse_integer(x.get<std::string>()));
            else
                throw InvalidInput("'" + name + "' entries must be integers");
        }
        if (!data.empty() && r.size() != cols) throw InvalidInput("'" + name + "' rows have different lengths");
        cols = r.size();
        data.push_back(std::move(r));
    }
    return IntMatrix::from_rows(data, cols);
}

CyclicGModule module_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open presentation file '" + path + "'");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("malformed presentation file: " + std::string(e.what()));
    }
    if (!j.is_object()) throw InvalidInput("presentation must be a JSON object");
    for (const char* key : {"p", "order", "relations", "action"})
        if (!j.contains(key)) throw InvalidInput(std::string("presentation lacks field '") + key + "'");
    if (j.contains("schema") && j["schema"] != kSchema) throw InvalidInput("unsupported presentation schema");
    if (!j["p"].is_number_integer() || !j["order"].is_number_integer())
        throw InvalidInput("'p' and 'order' must be integers");
    const auto& action = j["action"];
    if (!action.is_array() || action.empty()) throw InvalidInput("'action' must be a nonempty square grid");
    const std::size_t r = action.size();
    IntMatrix a = grid_from_json(action, r, "action");
    if (a.cols() != r) throw InvalidInput("'action' must be square");
    IntMatrix rel = grid_from_json(j["relations"], r, "relations");
    return CyclicGModule(j["p"].get<int>(), j["order"].get<std::int64_t>(), std::move(rel), std::move(a));
}

void cmd_cohomology(const CohomologyFlags& f, Document& doc) {
    doc.inputs = {{"file", f.file.empty() ? Json(nullptr) : Json(f.file)},
                  {"builtin", f.builtin.empty() ? Json(nullptr) : Json(f.builtin)},
                  {"p", f.p ? Json(*f.p) : Json(nullptr)},
                  {"verify", f.verify}};
    if (f.file.empty() == f.builtin.empty()) throw InvalidInput("give exactly one of --file and --builtin");
    std::optional<CyclicGModule> m;
    if (!f.builtin.empty()) {
        if (!f.p) throw InvalidInput("--builtin needs --p");
        m = indecomposable_module(*f.p, parse_indecomposable_kind(f.builtin));
    } else {
        m = module_from_file(f.file);
        if (f.p && *f.p != m->p())
            throw InvalidInput("--p " + std::to_string(*f.p) + " contradicts p = " + std::to_string(m->p()) +
                               " in the presentation");
    }

    const CohomologyReport rep = cohomology(*m);
    const AbelianGroupStructure s = m->structure();
    doc.result = {{"presentation",
                   {{"p", m->p()},
                    {"order", m->group_order()},
                    {"relations", json_matrix(m->relations())},
                    {"action", json_matrix(m->action())}}},
                  {"rank", m->rank()},
                  {"module", {{"torsion", json_ints(s.torsion)}, {"free_rank", s.free_rank}}},
                  {"invariant_rank", rep.invariant_rank},
                  {"h1", json_ints(rep.h1_invariants)},
                  {"h2", json_ints(rep.h2_invariants)},
                  {"chi", rep.chi ? Json(*rep.chi) : Json(nullptr)}};
    doc.assume({"G cyclic of order " + std::to_string(m->group_order()) + ", generator acting by the action matrix",
                "a 0 among the invariants marks a free Z summand"});
    if (f.verify) {
        doc.provenance = "both";
        const CohomologyReport brute = brute_force_cohomology(*m);
        const bool agree = brute == rep;
        doc.result["verification"] = {{"method", "enumeration"}, {"verdict", agree ? "agree" : "disagree"}};
        if (!agree) doc.exit_code = kMismatch;
    }
}

// ---------------------------------------------------------------- formula commands

struct RHFlags {
    int p = 2;
    long lambda_k = 0, chi = 0;
    std::string ram;
};

void cmd_rh(const RHFlags& f, Document& doc) {
    RHInput in;
    in.p = f.p;
    in.lambda_K = f.lambda_k;
    in.chi_P = f.chi;
    for (const auto& e : parse_list(f.ram)) in.ram.push_back(to_int64(e));
    doc.inputs = {{"p", f.p}, {"lambda_k", f.lambda_k}, {"chi", f.chi}, {"ram", in.ram}};
    const long value = riemann_hurwitz(in);
    long s = 0;
    for (long e : in.ram) s += e > 1;
    doc.result = {{"lambda_L", value}, {"ramified_places", s}};
    doc.assume({"mu_K = 0", "ram lists e(w) for the finite places w not above p"});
}

struct KidaFlags {
    int delta = 0, tau = 0;
    long dim2 = 0, s = 0;
};

void cmd_kida(const KidaFlags& f, Document& doc) {
    doc.inputs = {{"delta", f.delta}, {"tau", f.tau}, {"dim2", f.dim2}, {"s", f.s}};
    doc.result = {{"lambda_minus", kida_general(f.delta, f.tau, f.dim2, f.s)}};
    doc.assume({"mu = 0", "L/K a CM quadratic extension in the cyclotomic Z_2-tower"});
}

struct DecomposeFlags {
    int p = 2;
    long lambda_k = 0, chi = 0, s = 0;
};

void cmd_decompose(const DecomposeFlags& f, Document& doc) {
    doc.inputs = {{"p", f.p}, {"lambda_k", f.lambda_k}, {"chi", f.chi}, {"s", f.s}};
    const DecompositionFamily fam = decomposition_solve(f.p, f.lambda_k, f.chi, f.s);
    Json terms = Json::array();
    for (const auto& t : fam.terms) terms.push_back({{"a", t.a}, {"b", t.b}, {"c", t.c}});
    doc.result = {{"a_min", fam.a_min}, {"a_max", fam.a_max}, {"terms", terms}, {"lambda_L", fam.lambda_L}};
    doc.assume({"mu = 0", "lattice Z_p^a + Z_p[G]^b + I^c with I the augmentation ideal"});
}

struct FitFlags {
    int p = 2;
    std::string seq;
};

void cmd_fit(const FitFlags& f, Document& doc) {
    const auto e = parse_list(f.seq);
    doc.inputs = {{"p", f.p}, {"seq", json_ints(e)}};
    const IwasawaFit fit = fit_growth(f.p, e);
    doc.result = {{"lambda", json_int(fit.lambda)},
                  {"mu", json_int(fit.mu)},
                  {"nu", json_int(fit.nu)},
                  {"n0", fit.n0}};
    doc.assume({"e_n = lambda n + mu p^n + nu for every n >= n0"});
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
    CLI::App app{"Iwasawa lambda-invariants of imaginary quadratic fields and cyclic-group cohomology", "iwasawa"};
    app.require_subcommand(1);

    LambdaFlags lf;
    auto* lambda = app.add_subcommand("lambda", "lambda_2 of k(sqrt(-d)) over the cyclotomic Z_2-tower");
    lambda->add_option("--d", lf.d, "squarefree d > 2")->required();
    lambda->add_option("--p", lf.p, "Fermat prime of the base field (2 means Q)")->capture_default_str();
    lambda->add_option("--method", lf.method)->check(CLI::IsMember({"formula", "oracle", "both"}))->capture_default_str();
    lambda->add_option("--max-level", lf.max_level, "highest tower level for the oracle")
        ->check(CLI::Range(3u, 8u))
        ->capture_default_str();
    lambda->add_option("--format", lf.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    SplittingFlags sf;
    auto* splitting = app.add_subcommand("splitting", "splitting of an odd prime q up the tower");
    splitting->add_option("--q", sf.q)->required();
    splitting->add_option("--p", sf.p, "Fermat prime of the base field; omit for Q");
    splitting->add_option("--levels", sf.levels)->check(CLI::Range(1u, 64u))->capture_default_str();
    splitting->add_option("--format", sf.format)->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

    CohomologyFlags cf;
    auto* coh = app.add_subcommand("cohomology", "H^1, H^2 and chi of a cyclic p-group module");
    auto* file_opt = coh->add_option("--file", cf.file, "JSON presentation file");
    coh->add_option("--builtin", cf.builtin)
        ->check(CLI::IsMember({"trivial", "regular", "augmentation"}))
        ->excludes(file_opt);
    coh->add_option("--p", cf.p);
    coh->add_flag("--verify", cf.verify, "cross-check by enumerating the module");

    RHFlags rf;
    auto* rh = app.add_subcommand("rh", "Riemann-Hurwitz formula for lambda");
    rh->add_option("--p", rf.p)->required();
    rh->add_option("--lambda-k", rf.lambda_k)->required();
    rh->add_option("--chi", rf.chi)->required();
    rh->add_option("--ram", rf.ram, "comma-separated ramification indices");

    KidaFlags kf;
    auto* kida = app.add_subcommand("kida", "general Kida-type lambda^- formula");
    kida->add_option("--delta", kf.delta)->required();
    kida->add_option("--tau", kf.tau)->required();
    kida->add_option("--dim2", kf.dim2)->required();
    kida->add_option("--s", kf.s)->required();

    DecomposeFlags df;
    auto* dec = app.add_subcommand("decompose", "Z_p[G]-lattice decompositions compatible with the inputs");
    dec->add_option("--p", df.p)->required();
    dec->add_option("--lambda-k", df.lambda_k)->required();
    dec->add_option("--chi", df.chi)->required();
    dec->add_option("--s", df.s)->required();

    FitFlags ff;
    auto* fit = app.add_subcommand("fit", "fit e_n = lambda n + mu p^n + nu to a sequence");
    fit->add_option("--p", ff.p)->required();
    fit->add_option("--seq", ff.seq, "comma-separated exponents e_0, e_1, ...")->required();

    Outcome outcome;
    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        outcome.exit_code = code == 0 ? kSuccess : kInvalidInput;
        outcome.out = out.str();
        outcome.err = err.str();
        return outcome;
    }

    Document doc;
    std::function<void()> action;
    if (lambda->parsed()) action = [&] { cmd_lambda(lf, doc); };
    if (splitting->parsed()) action = [&] { cmd_splitting(sf, doc); };
    if (coh->parsed()) action = [&] { cmd_cohomology(cf, doc); };
    if (rh->parsed()) action = [&] { cmd_rh(rf, doc); };
    if (kida->parsed()) action = [&] { cmd_kida(kf, doc); };
    if (dec->parsed()) action = [&] { cmd_decompose(df, doc); };
    if (fit->parsed()) action = [&] { cmd_fit(ff, doc); };
    doc.command = app.get_subcommands().front()->get_name();

    auto fail = [&](int code, const std::string& kind, const std::string& message) {
        outcome.exit_code = code;
        outcome.out = error_document(doc, kind, message);
        outcome.err = "error: " + message + "\n";
    };
    try {
        action();
        outcome.exit_code = doc.exit_code;
        outcome.out = doc.render();
    } catch (const InvalidInput& e) {
        fail(kInvalidInput, "invalid_input", e.what());
    } catch (const NotStabilized& e) {
        fail(kNotStabilized, "not_stabilized", e.what());
    } catch (const VerificationFailure& e) {
        fail(kMismatch, "verification_failure", e.what());
    } catch (const std::exception& e) {
        // an internal failure is reported as a failed verification, never as a
        // new exit status
        fail(kMismatch, "internal_error", e.what());
    }
    return outcome;
}

std::vector<std::string> reinvocation_args(const nlohmann::json& document) {
    std::vector<std::string> args{document.at("command").get<std::string>()};
    for (const auto& [key, value] : document.at("inputs").items()) {
        std::string flag = "--" + key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        if (value.is_null()) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
            continue;
        }
        args.push_back(flag);
        if (value.is_array()) {
            std::string joined;
            for (const auto& x : value) {
                if (!joined.empty()) joined += ",";
                joined += x.is_string() ? x.get<std::string>() : x.dump();
            }
            args.push_back(joined);
        } else {
            args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
    }
    return args;
}

}  // namespace iwasawa::cli
