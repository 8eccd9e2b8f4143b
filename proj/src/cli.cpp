#include "quandle/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "quandle/chains.hpp"
#include "quandle/constructions.hpp"
#include "quandle/extensions.hpp"
#include "quandle/homology.hpp"
#include "quandle/io.hpp"
#include "quandle/reproduce.hpp"

namespace quandle::cli {

using nlohmann::json;

namespace {

struct Options {
    bool json = false;
    std::string dataset;
    std::string convention = "right";
    std::size_t max_degree = 0;
    std::uint64_t mod = 0;
    std::vector<std::string> words;
    std::uint64_t seed = 1;
    bool seed_given = false;
    std::string mode;
    std::string out_file;

    std::vector<std::string> inputs;
    std::size_t length = 0;
    std::size_t alphabet = 2;
    bool all_words = false;
    std::size_t connected = 0;
    std::string complex;
    long long x = 0;
    std::string ys;
    std::size_t generator = 0;
    std::vector<std::string> suites;
};

/// A failed check that should still produce a report; exit code 1.
struct CheckFailed : Error {
    using Error::Error;
};

class Session {
public:
    Session(const Options& o, std::ostream& out) : opt_(o), out_(out) {}

    Convention convention() const { return opt_.convention == "left" ? Convention::left : Convention::right; }

    struct Input {
        std::string name;
        QuandleTable table;
    };

    Input input(const std::string& spec) {
        std::error_code ec;
        if (std::filesystem::is_regular_file(spec, ec)) {
            const std::string text = read_file(spec);
            inputs_.push_back({{"name", spec}, {"digest", digest(text)}});
            return {spec, parse_quandle(text, convention())};
        }
        if (spec.find(':') == std::string::npos) throw MissingFile("no such file '" + spec + "'");
        auto X = make(spec);
        inputs_.push_back({{"name", spec}, {"digest", digest(emit(X))}});
        return {spec, std::move(X)};
    }

    Input single_input() {
        if (opt_.inputs.size() != 1) throw CLI::ValidationError("expected exactly one INPUT");
        return input(opt_.inputs[0]);
    }

    Word word() const {
        if (opt_.words.size() != 1) throw CLI::ValidationError("expected exactly one --word");
        return Word::parse(opt_.words[0]);
    }

    Mode mode_for(const QuandleTable& X) const {
        if (opt_.mode == "rack") return Mode::rack;
        if (opt_.mode == "quandle") return Mode::quandle;
        return X.is_quandle() ? Mode::quandle : Mode::rack;
    }

    void line(const std::string& s) { text_ += s + "\n"; }
    void fail(const std::string& why) {
        failed_ = true;
        line("FAIL: " + why);
    }

    json results = json::object();
    const Options& opt_;

    bool failed() const { return failed_; }
    const json& inputs() const { return inputs_; }
    const std::string& text() const { return text_; }
    std::ostream& out() { return out_; }

private:
    std::ostream& out_;
    json inputs_ = json::array();
    std::string text_;
    bool failed_ = false;
};

json rows_json(const QuandleTable& X) {
    json rows = json::array();
    for (const auto& r : X.rows()) {
        json row = json::array();
        for (Element e : r) row.push_back(e + 1);
        rows.push_back(row);
    }
    return rows;
}

json violation_json(const Violation& v) {
    json w = json::array();
    for (Element e : v.witness) w.push_back(e + 1);
    return {{"axiom", to_string(v.axiom)}, {"witness", w}, {"message", v.describe()}};
}

std::string ones(const std::vector<Element>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
    return s + ")";
}

std::string yes(bool b) { return b ? "true" : "false"; }

void write_or_print(Session& s, const std::string& text) {
    if (!s.opt_.out_file.empty()) {
        std::ofstream f(s.opt_.out_file, std::ios::binary);
        if (!f) throw Error("cannot write '" + s.opt_.out_file + "'");
        f << text;
        s.line("wrote " + s.opt_.out_file);
    } else if (!s.opt_.json) {
        s.line(text.substr(0, text.size() - 1));
    }
}

// ---------------------------------------------------------------------------

void cmd_validate(Session& s) {
    if (s.opt_.inputs.size() != 1) throw CLI::ValidationError("expected exactly one INPUT");
    const std::string& spec = s.opt_.inputs[0];
    RawTable raw;
    std::error_code ec;
    if (std::filesystem::is_regular_file(spec, ec)) {
        const std::string text = read_file(spec);
        raw = parse_matrix(text, s.convention());
        s.results["input"] = spec;
    } else {
        raw = s.input(spec).table.raw();
    }
    const Mode mode = s.opt_.mode == "quandle" ? Mode::quandle : Mode::rack;
    auto r = validate(raw, mode, false);
    s.results["order"] = raw.size();
    s.results["mode"] = mode == Mode::quandle ? "quandle" : "rack";
    s.results["is_rack"] = r.is_rack;
    s.results["is_quandle"] = r.is_quandle;
    s.line("order=" + std::to_string(raw.size()));
    s.line("rack=" + yes(r.is_rack));
    s.line("quandle=" + yes(r.is_quandle));
    if (r.violation) {
        s.results["violation"] = violation_json(*r.violation);
        s.fail(r.violation->describe());
    }
}

void cmd_info(Session& s) {
    auto in = s.single_input();
    const auto& X = in.table;
    auto r = invariants(X);
    json j{{"order", X.order()},           {"is_quandle", r.is_quandle},   {"type", r.type},
           {"connected", r.is_connected},  {"medial", r.is_medial},        {"faithful", r.is_faithful},
           {"inn_order", r.inn_order},     {"inn_exponent", r.inn_exponent}, {"kei", is_kei(X)}};
    s.line("order=" + std::to_string(X.order()));
    s.line("quandle=" + yes(r.is_quandle));
    s.line("type=" + std::to_string(r.type));
    s.line("connected=" + yes(r.is_connected));
    s.line("medial=" + yes(r.is_medial));
    s.line("faithful=" + yes(r.is_faithful));
    s.line("inn_order=" + std::to_string(r.inn_order));
    s.line("inn_exponent=" + std::to_string(r.inn_exponent));
    if (X.is_quandle()) {
        try {
            auto inn = inner_representation(X);
            const auto t = rack_type(inn.image);
            j["inner_image"] = {{"order", inn.image.order()}, {"type", t}};
            s.line("inner_image_order=" + std::to_string(inn.image.order()));
            s.line("inner_image_type=" + std::to_string(t));
        } catch (const InnQuandleIllDefined&) {
            j["inner_image"] = nullptr;
        }
    }
    s.results = j;
}

void cmd_gen(Session& s) {
    if (s.opt_.connected) {
        auto all = enumerate_connected(s.opt_.connected);
        json list = json::array();
        std::string text;
        for (const auto& X : all) {
            list.push_back(rows_json(X));
            text += (text.empty() ? "" : "\n") + emit(X);
        }
        s.results = {{"order", s.opt_.connected}, {"count", all.size()}, {"quandles", list}};
        if (!text.empty()) write_or_print(s, text);
        return;
    }
    auto in = s.single_input();
    s.results = {{"spec", in.name}, {"order", in.table.order()}, {"table", rows_json(in.table)}};
    write_or_print(s, emit(in.table));
}

void cmd_scan(Session& s) {
    std::vector<std::string> names;
    std::vector<QuandleTable> tables;
    for (const auto& spec : s.opt_.inputs) {
        auto in = s.input(spec);
        names.push_back(in.name);
        tables.push_back(std::move(in.table));
    }
    if (!s.opt_.dataset.empty()) {
        for (auto& e : load_dataset(s.opt_.dataset, s.convention())) {
            names.push_back(display_name(e));
            tables.push_back(std::move(e.table));
        }
        s.results["dataset"] = s.opt_.dataset;
    }
    if (tables.empty()) throw CLI::ValidationError("scan needs INPUT files or --dataset");
    std::vector<Word> words;
    for (const auto& w : s.opt_.words) words.push_back(Word::parse(w));
    if (s.opt_.length)
        for (auto& w : enumerate_words(s.opt_.length, s.opt_.alphabet,
                                       s.opt_.all_words ? WordFilter::all : WordFilter::nontrivial_candidates))
            words.push_back(std::move(w));
    if (words.empty()) throw CLI::ValidationError("scan needs --word or --length");

    auto report = scan(tables, words, names);
    json list = json::array();
    for (std::size_t w = 0; w < words.size(); ++w) {
        json sat = json::array();
        std::size_t keis = 0;
        std::string who;
        for (std::size_t q = 0; q < tables.size(); ++q)
            if (report.satisfied[q][w]) {
                sat.push_back(names[q]);
                keis += is_kei(tables[q]);
                who += " " + names[q];
            }
        list.push_back({{"word", words[w].text()}, {"count", report.per_word_counts[w]}, {"keis", keis}, {"satisfied_by", sat}});
        s.line(words[w].text() + ": " + std::to_string(report.per_word_counts[w]) + " (" + std::to_string(keis) + " keis)" +
               (who.empty() ? "" : ":" + who));
    }
    s.results["quandles"] = tables.size();
    s.results["words"] = list;
}

void cmd_cycle(Session& s) {
    auto in = s.single_input();
    const auto& X = in.table;
    const Word w = s.word();
    s.results["word"] = w.text();
    if (s.opt_.x) {
        Assignment a{static_cast<Element>(s.opt_.x - 1), {}};
        std::stringstream ss(s.opt_.ys);
        std::string item;
        while (std::getline(ss, item, ',')) a.ys.push_back(static_cast<Element>(std::stoll(item) - 1));
        auto L = cycle_LS(X, w, a, Strictness::permissive);
        auto b = boundary(X, L);
        const bool holds = evaluate_word(X, w, a.x, a.ys) == a.x;
        s.results["cycle"] = L.to_text();
        s.results["boundary"] = b.to_text();
        s.results["identity_holds"] = holds;
        s.line("L_S = " + L.to_text());
        s.line("boundary = " + b.to_text());
        if (!holds) s.fail("x" + w.text() + " != x for this assignment");
        else if (!b.is_zero()) s.fail("boundary of L_S is nonzero");
        return;
    }
    auto sat = satisfies(X, w);
    if (!sat.satisfied) {
        s.results["satisfied"] = false;
        s.results["witness"] = {{"x", sat.witness->x + 1}, {"ys", ones(sat.witness->ys)}};
        s.fail(in.name + " does not satisfy x" + w.text() + " = x; witness x=" + std::to_string(sat.witness->x + 1) +
               " y=" + ones(sat.witness->ys));
        return;
    }
    std::uint64_t count = 0, nonzero = 0;
    for (Element x = 0; x < static_cast<Element>(X.order()); ++x)
        for_each_tuple(X.order(), w.alphabet(), [&](const std::vector<Element>& ys) {
            ++count;
            nonzero += !boundary(X, cycle_LS(X, w, {x, ys})).is_zero();
            return true;
        });
    s.results["satisfied"] = true;
    s.results["assignments"] = count;
    s.results["nonzero_boundaries"] = nonzero;
    s.line(std::to_string(count) + " assignments, " + std::to_string(nonzero) + " with nonzero boundary");
    if (nonzero) s.fail("some L_S has nonzero boundary");
}

void cmd_subcomplex(Session& s) {
    auto in = s.single_input();
    const auto& X = in.table;
    const Word w = s.word();
    if (!satisfies(X, w).satisfied) throw IdentityNotSatisfied(in.name + " does not satisfy x" + w.text() + " = x");
    const std::size_t top = s.opt_.max_degree ? s.opt_.max_degree : 3;
    json degrees = json::array();
    std::optional<Lattice> lower;
    for (std::size_t deg = 2; deg <= top; ++deg) {
        auto gens = subcomplex_generators(X, SubcomplexKind::identity(w), deg);
        std::size_t outside = 0;
        for (const auto& g : gens.chains) {
            auto b = boundary(X, g);
            outside += deg == 2 ? !b.is_zero() : !lower->contains(b.to_sparse(X.order()));
        }
        lower = span_lattice(X, gens);
        degrees.push_back({{"degree", deg}, {"generators", gens.chains.size()}, {"rank", lower->rank()}, {"boundary_outside", outside}});
        s.line("C^S_" + std::to_string(deg) + ": " + std::to_string(gens.chains.size()) + " generators, rank " +
               std::to_string(lower->rank()) + ", " + std::to_string(outside) + " boundaries outside the subcomplex");
        if (outside) s.fail("subcomplex not closed in degree " + std::to_string(deg));
    }
    s.results["word"] = w.text();
    s.results["degrees"] = degrees;
}

void cmd_homology(Session& s) {
    auto in = s.single_input();
    const auto& X = in.table;
    std::string name = s.opt_.complex.empty() ? (X.is_quandle() ? "quandle" : "rack") : s.opt_.complex;
    ComplexKind kind;
    if (name == "rack") kind = ComplexKind::rack();
    else if (name == "quandle") kind = ComplexKind::quandle();
    else if (name == "degenerate") kind = ComplexKind::degenerate();
    else if (name == "identity") kind = ComplexKind::identity(s.word());
    else throw CLI::ValidationError("unknown complex '" + name + "'");
    const std::size_t top = s.opt_.max_degree ? s.opt_.max_degree : default_max_homology_degree(X.order());
    json groups = json::array();
    for (std::size_t deg = 1; deg <= top; ++deg) {
        auto H = homology(X, kind, deg);
        json torsion = json::array();
        for (const auto& t : H.torsion) torsion.push_back(t.get_str());
        groups.push_back({{"degree", deg}, {"free_rank", H.free_rank}, {"torsion", torsion}, {"text", H.to_string()}});
        s.line("H_" + std::to_string(deg) + " = " + H.to_string());
    }
    s.results["complex"] = kind.name();
    s.results["homology"] = groups;
}

json cocycle_json(const CocycleTable& phi) { return phi.values; }

std::string cocycle_text(const CocycleTable& phi) {
    std::string t;
    for (const auto& row : phi.values) {
        for (std::size_t i = 0; i < row.size(); ++i) t += (i ? " " : "") + std::to_string(row[i]);
        t += "\n";
    }
    return t;
}

void cmd_cocycles(Session& s) {
    auto in = s.single_input();
    if (!s.opt_.mod) throw CLI::ValidationError("cocycles needs --mod D");
    const Mode mode = s.mode_for(in.table);
    auto space = cocycle_space(in.table, s.opt_.mod, mode);
    json gens = json::array();
    s.line("cardinality=" + space.cardinality.get_str());
    for (std::size_t i = 0; i < space.generators.size(); ++i) {
        gens.push_back({{"order", space.generator_orders[i]}, {"values", cocycle_json(space.generators[i])}});
        s.line("generator " + std::to_string(i + 1) + " (order " + std::to_string(space.generator_orders[i]) + "):");
        s.line(cocycle_text(space.generators[i]).substr(0, cocycle_text(space.generators[i]).size() - 1));
    }
    s.results = {{"modulus", s.opt_.mod},
                 {"mode", mode == Mode::quandle ? "quandle" : "rack"},
                 {"cardinality", space.cardinality.get_str()},
                 {"generators", gens}};
}

void cmd_extend(Session& s) {
    auto in = s.single_input();
    const auto& X = in.table;
    if (!s.opt_.mod) throw CLI::ValidationError("extend needs --mod D");
    const Mode mode = s.mode_for(X);
    auto space = cocycle_space(X, s.opt_.mod, mode);
    CocycleTable phi = CocycleTable::zero(X.order(), s.opt_.mod);
    if (s.opt_.generator) {
        if (s.opt_.generator > space.generators.size()) throw CLI::ValidationError("--generator out of range");
        phi = space.generators[s.opt_.generator - 1];
        s.results["cocycle_choice"] = "generator " + std::to_string(s.opt_.generator);
    } else {
        std::mt19937_64 rng(s.opt_.seed);
        for (std::size_t g = 0; g < space.generators.size(); ++g) {
            const auto c = static_cast<std::int64_t>(rng() % space.generator_orders[g]);
            for (std::size_t x = 0; x < X.order(); ++x)
                for (std::size_t y = 0; y < X.order(); ++y)
                    phi.values[x][y] = (phi.values[x][y] + c * space.generators[g].values[x][y]) %
                                       static_cast<std::int64_t>(s.opt_.mod);
        }
        s.results["cocycle_choice"] = "seed " + std::to_string(s.opt_.seed);
    }
    ExtensionSpec spec{X, s.opt_.mod, phi, mode};
    auto E = extend(spec);
    auto inv = invariants(E);
    s.results["cocycle"] = cocycle_json(phi);
    s.results["extension"] = {{"order", E.order()}, {"type", inv.type}, {"connected", inv.is_connected}, {"table", rows_json(E)}};
    s.line("cocycle:");
    s.line(cocycle_text(phi).substr(0, cocycle_text(phi).size() - 1));
    s.line("extension order=" + std::to_string(E.order()) + " type=" + std::to_string(inv.type) +
           " connected=" + yes(inv.is_connected));
    if (!s.opt_.words.empty()) {
        auto r = verify_theorem_ii(spec, s.word());
        s.results["identity_check"] = {{"word", s.opt_.words[0]},
                                       {"extension_satisfies", r.extension_satisfies},
                                       {"cocycle_vanishes_on_cycles", r.cocycle_vanishes},
                                       {"agree", r.agree}};
        s.line("extension satisfies " + s.opt_.words[0] + ": " + yes(r.extension_satisfies) +
               "; cocycle vanishes on L_S: " + yes(r.cocycle_vanishes));
        if (!r.agree) s.fail("identity inheritance and cocycle vanishing disagree");
    }
    if (!s.opt_.out_file.empty()) write_or_print(s, emit(E));
}

void cmd_reproduce(Session& s) {
    std::vector<std::string> suites = s.opt_.suites.empty() ? std::vector<std::string>{"all"} : s.opt_.suites;
    const std::set<std::string> known{"all", "census", "types", "exponents", "scans", "words",
                                      "theorem", "lemmas", "burnside", "medial"};
    for (const auto& x : suites)
        if (!known.count(x)) throw CLI::ValidationError("unknown suite '" + x + "'");
    auto want = [&](const char* name) {
        return std::find(suites.begin(), suites.end(), name) != suites.end() ||
               std::find(suites.begin(), suites.end(), "all") != suites.end();
    };
    auto explicit_dataset = [&] {
        for (const char* n : {"census", "types", "exponents", "scans"})
            if (std::find(suites.begin(), suites.end(), n) != suites.end()) return true;
        return false;
    };
    const bool census = want("census");
    const bool types = census || want("types"), exps = census || want("exponents"), scans = census || want("scans");

    std::vector<Check> checks;
    if (types || exps || scans) {
        if (s.opt_.dataset.empty()) {
            if (explicit_dataset()) throw MissingDataset("census suites need --dataset DIR");
            for (const char* n : {"type census", "exponent census", "dataset word scans"})
                checks.push_back({n, Check::Status::skipped, "no --dataset given", 0});
        } else {
            auto entries = load_dataset(s.opt_.dataset, s.convention());
            json files = json::array();
            for (const auto& e : entries) files.push_back({{"name", e.name}, {"digest", e.digest}});
            s.results["dataset"] = {{"dir", s.opt_.dataset}, {"files", entries.size()}, {"digests", files}};
            for (auto& c : check_dataset(entries, types, exps, scans)) checks.push_back(std::move(c));
        }
    }
    if (want("words")) {
        checks.push_back(check_length7_words());
        checks.push_back(check_abab_order5());
    }
    if (want("theorem")) {
        checks.push_back(check_theorem_i());
        checks.push_back(check_theorem_ii());
        checks.push_back(check_theorem_iii());
    }
    if (want("lemmas")) checks.push_back(check_lemmas());
    if (want("burnside")) checks.push_back(check_burnside());
    if (want("medial")) checks.push_back(check_medial());

    json list = json::array();
    for (const auto& c : checks) {
        list.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
        s.line(to_string(c.status) + "  " + c.name + (c.detail.empty() ? "" : "  [" + c.detail + "]"));
        if (c.status == Check::Status::fail) s.fail(c.name);
    }
    s.results["checks"] = list;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    const auto t0 = std::chrono::steady_clock::now();
    Options o;
    CLI::App app{"Finite racks and quandles: identities, homology, cocycles and extensions", "quandle"};
    app.require_subcommand(1);
    app.add_flag("--json", o.json, "Print a JSON report");
    app.add_option("--dataset", o.dataset, "Directory of quandle matrix files");
    app.add_option("--convention", o.convention, "Matrix convention of input files")->check(CLI::IsMember({"left", "right"}));
    app.add_option("--max-degree", o.max_degree, "Highest chain degree");
    app.add_option("--mod", o.mod, "Coefficient modulus D");
    app.add_option("--word", o.words, "Word in letters a-z (repeatable)");
    auto* seed = app.add_option("--seed", o.seed, "Seed for randomized choices");
    app.add_option("--mode", o.mode, "rack or quandle")->check(CLI::IsMember({"rack", "quandle"}));
    app.add_option("--out", o.out_file, "Write the emitted matrix here");

    auto sub = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->fallthrough();
        return c;
    };
    auto* validate_cmd = sub("validate", "Check the rack/quandle axioms of a matrix file");
    validate_cmd->add_option("input", o.inputs, "File or construction")->required();
    auto* info_cmd = sub("info", "Invariants: type, connectivity, mediality, Inn(X)");
    info_cmd->add_option("input", o.inputs, "File or construction")->required();
    auto* gen_cmd = sub("gen", "Emit a constructed quandle (trivial:N dihedral:N alexander:N:T poly:P:F:U burnside:M:N:P conjugation-sym:K)");
    gen_cmd->add_option("spec", o.inputs, "Construction");
    gen_cmd->add_option("--connected", o.connected, "Emit every connected quandle of this order");
    auto* scan_cmd = sub("scan", "Which inputs satisfy which words");
    scan_cmd->add_option("inputs", o.inputs, "Files or constructions");
    scan_cmd->add_option("--length", o.length, "Scan every word of this length");
    scan_cmd->add_option("--alphabet", o.alphabet, "Letters used with --length");
    scan_cmd->add_flag("--all", o.all_words, "Keep words the lemmas already decide");
    auto* cycle_cmd = sub("cycle", "The 2-chain L_S and its boundary");
    cycle_cmd->add_option("input", o.inputs, "File or construction")->required();
    cycle_cmd->add_option("--x", o.x, "Value of x (1-based)");
    cycle_cmd->add_option("--y", o.ys, "Comma-separated values of y_1..y_m (1-based)");
    auto* subcomplex_cmd = sub("subcomplex", "Identity subcomplex generators and closure under the boundary");
    subcomplex_cmd->add_option("input", o.inputs, "File or construction")->required();
    auto* homology_cmd = sub("homology", "Integer homology of a chain complex");
    homology_cmd->add_option("input", o.inputs, "File or construction")->required();
    homology_cmd->add_option("--complex", o.complex, "rack, quandle, degenerate or identity");
    auto* cocycles_cmd = sub("cocycles", "2-cocycles with coefficients in Z_D");
    cocycles_cmd->add_option("input", o.inputs, "File or construction")->required();
    auto* extend_cmd = sub("extend", "Abelian extension by a 2-cocycle");
    extend_cmd->add_option("input", o.inputs, "File or construction")->required();
    extend_cmd->add_option("--generator", o.generator, "Use this cocycle generator (1-based) instead of a seeded member");
    auto* reproduce_cmd = sub("reproduce", "Run the census and theorem checks");
    reproduce_cmd->add_option("suites", o.suites, "all census types exponents scans words theorem lemmas burnside medial");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? pass : usage_error;
    }
    o.seed_given = seed->count() > 0;

    Session s(o, out);
    std::string status = "pass";
    json error = nullptr;
    int code = pass;
    try {
        if (validate_cmd->parsed()) cmd_validate(s);
        else if (info_cmd->parsed()) cmd_info(s);
        else if (gen_cmd->parsed()) cmd_gen(s);
        else if (scan_cmd->parsed()) cmd_scan(s);
        else if (cycle_cmd->parsed()) cmd_cycle(s);
        else if (subcomplex_cmd->parsed()) cmd_subcomplex(s);
        else if (homology_cmd->parsed()) cmd_homology(s);
        else if (cocycles_cmd->parsed()) cmd_cocycles(s);
        else if (extend_cmd->parsed()) cmd_extend(s);
        else if (reproduce_cmd->parsed()) cmd_reproduce(s);
        if (s.failed()) {
            status = "fail";
            code = check_failed;
        }
    } catch (const CLI::Error& e) {
        status = "error";
        error = {{"type", "UsageError"}, {"message", e.what()}};
        code = usage_error;
    } catch (const std::exception& e) {
        const bool check = dynamic_cast<const IdentityNotSatisfied*>(&e) || dynamic_cast<const BaseDoesNotSatisfy*>(&e) ||
                           dynamic_cast<const NotMedial*>(&e) || dynamic_cast<const SubcomplexClosureViolated*>(&e);
        std::string type = "Error";
        if (dynamic_cast<const ParseError*>(&e)) type = "ParseError";
        else if (dynamic_cast<const ValidationError*>(&e)) type = "ValidationError";
        else if (dynamic_cast<const MissingDataset*>(&e)) type = "MissingDataset";
        else if (dynamic_cast<const MissingFile*>(&e)) type = "MissingFile";
        else if (dynamic_cast<const SizeGuardExceeded*>(&e)) type = "SizeGuardExceeded";
        else if (dynamic_cast<const ClosureBudgetExceeded*>(&e)) type = "ClosureBudgetExceeded";
        else if (check) type = "CheckFailed";
        status = check ? "fail" : "error";
        error = {{"type", type}, {"message", e.what()}};
        code = check ? check_failed : usage_error;
    }

    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.json) {
        json report{{"schema", "quandle-report"},
                    {"schema_version", schema_version},
                    {"tool_version", tool_version},
                    {"command", args},
                    {"inputs", s.inputs()},
                    {"status", status},
                    {"results", s.results},
                    {"wall_clock_seconds", seconds}};
        if (!error.is_null()) report["error"] = error;
        out << report.dump(2) << "\n";
    } else {
        out << s.text();
        if (!error.is_null()) err << error["type"].get<std::string>() << ": " << error["message"].get<std::string>() << "\n";
    }
    return code;
}

}  // namespace quandle::cli
