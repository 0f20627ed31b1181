#include "girard/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "girard/involution.hpp"
#include "girard/newton.hpp"
#include "girard/powersum.hpp"
#include "girard/report.hpp"

namespace girard::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kSeedEnv = "GIRARD_LAB_SEED";
constexpr std::uint64_t kDefaultSeed = 20240601;

const char* kVacuousNote = "vacuous: r exceeds color count";
const char* kAggregatedNote =
    "closing term is r times ell summed over every r-color subset; the single full-color-set ell agrees only "
    "when k = r";
const char* kLiteralNote = "single full-color-set ell in the closing term; expected to fail unless k = r";
const char* kPrefactorNote =
    "stirling sum evaluated without a 1/(m+1) prefactor; with it the value at (m, n) = (1, 1) is 1/2 instead of 1";
const char* kSignNote = "closing term is (-1)^r r Y; the unsigned r Y leaves a nonzero residual for odd r";

struct Options {
    // shared
    std::string out_path;
    bool no_timing = false;
    std::optional<std::uint64_t> seed;
    // sizes
    std::uint32_t m = 0, r = 0, n = 0, k = 0, alpha = 0;
    std::uint32_t trials = 1;
    std::uint32_t weight_bound = 3;
    double density = 0.5;
    std::string graph_path;
    bool random = false;
    bool symbolic = false;
    bool literal_ell = false;
    std::string csv;
    std::string method = "all";
};

std::uint64_t env_seed() {
    const char* raw = std::getenv(kSeedEnv);
    if (raw == nullptr || *raw == '\0') return kDefaultSeed;
    const std::string s(raw);
    if (!std::regex_match(s, std::regex("[0-9]{1,20}"))) {
        throw UsageError(std::string(kSeedEnv) + " must be a non-negative integer, got \"" + s + "\"");
    }
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw UsageError(std::string(kSeedEnv) + " is out of range");
    }
}

std::vector<BigInt> parse_csv(const std::string& text, const char* what) {
    std::vector<BigInt> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    const std::regex integer(R"(\s*-?[0-9]+\s*)");
    while (std::getline(ss, item, ',')) {
        if (!std::regex_match(item, integer)) {
            throw UsageError(std::string(what) + ": \"" + item + "\" is not an integer");
        }
        item.erase(0, item.find_first_not_of(' '));
        item.erase(item.find_last_not_of(' ') + 1);
        out.emplace_back(item);
    }
    if (!text.empty() && text.back() == ',') throw UsageError(std::string(what) + ": trailing comma");
    return out;
}

OrderedJson int_list(const std::vector<BigInt>& xs) {
    OrderedJson a = OrderedJson::array();
    for (const auto& x : xs) {
        if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
            a.push_back(x.convert_to<std::int64_t>());
        } else {
            a.push_back(x.str());
        }
    }
    return a;
}

ColoredDigraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read graph file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    ColoredDigraph g(1, 1);
    try {
        g = parse_digraph(buf.str());
    } catch (const GraphParseError& e) {
        throw BadGraph(path + ": " + e.what());
    }
    const auto problems = validate(g);
    if (!problems.empty()) throw BadGraph(path + ": " + problems.front().message);
    return g;
}

// Graphs for a campaign: the file once, or one random graph per trial drawn
// from seeds generated in order from the campaign seed.
std::vector<ColoredDigraph> campaign_graphs(const Options& o, RunReport& rep) {
    std::vector<ColoredDigraph> graphs;
    if (!o.graph_path.empty()) {
        if (o.random) throw UsageError("--graph and --random are mutually exclusive");
        rep.params["graph"] = o.graph_path;
        graphs.push_back(load_graph(o.graph_path));
    } else {
        if (!o.random) throw UsageError("one of --graph or --random is required");
        if (o.n < 1 || o.k < 1) throw UsageError("--random needs --n and --k of at least 1");
        if (o.k > kMaxColors) throw UsageError("--k exceeds the supported color count");
        if (!(o.density >= 0.0 && o.density <= 1.0)) throw UsageError("--density must lie in [0, 1]");
        if (o.weight_bound < 1) throw UsageError("--weight-bound must be at least 1");
        rep.params["random"] = true;
        rep.params["n"] = o.n;
        rep.params["k"] = o.k;
        rep.params["density"] = o.density;
        rep.params["weight_bound"] = o.weight_bound;
        rep.seed = o.seed;
        std::mt19937_64 master(*o.seed);
        for (std::uint32_t t = 0; t < o.trials; ++t) {
            graphs.push_back(random_digraph(o.n, o.k, o.density, o.weight_bound, master()));
        }
    }
    if (o.symbolic) {
        rep.params["symbolic"] = true;
        for (auto& g : graphs) g = with_symbolic_weights(g);
    }
    rep.params["r"] = o.r;
    rep.trials = graphs.size();
    return graphs;
}

OrderedJson graph_json(const ColoredDigraph& g) { return OrderedJson::parse(serialize_digraph(g)); }

void require_r(const Options& o) {
    if (o.r < 1) throw UsageError("--r must be at least 1");
}

RunReport cmd_theorem1(const Options& o) {
    if (o.m < 1 || o.r < 1) throw UsageError("--m and --r must be at least 1");
    if (o.m > kMaxColors) throw UsageError("--m is too large");
    RunReport rep;
    rep.command = "verify theorem1";
    rep.params["m"] = o.m;
    rep.params["r"] = o.r;
    rep.trials = 1;
    const PowerSumInstance inst(o.m, o.r);
    const auto lhs = theorem1_lhs(inst);
    const auto rhs = theorem1_rhs(inst);
    const auto oracle = goodwords_oracle(inst);
    if (lhs != rhs || lhs != oracle) {
        rep.failures.push_back({{"lhs_minus_rhs", (lhs - rhs).str()}, {"lhs_minus_oracle", (lhs - oracle).str()}});
    }
    rep.notes.push_back("good words: " + goodwords_count(inst).str());
    return rep;
}

RunReport cmd_theorem2(const Options& o) {
    require_r(o);
    RunReport rep;
    rep.command = "verify theorem2";
    const auto graphs = campaign_graphs(o, rep);
    const EllForm form = o.literal_ell ? EllForm::literal : EllForm::aggregated;
    rep.params["ell_form"] = o.literal_ell ? "literal" : "aggregated";
    bool vacuous = false, closing = false, literal_mismatch = false;
    for (std::size_t t = 0; t < graphs.size(); ++t) {
        const auto& g = graphs[t];
        const auto res = verify_theorem2(g, o.r, form);
        vacuous = vacuous || res.vacuous;
        if (!res.vacuous && res.which == NewtonCase::r_at_most_n) {
            closing = true;
            literal_mismatch = literal_mismatch || g.color_count() != o.r;
        }
        if (!res.passed()) {
            rep.failures.push_back({{"trial", t},
                                    {"case", res.which == NewtonCase::r_exceeds_n ? "r > n" : "r <= n"},
                                    {"residual", res.residual.str()},
                                    {"graph", graph_json(g)}});
        }
    }
    if (vacuous) rep.notes.push_back(kVacuousNote);
    if (closing && !o.literal_ell) rep.notes.push_back(kAggregatedNote);
    if (closing && o.literal_ell && literal_mismatch) rep.notes.push_back(kLiteralNote);
    return rep;
}

RunReport cmd_theorem3(const Options& o) {
    if (o.r < 1 || o.n < 1) throw UsageError("--r and --n must be at least 1");
    if (o.r > kMaxColors) throw UsageError("--r exceeds the supported color count");
    RunReport rep;
    rep.command = "verify theorem3";
    rep.params["r"] = o.r;
    rep.params["n"] = o.n;
    rep.trials = 1;
    const auto res = verify_theorem3(o.r, o.n);
    const bool agrees = theorem3_matches_digraph(o.r, o.n);
    if (!res.passed() || !agrees) {
        rep.failures.push_back({{"residual", res.residual.str()}, {"matches_digraph", agrees}});
    }
    if (res.which == NewtonCase::r_at_most_n) rep.notes.push_back(kSignNote);
    return rep;
}

RunReport cmd_newton(const Options& o) {
    require_r(o);
    if (o.n < 1) throw UsageError("--n must be at least 1");
    RunReport rep;
    rep.command = "verify newton-girard";
    rep.params["n"] = o.n;
    rep.params["r"] = o.r;
    std::vector<std::vector<BigInt>> cases;
    if (!o.csv.empty()) {
        if (o.random) throw UsageError("--roots and --random are mutually exclusive");
        auto roots = parse_csv(o.csv, "--roots");
        if (roots.size() != o.n) {
            throw UsageError("--roots has " + std::to_string(roots.size()) + " entries but --n is " +
                             std::to_string(o.n));
        }
        rep.params["roots"] = int_list(roots);
        cases.push_back(std::move(roots));
    } else {
        if (!o.random) throw UsageError("one of --roots or --random is required");
        rep.seed = o.seed;
        std::mt19937_64 rng(*o.seed);
        std::uniform_int_distribution<int> root(-5, 5);
        for (std::uint32_t t = 0; t < o.trials; ++t) {
            std::vector<BigInt> roots;
            for (std::uint32_t i = 0; i < o.n; ++i) roots.emplace_back(root(rng));
            cases.push_back(std::move(roots));
        }
    }
    rep.trials = cases.size();
    for (std::size_t t = 0; t < cases.size(); ++t) {
        if (classical_newton_check(cases[t], o.r)) continue;
        BigInt sum = 0;
        for (const auto& term : classical_newton_terms(cases[t], o.r)) sum += term;
        rep.failures.push_back({{"trial", t}, {"roots", int_list(cases[t])}, {"sum", sum.str()}});
    }
    return rep;
}

RunReport cmd_lemma21(const Options& o) {
    if (o.alpha < 1) throw UsageError("--alpha must be at least 1");
    RunReport rep;
    rep.command = "verify lemma21";
    rep.params["alpha"] = o.alpha;
    std::vector<std::vector<BigInt>> cases;
    if (!o.csv.empty()) {
        if (o.random) throw UsageError("--c and --random are mutually exclusive");
        auto c = parse_csv(o.csv, "--c");
        rep.params["c"] = int_list(c);
        cases.push_back(std::move(c));
    } else {
        if (!o.random) throw UsageError("one of --c or --random is required");
        if (o.m < 1) throw UsageError("--random needs --m of at least 1");
        rep.params["random"] = true;
        rep.params["m"] = o.m;
        rep.seed = o.seed;
        std::mt19937_64 rng(*o.seed);
        std::uniform_int_distribution<int> entry(-5, 5);
        for (std::uint32_t t = 0; t < o.trials; ++t) {
            std::vector<BigInt> c;
            for (std::uint32_t i = 0; i < o.m; ++i) c.emplace_back(entry(rng));
            cases.push_back(std::move(c));
        }
    }
    rep.trials = cases.size();
    for (std::size_t t = 0; t < cases.size(); ++t) {
        const auto lhs = lemma21_lhs(o.alpha, cases[t]);
        const auto rhs = lemma21_rhs(o.alpha, cases[t]);
        if (lhs != rhs) {
            rep.failures.push_back({{"trial", t}, {"c", int_list(cases[t])}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
        }
    }
    return rep;
}

RunReport cmd_involution(const Options& o) {
    require_r(o);
    RunReport rep;
    rep.command = "involution audit";
    const auto graphs = campaign_graphs(o, rep);
    std::size_t pairs = 0, bad = 0, good = 0;
    bool vacuous = false;
    for (std::size_t t = 0; t < graphs.size(); ++t) {
        const auto audit = audit_involution(graphs[t], o.r);
        pairs += audit.pair_count;
        bad += audit.bad_count;
        good += audit.good_count;
        vacuous = vacuous || o.r > graphs[t].color_count();
        if (!audit.passed()) {
            OrderedJson problems = OrderedJson::array();
            for (std::size_t i = 0; i < audit.failures.size() && i < 10; ++i) problems.push_back(audit.failures[i]);
            rep.failures.push_back({{"trial", t},
                                    {"problem_count", audit.failures.size()},
                                    {"problems", problems},
                                    {"graph", graph_json(graphs[t])}});
        }
    }
    if (vacuous) rep.notes.push_back(kVacuousNote);
    rep.notes.push_back("pairs: " + std::to_string(pairs) + ", BAD: " + std::to_string(bad) +
                        ", GOOD: " + std::to_string(good));
    return rep;
}

RunReport cmd_powersum(const Options& o) {
    if (o.m < 1 || o.n < 1) throw UsageError("--m and --n must be at least 1");
    RunReport rep;
    rep.command = "powersum";
    rep.params["m"] = o.m;
    rep.params["n"] = o.n;
    rep.params["method"] = o.method;
    rep.trials = 1;
    std::vector<std::pair<std::string, Rational>> values;
    if (o.method == "stirling" || o.method == "all") {
        values.emplace_back("stirling", Rational(powersum_stirling(o.m, o.n)));
    }
    if (o.method == "bernoulli" || o.method == "all") {
        // The Bernoulli form sums to n - 1; add the last term.
        values.emplace_back("bernoulli", powersum_bernoulli(o.m, o.n) + Rational(ipow(BigInt(o.n), o.m)));
    }
    if (o.method == "direct" || o.method == "all") {
        values.emplace_back("direct", Rational(powersum_direct(o.m, o.n)));
    }
    OrderedJson failure;
    for (const auto& [name, v] : values) {
        rep.notes.push_back(name + ": " + v.str());
        if (v != values.front().second) failure[name] = v.str();
    }
    if (!failure.empty()) {
        failure[values.front().first] = values.front().second.str();
        rep.failures.push_back(failure);
    }
    if (o.method == "stirling" || o.method == "all") rep.notes.push_back(kPrefactorNote);
    return rep;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--out", o.out_path, "Write the JSON report to this file ('-' for stdout)");
    sub->add_flag("--no-timing", o.no_timing, "Report elapsed_ms as 0");
}

void add_campaign(CLI::App* sub, Options& o) {
    sub->add_option("--graph", o.graph_path, "Graph file (JSON)");
    sub->add_flag("--random", o.random, "Random graph campaign");
    sub->add_option("--n", o.n, "Vertices per random graph");
    sub->add_option("--k", o.k, "Colors per random graph");
    sub->add_option("--density", o.density, "Edge probability");
    sub->add_option("--weight-bound", o.weight_bound, "Weights drawn from [-B, B] without 0");
    sub->add_option("--trials", o.trials, "Number of random graphs")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Campaign seed (default from " + std::string(kSeedEnv) + ")");
    sub->add_flag("--symbolic", o.symbolic, "Replace weights with independent variables");
    sub->add_option("--r", o.r, "Identity degree")->required();
    add_common(sub, o);
}

void add_random_trials(CLI::App* sub, Options& o) {
    sub->add_flag("--random", o.random, "Random campaign");
    sub->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Campaign seed (default from " + std::string(kSeedEnv) + ")");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact verification of power-sum and colored Newton-Girard identities", "girard_lab"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "Check one identity");
    verify->require_subcommand(1);

    auto* t1 = verify->add_subcommand("theorem1", "Generalized power-sum identity, three ways");
    t1->add_option("--m", o.m)->required();
    t1->add_option("--r", o.r)->required();
    add_common(t1, o);

    auto* t2 = verify->add_subcommand("theorem2", "Colored walk / linear subdigraph identity");
    add_campaign(t2, o);
    t2->add_flag("--literal-ell", o.literal_ell, "Close with the single full-color-set ell");

    auto* t3 = verify->add_subcommand("theorem3", "Multi-alphabet Newton-Girard identity");
    t3->add_option("--r", o.r)->required();
    t3->add_option("--n", o.n)->required();
    add_common(t3, o);

    auto* ng = verify->add_subcommand("newton-girard", "Classical Newton-Girard identity on integer roots");
    ng->add_option("--n", o.n)->required();
    ng->add_option("--r", o.r)->required();
    ng->add_option("--roots", o.csv, "Comma-separated integer roots");
    add_random_trials(ng, o);
    add_common(ng, o);

    auto* l21 = verify->add_subcommand("lemma21", "Binomial-sum specialization");
    l21->add_option("--alpha", o.alpha)->required();
    l21->add_option("--c", o.csv, "Comma-separated integer sequence");
    l21->add_option("--m", o.m, "Sequence length for --random");
    add_random_trials(l21, o);
    add_common(l21, o);

    auto* inv = app.add_subcommand("involution", "Sign-reversing involution tools");
    inv->require_subcommand(1);
    auto* audit = inv->add_subcommand("audit", "Exhaustive involution audit");
    add_campaign(audit, o);

    auto* ps = app.add_subcommand("powersum", "1^m + ... + n^m by several methods");
    ps->add_option("--m", o.m)->required();
    ps->add_option("--n", o.n)->required();
    ps->add_option("--method", o.method)->check(CLI::IsMember({"stirling", "bernoulli", "direct", "all"}));
    add_common(ps, o);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    std::function<RunReport(const Options&)> command;
    if (t1->parsed()) command = cmd_theorem1;
    else if (t2->parsed()) command = cmd_theorem2;
    else if (t3->parsed()) command = cmd_theorem3;
    else if (ng->parsed()) command = cmd_newton;
    else if (l21->parsed()) command = cmd_lemma21;
    else if (audit->parsed()) command = cmd_involution;
    else command = cmd_powersum;

    RunReport rep;
    try {
        if (!o.seed) o.seed = env_seed();
        const auto start = std::chrono::steady_clock::now();
        rep = command(o);
        const auto stop = std::chrono::steady_clock::now();
        rep.elapsed_ms =
            o.no_timing ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadGraph& e) {
        err << "malformed graph: " << e.what() << "\n";
        return kExitBadGraph;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    out << report_to_text(rep);
    if (!o.out_path.empty()) {
        const auto text = report_to_json(rep);
        if (o.out_path == "-") {
            out << text;
        } else {
            std::ofstream f(o.out_path, std::ios::binary);
            f << text;
            if (!f) {
                err << "cannot write report to " << o.out_path << "\n";
                return kExitUsage;
            }
        }
    }
    return rep.passed() ? kExitPass : kExitFail;
}

}  // namespace girard::cli
