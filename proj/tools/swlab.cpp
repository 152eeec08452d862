// swlab: generate, measure and classify the built-in network families.
//
// Exit codes: 0 success, 2 usage / invalid input, 3 data error,
// 4 oracle mismatch.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "swlab/classifier.hpp"
#include "swlab/closed_forms.hpp"
#include "swlab/generators.hpp"
#include "swlab/io.hpp"
#include "swlab/majorization.hpp"
#include "swlab/stats.hpp"

using nlohmann::json;
using namespace swlab;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitMismatch = 4;

std::vector<long long> parse_sizes(const std::string& text) {
    // Either "a,b,c" or "STARTxFACTOR^COUNT" (e.g. 1024x2^5).
    std::vector<long long> sizes;
    auto x = text.find('x');
    auto caret = text.find('^');
    if (x != std::string::npos && caret != std::string::npos && caret > x) {
        long long start = std::stoll(text.substr(0, x));
        double factor = std::stod(text.substr(x + 1, caret - x - 1));
        int count = std::stoi(text.substr(caret + 1));
        double value = static_cast<double>(start);
        for (int i = 0; i < count; ++i) {
            sizes.push_back(static_cast<long long>(std::llround(value)));
            value *= factor;
        }
        return sizes;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) sizes.push_back(std::stoll(item));
    return sizes;
}

LayeredSpec parse_layered(const std::string& seq, int steps) {
    auto colon = seq.find(':');
    std::string kind = seq.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : seq.substr(colon + 1);
    if (kind == "constant") return LayeredSpec::constant(std::stoll(arg), steps);
    if (kind == "geometric") return LayeredSpec::geometric(std::stoll(arg), steps);
    if (kind == "poly" || kind == "polynomial")
        return LayeredSpec::polynomial(std::stoi(arg), steps);
    if (kind == "explicit") {
        std::vector<long long> terms;
        std::stringstream ss(arg);
        std::string item;
        while (std::getline(ss, item, ',')) terms.push_back(std::stoll(item));
        return LayeredSpec::explicit_terms(std::move(terms));
    }
    throw std::invalid_argument("unknown layered sequence kind: " + kind);
}

StatKind parse_stat(const std::string& s) {
    if (s == "diam" || s == "diameter") return StatKind::Diameter;
    if (s == "avg" || s == "average" || s == "mean") return StatKind::Average;
    if (s == "med" || s == "median") return StatKind::Median;
    throw std::invalid_argument("unknown stat: " + s);
}

struct GenerateOpts {
    std::string family;
    int n = 0;
    int p = 0, q = 0;
    double z = 6.0;
    uint64_t seed = 1;
    int v = 3, m = 2;
    int steps = 1;
    std::string seq = "geometric:2";
    std::string out;
};

Graph build_graph(const GenerateOpts& o) {
    if (o.family == "complete") return complete(o.n);
    if (o.family == "star") return star(o.n);
    if (o.family == "chain") return chain(o.n);
    if (o.family == "chain-star") return chain_star(o.p, o.q);
    if (o.family == "er" || o.family == "erdos-renyi")
        return erdos_renyi(o.n, o.z, o.seed).graph;
    if (o.family == "ba" || o.family == "barabasi-albert")
        return barabasi_albert(o.v, o.m, o.steps, o.seed);
    if (o.family == "layered") return layered(parse_layered(o.seq, o.steps));
    throw std::invalid_argument("unknown family: " + o.family);
}

int cmd_generate(const GenerateOpts& o) {
    Graph g = build_graph(o);
    save_json_file(o.out, graph_to_json(g));
    std::cout << "nodes " << g.num_nodes() << " edges " << g.num_edges() << '\n';
    return 0;
}

int cmd_stats(const std::string& path, const std::string& out) {
    Graph g = graph_from_json(load_json_file(path));
    AlphaArray a = alpha_array(g);
    json report = summary_to_json(summarize(a));
    report["alpha"] = a.alpha;
    if (!out.empty())
        save_json_file(out, report);
    std::cout << report.dump(2) << '\n';
    return 0;
}

int cmd_oracle(const std::string& family, int n, int p, int q,
               const std::string& seq, int steps) {
    json report{{"family", family}};
    bool match = true;
    if (family == "star") {
        auto s = summarize(star(n));
        auto mean = closed_forms::star_mean(n);
        auto median = closed_forms::star_median(n);
        report["params"] = {{"n", n}};
        report["oracle"] = {{"mean", mean.str()}, {"median", median}, {"diameter", n > 2 ? 2 : 1}};
        report["computed"] = {{"mean", s.mean.str()}, {"median", s.median}, {"diameter", s.diameter}};
        match = s.mean == mean && s.median == median &&
                s.diameter == (n > 2 ? 2 : 1);
    } else if (family == "chain") {
        auto s = summarize(chain(n));
        auto o = closed_forms::chain_stats(n);
        report["params"] = {{"n", n}};
        report["oracle"] = {{"mean", o.mean.str()}, {"median", o.median_exact}, {"diameter", o.diameter}};
        report["computed"] = {{"mean", s.mean.str()}, {"median", s.median}, {"diameter", s.diameter}};
        match = s.mean == o.mean && s.median == o.median_exact &&
                s.diameter == o.diameter;
    } else if (family == "chain-star") {
        auto s = summarize(chain_star(p, q));
        auto mean = closed_forms::chain_star_mean(p, q);
        report["params"] = {{"p", p}, {"q", q}};
        report["oracle"] = {{"mean", mean.str()}};
        report["computed"] = {{"mean", s.mean.str()}};
        match = s.mean == mean;
    } else if (family == "layered") {
        auto spec = parse_layered(seq, steps);
        auto s = summarize(layered(spec));
        int d = closed_forms::layered_diameter(spec.steps);
        report["params"] = {{"seq", seq}, {"steps", spec.steps}};
        report["oracle"] = {{"diameter", d}};
        report["computed"] = {{"diameter", s.diameter}};
        match = s.diameter == d;
    } else {
        throw std::invalid_argument("no exact oracle for family: " + family);
    }
    report["match"] = match;
    std::cout << report.dump(2) << '\n';
    return match ? 0 : kExitMismatch;
}

int cmd_majorize(const std::string& file_a, const std::string& file_b,
                 const std::string& csv_out) {
    AlphaArray a = alpha_from_file(file_a);
    AlphaArray b = alpha_from_file(file_b);
    // Incompatible inputs (different n or pair totals) are a data problem with
    // the files, not a usage problem with the invocation.
    if (a.n != b.n)
        throw std::runtime_error("cannot compare: node counts differ (" +
                                 std::to_string(a.n) + " vs " + std::to_string(b.n) + ")");
    MajorizationVerdict verdict = compare(a, b);
    LorenzCurve ca = lorenz_curve(a);
    LorenzCurve cb = lorenz_curve(b);

    json report{{"verdict", to_string(verdict)}};
    json la = json::array(), lb = json::array();
    for (auto& [x, y] : ca.points) la.push_back({x, y});
    for (auto& [x, y] : cb.points) lb.push_back({x, y});
    report["lorenz_a"] = std::move(la);
    report["lorenz_b"] = std::move(lb);

    std::cout << to_string(verdict) << '\n';
    if (verdict == MajorizationVerdict::Less)
        std::cout << file_b << " is the smaller world\n";
    else if (verdict == MajorizationVerdict::Greater)
        std::cout << file_a << " is the smaller world\n";
    std::cout << report.dump(2) << '\n';

    if (!csv_out.empty()) {
        std::ofstream csv(csv_out);
        if (!csv) throw std::runtime_error("cannot write " + csv_out);
        csv << "x,lorenz_a,lorenz_b\n";
        for (size_t i = 0; i < ca.points.size(); ++i)
            csv << ca.points[i].first << ',' << ca.points[i].second << ','
                << cb.points[i].second << '\n';
    }
    return 0;
}

struct ClassifyOpts {
    std::string family;
    std::string stat = "diam";
    std::string sizes;
    std::string steps_list;
    int seeds = 4;
    uint64_t seed_base = 1;
    double z = 6.0;
    int v = 3, m = 2;
    std::string seq = "geometric:2";
    Thresholds policy;
    std::string out;
    std::string csv;
};

FamilySpec make_family(const ClassifyOpts& o) {
    FamilySpec spec;
    if (o.family == "complete") spec.family = FamilySpec::Family::Complete;
    else if (o.family == "star") spec.family = FamilySpec::Family::Star;
    else if (o.family == "chain") spec.family = FamilySpec::Family::Chain;
    else if (o.family == "chain-star-sqrt") spec.family = FamilySpec::Family::ChainStarSqrt;
    else if (o.family == "chain-star-quarter") spec.family = FamilySpec::Family::ChainStarQuarter;
    else if (o.family == "er" || o.family == "erdos-renyi") spec.family = FamilySpec::Family::ErdosRenyi;
    else if (o.family == "ba" || o.family == "barabasi-albert") spec.family = FamilySpec::Family::BarabasiAlbert;
    else if (o.family == "layered") spec.family = FamilySpec::Family::Layered;
    else throw std::invalid_argument("unknown family: " + o.family);

    spec.er_z = o.z;
    spec.ba_v = o.v;
    spec.ba_m = o.m;
    if (spec.family == FamilySpec::Family::Layered) {
        LayeredSpec proto = parse_layered(o.seq, 1);
        spec.layered_kind = proto.kind;
        spec.layered_param = proto.param;
        if (o.steps_list.empty())
            throw std::invalid_argument("layered family needs --steps-list");
        for (long long s : parse_sizes(o.steps_list))
            spec.layered_steps.push_back(static_cast<int>(s));
    } else {
        if (o.sizes.empty()) throw std::invalid_argument("missing --sizes");
        spec.sizes = parse_sizes(o.sizes);
    }
    if (spec.is_random())
        for (int i = 0; i < o.seeds; ++i) spec.seeds.push_back(o.seed_base + i);
    return spec;
}

int cmd_classify(const ClassifyOpts& o) {
    FamilySpec spec = make_family(o);
    StatKind stat = parse_stat(o.stat);
    RatioSeries series = ratio_series(spec, stat);
    Classification result = classify(series, o.policy);

    json points = json::array();
    for (const auto& pt : series.points) {
        points.push_back({{"n", pt.target_n},
                          {"realized_n", pt.realized_n},
                          {"stat", pt.stat},
                          {"ratio", pt.ratio},
                          {"ratio_min", pt.ratio_min},
                          {"ratio_max", pt.ratio_max}});
    }
    json report{
        {"family", series.family},
        {"stat", to_string(stat)},
        {"points", std::move(points)},
        {"verdict", to_string(result.verdict)},
        {"C_estimate", result.c_estimate},
        {"policy",
         {{"window", o.policy.window},
          {"tol_conv", o.policy.tol_conv},
          {"tol_zero", o.policy.tol_zero},
          {"div_factor", o.policy.div_factor},
          {"tol_fit", o.policy.tol_fit}}},
    };
    std::cout << report.dump(2) << '\n';
    if (!o.out.empty()) save_json_file(o.out, report);
    if (!o.csv.empty()) {
        std::ofstream csv(o.csv);
        if (!csv) throw std::runtime_error("cannot write " + o.csv);
        csv << "n,stat,ratio\n";
        for (const auto& pt : series.points)
            csv << pt.target_n << ',' << pt.stat << ',' << pt.ratio << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"small-world network analysis"};
    app.require_subcommand(1);

    GenerateOpts gen;
    auto* generate = app.add_subcommand("generate", "write a graph JSON file");
    generate->add_option("--family", gen.family)->required();
    generate->add_option("--n", gen.n);
    generate->add_option("--p", gen.p);
    generate->add_option("--q", gen.q);
    generate->add_option("--z", gen.z);
    generate->add_option("--seed", gen.seed);
    generate->add_option("--v", gen.v);
    generate->add_option("--m", gen.m);
    generate->add_option("--steps", gen.steps);
    generate->add_option("--seq", gen.seq);
    generate->add_option("--out", gen.out)->required();

    std::string stats_in, stats_out;
    auto* stats = app.add_subcommand("stats", "distance summary of a graph file");
    stats->add_option("graph", stats_in)->required();
    stats->add_option("--out", stats_out);

    std::string ora_family, ora_seq = "geometric:2";
    int ora_n = 0, ora_p = 0, ora_q = 0, ora_steps = 1;
    auto* oracle = app.add_subcommand("oracle", "closed form vs computed statistics");
    oracle->add_option("--family", ora_family)->required();
    oracle->add_option("--n", ora_n);
    oracle->add_option("--p", ora_p);
    oracle->add_option("--q", ora_q);
    oracle->add_option("--seq", ora_seq);
    oracle->add_option("--steps", ora_steps);

    std::string maj_a, maj_b, maj_csv;
    auto* majorize = app.add_subcommand("majorize", "compare two alpha arrays");
    majorize->add_option("a", maj_a)->required();
    majorize->add_option("b", maj_b)->required();
    majorize->add_option("--out", maj_csv);

    ClassifyOpts cls;
    auto* classify_cmd = app.add_subcommand("classify", "small-world verdict for a family");
    classify_cmd->add_option("--family", cls.family)->required();
    classify_cmd->add_option("--stat", cls.stat);
    classify_cmd->add_option("--sizes", cls.sizes);
    classify_cmd->add_option("--steps-list", cls.steps_list);
    classify_cmd->add_option("--seeds", cls.seeds);
    classify_cmd->add_option("--seed-base", cls.seed_base);
    classify_cmd->add_option("--z", cls.z);
    classify_cmd->add_option("--v", cls.v);
    classify_cmd->add_option("--m", cls.m);
    classify_cmd->add_option("--seq", cls.seq);
    classify_cmd->add_option("--window", cls.policy.window);
    classify_cmd->add_option("--tol-conv", cls.policy.tol_conv);
    classify_cmd->add_option("--tol-zero", cls.policy.tol_zero);
    classify_cmd->add_option("--div-factor", cls.policy.div_factor);
    classify_cmd->add_option("--tol-fit", cls.policy.tol_fit);
    classify_cmd->add_option("--out", cls.out);
    classify_cmd->add_option("--csv", cls.csv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*generate) return cmd_generate(gen);
        if (*stats) return cmd_stats(stats_in, stats_out);
        if (*oracle) return cmd_oracle(ora_family, ora_n, ora_p, ora_q, ora_seq, ora_steps);
        if (*majorize) return cmd_majorize(maj_a, maj_b, maj_csv);
        if (*classify_cmd) return cmd_classify(cls);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
