#include "cli.hpp"

#include "twitdyn/classify.hpp"
#include "twitdyn/engine.hpp"
#include "twitdyn/errors.hpp"
#include "twitdyn/fitter.hpp"
#include "twitdyn/io.hpp"
#include "twitdyn/metric.hpp"
#include "twitdyn/network.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

namespace twitdyn::cli {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Opens `path` for writing, or returns nullptr for "-" / empty.
std::unique_ptr<std::ofstream> open_output(const std::string& path) {
    if (path.empty() || path == "-")
        return nullptr;
    auto f = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*f)
        throw IoError("cannot open '" + path + "' for writing");
    return f;
}

void finish(std::ofstream* f, const std::string& path) {
    if (f && !f->flush())
        throw IoError("failed writing '" + path + "'");
}

EdgeDirection direction_of(bool reverse) {
    return reverse ? EdgeDirection::second_follows_first : EdgeDirection::first_follows_second;
}

template <class F>
auto as_usage(F&& f) {
    try {
        return f();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

void add_boundary_flags(CLI::App* cmd, ClassBoundaries& b) {
    cmd->add_option("--lambda-split", b.lambda_split, "lambda boundary between slow and fast decay")
        ->capture_default_str();
    cmd->add_option("--eta-split", b.eta_split, "eta_star boundary between low and high threshold")
        ->capture_default_str();
    cmd->add_option("--dt-anticipated", b.dt_anticipated, "delta_t at which events count as anticipated")
        ->capture_default_str();
    cmd->add_option("--peak-frac", b.peak_frac, "peak-day share that makes a profile class P")
        ->capture_default_str();
    cmd->add_option("--side-frac", b.side_frac, "share before/after the peak that counts as significant")
        ->capture_default_str();
}

struct StatsArgs {
    std::string network;
    bool reverse = false;
};

struct SimulateArgs {
    std::string network;
    double lambda = 0.0;
    double eta = 1.0;
    int dt = 0;
    int runs = 50;
    std::uint64_t seed = 0;
    int threads = 1;
    std::string out;
    bool reverse = false;
};

struct FitArgs {
    std::string network;
    std::string hashtag;
    std::string name;
    std::string grid;
    int runs = 50;
    std::uint64_t seed = 0;
    double theta = kDefaultTheta;
    std::string objective = "max";
    int threads = 1;
    std::string out;
    std::string scan_out;
    bool dry_run = false;
    bool reverse = false;
    ClassBoundaries bounds;
};

struct ClassifyArgs {
    std::string fit;
    std::string profile;
    ClassBoundaries bounds;
};

struct SynthArgs {
    std::string kind = "star";
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_stats(const StatsArgs& a, std::ostream& out) {
    const FollowNetwork net = load_edge_list_file(a.network, direction_of(a.reverse));
    out << to_json(network_stats(net)) << '\n';
    return kOk;
}

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
    ModelParams params;
    params.lambda = a.lambda;
    params.eta_star = a.eta;
    params.delta_t = a.dt;
    as_usage([&] { validate(params); });
    if (a.runs < 1)
        throw UsageError("--runs must be >= 1");

    const FollowNetwork net = load_edge_list_file(a.network, direction_of(a.reverse));
    const ActivityProfile profile = run_ensemble(net, params, a.seed, a.runs, a.threads);

    const auto file = open_output(a.out);
    write_profile_csv(file ? *file : out, profile);
    finish(file.get(), a.out);

    const auto peak = std::max_element(profile.activities.begin(), profile.activities.end());
    std::ostream& summary = file ? out : err;
    summary << "total_activities " << profile.total_activities() << '\n'
            << "peak_day " << index_day(static_cast<std::size_t>(peak - profile.activities.begin()))
            << '\n';
    return kOk;
}

int cmd_fit(const FitArgs& a, std::ostream& out, std::ostream& err) {
    GridSpec grid = as_usage([&] { return parse_grid(a.grid); });
    grid.runs = a.runs;
    ScanOptions options;
    options.theta = a.theta;
    options.threads = a.threads;
    options.keep_scan = !a.scan_out.empty();
    options.objective = as_usage([&] { return parse_objective_rule(a.objective); });
    if (a.runs < 1)
        throw UsageError("--runs must be >= 1");
    if (!(a.theta >= 0.0))
        throw UsageError("--theta must be >= 0");
    as_usage([&] { a.bounds.validate(); });

    out << "scan size: " << grid.size() << " triplets (" << grid.lambda_axis.size() << " lambda x "
        << grid.eta_axis.size() << " eta_star x " << grid.dt_axis.size() << " delta_t), "
        << grid.runs << " runs each\n";
    if (a.dry_run)
        return kOk;

    HashtagRecord rec = read_hashtag_csv_file(a.hashtag);
    if (!a.name.empty())
        rec.name = a.name;
    if (std::max_element(rec.tweets.begin(), rec.tweets.end()) - rec.tweets.begin() !=
        static_cast<std::ptrdiff_t>(kPeakIndex))
        err << "warning: day 0 does not hold the maximum tweet count\n";

    const FractionProfile target_tweets = normalize(rec.tweets);
    const FractionProfile target_users = normalize(rec.users);
    const FollowNetwork net = load_edge_list_file(a.network, direction_of(a.reverse));
    const FitResult result = grid_scan(net, target_tweets, target_users, grid, a.seed, options);
    const ClassLabel label = classify_params(result.params.lambda, result.params.eta_star,
                                             result.params.delta_t, a.bounds);

    const auto file = open_output(a.out);
    (file ? *file : out) << fit_report_json(rec.name, result, label) << '\n';
    finish(file.get(), a.out);

    if (!a.scan_out.empty()) {
        const auto scan = open_output(a.scan_out);
        write_scan_csv(scan ? *scan : out, result.scan);
        finish(scan.get(), a.scan_out);
    }
    if (file)
        out << "best lambda=" << result.params.lambda << " eta_star=" << result.params.eta_star
            << " delta_t=" << result.params.delta_t << " objective=" << result.objective
            << (result.good ? " good" : " poor") << " class=" << label.to_string() << '\n';
    return kOk;
}

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
    if (a.fit.empty() == a.profile.empty())
        throw UsageError("give exactly one of --fit or --profile");
    as_usage([&] { a.bounds.validate(); });
    if (!a.fit.empty()) {
        std::ifstream in(a.fit);
        if (!in)
            throw IoError("cannot open fit report '" + a.fit + "'");
        const FittedParams p = read_fit_json(in);
        out << classify_params(p.lambda, p.eta_star, p.delta_t, a.bounds).to_string() << '\n';
    } else {
        const HashtagRecord rec = read_hashtag_csv_file(a.profile);
        out << to_string(classify_profile(normalize(rec.tweets), a.bounds)) << '\n';
    }
    return kOk;
}

int cmd_synth(const SynthArgs& a, std::ostream& out) {
    const SyntheticKind kind = as_usage([&] { return parse_synthetic_kind(a.kind); });
    const FollowNetwork net = as_usage([&] { return generate_synthetic(kind, a.n, a.p, a.seed); });
    const auto file = open_output(a.out);
    write_edge_list(file ? *file : out, net);
    finish(file.get(), a.out);
    return kOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simulate, fit and classify hashtag activity profiles on follower networks",
                 "twitdyn"};
    app.require_subcommand(1);

    StatsArgs stats;
    auto* stats_cmd = app.add_subcommand("stats", "Print network statistics as JSON");
    stats_cmd->add_option("network", stats.network, "edge list file")->required();
    stats_cmd->add_flag("--reverse", stats.reverse, "a line 'a b' means b follows a");

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Write the ensemble activity profile as CSV");
    sim_cmd->add_option("--network", sim.network, "edge list file")->required();
    sim_cmd->add_option("--lambda", sim.lambda, "decay rate of interest")->capture_default_str();
    sim_cmd->add_option("--eta", sim.eta, "spreading threshold eta_star")->capture_default_str();
    sim_cmd->add_option("--dt", sim.dt, "days before the peak when injection starts")
        ->capture_default_str();
    sim_cmd->add_option("--runs", sim.runs, "Monte Carlo runs")->capture_default_str();
    sim_cmd->add_option("--seed", sim.seed, "base seed")->capture_default_str();
    sim_cmd->add_option("--threads", sim.threads, "worker threads")->capture_default_str();
    sim_cmd->add_option("--out", sim.out, "output CSV (default stdout)");
    sim_cmd->add_flag("--reverse", sim.reverse, "a line 'a b' means b follows a");

    FitArgs fit;
    auto* fit_cmd = app.add_subcommand("fit", "Fit a hashtag series by grid scan");
    fit_cmd->add_option("--network", fit.network, "edge list file")->required();
    fit_cmd->add_option("--hashtag", fit.hashtag, "CSV day,tweets,users");
    fit_cmd->add_option("--name", fit.name, "hashtag name (default: file stem)");
    fit_cmd->add_option("--grid", fit.grid, "e.g. lambda=0:4:0.1,eta=1:60:1,dt=0:7");
    fit_cmd->add_option("--runs", fit.runs, "Monte Carlo runs per triplet")->capture_default_str();
    fit_cmd->add_option("--seed", fit.seed, "base seed")->capture_default_str();
    fit_cmd->add_option("--theta", fit.theta, "distance tolerance threshold")->capture_default_str();
    fit_cmd->add_option("--objective", fit.objective, "max or mean of the two distances")
        ->capture_default_str();
    fit_cmd->add_option("--threads", fit.threads, "worker threads")->capture_default_str();
    fit_cmd->add_option("--out", fit.out, "fit report JSON (default stdout)");
    fit_cmd->add_option("--scan-out", fit.scan_out, "full scan CSV");
    fit_cmd->add_flag("--dry-run", fit.dry_run, "only report the scan size");
    fit_cmd->add_flag("--reverse", fit.reverse, "a line 'a b' means b follows a");
    add_boundary_flags(fit_cmd, fit.bounds);

    ClassifyArgs cls;
    auto* cls_cmd = app.add_subcommand("classify", "Label a fit report or a profile");
    cls_cmd->add_option("--fit", cls.fit, "fit report JSON");
    cls_cmd->add_option("--profile", cls.profile, "profile CSV");
    add_boundary_flags(cls_cmd, cls.bounds);

    SynthArgs syn;
    auto* syn_cmd = app.add_subcommand("synth", "Write a synthetic edge list");
    syn_cmd->add_option("--kind", syn.kind, "star or random")->capture_default_str();
    syn_cmd->add_option("--n", syn.n, "number of users")->required();
    syn_cmd->add_option("--p", syn.p, "edge probability (random)")->capture_default_str();
    syn_cmd->add_option("--seed", syn.seed, "seed")->capture_default_str();
    syn_cmd->add_option("--out", syn.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (stats_cmd->parsed())
            return cmd_stats(stats, out);
        if (sim_cmd->parsed())
            return cmd_simulate(sim, out, err);
        if (fit_cmd->parsed()) {
            if (fit.hashtag.empty() && !fit.dry_run)
                throw UsageError("--hashtag is required");
            return cmd_fit(fit, out, err);
        }
        if (cls_cmd->parsed())
            return cmd_classify(cls, out);
        if (syn_cmd->parsed())
            return cmd_synth(syn, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIo;
    } catch (const ParseError& e) {
        err << "validation error: " << e.what() << '\n';
        return kValidation;
    } catch (const std::exception& e) {
        err << "validation error: " << e.what() << '\n';
        return kValidation;
    }
    return kUsage;
}

} // namespace twitdyn::cli
