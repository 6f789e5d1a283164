#include "ted/cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ted/gted.hpp"
#include "ted/shapes.hpp"
#include "ted/strategy.hpp"
#include "ted/tree.hpp"

namespace fs = std::filesystem;

namespace ted::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitOracle = 3;

class CliError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt_double(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        std::ostringstream os;
        os << static_cast<long long>(v);
        return os.str();
    }
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

Tree load_bracket_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    // allow a trailing newline from editors
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.pop_back();
    return parse_bracket(text);
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CliError("cannot write file: " + path);
    f << text;
}

struct AlgoName {
    const char* name;
    Algorithm algo;
};

constexpr AlgoName kAlgos[] = {
    {"rted", Algorithm::RTED},         {"zhang-l", Algorithm::ZhangL},
    {"zhang-r", Algorithm::ZhangR},    {"klein-h", Algorithm::KleinH},
    {"demaine-h", Algorithm::DemaineH},
};

Algorithm parse_algo(const std::string& s) {
    for (const auto& a : kAlgos)
        if (s == a.name) return a.algo;
    throw CliError("unknown algorithm: " + s);
}

const char* algo_name(Algorithm a) {
    for (const auto& e : kAlgos)
        if (e.algo == a) return e.name;
    return "?";
}

StrategyMatrix strategy_for(Algorithm a, const TreeIndex& F,
                            const TreeIndex& G) {
    switch (a) {
        case Algorithm::RTED: return opt_strategy(F, G).matrix;
        case Algorithm::ZhangL:
            return fixed_strategy(FixedStrategyKind::ZhangL, F, G);
        case Algorithm::ZhangR:
            return fixed_strategy(FixedStrategyKind::ZhangR, F, G);
        case Algorithm::KleinH:
            return fixed_strategy(FixedStrategyKind::KleinH, F, G);
        case Algorithm::DemaineH:
            return fixed_strategy(FixedStrategyKind::DemaineH, F, G);
    }
    throw CliError("unknown algorithm");
}

ShapeKind parse_shape(const std::string& s) {
    if (s == "left-branch" || s == "lb") return ShapeKind::LeftBranch;
    if (s == "right-branch" || s == "rb") return ShapeKind::RightBranch;
    if (s == "zigzag" || s == "zz") return ShapeKind::ZigZag;
    if (s == "full-binary" || s == "fb") return ShapeKind::FullBinary;
    if (s == "mixed") return ShapeKind::Mixed;
    if (s == "random") return ShapeKind::Random;
    throw CliError("unknown shape: " + s);
}

const char* shape_name(ShapeKind k) {
    switch (k) {
        case ShapeKind::LeftBranch: return "left-branch";
        case ShapeKind::RightBranch: return "right-branch";
        case ShapeKind::ZigZag: return "zigzag";
        case ShapeKind::FullBinary: return "full-binary";
        case ShapeKind::Mixed: return "mixed";
        case ShapeKind::Random: return "random";
    }
    return "?";
}

CostModel parse_costs(const std::string& spec) {
    if (spec.empty() || spec == "unit") return CostModel::unit();
    double d, i, r;
    char c1, c2;
    std::istringstream is(spec);
    if (is >> d >> c1 >> i >> c2 >> r && c1 == ',' && c2 == ',' && d >= 0 &&
        i >= 0 && r >= 0)
        return CostModel::uniform(d, i, r);
    throw CliError("bad --costs value (expected 'unit' or DEL,INS,REN): " +
                   spec);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(s);
    while (std::getline(is, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

// --- compute ---------------------------------------------------------------

struct ComputeOpts {
    std::string file_a, file_b;
    std::string algo = "rted";
    std::string costs = "unit";
    std::string report;  // "", "csv"
    std::string out_file;
};

int cmd_compute(const ComputeOpts& o, std::ostream& out) {
    const Tree a = load_bracket_file(o.file_a);
    const Tree b = load_bracket_file(o.file_b);
    const CostModel cm = parse_costs(o.costs);

    const auto t0 = std::chrono::steady_clock::now();
    double distance;
    ExecStats stats;
    if (o.algo == "brute") {
        distance = brute_force_distance(a, b, cm);
    } else {
        DistanceResult r = tree_edit_distance(a, b, parse_algo(o.algo), cm);
        distance = r.distance;
        stats = r.stats;
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double total_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();

    if (o.report == "csv") {
        std::ostringstream row;
        row << "algo,distance,subproblems,strategy_time_ms,distance_time_ms,"
               "total_time_ms\n"
            << o.algo << ',' << fmt_double(distance) << ','
            << stats.subproblems << ',' << stats.strategy_time_ms << ','
            << stats.distance_time_ms << ',' << total_ms << '\n';
        if (o.out_file.empty()) {
            out << row.str();
        } else {
            // append, header only when the file is new/empty
            const bool fresh =
                !fs::exists(o.out_file) || fs::file_size(o.out_file) == 0;
            std::ofstream f(o.out_file, std::ios::app);
            if (!f) throw CliError("cannot write file: " + o.out_file);
            std::string s = row.str();
            if (!fresh) s = s.substr(s.find('\n') + 1);
            f << s;
            out << fmt_double(distance) << '\n';
        }
    } else if (!o.report.empty()) {
        throw CliError("unknown --report format: " + o.report);
    } else {
        out << fmt_double(distance) << '\n';
    }
    return kExitOk;
}

// --- count -----------------------------------------------------------------

struct CountOpts {
    std::string shapes = "left-branch,right-branch,zigzag,full-binary,mixed,random";
    std::string sizes = "21,101,501";
    std::string algos = "rted,zhang-l,zhang-r,klein-h,demaine-h";
    std::uint64_t seed = 1;
    bool execute = false;
    std::string out_file;
};

int cmd_count(const CountOpts& o, std::ostream& out) {
    std::ostringstream csv;
    csv << "shape,size,algo,subproblems";
    if (o.execute) csv << ",executed";
    csv << '\n';

    for (const std::string& shape_s : split_list(o.shapes)) {
        const ShapeKind kind = parse_shape(shape_s);
        for (const std::string& size_s : split_list(o.sizes)) {
            ShapeSpec spec;
            spec.kind = kind;
            spec.size = std::stoi(size_s);
            spec.seed = o.seed;
            const Tree t = gen_shape(spec);
            const TreeIndex ix = build_index(t);
            for (const std::string& algo_s : split_list(o.algos)) {
                const Algorithm algo = parse_algo(algo_s);
                const StrategyMatrix S = strategy_for(algo, ix, ix);
                const StrategyCost cost = strategy_cost(ix, ix, S);
                csv << shape_name(kind) << ',' << spec.size << ',' << algo_s
                    << ',' << cost.count;
                if (o.execute) {
                    auto [D, stats] = gted(ix, ix, S, CostModel::unit());
                    csv << ',' << stats.subproblems;
                }
                csv << '\n';
            }
        }
    }
    write_text(o.out_file, csv.str(), out);
    return kExitOk;
}

// --- join ------------------------------------------------------------------

struct JoinOpts {
    std::string dir;
    std::string tau = "inf";
    std::string algo = "all";
    int threads = 1;
    std::string pairs_out;
};

struct JoinPair {
    std::size_t a, b;
    double distance = 0.0;
    std::uint64_t subproblems = 0;
    double time_ms = 0.0;
};

int cmd_join(const JoinOpts& o, std::ostream& out) {
    std::vector<std::string> names;
    {
        std::error_code ec;
        fs::directory_iterator it(o.dir, ec);
        if (ec) throw CliError("cannot read directory: " + o.dir);
        for (const auto& entry : fs::directory_iterator(o.dir))
            if (entry.is_regular_file())
                names.push_back(entry.path().string());
    }
    std::sort(names.begin(), names.end());

    std::vector<Tree> trees;
    std::vector<TreeIndex> indexes;
    trees.reserve(names.size());
    for (const auto& p : names) trees.push_back(load_bracket_file(p));
    for (const auto& t : trees) indexes.push_back(build_index(t));

    const double tau = (o.tau == "inf")
                           ? std::numeric_limits<double>::infinity()
                           : std::stod(o.tau);
    std::vector<Algorithm> algos;
    if (o.algo == "all") {
        for (const auto& a : kAlgos) algos.push_back(a.algo);
    } else {
        algos.push_back(parse_algo(o.algo));
    }

    std::vector<JoinPair> base_pairs;
    for (std::size_t i = 0; i < trees.size(); ++i)
        for (std::size_t j = i + 1; j < trees.size(); ++j)
            base_pairs.push_back({i, j});

    out << "algo,pairs,matched,subproblems,time_ms\n";
    std::vector<JoinPair> first_algo_pairs;
    for (Algorithm algo : algos) {
        std::vector<JoinPair> pairs = base_pairs;
        std::atomic<std::size_t> next{0};
        const int nthreads = std::max(1, o.threads);
        auto worker = [&]() {
            for (;;) {
                const std::size_t k = next.fetch_add(1);
                if (k >= pairs.size()) return;
                JoinPair& p = pairs[k];
                const auto t0 = std::chrono::steady_clock::now();
                const StrategyMatrix S =
                    strategy_for(algo, indexes[p.a], indexes[p.b]);
                auto [D, stats] =
                    gted(indexes[p.a], indexes[p.b], S, CostModel::unit());
                const auto t1 = std::chrono::steady_clock::now();
                p.distance =
                    D.at(indexes[p.a].root(), indexes[p.b].root());
                p.subproblems = stats.subproblems;
                p.time_ms =
                    std::chrono::duration<double, std::milli>(t1 - t0).count();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();

        std::uint64_t total_sub = 0;
        double total_ms = 0.0;
        std::size_t matched = 0;
        for (const JoinPair& p : pairs) {
            total_sub += p.subproblems;
            total_ms += p.time_ms;
            if (p.distance < tau) ++matched;
        }
        out << algo_name(algo) << ',' << pairs.size() << ',' << matched << ','
            << total_sub << ',' << total_ms << '\n';
        if (first_algo_pairs.empty()) first_algo_pairs = std::move(pairs);
    }

    if (!o.pairs_out.empty()) {
        std::ostringstream csv;
        csv << "file_a,file_b,distance\n";
        for (const JoinPair& p : first_algo_pairs)
            if (p.distance < tau)
                csv << fs::path(names[p.a]).filename().string() << ','
                    << fs::path(names[p.b]).filename().string() << ','
                    << fmt_double(p.distance) << '\n';
        write_text(o.pairs_out, csv.str(), out);
    }
    return kExitOk;
}

// --- generate / ingest -----------------------------------------------------

struct GenerateOpts {
    std::string shape = "random";
    int size = 0;
    int depth = -1;
    std::uint64_t seed = 0;
    int max_depth = 15;
    int max_fanout = 6;
    bool random_labels = false;
    std::string out_file;
};

int cmd_generate(const GenerateOpts& o, std::ostream& out) {
    ShapeSpec spec;
    spec.kind = parse_shape(o.shape);
    spec.size = o.size;
    if (o.depth >= 0) spec.depth = o.depth;
    spec.seed = o.seed;
    spec.max_depth = o.max_depth;
    spec.max_fanout = o.max_fanout;
    spec.random_labels = o.random_labels;
    write_text(o.out_file, serialize_bracket(gen_shape(spec)) + "\n", out);
    return kExitOk;
}

struct IngestOpts {
    std::string xml_file;
    std::string out_file;
};

int cmd_ingest(const IngestOpts& o, std::ostream& out) {
    std::ifstream in(o.xml_file, std::ios::binary);
    if (!in) throw CliError("cannot read file: " + o.xml_file);
    std::ostringstream buf;
    buf << in.rdbuf();
    write_text(o.out_file, serialize_bracket(ingest_xml(buf.str())) + "\n",
               out);
    return kExitOk;
}

// --- strategy --------------------------------------------------------------

struct StrategyOpts {
    std::string file_a, file_b;
    std::string algo = "rted";
    std::string out_file;
};

int cmd_strategy(const StrategyOpts& o, std::ostream& out) {
    const TreeIndex F = build_index(load_bracket_file(o.file_a));
    const TreeIndex G = build_index(load_bracket_file(o.file_b));
    const StrategyMatrix S = strategy_for(parse_algo(o.algo), F, G);
    std::ostringstream csv;
    csv << "v,w,side,kind\n";
    for (NodeId v = 1; v <= F.n; ++v)
        for (NodeId w = 1; w <= G.n; ++w) {
            const PathChoice c = S.at(v, w);
            csv << v << ',' << w << ','
                << (c.side == TreeSide::LeftTree ? 'F' : 'G') << ',';
            switch (c.kind) {
                case PathKind::Left: csv << "left"; break;
                case PathKind::Right: csv << "right"; break;
                case PathKind::Heavy: csv << "heavy"; break;
            }
            csv << '\n';
        }
    write_text(o.out_file, csv.str(), out);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Tree edit distance with LRH path strategies"};
    app.require_subcommand(1);

    ComputeOpts co;
    CLI::App* compute = app.add_subcommand(
        "compute", "Tree edit distance between two bracket files");
    compute->add_option("fileA", co.file_a)->required();
    compute->add_option("fileB", co.file_b)->required();
    compute->add_option("--algo", co.algo,
                        "rted|zhang-l|zhang-r|klein-h|demaine-h|brute");
    compute->add_option("--costs", co.costs, "unit or DEL,INS,REN");
    compute->add_option("--report", co.report, "csv");
    compute->add_option("--out", co.out_file, "append the report row here");

    CountOpts no;
    CLI::App* count = app.add_subcommand(
        "count", "Relevant-subproblem counts on identical shape pairs");
    count->add_option("--shapes", no.shapes);
    count->add_option("--sizes", no.sizes);
    count->add_option("--algos", no.algos);
    count->add_option("--seed", no.seed);
    count->add_flag("--execute", no.execute,
                    "also run the distance computation and report its counter");
    count->add_option("--out", no.out_file);

    JoinOpts jo;
    CLI::App* join = app.add_subcommand(
        "join", "Self join of a directory of bracket trees");
    join->add_option("--dir", jo.dir)->required();
    join->add_option("--tau", jo.tau, "match threshold (strict <), or inf");
    join->add_option("--algo", jo.algo, "one algorithm or 'all'");
    join->add_option("--threads", jo.threads);
    join->add_option("--pairs-out", jo.pairs_out);

    GenerateOpts go;
    CLI::App* gen = app.add_subcommand("generate", "Synthetic tree shapes");
    gen->add_option("--shape", go.shape,
                    "left-branch|right-branch|zigzag|full-binary|mixed|random");
    gen->add_option("--size", go.size);
    gen->add_option("--depth", go.depth, "full-binary depth variant");
    gen->add_option("--seed", go.seed);
    gen->add_option("--max-depth", go.max_depth);
    gen->add_option("--max-fanout", go.max_fanout);
    gen->add_flag("--random-labels", go.random_labels);
    gen->add_option("--out", go.out_file);

    IngestOpts io;
    CLI::App* ingest =
        app.add_subcommand("ingest", "XML element structure to bracket text");
    ingest->add_option("--xml", io.xml_file)->required();
    ingest->add_option("--out", io.out_file);

    StrategyOpts so;
    CLI::App* strat =
        app.add_subcommand("strategy", "Dump the strategy matrix as CSV");
    strat->add_option("fileA", so.file_a)->required();
    strat->add_option("fileB", so.file_b)->required();
    strat->add_option("--algo", so.algo);
    strat->add_option("--out", so.out_file);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*compute) return cmd_compute(co, out);
        if (*count) return cmd_count(no, out);
        if (*join) return cmd_join(jo, out);
        if (*gen) return cmd_generate(go, out);
        if (*ingest) return cmd_ingest(io, out);
        if (*strat) return cmd_strategy(so, out);
    } catch (const OracleLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitOracle;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ted::cli
