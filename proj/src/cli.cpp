#include "prefmatch/cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "prefmatch/errors.hpp"
#include "prefmatch/generators.hpp"
#include "prefmatch/graph.hpp"
#include "prefmatch/matching.hpp"
#include "prefmatch/mds.hpp"
#include "prefmatch/node_order.hpp"
#include "prefmatch/report.hpp"
#include "prefmatch/stats.hpp"

namespace prefmatch::cli {

namespace {

using nlohmann::json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

constexpr std::pair<Command, const char*> kCommands[] = {
    {Command::Analyze, "analyze"}, {Command::Preferential, "preferential"},
    {Command::Sample, "sample"},   {Command::Generate, "generate"},
    {Command::Reverse, "reverse"}, {Command::SweepP, "sweep-p"},
    {Command::SweepR, "sweep-r"},
};

constexpr const char* kDefaultSweepBase = "ba:n=1000,m=2,m0=3,p=0.5";

bool writes_edge_list(Command c) { return c == Command::Generate || c == Command::Reverse; }

std::string default_format(Command c) {
    if (writes_edge_list(c)) return "edgelist";
    if (c == Command::SweepP || c == Command::SweepR) return "csv";
    return "json";
}

std::vector<double> default_grid(Command c) {
    std::vector<double> grid;
    if (c == Command::SweepP) {
        for (int i = 0; i <= 10; ++i) grid.push_back(i / 10.0);
    } else if (c == Command::SweepR) {
        for (int i = 0; i <= 4; ++i) grid.push_back(i / 4.0);
    }
    return grid;
}

template <typename T>
T parse_number(std::string_view text, const std::string& what) {
    T value{};
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size())
        throw UsageError("invalid value '" + std::string(text) + "' for " + what);
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

struct GeneratorSpec {
    bool ba = true;
    BaParams ba_params;
    std::size_t er_n = 0;
    std::size_t er_l = 0;
};

GeneratorSpec parse_gen(const std::string& spec, std::uint64_t seed) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string_view rest = colon == std::string::npos ? std::string_view{}
                                                       : std::string_view(spec).substr(colon + 1);
    GeneratorSpec gen;
    if (kind != "ba" && kind != "er") throw UsageError("unknown generator '" + kind + "'");
    gen.ba = kind == "ba";

    std::optional<std::size_t> n, m, m0, l;
    std::optional<double> p;
    if (!rest.empty()) {
        for (auto item : split(rest, ',')) {
            auto eq = item.find('=');
            if (eq == std::string_view::npos) throw UsageError("expected key=value in --gen");
            auto key = std::string(item.substr(0, eq));
            auto value = item.substr(eq + 1);
            if (key == "n") n = parse_number<std::size_t>(value, "n");
            else if (key == "m" && gen.ba) m = parse_number<std::size_t>(value, "m");
            else if (key == "m0" && gen.ba) m0 = parse_number<std::size_t>(value, "m0");
            else if (key == "p" && gen.ba) p = parse_number<double>(value, "p");
            else if (key == "l" && !gen.ba) l = parse_number<std::size_t>(value, "l");
            else throw UsageError("unknown " + kind + " parameter '" + key + "'");
        }
    }
    if (gen.ba) {
        gen.ba_params.n = n.value_or(1000);
        gen.ba_params.m_attach = m.value_or(2);
        gen.ba_params.m0 = m0.value_or(gen.ba_params.m_attach + 1);
        gen.ba_params.p = p.value_or(0.5);
        gen.ba_params.seed = seed;
    } else {
        if (!n || !l) throw UsageError("er generator needs n and l");
        gen.er_n = *n;
        gen.er_l = *l;
    }
    return gen;
}

struct LoadedGraph {
    std::optional<DirectedGraph> graph;
    json source;
    std::string provenance;  // edge-list header line for generated graphs
};

LoadedGraph load_graph(const RunConfig& config) {
    if (config.input && config.gen) throw UsageError("--input and --gen are mutually exclusive");
    LoadedGraph loaded;
    if (config.input) {
        std::ifstream in(*config.input);
        if (!in) throw InputError("cannot open input '" + *config.input + "'");
        auto parsed = parse_edge_list(in);
        loaded.source = {{"kind", "file"},
                         {"path", *config.input},
                         {"duplicate_edges", parsed.duplicate_edges}};
        loaded.graph.emplace(std::move(parsed.graph));
        return loaded;
    }
    if (!config.gen) throw UsageError("one of --input or --gen is required");
    auto gen = parse_gen(*config.gen, config.seed);
    if (gen.ba) {
        loaded.provenance = gen.ba_params.describe();
        loaded.graph.emplace(gen_directed_ba(gen.ba_params));
    } else {
        std::ostringstream desc;
        desc << "er n=" << gen.er_n << " l=" << gen.er_l << " seed=" << config.seed;
        loaded.provenance = desc.str();
        loaded.graph.emplace(gen_directed_er(gen.er_n, gen.er_l, config.seed));
    }
    loaded.source = {{"kind", "generated"}, {"spec", loaded.provenance}};
    return loaded;
}

NodeOrder resolve_order(const RunConfig& config, const DirectedGraph& graph) {
    const auto& spec = config.order;
    if (spec == "asc") return NodeOrder::degree_ascending(graph);
    if (spec == "desc") return NodeOrder::degree_descending(graph);
    if (spec == "random") return NodeOrder::random(graph, config.seed);
    if (spec.rfind("file:", 0) == 0) {
        auto path = spec.substr(5);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open order file '" + path + "'");
        std::vector<NodeId> sequence;
        std::string label;
        while (in >> label) {
            auto id = graph.find(label);
            if (!id) throw UsageError("order file names unknown node '" + label + "'");
            sequence.push_back(*id);
        }
        return NodeOrder::explicit_order(graph, std::move(sequence));
    }
    throw UsageError("unknown order '" + spec + "'");
}

json graph_json(const DirectedGraph& graph, const json& source) {
    return {{"source", source},
            {"N", graph.node_count()},
            {"L", graph.edge_count()},
            {"avg_degree", average_degree(graph)}};
}

std::string graph_comment(const DirectedGraph& graph) {
    return "N=" + std::to_string(graph.node_count()) + " L=" + std::to_string(graph.edge_count()) +
           " avg_degree=" + format_double(average_degree(graph));
}

std::string csv_preamble(const json& config, const std::string& graph_line) {
    std::string out = std::string("# ") + kToolName + ' ' + kToolVersion + '\n';
    out += "# config " + config.dump() + '\n';
    if (!graph_line.empty()) out += "# graph " + graph_line + '\n';
    return out;
}

json envelope(const RunConfig& config, const json& config_echo) {
    return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
            {"command", command_name(config.command)},
            {"config", config_echo}};
}

std::string finish_json(json doc) { return doc.dump(2) + '\n'; }

std::string run_mds_command(const RunConfig& config, const json& echo, const std::string& format) {
    auto loaded = load_graph(config);
    const auto& graph = *loaded.graph;
    auto order = resolve_order(config, graph);

    MdsResult mds;
    if (config.command == Command::Analyze) {
        mds = extract_drivers(graph, max_matching(graph, order), order);
    } else {
        mds = preferential_mds(graph, order, config.m.value_or(graph.node_count()));
    }
    auto hist = driver_degree_histogram(graph, mds);

    if (format == "csv") {
        return csv_preamble(echo, graph_comment(graph)) + "# n_d=" + std::to_string(mds.n_d) +
               " avg_degree_d=" + format_double(mds.avg_degree_d) + '\n' + histogram_csv(hist);
    }
    auto doc = envelope(config, echo);
    doc["graph"] = graph_json(graph, loaded.source);
    json result = {{"order", order.name()}, {"mds", mds_json(graph, mds)},
                   {"histogram", histogram_json(hist)}};
    if (config.command == Command::Preferential)
        result["m"] = config.m.value_or(graph.node_count());
    doc["result"] = std::move(result);
    return finish_json(std::move(doc));
}

std::string run_sample(const RunConfig& config, const json& echo, const std::string& format) {
    auto loaded = load_graph(config);
    const auto& graph = *loaded.graph;
    SampleOptions options;
    options.count = config.samples;
    options.seed = config.seed;
    options.dedupe = config.dedupe;
    options.threads = config.threads;
    auto set = sample_mds(graph, options);

    if (format == "csv") {
        std::string out = csv_preamble(echo, graph_comment(graph));
        out += config.dedupe ? "sample,kd,duplicate\n" : "sample,kd\n";
        for (std::size_t i = 0; i < set.kd.size(); ++i) {
            out += std::to_string(i) + ',' + format_double(set.kd[i]);
            if (config.dedupe) out += set.duplicate[i] ? ",1" : ",0";
            out += '\n';
        }
        return out;
    }
    auto doc = envelope(config, echo);
    doc["graph"] = graph_json(graph, loaded.source);
    auto summary = summary_json(set.summary);
    summary["ratio"] = set.summary.mean_kd / average_degree(graph);
    doc["result"] = {{"summary", std::move(summary)}};
    return finish_json(std::move(doc));
}

std::string run_edge_list_command(const RunConfig& config, const json& echo) {
    auto loaded = load_graph(config);
    std::vector<std::string> header;
    if (config.command == Command::Generate) {
        if (!config.gen) throw UsageError("generate needs --gen");
        header.push_back(loaded.provenance);
        header.push_back(std::string(kToolName) + ' ' + kToolVersion + " config " + echo.dump());
        header.push_back(graph_comment(*loaded.graph));
        return to_edge_list(*loaded.graph, header);
    }
    auto result = reverse_edges(*loaded.graph, {config.r, config.seed});
    header.push_back("reverse R=" + format_double(config.r) + " seed=" +
                     std::to_string(config.seed) + " reversed=" + std::to_string(result.reversed) +
                     " skipped=" + std::to_string(result.skipped));
    header.push_back(std::string(kToolName) + ' ' + kToolVersion + " config " + echo.dump());
    header.push_back(graph_comment(result.graph));
    return to_edge_list(result.graph, header);
}

std::string run_sweep(const RunConfig& config, const json& echo, const std::string& format,
                      const std::vector<double>& grid) {
    std::vector<SweepRow> rows;
    json graph_info;
    std::string graph_line;
    if (config.command == Command::SweepP) {
        if (config.input) throw UsageError("sweep-p generates its graphs; use --gen ba:...");
        auto gen = parse_gen(config.gen.value_or(kDefaultSweepBase), config.seed);
        if (!gen.ba) throw UsageError("sweep-p needs a ba generator");
        rows = sweep_p(grid, gen.ba_params, config.samples, config.seed, config.threads);
        // p only orients edges, so every row shares the base graph's size.
        const auto& ba = gen.ba_params;
        const std::size_t l = ba.m0 + (ba.n - ba.m0) * ba.m_attach;
        const double k = 2.0 * static_cast<double>(l) / static_cast<double>(ba.n);
        graph_info = {{"source", {{"kind", "generated"}, {"spec", ba.describe()}}},
                      {"N", ba.n},
                      {"L", l},
                      {"avg_degree", k}};
        graph_line = "base " + ba.describe() + " N=" + std::to_string(ba.n) + " L=" + std::to_string(l) +
                     " avg_degree=" + format_double(k);
    } else {
        auto loaded = load_graph(config);
        rows = sweep_r(*loaded.graph, grid, config.samples, config.seed, config.threads);
        graph_info = graph_json(*loaded.graph, loaded.source);
        graph_line = graph_comment(*loaded.graph);
    }
    if (format == "csv") return csv_preamble(echo, graph_line) + sweep_csv(rows);
    auto doc = envelope(config, echo);
    doc["graph"] = graph_info;
    doc["result"] = {{"rows", sweep_json(rows)}};
    return finish_json(std::move(doc));
}

std::string execute(const RunConfig& config) {
    auto echo = config_json(config);
    const std::string format = echo["format"];
    const std::vector<double> grid = echo["grid"];

    if (writes_edge_list(config.command)) {
        if (format != "edgelist") throw UsageError("generate and reverse always write edge lists");
    } else if (format != "json" && format != "csv") {
        throw UsageError("--format must be json or csv");
    }
    if (config.samples == 0) throw UsageError("--samples must be at least 1");
    if (!(config.r >= 0.0 && config.r <= 1.0)) throw UsageError("--R must lie in [0, 1]");

    switch (config.command) {
        case Command::Analyze:
        case Command::Preferential: return run_mds_command(config, echo, format);
        case Command::Sample: return run_sample(config, echo, format);
        case Command::Generate:
        case Command::Reverse: return run_edge_list_command(config, echo);
        case Command::SweepP:
        case Command::SweepR: return run_sweep(config, echo, format, grid);
    }
    throw UsageError("unknown command");
}

}  // namespace

const char* command_name(Command command) {
    for (const auto& [c, name] : kCommands) {
        if (c == command) return name;
    }
    return "unknown";
}

std::optional<Command> parse_command(const std::string& name) {
    for (const auto& [c, n] : kCommands) {
        if (name == n) return c;
    }
    return std::nullopt;
}

json config_json(const RunConfig& config) {
    auto nullable = [](const auto& opt) { return opt ? json(*opt) : json(nullptr); };
    return {{"command", command_name(config.command)},
            {"input", nullable(config.input)},
            {"gen", nullable(config.gen)},
            {"order", config.order},
            {"m", nullable(config.m)},
            {"samples", config.samples},
            {"seed", config.seed},
            {"format", config.format.empty() ? default_format(config.command) : config.format},
            {"dedupe", config.dedupe},
            {"grid", config.grid.empty() ? default_grid(config.command) : config.grid},
            {"R", config.r},
            {"out", nullable(config.out)},
            {"threads", config.threads}};
}

RunConfig config_from_json(const json& echoed) {
    try {
        RunConfig config;
        auto command = parse_command(echoed.at("command").get<std::string>());
        if (!command) throw UsageError("unknown command in config");
        config.command = *command;
        auto optional_string = [&](const char* key) -> std::optional<std::string> {
            const auto& v = echoed.at(key);
            if (v.is_null()) return std::nullopt;
            return v.get<std::string>();
        };
        config.input = optional_string("input");
        config.gen = optional_string("gen");
        config.out = optional_string("out");
        config.order = echoed.at("order").get<std::string>();
        if (!echoed.at("m").is_null()) config.m = echoed.at("m").get<std::size_t>();
        config.samples = echoed.at("samples").get<std::size_t>();
        config.seed = echoed.at("seed").get<std::uint64_t>();
        config.format = echoed.at("format").get<std::string>();
        config.dedupe = echoed.at("dedupe").get<bool>();
        config.grid = echoed.at("grid").get<std::vector<double>>();
        config.r = echoed.at("R").get<double>();
        config.threads = echoed.at("threads").get<unsigned>();
        return config;
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed config: ") + e.what());
    }
}

Report run(const RunConfig& config) {
    Report report;
    try {
        report.document = execute(config);
    } catch (const InputError& e) {
        report.status = kExitUnreadable;
        report.diagnostic = e.what();
    } catch (const IngestionError& e) {
        report.status = kExitIngestion;
        report.diagnostic = std::string("ingestion error: ") + e.what();
    } catch (const UsageError& e) {
        report.status = kExitUsage;
        report.diagnostic = std::string("usage error: ") + e.what();
    } catch (const ValidationError& e) {
        report.status = kExitValidation;
        report.diagnostic = std::string("validation error: ") + e.what();
    } catch (const StatisticError& e) {
        report.status = kExitStatistic;
        report.diagnostic = std::string("statistic error: ") + e.what();
    } catch (const std::exception& e) {
        report.status = kExitInternal;
        report.diagnostic = std::string("internal error: ") + e.what();
    }
    if (report.status != kExitOk) report.document.clear();
    return report;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv,
                                    std::optional<std::string> env_seed, int& status,
                                    std::string& message) {
    RunConfig config;
    CLI::App app{"Minimum driver node sets via (preferential) maximum matching", kToolName};
    app.require_subcommand(1);

    std::optional<std::string> input, gen, out, grid_text, format;
    std::optional<std::size_t> m;
    std::optional<std::uint64_t> seed;
    app.add_option("--input", input, "Edge-list file (tail head per line)");
    app.add_option("--gen", gen, "Generator: ba:n=..,m=..,p=..,m0=.. or er:n=..,l=..");
    app.add_option("--order", config.order, "asc | desc | random | file:PATH")->capture_default_str();
    app.add_option("--m", m, "Number of preferential nodes (default N)");
    app.add_option("--samples", config.samples, "Sampled MDSs per graph")->capture_default_str();
    app.add_option("--seed", seed, "Random seed (default $NETCTRL_SEED or 1)");
    app.add_flag("--dedupe", config.dedupe, "Count distinct driver sets while sampling");
    app.add_option("--grid", grid_text, "Comma-separated p or R values");
    app.add_option("--R", config.r, "Reversal probability for `reverse`");
    app.add_option("--format", format, "json | csv");
    app.add_option("--out", out, "Write the report here instead of stdout");
    app.add_option("--threads", config.threads, "Worker threads for sampling")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    const std::map<Command, std::string> blurbs = {
        {Command::Analyze, "Maximum matching in the given order and its driver set"},
        {Command::Preferential, "Preferential matching over the first --m nodes of the order"},
        {Command::Sample, "Average driver degree over randomly sampled driver sets"},
        {Command::Generate, "Write a generated graph as an edge list"},
        {Command::Reverse, "Reverse low-to-high degree edges with probability --R"},
        {Command::SweepP, "BA direction probability sweep (f_hi-lo and driver degree per p)"},
        {Command::SweepR, "Edge-reversal sweep over --grid values of R"},
    };
    for (const auto& [c, name] : kCommands) {
        app.add_subcommand(name, blurbs.at(c))->fallthrough();
    }

    try {
        app.parse(argc, argv);
        auto* sub = app.get_subcommands().front();
        config.command = *parse_command(sub->get_name());
        config.input = input;
        config.gen = gen;
        config.out = out;
        config.m = m;
        if (format) config.format = *format;
        if (seed) {
            config.seed = *seed;
        } else if (env_seed) {
            config.seed = parse_number<std::uint64_t>(*env_seed, "NETCTRL_SEED");
        }
        if (grid_text) {
            for (auto item : split(*grid_text, ','))
                config.grid.push_back(parse_number<double>(item, "--grid"));
        }
    } catch (const CLI::ParseError& e) {
        status = e.get_exit_code() == 0 ? kExitOk : kExitUsage;
        message = e.get_exit_code() == 0 ? app.help() : std::string(e.what());
        return std::nullopt;
    } catch (const UsageError& e) {
        status = kExitUsage;
        message = e.what();
        return std::nullopt;
    }
    return config;
}

}  // namespace prefmatch::cli
