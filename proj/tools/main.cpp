// Command-line front end for the ucycle library. Talks to the shared
// library strictly through the C interface.
//
// Exit codes:
//   0  success (including "exists" runs with no contradiction)
//   1  usage or configuration error: bad flags, unknown class, symbols
//      outside the alphabet, word space over the enumeration cap, n = 1
//      digraph requests
//   2  negative result: no universal cycle exists / candidate is invalid
//   3  internal inconsistency: count routes disagree, or an emitted cycle
//      fails its own verification
//   4  the existence rule and the digraph audit contradict each other

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include <ucycle/ucycle.h>

namespace {

using nlohmann::json;

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kNegative = 2,
    kInternal = 3,
    kContradiction = 4,
};

struct CommonOptions {
    std::string class_name;
    int n = 0;
    int k = 0;
    int kv = 0;
    int kc = 0;
    std::string categories;
    std::string symbols;
    std::uint64_t cap = 0;
    bool json_output = false;
};

void add_common_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--class", opt.class_name, "word class name")->required();
    cmd->add_option("-n", opt.n, "word length")->required();
    cmd->add_option("-k", opt.k, "alphabet size (implied for rankings and category classes)");
    cmd->add_option("--kv", opt.kv, "first block size for the alternating class");
    cmd->add_option("--kc", opt.kc, "second block size for the alternating class");
    cmd->add_option("--categories", opt.categories,
                    "comma-separated category sizes, e.g. 2,2,1");
    cmd->add_option("--symbols", opt.symbols, "display symbols, one character per letter");
    cmd->add_option("--cap", opt.cap, "enumeration cap on the word space (default 10000000)");
    cmd->add_flag("--json", opt.json_output, "emit JSON instead of text");
}

int usage_error(const std::string& message) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return kUsage;
}

int status_error(ucy_status status) {
    std::fprintf(stderr, "error: %s\n", ucy_last_error());
    switch (status) {
    case UCY_ERROR_INVALID_ARGUMENT:
    case UCY_ERROR_CAP_EXCEEDED:
    case UCY_ERROR_UNSUPPORTED:
        return kUsage;
    case UCY_ERROR_NOT_EULERIAN:
        return kNegative;
    default:
        return kInternal;
    }
}

bool parse_category_list(const std::string& text, std::vector<std::int32_t>& out,
                         std::string& error) {
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            const int value = std::stoi(piece, &used);
            if (used != piece.size() || value < 1)
                throw std::invalid_argument(piece);
            out.push_back(value);
        } catch (const std::exception&) {
            error = "bad category size '" + piece + "' in --categories";
            return false;
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return true;
}

struct ClassDeleter {
    void operator()(ucy_class* cls) const { ucy_class_destroy(cls); }
};
struct GraphDeleter {
    void operator()(ucy_digraph* graph) const { ucy_digraph_destroy(graph); }
};
using ClassHandle = std::unique_ptr<ucy_class, ClassDeleter>;
using GraphHandle = std::unique_ptr<ucy_digraph, GraphDeleter>;

struct BoundClass {
    ClassHandle handle;
    ucy_class_info info{};
    std::string symbols;
    std::vector<std::int32_t> category_sizes;
};

// Creates the class handle or reports exit code via `code`.
bool bind_class(const CommonOptions& opt, BoundClass& bound, int& code) {
    std::vector<std::int32_t> sizes;
    const bool block_flags = opt.kv != 0 || opt.kc != 0;
    if (block_flags && !opt.categories.empty()) {
        code = usage_error("--kv/--kc and --categories are two spellings of the same thing; pick one");
        return false;
    }
    if (block_flags) {
        if (opt.kv < 1 || opt.kc < 1) {
            code = usage_error("--kv and --kc must both be given, and be positive");
            return false;
        }
        sizes = {opt.kv, opt.kc};
    } else if (!opt.categories.empty()) {
        std::string error;
        if (!parse_category_list(opt.categories, sizes, error)) {
            code = usage_error(error);
            return false;
        }
    }

    ucy_class_params params{};
    params.word_length = opt.n;
    params.alphabet_size = opt.k;
    params.category_sizes = sizes.empty() ? nullptr : sizes.data();
    params.category_count = static_cast<std::int32_t>(sizes.size());
    params.symbols = opt.symbols.empty() ? nullptr : opt.symbols.c_str();
    params.enumeration_cap = opt.cap;

    ucy_class* raw = nullptr;
    if (ucy_status status = ucy_class_create(opt.class_name.c_str(), &params, &raw);
        status != UCY_OK) {
        code = status_error(status);
        return false;
    }
    bound.handle.reset(raw);
    bound.category_sizes = std::move(sizes);

    if (ucy_status status = ucy_class_get_info(bound.handle.get(), &bound.info);
        status != UCY_OK) {
        code = status_error(status);
        return false;
    }
    char symbols[256];
    if (ucy_status status = ucy_class_get_symbols(bound.handle.get(), symbols, sizeof symbols);
        status != UCY_OK) {
        code = status_error(status);
        return false;
    }
    bound.symbols = symbols;
    return true;
}

json params_json(const BoundClass& bound) {
    json params;
    params["cap"] = bound.info.enumeration_cap;
    params["symbols"] = bound.symbols;
    if (!bound.category_sizes.empty())
        params["categories"] = bound.category_sizes;
    return params;
}

json base_json(const BoundClass& bound, const CommonOptions& opt) {
    json j;
    j["class"] = opt.class_name;
    j["n"] = bound.info.word_length;
    j["k"] = bound.info.alphabet_size;
    j["params"] = params_json(bound);
    return j;
}

void emit_json(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

struct ViolationRow {
    std::string vertex;
    std::uint64_t in = 0;
    std::uint64_t out = 0;
};

bool collect_violations(const ucy_digraph* graph, std::uint64_t count,
                        std::vector<ViolationRow>& rows) {
    rows.clear();
    rows.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        char vertex[256];
        ViolationRow row;
        if (ucy_digraph_violation(graph, i, vertex, sizeof vertex, &row.in, &row.out) != UCY_OK)
            return false;
        row.vertex = vertex;
        rows.push_back(std::move(row));
    }
    return true;
}

json violations_json(const std::vector<ViolationRow>& rows) {
    json array = json::array();
    for (const auto& row : rows)
        array.push_back({{"vertex", row.vertex}, {"in", row.in}, {"out", row.out}});
    return array;
}

json reasons_json(const ucy_existence_report& report) {
    json reasons = json::array();
    if (report.edge_count == 0)
        reasons.push_back("empty_class");
    if (report.degree_violations > 0)
        reasons.push_back("degree_imbalance");
    if (report.nontrivial_components > 1)
        reasons.push_back("multiple_components");
    return reasons;
}

void print_failure_text(const std::string& class_name, const ucy_class_info& info,
                        const ucy_existence_report& report,
                        const std::vector<ViolationRow>& rows) {
    std::printf("no universal cycle exists for %s n=%" PRId32 " k=%" PRId32 "\n",
                class_name.c_str(), info.word_length, info.alphabet_size);
    std::printf("  edges: %" PRIu64 "\n", report.edge_count);
    std::printf("  vertices: %" PRIu64 "\n", report.vertex_count);
    std::printf("  components with edges: %" PRIu64 "\n", report.nontrivial_components);
    std::printf("  unbalanced vertices: %" PRIu64 "\n", report.degree_violations);
    const std::size_t shown = rows.size() < 20 ? rows.size() : 20;
    for (std::size_t i = 0; i < shown; ++i)
        std::printf("    %s: in=%" PRIu64 " out=%" PRIu64 "\n", rows[i].vertex.c_str(),
                    rows[i].in, rows[i].out);
    if (rows.size() > shown)
        std::printf("    ... %zu more\n", rows.size() - shown);
}

int run_generate(const CommonOptions& opt, bool canonical) {
    BoundClass bound;
    int code = kOk;
    if (!bind_class(opt, bound, code))
        return code;

    ucy_digraph* raw_graph = nullptr;
    if (ucy_status status = ucy_digraph_build(bound.handle.get(), &raw_graph); status != UCY_OK)
        return status_error(status);
    GraphHandle graph(raw_graph);

    ucy_existence_report report{};
    if (ucy_status status = ucy_digraph_report(graph.get(), &report); status != UCY_OK)
        return status_error(status);

    json j = base_json(bound, opt);
    j["params"]["canonical"] = canonical;

    if (!report.eulerian) {
        std::vector<ViolationRow> rows;
        if (!collect_violations(graph.get(), report.degree_violations, rows))
            return status_error(UCY_ERROR_INTERNAL);
        if (opt.json_output) {
            j["verdict"] = false;
            j["cycle"] = nullptr;
            j["length"] = nullptr;
            j["start_vertex"] = nullptr;
            j["reasons"] = reasons_json(report);
            j["degree_violations"] = violations_json(rows);
            j["components"] = report.nontrivial_components;
            emit_json(j);
        } else {
            print_failure_text(opt.class_name, bound.info, report, rows);
        }
        return kNegative;
    }

    char* cycle_raw = nullptr;
    if (ucy_status status = ucy_digraph_cycle(graph.get(), canonical ? 1 : 0, &cycle_raw);
        status != UCY_OK)
        return status_error(status);
    std::string cycle(cycle_raw);
    ucy_string_free(cycle_raw);

    char start_vertex[256];
    if (ucy_status status =
            ucy_digraph_start_vertex(graph.get(), start_vertex, sizeof start_vertex);
        status != UCY_OK)
        return status_error(status);

    // The emitted cycle never leaves the process unchecked.
    ucy_verify_result check{};
    if (ucy_status status = ucy_verify(bound.handle.get(), cycle.c_str(), &check);
        status != UCY_OK) {
        std::fprintf(stderr, "internal error: could not verify the emitted cycle: %s\n",
                     ucy_last_error());
        return kInternal;
    }
    if (check.valid == 0) {
        std::fprintf(stderr,
                     "internal error: emitted cycle failed verification (%s at window %" PRIu64
                     ")\n",
                     ucy_verify_outcome_name(check.outcome), check.window_index);
        return kInternal;
    }

    if (opt.json_output) {
        j["verdict"] = true;
        j["cycle"] = cycle;
        j["length"] = static_cast<std::uint64_t>(cycle.size());
        j["start_vertex"] = start_vertex;
        j["reasons"] = json::array();
        j["degree_violations"] = json::array();
        j["components"] = report.nontrivial_components;
        emit_json(j);
    } else {
        std::printf("%s\n", cycle.c_str());
    }
    return kOk;
}

int run_verify(const CommonOptions& opt, const std::string& candidate) {
    BoundClass bound;
    int code = kOk;
    if (!bind_class(opt, bound, code))
        return code;

    ucy_verify_result result{};
    if (ucy_status status = ucy_verify(bound.handle.get(), candidate.c_str(), &result);
        status != UCY_OK)
        return status_error(status);

    if (opt.json_output) {
        json j = base_json(bound, opt);
        j["valid"] = result.valid != 0;
        if (result.valid != 0) {
            j["reason"] = nullptr;
        } else {
            j["reason"] = {{"kind", ucy_verify_outcome_name(result.outcome)},
                           {"window", result.window},
                           {"index", result.window_index},
                           {"first_index", result.first_index},
                           {"expected", result.expected_length},
                           {"actual", result.actual_length},
                           {"missing", result.missing_count}};
        }
        emit_json(j);
        return result.valid != 0 ? kOk : kNegative;
    }

    if (result.valid != 0) {
        std::printf("valid: %" PRIu64 " windows, each class member exactly once\n",
                    result.actual_length);
        return kOk;
    }
    switch (result.outcome) {
    case UCY_VERIFY_LENGTH_MISMATCH:
        std::printf("invalid: length %" PRIu64 " does not match the class size %" PRIu64 "\n",
                    result.actual_length, result.expected_length);
        break;
    case UCY_VERIFY_NON_MEMBER_WINDOW:
        std::printf("invalid: window %s at index %" PRIu64 " is not in the class\n",
                    result.window, result.window_index);
        break;
    case UCY_VERIFY_DUPLICATE_WINDOW:
        std::printf("invalid: window %s appears at indices %" PRIu64 " and %" PRIu64 "\n",
                    result.window, result.first_index, result.window_index);
        break;
    case UCY_VERIFY_INCOMPLETE:
        std::printf("invalid: %" PRIu64 " class members never appear\n", result.missing_count);
        break;
    case UCY_VERIFY_VALID:
        break;
    }
    return kNegative;
}

int run_count(const CommonOptions& opt) {
    BoundClass bound;
    int code = kOk;
    if (!bind_class(opt, bound, code))
        return code;

    std::uint64_t count = 0;
    if (ucy_status status = ucy_class_count(bound.handle.get(), &count); status != UCY_OK)
        return status_error(status);

    if (opt.json_output) {
        json j = base_json(bound, opt);
        j["count"] = count;
        if (bound.info.has_closed_count != 0)
            j["closed_count"] = bound.info.closed_count;
        else
            j["closed_count"] = nullptr;
        emit_json(j);
    } else {
        std::printf("%" PRIu64 "\n", count);
    }
    return kOk;
}

const char* existence_name(ucy_existence verdict) {
    switch (verdict) {
    case UCY_EXISTS: return "exists";
    case UCY_NOT_EXISTS: return "not_exists";
    case UCY_UNSETTLED: return "unsettled";
    }
    return "unsettled";
}

int run_exists(const CommonOptions& opt) {
    BoundClass bound;
    int code = kOk;
    if (!bind_class(opt, bound, code))
        return code;

    ucy_existence verdict = UCY_UNSETTLED;
    char citation[512];
    if (ucy_status status =
            ucy_class_theorem(bound.handle.get(), &verdict, citation, sizeof citation);
        status != UCY_OK)
        return status_error(status);

    bool engine_checked = false;
    bool engine_eulerian = false;
    ucy_existence_report report{};
    std::string skip_reason;
    if (opt.n < 2) {
        skip_reason = "the transition digraph needs n >= 2";
    } else {
        ucy_digraph* raw_graph = nullptr;
        const ucy_status status = ucy_digraph_build(bound.handle.get(), &raw_graph);
        if (status == UCY_OK) {
            GraphHandle graph(raw_graph);
            if (ucy_status rs = ucy_digraph_report(graph.get(), &report); rs != UCY_OK)
                return status_error(rs);
            engine_checked = true;
            engine_eulerian = report.eulerian != 0;
        } else if (status == UCY_ERROR_CAP_EXCEEDED) {
            skip_reason = ucy_last_error();
        } else {
            return status_error(status);
        }
    }

    std::string agreement;
    if (verdict == UCY_UNSETTLED)
        agreement = "unsettled";
    else if (!engine_checked)
        agreement = "unchecked";
    else if ((verdict == UCY_EXISTS) == engine_eulerian)
        agreement = "consistent";
    else
        agreement = "contradiction";

    if (opt.json_output) {
        json j = base_json(bound, opt);
        j["rule"] = {{"verdict", existence_name(verdict)}, {"citation", citation}};
        json engine;
        if (engine_checked) {
            engine["checked"] = true;
            engine["eulerian"] = engine_eulerian;
            engine["edges"] = report.edge_count;
            engine["vertices"] = report.vertex_count;
            engine["unbalanced"] = report.degree_violations;
            engine["components"] = report.nontrivial_components;
        } else {
            engine["checked"] = false;
            engine["eulerian"] = nullptr;
            engine["skip_reason"] = skip_reason;
        }
        j["engine"] = engine;
        j["agreement"] = agreement;
        emit_json(j);
    } else {
        std::printf("rule: %s\n", existence_name(verdict));
        std::printf("  reason: %s\n", citation);
        if (engine_checked)
            std::printf("engine: %s (edges=%" PRIu64 ", vertices=%" PRIu64 ", unbalanced=%" PRIu64
                        ", components=%" PRIu64 ")\n",
                        engine_eulerian ? "eulerian" : "not eulerian", report.edge_count,
                        report.vertex_count, report.degree_violations,
                        report.nontrivial_components);
        else
            std::printf("engine: skipped (%s)\n", skip_reason.c_str());
        std::printf("agreement: %s\n", agreement.c_str());
    }

    if (agreement == "contradiction") {
        std::fprintf(stderr,
                     "error: the existence rule says %s but the digraph audit says %s\n",
                     existence_name(verdict), engine_eulerian ? "eulerian" : "not eulerian");
        return kContradiction;
    }
    return kOk;
}

int run_graph(const CommonOptions& opt) {
    BoundClass bound;
    int code = kOk;
    if (!bind_class(opt, bound, code))
        return code;

    ucy_digraph* raw_graph = nullptr;
    if (ucy_status status = ucy_digraph_build(bound.handle.get(), &raw_graph); status != UCY_OK)
        return status_error(status);
    GraphHandle graph(raw_graph);

    char* dot_raw = nullptr;
    if (ucy_status status = ucy_digraph_dot(graph.get(), &dot_raw); status != UCY_OK)
        return status_error(status);
    std::string dot(dot_raw);
    ucy_string_free(dot_raw);

    if (opt.json_output) {
        json j = base_json(bound, opt);
        j["dot"] = dot;
        emit_json(j);
    } else {
        std::fputs(dot.c_str(), stdout);
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"universal cycles for constrained word classes"};
    app.set_version_flag("--version", ucy_version());
    app.require_subcommand(1);

    CommonOptions generate_opt;
    bool canonical = false;
    CLI::App* generate = app.add_subcommand("generate", "construct a universal cycle");
    add_common_options(generate, generate_opt);
    generate->add_flag("--canonical", canonical, "rotate the cycle to its least form");

    CommonOptions verify_opt;
    std::string candidate;
    CLI::App* verify = app.add_subcommand("verify", "check a candidate cycle");
    add_common_options(verify, verify_opt);
    verify->add_option("candidate", candidate, "candidate cycle, in display symbols")->required();

    CommonOptions count_opt;
    CLI::App* count = app.add_subcommand("count", "count the class members");
    add_common_options(count, count_opt);

    CommonOptions exists_opt;
    CLI::App* exists = app.add_subcommand("exists", "existence rule vs. digraph audit");
    add_common_options(exists, exists_opt);

    CommonOptions graph_opt;
    CLI::App* graph = app.add_subcommand("graph", "emit the transition digraph as DOT");
    add_common_options(graph, graph_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (generate->parsed())
        return run_generate(generate_opt, canonical);
    if (verify->parsed())
        return run_verify(verify_opt, candidate);
    if (count->parsed())
        return run_count(count_opt);
    if (exists->parsed())
        return run_exists(exists_opt);
    if (graph->parsed())
        return run_graph(graph_opt);
    return kUsage;
}
