#include "ucycle/ucycle.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "digraph.hpp"
#include "dot.hpp"
#include "errors.hpp"
#include "euler.hpp"
#include "registry.hpp"
#include "verifier.hpp"
#include "word_class.hpp"

using namespace ucycle;

struct ucy_class {
    WordClass cls;
};

struct ucy_digraph {
    TransitionDigraph graph;
    ExistenceReport report;
    WeakComponents components;
    WordClass cls;
};

namespace {

thread_local std::string t_last_error;

void set_error(std::string message) { t_last_error = std::move(message); }

template <typename F>
ucy_status guarded(F&& body) noexcept {
    try {
        t_last_error.clear();
        return body();
    } catch (const CapExceededError& e) {
        set_error(e.what());
        return UCY_ERROR_CAP_EXCEEDED;
    } catch (const UnsupportedError& e) {
        set_error(e.what());
        return UCY_ERROR_UNSUPPORTED;
    } catch (const NotEulerianError& e) {
        set_error(e.what());
        return UCY_ERROR_NOT_EULERIAN;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return UCY_ERROR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return UCY_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        set_error(e.what());
        return UCY_ERROR_INTERNAL;
    } catch (...) {
        set_error("unknown failure");
        return UCY_ERROR_INTERNAL;
    }
}

ucy_status fail(ucy_status status, const char* message) {
    set_error(message);
    return status;
}

ucy_status copy_string(const std::string& value, char* buffer, size_t size) {
    if (buffer == nullptr)
        return fail(UCY_ERROR_INVALID_ARGUMENT, "output buffer is null");
    if (size < value.size() + 1) {
        set_error("buffer of " + std::to_string(size) + " bytes cannot hold " +
                  std::to_string(value.size() + 1));
        return UCY_ERROR_BUFFER_TOO_SMALL;
    }
    std::memcpy(buffer, value.c_str(), value.size() + 1);
    return UCY_OK;
}

char* dup_string(const std::string& value) {
    char* out = new char[value.size() + 1];
    std::memcpy(out, value.c_str(), value.size() + 1);
    return out;
}

ucy_status parse_word(const ucy_class* cls, const char* text, Word& out) {
    if (text == nullptr)
        return fail(UCY_ERROR_INVALID_ARGUMENT, "word is null");
    auto parsed = cls->cls.alphabet().parse(text);
    if (!parsed) {
        set_error(std::string("'") + text + "' contains symbols outside the class alphabet '" +
                  cls->cls.alphabet().symbols() + "'");
        return UCY_ERROR_INVALID_ARGUMENT;
    }
    out = std::move(*parsed);
    return UCY_OK;
}

} // namespace

extern "C" {

ucy_status ucy_class_create(const char* class_name, const ucy_class_params* params,
                            ucy_class** out_class) {
    return guarded([&]() -> ucy_status {
        if (class_name == nullptr || params == nullptr || out_class == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "class_name, params and out_class are required");
        *out_class = nullptr;

        ClassSpec spec;
        spec.name = class_name;
        spec.word_length = params->word_length;
        if (params->alphabet_size != 0) {
            if (params->alphabet_size < 0)
                return fail(UCY_ERROR_INVALID_ARGUMENT, "alphabet_size must not be negative");
            spec.alphabet_size = params->alphabet_size;
        }
        if (params->category_count < 0)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "category_count must not be negative");
        if (params->category_count > 0 && params->category_sizes == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "category_sizes is null but category_count > 0");
        for (int32_t i = 0; i < params->category_count; ++i)
            spec.category_sizes.push_back(params->category_sizes[i]);
        if (params->symbols != nullptr)
            spec.symbols = params->symbols;
        if (params->enumeration_cap != 0)
            spec.enumeration_cap = params->enumeration_cap;

        *out_class = new ucy_class{make_class(spec)};
        return UCY_OK;
    });
}

void ucy_class_destroy(ucy_class* cls) { delete cls; }

ucy_status ucy_digraph_build(const ucy_class* cls, ucy_digraph** out_graph) {
    return guarded([&]() -> ucy_status {
        if (cls == nullptr || out_graph == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "cls and out_graph are required");
        *out_graph = nullptr;
        TransitionDigraph graph = build_digraph(cls->cls);
        ExistenceReport report = eulerian_check(graph);
        WeakComponents components = weak_components(graph);
        *out_graph = new ucy_digraph{std::move(graph), std::move(report), std::move(components),
                                     cls->cls};
        return UCY_OK;
    });
}

void ucy_digraph_destroy(ucy_digraph* graph) { delete graph; }

ucy_status ucy_class_get_info(const ucy_class* cls, ucy_class_info* out_info) {
    return guarded([&]() -> ucy_status {
        if (cls == nullptr || out_info == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "cls and out_info are required");
        *out_info = ucy_class_info{};
        out_info->word_length = cls->cls.word_length();
        out_info->alphabet_size = cls->cls.alphabet_size();
        if (auto space = cls->cls.word_space_size()) {
            out_info->has_word_space = 1;
            out_info->word_space = *space;
        }
        if (auto closed = cls->cls.closed_count()) {
            out_info->has_closed_count = 1;
            out_info->closed_count = *closed;
        }
        out_info->enumeration_cap = cls->cls.enumeration_cap();
        return UCY_OK;
    });
}

ucy_status ucy_class_get_symbols(const ucy_class* cls, char* buffer, size_t size) {
    return guarded([&]() -> ucy_status {
        if (cls == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "cls is required");
        return copy_string(cls->cls.alphabet().symbols(), buffer, size);
    });
}

ucy_status ucy_class_contains(const ucy_class* cls, const char* word, int32_t* out_member) {
    return guarded([&]() -> ucy_status {
        if (cls == nullptr || out_member == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "cls and out_member are required");
        Word parsed;
        if (ucy_status status = parse_word(cls, word, parsed); status != UCY_OK)
            return status;
        if (parsed.size() != static_cast<std::size_t>(cls->cls.word_length())) {
            set_error("word length " + std::to_string(parsed.size()) + " does not match n = " +
                      std::to_string(cls->cls.word_length()));
            return UCY_ERROR_INVALID_ARGUMENT;
        }
        *out_member = cls->cls.contains(parsed) ? 1 : 0;
        return UCY_OK;
    });
}

ucy_status ucy_class_count(const ucy_class* cls, uint64_t* out_count) {
    return guarded([&]() -> ucy_status {
        if (cls == nullptr || out_count == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "cls and out_count are required");
        *out_count = count_class(cls->cls);
        return UCY_OK;
    });
}

ucy_status ucy_class_theorem(const ucy_class* cls, ucy_existence* out_verdict, char* citation,
                             size_t citation_size) {
    return guarded([&]() -> ucy_status {
        if (cls == nullptr || out_verdict == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "cls and out_verdict are required");
        const TheoremVerdict& theorem = cls->cls.theorem();
        switch (theorem.verdict) {
        case Existence::Exists: *out_verdict = UCY_EXISTS; break;
        case Existence::NotExists: *out_verdict = UCY_NOT_EXISTS; break;
        case Existence::Unsettled: *out_verdict = UCY_UNSETTLED; break;
        }
        if (citation != nullptr)
            return copy_string(theorem.citation, citation, citation_size);
        return UCY_OK;
    });
}

ucy_status ucy_class_predicted_degree(const ucy_class* cls, const char* window,
                                      int32_t* out_known, uint64_t* out_degree) {
    return guarded([&]() -> ucy_status {
        if (cls == nullptr || out_known == nullptr || out_degree == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "cls, out_known and out_degree are required");
        Word parsed;
        if (ucy_status status = parse_word(cls, window, parsed); status != UCY_OK)
            return status;
        *out_known = 0;
        *out_degree = 0;
        if (auto degree = cls->cls.predicted_degree(parsed)) {
            *out_known = 1;
            *out_degree = *degree;
        }
        return UCY_OK;
    });
}

ucy_status ucy_digraph_report(const ucy_digraph* graph, ucy_existence_report* out_report) {
    return guarded([&]() -> ucy_status {
        if (graph == nullptr || out_report == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "graph and out_report are required");
        *out_report = ucy_existence_report{};
        out_report->eulerian = graph->report.eulerian ? 1 : 0;
        out_report->edge_count = graph->report.edge_count;
        out_report->vertex_count = graph->report.vertex_count;
        out_report->degree_violations = graph->report.degree_violations.size();
        out_report->nontrivial_components = graph->report.nontrivial_components;
        return UCY_OK;
    });
}

ucy_status ucy_digraph_violation(const ucy_digraph* graph, uint64_t index, char* vertex,
                                 size_t vertex_size, uint64_t* in_degree, uint64_t* out_degree) {
    return guarded([&]() -> ucy_status {
        if (graph == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "graph is required");
        const auto& violations = graph->report.degree_violations;
        if (index >= violations.size()) {
            set_error("violation index " + std::to_string(index) + " past the " +
                      std::to_string(violations.size()) + " recorded");
            return UCY_ERROR_OUT_OF_RANGE;
        }
        const DegreeViolation& v = violations[index];
        if (in_degree != nullptr)
            *in_degree = v.in_degree;
        if (out_degree != nullptr)
            *out_degree = v.out_degree;
        if (vertex != nullptr)
            return copy_string(graph->graph.alphabet.format(graph->graph.vertex_word(v.vertex)),
                               vertex, vertex_size);
        return UCY_OK;
    });
}

ucy_status ucy_digraph_vertex(const ucy_digraph* graph, uint64_t index, char* vertex,
                              size_t vertex_size, uint64_t* component) {
    return guarded([&]() -> ucy_status {
        if (graph == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "graph is required");
        if (index >= graph->graph.vertex_count()) {
            set_error("vertex index " + std::to_string(index) + " past the " +
                      std::to_string(graph->graph.vertex_count()) + " vertices");
            return UCY_ERROR_OUT_OF_RANGE;
        }
        if (component != nullptr)
            *component = graph->components.component_of[index];
        if (vertex != nullptr)
            return copy_string(graph->graph.alphabet.format(graph->graph.vertex_word(index)),
                               vertex, vertex_size);
        return UCY_OK;
    });
}

ucy_status ucy_digraph_edge(const ucy_digraph* graph, uint64_t index, char* word,
                            size_t word_size, uint64_t* component) {
    return guarded([&]() -> ucy_status {
        if (graph == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "graph is required");
        if (index >= graph->graph.edge_count()) {
            set_error("edge index " + std::to_string(index) + " past the " +
                      std::to_string(graph->graph.edge_count()) + " edges");
            return UCY_ERROR_OUT_OF_RANGE;
        }
        if (component != nullptr)
            *component = graph->components.component_of[graph->graph.edge_from[index]];
        if (word != nullptr)
            return copy_string(graph->graph.alphabet.format(graph->graph.edge_word(index)), word,
                               word_size);
        return UCY_OK;
    });
}

ucy_status ucy_digraph_cycle(const ucy_digraph* graph, int32_t canonical_rotation,
                             char** out_cycle) {
    return guarded([&]() -> ucy_status {
        if (graph == nullptr || out_cycle == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "graph and out_cycle are required");
        *out_cycle = nullptr;
        const auto circuit = hierholzer(graph->graph);
        UCycle cycle = emit_cycle(circuit, graph->graph, graph->cls);
        Word letters = canonical_rotation != 0
                           ? rotate(cycle.letters, least_rotation(cycle.letters))
                           : std::move(cycle.letters);
        *out_cycle = dup_string(graph->graph.alphabet.format(letters));
        return UCY_OK;
    });
}

ucy_status ucy_digraph_start_vertex(const ucy_digraph* graph, char* vertex, size_t vertex_size) {
    return guarded([&]() -> ucy_status {
        if (graph == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "graph is required");
        const auto circuit = hierholzer(graph->graph);
        UCycle cycle = emit_cycle(circuit, graph->graph, graph->cls);
        return copy_string(graph->graph.alphabet.format(cycle.start_vertex), vertex, vertex_size);
    });
}

ucy_status ucy_digraph_dot(const ucy_digraph* graph, char** out_dot) {
    return guarded([&]() -> ucy_status {
        if (graph == nullptr || out_dot == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "graph and out_dot are required");
        *out_dot = nullptr;
        *out_dot = dup_string(to_dot(graph->graph, graph->cls.name()));
        return UCY_OK;
    });
}

ucy_status ucy_verify(const ucy_class* cls, const char* candidate, ucy_verify_result* out_result) {
    return guarded([&]() -> ucy_status {
        if (cls == nullptr || out_result == nullptr)
            return fail(UCY_ERROR_INVALID_ARGUMENT, "cls and out_result are required");
        Word parsed;
        if (ucy_status status = parse_word(cls, candidate, parsed); status != UCY_OK)
            return status;
        *out_result = ucy_verify_result{};
        VerificationResult verdict = verify_ucycle(parsed, cls->cls);
        out_result->valid = verdict.valid ? 1 : 0;
        switch (verdict.outcome) {
        case VerifyOutcome::Valid: out_result->outcome = UCY_VERIFY_VALID; break;
        case VerifyOutcome::LengthMismatch: out_result->outcome = UCY_VERIFY_LENGTH_MISMATCH; break;
        case VerifyOutcome::NonMemberWindow: out_result->outcome = UCY_VERIFY_NON_MEMBER_WINDOW; break;
        case VerifyOutcome::DuplicateWindow: out_result->outcome = UCY_VERIFY_DUPLICATE_WINDOW; break;
        case VerifyOutcome::Incomplete: out_result->outcome = UCY_VERIFY_INCOMPLETE; break;
        }
        out_result->expected_length = verdict.expected_length;
        out_result->actual_length = verdict.actual_length;
        out_result->window_index = verdict.window_index;
        out_result->first_index = verdict.first_index;
        out_result->missing_count = verdict.missing_count;
        const std::string window = cls->cls.alphabet().format(verdict.window);
        const std::size_t copy = window.size() < UCY_MAX_WINDOW ? window.size() : UCY_MAX_WINDOW - 1;
        std::memcpy(out_result->window, window.c_str(), copy);
        out_result->window[copy] = '\0';
        return UCY_OK;
    });
}

const char* ucy_verify_outcome_name(ucy_verify_outcome outcome) {
    switch (outcome) {
    case UCY_VERIFY_VALID: return "valid";
    case UCY_VERIFY_LENGTH_MISMATCH: return "length_mismatch";
    case UCY_VERIFY_NON_MEMBER_WINDOW: return "non_member_window";
    case UCY_VERIFY_DUPLICATE_WINDOW: return "duplicate_window";
    case UCY_VERIFY_INCOMPLETE: return "incomplete";
    }
    return "unknown";
}

void ucy_string_free(char* s) { delete[] s; }

const char* ucy_status_name(ucy_status status) {
    switch (status) {
    case UCY_OK: return "ok";
    case UCY_ERROR_INVALID_ARGUMENT: return "invalid_argument";
    case UCY_ERROR_CAP_EXCEEDED: return "cap_exceeded";
    case UCY_ERROR_UNSUPPORTED: return "unsupported";
    case UCY_ERROR_NOT_EULERIAN: return "not_eulerian";
    case UCY_ERROR_OUT_OF_RANGE: return "out_of_range";
    case UCY_ERROR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case UCY_ERROR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* ucy_last_error(void) { return t_last_error.c_str(); }

const char* ucy_version(void) { return "0.1.0"; }

} // extern "C"
