// Command-line front end: evaluate truncated Schur multiple zeta values,
// enumerate tableaux, run the signed-cancellation machinery, verify the
// determinant identities, and exercise the quasi-symmetric layer.
//
// Exit codes: 0 success / identity holds, 1 identity or check failure,
// 2 usage, input, or domain errors.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <sys/stat.h>
#include <vector>

#include <CLI11.hpp>

#include "schurzeta/identities.hpp"
#include "schurzeta/json_io.hpp"
#include "schurzeta/qsym.hpp"
#include "schurzeta/tableau.hpp"
#include "schurzeta/zeta.hpp"

namespace sz = schurzeta;
using sz::Json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string quote_if_needed(const std::string& arg) {
    if (arg.find_first_of(" \t\"'{}") == std::string::npos) return arg;
    std::string out = "'";
    for (char c : arg) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    out += "'";
    return out;
}

std::string join_invocation(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) out += ' ';
        out += quote_if_needed(argv[i]);
    }
    return out;
}

bool file_exists(const std::string& path) {
    struct stat st{};
    return ::stat(path.c_str(), &st) == 0 && S_ISREG(st.st_mode);
}

// Accepts a path to a JSON file or inline JSON text.
Json read_json_arg(const std::string& arg, const std::string& what) {
    if (file_exists(arg)) return sz::load_json_file(arg);
    try {
        return Json::parse(arg);
    } catch (const std::exception&) {
        throw UsageError(what + ": '" + arg + "' is neither a readable file nor JSON");
    }
}

// "(2,1)", "2,1" and "[2,1]" all parse as inline partitions.
std::optional<sz::Partition> parse_inline_partition(const std::string& arg) {
    std::string body;
    for (char c : arg) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '[' ||
            c == ']')
            continue;
        body += c;
    }
    if (body.empty()) return sz::Partition();
    std::vector<int> parts;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size()) return std::nullopt;
            parts.push_back(v);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    try {
        return sz::Partition(parts);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

sz::Partition partition_arg(const std::string& arg) {
    if (!file_exists(arg)) {
        if (auto p = parse_inline_partition(arg)) return *p;
    }
    const Json j = read_json_arg(arg, "shape");
    try {
        if (j.is_object() && j.contains("partition"))
            return sz::partition_from_json(j.at("partition"));
        return sz::partition_from_json(j);
    } catch (const std::exception& e) {
        throw UsageError(std::string("shape: ") + e.what());
    }
}

sz::ExponentTableau tableau_arg(const std::string& arg) {
    if (!file_exists(arg)) {
        if (auto p = parse_inline_partition(arg))
            return sz::content_fill(sz::SkewDiagram::of_partition(*p));
    }
    const Json j = read_json_arg(arg, "shape");
    try {
        return sz::tableau_from_json(j);
    } catch (const std::exception& e) {
        throw UsageError(std::string("shape: ") + e.what());
    }
}

sz::Binding binding_arg(const std::string& arg) {
    if (arg.empty()) return {};
    const Json j = read_json_arg(arg, "bindings");
    try {
        return sz::binding_from_json(j);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bindings: ") + e.what());
    }
}

struct Wings {
    std::optional<sz::ExponentTableau> lower;
    std::optional<sz::ExponentTableau> upper;
};

Wings wings_arg(const std::string& arg) {
    Wings w;
    if (arg.empty()) return w;
    const Json j = read_json_arg(arg, "wings");
    if (!j.is_object()) throw UsageError("wings: expected {\"lower\": ..., \"upper\": ...}");
    try {
        if (j.contains("lower") && !j.at("lower").is_null())
            w.lower = sz::tableau_from_json(j.at("lower"));
        if (j.contains("upper") && !j.at("upper").is_null())
            w.upper = sz::tableau_from_json(j.at("upper"));
    } catch (const std::exception& e) {
        throw UsageError(std::string("wings: ") + e.what());
    }
    return w;
}

struct JobConfig {
    std::string shape;
    std::string bindings;
    std::string wings;
    std::string perturb;
    int bound = 0;
    double tol = 0.0;
    int cap = 10;
    bool want_exact = false;
    bool want_float = false;
    bool as_json = false;
    bool as_csv = false;
    int jobs = 1;
    std::string invocation;

    sz::EvalMode mode() const { return want_float ? sz::EvalMode::Float : sz::EvalMode::Exact; }

    int effective_jobs() const {
        if (const char* env = std::getenv("SCHUR_ZETA_JOBS")) {
            try {
                std::size_t used = 0;
                const int j = std::stoi(env, &used);
                if (used != std::string(env).size() || j < 1)
                    throw std::invalid_argument("bad value");
                return j;
            } catch (const std::exception&) {
                throw UsageError(std::string("SCHUR_ZETA_JOBS must be a positive integer, got '") +
                                 env + "'");
            }
        }
        return jobs;
    }
};

void require_bound(const JobConfig& job) {
    if (job.bound < 1) throw UsageError("--bound must be at least 1");
}

void emit(const Json& j, bool pretty = true) {
    std::cout << (pretty ? j.dump(2) : j.dump()) << "\n";
}

// ------------------------------------------------------------------ eval ----

int run_eval(const JobConfig& job) {
    const sz::ExponentTableau tab = tableau_arg(job.shape);
    const sz::Binding b = binding_arg(job.bindings);

    if (job.tol > 0.0) {
        if (job.want_exact)
            throw UsageError("adaptive refinement (--tol) is a floating-point estimate; "
                             "drop --exact or --tol");
        const int cap = job.bound >= 1 ? job.bound : (1 << 20);
        const sz::AdaptiveEstimate est = sz::eval_adaptive(tab, b, job.tol, cap);
        if (job.as_json) {
            emit(Json{{"command", "eval"},
                      {"shape", sz::diagram_to_json(tab.shape())},
                      {"tolerance", job.tol},
                      {"value", Json::array({est.value.real(), est.value.imag()})},
                      {"final_bound", est.final_bound},
                      {"last_increment", est.last_increment},
                      {"converged", est.converged},
                      {"fillings", est.fillings},
                      {"note", "heuristic increment test, not a rigorous tail bound"},
                      {"invocation", job.invocation}});
        } else {
            std::cout << "value ~ " << est.value.real();
            if (est.value.imag() != 0.0) std::cout << " + " << est.value.imag() << "i";
            std::cout << "  (cut-off " << est.final_bound << ", last increment "
                      << est.last_increment << ", " << (est.converged ? "converged" : "NOT converged")
                      << ")\n";
        }
        return est.converged ? 0 : 1;
    }

    require_bound(job);
    const sz::TruncatedValue tv = sz::eval_truncated(tab, b, job.bound, job.mode());
    if (job.as_json) {
        emit(Json{{"command", "eval"},
                  {"shape", sz::diagram_to_json(tab.shape())},
                  {"bound", job.bound},
                  {"mode", job.want_float ? "float" : "exact"},
                  {"value", sz::scalar_to_json(tv.value)},
                  {"fillings", tv.fillings},
                  {"invocation", job.invocation}});
    } else {
        std::cout << "value = " << tv.value.str() << "  (cut-off " << job.bound << ", "
                  << tv.fillings << " fillings)\n";
    }
    return 0;
}

// ------------------------------------------------------------- enumerate ----

int run_enumerate(const JobConfig& job) {
    require_bound(job);
    const sz::ExponentTableau tab = tableau_arg(job.shape);
    const auto fillings = sz::enumerate_ssyt(tab.shape(), job.bound);

    Json rows = Json::array();
    for (const auto& f : fillings) rows.push_back(sz::filling_to_json(f)["entries"]);
    if (job.as_json) {
        emit(Json{{"command", "enumerate"},
                  {"shape", sz::diagram_to_json(tab.shape())},
                  {"bound", job.bound},
                  {"count", fillings.size()},
                  {"fillings", std::move(rows)},
                  {"invocation", job.invocation}});
    } else {
        std::cout << fillings.size() << " fillings\n";
        for (const auto& r : rows) std::cout << r.dump() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- cancel ----

int run_cancel(const JobConfig& job) {
    require_bound(job);
    const sz::Partition lambda = partition_arg(job.shape);
    const Wings w = wings_arg(job.wings);
    const sz::Binding b = binding_arg(job.bindings);
    const sz::ExponentTableau core = sz::content_fill(sz::SkewDiagram::of_partition(lambda));

    const sz::CancellationReport rep =
        sz::cancellation_sum(lambda, core, w.lower, w.upper, b, job.bound, job.mode());
    const bool vanishes = job.mode() == sz::EvalMode::Exact
                              ? rep.cancelled_sum.is_zero()
                              : rep.cancelled_sum.abs() <= (job.tol > 0 ? job.tol : 1e-9);
    if (job.as_json) {
        emit(Json{{"command", "cancel"},
                  {"shape", sz::partition_to_json(lambda)},
                  {"bound", job.bound},
                  {"mode", job.want_float ? "float" : "exact"},
                  {"ssyt_count", rep.ssyt_count},
                  {"cancelled_count", rep.cancelled_count},
                  {"ssyt_sum", sz::scalar_to_json(rep.ssyt_sum)},
                  {"cancelled_sum", sz::scalar_to_json(rep.cancelled_sum)},
                  {"vanishes", vanishes},
                  {"invocation", job.invocation}});
    } else {
        std::cout << "identity-SSYT pairs: " << rep.ssyt_count << "  (weight sum "
                  << rep.ssyt_sum.str() << ")\n"
                  << "cancelling pairs:    " << rep.cancelled_count << "  (signed sum "
                  << rep.cancelled_sum.str() << ")\n"
                  << (vanishes ? "cancellation holds\n" : "cancellation FAILED\n");
    }
    return vanishes ? 0 : 1;
}

// ---------------------------------------------------------------- verify ----

int run_verify(const std::string& which, const JobConfig& job) {
    require_bound(job);
    const sz::Partition lambda = partition_arg(job.shape);
    const Wings w = wings_arg(job.wings);

    sz::IdentityInstance inst;
    if (which == "jt") inst = sz::jacobi_trudi_spec(lambda);
    else if (which == "giambelli") inst = sz::giambelli_spec(lambda);
    else if (which == "laced") inst = sz::laced_giambelli_spec(lambda, w.lower, w.upper);
    else if (which == "skew") inst = sz::skew_giambelli_spec(lambda);
    else if (which == "rectangle") inst = sz::rectangle_pair_spec(lambda, w.lower, w.upper);
    else throw UsageError("unknown identity '" + which + "'");

    const sz::Binding b = binding_arg(job.bindings);

    if (!job.perturb.empty()) {
        std::size_t d = 0, e = 0, c = 0;
        if (std::sscanf(job.perturb.c_str(), "%zu,%zu,%zu", &d, &e, &c) != 3)
            throw UsageError("--perturb expects DET,ENTRY,CELL indices");
        inst = sz::perturb_entry(inst, b, d, e, c);
    }

    if (job.mode() == sz::EvalMode::Exact) {
        // Exact arithmetic needs integer exponents; diagnose before evaluating.
        for (const auto& det : inst.dets)
            for (const auto& entry : det.entries)
                if (entry.kind == sz::EntryKind::Tableau &&
                    !sz::check_integrality(entry.tableau, b))
                    throw UsageError(
                        "exact mode requires nonnegative integer exponents; use --float");
    }

    const sz::VerificationReport rep =
        sz::verify(inst, b, job.bound, job.mode(), job.tol, job.effective_jobs());

    if (job.as_json) {
        emit(sz::report_to_json(rep, job.invocation));
    } else if (job.as_csv) {
        std::cout << sz::report_to_csv(rep, job.invocation);
    } else {
        std::cout << rep.identity << "\n  cut-off " << rep.bound << ", "
                  << (rep.mode == sz::EvalMode::Exact ? "exact" : "float") << " mode\n"
                  << "  direct      = " << rep.direct.str() << "  (" << rep.direct_fillings
                  << " fillings)\n";
        for (std::size_t i = 0; i < rep.determinant_values.size(); ++i)
            std::cout << "  det " << rep.det_labels[i] << " (" << rep.det_sizes[i] << "x"
                      << rep.det_sizes[i] << ") = " << rep.determinant_values[i].str() << "\n";
        std::cout << "  residual    = " << rep.residual.str() << "\n"
                  << (rep.pass ? "PASS" : "FAIL") << "\n";
    }
    return rep.pass ? 0 : 1;
}

// ------------------------------------------------------------------ qsym ----

int run_qsym_antipode(const JobConfig& job) {
    const sz::ExponentTableau tab = tableau_arg(job.shape);
    const sz::Binding b = binding_arg(job.bindings);
    const sz::QSymElement el = sz::schur_qsym(tab, b);
    const sz::QSymElement anti = sz::antipode(el);
    if (job.as_json) {
        emit(Json{{"command", "qsym antipode"},
                  {"shape", sz::diagram_to_json(tab.shape())},
                  {"element", sz::qsym_to_json(el)},
                  {"antipode", sz::qsym_to_json(anti)},
                  {"invocation", job.invocation}});
    } else {
        std::cout << "element:  " << el.str() << "\n"
                  << "antipode: " << anti.str() << "\n";
    }
    return 0;
}

int run_qsym_hopf_check(const JobConfig& job) {
    const sz::QsymCheck axiom = sz::verify_hopf_axiom(job.cap);
    const sz::QsymCheck invol = sz::verify_antipode_involution(job.cap);
    const bool ok = axiom.ok && invol.ok;
    if (job.as_json) {
        emit(Json{{"command", "qsym hopf-check"},
                  {"cap", job.cap},
                  {"axiom_ok", axiom.ok},
                  {"involution_ok", invol.ok},
                  {"detail", axiom.ok ? invol.detail : axiom.detail},
                  {"invocation", job.invocation}});
    } else {
        std::cout << "antipode convolution identity: " << (axiom.ok ? "ok" : "FAILED") << "\n"
                  << "antipode involution:           " << (invol.ok ? "ok" : "FAILED") << "\n";
        if (!ok) std::cout << (axiom.ok ? invol.detail : axiom.detail) << "\n";
    }
    return ok ? 0 : 1;
}

int run_qsym_s_giambelli(const JobConfig& job) {
    const sz::Partition lambda = partition_arg(job.shape);
    const sz::Binding b = binding_arg(job.bindings);
    const sz::ExponentTableau gamma = sz::content_fill(sz::SkewDiagram::of_partition(lambda));
    const sz::QsymCheck chk = sz::verify_s_giambelli(lambda, gamma, b, job.cap);
    if (job.as_json) {
        emit(Json{{"command", "qsym s-giambelli"},
                  {"shape", sz::partition_to_json(lambda)},
                  {"cap", job.cap},
                  {"ok", chk.ok},
                  {"detail", chk.detail},
                  {"invocation", job.invocation}});
    } else {
        std::cout << (chk.ok ? "hook determinant matches the direct expansion"
                             : "MISMATCH: " + chk.detail)
                  << "\n";
    }
    return chk.ok ? 0 : 1;
}

void add_common_io(CLI::App* sub, JobConfig& job, bool with_csv) {
    auto* jf = sub->add_flag("--json", job.as_json, "emit a JSON report");
    if (with_csv) sub->add_flag("--csv", job.as_csv, "emit a CSV report")->excludes(jf);
}

void add_mode_flags(CLI::App* sub, JobConfig& job) {
    auto* ex = sub->add_flag("--exact", job.want_exact, "exact big-rational arithmetic (default)");
    sub->add_flag("--float", job.want_float, "complex floating-point arithmetic")->excludes(ex);
}

}  // namespace

int main(int argc, char** argv) {
    JobConfig job;
    job.invocation = join_invocation(argc, argv);

    CLI::App app{"Schur multiple zeta toolkit: truncated evaluation, tableau enumeration, "
                 "signed cancellation, determinant identity verification, and the "
                 "quasi-symmetric Hopf layer"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "evaluate a truncated (or adaptive) zeta value");
    eval->add_option("--shape", job.shape, "partition, tableau JSON file, or inline JSON")
        ->required();
    eval->add_option("--bindings", job.bindings, "binding JSON file or inline JSON");
    eval->add_option("--bound", job.bound, "summation cut-off (adaptive cap when --tol is set)");
    eval->add_option("--tol", job.tol, "adaptive refinement tolerance (floating mode)");
    add_mode_flags(eval, job);
    add_common_io(eval, job, false);

    auto* enumerate = app.add_subcommand("enumerate", "list semistandard fillings of a shape");
    enumerate->add_option("--shape", job.shape, "partition, diagram JSON file, or inline JSON")
        ->required();
    enumerate->add_option("--bound", job.bound, "largest entry value")->required();
    add_common_io(enumerate, job, false);

    auto* cancel = app.add_subcommand(
        "cancel", "signed sum over the non-semistandard expansion pairs (must vanish)");
    cancel->add_option("--shape", job.shape, "core partition")->required();
    cancel->add_option("--wings", job.wings, "wings JSON: {\"lower\": tableau, \"upper\": tableau}");
    cancel->add_option("--bindings", job.bindings, "binding JSON file or inline JSON");
    cancel->add_option("--bound", job.bound, "summation cut-off")->required();
    cancel->add_option("--tol", job.tol, "tolerance for the floating mode");
    add_mode_flags(cancel, job);
    add_common_io(cancel, job, false);

    auto* verify = app.add_subcommand("verify", "check a determinant identity at a cut-off");
    verify->require_subcommand(1);
    std::vector<std::pair<std::string, std::string>> identities = {
        {"jt", "column determinant (depth-indexed nested-sum columns)"},
        {"giambelli", "hook determinant"},
        {"laced", "hook determinant with wing attachments"},
        {"skew", "reflected hook determinant"},
        {"rectangle", "laced and reflected determinants of a winged rectangle"},
    };
    for (const auto& [name, desc] : identities) {
        auto* sub = verify->add_subcommand(name, desc);
        sub->add_option("--shape", job.shape, "partition (inline or JSON file)")->required();
        sub->add_option("--wings", job.wings,
                        "wings JSON: {\"lower\": tableau, \"upper\": tableau}");
        sub->add_option("--bindings", job.bindings, "binding JSON file or inline JSON");
        sub->add_option("--bound", job.bound, "summation cut-off")->required();
        sub->add_option("--tol", job.tol, "residual tolerance for the floating mode");
        sub->add_option("--jobs", job.jobs, "determinant-entry parallelism")
            ->check(CLI::PositiveNumber);
        sub->add_option("--perturb", job.perturb,
                        "DET,ENTRY,CELL: add +1 to one entry exponent (sensitivity check)");
        add_mode_flags(sub, job);
        add_common_io(sub, job, true);
    }

    auto* qsym = app.add_subcommand("qsym", "quasi-symmetric Hopf layer");
    qsym->require_subcommand(1);
    auto* antipode = qsym->add_subcommand(
        "antipode", "antipode of the quasi-symmetric expansion of a tableau");
    antipode->add_option("--shape", job.shape, "partition or tableau JSON")->required();
    antipode->add_option("--bindings", job.bindings, "binding JSON file or inline JSON");
    add_common_io(antipode, job, false);
    auto* hopf = qsym->add_subcommand("hopf-check",
                                      "antipode convolution identity and involution sweep");
    hopf->add_option("--cap", job.cap, "largest composition weight checked")
        ->check(CLI::PositiveNumber);
    add_common_io(hopf, job, false);
    auto* sgiam = qsym->add_subcommand(
        "s-giambelli", "symbolic hook-determinant expansion under the quasi-shuffle product");
    sgiam->add_option("--shape", job.shape, "partition (inline or JSON file)")->required();
    sgiam->add_option("--bindings", job.bindings, "binding JSON file or inline JSON");
    sgiam->add_option("--cap", job.cap, "coefficient-comparison weight cap")
        ->check(CLI::PositiveNumber);
    add_common_io(sgiam, job, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) return run_eval(job);
        if (enumerate->parsed()) return run_enumerate(job);
        if (cancel->parsed()) return run_cancel(job);
        if (verify->parsed()) {
            for (const auto& [name, desc] : identities)
                if (verify->get_subcommand(name)->parsed()) return run_verify(name, job);
        }
        if (qsym->parsed()) {
            if (antipode->parsed()) return run_qsym_antipode(job);
            if (hopf->parsed()) return run_qsym_hopf_check(job);
            if (sgiam->parsed()) return run_qsym_s_giambelli(job);
        }
        throw UsageError("no command selected");
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
