#include "geoquant/cli/commands.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "geoquant/cli/report.hpp"
#include "geoquant/cli/verify.hpp"
#include "geoquant/errors.hpp"
#include "geoquant/polarization.hpp"
#include "geoquant/prequant.hpp"
#include "geoquant/representation.hpp"
#include "geoquant/semiclassic.hpp"
#include "geoquant/symplectic.hpp"

namespace geoquant::cli {

namespace {

using nlohmann::json;

class VerificationFailure : public Error {
public:
    using Error::Error;
};

struct Outcome {
    json payload;
    std::string text;
};

struct Globals {
    std::string chart_path;
    std::optional<double> hbar;
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
};

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const NotQuantizableError*>(&e)) return kExitNotQuantizable;
    if (dynamic_cast<const GeometryError*>(&e)) return kExitGeometry;
    if (dynamic_cast<const VerificationFailure*>(&e)) return kExitVerification;
    if (dynamic_cast<const Error*>(&e)) return kExitInput;
    return kExitInternal;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ChartError("cannot read chart file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string format(const char* pattern, double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, pattern, value);
    return buffer;
}

class Session {
public:
    explicit Session(const Globals& globals) : globals_(globals) {
        if (!globals.chart_path.empty()) chart_document_ = read_file(globals.chart_path);
    }

    const std::optional<std::string>& chart_document() const noexcept { return chart_document_; }

    ChartRef chart() const {
        ChartRef chart = chart_document_ ? Chart::from_json(*chart_document_) : Chart::canonical(1);
        return globals_.hbar ? chart->with_parameter(kHbar, *globals_.hbar) : chart;
    }

    double hbar() const { return globals_.hbar.value_or(1.0); }
    std::uint64_t seed() const noexcept { return globals_.seed; }

private:
    const Globals& globals_;
    std::optional<std::string> chart_document_;
};

Outcome bracket(const Session& session, const std::string& f_text, const std::string& g_text) {
    ChartRef chart = session.chart();
    Expr result = poisson_bracket(chart->parse(f_text), chart->parse(g_text), chart);
    return {{{"bracket", result.to_string()}}, result.to_string()};
}

Outcome xfield(const Session& session, const std::string& f_text) {
    ChartRef chart = session.chart();
    VectorField x = hamiltonian_vector_field(chart->parse(f_text), chart);
    json field = json::array();
    std::string text;
    for (int k = 0; k < chart->dimension(); ++k) {
        const std::string component = x[static_cast<std::size_t>(k)].to_string();
        field.push_back({{"coordinate", chart->coordinate(k)}, {"component", component}});
        text += "d/d" + chart->coordinate(k) + ": " + component + "\n";
    }
    text.pop_back();
    return {{{"field", field}, {"vector_field", x.to_string()}}, text};
}

Outcome quantize(const Session& session, const std::string& representation, const std::string& f_text) {
    ChartRef chart = session.chart();
    Expr f = chart->parse(f_text);
    DiffOperator op = representation == "schrodinger" ? quantize_schrodinger(f, chart)
                      : representation == "momentum"  ? quantize_momentum(f, chart)
                                                      : prequantum_operator(f, chart);
    json terms = json::array();
    std::string text;
    for (const auto& [alpha, coefficient] : op.terms()) {
        std::string label = multi_index_label(*chart, alpha);
        terms.push_back({{"index", label}, {"orders", alpha}, {"coefficient", coefficient.to_string()}});
        text += (label.empty() ? std::string("1") : "D[" + label + "]") + "  " + coefficient.to_string() + "\n";
    }
    if (text.empty()) text = "0\n";
    text.pop_back();
    return {{{"representation", representation}, {"operator", op.to_string()}, {"terms", terms}}, text};
}

struct CheckOptions {
    std::string what;
    std::string f;
    std::string distribution_path;
    std::string manifold = "cotangent";
    std::string area;
    int dof = 1;
};

Distribution load_distribution(const ChartRef& chart, const std::string& path) {
    if (path.empty()) return Distribution::vertical(chart);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DistributionError("cannot read distribution file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return Distribution::from_json(chart, buffer.str());
}

json lagrangian_witness(const Distribution& d) {
    const auto& span = d.span();
    for (std::size_t a = 0; a < span.size(); ++a)
        for (std::size_t b = a + 1; b < span.size(); ++b) {
            Expr pairing = symplectic_form(span[a], span[b]);
            if (!pairing.is_zero()) return "omega(X" + std::to_string(a) + ", X" + std::to_string(b) + ") = " + pairing.to_string();
        }
    if (d.generic_rank() != d.chart()->dof())
        return "rank " + std::to_string(d.generic_rank()) + " differs from " + std::to_string(d.chart()->dof());
    return nullptr;
}

json involutive_witness(const Distribution& d) {
    const auto& span = d.span();
    for (std::size_t a = 0; a < span.size(); ++a)
        for (std::size_t b = a + 1; b < span.size(); ++b) {
            VectorField bracket = lie_bracket(span[a], span[b]);
            if (!d.contains(bracket)) return "[X" + std::to_string(a) + ", X" + std::to_string(b) + "] = " + bracket.to_string();
        }
    return nullptr;
}

double evaluate_area(const std::string& text) {
    SymbolTable table;
    table.add_parameter("pi", std::numbers::pi);
    return evaluate(parse(text, table), table.bindings());
}

Outcome check(const Session& session, const CheckOptions& options) {
    json payload{{"what", options.what}};
    bool result = false;
    json witness = nullptr;
    if (options.what == "integrality") {
        ManifoldDescriptor m;
        m.kind = options.manifold == "sphere" ? ManifoldKind::Sphere
                 : options.manifold == "torus" ? ManifoldKind::Torus2
                                               : ManifoldKind::CotangentBundle;
        m.dof = options.dof;
        if (m.kind != ManifoldKind::CotangentBundle) {
            if (options.area.empty()) throw DomainError("--area is required for " + options.manifold);
            m.area = evaluate_area(options.area);
        }
        m.hbar = session.hbar();
        IntegralityResult r = check_integrality(m);
        result = r.quantizable;
        payload["manifold"] = options.manifold;
        payload["class"] = r.integer_class ? json(*r.integer_class) : json(nullptr);
        payload["class_value"] = r.class_value;
        if (!result) witness = r.class_value;
    } else {
        ChartRef chart = session.chart();
        Distribution d = load_distribution(chart, options.distribution_path);
        if (options.what == "polarized") {
            if (options.f.empty()) throw DomainError("--f is required for the polarized check");
            auto violations = polarization_violations(chart->parse(options.f), d);
            result = violations.empty();
            if (!result) {
                witness = json::array();
                for (const auto& v : violations) witness.push_back(v.to_string());
            }
        } else if (options.what == "lagrangian") {
            result = is_lagrangian(d);
            if (!result) witness = lagrangian_witness(d);
        } else if (options.what == "involutive") {
            result = is_involutive(d);
            if (!result) witness = involutive_witness(d);
        } else {
            result = is_real(d);
            if (!result) witness = "conjugate distribution differs";
        }
    }
    payload["result"] = result;
    payload["witness"] = witness;
    std::string text = result ? "true" : "false";
    if (payload.contains("class") && !payload["class"].is_null()) text += " (class " + payload["class"].dump() + ")";
    if (!witness.is_null()) text += "\nwitness: " + (witness.is_string() ? witness.get<std::string>() : witness.dump());
    return {payload, text};
}

struct SpectrumOptions {
    std::string potential;
    double maslov = 0.5;
    double mass = 1.0;
    int n_max = 5;
    int grid_n = 4000;
    double half_width = 12.0;
    double window = 50.0;
    bool oracle = true;
};

json optional_number(const std::optional<double>& value) { return value ? json(*value) : json(nullptr); }

Outcome bs_spectrum(const Session& session, const SpectrumOptions& options) {
    OneDofSystem sys = OneDofSystem::from_text(options.potential, session.hbar(), options.mass, options.maslov);
    sys.window = options.window;
    SpectrumReport report = options.oracle ? bs_report(sys, options.n_max, options.grid_n, options.half_width)
                                           : bs_levels(sys, options.n_max);
    json levels = json::array();
    std::string text = "  n            action              E_bs          E_oracle   relError\n";
    for (const auto& level : report.levels) {
        levels.push_back({{"n", level.n},
                          {"action", level.action},
                          {"E_bs", level.energy},
                          {"E_oracle", optional_number(level.oracle)},
                          {"relError", optional_number(level.relative_error)},
                          {"degenerate", level.degenerate}});
        char line[160];
        std::snprintf(line, sizeof line, "%3d %17.12f %17.12f", level.n, level.action, level.energy);
        text += line;
        text += level.oracle ? format(" %17.12f", *level.oracle) : std::string(18, ' ');
        text += level.relative_error ? format(" %10.3e", *level.relative_error) : std::string();
        if (level.degenerate) text += "  (degenerate)";
        text += "\n";
    }
    text.pop_back();
    json payload{{"potential", sys.potential.to_string()},
                 {"hbar", sys.hbar},
                 {"mass", sys.mass},
                 {"maslov", sys.maslov},
                 {"levels", levels},
                 {"quadrature",
                  {{"nodes", report.quadrature_nodes},
                   {"tolerance", report.quadrature_tolerance},
                   {"evaluations", report.quadrature_evaluations}}}};
    payload["oracle"] = report.grid_n ? json{{"gridN", *report.grid_n}, {"L", *report.half_width}} : json(nullptr);
    return {payload, text};
}

Outcome verify(const Session& session, const std::string& suite) {
    SuiteOutcome outcome = run_suite(suite, session.seed());
    if (!outcome.passed) throw VerificationFailure(suite + " verification failed: " + outcome.summary);
    return {outcome.payload, outcome.summary};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Geometric quantization toolkit", "geoquant"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Globals globals;
    app.add_option("--chart", globals.chart_path, "Chart descriptor JSON file (default: canonical T*R)");
    app.add_option("--hbar", globals.hbar, "Value of hbar")->check(CLI::PositiveNumber);
    app.add_flag("--json", globals.json, "Print the JSON report");
    app.add_option("--seed", globals.seed, "Seed for random corpora and equality sampling");

    std::string command;
    json echo = json::object();
    std::function<Outcome(const Session&)> action;

    std::string f_text, g_text;
    auto* bracket_cmd = app.add_subcommand("bracket", "Poisson bracket {f, g}");
    bracket_cmd->add_option("f", f_text)->required();
    bracket_cmd->add_option("g", g_text)->required();
    bracket_cmd->callback([&] {
        command = "bracket";
        echo = {{"f", f_text}, {"g", g_text}};
        action = [&](const Session& s) { return bracket(s, f_text, g_text); };
    });

    auto* xfield_cmd = app.add_subcommand("xfield", "Hamiltonian vector field of f");
    xfield_cmd->add_option("f", f_text)->required();
    xfield_cmd->callback([&] {
        command = "xfield";
        echo = {{"f", f_text}};
        action = [&](const Session& s) { return xfield(s, f_text); };
    });

    std::string representation;
    auto* quantize_cmd = app.add_subcommand("quantize", "Operator of f in a representation");
    quantize_cmd->add_option("representation", representation)
        ->required()
        ->check(CLI::IsMember({"schrodinger", "momentum", "prequantum"}));
    quantize_cmd->add_option("f", f_text)->required();
    quantize_cmd->callback([&] {
        command = "quantize";
        echo = {{"representation", representation}, {"f", f_text}};
        action = [&](const Session& s) { return quantize(s, representation, f_text); };
    });

    CheckOptions check_options;
    auto* check_cmd = app.add_subcommand("check", "Polarization and integrality checks");
    check_cmd->add_option("what", check_options.what)
        ->required()
        ->check(CLI::IsMember({"polarized", "lagrangian", "involutive", "real", "integrality"}));
    check_cmd->add_option("--f", check_options.f, "Observable for the polarized check");
    check_cmd->add_option("--distribution", check_options.distribution_path, "Distribution JSON file (default: vertical)");
    check_cmd->add_option("--manifold", check_options.manifold)
        ->check(CLI::IsMember({"cotangent", "sphere", "torus"}));
    check_cmd->add_option("--area", check_options.area, "Symplectic area; may use pi");
    check_cmd->add_option("--dof", check_options.dof)->check(CLI::PositiveNumber);
    check_cmd->callback([&] {
        command = "check";
        echo = {{"what", check_options.what}, {"f", check_options.f}, {"distribution", check_options.distribution_path},
                {"manifold", check_options.manifold}, {"area", check_options.area}, {"dof", check_options.dof}};
        action = [&](const Session& s) { return check(s, check_options); };
    });

    SpectrumOptions spectrum;
    bool skip_oracle = false;
    auto* bs_cmd = app.add_subcommand("bs-spectrum", "Bohr-Sommerfeld levels of p^2/2m + V(q)");
    bs_cmd->add_option("potential", spectrum.potential, "V as an expression in q")->required();
    bs_cmd->add_option("--d", spectrum.maslov, "Maslov offset")->capture_default_str();
    bs_cmd->add_option("--mass", spectrum.mass)->check(CLI::PositiveNumber)->capture_default_str();
    bs_cmd->add_option("--nmax", spectrum.n_max)->check(CLI::NonNegativeNumber)->capture_default_str();
    bs_cmd->add_option("--grid-n", spectrum.grid_n, "Oracle grid intervals")->capture_default_str();
    bs_cmd->add_option("--L", spectrum.half_width, "Oracle half-width")->capture_default_str();
    bs_cmd->add_option("--window", spectrum.window, "Turning point search half-width")->capture_default_str();
    bs_cmd->add_flag("--no-oracle", skip_oracle, "Skip the finite-difference comparison");
    bs_cmd->callback([&] {
        command = "bs-spectrum";
        spectrum.oracle = !skip_oracle;
        echo = {{"potential", spectrum.potential}, {"d", spectrum.maslov},       {"mass", spectrum.mass},
                {"nmax", spectrum.n_max},          {"gridN", spectrum.grid_n},   {"L", spectrum.half_width},
                {"window", spectrum.window},       {"oracle", spectrum.oracle}};
        action = [&](const Session& s) { return bs_spectrum(s, spectrum); };
    });

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "Run a built-in verification corpus");
    verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember({"dirac", "jacobi", "fourier"}));
    verify_cmd->callback([&] {
        command = "verify";
        echo = {{"suite", suite}};
        action = [&](const Session& s) { return verify(s, suite); };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    echo["hbar"] = globals.hbar ? json(*globals.hbar) : json(nullptr);
    echo["seed"] = globals.seed;
    echo["chart"] = globals.chart_path.empty() ? json(nullptr) : json(globals.chart_path);

    Report report;
    report.command = command;
    report.args = echo;
    int code = kExitOk;
    std::string text;
    try {
        Session session(globals);
        json digested = echo;
        digested.erase("chart");
        report.input_digest = input_digest(command, digested, session.chart_document());
        Outcome outcome = action(session);
        report.payload = std::move(outcome.payload);
        text = std::move(outcome.text);
    } catch (const std::exception& e) {
        code = exit_code_for(e);
        report.error = e.what();
        if (report.input_digest.empty()) report.input_digest = input_digest(command, echo, std::nullopt);
    }

    if (globals.json) {
        out << report.to_json().dump(2) << "\n";
    } else if (report.ok()) {
        out << text << "\n";
    } else {
        err << "error: " << *report.error << "\n";
    }
    return code;
}

}  // namespace geoquant::cli
