#include "orbijet/cli_app.hpp"

#include "orbijet/criteria.hpp"
#include "orbijet/jetcombi.hpp"
#include "orbijet/mcverify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace orbijet::cli {

namespace {

using json = nlohmann::ordered_json;
using criteria::Component;
using criteria::CriterionReport;
using criteria::GammaMode;
using criteria::LowerBoundVariant;
using criteria::OrbifoldSpec;
using criteria::UpperBoundVariant;

struct SpecInput {
    OrbifoldSpec spec;
    std::string preset = "generic";  // generic | hypersurface | compact | log-pn
    Rational hypersurface_degree = 0;
    std::vector<std::string> applied_defaults;
};

Rational json_to_rational(const json& j, const std::string& field) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_unsigned()) return Rational(static_cast<long long>(j.get<unsigned long long>()));
    throw std::invalid_argument(field + ": use an integer or a rational string like \"5/2\"");
}

Ramification json_to_rho(const json& j, const std::string& field) {
    if (j.is_string()) return Ramification::parse(j.get<std::string>());
    return Ramification::finite(json_to_rational(j, field));
}

SpecInput parse_spec_json(const json& in) {
    SpecInput si;
    OrbifoldSpec& spec = si.spec;
    if (!in.contains("n")) throw std::invalid_argument("n: required");
    spec.n = in.at("n").get<int>();
    spec.r = in.value("r", spec.n);
    spec.k = in.contains("k") ? in.at("k").get<int>() : spec.n;
    if (!in.contains("k")) si.applied_defaults.push_back("k=n");

    if (in.contains("preset")) si.preset = in.at("preset").get<std::string>();
    if (in.contains("tau")) spec.tau = json_to_rational(in.at("tau"), "tau");

    if (in.contains("gamma_mode")) {
        const std::string m = in.at("gamma_mode").get<std::string>();
        if (m == "exact")
            spec.gamma_mode = GammaMode::Exact;
        else if (m == "scaled")
            spec.gamma_mode = GammaMode::Scaled;
        else if (m == "pn-preset" || m == "pn")
            spec.gamma_mode = GammaMode::PnPreset;
        else
            throw std::invalid_argument("gamma_mode: one of exact|scaled|pn-preset");
    }

    if (in.contains("components")) {
        for (const auto& c : in.at("components")) {
            Component comp;
            comp.degree = json_to_rational(c.at("d"), "components.d");
            comp.rho = json_to_rho(c.at("rho"), "components.rho");
            spec.components.push_back(std::move(comp));
        }
    } else if (in.contains("d") && si.preset != "hypersurface") {
        const int N = in.value("N", 1);
        if (N < 0) throw std::invalid_argument("N: must be >= 0");
        Component comp;
        comp.degree = json_to_rational(in.at("d"), "d");
        comp.rho = in.contains("rho") ? json_to_rho(in.at("rho"), "rho") : Ramification::infinite();
        if (!in.contains("rho")) si.applied_defaults.push_back("rho=inf");
        spec.components.assign(static_cast<std::size_t>(N), comp);
    }

    if (si.preset == "hypersurface") {
        // smooth degree-d hypersurface with its tangent sheaf: r = n,
        // gamma_V = 2, lambda_V = d - n - 2, no boundary components
        if (!in.contains("d")) throw std::invalid_argument("d: required for preset=hypersurface");
        si.hypersurface_degree = json_to_rational(in.at("d"), "d");
        spec.r = spec.n;
        spec.gamma_V = 2;
        spec.lambda_V = si.hypersurface_degree - spec.n - 2;
        spec.components.clear();
        si.applied_defaults.push_back("gamma_V=2");
        si.applied_defaults.push_back("lambda_V=d-n-2");
    } else {
        if (in.contains("gamma_V")) {
            spec.gamma_V = json_to_rational(in.at("gamma_V"), "gamma_V");
        } else if (spec.r == spec.n) {
            spec.gamma_V = 2;  // projective tangent convention
            si.applied_defaults.push_back("gamma_V=2");
        } else {
            throw std::invalid_argument("gamma_V: required when r != n");
        }
        if (in.contains("lambda_V")) {
            spec.lambda_V = json_to_rational(in.at("lambda_V"), "lambda_V");
        } else if (spec.r == spec.n) {
            spec.lambda_V = Rational(-(spec.n + 1));
            si.applied_defaults.push_back("lambda_V=-(n+1)");
        } else {
            throw std::invalid_argument("lambda_V: required when r != n");
        }
    }

    spec.validate();
    return si;
}

SpecInput parse_spec_keyvalue(const std::string& text) {
    json j;
    json components = json::array();
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) continue;
        if (key == "component") {
            std::istringstream vs(value);
            std::string d, rho;
            vs >> d >> rho;
            if (d.empty() || rho.empty())
                throw std::invalid_argument("component: expected '<degree> <rho>'");
            components.push_back(json{{"d", d}, {"rho", rho}});
        } else if (key == "n" || key == "r" || key == "k" || key == "N") {
            j[key] = std::stoi(value);
        } else if (key == "preset" || key == "gamma_mode") {
            j[key] = value;
        } else {
            j[key] = value;  // rationals stay strings
        }
    }
    if (!components.empty()) j["components"] = components;
    return parse_spec_json(j);
}

SpecInput load_spec_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open spec file '" + path + "'");
    std::stringstream buffer;
    buffer << f.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return parse_spec_json(json::parse(text));
    return parse_spec_keyvalue(text);
}

json rational_json(const Rational& q) {
    return json{{"value", to_string(q)}, {"float", to_double(q)}};
}

json report_json(const CriterionReport& rep) {
    json j;
    j["criterion"] = rep.id;
    j["satisfied"] = rep.satisfied;
    j["lhs"] = to_string(rep.lhs);
    j["lhs_float"] = to_double(rep.lhs);
    j["rhs"] = to_string(rep.rhs);
    j["rhs_float"] = to_double(rep.rhs);
    j["margin"] = to_string(rep.margin);
    j["margin_float"] = to_double(rep.margin);
    if (!rep.note.empty()) j["note"] = rep.note;
    return j;
}

json manifest_json(const std::string& command, const std::string& input,
                   std::optional<std::uint64_t> seed, const std::string& format) {
    json m;
    m["command"] = command;
    m["input"] = input;
    if (seed) m["seed"] = *seed;
    m["format"] = format;
    return m;
}

void log_timestamp(std::ostream& err, const std::string& command) {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    err << "# " << command << " at " << buf << "\n";
}

bool components_equal(const std::vector<Component>& comps) {
    for (std::size_t i = 1; i < comps.size(); ++i) {
        if (comps[i].degree != comps[0].degree) return false;
        if (comps[i].rho.is_infinite() != comps[0].rho.is_infinite()) return false;
        if (!comps[i].rho.is_infinite() && comps[i].rho.value() != comps[0].rho.value())
            return false;
    }
    return true;
}

// Criteria applicable to the loaded spec; skips silently those whose
// preconditions do not hold.
std::vector<CriterionReport> run_applicable(const SpecInput& si, LowerBoundVariant lower,
                                            UpperBoundVariant upper, json* bounds_out) {
    const OrbifoldSpec& spec = si.spec;
    std::vector<CriterionReport> reports;

    // Morse integral gap, with every implemented bound reported.
    {
        json bounds;
        std::optional<Rational> lower_product, lower_refined;
        if (spec.k >= spec.n)
            lower_product = criteria::morse_lower(spec, LowerBoundVariant::Product);
        lower_refined = criteria::morse_lower(spec, LowerBoundVariant::Refined);
        const Rational upper_tight = criteria::morse_upper(spec, UpperBoundVariant::Tight);
        const Rational upper_simple = criteria::morse_upper(spec, UpperBoundVariant::Simple);
        bounds["7.10"] = lower_product ? rational_json(*lower_product) : json(nullptr);
        bounds["7.12"] = rational_json(*lower_refined);
        bounds["7.14-1"] = rational_json(upper_tight);
        bounds["7.14-2"] = rational_json(upper_simple);
        if (bounds_out) *bounds_out = bounds;

        if (lower == LowerBoundVariant::Product && spec.k < spec.n)
            lower = LowerBoundVariant::Refined;  // product path needs k >= n
        reports.push_back(criteria::check_jet_existence(spec, lower, upper));
    }

    if (spec.components.empty() && spec.k >= spec.n)
        reports.push_back(
            criteria::check_compact(spec.n, spec.r, spec.k, spec.gamma_V, spec.lambda_V));

    const bool projective_family = spec.r == spec.n;
    const bool all_log = [&] {
        for (const auto& c : spec.components)
            if (!c.rho.is_infinite()) return false;
        return !spec.components.empty();
    }();

    if (projective_family && all_log && spec.k >= spec.n)
        reports.push_back(criteria::check_log_pn(spec.n, spec.k, spec.degree_total()));

    const Ramification rho_floor = spec.rho_floor();
    const bool rho_above_n = rho_floor.is_infinite() || rho_floor.value() > spec.n;
    const bool equal = !spec.components.empty() && components_equal(spec.components);
    const int N = spec.component_count();

    if (projective_family && !spec.components.empty() && spec.k >= spec.n && rho_above_n) {
        reports.push_back(criteria::check_orbifold_sum(spec.n, spec.k, spec.components));
        if (equal) {
            const Rational d = spec.components[0].degree;
            const Ramification& rho = spec.components[0].rho;
            reports.push_back(criteria::check_orbifold_uniform(spec.n, spec.k, N, d, rho));
            reports.push_back(criteria::check_orbifold_uniform_half(spec.n, spec.k, N, d, rho));
        }
    }

    if (projective_family && N >= spec.n) {
        reports.push_back(criteria::check_symmetric_subsets(spec.n, spec.components));
        if (equal) {
            const Rational d = spec.components[0].degree;
            const Ramification& rho = spec.components[0].rho;
            reports.push_back(criteria::check_symmetric_binomial(spec.n, N, d, rho));
            reports.push_back(criteria::check_symmetric_uniform(spec.n, N, d, rho));
            reports.push_back(criteria::check_symmetric_uniform_half(spec.n, N, d, rho));
        }
    }
    return reports;
}

void print_reports_table(std::ostream& out, const std::vector<CriterionReport>& reports) {
    out << std::left << std::setw(24) << "criterion" << std::setw(11) << "satisfied"
        << std::setw(22) << "lhs" << std::setw(22) << "rhs" << "margin\n";
    for (const auto& r : reports) {
        std::ostringstream lhs, rhs;
        lhs << to_string(r.lhs) << " (" << std::setprecision(6) << to_double(r.lhs) << ")";
        rhs << to_string(r.rhs) << " (" << std::setprecision(6) << to_double(r.rhs) << ")";
        std::string l = lhs.str(), h = rhs.str();
        if (l.size() > 21) l = std::to_string(to_double(r.lhs));
        if (h.size() > 21) h = std::to_string(to_double(r.rhs));
        out << std::left << std::setw(24) << r.id << std::setw(11)
            << (r.satisfied ? "yes" : "no") << std::setw(22) << l << std::setw(22) << h
            << std::setprecision(6) << to_double(r.margin) << "\n";
    }
}

void print_reports_csv(std::ostream& out, const std::vector<CriterionReport>& reports) {
    out << "criterion,satisfied,lhs,rhs,margin\n";
    for (const auto& r : reports)
        out << r.id << "," << (r.satisfied ? 1 : 0) << "," << to_string(r.lhs) << ","
            << to_string(r.rhs) << "," << to_string(r.margin) << "\n";
}

LowerBoundVariant parse_lower_variant(const std::string& v) {
    if (v == "7.10" || v == "product") return LowerBoundVariant::Product;
    if (v == "7.12" || v == "refined") return LowerBoundVariant::Refined;
    throw CLI::ValidationError("--variant", "unknown lower-bound variant '" + v + "'");
}

UpperBoundVariant parse_upper_variant(const std::string& v) {
    if (v == "7.14-1" || v == "tight") return UpperBoundVariant::Tight;
    if (v == "7.14-2" || v == "simple") return UpperBoundVariant::Simple;
    throw CLI::ValidationError("--variant", "unknown upper-bound variant '" + v + "'");
}

// ---- subcommands -------------------------------------------------------

int cmd_check(const std::string& spec_path, const std::vector<std::string>& variants,
              const std::string& tau_override, const std::vector<std::string>& only,
              const std::string& format, std::ostream& out, std::ostream& err) {
    SpecInput si;
    try {
        si = load_spec_file(spec_path);
        if (!tau_override.empty()) si.spec.tau = parse_rational(tau_override);
        si.spec.validate();
    } catch (const std::exception& e) {
        err << "spec error: " << e.what() << "\n";
        return 2;
    }

    LowerBoundVariant lower = LowerBoundVariant::Refined;
    UpperBoundVariant upper = UpperBoundVariant::Tight;
    try {
        for (const auto& v : variants) {
            if (v == "7.10" || v == "7.12" || v == "product" || v == "refined")
                lower = parse_lower_variant(v);
            else
                upper = parse_upper_variant(v);
        }
    } catch (const std::exception& e) {
        err << "variant error: " << e.what() << "\n";
        return 2;
    }

    json bounds;
    std::vector<CriterionReport> reports = run_applicable(si, lower, upper, &bounds);
    if (!only.empty()) {
        std::vector<CriterionReport> filtered;
        for (const auto& r : reports)
            for (const auto& name : only)
                if (r.id == name) filtered.push_back(r);
        reports = std::move(filtered);
    }

    bool any = false;
    for (const auto& r : reports) any = any || r.satisfied;

    if (format == "json") {
        json j;
        j["manifest"] = manifest_json("check", spec_path, std::nullopt, format);
        if (!si.applied_defaults.empty()) j["manifest"]["defaults"] = si.applied_defaults;
        j["morse_bounds"] = bounds;
        j["reports"] = json::array();
        for (const auto& r : reports) j["reports"].push_back(report_json(r));
        j["any_satisfied"] = any;
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        print_reports_csv(out, reports);
    } else {
        print_reports_table(out, reports);
        out << (any ? "=> at least one criterion satisfied\n" : "=> no criterion satisfied\n");
    }
    return any ? 0 : 1;
}

int cmd_constants(int n_max, const std::string& format, std::ostream& out) {
    struct Row {
        int n;
        Rational exact;
        double flt, asym, ratio;
    };
    std::vector<Row> rows;
    for (int n = 1; n <= n_max; ++n) {
        Row r;
        r.n = n;
        r.exact = criteria::cn(n);
        r.flt = to_double(r.exact);
        r.asym = criteria::cn_asymptotic(n);
        r.ratio = r.flt / r.asym;
        rows.push_back(std::move(r));
    }
    if (format == "json") {
        json j;
        j["manifest"] = manifest_json("constants", "n<=" + std::to_string(n_max), std::nullopt,
                                      format);
        j["rows"] = json::array();
        for (const auto& r : rows) {
            json row;
            row["n"] = r.n;
            row["cn"] = to_string(r.exact);
            row["cn_float"] = r.flt;
            row["asymptotic"] = r.asym;
            row["ratio"] = r.ratio;
            if (r.n >= 3) row["ratio_bound"] = criteria::cn_ratio_bound(r.n);
            j["rows"].push_back(row);
        }
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "n,cn,cn_float,asymptotic,ratio\n";
        for (const auto& r : rows)
            out << r.n << "," << to_string(r.exact) << "," << r.flt << "," << r.asym << ","
                << r.ratio << "\n";
    } else {
        out << std::left << std::setw(5) << "n" << std::setw(26) << "cn" << std::setw(16)
            << "cn_float" << std::setw(16) << "asymptotic" << "ratio\n";
        for (const auto& r : rows) {
            std::string exact = to_string(r.exact);
            if (exact.size() > 25) exact = "(" + std::to_string(exact.size()) + " digits)";
            out << std::left << std::setw(5) << r.n << std::setw(26) << exact << std::setw(16)
                << std::setprecision(8) << r.flt << std::setw(16) << r.asym
                << std::setprecision(8) << r.ratio << "\n";
        }
    }
    return 0;
}

int cmd_dims(int n, int r, int k, long m_max, const std::string& format, std::ostream& out) {
    const long total_dim = jetcombi::jet_space_dim(n, r, k);
    if (format == "json") {
        json j;
        j["manifest"] = manifest_json("dims", "", std::nullopt, format);
        j["n"] = n;
        j["r"] = r;
        j["k"] = k;
        j["jet_space_dim"] = total_dim;
        j["graded"] = json::array();
        for (long m = 0; m <= m_max; ++m)
            j["graded"].push_back(json{{"m", m}, {"dim", jetcombi::graded_dim(k, m, r).str()}});
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "m,dim\n";
        for (long m = 0; m <= m_max; ++m)
            out << m << "," << jetcombi::graded_dim(k, m, r).str() << "\n";
    } else {
        out << "jet space dimension: " << total_dim << "\n";
        out << std::left << std::setw(8) << "m" << "graded dim\n";
        for (long m = 0; m <= m_max; ++m)
            out << std::left << std::setw(8) << m << jetcombi::graded_dim(k, m, r).str() << "\n";
    }
    return 0;
}

struct SweepSetup {
    SpecInput si;
    std::string criterion;
    std::string vary;
};

CriterionReport evaluate_for_sweep(const SweepSetup& setup, const Rational& value) {
    SpecInput si = setup.si;
    OrbifoldSpec& spec = si.spec;

    if (setup.vary == "d") {
        if (si.preset == "hypersurface") {
            spec.lambda_V = value - spec.n - 2;
        } else {
            for (auto& c : spec.components) c.degree = value;
        }
    } else if (setup.vary == "lambda_V") {
        spec.lambda_V = value;
    } else if (setup.vary == "rho") {
        const Ramification rho = Ramification::finite(value);
        for (auto& c : spec.components) c.rho = rho;
    } else if (setup.vary == "N") {
        if (spec.components.empty())
            throw std::invalid_argument("sweep over N needs at least one template component");
        const Component tmpl = spec.components[0];
        const long count = numerator(value).convert_to<long>();
        spec.components.assign(static_cast<std::size_t>(count), tmpl);
    }

    const auto reports = run_applicable(si, LowerBoundVariant::Refined, UpperBoundVariant::Tight,
                                        nullptr);
    for (const auto& r : reports)
        if (r.id == setup.criterion) return r;
    throw std::invalid_argument("criterion '" + setup.criterion +
                                "' is not applicable at value " + to_string(value));
}

int cmd_sweep(const std::string& spec_path, const std::string& vary, const std::string& lo_str,
              const std::string& hi_str, const std::string& criterion,
              const std::string& granularity_str, const std::string& format, std::ostream& out,
              std::ostream& err) {
    SweepSetup setup;
    try {
        setup.si = load_spec_file(spec_path);
        setup.criterion = criterion;
        setup.vary = vary;

        static const std::map<std::string, std::vector<std::string>> monotone = {
            {"compact", {"d", "lambda_V"}},
            {"log-pn", {"d"}},
            {"orbifold-degree-sum", {"d", "rho", "N"}},
            {"orbifold-uniform", {"d", "rho", "N"}},
            {"orbifold-uniform-half", {"d", "rho", "N"}},
            {"symdiff-uniform", {"d", "rho", "N"}},
            {"symdiff-uniform-half", {"d", "rho", "N"}},
            {"symdiff-binomial", {"d", "rho"}},
        };
        const auto it = monotone.find(criterion);
        if (it == monotone.end())
            throw std::invalid_argument("criterion '" + criterion + "' does not support sweeps");
        if (std::find(it->second.begin(), it->second.end(), vary) == it->second.end())
            throw std::invalid_argument("criterion '" + criterion +
                                        "' is not monotone in '" + vary + "'; refused");
    } catch (const std::exception& e) {
        err << "sweep error: " << e.what() << "\n";
        return 2;
    }

    try {
        const Rational lo = parse_rational(lo_str);
        const Rational hi = parse_rational(hi_str);
        const Rational gran = granularity_str.empty() ? Rational(1) : parse_rational(granularity_str);
        if (gran <= 0) throw std::invalid_argument("granularity must be positive");

        json j;
        j["manifest"] = manifest_json("sweep", spec_path, std::nullopt, format);
        j["criterion"] = criterion;
        j["vary"] = vary;

        if (lo > hi) {
            j["flip"] = nullptr;
            j["note"] = "empty range";
            if (format == "json")
                out << j.dump(2) << "\n";
            else
                out << "empty range; nothing to sweep\n";
            return 0;
        }

        const bool at_lo = evaluate_for_sweep(setup, lo).satisfied;
        const bool at_hi = evaluate_for_sweep(setup, hi).satisfied;
        if (at_lo == at_hi) {
            j["flip"] = nullptr;
            j["satisfied_everywhere"] = at_lo;
            if (format == "json")
                out << j.dump(2) << "\n";
            else
                out << (at_lo ? "satisfied across the whole range\n"
                              : "not satisfied anywhere in the range\n");
            return 0;
        }

        // smallest grid value lo + i*gran (plus hi itself) satisfying the
        // criterion, by bisection on the step index
        const Rational span = (hi - lo) / gran;
        const long steps = numerator(span).convert_to<long>() / denominator(span).convert_to<long>();
        auto candidate = [&](long i) { return i > steps ? hi : lo + Rational(i) * gran; };
        const long last = (candidate(steps) < hi) ? steps + 1 : steps;
        long a = 0, b = last;  // not satisfied at a, satisfied at b
        while (b - a > 1) {
            const long mid = a + (b - a) / 2;
            if (evaluate_for_sweep(setup, candidate(mid)).satisfied)
                b = mid;
            else
                a = mid;
        }
        const Rational flip = candidate(b);
        const auto rep = evaluate_for_sweep(setup, flip);

        j["flip"] = to_string(flip);
        j["flip_float"] = to_double(flip);
        j["report_at_flip"] = report_json(rep);
        if (format == "json")
            out << j.dump(2) << "\n";
        else
            out << "criterion " << criterion << " first satisfied at " << vary << " = "
                << to_string(flip) << "\n";
        return 0;
    } catch (const std::exception& e) {
        err << "sweep error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_verify(const std::vector<std::string>& suites, std::uint64_t seed, std::uint64_t samples,
               const std::string& format, std::ostream& out, std::ostream& err) {
    mcverify::SampleConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;

    std::vector<std::string> wanted = suites;
    if (wanted.empty()) {
        // empty suite list: zero checks, trivially clean
        json j;
        j["manifest"] = manifest_json("verify", "", seed, format);
        j["checks"] = json::array();
        j["failures"] = 0;
        if (format == "json")
            out << j.dump(2) << "\n";
        else
            out << "no checks requested\n";
        return 0;
    }

    for (const auto& s : wanted)
        if (!mcverify::is_suite(s)) {
            err << "unknown check suite '" << s << "'\n";
            return 2;
        }

    std::vector<mcverify::CheckRecord> records;
    for (const auto& s : wanted) {
        auto part = mcverify::run_suite(s, cfg);
        records.insert(records.end(), part.begin(), part.end());
    }

    long failures = 0, inconclusive = 0;
    for (const auto& r : records) {
        if (r.verdict == "fail") ++failures;
        if (r.verdict == "inconclusive") ++inconclusive;
    }

    if (format == "json") {
        json j;
        j["manifest"] = manifest_json("verify", "", seed, format);
        j["manifest"]["samples"] = samples;
        j["checks"] = json::array();
        for (const auto& r : records) j["checks"].push_back(json::parse(r.to_json()));
        j["failures"] = failures;
        j["inconclusive"] = inconclusive;
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "check_id,estimate,stderr,bound_lo,bound_hi,verdict,seed,samples\n";
        for (const auto& r : records)
            out << r.check_id << "," << r.estimate << "," << r.stderr_ << "," << r.bound_lo << ","
                << r.bound_hi << "," << r.verdict << "," << r.seed << "," << r.samples << "\n";
    } else {
        for (const auto& r : records)
            out << std::left << std::setw(40) << r.check_id << std::setw(14) << r.verdict
                << r.estimate << "\n";
        out << records.size() << " checks, " << failures << " failures, " << inconclusive
            << " inconclusive\n";
    }
    if (inconclusive > 0) err << "warning: " << inconclusive << " inconclusive check(s)\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"orbijet: existence criteria and verification for orbifold jet differentials"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "evaluate existence criteria for a spec file");
    std::string spec_path, tau_override, format = "table";
    std::vector<std::string> variants, only;
    check->add_option("--spec", spec_path, "orbifold spec file (JSON or key=value)")->required();
    check->add_option("--variant", variants,
                      "bound variants: 7.10|7.12 (lower), 7.14-1|7.14-2 (upper)");
    check->add_option("--tau", tau_override, "override the twist parameter");
    check->add_option("--criteria", only, "restrict to the named criteria");
    check->add_option("--format", format, "json|csv|table");

    // constants
    auto* constants = app.add_subcommand("constants", "degree-threshold constants table");
    int n_max = 10;
    std::string cformat = "table";
    constants->add_option("--nmax", n_max, "largest dimension (<= 64)")->check(CLI::Range(1, 64));
    constants->add_option("--format", cformat, "json|csv|table");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "find the first parameter value satisfying a criterion");
    std::string sweep_spec, vary, lo, hi, criterion, granularity, sformat = "table";
    sweep->add_option("--spec", sweep_spec, "spec template file")->required();
    sweep->add_option("--vary", vary, "parameter to vary: d|N|rho|lambda_V")->required();
    sweep->add_option("--min", lo, "range start")->required();
    sweep->add_option("--max", hi, "range end")->required();
    sweep->add_option("--criterion", criterion, "criterion id")->required();
    sweep->add_option("--granularity", granularity, "step size (default 1)");
    sweep->add_option("--format", sformat, "json|csv|table");

    // verify
    auto* verify = app.add_subcommand("verify", "run statistical/exact verification suites");
    std::vector<std::string> suites;
    std::uint64_t seed = 42, samples = 100000;
    std::string vformat = "table";
    verify->add_option("--suite", suites, "suite names (see --list)");
    bool list_suites = false;
    verify->add_flag("--list", list_suites, "list suite names");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--samples", samples, "sample count per estimate");
    verify->add_option("--format", vformat, "json|csv|table");

    // dims
    auto* dims = app.add_subcommand("dims", "jet space and graded piece dimensions");
    int dn = 1, dr = 1, dk = 1;
    long m_max = 10;
    std::string dformat = "table";
    dims->add_option("--n", dn, "base dimension")->required();
    dims->add_option("--r", dr, "rank")->required();
    dims->add_option("--k", dk, "jet order")->required();
    dims->add_option("--mmax", m_max, "largest weighted degree");
    dims->add_option("--format", dformat, "json|csv|table");

    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (check->parsed()) {
            log_timestamp(err, "check");
            return cmd_check(spec_path, variants, tau_override, only, format, out, err);
        }
        if (constants->parsed()) {
            log_timestamp(err, "constants");
            return cmd_constants(n_max, cformat, out);
        }
        if (sweep->parsed()) {
            log_timestamp(err, "sweep");
            return cmd_sweep(sweep_spec, vary, lo, hi, criterion, granularity, sformat, out, err);
        }
        if (verify->parsed()) {
            log_timestamp(err, "verify");
            if (list_suites) {
                for (const auto& s : mcverify::suite_names()) out << s << "\n";
                return 0;
            }
            return cmd_verify(suites, seed, samples, vformat, out, err);
        }
        if (dims->parsed()) {
            log_timestamp(err, "dims");
            return cmd_dims(dn, dr, dk, m_max, dformat, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace orbijet::cli
