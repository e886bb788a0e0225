#include "latdet/cli.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "latdet/lommel.hpp"
#include "latdet/potentials.hpp"
#include "latdet/specfun.hpp"
#include "latdet/spectral.hpp"
#include "table.hpp"

#ifndef LATDET_VERSION
#define LATDET_VERSION "unknown"
#endif

namespace latdet::cli {

namespace {

using json = nlohmann::ordered_json;

double parse_number(std::string_view s, const std::string& what) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw UsageError(what + ": '" + std::string(s) + "' is not a number");
    }
    return v;
}

std::vector<double> parse_list(std::string_view s, const std::string& what) {
    std::vector<double> out;
    while (true) {
        const auto comma = s.find(',');
        out.push_back(parse_number(s.substr(0, comma), what));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

// `name=value` after a builtin prefix such as `linear:`
double keyed_value(std::string_view rest, std::string_view key, const std::string& spec) {
    if (rest.substr(0, key.size()) != key || rest.size() <= key.size() || rest[key.size()] != '=') {
        throw UsageError("potential '" + spec + "': expected " + std::string(key) + "=<value>");
    }
    return parse_number(rest.substr(key.size() + 1), "potential '" + spec + "'");
}

std::size_t require_p(std::optional<int> p, const std::string& who) {
    if (!p) throw UsageError(who + " needs --p");
    if (*p < 1) throw UsageError("--p must be >= 1, got " + std::to_string(*p));
    return static_cast<std::size_t>(*p);
}

// Parallel map over [0, n) with results in index order. The first failure
// (lowest index) is rethrown after all workers finish.
template <class F>
auto sweep(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{}))> {
    using R = decltype(f(std::size_t{}));
    std::vector<R> results(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                results[i] = f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned workers = sweep_threads(n);
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
        work();
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return results;
}

std::vector<double> grid(const RunConfig& c, const char* name) {
    if (!(c.range_min < c.range_max)) {
        throw UsageError(std::string("--") + name + "min must be below --" + name + "max");
    }
    if (c.steps < 2) throw UsageError("--steps must be >= 2");
    std::vector<double> g(static_cast<std::size_t>(c.steps));
    const double span = c.range_max - c.range_min;
    for (int i = 0; i < c.steps; ++i) g[i] = c.range_min + span * i / (c.steps - 1);
    g.back() = c.range_max;
    return g;
}

struct Output {
    Table table;
    json parameters = json::object();
    Format default_format = Format::report;
};

Output cmd_detratio(const RunConfig& c) {
    Output o;
    const auto p = require_p(c.p, "detratio");
    o.parameters["p"] = p;
    const auto dirichlet = BoundaryCondition::dirichlet();
    double discrete = 0.0;
    std::optional<double> continuum;
    if (c.target == "linear") {
        o.parameters["b"] = c.b;
        discrete = det_ratio(linear_lattice_potential({c.b, p}), dirichlet);
        if (c.continuum) continuum = specfun::continuum_linear_det_ratio(c.b);
        o.table.columns = {"b", "p", "discrete_ratio"};
        o.table.rows.push_back({c.b, static_cast<std::int64_t>(p), discrete});
    } else {
        o.parameters["l"] = c.l;
        const auto v = rosen_morse_lattice_potential({c.l, p});
        discrete = p == 3 ? discdet_p3_closed_form(v) : det_ratio(v, dirichlet);
        if (c.continuum) continuum = specfun::continuum_rosen_morse_det_ratio(c.l);
        o.table.columns = {"l", "p", "discrete_ratio"};
        o.table.rows.push_back({c.l, static_cast<std::int64_t>(p), discrete});
    }
    o.parameters["continuum"] = c.continuum;
    if (continuum) {
        o.table.columns.insert(o.table.columns.end(), {"continuum_ratio", "rel_error"});
        const double rel = *continuum == 0.0 ? std::abs(discrete)
                                             : std::abs(discrete - *continuum) / std::abs(*continuum);
        o.table.rows[0].insert(o.table.rows[0].end(), {*continuum, rel});
    }
    return o;
}

Output cmd_spectrum(const RunConfig& c) {
    Output o;
    const auto v = resolve_potential(c.potential, c.p);
    const auto bc = parse_boundary(c.bc);
    o.parameters["potential"] = c.potential;
    o.parameters["p"] = v.size();
    o.parameters["bc"] = c.bc;
    o.parameters["vectors"] = c.vectors;
    const auto s = eigenvalues(v, bc);
    o.table.columns = {"n", "eigenvalue"};
    if (c.vectors) {
        for (std::size_t j = 1; j <= v.size(); ++j) o.table.columns.push_back("y" + std::to_string(j));
    }
    for (std::size_t n = 0; n < s.size(); ++n) {
        std::vector<Cell> row{static_cast<std::int64_t>(n + 1), s.eigenvalue(n)};
        if (c.vectors) {
            for (double y : s.eigenvector(n)) row.emplace_back(y);
        }
        o.table.add_row(std::move(row));
    }
    return o;
}

Output cmd_figure(const RunConfig& c) {
    Output o;
    o.default_format = Format::csv;
    const auto dirichlet = BoundaryCondition::dirichlet();
    if (c.target == "fig1") {
        const auto p = require_p(c.p, "figure fig1");
        const auto bs = grid(c, "b");
        o.parameters = {{"bmin", c.range_min}, {"bmax", c.range_max}, {"steps", c.steps}, {"p", p}};
        o.table.columns = {"b", "discrete_ratio", "continuum_ratio"};
        const auto rows = sweep(bs.size(), [&](std::size_t i) {
            return std::pair{det_ratio(linear_lattice_potential({bs[i], p}), dirichlet),
                             specfun::continuum_linear_det_ratio(bs[i])};
        });
        for (std::size_t i = 0; i < bs.size(); ++i) o.table.add_row({bs[i], rows[i].first, rows[i].second});
    } else {
        const auto ls = grid(c, "l");
        o.parameters = {{"lmin", c.range_min}, {"lmax", c.range_max}, {"steps", c.steps}};
        o.table.columns = {"l", "p3_ratio", "p5_ratio", "continuum_ratio"};
        const auto rows = sweep(ls.size(), [&](std::size_t i) {
            const double l = ls[i];
            return std::array{discdet_p3_closed_form(rosen_morse_lattice_potential({l, 3})),
                              det_ratio(rosen_morse_lattice_potential({l, 5}), dirichlet),
                              specfun::continuum_rosen_morse_det_ratio(l)};
        });
        for (std::size_t i = 0; i < ls.size(); ++i) {
            o.table.add_row({ls[i], rows[i][0], rows[i][1], rows[i][2]});
        }
    }
    return o;
}

Output cmd_lommel(const RunConfig& c) {
    Output o;
    if (!c.p) throw UsageError("lommel eval needs --p");
    const int p = *c.p;
    o.parameters = {{"nu", c.nu}, {"p", p}, {"z", c.z}, {"method", c.method}};
    const bool all = c.method == "all";

    struct Route {
        const char* name;
        std::function<double()> eval;
    };
    const std::vector<Route> routes{
        {"closed", [&] { return lommel({c.nu, p, c.z}); }},
        {"recurrence",
         [&] {
             if (p < 0) throw std::domain_error("recurrence route needs p >= 0");
             return lommel_recurrence(c.nu, p, c.z).back();
         }},
        {"bessel",
         [&] {
             const auto w = normalized_casoratian(c.nu, p, c.z);
             if (w.fallback) {
                 throw std::domain_error("Bessel route is 0/0 within 1e-6 of integer nu = " +
                                         format_report(c.nu));
             }
             return w.value;
         }},
        {"asymptotic",
         [&] {
             // R^{z,p}(z) with z = 2/(b h)^3, h = 1/(p+1)
             if (p < 0) throw std::domain_error("asymptotic route needs p >= 0");
             if (std::abs(c.nu - c.z) > 1e-12 * std::abs(c.z)) {
                 throw std::domain_error("asymptotic route needs nu = z (transitional regime)");
             }
             const double b = (p + 1) * std::cbrt(2.0 / c.z);
             return lommel_transitional_asymptotic(p, b);
         }},
    };

    o.table.columns = {"method", "value"};
    std::vector<double> values;
    for (const auto& r : routes) {
        if (!all && c.method != r.name) continue;
        if (!all) {
            values.push_back(r.eval());
            o.table.add_row({std::string(r.name), values.back()});
            continue;
        }
        try {
            values.push_back(r.eval());
            o.table.add_row({std::string(r.name), values.back()});
        } catch (const std::exception& e) {
            o.table.summary.emplace_back(std::string(r.name) + "_skipped", std::string(e.what()));
        }
    }
    if (all) {
        if (values.empty()) throw std::domain_error("no Lommel route applies to these parameters");
        double dev = 0.0;
        for (double a : values) {
            for (double b : values) dev = std::max(dev, std::abs(a - b));
        }
        o.table.summary.insert(o.table.summary.begin(), {"max_pairwise_deviation", dev});
    }
    return o;
}

Output cmd_convergence(const RunConfig& c) {
    Output o;
    o.default_format = Format::csv;
    if (c.pmax < 1) throw UsageError("--pmax must be >= 1");
    o.parameters = {{"b", c.b}, {"pmax", c.pmax}};
    // 1, 3, 10, 30, 100, ... and finally pmax itself
    const auto pmax = static_cast<std::size_t>(c.pmax);
    std::vector<std::size_t> schedule;
    for (std::size_t decade = 1; decade <= pmax; decade *= 10) {
        schedule.push_back(decade);
        if (3 * decade <= pmax) schedule.push_back(3 * decade);
    }
    if (schedule.back() != pmax) schedule.push_back(pmax);
    const double cont = specfun::continuum_linear_det_ratio(c.b);
    const auto ratios = sweep(schedule.size(), [&](std::size_t i) {
        return det_ratio(linear_lattice_potential({c.b, schedule[i]}), BoundaryCondition::dirichlet());
    });
    o.table.columns = {"p", "discrete_ratio", "continuum_ratio", "abs_error", "observed_order"};
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        const double err = std::abs(ratios[i] - cont);
        Cell order;
        if (i > 0) {
            const double prev = std::abs(ratios[i - 1] - cont);
            if (err > 0.0 && prev > 0.0) {
                order = std::log(prev / err) / std::log((schedule[i] + 1.0) / (schedule[i - 1] + 1.0));
            }
        }
        o.table.add_row({static_cast<std::int64_t>(schedule[i]), ratios[i], cont, err, order});
    }
    return o;
}

Output cmd_zeromode(const RunConfig& c) {
    Output o;
    const auto v = resolve_potential(c.potential, c.p);
    o.parameters = {{"potential", c.potential}, {"p", v.size()}};
    const auto r = reduced_determinant_zero_mode(v);

    const auto s = eigenvalues(v, BoundaryCondition::dirichlet());
    std::size_t zero = 0;
    for (std::size_t n = 1; n < s.size(); ++n) {
        if (std::abs(s.eigenvalue(n)) < std::abs(s.eigenvalue(zero))) zero = n;
    }
    double product = 1.0;
    for (std::size_t n = 0; n < s.size(); ++n) {
        if (n != zero) product *= s.eigenvalue(n);
    }

    o.table.columns = {"j", "zero_mode"};
    for (std::size_t j = 0; j < r.zero_mode.size(); ++j) {
        o.table.add_row({static_cast<std::int64_t>(j + 1), r.zero_mode[j]});
    }
    const double rel = std::abs(r.value - product) / std::max(std::abs(r.value), std::abs(product));
    o.table.summary = {{"inner_product", r.inner},
                       {"delta_y_p", r.delta_terminal},
                       {"reduced_determinant", r.value},
                       {"eigenvalue_product", product},
                       {"relative_difference", rel}};
    return o;
}

void emit(const Output& o, Format f, const RunConfig& c, std::ostream& out) {
    switch (f) {
        case Format::csv:
            write_csv(o.table, out);
            break;
        case Format::report:
            write_report(o.table, out);
            break;
        case Format::json: {
            json meta;
            meta["command"] = c.target.empty() ? c.command : c.command + " " + c.target;
            meta["parameters"] = o.parameters;
            meta["version"] = LATDET_VERSION;
            write_json(o.table, meta, out);
            break;
        }
    }
}

}  // namespace

PotentialTable resolve_potential(const std::string& spec, std::optional<int> p) {
    if (spec.empty()) throw UsageError("--potential is required");
    const std::string_view s = spec;
    auto builtin_p = [&] { return require_p(p, "potential '" + spec + "'"); };
    auto check_size = [&](PotentialTable t) {
        if (p && static_cast<std::size_t>(*p) != t.size()) {
            throw UsageError("potential '" + spec + "' has " + std::to_string(t.size()) +
                             " values but --p is " + std::to_string(*p));
        }
        return t;
    };
    if (s == "free") return PotentialTable::zeros(builtin_p());
    if (s.starts_with("linear:")) {
        return linear_lattice_potential({keyed_value(s.substr(7), "b", spec), builtin_p()});
    }
    if (s.starts_with("rosen-morse:")) {
        return rosen_morse_lattice_potential({keyed_value(s.substr(12), "l", spec), builtin_p()});
    }
    if (s.starts_with("raw:")) return check_size(PotentialTable(parse_list(s.substr(4), "potential")));
    return check_size(load_potential_csv(spec));
}

BoundaryCondition parse_boundary(const std::string& spec) {
    if (spec == "dirichlet") return BoundaryCondition::dirichlet();
    if (spec == "neumann") return BoundaryCondition::neumann();
    if (spec.starts_with("robin:")) {
        const auto ab = parse_list(std::string_view(spec).substr(6), "--bc");
        if (ab.size() != 2) throw UsageError("--bc robin needs two values: robin:<alpha>,<beta>");
        try {
            return BoundaryCondition::robin(ab[0], ab[1]);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    throw UsageError("--bc must be dirichlet, neumann or robin:<alpha>,<beta>; got '" + spec + "'");
}

unsigned sweep_threads(std::size_t tasks) {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LATTICE_DET_THREADS"); env && *env) {
        const std::string_view s = env;
        unsigned cap = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
        if (ec != std::errc{} || ptr != s.data() + s.size() || cap == 0) {
            throw UsageError("LATTICE_DET_THREADS must be a positive integer, got '" + std::string(s) + "'");
        }
        n = std::min(n, cap);
    }
    return static_cast<unsigned>(std::clamp<std::size_t>(tasks, 1, n));
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        Output o;
        if (c.command == "detratio") {
            o = cmd_detratio(c);
        } else if (c.command == "spectrum") {
            o = cmd_spectrum(c);
        } else if (c.command == "figure") {
            o = cmd_figure(c);
        } else if (c.command == "lommel") {
            o = cmd_lommel(c);
        } else if (c.command == "convergence") {
            o = cmd_convergence(c);
        } else if (c.command == "zeromode") {
            o = cmd_zeromode(c);
        } else {
            throw UsageError("unknown command '" + c.command + "'");
        }

        const Format f = c.format.value_or(o.default_format);
        if (c.out.empty()) {
            emit(o, f, c, out);
        } else {
            std::ostringstream buf;
            emit(o, f, c, buf);
            std::ofstream file(c.out, std::ios::binary);
            if (!(file << buf.str()) || !file.flush()) {
                throw std::runtime_error("cannot write " + c.out);
            }
        }
        return 0;
    } catch (const UsageError& e) {
        err << "latdet: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "latdet: " << e.what() << '\n';
        return 1;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig c;

    CLI::App app{"Discrete Schroedinger problems, lattice determinants and Lommel polynomials", "latdet"};
    app.set_version_flag("--version", std::string(LATDET_VERSION));
    app.require_subcommand(1);
    app.fallthrough();

    const std::map<std::string, Format> formats{
        {"report", Format::report}, {"csv", Format::csv}, {"json", Format::json}};
    std::string format_name;
    app.add_option("--format", format_name, "Output format (report, csv, json)")
        ->check(CLI::IsMember({"report", "csv", "json"}));
    app.add_option("--out", c.out, "Write to this file instead of standard output");

    auto* detratio = app.add_subcommand("detratio", "Lattice determinant ratio det(-D + V)/det(-D)");
    detratio->require_subcommand(1);
    auto* det_lin = detratio->add_subcommand("linear", "V(j) = (b/(p+1))^3 j");
    det_lin->add_option("--b", c.b, "Continuum strength b")->required();
    det_lin->add_option("--p", c.p, "Interior vertices")->required();
    det_lin->add_flag("--continuum", c.continuum, "Also print the continuum value");
    auto* det_rm = detratio->add_subcommand("rosen-morse", "V(j) = -h^2 l(l+1)/cosh^2(hj - 1/2)");
    det_rm->add_option("--l", c.l, "Strength l")->required();
    det_rm->add_option("--p", c.p, "Interior vertices")->required();
    det_rm->add_flag("--continuum", c.continuum, "Also print the continuum value");

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues (and eigenvectors) of a lattice potential");
    spectrum->add_option("--potential", c.potential,
                         "free | linear:b=<r> | rosen-morse:l=<r> | raw:<v1>,<v2>,... | <csv file>")
        ->required();
    spectrum->add_option("--p", c.p, "Interior vertices (required for builtin potentials)");
    spectrum->add_option("--bc", c.bc, "dirichlet | neumann | robin:<alpha>,<beta>");
    spectrum->add_flag("--vectors", c.vectors, "Add eigenvector columns (normalized to y(1) = 1)");

    auto* figure = app.add_subcommand("figure", "Figure data as CSV");
    figure->require_subcommand(1);
    auto* fig1 = figure->add_subcommand("fig1", "Linear potential: discrete and continuum ratios against b");
    fig1->add_option("--bmin", c.range_min, "default -6");
    fig1->add_option("--bmax", c.range_max, "default 3");
    fig1->add_option("--steps", c.steps, "default 181");
    fig1->add_option("--p", c.p, "default 300");
    auto* fig2 = figure->add_subcommand("fig2", "Rosen-Morse: p = 3, p = 5 and continuum ratios against l");
    fig2->add_option("--lmin", c.range_min, "default -6");
    fig2->add_option("--lmax", c.range_max, "default 5");
    fig2->add_option("--steps", c.steps, "default 221");

    auto* lommel = app.add_subcommand("lommel", "Lommel polynomials");
    lommel->require_subcommand(1);
    auto* eval = lommel->add_subcommand("eval", "Evaluate R^{nu,p}(z)");
    eval->add_option("--nu", c.nu, "Order")->required();
    eval->add_option("--p", c.p, "Degree (>= -2 for closed)")->required();
    eval->add_option("--z", c.z, "Argument")->required();
    eval->add_option("--method", c.method, "closed | recurrence | bessel | asymptotic | all")
        ->check(CLI::IsMember({"closed", "recurrence", "bessel", "asymptotic", "all"}));

    auto* convergence = app.add_subcommand("convergence", "Convergence of the lattice ratio to the continuum");
    convergence->require_subcommand(1);
    auto* conv_lin = convergence->add_subcommand("linear", "p = 1, 3, 10, 30, ... up to --pmax");
    conv_lin->add_option("--b", c.b, "Continuum strength b")->required();
    conv_lin->add_option("--pmax", c.pmax, "Largest p (default 1000)");

    auto* zeromode = app.add_subcommand("zeromode", "Determinant with the zero mode omitted (Dirichlet)");
    zeromode->add_option("--potential", c.potential, "raw:<v1>,<v2>,... | <csv file> | builtin spec")
        ->required();
    zeromode->add_option("--p", c.p, "Interior vertices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForVersion& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "latdet: " << e.what() << "\nRun with --help for usage.\n";
        return 2;
    }

    for (auto* sub : app.get_subcommands()) {
        c.command = sub->get_name();
        for (auto* leaf : sub->get_subcommands()) c.target = leaf->get_name();
    }
    if (!format_name.empty()) c.format = formats.at(format_name);

    if (c.command == "figure") {
        const bool f1 = c.target == "fig1";
        if (f1) {
            if (fig1->count("--bmin") == 0) c.range_min = -6.0;
            if (fig1->count("--bmax") == 0) c.range_max = 3.0;
            if (fig1->count("--steps") == 0) c.steps = 181;
            if (!c.p) c.p = 300;
        } else {
            if (fig2->count("--lmin") == 0) c.range_min = -6.0;
            if (fig2->count("--lmax") == 0) c.range_max = 5.0;
            if (fig2->count("--steps") == 0) c.steps = 221;
        }
    }
    return execute(c, out, err);
}

}  // namespace latdet::cli
