#include <heatansatz_cli/cli.hpp>

#include <heatansatz/closed_forms.hpp>
#include <heatansatz/csv.hpp>
#include <heatansatz/operators.hpp>
#include <heatansatz/residuals.hpp>
#include <heatansatz/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>

namespace heatansatz::cli
{

namespace
{

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    for (const char c : text) {
        if (c == sep) {
            out.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }
    out.push_back(item);
    return out;
}

std::vector<MobiusParam> parse_poles(const std::string& text)
{
    std::vector<MobiusParam> out;
    for (const auto& item : split(text, ',')) {
        out.push_back(parse_mobius(item));
    }
    return out;
}

std::vector<Rational> parse_times(const std::string& text)
{
    std::vector<Rational> out;
    for (const auto& item : split(text, ',')) {
        out.push_back(parse_rational(item));
    }
    return out;
}

struct PhiOptions {
    unsigned n = 0;
    int delta = 0;
    unsigned qmax = 6;
    std::string mode = "reduced";
    std::string top = "0";
    std::vector<std::string> p;
    std::string table = "phi";
    bool json = false;
};

// Parameters shared by eval and burgers.
struct FieldOptions {
    std::string family;
    int delta = 0;
    std::string alpha = "1";
    std::string beta = "0";
    std::string alpha1 = "1";
    std::string beta1 = "0";
    std::string alpha2 = "0";
    std::string beta2 = "1";
    unsigned n = 0;
    std::string top = "0";
    std::string poles;
    unsigned K = 10;
    std::string r0 = "0";
    std::string t = "1";
    double z_min = -3.0;
    double z_max = 3.0;
    std::size_t z_count = 121;
    double dz = 1e-3;
    double dt = 1e-3;
    bool report = false;
    std::string mode = "grid";
    std::string mu = "1/2";
};

void add_field_options(CLI::App* cmd, FieldOptions& o)
{
    cmd->add_option("--family", o.family, "0ansatz, 1ansatz or nansatz")
        ->required()
        ->check(CLI::IsMember({"0ansatz", "1ansatz", "nansatz"}));
    cmd->add_option("--delta", o.delta, "parity: 0 even, 1 odd")->check(CLI::IsMember({0, 1}));
    cmd->add_option("--alpha", o.alpha, "0ansatz pole parameter alpha");
    cmd->add_option("--beta", o.beta, "0ansatz pole parameter beta");
    cmd->add_option("--alpha1", o.alpha1, "1ansatz first pole alpha");
    cmd->add_option("--beta1", o.beta1, "1ansatz first pole beta");
    cmd->add_option("--alpha2", o.alpha2, "1ansatz second pole alpha");
    cmd->add_option("--beta2", o.beta2, "1ansatz second pole beta");
    cmd->add_option("--n", o.n, "nansatz: number of parameters");
    cmd->add_option("--P", o.top, "nansatz: top polynomial P_n in x2..xn");
    cmd->add_option("--poles", o.poles, "nansatz: rational profile a:b,a:b,...");
    cmd->add_option("--K", o.K, "nansatz: series truncation order")->check(CLI::Range(2U, 200U));
    cmd->add_option("--r0", o.r0, "integration constant of r(t)");
    cmd->add_option("--t", o.t, "comma-separated sample times");
    cmd->add_option("--z-min", o.z_min, "grid start");
    cmd->add_option("--z-max", o.z_max, "grid end");
    cmd->add_option("--z-count", o.z_count, "grid points")->check(CLI::PositiveNumber);
    cmd->add_option("--dz", o.dz, "finite-difference step in z")->check(CLI::PositiveNumber);
    cmd->add_option("--dt", o.dt, "finite-difference step in t")->check(CLI::PositiveNumber);
    cmd->add_flag("--report", o.report, "print a residual report instead of the grid");
}

// Rational profile behind a field, used for the series route.
RationalH profile_of(const FieldOptions& o)
{
    if (o.family == "0ansatz") {
        return RationalH({MobiusParam(parse_rational(o.alpha), parse_rational(o.beta))});
    }
    if (o.family == "1ansatz") {
        return RationalH({MobiusParam(parse_rational(o.alpha1), parse_rational(o.beta1)),
                          MobiusParam(parse_rational(o.alpha2), parse_rational(o.beta2))});
    }
    if (o.poles.empty()) {
        throw std::invalid_argument("nansatz needs --poles");
    }
    return RationalH(parse_poles(o.poles));
}

AnsatzSpec spec_of(const FieldOptions& o)
{
    const Parity delta(o.delta);
    if (o.family == "0ansatz") {
        return AnsatzSpec::reduced(0, delta, GradedPoly(Family::X, 1));
    }
    if (o.family == "1ansatz") {
        return AnsatzSpec::reduced(1, delta, GradedPoly(Family::X, 2));
    }
    return AnsatzSpec::reduced(o.n, delta, parse_poly(Family::X, o.top));
}

SeriesSolution series_of(const FieldOptions& o)
{
    return assemble_psi(spec_of(o), profile_of(o), parse_rational(o.r0), o.K);
}

GridSpec grid_of(const FieldOptions& o)
{
    GridSpec g;
    g.z = linspace(o.z_min, o.z_max, o.z_count);
    for (const auto& t : parse_times(o.t)) {
        g.t.push_back(t.get_d());
    }
    g.dz = o.dz;
    g.dt = o.dt;
    g.validate();
    return g;
}

int run_phi(const PhiOptions& o, std::ostream& out)
{
    const Parity delta(o.delta);
    std::vector<GradedPoly> rows;
    std::string label;
    if (o.table == "Y") {
        rows = compute_Yk(delta, o.qmax).entries;
        label = "Y";
    } else if (o.table == "Q") {
        rows = compute_Qk(delta, o.qmax);
        label = "Q";
    } else {
        label = "Phi";
        if (o.mode == "general") {
            std::vector<GradedPoly> p;
            for (const auto& text : o.p) {
                p.push_back(parse_poly(Family::X, text));
            }
            rows = nansatz_phi(AnsatzSpec::general(o.n, delta, std::move(p)), o.qmax).entries;
        } else {
            rows = reduced_phi(o.n, parse_poly(Family::X, o.top), delta, o.qmax).entries;
        }
    }
    if (o.json) {
        nlohmann::ordered_json doc;
        doc["table"] = label;
        doc["delta"] = o.delta;
        doc["entries"] = nlohmann::ordered_json::array();
        for (const auto& r : rows) {
            doc["entries"].push_back(nlohmann::ordered_json::parse(to_json(r)));
        }
        out << doc.dump(2) << '\n';
        return ok;
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
        out << label << '_' << k << " = " << to_string(rows[k]) << '\n';
    }
    return ok;
}

int run_eval(const FieldOptions& o, std::ostream& out)
{
    const Parity delta(o.delta);
    const Rational r0 = parse_rational(o.r0);
    Field2D psi;
    std::optional<SeriesSolution> series;
    if (o.family == "0ansatz") {
        psi = closed_form_0ansatz(delta, MobiusParam(parse_rational(o.alpha), parse_rational(o.beta)), r0);
    } else if (o.family == "1ansatz") {
        psi = closed_form_1ansatz(delta, MobiusParam(parse_rational(o.alpha1), parse_rational(o.beta1)),
                                  MobiusParam(parse_rational(o.alpha2), parse_rational(o.beta2)), r0);
    } else {
        series.emplace(series_of(o));
        psi = [&series](double z, double t) { return (*series)(z, t); };
    }
    const GridSpec grid = grid_of(o);
    if (o.report) {
        out << residual_report_json(heat_residual_numeric(psi, grid), grid, "grid") << '\n';
        return ok;
    }
    out << grid_csv(psi, grid.z, grid.t);
    return ok;
}

int run_burgers(const FieldOptions& o, std::ostream& out)
{
    const Parity delta(o.delta);
    const Rational mu = parse_rational(o.mu);
    if (mu == 0) {
        throw DomainError("--mu must be nonzero");
    }
    const GridSpec grid = grid_of(o);
    if (o.report && o.mode == "series") {
        const BurgersSolution b = cole_hopf(series_of(o), mu);
        const std::vector<Rational> times = parse_times(o.t);
        const Rational defect = burgers_residual_series(b, mu, times);
        out << residual_report_json(defect.get_d(), grid, "series") << '\n';
        return ok;
    }

    // v_mu(z,t) = 2 mu v(z, 2 mu t) with v the mu = 1/2 image.
    const double m = mu.get_d();
    Field2D v;
    std::optional<BurgersSolution> b;
    if (o.family == "0ansatz") {
        const ZeroAnsatz f = closed_form_0ansatz(delta, MobiusParam(parse_rational(o.alpha), parse_rational(o.beta)),
                                                 parse_rational(o.r0));
        v = [f, m](double z, double t) { return 2.0 * m * f.burgers(z, 2.0 * m * t); };
    } else if (o.family == "1ansatz") {
        const OneAnsatz f =
            closed_form_1ansatz(delta, MobiusParam(parse_rational(o.alpha1), parse_rational(o.beta1)),
                                MobiusParam(parse_rational(o.alpha2), parse_rational(o.beta2)), parse_rational(o.r0));
        v = [f, m](double z, double t) { return 2.0 * m * f.burgers(z, 2.0 * m * t); };
    } else {
        b.emplace(cole_hopf(series_of(o), mu));
        v = [&b](double z, double t) { return (*b)(z, t); };
    }
    if (o.report) {
        out << residual_report_json(burgers_residual_grid(v, m, grid), grid, "grid") << '\n';
        return ok;
    }
    out << grid_csv(v, grid.z, grid.t);
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Differential-algebraic solutions of the heat and Burgers equations", "heatansatz-cli"};
    app.require_subcommand(1);

    PhiOptions phi;
    auto* phi_cmd = app.add_subcommand("phi", "Phi, Y or Q coefficient tables");
    phi_cmd->add_option("--n", phi.n, "number of parameters");
    phi_cmd->add_option("--delta", phi.delta, "parity: 0 even, 1 odd")->check(CLI::IsMember({0, 1}));
    phi_cmd->add_option("--qmax", phi.qmax, "last index of the table")->check(CLI::Range(0U, 60U));
    phi_cmd->add_option("--mode", phi.mode, "general or reduced")->check(CLI::IsMember({"general", "reduced"}));
    phi_cmd->add_option("--P", phi.top, "reduced mode: top polynomial P_n in x2..xn");
    phi_cmd->add_option("--p", phi.p, "general mode: p_2 .. p_{n+2}, one flag each");
    phi_cmd->add_option("--table", phi.table, "phi, Y or Q")->check(CLI::IsMember({"phi", "Y", "Q"}));
    phi_cmd->add_flag("--json", phi.json, "JSON instead of text");

    unsigned dk_k = 0;
    auto* dk_cmd = app.add_subcommand("dk", "print D_1 .. D_k as jet polynomials");
    dk_cmd->add_option("--k", dk_k, "last index")->required()->check(CLI::Range(1U, 40U));

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "run a built-in verification suite");
    verify_cmd->add_option("--suite", suite, "operators, ansatz, dynsys, solution or all")
        ->check(CLI::IsMember({"operators", "ansatz", "dynsys", "solution", "all"}));

    unsigned traj_n = 0;
    std::string traj_top = "0";
    std::string traj_poles;
    std::string traj_t0;
    double traj_t1 = 0.0;
    double traj_step = 1e-3;
    auto* traj_cmd = app.add_subcommand("trajectory", "RK4 trajectory of the reduced system as CSV");
    traj_cmd->add_option("--n", traj_n, "number of parameters");
    traj_cmd->add_option("--P", traj_top, "top polynomial P_n in x2..xn");
    traj_cmd->add_option("--poles", traj_poles, "rational profile a:b,... giving the initial state")->required();
    traj_cmd->add_option("--t0", traj_t0, "start time")->required();
    traj_cmd->add_option("--t1", traj_t1, "end time")->required();
    traj_cmd->add_option("--step", traj_step, "step size")->check(CLI::PositiveNumber);

    FieldOptions eval;
    auto* eval_cmd = app.add_subcommand("eval", "heat solution on a grid as CSV");
    add_field_options(eval_cmd, eval);

    FieldOptions burgers;
    burgers.z_count = 120;
    auto* burgers_cmd = app.add_subcommand("burgers", "Cole-Hopf image on a grid as CSV");
    add_field_options(burgers_cmd, burgers);
    burgers_cmd->add_option("--mu", burgers.mu, "viscosity");
    burgers_cmd->add_option("--mode", burgers.mode, "residual mode with --report: grid or series")
        ->check(CLI::IsMember({"grid", "series"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*phi_cmd) {
            return run_phi(phi, out);
        }
        if (*dk_cmd) {
            const auto dk = compute_Dk(dk_k);
            for (unsigned k = 1; k <= dk_k; ++k) {
                out << "D_" << k << " = " << to_string(dk[k - 1]) << '\n';
            }
            return ok;
        }
        if (*verify_cmd) {
            bool all = true;
            for (const auto& r : run_suite(suite)) {
                out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
                if (!r.detail.empty()) {
                    out << "  (" << r.detail << ")";
                }
                out << '\n';
                all = all && r.passed;
            }
            return all ? ok : domain_error;
        }
        if (*traj_cmd) {
            const AnsatzSpec spec = AnsatzSpec::reduced(traj_n, Parity(0), parse_poly(Family::X, traj_top));
            const RationalH h(parse_poles(traj_poles));
            const DynState<Rational> exact = h.state(parse_rational(traj_t0), traj_n + 1);
            DynState<double> s0;
            s0.t = exact.t.get_d();
            for (const auto& x : exact.x) {
                s0.x.push_back(x.get_d());
            }
            out << trajectory_csv(integrate(make_field(spec), s0, traj_t1, traj_step));
            return ok;
        }
        if (*eval_cmd) {
            return run_eval(eval, out);
        }
        if (*burgers_cmd) {
            return run_burgers(burgers, out);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    }
    return usage_error;
}

} // namespace heatansatz::cli
