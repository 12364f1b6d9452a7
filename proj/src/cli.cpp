#include "wedge/cli.hpp"

#include "wedge/interbasis.hpp"
#include "wedge/json_io.hpp"
#include "wedge/ladders.hpp"
#include "wedge/spheroidal.hpp"
#include "wedge/states.hpp"
#include "wedge/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace wedge::cli {

namespace {

struct ModeArgs {
    std::optional<double> mu;
    int n_phi = 1;
    std::optional<double> phi0;

    void add_to(CLI::App* app)
    {
        app->add_option("--mu", mu, "Angular quantum number directly (abstract wedge)");
        app->add_option("--n-phi", n_phi, "Azimuthal quantum number n_phi >= 1");
        app->add_option("--phi0", phi0, "Wedge opening angle in (0, 2 pi]");
    }

    AngularMode mode() const
    {
        if (mu && phi0) throw DomainError("give either --mu or --phi0, not both");
        if (mu) return AngularMode::abstract(*mu);
        if (phi0) return AngularMode::from_angle(n_phi, *phi0);
        throw DomainError("an angular mode needs --mu or --phi0");
    }
};

std::string read_arg(const std::string& v)
{
    if (v.empty() || v[0] != '@') return v;
    std::ifstream in(v.substr(1));
    if (!in) throw DomainError("cannot read " + v.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Range {
    double lo = 0.0, hi = 0.0;
    int n = 0;
    double at(int i) const { return n == 1 ? lo : lo + (hi - lo) * i / (n - 1); }
};

Range parse_range(const std::string& s)
{
    Range r;
    std::stringstream ss(s);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
        throw DomainError("range must be lo:hi:n, got " + s);
    try {
        r.lo = std::stod(a);
        r.hi = std::stod(b);
        r.n = std::stoi(c);
    } catch (const std::exception&) {
        throw DomainError("range must be lo:hi:n, got " + s);
    }
    if (r.n < 0 || !std::isfinite(r.lo) || !std::isfinite(r.hi)) throw DomainError("bad range " + s);
    return r;
}

Direction parse_direction(const std::string& s)
{
    if (s == "raise" || s == "up") return Direction::raise;
    if (s == "lower" || s == "down") return Direction::lower;
    throw DomainError("direction must be raise or lower");
}

ojson matrix_json(const Eigen::MatrixXd& m)
{
    ojson rows = ojson::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    return rows;
}

ojson descriptor_json(const MultipletDescriptor& d)
{
    ojson j;
    j["system"] = system_name(d.family);
    j["family"] = family_name(d.family);
    j["N"] = d.N;
    ojson qs = ojson::array();
    for (const auto& s : d.states()) {
        auto [a, b] = quantum_numbers(s);
        qs.push_back(ojson::array({a, b}));
    }
    j["states"] = qs;
    return j;
}

CoordinatePoint grid_point(const std::string& chart, double a, double b, double c, std::optional<double> f)
{
    if (chart == "cartesian") return Cartesian{a, b, c};
    if (chart == "cylindrical") return Cylindrical{a, b, c};
    if (chart == "spherical") return Spherical{a, b, c};
    if (chart == "parabolic") return Parabolic{a, b, c};
    if (chart == "prolate") {
        if (!f) throw DomainError("prolate grids need --f");
        return ProlateSpheroidal{a, b, c, *f};
    }
    throw DomainError("unknown chart " + chart);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dihedral-wedge oscillator and hydrogen eigenfunctions", "wedge"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output_path;
    std::string format;
    app.add_option("--output,-o", output_path, "Write the artifact to this file");
    app.add_option("--format", format, "json or csv (default: csv for sample-grid, json otherwise)")->check(CLI::IsMember({"json", "csv"}));

    std::string state_text, point_text, dof_text, dir_text, system_text, family_text, pair_text, method = "closed",
                                                                                                 recurrence = "ode";
    std::string chart = "cylindrical", c1 = "0:0:0", c2 = "0:0:0", c3 = "0:0:0";
    std::vector<std::string> suites;
    int N = 0;
    std::optional<double> f;
    ModeArgs mode_args;

    auto* eval = app.add_subcommand("eval", "Evaluate an eigenfunction at a point");
    eval->add_option("--state", state_text, "State JSON or @file")->required();
    eval->add_option("--at", point_text, "Point, e.g. rho=1,phi=1,z=0")->required();

    auto* ladder = app.add_subcommand("ladder", "Apply a raising or lowering operator to a state");
    ladder->add_option("--state", state_text, "State JSON or @file")->required();
    ladder->add_option("--dof", dof_text, "angular|radial|axial|polar|xi|eta|spheroidal")->required();
    ladder->add_option("--direction", dir_text, "raise|lower")->required();

    auto* spectrum = app.add_subcommand("spectrum", "List a degenerate multiplet with energies");
    spectrum->add_option("--system", system_text, "osc|hydrogen")->required();
    spectrum->add_option("--family", family_text, "cyl|sph|par|spheroidal")->required();
    spectrum->add_option("--N", N, "Shell index")->required();
    spectrum->add_option("--f", f, "Focal half-distance (spheroidal)");
    mode_args.add_to(spectrum);

    auto* spheroidal = app.add_subcommand("spheroidal", "Spheroidal separation constants and polynomials");
    spheroidal->add_option("--N", N, "n_u + n_v")->required();
    spheroidal->add_option("--f", f, "Focal half-distance")->required();
    spheroidal->add_option("--recurrence", recurrence, "ode|printed")->check(CLI::IsMember({"ode", "printed"}));
    mode_args.add_to(spheroidal);

    auto* interbasis = app.add_subcommand("interbasis", "Transformation matrix between two bases of a shell");
    interbasis->add_option("--system", system_text, "osc|hydrogen")->required();
    interbasis->add_option("--pair", pair_text, "cyl-sph|sph-par|sph-spheroidal");
    interbasis->add_option("--N", N, "Shell index")->required();
    interbasis->add_option("--f", f, "Focal half-distance (sph-spheroidal)");
    interbasis->add_option("--method", method, "closed|numeric")->check(CLI::IsMember({"closed", "numeric"}));
    mode_args.add_to(interbasis);

    auto* verify = app.add_subcommand("verify", "Run the invariant suites");
    verify->add_option("--suite", suites, "Suite names (default: all)");

    auto* grid = app.add_subcommand("sample-grid", "Tabulate an eigenfunction on a coordinate grid");
    grid->add_option("--state", state_text, "State JSON or @file")->required();
    grid->add_option("--chart", chart, "cartesian|cylindrical|spherical|parabolic|prolate");
    grid->add_option("--c1", c1, "lo:hi:n for the first coordinate");
    grid->add_option("--c2", c2, "lo:hi:n for the second coordinate");
    grid->add_option("--c3", c3, "lo:hi:n for the third coordinate");
    grid->add_option("--f", f, "Focal half-distance for prolate grids");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    std::string artifact;
    int status = ok;
    try {
        if (format == "csv" && !grid->parsed()) throw DomainError("csv output is only available for sample-grid");
        if (format == "json" && grid->parsed()) throw DomainError("sample-grid writes csv");
        ojson j;
        if (eval->parsed()) {
            const Eigenstate s = parse_state(read_arg(state_text));
            const CoordinatePoint p = parse_point(point_text);
            j["state"] = state_to_json(s);
            j["point"] = point_to_json(p);
            j["psi"] = eval_eigenfunction(s, p);
            j["energy"] = energy(s);
        } else if (ladder->parsed()) {
            const Eigenstate s = parse_state(read_arg(state_text));
            const Dof dof = dof_from_name(dof_text);
            const Direction dir = parse_direction(dir_text);
            const StateLadderResult r = apply_ladder(s, dof, dir);
            j["from"] = state_to_json(s);
            j["dof"] = dof_name(dof);
            j["direction"] = dir == Direction::raise ? "raise" : "lower";
            j["annihilated"] = r.annihilated;
            j["to"] = r.state ? state_to_json(*r.state) : ojson(nullptr);
            j["scalar"] = r.scalar;
            j["energy_shift"] = r.energy_shift;
        } else if (spectrum->parsed()) {
            const Family fam = parse_family(system_text, family_text);
            const AngularMode mode = mode_args.mode();
            j["system"] = system_name(fam);
            j["family"] = family_name(fam);
            j["N"] = N;
            j["mu"] = mode.mu();
            ojson rows = ojson::array();
            for (const auto& s : multiplet(fam, N, mode, f)) {
                ojson row = state_to_json(s);
                row["energy"] = energy(s);
                if (auto* h = std::get_if<HydSpheroidal>(&s)) row["A"] = h->solution.A;
                rows.push_back(row);
            }
            j["states"] = rows;
        } else if (spheroidal->parsed()) {
            const AngularMode mode = mode_args.mode();
            if (!f) throw DomainError("--f is required");
            const SpheroidalSpec spec{mode.mu(), *f, N};
            const RecurrenceForm form = recurrence == "ode" ? RecurrenceForm::ode_consistent : RecurrenceForm::as_printed;
            const auto sys = build_tridiagonal(spec, form);
            const auto sols = solve_spheroidal(spec, form);
            j["mu"] = spec.mu;
            j["f"] = spec.f;
            j["N"] = spec.N;
            j["nu"] = spec.nu();
            j["recurrence"] = form_name(form);
            ojson A = ojson::array(), C = ojson::array(), R = ojson::array();
            for (const auto& s : sols) {
                A.push_back(s.A);
                C.push_back(s.coeffs);
                R.push_back(recurrence_residual(sys, s));
            }
            j["A"] = A;
            j["coeffs"] = C;
            j["residuals"] = R;
        } else if (interbasis->parsed()) {
            const AngularMode mode = mode_args.mode();
            const bool hyd = system_text == "hydrogen" || system_text == "hyd";
            if (!hyd && system_text != "osc" && system_text != "oscillator")
                throw DomainError("unknown system: " + system_text);
            if (pair_text.empty()) pair_text = hyd ? "sph-par" : "cyl-sph";
            std::optional<TransformMatrix> tm;
            std::optional<MultipletDescriptor> rows, cols;
            if (!hyd && pair_text == "cyl-sph") {
                rows = MultipletDescriptor{Family::osc_sph, N, mode, std::nullopt};
                cols = MultipletDescriptor{Family::osc_cyl, N, mode, std::nullopt};
                if (method == "closed") tm = osc_interbasis_matrix(N, mode);
            } else if (hyd && pair_text == "sph-par") {
                rows = MultipletDescriptor{Family::hyd_sph, N, mode, std::nullopt};
                cols = MultipletDescriptor{Family::hyd_par, N, mode, std::nullopt};
                if (method == "closed") tm = hydrogen_sph_par_matrix(N, mode);
            } else if (hyd && pair_text == "sph-spheroidal") {
                if (!f) throw DomainError("--f is required for sph-spheroidal");
                rows = MultipletDescriptor{Family::hyd_sph, N, mode, std::nullopt};
                cols = MultipletDescriptor{Family::hyd_spheroidal, N, mode, f};
                if (method == "closed") tm = hydrogen_sph_spheroidal_matrix(N, mode, *f);
            } else {
                throw DomainError("pair " + pair_text + " does not apply to system " + system_text);
            }
            if (method == "numeric") tm = numeric_overlap_matrix(*rows, *cols, pair_text != "sph-spheroidal").matrix;
            const TransformMatrix& t = *tm;
            j["rows"] = descriptor_json(t.rows);
            j["cols"] = descriptor_json(t.cols);
            j["mu"] = mode.mu();
            if (f) j["f"] = *f;
            j["method"] = method;
            j["normalized"] = t.normalized;
            j["matrix"] = matrix_json(t.m);
        } else if (verify->parsed()) {
            std::optional<double> tol;
            if (const char* env = std::getenv("WEDGE_TOL")) {
                try {
                    tol = std::stod(env);
                } catch (const std::exception&) {
                    throw DomainError(std::string("WEDGE_TOL is not a number: ") + env);
                }
                if (!(*tol > 0.0)) throw DomainError("WEDGE_TOL must be positive");
            }
            const auto results = run_verify(suites, tol);
            bool all = true;
            ojson rs = ojson::array();
            for (const auto& r : results) {
                ojson e;
                e["name"] = r.name;
                e["passed"] = r.passed();
                e["checks"] = r.checks;
                e["max_error"] = r.max_error;
                e["tolerance"] = r.tolerance;
                e["failures"] = r.failures;
                rs.push_back(e);
                all = all && r.passed();
            }
            j["tolerance_override"] = tol ? ojson(*tol) : ojson(nullptr);
            j["passed"] = all;
            j["suites"] = rs;
            if (!all) status = verify_failed;
        } else if (grid->parsed()) {
            const Eigenstate s = parse_state(read_arg(state_text));
            const Range r1 = parse_range(c1), r2 = parse_range(c2), r3 = parse_range(c3);
            if (!f) f = focal_of(s);
            std::ostringstream csv;
            csv << "chart,c1,c2,c3,psi\n";
            for (int i = 0; i < r1.n; ++i)
                for (int k = 0; k < r2.n; ++k)
                    for (int l = 0; l < r3.n; ++l) {
                        const double a = r1.at(i), b = r2.at(k), c = r3.at(l);
                        const double psi = eval_eigenfunction(s, grid_point(chart, a, b, c, f));
                        csv << chart << ',' << format_double(a) << ',' << format_double(b) << ',' << format_double(c)
                            << ',' << format_double(psi) << '\n';
                    }
            artifact = csv.str();
        }
        if (!grid->parsed()) artifact = dump_json(j) + "\n";
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << "\n";
        return numeric_failure;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    if (output_path.empty()) {
        out << artifact;
    } else {
        std::ofstream f_out(output_path, std::ios::binary);
        if (!f_out || !(f_out << artifact)) {
            err << "error: cannot write " << output_path << "\n";
            return usage_error;
        }
    }
    return status;
}

}  // namespace wedge::cli
