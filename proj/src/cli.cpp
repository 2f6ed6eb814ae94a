#include "dfrob/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "dfrob/errors.hpp"
#include "dfrob/io.hpp"
#include "dfrob/lattice_models.hpp"
#include "dfrob/operators.hpp"
#include "dfrob/special_functions.hpp"

namespace dfrob {

namespace {

struct RawOptions {
    std::string step = "1";
    std::string x = "1";
    std::string ns;
    int float_digits = -1;
    std::size_t length = 0;
    bool length_set = false;
};

void add_common(CLI::App* sub, RunConfig& cfg, RawOptions& raw) {
    sub->add_option("--operator,--lattice", cfg.op, "forward (Lplus) or backward (Lminus)")
        ->check(CLI::IsMember({"forward", "backward", "symmetric", "derivative", "Lplus", "Lminus", "lplus",
                               "lminus"}));
    sub->add_option("--order", cfg.order, "series order / highest basic polynomial")->check(CLI::NonNegativeNumber);
    sub->add_option("--length", raw.length, "last lattice index M")->check(CLI::NonNegativeNumber);
    sub->add_option("--step", raw.step, "mesh step h as p/q");
    sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--float-digits", raw.float_digits, "add decimal columns with D significant digits")
        ->check(CLI::NonNegativeNumber);
}

void add_problem(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--problem", cfg.problem_path, "problem JSON file");
    sub->add_option("--family", cfg.family, "built-in family: airy, hermite, bessel, constant")
        ->check(CLI::IsMember({"airy", "hermite", "bessel", "constant"}));
    sub->add_option("--normalize", cfg.normalize, "default, unit or bessel")
        ->check(CLI::IsMember({"default", "unit", "bessel"}));
}

void add_family_params(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--lambda", cfg.lambda, "Hermite parameter");
    sub->add_option("--nu", cfg.nu, "Bessel order");
    sub->add_option("--alpha", cfg.alpha, "constant-coefficient alpha");
    sub->add_option("--beta", cfg.beta, "constant-coefficient beta");
}

void build_app(CLI::App& app, RunConfig& cfg, RawOptions& raw) {
    app.require_subcommand(1);
    struct Entry {
        Command cmd;
        const char* name;
        const char* help;
    };
    const Entry entries[] = {
        {Command::basic_polys, "basic-polys", "basic polynomials p_0..p_N of a delta operator"},
        {Command::discretize, "discretize", "difference-equation coefficients on the lattice"},
        {Command::solve, "solve", "series coefficients zeta and lattice values u"},
        {Command::verify, "verify", "exact residuals of lattice values in the difference equation"},
        {Command::special, "special", "closed-form values of a built-in family"},
        {Command::limit, "limit", "distance between lattice and continuum solutions as h = x/n shrinks"},
    };
    for (const auto& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        add_common(sub, cfg, raw);
        const Command cmd = e.cmd;
        sub->callback([&cfg, cmd] { cfg.command = cmd; });
        if (cmd == Command::basic_polys) continue;
        if (cmd == Command::special) {
            sub->add_option("family", cfg.family, "airy, hermite, bessel or constant")
                ->required()
                ->check(CLI::IsMember({"airy", "hermite", "bessel", "constant"}));
            add_family_params(sub, cfg);
            continue;
        }
        add_problem(sub, cfg);
        add_family_params(sub, cfg);
        if (cmd == Command::discretize) sub->add_flag("--raw", cfg.raw, "keep common factors in n");
        if (cmd == Command::verify) sub->add_option("--values", cfg.values_path, "solve JSON output or index,x,u CSV");
        if (cmd == Command::limit) {
            sub->add_option("--x", raw.x, "evaluation point x > 0");
            sub->add_option("--ns", raw.ns, "comma-separated n values (default 8,16,32,64)");
            sub->add_option("--reference-order", cfg.reference_order, "continuum series order (0: 4n + 64)");
        }
    }
}

Rational parse_rational_arg(const std::string& text, const char* what) {
    try {
        return Rational::parse(text);
    } catch (const Error& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

RunConfig finish(RunConfig cfg, const RawOptions& raw) {
    cfg.step = parse_rational_arg(raw.step, "--step");
    if (cfg.step.sign() <= 0) throw UsageError("--step must be positive");
    cfg.x = parse_rational_arg(raw.x, "--x");
    if (raw.float_digits >= 0) cfg.float_digits = raw.float_digits;
    if (raw.length_set) cfg.length = raw.length;
    if (!raw.ns.empty()) {
        cfg.ns.clear();
        std::istringstream ss(raw.ns);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                const long n = std::stol(item);
                if (n <= 0) throw UsageError("--ns entries must be positive");
                cfg.ns.push_back(n);
            } catch (const std::logic_error&) {
                throw UsageError("--ns expects comma-separated integers");
            }
        }
    }
    return cfg;
}

Lattice lattice_of(const RunConfig& cfg) {
    if (cfg.op == "forward" || cfg.op == "Lplus" || cfg.op == "lplus") return Lattice::plus;
    if (cfg.op == "backward" || cfg.op == "Lminus" || cfg.op == "lminus") return Lattice::minus;
    throw UsageError("operator '" + cfg.op + "' does not define a lattice; use forward or backward");
}

std::size_t length_or(const RunConfig& cfg, std::size_t fallback) { return cfg.length.value_or(fallback); }

ProblemInput resolve_problem(const RunConfig& cfg) {
    if (!cfg.problem_path.empty() && !cfg.family.empty()) throw UsageError("give either --problem or --family");
    ProblemInput in;
    if (!cfg.problem_path.empty()) {
        in = load_problem(cfg.problem_path);
    } else if (!cfg.family.empty()) {
        in.family = make_family(cfg.family, cfg.lambda, cfg.nu, cfg.alpha, cfg.beta);
        in.problem = family_problem(*in.family);
    } else {
        throw UsageError("a problem is required: --problem FILE or --family NAME");
    }
    if (cfg.normalize != "default") {
        if (in.problem.kind != ProblemKind::regular_singular) {
            throw UsageError("--normalize applies to regular singular problems only");
        }
        in.problem.normalize = parse_normalization(cfg.normalize);
    }
    return in;
}

DifferenceEquation equation_for(const ODEProblem& p, Lattice lattice, const Rational& step, bool simplified) {
    DifferenceEquation eq = step == Rational(1) ? generate(p, lattice) : rescale_mesh(p, step, lattice);
    return simplified ? simplify(eq) : eq;
}

// --- commands -------------------------------------------------------------

int cmd_basic_polys(const RunConfig& cfg, std::ostream& out) {
    const std::size_t n = cfg.order;
    const std::size_t cutoff = n + 1;
    DeltaOperator q = DeltaOperator::by_name(cfg.op == "Lplus" || cfg.op == "lplus"     ? "forward"
                                             : cfg.op == "Lminus" || cfg.op == "lminus" ? "backward"
                                                                                        : cfg.op,
                                             cutoff);
    if (cfg.step != Rational(1)) {
        if (q.kind() == DeltaKind::forward) {
            q = DeltaOperator::forward_step(cfg.step, cutoff);
        } else if (q.kind() == DeltaKind::backward) {
            q = DeltaOperator::backward_step(cfg.step, cutoff);
        } else {
            throw UsageError("--step applies to the forward and backward operators only");
        }
    }
    const BasicSequence seq = basic_sequence_solve(q, n);
    if (cfg.format == "json") {
        Json polys = Json::array();
        for (const auto& p : seq.polys) polys.push_back(to_json(p));
        out << Json{{"operator", seq.name()}, {"p", std::move(polys)}}.dump(2) << '\n';
        return kExitOk;
    }
    out << 'n';
    for (std::size_t k = 0; k <= n; ++k) out << ",c" << k;
    out << '\n';
    for (std::size_t i = 0; i <= n; ++i) {
        out << i;
        for (std::size_t k = 0; k <= n; ++k) out << ',' << seq[i].coeff(k);
        out << '\n';
    }
    return kExitOk;
}

int cmd_discretize(const RunConfig& cfg, std::ostream& out) {
    const ProblemInput in = resolve_problem(cfg);
    const DifferenceEquation eq = equation_for(in.problem, lattice_of(cfg), cfg.step, !cfg.raw);
    const long to = static_cast<long>(length_or(cfg, 10));
    const long from = eq.valid_from();
    if (cfg.format == "json") {
        out << equation_to_json(eq, from, to).dump(2) << '\n';
    } else {
        write_equation_csv(out, eq, from, to);
    }
    return kExitOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    const ProblemInput in = resolve_problem(cfg);
    const Lattice lattice = lattice_of(cfg);
    const std::size_t m = length_or(cfg, cfg.order);
    if (m > cfg.order) throw UsageError("--length must not exceed --order (u_n uses zeta_0..zeta_n)");
    const RotaSeries zeta = solve_series(in.problem, cfg.order, lattice_basis_name(lattice, cfg.step));
    const LatticeFunction u = zeta_to_u(zeta, lattice, m, cfg.step);
    const int digits = cfg.float_digits.value_or(0);
    if (cfg.format == "json") {
        Json doc;
        doc["problem"] = in.family ? to_json(*in.family) : to_json(in.problem);
        doc["lattice"] = to_string(lattice);
        doc["step"] = cfg.step.str();
        doc["zeta"] = to_json(zeta.zeta);
        doc["u"] = to_json(u.values);
        if (digits > 0) {
            Json dec = Json::array();
            for (const auto& v : u.values) dec.push_back(v.to_decimal(digits));
            doc["u_decimal"] = std::move(dec);
        }
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    out << "zeta\n" << join(zeta.zeta) << "\n\n";
    write_lattice_csv(out, u, digits);
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const ProblemInput in = resolve_problem(cfg);
    LatticeFunction u;
    if (!cfg.values_path.empty()) {
        u = load_lattice_values(cfg.values_path, lattice_of(cfg), cfg.step);
    } else {
        const Lattice lattice = lattice_of(cfg);
        const std::size_t m = length_or(cfg, 50);
        if (in.family && cfg.step == Rational(1)) {
            u = lattice_values(FamilySpec{*in.family, lattice, m});
        } else {
            u = zeta_to_u(solve_series(in.problem, m, lattice_basis_name(lattice, cfg.step)), lattice, m, cfg.step);
        }
    }
    const DifferenceEquation eq = equation_for(in.problem, u.lattice, u.step, true);
    const auto rows = residual_sweep(eq, u);
    std::size_t nonzero = 0;
    for (const auto& r : rows) nonzero += r.value.is_zero() ? 0 : 1;
    const bool pass = !rows.empty() && nonzero == 0;
    const int digits = cfg.float_digits.value_or(0);
    if (cfg.format == "json") {
        Json list = Json::array();
        for (const auto& r : rows) {
            Json row{{"n", r.n}, {"residual", r.value.str()}};
            if (digits > 0) row["residual_decimal"] = r.value.to_decimal(digits);
            list.push_back(std::move(row));
        }
        out << Json{{"lattice", to_string(u.lattice)},
                    {"step", u.step.str()},
                    {"valid_from", eq.valid_from()},
                    {"rows", std::move(list)},
                    {"nonzero", nonzero},
                    {"result", pass ? "PASS" : "FAIL"}}
                   .dump(2)
            << '\n';
    } else {
        out << "n,residual" << (digits > 0 ? ",residual_decimal" : "") << '\n';
        for (const auto& r : rows) {
            out << r.n << ',' << r.value;
            if (digits > 0) out << ',' << r.value.to_decimal(digits);
            out << '\n';
        }
        if (rows.empty()) {
            out << "FAIL: no equation row fits inside the " << u.size() << " given values\n";
        } else if (pass) {
            out << "PASS: " << rows.size() << " residuals exactly 0\n";
        } else {
            out << "FAIL: " << nonzero << " of " << rows.size() << " residuals nonzero\n";
        }
    }
    return pass ? kExitOk : kExitVerifyFail;
}

int cmd_special(const RunConfig& cfg, std::ostream& out) {
    const FamilySpec spec{make_family(cfg.family, cfg.lambda, cfg.nu, cfg.alpha, cfg.beta), lattice_of(cfg),
                          length_or(cfg, 50)};
    if (cfg.step != Rational(1)) throw UsageError("special values are tabulated on the unit lattice only");
    const auto sols = family_solutions(spec);
    const int digits = cfg.float_digits.value_or(0);
    if (cfg.format == "json") {
        Json list = Json::array();
        for (const auto& s : sols) {
            Json item{{"name", s.name}, {"exact", s.exact}, {"zeta", to_json(s.zeta.zeta)}, {"u", to_json(s.values.values)}};
            if (digits > 0) {
                Json dec = Json::array();
                for (const auto& v : s.values.values) dec.push_back(v.to_decimal(digits));
                item["u_decimal"] = std::move(dec);
            }
            list.push_back(std::move(item));
        }
        Json doc = to_json(spec.family);
        doc["lattice"] = to_string(spec.lattice);
        doc["solutions"] = std::move(list);
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    out << "index,x";
    for (const auto& s : sols) out << ',' << s.name;
    if (digits > 0) {
        for (const auto& s : sols) out << ',' << s.name << "_decimal";
    }
    out << '\n';
    const LatticeFunction& grid = sols.front().values;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out << i << ',' << grid.point(i);
        for (const auto& s : sols) out << ',' << s.values.values[i];
        if (digits > 0) {
            for (const auto& s : sols) out << ',' << s.values.values[i].to_decimal(digits);
        }
        out << '\n';
    }
    return kExitOk;
}

int cmd_limit(const RunConfig& cfg, std::ostream& out) {
    const ProblemInput in = resolve_problem(cfg);
    if (lattice_of(cfg) != Lattice::plus) throw UsageError("limit is defined on Lplus (forward) only");
    if (cfg.x.sign() <= 0) throw UsageError("--x must be positive");
    const int digits = cfg.float_digits.value_or(30);
    std::vector<ContinuumError> rows;
    for (long n : cfg.ns) rows.push_back(continuum_error(in.problem, cfg.x, n, cfg.reference_order, std::max(digits, 1)));
    if (cfg.format == "json") {
        Json list = Json::array();
        for (const auto& r : rows) {
            Json row{{"n", r.n}, {"h", r.step.str()}, {"error", digits > 0 ? r.decimal : r.exact.str()}};
            list.push_back(std::move(row));
        }
        out << Json{{"x", cfg.x.str()}, {"rows", std::move(list)}}.dump(2) << '\n';
        return kExitOk;
    }
    out << "n,h,error\n";
    for (const auto& r : rows) out << r.n << ',' << r.step << ',' << (digits > 0 ? r.decimal : r.exact.str()) << '\n';
    return kExitOk;
}

constexpr const char* kAppDescription = "dfrob: exact lattice discretizations of linear ODEs";

// CLI11 errors (including --help) propagate; option validation throws UsageError.
void parse_into(CLI::App& app, RunConfig& cfg, const std::vector<std::string>& args) {
    RawOptions raw;
    build_app(app, cfg, raw);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    for (const auto* sub : app.get_subcommands()) raw.length_set = raw.length_set || sub->count("--length") > 0;
    cfg = finish(std::move(cfg), raw);
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{kAppDescription, "dfrob"};
    RunConfig cfg;
    try {
        parse_into(app, cfg, args);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::basic_polys: return cmd_basic_polys(config, out);
            case Command::discretize: return cmd_discretize(config, out);
            case Command::solve: return cmd_solve(config, out);
            case Command::verify: return cmd_verify(config, out);
            case Command::special: return cmd_special(config, out);
            case Command::limit: return cmd_limit(config, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NoAdmissibleRoot& e) {
        err << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const LogarithmicCaseRequired& e) {
        err << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const UnsupportedCase& e) {
        err << "unsupported: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{kAppDescription, "dfrob"};
    RunConfig cfg;
    try {
        parse_into(app, cfg, args);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return run(cfg, out, err);
}

}  // namespace dfrob
