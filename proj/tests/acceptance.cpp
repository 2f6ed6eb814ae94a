// Acceptance checks: one PASS/FAIL line per criterion.
//   dfrob_acceptance [--criterion K]
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dfrob/cli.hpp"
#include "dfrob/combinatorics.hpp"
#include "dfrob/errors.hpp"
#include "dfrob/frobenius.hpp"
#include "dfrob/io.hpp"
#include "dfrob/lattice_models.hpp"
#include "dfrob/rota_series.hpp"
#include "dfrob/special_functions.hpp"
#include "support.hpp"

using namespace dfrob;
namespace fs = std::filesystem;

namespace {

constexpr double kBasicAxiomsSeconds = 1.0;
constexpr double kOracleSeconds = 10.0;
constexpr double kContinuumSeconds = 5.0;
const Rational kContinuumThreshold = Rational::parse("1/1000");
constexpr int kContinuumDigits = 30;

// Collects failed sub-checks; a criterion passes when none failed.
class Report {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (!ok && failures_.size() < 8) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    void note(const std::string& text) { notes_.push_back(text); }
    [[nodiscard]] bool ok() const { return failed_ == 0; }
    [[nodiscard]] std::string summary() const {
        std::ostringstream os;
        os << checks_ - failed_ << "/" << checks_ << " checks";
        for (const auto& n : notes_) os << "; " << n;
        if (failed_ > 0) {
            os << "; failed:";
            for (const auto& f : failures_) os << " [" << f << "]";
            if (failed_ > static_cast<long>(failures_.size())) os << " ...";
        }
        return os.str();
    }

private:
    long checks_ = 0;
    long failed_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

std::string str(long v) { return std::to_string(v); }

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void check_runtime(Report& r, std::chrono::steady_clock::time_point start, double limit) {
    const double s = seconds_since(start);
    std::ostringstream os;
    os.precision(3);
    os << "runtime " << s << " s (limit " << limit << " s)";
    r.note(os.str());
    r.check(s < limit, "runtime");
}

void check_all_zero(Report& r, const DifferenceEquation& eq, const LatticeFunction& u, long first, long last,
                    const std::string& label) {
    long count = 0;
    for (long n = std::max(first, eq.valid_from()); n <= last; ++n) {
        r.check(residual(eq, u, n).is_zero(), label + " n=" + str(n));
        ++count;
    }
    r.check(count > 0, label + " has rows");
}

void basic_axioms(Report& r) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = 20;
    for (const char* name : {"forward", "backward", "symmetric", "derivative"}) {
        const auto q = DeltaOperator::by_name(name, n + 1);
        const auto solved = basic_sequence_solve(q, n);
        const auto beta = basic_sequence_beta(q, n);
        r.check(satisfies_basic_axioms(solved), std::string(name) + " axioms");
        r.check(solved[0] == Polynomial::constant(1), std::string(name) + " p_0");
        for (std::size_t k = 0; k <= n; ++k) {
            const std::string tag = std::string(name) + " k=" + std::to_string(k);
            if (k > 0) {
                r.check(solved[k](Rational(0)).is_zero(), tag + " p_k(0)");
                r.check(q.apply(solved[k]) == Rational(static_cast<long>(k)) * solved[k - 1], tag + " Q p_k");
            }
            r.check(solved[k] == beta[k], tag + " solve vs beta");
        }
    }
    check_runtime(r, start, kBasicAxiomsSeconds);
}

void rota_algebra(Report& r) {
    testing::Gen gen(20240801);
    const std::size_t order = 8;
    for (const char* basis : {"forward", "backward", "symmetric", "derivative"}) {
        for (int i = 0; i < 100; ++i) {
            const auto f = gen.series(basis, order);
            const auto g = gen.series(basis, order);
            const auto h = gen.series(basis, order);
            const std::string tag = std::string(basis) + " #" + std::to_string(i);
            r.check(leibniz_check(f, g), tag + " Leibniz");
            r.check(star_product(f, g) == star_product(g, f), tag + " commutative");
            r.check(star_product(star_product(f, g), h) == star_product(f, star_product(g, h)), tag + " associative");
        }
    }
}

void ordinary_point_equations(Report& r) {
    const long m = 50;
    const std::vector<std::pair<std::string, Family>> families{
        {"airy", Airy{}},
        {"hermite 0", Hermite{0}},
        {"hermite 1/2", Hermite{Rational::parse("1/2")}},
        {"hermite 3", Hermite{3}},
        {"constant -3,2", ConstantCoeff{-3, 2}},
    };
    for (const auto& [label, family] : families) {
        const auto p = family_problem(family);
        const auto generated = generate(p, Lattice::plus);
        const auto explicit_eq = family_equation({family, Lattice::plus, static_cast<std::size_t>(m)});
        for (const auto& sol : family_solutions({family, Lattice::plus, static_cast<std::size_t>(m)})) {
            const auto u = zeta_to_u(sol.zeta, Lattice::plus, static_cast<std::size_t>(m));
            r.check(u == sol.values, label + " " + sol.name + " mapped values");
            check_all_zero(r, generated, u, 0, m - 2, label + " " + sol.name + " generated");
            check_all_zero(r, explicit_eq, u, 0, m - 2, label + " " + sol.name + " explicit");
        }
        // the series from the problem's own initial data
        const auto own = zeta_to_u(solve_series(p, static_cast<std::size_t>(m)), Lattice::plus, static_cast<std::size_t>(m));
        check_all_zero(r, generated, own, 0, m - 2, label + " initial data");
    }
    const auto h3 = lattice_values({Hermite{3}, Lattice::plus, static_cast<std::size_t>(m)});
    for (long n = 0; n <= m; ++n) r.check(h3.values[n] == Rational(8 * n * n * n - 24 * n * n + 4 * n), "hermite 3 cubic n=" + str(n));
}

void oracle_equivalence(Report& r) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::pair<std::string, ODEProblem>> problems{{"airy", family_problem(Airy{})}};
    for (const char* lam : {"0", "1/2", "3"}) problems.emplace_back(std::string("hermite ") + lam, family_problem(Hermite{Rational::parse(lam)}));
    for (const auto& [label, p] : problems) {
        const auto eq = generate(p, Lattice::plus);
        for (long n = 0; n <= 12; ++n) {
            r.check(cj_row(n, p) == eq.terms(n), label + " n=" + str(n));
            for (const auto& t : eq.terms(n)) r.check(cj_bruteforce(n, t.offset + n, p) == t.coeff, label + " C_j n=" + str(n));
        }
    }
    check_runtime(r, start, kOracleSeconds);
}

void bessel(Report& r) {
    const std::size_t m = 50;
    const auto j0 = lattice_values({Bessel{0}, Lattice::plus, m});
    const std::vector<Rational> head{1, 1, Rational::parse("1/2"), Rational::parse("-1/2"), Rational::parse("-13/8")};
    for (std::size_t i = 0; i < head.size(); ++i) r.check(j0.values[i] == head[i], "J_0 value " + std::to_string(i));
    const auto eq0 = family_equation({Bessel{0}, Lattice::plus, m});
    r.check(eq0.valid_from() == 2, "J_0 equation valid from 2");
    check_all_zero(r, eq0, j0, 2, static_cast<long>(m), "J_0");
    for (long nu = 1; nu <= 3; ++nu) {
        const auto u = lattice_values({Bessel{nu}, Lattice::plus, m});
        check_all_zero(r, family_equation({Bessel{nu}, Lattice::plus, m}), u, 0, static_cast<long>(m), "J_" + str(nu));
    }
    // unsimplified generator divided by n
    const auto raw = generate(family_problem(Bessel{0}), Lattice::plus);
    for (long n = 2; n <= static_cast<long>(m); ++n) {
        std::vector<Term> divided;
        for (const auto& t : raw.terms(n)) divided.push_back({t.offset, t.coeff / Rational(n)});
        r.check(divided == eq0.terms(n), "generator / n at n=" + str(n));
    }
}

void lminus(Report& r) {
    r.check(backward_symmetry_check(20), "p_k^-(-x) = (-1)^k p_k^+(x), k <= 20");
    const std::size_t m = 50;
    std::vector<Family> families{Hermite{0}, Hermite{Rational::parse("1/2")}, Hermite{3}};
    for (long nu = 0; nu <= 3; ++nu) families.push_back(Bessel{nu});
    for (const auto& family : families) {
        const FamilySpec spec{family, Lattice::minus, m};
        const auto eq = family_equation(spec);
        const auto generated = simplify(generate(family_problem(family), Lattice::minus));
        for (const auto& sol : family_solutions(spec)) {
            const auto u = zeta_to_u(sol.zeta, Lattice::minus, m);
            r.check(u == sol.values, sol.name + " mapped values");
            const long last = eq.form() == EquationForm::ordinary ? static_cast<long>(m) - 2 : static_cast<long>(m);
            check_all_zero(r, eq, u, 0, last, sol.name + " Lminus");
            check_all_zero(r, generated, u, 0, last, sol.name + " Lminus generated");
        }
    }
    testing::Gen gen(66);
    for (int i = 0; i < 20; ++i) {
        const auto z = gen.rationals(31);
        const RotaSeries f{"backward", z};
        const auto u = zeta_to_u(f, Lattice::minus, 30);
        r.check(u_to_zeta(u) == f, "zeta -> u -> zeta #" + std::to_string(i));
        const LatticeFunction v{Lattice::minus, 1, gen.rationals(31)};
        r.check(zeta_to_u(u_to_zeta(v), Lattice::minus, 30) == v, "u -> zeta -> u #" + std::to_string(i));
    }
}

void indicial_machinery(Report& r) {
    const auto b2 = family_problem(Bessel{2});
    const auto ind = indicial(b2);
    r.check(ind.roots.has_value() && ind.roots->first == Rational(2) && ind.roots->second == Rational(-2), "Bessel 2 roots {2,-2}");
    r.check(ind.admissible_root == 2, "admissible root 2");
    const auto sol = zeta_singular(b2, 10);
    r.check(sol.series.zeta[0].is_zero() && sol.series.zeta[1].is_zero(), "zeta_0 = zeta_1 = 0");
    r.check(sol.free_indices == std::vector<std::size_t>{2}, "zeta_2 free");
    const auto j0 = zeta_singular(family_problem(Bessel{0}), 6).series.zeta;
    const auto want = testing::rats({"1", "0", "-1/4", "0", "1/64", "0", "-1/2304"});
    r.check(j0 == want, "J_0 series through x^6");
}

void continuum(Report& r) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::pair<std::string, ODEProblem>> problems{{"airy", family_problem(Airy{})},
                                                                  {"bessel 0", family_problem(Bessel{0})}};
    for (const auto& [label, p] : problems) {
        std::optional<Rational> prev;
        std::string trail;
        for (const long n : {8L, 16L, 32L, 64L}) {
            const auto e = continuum_error(p, Rational(1), n, 0, kContinuumDigits);
            trail += (trail.empty() ? "" : ",") + e.decimal;
            if (prev) r.check(e.exact < *prev, label + " decreases at n=" + str(n));
            r.check(e.step == Rational(1) / Rational(n), label + " h=1/n");
            prev = e.exact;
            if (n == 64) r.check(e.exact < kContinuumThreshold, label + " error " + e.decimal + " below 1e-3 at n=64");
        }
        r.note(label + " errors " + trail);
    }
    check_runtime(r, start, kContinuumSeconds);
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("dfrob_acceptance_" + std::to_string(std::random_device{}()))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    [[nodiscard]] std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    fs::path path_;
};

int cli(const std::vector<std::string>& args, std::string* out = nullptr) {
    std::ostringstream o, e;
    const int code = run_cli(args, o, e);
    if (out) *out = o.str();
    return code;
}

void cli_end_to_end(Report& r) {
    TempDir tmp;
    const std::vector<std::vector<std::string>> families{
        {"--family", "airy"},
        {"--family", "hermite", "--lambda", "0"},
        {"--family", "hermite", "--lambda", "1/2"},
        {"--family", "hermite", "--lambda", "3"},
        {"--family", "bessel", "--nu", "0"},
        {"--family", "bessel", "--nu", "1"},
        {"--family", "bessel", "--nu", "2"},
        {"--family", "bessel", "--nu", "3"},
        {"--family", "constant", "--alpha", "-3", "--beta", "2"},
    };
    for (const auto& family : families) {
        for (const std::string lattice : {"Lplus", "Lminus"}) {
            const std::string tag = family[1] + (family.size() > 2 ? " " + family[3] : "") + " " + lattice;
            std::vector<std::string> solve{"solve", "--lattice", lattice};
            solve.insert(solve.end(), family.begin(), family.end());
            std::string out;
            const int code = cli(solve, &out);
            r.check(code == kExitOk, tag + " solve exit " + str(code));
            const auto path = tmp.file("values.csv");
            std::ofstream(path) << out;
            std::vector<std::string> verify{"verify", "--lattice", lattice, "--values", path};
            verify.insert(verify.end(), family.begin(), family.end());
            const int vcode = cli(verify);
            r.check(vcode == kExitOk, tag + " verify exit " + str(vcode));
        }
    }
    // tamper one value in a solved table
    std::string out;
    cli({"solve", "--family", "airy", "--format", "json"}, &out);
    auto doc = Json::parse(out);
    doc["u"][20] = (rational_from_json(doc["u"][20]) + Rational(1)).str();
    const auto path = tmp.file("tampered.json");
    std::ofstream(path) << doc.dump();
    const int code = cli({"verify", "--family", "airy", "--values", path});
    r.check(code == kExitVerifyFail, "tampered verify exit " + str(code));
}

struct Criterion {
    int id;
    std::string title;
    std::function<void(Report&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance checks"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion (1-9)")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {1, "basic-polynomial axioms", basic_axioms},
        {2, "Rota algebra", rota_algebra},
        {3, "ordinary-point lattice equations", ordinary_point_equations},
        {4, "T_kj oracle equivalence", oracle_equivalence},
        {5, "discrete Bessel", bessel},
        {6, "Lminus", lminus},
        {7, "indicial machinery", indicial_machinery},
        {8, "continuum limit", continuum},
        {9, "CLI end-to-end", cli_end_to_end},
    };
    bool all_ok = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        Report r;
        try {
            c.run(r);
        } catch (const std::exception& e) {
            r.check(false, std::string("exception: ") + e.what());
        }
        std::cout << (r.ok() ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.title << "): " << r.summary() << '\n';
        all_ok = all_ok && r.ok();
    }
    return all_ok ? 0 : 1;
}
