#include "dfrob/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "dfrob/errors.hpp"

namespace dfrob {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("expected a rational string or integer, got " + j.dump());
}

Json to_json(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(v.str());
    return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(rational_from_json(v));
    return out;
}

Json to_json(const Polynomial& p) { return to_json(p.coeffs()); }

Json to_json(const CoefficientSequence& seq) {
    if (seq.is_generator()) return Json{{"exp_scaled", seq.generator_scale()->str()}};
    return to_json(seq.values());
}

CoefficientSequence sequence_from_json(const Json& j) {
    if (j.is_object()) {
        if (!j.contains("exp_scaled") || j.size() != 1) throw ParseError("unknown sequence generator " + j.dump());
        return CoefficientSequence::exp_scaled(rational_from_json(j.at("exp_scaled")));
    }
    return CoefficientSequence(rationals_from_json(j));
}

const char* to_string(Normalization n) { return n == Normalization::bessel ? "bessel" : "unit"; }

Normalization parse_normalization(const std::string& text) {
    if (text == "unit" || text == "default") return Normalization::unit;
    if (text == "bessel") return Normalization::bessel;
    throw ParseError("unknown normalization '" + text + "'");
}

Json to_json(const ODEProblem& p) {
    Json out;
    if (p.kind == ProblemKind::ordinary) {
        out["kind"] = "ordinary";
        out["a"] = to_json(p.a());
        out["b"] = to_json(p.b());
        out["zeta0"] = p.zeta0.str();
        out["zeta1"] = p.zeta1.str();
    } else {
        out["kind"] = "regular_singular";
        out["r"] = to_json(p.r());
        out["s"] = to_json(p.s());
        out["normalize"] = to_string(p.normalize);
    }
    return out;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string param(const Json& j, const char* key) {
    if (!j.contains(key)) return "";
    const auto& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError(std::string("parameter '") + key + "' must be a rational string or integer");
}

const Json& field(const Json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("problem is missing '") + key + "'");
    return j.at(key);
}

}  // namespace

Json to_json(const Family& family) {
    Json out;
    out["family"] = family_name(family);
    std::visit(overloaded{[&](const ConstantCoeff& c) {
                              out["alpha"] = c.alpha.str();
                              out["beta"] = c.beta.str();
                          },
                          [](const Airy&) {}, [&](const Hermite& h) { out["lambda"] = h.lambda.str(); },
                          [&](const Bessel& b) { out["nu"] = b.nu; }},
               family);
    return out;
}

Family make_family(const std::string& name, const std::string& lambda, const std::string& nu,
                   const std::string& alpha, const std::string& beta) {
    if (name == "airy") return Airy{};
    if (name == "hermite") return Hermite{lambda.empty() ? Rational(0) : Rational::parse(lambda)};
    if (name == "bessel") {
        const Rational v = nu.empty() ? Rational(0) : Rational::parse(nu);
        if (!v.is_integer() || v.sign() < 0) throw InvalidProblem("Bessel order must be a non-negative integer");
        return Bessel{v.numerator().get_si()};
    }
    if (name == "constant") {
        if (alpha.empty() || beta.empty()) throw InvalidProblem("constant family needs alpha and beta");
        return ConstantCoeff{Rational::parse(alpha), Rational::parse(beta)};
    }
    throw InvalidProblem("unknown family '" + name + "'");
}

ProblemInput problem_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("problem must be a JSON object");
    if (j.contains("family")) {
        Family f = make_family(j.at("family").get<std::string>(), param(j, "lambda"), param(j, "nu"),
                               param(j, "alpha"), param(j, "beta"));
        ODEProblem p = family_problem(f);
        return {std::move(p), std::move(f)};
    }
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "ordinary") {
        ODEProblem p = ordinary_problem(sequence_from_json(field(j, "a")), sequence_from_json(field(j, "b")));
        if (j.contains("zeta0")) p.zeta0 = rational_from_json(j.at("zeta0"));
        if (j.contains("zeta1")) p.zeta1 = rational_from_json(j.at("zeta1"));
        return {std::move(p), std::nullopt};
    }
    if (kind == "regular_singular") {
        const Normalization n =
            j.contains("normalize") ? parse_normalization(j.at("normalize").get<std::string>()) : Normalization::unit;
        return {singular_problem(sequence_from_json(field(j, "r")), sequence_from_json(field(j, "s")), n),
                std::nullopt};
    }
    throw ParseError("unknown problem kind '" + kind + "'");
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

ProblemInput load_problem(const std::string& path) {
    try {
        return problem_from_json(load_json(path));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

Json to_json(const RotaSeries& f) { return Json{{"operator", f.basis}, {"zeta", to_json(f.zeta)}}; }

std::string join(const std::vector<Rational>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += values[i].str();
    }
    return out;
}

void write_lattice_csv(std::ostream& os, const LatticeFunction& u, int digits) {
    os << "index,x,u" << (digits > 0 ? ",u_decimal" : "") << '\n';
    for (std::size_t i = 0; i < u.size(); ++i) {
        os << i << ',' << u.point(i) << ',' << u.values[i];
        if (digits > 0) os << ',' << u.values[i].to_decimal(digits);
        os << '\n';
    }
}

Json to_json(const LatticeFunction& u) {
    return Json{{"lattice", to_string(u.lattice)}, {"step", u.step.str()}, {"u", to_json(u.values)}};
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

}  // namespace

LatticeFunction lattice_from_csv(const std::string& text, Lattice lattice, const Rational& step) {
    LatticeFunction out{lattice, step, {}};
    std::istringstream in(text);
    std::string line;
    bool in_table = false;
    std::size_t x_col = 0, u_col = 0, idx_col = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!in_table) {
            if (line.rfind("index,", 0) != 0) continue;
            const auto header = split(line, ',');
            bool have_x = false, have_u = false;
            for (std::size_t c = 0; c < header.size(); ++c) {
                if (header[c] == "x") x_col = c, have_x = true;
                if (header[c] == "u") u_col = c, have_u = true;
            }
            if (!have_x || !have_u) throw ParseError("CSV header needs index, x and u columns");
            in_table = true;
            continue;
        }
        if (line.empty()) break;
        const auto cells = split(line, ',');
        if (cells.size() <= std::max(x_col, u_col)) throw ParseError("short CSV row: '" + line + "'");
        const std::size_t i = out.values.size();
        if (cells[idx_col] != std::to_string(i)) throw ParseError("CSV rows must list index 0, 1, 2, ... in order");
        out.values.push_back(Rational::parse(cells[u_col]));
        if (Rational::parse(cells[x_col]) != out.point(i)) {
            throw ParseError("x = " + cells[x_col] + " at index " + std::to_string(i) + " does not lie on " +
                             to_string(lattice) + " with step " + step.str());
        }
    }
    if (!in_table) throw ParseError("no 'index,x,u' table found");
    return out;
}

LatticeFunction lattice_from_json(const Json& j) {
    try {
        LatticeFunction out;
        out.lattice = parse_lattice(field(j, "lattice").get<std::string>());
        out.step = j.contains("step") ? rational_from_json(j.at("step")) : Rational(1);
        out.values = rationals_from_json(field(j, "u"));
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

LatticeFunction load_lattice_values(const std::string& path, Lattice lattice, const Rational& step) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        try {
            return lattice_from_json(Json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError("'" + path + "': " + e.what());
        }
    }
    return lattice_from_csv(text, lattice, step);
}

Json equation_to_json(const DifferenceEquation& eq, long from, long to) {
    Json rows = Json::array();
    for (long n = from; n <= to; ++n) {
        Json terms = Json::array();
        for (const auto& t : eq.terms(n)) terms.push_back(Json{{"offset", t.offset}, {"c", t.coeff.str()}});
        rows.push_back(Json{{"n", n}, {"terms", std::move(terms)}});
    }
    Json out{{"lattice", to_string(eq.lattice())},
             {"step", eq.step().str()},
             {"form", eq.form() == EquationForm::ordinary ? "ordinary" : "singular"},
             {"valid_from", eq.valid_from()}};
    if (eq.cancelled_factor().degree() > 0) out["cancelled_factor"] = to_json(eq.cancelled_factor());
    if (eq.symbolic()) {
        Json sym = Json::array();
        for (const auto& t : *eq.symbolic()) sym.push_back(Json{{"offset", t.offset}, {"coeff_in_n", to_json(t.coeff)}});
        out["symbolic"] = std::move(sym);
    }
    out["rows"] = std::move(rows);
    return out;
}

void write_equation_csv(std::ostream& os, const DifferenceEquation& eq, long from, long to) {
    os << "n,offset,coeff\n";
    for (long n = from; n <= to; ++n) {
        for (const auto& t : eq.terms(n)) os << n << ',' << t.offset << ',' << t.coeff << '\n';
    }
}

}  // namespace dfrob
