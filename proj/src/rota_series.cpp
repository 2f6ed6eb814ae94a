#include "dfrob/rota_series.hpp"

#include <algorithm>

#include "dfrob/combinatorics.hpp"
#include "dfrob/errors.hpp"

namespace dfrob {

namespace {

void require_same_basis(const RotaSeries& f, const RotaSeries& g) {
    if (f.basis != g.basis) throw BasisMismatch("series in bases '" + f.basis + "' and '" + g.basis + "'");
}

// u_n = sum_{k<=min(n,N)} zeta_k h^k n!/(n-k)!
std::vector<Rational> lplus_values(const std::vector<Rational>& zeta, std::size_t m, const Rational& step) {
    std::vector<Rational> hp{1};
    for (std::size_t k = 1; k < zeta.size(); ++k) hp.push_back(hp.back() * step);
    std::vector<Rational> out(m + 1);
    for (std::size_t n = 0; n <= m; ++n) {
        Rational acc = 0;
        Integer falling = 1;
        const std::size_t top = std::min(n, zeta.size() == 0 ? 0 : zeta.size() - 1);
        for (std::size_t k = 0; k <= top && k < zeta.size(); ++k) {
            if (k > 0) falling *= static_cast<unsigned long>(n - k + 1);
            if (!zeta[k].is_zero()) acc += zeta[k] * hp[k] * Rational(falling);
        }
        out[n] = std::move(acc);
    }
    return out;
}

// zeta_k = h^{-k} sum_{j<=k} (-1)^{k-j} u_j / (j! (k-j)!)
std::vector<Rational> lplus_zeta(const std::vector<Rational>& u, std::size_t order, const Rational& step) {
    std::vector<Rational> out(order + 1);
    Rational inv_hp = 1;
    const Rational inv_h = Rational(1) / step;
    for (std::size_t k = 0; k <= order; ++k) {
        Rational acc = 0;
        for (std::size_t j = 0; j <= k; ++j) {
            if (u[j].is_zero()) continue;
            acc += sign_power(static_cast<long>(k - j)) * u[j] /
                   Rational(factorial(static_cast<long>(j)) * factorial(static_cast<long>(k - j)));
        }
        out[k] = acc * inv_hp;
        inv_hp *= inv_h;
    }
    return out;
}

std::vector<Rational> alternate(std::vector<Rational> v) {
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return v;
}

struct LatticeOf {
    Lattice lattice;
    Rational step;
};

LatticeOf lattice_of(const BasicSequence& basic) {
    const std::string& name = basic.name();
    auto step_from = [&name](std::size_t prefix) {
        return Rational::parse(std::string_view(name).substr(prefix, name.size() - prefix - 1));
    };
    if (name == "forward") return {Lattice::plus, 1};
    if (name == "backward") return {Lattice::minus, 1};
    if (name.rfind("forward_h(", 0) == 0) return {Lattice::plus, step_from(10)};
    if (name.rfind("backward_h(", 0) == 0) return {Lattice::minus, step_from(11)};
    throw BasisMismatch("basic sequence '" + name + "' has no uniform lattice of zeros");
}

}  // namespace

const char* to_string(Lattice lattice) { return lattice == Lattice::plus ? "Lplus" : "Lminus"; }

Lattice parse_lattice(const std::string& text) {
    if (text == "Lplus" || text == "lplus" || text == "forward") return Lattice::plus;
    if (text == "Lminus" || text == "lminus" || text == "backward") return Lattice::minus;
    throw ParseError("unknown lattice '" + text + "'");
}

Rational LatticeFunction::point(std::size_t i) const {
    const Rational x = Rational(static_cast<long>(i)) * step;
    return lattice == Lattice::plus ? x : -x;
}

std::string lattice_basis_name(Lattice lattice, const Rational& step) {
    if (step == 1) return lattice == Lattice::plus ? "forward" : "backward";
    return std::string(lattice == Lattice::plus ? "forward_h(" : "backward_h(") + step.str() + ")";
}

RotaSeries star_product(const RotaSeries& f, const RotaSeries& g, std::optional<long> cap) {
    require_same_basis(f, g);
    RotaSeries out{f.basis, {}};
    if (f.zeta.empty() || g.zeta.empty()) return out;
    long order = f.order() + g.order();
    if (cap) order = std::min(order, *cap);
    if (order < 0) return out;
    out.zeta.assign(static_cast<std::size_t>(order) + 1, Rational(0));
    for (std::size_t i = 0; i < f.zeta.size() && static_cast<long>(i) <= order; ++i) {
        if (f.zeta[i].is_zero()) continue;
        for (std::size_t j = 0; j < g.zeta.size() && static_cast<long>(i + j) <= order; ++j) {
            out.zeta[i + j] += f.zeta[i] * g.zeta[j];
        }
    }
    return out;
}

RotaSeries q_derive(const RotaSeries& f) {
    RotaSeries out{f.basis, {}};
    for (std::size_t k = 1; k < f.zeta.size(); ++k) out.zeta.push_back(Rational(static_cast<long>(k)) * f.zeta[k]);
    return out;
}

RotaSeries operator+(const RotaSeries& f, const RotaSeries& g) {
    require_same_basis(f, g);
    RotaSeries out{f.basis, std::vector<Rational>(std::max(f.zeta.size(), g.zeta.size()))};
    for (std::size_t k = 0; k < out.zeta.size(); ++k) out.zeta[k] = f.coeff(k) + g.coeff(k);
    return out;
}

RotaSeries operator-(const RotaSeries& f, const RotaSeries& g) {
    require_same_basis(f, g);
    RotaSeries out{f.basis, std::vector<Rational>(std::max(f.zeta.size(), g.zeta.size()))};
    for (std::size_t k = 0; k < out.zeta.size(); ++k) out.zeta[k] = f.coeff(k) - g.coeff(k);
    return out;
}

bool agree_up_to(const RotaSeries& f, const RotaSeries& g, long order) {
    for (long k = 0; k <= order; ++k) {
        if (f.coeff(static_cast<std::size_t>(k)) != g.coeff(static_cast<std::size_t>(k))) return false;
    }
    return true;
}

bool leibniz_check(const RotaSeries& f, const RotaSeries& g) {
    require_same_basis(f, g);
    const RotaSeries lhs = q_derive(star_product(f, g));
    const RotaSeries rhs = star_product(q_derive(f), g) + star_product(f, q_derive(g));
    return agree_up_to(lhs, rhs, std::max(lhs.order(), rhs.order()));
}

LatticeFunction zeta_to_u(const RotaSeries& f, Lattice lattice, std::size_t m, const Rational& step) {
    if (step.sign() <= 0) throw Error("lattice step must be positive");
    const std::string expected = lattice_basis_name(lattice, step);
    if (f.basis != expected) {
        throw BasisMismatch("series in basis '" + f.basis + "' evaluated on the lattice of '" + expected + "'");
    }
    LatticeFunction out{lattice, step, {}};
    out.values = lattice == Lattice::plus ? lplus_values(f.zeta, m, step) : lplus_values(alternate(f.zeta), m, step);
    return out;
}

LatticeFunction zeta_to_u(const RotaSeries& f, const BasicSequence& basic, std::size_t m) {
    if (f.basis != basic.name()) {
        throw BasisMismatch("series in basis '" + f.basis + "' with basic sequence of '" + basic.name() + "'");
    }
    const LatticeOf where = lattice_of(basic);
    return zeta_to_u(f, where.lattice, m, where.step);
}

RotaSeries u_to_zeta(const LatticeFunction& u, std::optional<std::size_t> order) {
    if (u.values.empty()) throw Underdetermined("no lattice values to invert");
    const std::size_t k_max = order.value_or(u.values.size() - 1);
    if (k_max + 1 > u.values.size()) {
        throw Underdetermined("zeta_" + std::to_string(k_max) + " needs " + std::to_string(k_max + 1) +
                              " lattice values, have " + std::to_string(u.values.size()));
    }
    RotaSeries out{lattice_basis_name(u.lattice, u.step), {}};
    out.zeta = lplus_zeta(u.values, k_max, u.step);
    if (u.lattice == Lattice::minus) out.zeta = alternate(std::move(out.zeta));
    return out;
}

Polynomial to_monomial(const RotaSeries& f, const BasicSequence& basic) {
    if (f.basis != basic.name()) {
        throw BasisMismatch("series in basis '" + f.basis + "' with basic sequence of '" + basic.name() + "'");
    }
    if (f.order() > static_cast<long>(basic.order())) {
        throw CutoffExceeded("series of order " + std::to_string(f.order()) + " but basic sequence only to order " +
                             std::to_string(basic.order()));
    }
    Polynomial out;
    for (std::size_t k = 0; k < f.zeta.size(); ++k) {
        if (!f.zeta[k].is_zero()) out += basic[k] * f.zeta[k];
    }
    return out;
}

RotaSeries from_monomial(const Polynomial& p, const BasicSequence& basic) {
    if (p.degree() > static_cast<long>(basic.order())) {
        throw CutoffExceeded("polynomial of degree " + std::to_string(p.degree()) +
                             " but basic sequence only to order " + std::to_string(basic.order()));
    }
    const std::size_t top = p.is_zero() ? 0 : static_cast<std::size_t>(p.degree());
    RotaSeries out{basic.name(), std::vector<Rational>(top + 1)};
    Polynomial rest = p;
    for (std::size_t d = top + 1; d-- > 0;) {
        const Rational c = rest.coeff(d);
        if (c.is_zero()) continue;
        out.zeta[d] = c / basic[d].leading();
        rest -= basic[d] * out.zeta[d];
    }
    if (!rest.is_zero()) throw InternalInconsistency("basis conversion left a remainder");
    return out;
}

}  // namespace dfrob
