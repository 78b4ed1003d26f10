#include "sfl/hecke.hpp"

namespace sfl {

HeckeElement::HeckeElement(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("HeckeElement needs d >= 1");
}

HeckeElement HeckeElement::phi(const Coweight& a) {
    HeckeElement h(a.dim());
    h.add_term(a, VCoeff(1));
    return h;
}

HeckeElement HeckeElement::unit(int d) {
    return phi(Coweight::zero(d));
}

VCoeff HeckeElement::coeff(const Coweight& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? VCoeff() : it->second;
}

HeckeElement& HeckeElement::add_term(const Coweight& key, const VCoeff& c) {
    if (key.dim() != d_) throw DimensionMismatch("HeckeElement term of wrong dimension");
    if (c.is_zero()) return *this;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement out(d_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    if (d_ != o.d_) throw DimensionMismatch("HeckeElement addition across dimensions");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
    if (d_ != o.d_) throw DimensionMismatch("HeckeElement subtraction across dimensions");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

HeckeElement HeckeElement::scaled(const VCoeff& c) const {
    HeckeElement out(d_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
    return out;
}

long long HeckeElement::support_sup_norm() const {
    long long n = 0;
    for (const auto& [k, c] : terms_) n = std::max(n, k.sup_norm());
    return n;
}

std::string HeckeElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const std::string cs = it->second.str();
        std::string term;
        if (it->second.is_one()) {
            term = "phi[" + it->first.str() + "]";
        } else if (it->second.terms().size() == 1) {
            term = cs + "*phi[" + it->first.str() + "]";
        } else {
            term = "(" + cs + ")*phi[" + it->first.str() + "]";
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

SymPoly satake(const HeckeElement& h) {
    SymPoly out(h.dim());
    for (const auto& [lam, c] : h.terms()) {
        const VCoeff twist = VCoeff::v_power(static_cast<int>(lam.rho2()));
        out += hall_littlewood(lam).scaled(c * twist);
    }
    return out;
}

HeckeElement satake_inv(const SymPoly& p) {
    HeckeElement out(p.dim());
    SymPoly rem = p;
    // Each pass removes the lexicographically largest key, which is a
    // dominance-maximal element of the support; newly introduced keys are
    // strictly smaller, so the loop is finite.
    std::size_t guard = 0;
    const std::size_t guard_max = 10000 + 50 * p.terms().size();
    while (!rem.is_zero()) {
        if (++guard > guard_max)
            throw NotInImage("satake_inv peeling does not terminate");
        const auto top = rem.terms().rbegin();
        const Coweight mu = top->first;
        const VCoeff c = top->second * VCoeff::v_power(static_cast<int>(-mu.rho2()));
        out.add_term(mu, c);
        rem -= hall_littlewood(mu).scaled(c * VCoeff::v_power(static_cast<int>(mu.rho2())));
        if (!rem.is_zero() && !(rem.terms().rbegin()->first < mu))
            throw NotInImage("satake_inv support did not shrink");
    }
    return out;
}

HeckeElement convolve(const HeckeElement& a, const HeckeElement& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("convolve across dimensions");
    return satake_inv(satake(a) * satake(b));
}

HeckeElement psi(const Coweight& a) {
    HeckeElement out(a.dim());
    for (const Coweight& alf : enumerate_below(a))
        out.add_term(alf, lusztig_kato_poly(a, alf));
    return out;
}

HeckeElement base_change(const HeckeElement& h, int r) {
    if (r < 1) throw std::invalid_argument("base_change needs r >= 1");
    if (r == 1) return h;
    return satake_inv(substitute_power(satake(h), r));
}

} // namespace sfl
