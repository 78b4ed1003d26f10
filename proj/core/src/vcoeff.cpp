#include "sfl/vcoeff.hpp"

#include <algorithm>
#include <vector>

namespace sfl {

VCoeff::VCoeff(long long c) {
    if (c != 0) terms_[0] = c;
}

VCoeff VCoeff::v_power(int k, long long c) {
    VCoeff r;
    if (c != 0) r.terms_[k] = c;
    return r;
}

VCoeff VCoeff::q_power(int k, long long c) {
    return v_power(2 * k, c);
}

bool VCoeff::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long long VCoeff::coeff(int vexp) const {
    auto it = terms_.find(vexp);
    return it == terms_.end() ? 0 : it->second;
}

VCoeff VCoeff::operator-() const {
    VCoeff r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

VCoeff& VCoeff::operator+=(const VCoeff& o) {
    for (const auto& [k, c] : o.terms_) {
        long long& slot = terms_[k];
        slot += c;
        if (slot == 0) terms_.erase(k);
    }
    return *this;
}

VCoeff& VCoeff::operator-=(const VCoeff& o) {
    for (const auto& [k, c] : o.terms_) {
        long long& slot = terms_[k];
        slot -= c;
        if (slot == 0) terms_.erase(k);
    }
    return *this;
}

VCoeff operator*(const VCoeff& a, const VCoeff& b) {
    VCoeff r;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            long long& slot = r.terms_[ka + kb];
            slot += ca * cb;
            if (slot == 0) r.terms_.erase(ka + kb);
        }
    }
    return r;
}

VCoeff& VCoeff::operator*=(const VCoeff& o) {
    *this = *this * o;
    return *this;
}

VCoeff& VCoeff::operator*=(long long c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

VCoeff VCoeff::stretch(int r) const {
    VCoeff out;
    for (const auto& [k, c] : terms_) out.terms_[k * r] = c;
    return out;
}

VCoeff VCoeff::div_exact(const VCoeff& d) const {
    if (d.is_zero()) throw DivisionByZero("VCoeff division by zero");
    if (is_zero()) return VCoeff();
    // Long division from the top exponent; Laurent shifts handled by offsets.
    VCoeff rem = *this;
    VCoeff quot;
    const int dtop = d.terms_.rbegin()->first;
    const long long dlead = d.terms_.rbegin()->second;
    while (!rem.is_zero()) {
        const int rtop = rem.terms_.rbegin()->first;
        const long long rlead = rem.terms_.rbegin()->second;
        if (rlead % dlead != 0)
            throw InternalInconsistency("VCoeff division leaves a remainder");
        VCoeff t = v_power(rtop - dtop, rlead / dlead);
        quot += t;
        rem -= t * d;
        if (!rem.is_zero() && rem.terms_.rbegin()->first >= rtop)
            throw InternalInconsistency("VCoeff division does not terminate");
    }
    return quot;
}

bool VCoeff::all_exponents_even() const {
    for (const auto& [k, c] : terms_)
        if (k % 2 != 0) return false;
    return true;
}

bool VCoeff::all_exponents_nonnegative() const {
    return terms_.empty() || terms_.begin()->first >= 0;
}

bool VCoeff::all_coeffs_nonnegative() const {
    for (const auto& [k, c] : terms_)
        if (c < 0) return false;
    return true;
}

Rational VCoeff::eval_q(long long qval) const {
    Rational acc(0);
    for (const auto& [k, c] : terms_) {
        if (k % 2 != 0)
            throw NormalizationFailure("eval_q on a coefficient with odd v-exponent");
        const int e = k / 2;
        long long p = 1;
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= qval;
        acc += (e >= 0) ? Rational(c * p) : Rational(c, p);
    }
    return acc;
}

namespace {

// One monomial, sign included: "q^2", "-q", "3", "v^-1", "-2*v^3".
std::string monomial_str(int vexp, long long c, bool as_q) {
    std::string sym;
    if (vexp != 0) {
        if (as_q) {
            const int e = vexp / 2;
            sym = (e == 1) ? "q" : "q^" + std::to_string(e);
        } else {
            sym = (vexp == 1) ? "v" : "v^" + std::to_string(vexp);
        }
    }
    if (sym.empty()) return std::to_string(c);
    if (c == 1) return sym;
    if (c == -1) return "-" + sym;
    return std::to_string(c) + "*" + sym;
}

} // namespace

std::string VCoeff::str() const {
    if (terms_.empty()) return "0";
    const bool as_q = all_exponents_even();
    std::vector<std::pair<int, long long>> ts(terms_.begin(), terms_.end());
    std::reverse(ts.begin(), ts.end()); // descending exponent
    if (ts.front().second < 0 && ts.back().second > 0)
        std::reverse(ts.begin(), ts.end()); // prefer a positive leading term
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::string m = monomial_str(ts[i].first, ts[i].second, as_q);
        if (i == 0) {
            out = m;
        } else if (m[0] == '-') {
            out += "-" + m.substr(1);
        } else {
            out += "+" + m;
        }
    }
    return out;
}

} // namespace sfl
