#include "sfl/sympoly.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

namespace sfl {

namespace {

// Plain (non-symmetric) Laurent polynomials in d variables keyed by
// exponent vector; the workhorse behind products and symmetrization.
using Mono = std::vector<int>;
using MonoMap = std::map<Mono, VCoeff>;

void mono_add(MonoMap& m, const Mono& key, const VCoeff& c) {
    if (c.is_zero()) return;
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

MonoMap mono_mul(const MonoMap& a, const MonoMap& b) {
    MonoMap out;
    Mono key;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            key = ka;
            for (std::size_t i = 0; i < key.size(); ++i) key[i] += kb[i];
            mono_add(out, key, ca * cb);
        }
    }
    return out;
}

// Full orbit expansion of m_lambda: one term per distinct permutation.
MonoMap expand_msym(const Coweight& lam) {
    MonoMap out;
    Mono w(lam.parts().rbegin(), lam.parts().rend()); // ascending for next_permutation
    do {
        out.emplace(w, VCoeff(1));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

MonoMap expand(const SymPoly& p) {
    MonoMap out;
    for (const auto& [lam, c] : p.terms()) {
        for (const auto& [mono, one] : expand_msym(lam)) {
            (void)one;
            mono_add(out, mono, c);
        }
    }
    return out;
}

// Collect a symmetric MonoMap into the m-basis by reading off dominant keys.
SymPoly collect(int d, const MonoMap& m) {
    SymPoly out(d);
    for (const auto& [mono, c] : m) {
        bool dominant = true;
        for (std::size_t i = 0; i + 1 < mono.size(); ++i) {
            if (mono[i] < mono[i + 1]) {
                dominant = false;
                break;
            }
        }
        if (dominant) out.add_term(Coweight(mono), c);
    }
    return out;
}

// s_lambda(x_1..x_d) by branching: sum over mu interlacing lambda of
// s_mu(x_1..x_{d-1}) * x_d^{|lambda|-|mu|}.
void schur_monomap(const std::vector<int>& lam, int d, MonoMap& out) {
    if (d == 1) {
        mono_add(out, Mono{lam[0]}, VCoeff(1));
        return;
    }
    long long wl = 0;
    for (int x : lam) wl += x;
    std::vector<int> mu(static_cast<std::size_t>(d - 1));
    // Iterate all mu with lam[i] >= mu[i] >= lam[i+1].
    std::vector<int> idx(static_cast<std::size_t>(d - 1));
    for (int i = 0; i < d - 1; ++i) mu[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)];
    while (true) {
        MonoMap sub;
        schur_monomap(mu, d - 1, sub);
        long long wm = 0;
        for (int x : mu) wm += x;
        const int last = static_cast<int>(wl - wm);
        for (const auto& [mono, c] : sub) {
            Mono key = mono;
            key.push_back(last);
            mono_add(out, key, c);
        }
        // next mu in the interlacing box, odometer style
        int i = d - 2;
        while (i >= 0) {
            if (mu[static_cast<std::size_t>(i)] > lam[static_cast<std::size_t>(i + 1)]) {
                mu[static_cast<std::size_t>(i)] -= 1;
                for (int j = i + 1; j < d - 1; ++j)
                    mu[static_cast<std::size_t>(j)] = lam[static_cast<std::size_t>(j)];
                break;
            }
            --i;
        }
        if (i < 0) break;
    }
}

// Exact division of an alternating polynomial by (x_i - x_j), done as
// synthetic division in the variable x_i from the top degree down.
MonoMap divide_by_root_difference(const MonoMap& a, int i, int j) {
    if (a.empty()) return a;
    // slice by exponent of x_i
    std::map<int, MonoMap> slices;
    for (const auto& [mono, c] : a) {
        Mono rest = mono;
        const int k = rest[static_cast<std::size_t>(i)];
        rest[static_cast<std::size_t>(i)] = 0;
        mono_add(slices[k], rest, c);
    }
    const int hi = slices.rbegin()->first;
    const int lo = slices.begin()->first;
    std::map<int, MonoMap> quot;
    MonoMap carry; // q_k during the descent
    for (int k = hi; k > lo; --k) {
        MonoMap ak = slices.count(k) ? slices[k] : MonoMap{};
        // q_{k-1} = a_k + x_j * q_k
        MonoMap qk1 = std::move(ak);
        for (const auto& [mono, c] : carry) {
            Mono key = mono;
            key[static_cast<std::size_t>(j)] += 1;
            mono_add(qk1, key, c);
        }
        if (!qk1.empty()) quot[k - 1] = qk1;
        carry = std::move(qk1);
    }
    // remainder check: a_lo == -x_j * q_lo
    MonoMap check = slices.count(lo) ? slices[lo] : MonoMap{};
    for (const auto& [mono, c] : carry) {
        Mono key = mono;
        key[static_cast<std::size_t>(j)] += 1;
        mono_add(check, key, c);
    }
    if (!check.empty())
        throw InternalInconsistency("symmetrization not divisible by Vandermonde factor");
    MonoMap out;
    for (const auto& [k, slice] : quot) {
        for (const auto& [mono, c] : slice) {
            Mono key = mono;
            key[static_cast<std::size_t>(i)] += k;
            mono_add(out, key, c);
        }
    }
    return out;
}

long long perm_sign(const std::vector<int>& perm) {
    long long s = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) s = -s;
    return s;
}

// v_lambda(t) = product over distinct part values of [multiplicity]_t!.
VCoeff stabilizer_factor(const Coweight& lam, const VCoeff& t) {
    VCoeff out(1);
    int run = 1;
    auto bracket_factorial = [&](int m) {
        for (int i = 2; i <= m; ++i) {
            VCoeff bracket(0);
            VCoeff tp(1);
            for (int j = 0; j < i; ++j) {
                bracket += tp;
                tp *= t;
            }
            out *= bracket;
        }
    };
    for (int i = 1; i < lam.dim(); ++i) {
        if (lam.part(i) == lam.part(i - 1)) {
            ++run;
        } else {
            bracket_factorial(run);
            run = 1;
        }
    }
    bracket_factorial(run);
    return out;
}

std::mutex hl_cache_mutex;
std::map<std::pair<std::vector<int>, std::map<int, long long>>, SymPoly> hl_cache;

} // namespace

SymPoly::SymPoly(int d) : d_(d) {
    if (d < 1) throw std::invalid_argument("SymPoly needs d >= 1");
}

SymPoly SymPoly::one(int d) {
    SymPoly p(d);
    p.add_term(Coweight::zero(d), VCoeff(1));
    return p;
}

SymPoly SymPoly::msym(const Coweight& a) {
    SymPoly p(a.dim());
    p.add_term(a, VCoeff(1));
    return p;
}

VCoeff SymPoly::coeff(const Coweight& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? VCoeff() : it->second;
}

SymPoly& SymPoly::add_term(const Coweight& key, const VCoeff& c) {
    if (key.dim() != d_) throw DimensionMismatch("SymPoly term of wrong dimension");
    if (c.is_zero()) return *this;
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        coeffs_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
}

SymPoly SymPoly::operator-() const {
    SymPoly out(d_);
    for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, -c);
    return out;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (d_ != o.d_) throw DimensionMismatch("SymPoly addition across dimensions");
    for (const auto& [k, c] : o.coeffs_) add_term(k, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (d_ != o.d_) throw DimensionMismatch("SymPoly subtraction across dimensions");
    for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (a.d_ != b.d_) throw DimensionMismatch("SymPoly product across dimensions");
    return collect(a.d_, mono_mul(expand(a), expand(b)));
}

SymPoly& SymPoly::operator*=(const SymPoly& o) {
    *this = *this * o;
    return *this;
}

SymPoly SymPoly::scaled(const VCoeff& c) const {
    SymPoly out(d_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : coeffs_) out.coeffs_.emplace(k, v * c);
    return out;
}

std::string SymPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const bool constant = it->first.is_zero();
        const std::string cs = it->second.str();
        std::string term;
        if (constant) {
            term = cs;
        } else if (it->second.is_one()) {
            term = "m[" + it->first.str() + "]";
        } else if (it->second.terms().size() == 1) {
            term = cs + "*m[" + it->first.str() + "]";
        } else {
            term = "(" + cs + ")*m[" + it->first.str() + "]";
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

SymPoly schur(const Coweight& a) {
    MonoMap m;
    schur_monomap(a.parts(), a.dim(), m);
    return collect(a.dim(), m);
}

SymPoly hall_littlewood_at(const Coweight& a, const VCoeff& t) {
    {
        std::lock_guard<std::mutex> lock(hl_cache_mutex);
        auto it = hl_cache.find({a.parts(), t.terms()});
        if (it != hl_cache.end()) return it->second;
    }
    const int d = a.dim();
    // F = x^lambda * prod_{i<j} (x_i - t x_j), accumulated incrementally.
    MonoMap f;
    {
        Mono x0 = a.parts();
        f.emplace(x0, VCoeff(1));
    }
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            MonoMap g;
            for (const auto& [mono, c] : f) {
                Mono k1 = mono;
                k1[static_cast<std::size_t>(i)] += 1;
                mono_add(g, k1, c);
                Mono k2 = mono;
                k2[static_cast<std::size_t>(j)] += 1;
                mono_add(g, k2, -(c * t));
            }
            f = std::move(g);
        }
    }
    // Alternating sum over S_d (the w(Vandermonde) denominators contribute
    // the sign), then one Vandermonde division.
    std::vector<int> perm(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i;
    MonoMap num;
    do {
        const long long sgn = perm_sign(perm);
        for (const auto& [mono, c] : f) {
            Mono key(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i)
                key[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
                    mono[static_cast<std::size_t>(i)];
            VCoeff cc = c;
            cc *= sgn;
            mono_add(num, key, cc);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) num = divide_by_root_difference(num, i, j);
    const VCoeff vlam = stabilizer_factor(a, t);
    SymPoly p = collect(d, num);
    SymPoly out(d);
    for (const auto& [k, c] : p.terms()) out.add_term(k, c.div_exact(vlam));
    {
        std::lock_guard<std::mutex> lock(hl_cache_mutex);
        hl_cache.emplace(std::make_pair(a.parts(), t.terms()), out);
    }
    return out;
}

SymPoly hall_littlewood(const Coweight& a) {
    return hall_littlewood_at(a, VCoeff::v_power(-2));
}

VCoeff kostka_foulkes(const Coweight& lam, const Coweight& alf) {
    if (lam.dim() != alf.dim())
        throw DimensionMismatch("kostka_foulkes: dimensions differ");
    if (lam.weight() != alf.weight())
        throw WeightMismatch("kostka_foulkes: weights differ");
    if (alf == lam) return VCoeff(1);
    if (!dominance_leq(alf, lam)) return VCoeff();
    // Peel s_lam against the P basis, walking a linear extension of the
    // dominance order (lexicographic works: alpha < beta lex whenever
    // alpha < beta in dominance).
    const VCoeff t = VCoeff::v_power(-2);
    SymPoly rem = schur(lam);
    VCoeff wanted;
    for (const Coweight& mu : enumerate_below(lam)) {
        const VCoeff c = rem.coeff(mu);
        if (mu == alf) wanted = c;
        if (!c.is_zero()) rem -= hall_littlewood_at(mu, t).scaled(c);
    }
    if (!rem.is_zero())
        throw InternalInconsistency("Hall-Littlewood triangular solve left a remainder");
    return wanted;
}

VCoeff lusztig_kato_poly(const Coweight& lam, const Coweight& alf) {
    const VCoeff k = kostka_foulkes(lam, alf);
    VCoeff out = k * VCoeff::v_power(static_cast<int>(lam.rho2() - alf.rho2()));
    if (!out.all_exponents_even() || !out.all_exponents_nonnegative() ||
        !out.all_coeffs_nonnegative())
        throw NormalizationFailure("Lusztig-Kato coefficient is not a positive polynomial in q");
    return out;
}

SymPoly substitute_power(const SymPoly& p, int r) {
    if (r < 1) throw std::invalid_argument("substitute_power needs r >= 1");
    SymPoly out(p.dim());
    for (const auto& [k, c] : p.terms()) out.add_term(k.scaled(r), c.stretch(r));
    return out;
}

} // namespace sfl
