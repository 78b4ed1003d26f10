#ifndef SFL_VCOEFF_HPP
#define SFL_VCOEFF_HPP

#include <map>
#include <string>

#include "sfl/rational.hpp"

namespace sfl {

// A Laurent polynomial in the formal variable v with integer coefficients,
// q = v^2. All coefficient arithmetic in the library happens here; no
// floating point anywhere.
class VCoeff {
public:
    VCoeff() = default;
    VCoeff(long long c);

    // c * v^k
    static VCoeff v_power(int k, long long c = 1);
    // c * q^k = c * v^{2k}
    static VCoeff q_power(int k, long long c = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // v-exponent -> coefficient, no zeros stored.
    const std::map<int, long long>& terms() const { return terms_; }
    long long coeff(int vexp) const;

    VCoeff operator-() const;
    VCoeff& operator+=(const VCoeff& o);
    VCoeff& operator-=(const VCoeff& o);
    VCoeff& operator*=(const VCoeff& o);
    VCoeff& operator*=(long long c);
    friend VCoeff operator+(VCoeff a, const VCoeff& b) { return a += b; }
    friend VCoeff operator-(VCoeff a, const VCoeff& b) { return a -= b; }
    friend VCoeff operator*(const VCoeff& a, const VCoeff& b);
    friend VCoeff operator*(VCoeff a, long long c) { return a *= c; }

    friend bool operator==(const VCoeff& a, const VCoeff& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const VCoeff& a, const VCoeff& b) { return !(a == b); }

    // Substitution v -> v^r (unramified base extension of degree r).
    VCoeff stretch(int r) const;

    // Exact Laurent division; throws InternalInconsistency on a remainder.
    VCoeff div_exact(const VCoeff& d) const;

    bool all_exponents_even() const;
    bool all_exponents_nonnegative() const;
    bool all_coeffs_nonnegative() const;

    // Exact value at q = qval (so v^2 = qval); requires even exponents.
    Rational eval_q(long long qval) const;

    // Rendered in q when every exponent is even, otherwise in v.
    // Term order flips so the leading printed term is positive when possible,
    // e.g. "q^2-q" and "1-q".
    std::string str() const;

private:
    std::map<int, long long> terms_;
};

} // namespace sfl

#endif
