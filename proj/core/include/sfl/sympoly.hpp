#ifndef SFL_SYMPOLY_HPP
#define SFL_SYMPOLY_HPP

#include <map>
#include <string>

#include "sfl/coweight.hpp"
#include "sfl/vcoeff.hpp"

namespace sfl {

// A symmetric Laurent polynomial in d variables over Z[v, v^-1], stored in
// the monomial-symmetric basis: sum over dominant coweights lambda of
// coeffs[lambda] * m_lambda(t_1, ..., t_d).
class SymPoly {
public:
    explicit SymPoly(int d);

    static SymPoly one(int d);
    // The basis element m_a.
    static SymPoly msym(const Coweight& a);

    int dim() const { return d_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Coweight, VCoeff>& terms() const { return coeffs_; }
    VCoeff coeff(const Coweight& key) const;

    SymPoly& add_term(const Coweight& key, const VCoeff& c);

    SymPoly operator-() const;
    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    // Exact product, re-expressed in the m-basis. Throws DimensionMismatch.
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    SymPoly& operator*=(const SymPoly& o);
    SymPoly scaled(const VCoeff& c) const;

    friend bool operator==(const SymPoly& a, const SymPoly& b) {
        return a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SymPoly& a, const SymPoly& b) { return !(a == b); }

    // "q*m[2,0]+(q-1)*m[1,1]", keys in descending lexicographic order,
    // the m[0,...,0] term printed as a bare coefficient.
    std::string str() const;

private:
    int d_;
    std::map<Coweight, VCoeff> coeffs_;
};

// Schur Laurent polynomial s_a in a.dim() variables, computed by the
// GL_d -> GL_{d-1} branching rule (no division, exact for negative parts).
SymPoly schur(const Coweight& a);

// Hall-Littlewood P_a(t_1..t_d; t) at the Satake parameter t = v^-2,
// by full S_d symmetrization with exact Vandermonde division.
SymPoly hall_littlewood(const Coweight& a);

// Same with an arbitrary coefficient-ring value for the parameter t;
// hall_littlewood(a) == hall_littlewood_at(a, v^-2) and
// hall_littlewood_at(a, 0) == schur(a).
SymPoly hall_littlewood_at(const Coweight& a, const VCoeff& t);

// Kostka-Foulkes transition coefficient K_{lam,alf}(t) evaluated at t = v^-2,
// from the unitriangular solve of s_lam = sum_alf K * P_alf.
// Zero unless alf <= lam, one when alf == lam.
VCoeff kostka_foulkes(const Coweight& lam, const Coweight& alf);

// P_{lam,alf}(q) = v^{2rho(lam)-2rho(alf)} * K_{lam,alf}(v^-2); checked to be
// a polynomial in q with nonnegative integer coefficients.
VCoeff lusztig_kato_poly(const Coweight& lam, const Coweight& alf);

// The algebra map induced by t_i -> t_i^r together with v -> v^r.
SymPoly substitute_power(const SymPoly& p, int r);

} // namespace sfl

#endif
