#ifndef SFL_HECKE_HPP
#define SFL_HECKE_HPP

#include <map>
#include <string>

#include "sfl/sympoly.hpp"

namespace sfl {

// An element of the spherical Hecke algebra of GL_d over a local function
// field, written in the basis of double-coset characteristic functions
// phi_lambda (Haar measure with vol(GL_d(O)) = 1). Coefficients live in
// Z[v, v^-1]; the residue cardinality is q = v^2 for the base field and
// q^r = (v^r)^2 when the element is read over the unramified extension of
// degree r.
class HeckeElement {
public:
    explicit HeckeElement(int d);

    // phi_a, the characteristic function of K diag(pi^a) K.
    static HeckeElement phi(const Coweight& a);
    // The unit phi_0 = 1_{G(O)}.
    static HeckeElement unit(int d);

    int dim() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Coweight, VCoeff>& terms() const { return terms_; }
    VCoeff coeff(const Coweight& key) const;
    HeckeElement& add_term(const Coweight& key, const VCoeff& c);

    HeckeElement operator-() const;
    HeckeElement& operator+=(const HeckeElement& o);
    HeckeElement& operator-=(const HeckeElement& o);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    HeckeElement scaled(const VCoeff& c) const;

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

    // Largest sup_norm over the support (0 for the zero element).
    long long support_sup_norm() const;

    // "phi[2,-2] + (1-q)*phi[1,-1] + (q^2-q)*phi[0,0]"
    std::string str() const;

private:
    int d_;
    std::map<Coweight, VCoeff> terms_;
};

// The Satake transform, normalized as
//   satake(phi_lambda) = v^{2 rho(lambda)} * P_lambda(t; v^-2),
// extended VCoeff-linearly. An injective algebra map.
SymPoly satake(const HeckeElement& h);

// Inverse of the Satake transform by unitriangular peeling from maximal
// support coweights. Throws NotInImage if peeling fails to terminate.
HeckeElement satake_inv(const SymPoly& p);

// Convolution product, computed through the Satake isomorphism.
HeckeElement convolve(const HeckeElement& a, const HeckeElement& b);

// psi_lambda = sum_{alpha <= lambda} P_{lambda,alpha}(q) phi_alpha; its
// Satake transform is v^{2 rho(lambda)} * s_lambda.
HeckeElement psi(const Coweight& a);

// Base change b : H_E -> H_F for the unramified extension of degree r,
// induced by u_i -> t_i^r (and v_E -> v^r) on Satake transforms.
HeckeElement base_change(const HeckeElement& h, int r);

} // namespace sfl

#endif
