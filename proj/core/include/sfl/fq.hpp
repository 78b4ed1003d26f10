#ifndef SFL_FQ_HPP
#define SFL_FQ_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sfl/errors.hpp"

namespace sfl {

// Descriptor of a finite field F_{p^deg}, p in {2,3,5,7}, deg <= 8,
// realized as F_p[x]/(modulus) for a fixed irreducible modulus. Interned:
// FqField::get always returns the same object for the same parameters, so
// element compatibility is pointer identity.
class FqField {
public:
    int p;
    int deg;
    long long q; // p^deg
    std::array<std::uint8_t, 9> modulus; // monic, modulus[deg] == 1

    static const FqField& get(int p, int deg);

    bool operator==(const FqField& o) const { return this == &o; }
};

// An element of F_{p^deg}: a polynomial residue in the generator g
// (the class of x). Cheap value type for enumeration inner loops.
class FqElem {
public:
    FqElem() : f_(nullptr) {}
    // Prime-field embedding of an integer (reduced mod p).
    FqElem(const FqField& f, long long value);

    static FqElem zero(const FqField& f) { return FqElem(f, 0); }
    static FqElem one(const FqField& f) { return FqElem(f, 1); }
    // The class of x.
    static FqElem gen(const FqField& f);
    // Element with base-p digit expansion idx (deterministic enumeration).
    static FqElem from_index(const FqField& f, long long idx);

    const FqField& field() const { return *f_; }
    bool is_zero() const;
    long long index() const;

    friend FqElem operator+(const FqElem& a, const FqElem& b);
    friend FqElem operator-(const FqElem& a, const FqElem& b);
    friend FqElem operator*(const FqElem& a, const FqElem& b);
    FqElem operator-() const;
    FqElem inverse() const; // throws DivisionByZero on zero
    FqElem pow(long long e) const;
    // x -> x^{p^e}, the e-th power of the absolute Frobenius.
    FqElem frob(int e) const;

    friend bool operator==(const FqElem& a, const FqElem& b);
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

    // "0", "1", "g", "g+1", "2*g^3+1"
    std::string str() const;

private:
    const FqField* f_;
    std::array<std::uint8_t, 8> c_{};

    void check_same(const FqElem& o) const;
};

// The subfield F_{p^a} inside F_{p^{a*r}}: an F_p-algebra embedding together
// with its inverse lookup on sigma-fixed elements. Used to move norms of
// elements of E = F_{q^r}((pi)) down to F = F_q((pi)).
class SubfieldMap {
public:
    SubfieldMap(int p, int a, int r);

    const FqField& small() const { return *small_; }
    const FqField& big() const { return *big_; }

    FqElem embed(const FqElem& x) const;
    // Inverse of embed; throws InternalInconsistency if x is not in the image.
    FqElem restrict(const FqElem& x) const;
    bool in_image(const FqElem& x) const;

private:
    const FqField* small_;
    const FqField* big_;
    std::vector<FqElem> embed_table_;       // index in small field -> image
    std::vector<long long> restrict_table_; // flat (big index, small index) pairs
    void restrict_map_insert(long long big_idx, long long small_idx);
};

} // namespace sfl

#endif
