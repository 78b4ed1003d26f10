#ifndef SFL_COWEIGHT_HPP
#define SFL_COWEIGHT_HPP

#include <string>
#include <utility>
#include <vector>

#include "sfl/errors.hpp"

namespace sfl {

// A dominant coweight of GL_d: a weakly decreasing vector of d integers.
// Immutable value type; the constructor rejects non-monotone input instead
// of sorting it.
class Coweight {
public:
    explicit Coweight(std::vector<int> parts);

    static Coweight zero(int d);
    // First fundamental coweight (1,0,...,0).
    static Coweight minuscule(int d);
    // Parses "2,0,-1".
    static Coweight parse(const std::string& text);

    int dim() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }

    // |lambda| = sum of parts.
    long long weight() const;

    // 2*rho(lambda) = (d-1)*l1 + (d-3)*l2 + ... + (1-d)*ld.
    long long rho2() const;

    // lambda = lambda_plus + lambda_minus with lambda_plus >= 0 coordinatewise
    // and lambda_minus <= 0, each coordinate carried by exactly one summand.
    std::pair<Coweight, Coweight> split_plus_minus() const;

    // ||lambda|| = max(|lambda_plus|, |lambda_minus|).
    long long sup_norm() const;

    // Componentwise shift by n*(1,...,1).
    Coweight shifted(int n) const;
    // Componentwise multiple r*lambda.
    Coweight scaled(int r) const;
    // Dual coweight: negate and reverse (stays dominant).
    Coweight negated_reversed() const;

    bool is_zero() const;

    // "2,0,-1"
    std::string str() const;

    friend bool operator==(const Coweight& a, const Coweight& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Coweight& a, const Coweight& b) { return !(a == b); }
    // Lexicographic total order (extends dominance on fixed-weight classes);
    // used as the map key order everywhere.
    friend bool operator<(const Coweight& a, const Coweight& b) {
        if (a.parts_.size() != b.parts_.size())
            return a.parts_.size() < b.parts_.size();
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
};

// a <= b in the dominance order: all partial sums of a bounded by those of b,
// total sums equal. Throws DimensionMismatch.
bool dominance_leq(const Coweight& a, const Coweight& b);

// The finite set { alpha dominant : alpha <= a }, a included, sorted
// lexicographically descending (a first).
std::vector<Coweight> enumerate_below(const Coweight& a);

// All dominant coweights of dimension d with sup_norm <= bound and
// weight == w. Handy for sweeps and property tests.
std::vector<Coweight> dominant_with_sup_norm(int d, int bound, long long w);

} // namespace sfl

#endif
