#include "sfl/coweight.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sfl {

Coweight::Coweight(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("coweight needs d >= 1");
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i - 1] < parts_[i])
            throw std::invalid_argument("coweight parts must be weakly decreasing");
    }
}

Coweight Coweight::zero(int d) {
    return Coweight(std::vector<int>(static_cast<std::size_t>(d), 0));
}

Coweight Coweight::minuscule(int d) {
    std::vector<int> v(static_cast<std::size_t>(d), 0);
    v[0] = 1;
    return Coweight(std::move(v));
}

Coweight Coweight::parse(const std::string& text) {
    std::vector<int> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad coweight literal: '" + text + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw ParseError("bad coweight literal: '" + text + "'");
        v.push_back(value);
    }
    if (v.empty()) throw ParseError("empty coweight literal");
    try {
        return Coweight(std::move(v));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + ": '" + text + "'");
    }
}

long long Coweight::weight() const {
    long long s = 0;
    for (int x : parts_) s += x;
    return s;
}

long long Coweight::rho2() const {
    const int d = dim();
    long long s = 0;
    for (int i = 0; i < d; ++i)
        s += static_cast<long long>(d - 1 - 2 * i) * parts_[static_cast<std::size_t>(i)];
    return s;
}

std::pair<Coweight, Coweight> Coweight::split_plus_minus() const {
    std::vector<int> plus(parts_.size()), minus(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        plus[i] = std::max(parts_[i], 0);
        minus[i] = std::min(parts_[i], 0);
    }
    return {Coweight(std::move(plus)), Coweight(std::move(minus))};
}

long long Coweight::sup_norm() const {
    long long pos = 0, neg = 0;
    for (int x : parts_) {
        if (x > 0) pos += x;
        else neg -= x;
    }
    return std::max(pos, neg);
}

Coweight Coweight::shifted(int n) const {
    std::vector<int> v = parts_;
    for (int& x : v) x += n;
    return Coweight(std::move(v));
}

Coweight Coweight::scaled(int r) const {
    std::vector<int> v = parts_;
    for (int& x : v) x *= r;
    if (r < 0) std::reverse(v.begin(), v.end());
    return Coweight(std::move(v));
}

Coweight Coweight::negated_reversed() const {
    std::vector<int> v(parts_.rbegin(), parts_.rend());
    for (int& x : v) x = -x;
    return Coweight(std::move(v));
}

bool Coweight::is_zero() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int x) { return x == 0; });
}

std::string Coweight::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool dominance_leq(const Coweight& a, const Coweight& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("dominance_leq: dimensions differ");
    long long sa = 0, sb = 0;
    const int d = a.dim();
    for (int i = 0; i + 1 < d; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    sa += a.part(d - 1);
    sb += b.part(d - 1);
    return sa == sb;
}

// Descending-chain generation: every alpha < lambda is reached from lambda by
// a chain of single-unit moves lambda -> lambda - e_i + e_j (i < j) passing
// only through dominant vectors (Brylawski's cover description, shifted to
// the Laurent setting by translation invariance).
std::vector<Coweight> enumerate_below(const Coweight& a) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> frontier{a.parts()};
    seen.insert(a.parts());
    const int d = a.dim();
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& v : frontier) {
            for (int i = 0; i < d; ++i) {
                for (int j = i + 1; j < d; ++j) {
                    std::vector<int> w = v;
                    w[static_cast<std::size_t>(i)] -= 1;
                    w[static_cast<std::size_t>(j)] += 1;
                    bool dominant = true;
                    for (int k = 0; k + 1 < d; ++k) {
                        if (w[static_cast<std::size_t>(k)] < w[static_cast<std::size_t>(k + 1)]) {
                            dominant = false;
                            break;
                        }
                    }
                    if (dominant && seen.insert(w).second) next.push_back(std::move(w));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Coweight> out;
    out.reserve(seen.size());
    for (auto it = seen.rbegin(); it != seen.rend(); ++it) out.push_back(Coweight(*it));
    return out;
}

namespace {

void gen_dominant(int d, int bound, long long w, int pos, int lo, int hi,
                  std::vector<int>& acc, std::vector<Coweight>& out) {
    if (pos == d) {
        Coweight c{acc};
        if (c.weight() == w && c.sup_norm() <= bound) out.push_back(std::move(c));
        return;
    }
    for (int x = hi; x >= lo; --x) {
        acc.push_back(x);
        gen_dominant(d, bound, w, pos + 1, lo, x, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Coweight> dominant_with_sup_norm(int d, int bound, long long w) {
    std::vector<Coweight> out;
    std::vector<int> acc;
    gen_dominant(d, bound, w, 0, -bound, bound, acc, out);
    return out;
}

} // namespace sfl
