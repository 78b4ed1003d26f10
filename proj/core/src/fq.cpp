#include "sfl/fq.hpp"

#include <map>

namespace sfl {

namespace {

struct TableEntry {
    int p;
    int deg;
    std::array<std::uint8_t, 9> modulus;
};

// Fixed irreducible moduli over F_p (lexicographically smallest monic by
// base-p encoding of the low coefficients). Degree 1 uses x itself, so the
// quotient is the prime field and g = 0. Re-verified by the test suite.
const TableEntry kIrreducible[] = {
    {2, 1, {0, 1}},
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 1, 0, 1}},
    {2, 4, {1, 1, 0, 0, 1}},
    {2, 5, {1, 0, 1, 0, 0, 1}},
    {2, 6, {1, 1, 0, 0, 0, 0, 1}},
    {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
    {3, 1, {0, 1}},
    {3, 2, {1, 0, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 1, 0, 0, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {3, 6, {2, 1, 0, 0, 0, 0, 1}},
    {3, 7, {2, 0, 1, 0, 0, 0, 0, 1}},
    {3, 8, {2, 0, 1, 0, 0, 0, 0, 0, 1}},
    {5, 1, {0, 1}},
    {5, 2, {2, 0, 1}},
    {5, 3, {1, 1, 0, 1}},
    {5, 4, {2, 0, 0, 0, 1}},
    {5, 5, {1, 4, 0, 0, 0, 1}},
    {5, 6, {2, 1, 0, 0, 0, 0, 1}},
    {5, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
    {5, 8, {2, 0, 0, 0, 0, 0, 0, 0, 1}},
    {7, 1, {0, 1}},
    {7, 2, {1, 0, 1}},
    {7, 3, {2, 0, 0, 1}},
    {7, 4, {1, 1, 0, 0, 1}},
    {7, 5, {3, 1, 0, 0, 0, 1}},
    {7, 6, {2, 0, 0, 0, 0, 0, 1}},
    {7, 7, {1, 6, 0, 0, 0, 0, 0, 1}},
    {7, 8, {3, 1, 0, 0, 0, 0, 0, 0, 1}},
};

struct Registry {
    std::map<std::pair<int, int>, FqField> fields;
    Registry() {
        for (const TableEntry& e : kIrreducible) {
            FqField f;
            f.p = e.p;
            f.deg = e.deg;
            f.q = 1;
            for (int i = 0; i < e.deg; ++i) f.q *= e.p;
            f.modulus = e.modulus;
            fields.emplace(std::make_pair(e.p, e.deg), f);
        }
    }
};

const Registry& registry() {
    static const Registry r;
    return r;
}

int mod_p(long long v, int p) {
    long long m = v % p;
    if (m < 0) m += p;
    return static_cast<int>(m);
}

} // namespace

const FqField& FqField::get(int p, int deg) {
    auto it = registry().fields.find({p, deg});
    if (it == registry().fields.end())
        throw std::invalid_argument("unsupported finite field F_{" + std::to_string(p) + "^" +
                                    std::to_string(deg) + "}");
    return it->second;
}

FqElem::FqElem(const FqField& f, long long value) : f_(&f) {
    c_[0] = static_cast<std::uint8_t>(mod_p(value, f.p));
}

FqElem FqElem::gen(const FqField& f) {
    FqElem x(f, 0);
    if (f.deg == 1) return x; // g is the class of x = 0 in the prime field
    x.c_[1] = 1;
    return x;
}

FqElem FqElem::from_index(const FqField& f, long long idx) {
    FqElem x(f, 0);
    for (int i = 0; i < f.deg; ++i) {
        x.c_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(idx % f.p);
        idx /= f.p;
    }
    return x;
}

bool FqElem::is_zero() const {
    for (int i = 0; i < f_->deg; ++i)
        if (c_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
}

long long FqElem::index() const {
    long long idx = 0;
    for (int i = f_->deg - 1; i >= 0; --i) idx = idx * f_->p + c_[static_cast<std::size_t>(i)];
    return idx;
}

void FqElem::check_same(const FqElem& o) const {
    if (f_ == nullptr || o.f_ == nullptr || f_ != o.f_)
        throw std::invalid_argument("FqElem operands from different fields");
}

FqElem operator+(const FqElem& a, const FqElem& b) {
    a.check_same(b);
    FqElem r = a;
    for (int i = 0; i < a.f_->deg; ++i)
        r.c_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
            (a.c_[static_cast<std::size_t>(i)] + b.c_[static_cast<std::size_t>(i)]) % a.f_->p);
    return r;
}

FqElem operator-(const FqElem& a, const FqElem& b) {
    a.check_same(b);
    FqElem r = a;
    for (int i = 0; i < a.f_->deg; ++i)
        r.c_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
            (a.c_[static_cast<std::size_t>(i)] - b.c_[static_cast<std::size_t>(i)] + a.f_->p) %
            a.f_->p);
    return r;
}

FqElem FqElem::operator-() const {
    FqElem r = *this;
    for (int i = 0; i < f_->deg; ++i)
        r.c_[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>((f_->p - c_[static_cast<std::size_t>(i)]) % f_->p);
    return r;
}

FqElem operator*(const FqElem& a, const FqElem& b) {
    a.check_same(b);
    const int p = a.f_->p;
    const int deg = a.f_->deg;
    int buf[16] = {0};
    for (int i = 0; i < deg; ++i) {
        if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < deg; ++j)
            buf[i + j] = (buf[i + j] +
                          a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)]) %
                         p;
    }
    // reduce modulo the monic modulus, top degree down
    for (int i = 2 * deg - 2; i >= deg; --i) {
        const int c = buf[i];
        if (c == 0) continue;
        buf[i] = 0;
        for (int j = 0; j < deg; ++j)
            buf[i - deg + j] = (buf[i - deg + j] + (p - c % p) * a.f_->modulus[static_cast<std::size_t>(j)]) % p;
    }
    FqElem r(*a.f_, 0);
    for (int i = 0; i < deg; ++i) r.c_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(buf[i]);
    return r;
}

FqElem FqElem::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FqElem base = *this;
    FqElem acc = FqElem::one(*f_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FqElem FqElem::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    return pow(f_->q - 2);
}

FqElem FqElem::frob(int e) const {
    const int d = f_->deg;
    int em = e % d;
    if (em < 0) em += d;
    if (em == 0) return *this;
    long long pe = 1;
    for (int i = 0; i < em; ++i) pe *= f_->p;
    return pow(pe);
}

bool operator==(const FqElem& a, const FqElem& b) {
    a.check_same(b);
    for (int i = 0; i < a.f_->deg; ++i)
        if (a.c_[static_cast<std::size_t>(i)] != b.c_[static_cast<std::size_t>(i)]) return false;
    return true;
}

std::string FqElem::str() const {
    std::string out;
    for (int i = f_->deg - 1; i >= 0; --i) {
        const int c = c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        std::string term;
        if (i == 0) {
            term = std::to_string(c);
        } else {
            term = (i == 1) ? "g" : "g^" + std::to_string(i);
            if (c != 1) term = std::to_string(c) + "*" + term;
        }
        if (!out.empty()) out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

SubfieldMap::SubfieldMap(int p, int a, int r)
    : small_(&FqField::get(p, a)), big_(&FqField::get(p, a * r)) {
    const int n = a * r;
    // Matrix of Frobenius^a on the big field as an F_p-vector space.
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n), 0));
    const FqElem g = FqElem::gen(*big_);
    for (int j = 0; j < n; ++j) {
        const FqElem img = g.pow(j).frob(a);
        const long long idx = img.index();
        long long t = idx;
        for (int i = 0; i < n; ++i) {
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(t % p);
            t /= p;
        }
    }
    for (int i = 0; i < n; ++i)
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] =
            mod_p(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] - 1, p);
    // Kernel of (Frob^a - 1); its span is the subfield, of F_p-dimension a.
    int row = 0;
    std::vector<int> where(static_cast<std::size_t>(n), -1);
    for (int col = 0; col < n && row < n; ++col) {
        int sel = -1;
        for (int i = row; i < n; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[static_cast<std::size_t>(sel)], m[static_cast<std::size_t>(row)]);
        // normalize and eliminate
        long long inv = 1;
        {
            // inverse mod p by Fermat
            long long b = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)], e = p - 2, acc = 1;
            while (e) {
                if (e & 1) acc = acc * b % p;
                b = b * b % p;
                e >>= 1;
            }
            inv = acc;
        }
        for (int c2 = 0; c2 < n; ++c2)
            m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)] =
                static_cast<int>(m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)] * inv % p);
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            const int f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int c2 = 0; c2 < n; ++c2)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c2)] =
                    mod_p(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c2)] -
                              f * m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c2)],
                          p);
        }
        where[static_cast<std::size_t>(col)] = row;
        ++row;
    }
    std::vector<FqElem> kernel_basis;
    for (int col = 0; col < n; ++col) {
        if (where[static_cast<std::size_t>(col)] != -1) continue;
        long long idx = 0;
        std::vector<int> vec(static_cast<std::size_t>(n), 0);
        vec[static_cast<std::size_t>(col)] = 1;
        for (int c2 = 0; c2 < n; ++c2) {
            if (where[static_cast<std::size_t>(c2)] == -1) continue;
            vec[static_cast<std::size_t>(c2)] = mod_p(
                -m[static_cast<std::size_t>(where[static_cast<std::size_t>(c2)])][static_cast<std::size_t>(col)], p);
        }
        long long mult = 1;
        for (int i = 0; i < n; ++i) {
            idx += vec[static_cast<std::size_t>(i)] * mult;
            mult *= p;
        }
        kernel_basis.push_back(FqElem::from_index(*big_, idx));
    }
    if (static_cast<int>(kernel_basis.size()) != a)
        throw InternalInconsistency("subfield of F_{p^ar} has wrong dimension");
    // Enumerate the p^a subfield elements; find the smallest root of the
    // small modulus among them.
    std::vector<FqElem> subfield;
    const long long count = small_->q;
    for (long long mask = 0; mask < count; ++mask) {
        FqElem s = FqElem::zero(*big_);
        long long t = mask;
        for (int i = 0; i < a; ++i) {
            const int digit = static_cast<int>(t % p);
            t /= p;
            if (digit != 0) s = s + kernel_basis[static_cast<std::size_t>(i)] * FqElem(*big_, digit);
        }
        subfield.push_back(s);
    }
    FqElem root = FqElem::zero(*big_);
    bool found = false;
    long long best = -1;
    for (const FqElem& y : subfield) {
        FqElem acc = FqElem::zero(*big_);
        for (int i = a; i >= 0; --i)
            acc = acc * y + FqElem(*big_, small_->modulus[static_cast<std::size_t>(i)]);
        if (acc.is_zero() && (!found || y.index() < best)) {
            root = y;
            best = y.index();
            found = true;
        }
    }
    if (!found) throw InternalInconsistency("small modulus has no root in the big field");
    embed_table_.reserve(static_cast<std::size_t>(count));
    for (long long idx = 0; idx < count; ++idx) {
        FqElem acc = FqElem::zero(*big_);
        long long t = idx;
        std::vector<int> digits(static_cast<std::size_t>(a));
        for (int i = 0; i < a; ++i) {
            digits[static_cast<std::size_t>(i)] = static_cast<int>(t % p);
            t /= p;
        }
        for (int i = a - 1; i >= 0; --i)
            acc = acc * root + FqElem(*big_, digits[static_cast<std::size_t>(i)]);
        embed_table_.push_back(acc);
        restrict_map_insert(acc.index(), idx);
    }
}

void SubfieldMap::restrict_map_insert(long long big_idx, long long small_idx) {
    restrict_table_.push_back(big_idx);
    restrict_table_.push_back(small_idx);
}

FqElem SubfieldMap::embed(const FqElem& x) const {
    return embed_table_[static_cast<std::size_t>(x.index())];
}

bool SubfieldMap::in_image(const FqElem& x) const {
    const long long idx = x.index();
    for (std::size_t i = 0; i < restrict_table_.size(); i += 2)
        if (restrict_table_[i] == idx) return true;
    return false;
}

FqElem SubfieldMap::restrict(const FqElem& x) const {
    const long long idx = x.index();
    for (std::size_t i = 0; i < restrict_table_.size(); i += 2)
        if (restrict_table_[i] == idx)
            return FqElem::from_index(*small_, restrict_table_[i + 1]);
    throw InternalInconsistency("element is not sigma-fixed; cannot restrict to the base field");
}

} // namespace sfl
