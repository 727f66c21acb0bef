#include "glinv/enhancement.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace glinv {

std::string GaussianInt::str() const {
    std::ostringstream os;
    os << re;
    if (im >= 0) os << "+";
    os << im << "i";
    return os.str();
}

int BrownValue::value() const {
    if (is_infinity()) throw std::logic_error("BrownValue: value() on infinity");
    return value_;
}

BrownValue BrownValue::operator+(const BrownValue& o) const {
    if (is_infinity() || o.is_infinity()) return infinity();
    return of(value_ + o.value_);
}

BrownValue BrownValue::operator-() const {
    if (is_infinity()) return infinity();
    return of(-value_);
}

std::string BrownValue::str() const { return is_infinity() ? "infinity" : std::to_string(value_); }

namespace {

int mod4(const Int& x) { return static_cast<int>(((x % 4) + 4) % 4); }

void check_dim(int n) {
    if (n > 64) throw std::invalid_argument("EnhancedSpace: dimension > 64 not supported");
}

}  // namespace

EnhancedSpace enhance(const SymIntMatrix& m) {
    check_dim(m.dim());
    EnhancedSpace e;
    e.dim = m.dim();
    e.gram.assign(e.dim, 0);
    e.weights.resize(e.dim);
    for (int i = 0; i < e.dim; ++i) {
        e.weights[i] = mod4(m.at(i, i));
        for (int j = 0; j < e.dim; ++j)
            if (mod4(m.at(i, j)) % 2) e.gram[i] |= (1ULL << j);
    }
    return e;
}

EnhancedSpace from_graph(const WeightedGraph& g) {
    const int n = static_cast<int>(g.weights.size());
    check_dim(n);
    EnhancedSpace e;
    e.dim = n;
    e.gram.assign(n, 0);
    e.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        e.weights[i] = ((g.weights[i] % 4) + 4) % 4;
        if (e.weights[i] % 2) e.gram[i] |= (1ULL << i);
    }
    for (auto [a, b] : g.edges) {
        if (a == b) throw std::invalid_argument("WeightedGraph: loop edge");
        if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("WeightedGraph: bad vertex");
        if (e.gram[a] & (1ULL << b)) throw std::invalid_argument("WeightedGraph: multi-edge");
        e.gram[a] |= (1ULL << b);
        e.gram[b] |= (1ULL << a);
    }
    return e;
}

EnhancedSpace indecomposable(Indecomposable kind) {
    WeightedGraph g;
    switch (kind) {
        case Indecomposable::Pplus: g.weights = {1}; break;
        case Indecomposable::Pminus: g.weights = {3}; break;
        case Indecomposable::T0: g.weights = {0, 0}; g.edges = {{0, 1}}; break;
        case Indecomposable::T4: g.weights = {2, 2}; g.edges = {{0, 1}}; break;
    }
    return from_graph(g);
}

int evaluate_phi(const EnhancedSpace& e, std::uint64_t v) {
    int phi = 0;
    for (int i = 0; i < e.dim; ++i) {
        if (!(v >> i & 1)) continue;
        phi += e.weights[i];
        // 2 * (e_i . (v restricted to j > i))
        std::uint64_t rest = v & ~((2ULL << i) - 1);
        phi += 2 * (std::popcount(e.gram[i] & rest) & 1);
    }
    return ((phi % 4) + 4) % 4;
}

std::vector<std::uint64_t> radical(const EnhancedSpace& e) {
    // kernel of the gram matrix over Z/2 (diagonal included)
    const int n = e.dim;
    std::vector<std::uint64_t> rows = e.gram;
    std::vector<std::uint64_t> id(n);
    for (int i = 0; i < n; ++i) id[i] = 1ULL << i;
    // column-eliminate: track combinations; kernel vectors are combinations
    // of columns, but gram is symmetric so rows and columns agree
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (rows[i] >> c & 1) { p = i; break; }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        std::swap(id[r], id[p]);
        for (int i = 0; i < n; ++i)
            if (i != r && (rows[i] >> c & 1)) {
                rows[i] ^= rows[r];
                id[i] ^= id[r];
            }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::uint64_t> basis;
    for (int i = r; i < n; ++i) basis.push_back(id[i]);
    return basis;
}

bool is_proper(const EnhancedSpace& e) {
    for (std::uint64_t v : radical(e))
        if (evaluate_phi(e, v) != 0) return false;
    return true;
}

GaussianInt monsky_sum(const EnhancedSpace& e, int cap) {
    if (e.dim > cap)
        throw std::length_error("monsky_sum: dimension exceeds enumeration cap");
    // Gray-code walk: flipping bit i changes phi by w_i + 2*(v . g_i)
    Int count[4] = {0, 0, 0, 0};
    std::uint64_t v = 0;
    int phi = 0;
    count[0] = 1;
    const std::uint64_t total = 1ULL << e.dim;
    for (std::uint64_t k = 1; k < total; ++k) {
        int i = std::countr_zero(k);
        phi = (phi + e.weights[i] + 2 * (std::popcount(v & e.gram[i]) & 1)) % 4;
        v ^= 1ULL << i;
        ++count[phi];
    }
    return {count[0] - count[2], count[1] - count[3]};
}

int brown_from_lambda(const GaussianInt& l) {
    if (l.is_zero()) throw std::invalid_argument("brown_from_lambda: zero");
    Int are = abs(l.re), aim = abs(l.im);
    if (l.im == 0) return l.re > 0 ? 0 : 4;
    if (l.re == 0) return l.im > 0 ? 2 : 6;
    if (are != aim) throw std::logic_error("brown_from_lambda: value off the eight rays");
    if (l.re > 0) return l.im > 0 ? 1 : 7;
    return l.im > 0 ? 3 : 5;
}

namespace {

// Quotient by the radical (assumes proper): keep a complement basis.
EnhancedSpace quotient_by_radical(const EnhancedSpace& e) {
    // pivot rows of the gram matrix give a complement of the kernel
    std::vector<std::uint64_t> rows = e.gram;
    std::vector<std::uint64_t> comb(e.dim);
    for (int i = 0; i < e.dim; ++i) comb[i] = 1ULL << i;
    int r = 0;
    for (int c = 0; c < e.dim && r < e.dim; ++c) {
        int p = -1;
        for (int i = r; i < e.dim; ++i)
            if (rows[i] >> c & 1) { p = i; break; }
        if (p < 0) continue;
        std::swap(rows[r], rows[p]);
        std::swap(comb[r], comb[p]);
        for (int i = r + 1; i < e.dim; ++i)
            if (rows[i] >> c & 1) {
                rows[i] ^= rows[r];
                comb[i] ^= comb[r];
            }
        ++r;
    }
    std::vector<std::uint64_t> lift(comb.begin(), comb.begin() + r);
    EnhancedSpace q;
    q.dim = r;
    q.gram.assign(r, 0);
    q.weights.resize(r);
    for (int i = 0; i < r; ++i) {
        q.weights[i] = evaluate_phi(e, lift[i]);
        for (int j = 0; j < r; ++j) {
            // pairing of lifts: phi(u+v) - phi(u) - phi(v) = 2(u.v)
            int d = (evaluate_phi(e, lift[i] ^ lift[j]) - q.weights[i] - evaluate_phi(e, lift[j])) % 4;
            d = (d + 4) % 4;
            if (i != j && d != 0) q.gram[i] |= (1ULL << j);
        }
        if (q.weights[i] % 2) q.gram[i] |= (1ULL << i);
    }
    return q;
}

EnhancedSpace subspace(const EnhancedSpace& e, const std::vector<int>& verts) {
    EnhancedSpace s;
    s.dim = static_cast<int>(verts.size());
    s.gram.assign(s.dim, 0);
    s.weights.resize(s.dim);
    for (int i = 0; i < s.dim; ++i) {
        s.weights[i] = e.weights[verts[i]];
        for (int j = 0; j < s.dim; ++j)
            if (e.gram[verts[i]] >> verts[j] & 1) s.gram[i] |= (1ULL << j);
    }
    return s;
}

}  // namespace

BrownValue brown(const EnhancedSpace& e, int cap) {
    const int rad_dim = static_cast<int>(radical(e).size());
    if (e.dim <= cap) {
        GaussianInt l = monsky_sum(e, cap);
        if (l.is_zero()) return BrownValue::infinity();
        Int expect = Int(1) << (e.dim + rad_dim);
        if (l.norm() != expect)
            throw std::logic_error("brown: |lambda|^2 != 2^(dimV+dimR)");
        return BrownValue::of(brown_from_lambda(l));
    }
    if (!is_proper(e)) return BrownValue::infinity();
    EnhancedSpace q = (rad_dim > 0) ? quotient_by_radical(e) : e;
    // split the graph representation into connected components
    std::vector<int> comp(q.dim, -1);
    int nc = 0;
    for (int s = 0; s < q.dim; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack = {s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < q.dim; ++u)
                if (u != v && (q.gram[v] >> u & 1) && comp[u] < 0) {
                    comp[u] = nc;
                    stack.push_back(u);
                }
        }
        ++nc;
    }
    GaussianInt l(1, 0);
    for (int c = 0; c < nc; ++c) {
        std::vector<int> verts;
        for (int v = 0; v < q.dim; ++v)
            if (comp[v] == c) verts.push_back(v);
        l = l * monsky_sum(subspace(q, verts), cap);  // throws if a component exceeds the cap
    }
    if (l.is_zero()) return BrownValue::infinity();
    return BrownValue::of(brown_from_lambda(l));
}

EnhancedSpace orthogonal_sum(const EnhancedSpace& a, const EnhancedSpace& b) {
    check_dim(a.dim + b.dim);
    EnhancedSpace s;
    s.dim = a.dim + b.dim;
    s.gram = a.gram;
    s.weights = a.weights;
    for (int i = 0; i < b.dim; ++i) {
        s.gram.push_back(b.gram[i] << a.dim);
        s.weights.push_back(b.weights[i]);
    }
    return s;
}

int arf_of_even(const EnhancedSpace& e, int cap) {
    if (!e.is_even()) throw std::invalid_argument("arf_of_even: form is not even");
    BrownValue b = brown(e, cap);
    if (b.is_infinity()) throw std::domain_error("arf_of_even: improper even form");
    int v = b.value();
    if (v != 0 && v != 4) throw std::logic_error("arf_of_even: beta of an even form not in {0,4}");
    return v / 4;
}

}  // namespace glinv
