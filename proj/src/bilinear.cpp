#include "glinv/bilinear.hpp"
#include "glinv/diagram.hpp"

#include <cassert>
#include <random>

namespace glinv {

SymIntMatrix congruence(const SymIntMatrix& m, const SquareIntMatrix& p) {
    const int n = m.dim();
    if (p.dim() != n) throw std::invalid_argument("congruence: dimension mismatch");
    // tmp = M P
    std::vector<std::vector<Int>> tmp(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int k = 0; k < n; ++k) s += m.at(i, k) * p.at(k, j);
            tmp[i][j] = s;
        }
    SymIntMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int k = 0; k < n; ++k) s += p.at(k, i) * tmp[k][j];
            out.at(i, j) = s;
        }
    out.check_symmetric();
    return out;
}

SquareIntMatrix matmul(const SquareIntMatrix& a, const SquareIntMatrix& b) {
    const int n = a.dim();
    if (b.dim() != n) throw std::invalid_argument("matmul: dimension mismatch");
    SquareIntMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
            c.at(i, j) = s;
        }
    return c;
}

namespace {

// Symmetric congruence diagonalization over Q. Returns the diagonal.
std::vector<Rat> diagonalize(const SymIntMatrix& m) {
    const int n = m.dim();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));

    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][i] != 0) { piv = i; break; }
            if (piv >= 0) {
                // symmetric swap of rows/cols k and piv
                std::swap(a[k], a[piv]);
                for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][piv]);
            } else {
                // all remaining diagonal entries are 0; pick a_ij != 0 and
                // do x_i -> x_i + x_j, which puts 2*a_ij on the diagonal
                int pi = -1, pj = -1;
                for (int i = k; i < n && pi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (a[i][j] != 0) { pi = i; pj = j; break; }
                if (pi < 0) break;  // remaining block is zero
                for (int t = 0; t < n; ++t) a[pi][t] += a[pj][t];
                for (int t = 0; t < n; ++t) a[t][pi] += a[t][pj];
                if (pi != k) {
                    std::swap(a[k], a[pi]);
                    for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][pi]);
                }
            }
        }
        if (a[k][k] == 0) continue;
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            for (int j = k; j < n; ++j) a[j][i] -= f * a[j][k];
        }
    }
    std::vector<Rat> d(n);
    for (int i = 0; i < n; ++i) d[i] = a[i][i];
    return d;
}

}  // namespace

int signature(const SymIntMatrix& m) {
    int sig = 0;
    for (const Rat& d : diagonalize(m)) {
        if (d > 0) ++sig;
        else if (d < 0) --sig;
    }
    return sig;
}

int nullity(const SymIntMatrix& m) {
    int z = 0;
    for (const Rat& d : diagonalize(m))
        if (d == 0) ++z;
    return z;
}

Int determinant(const SymIntMatrix& m) {
    const int n = m.dim();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Int det_invariant(const SymIntMatrix& m) {
    Int d = determinant(m);
    return d < 0 ? Int(-d) : d;
}

bool is_perfect_square(const Int& d) {
    if (d < 0) throw std::invalid_argument("is_perfect_square: negative input");
    Int r = boost::multiprecision::sqrt(d);
    return r * r == d;
}

bool isotropy_bound_check(const SymIntMatrix& m, int u_dim) {
    if (u_dim < 0 || u_dim > m.dim())
        throw std::invalid_argument("isotropy_bound_check: u_dim out of range");
    int sig = signature(m);
    return 2 * u_dim <= m.dim() - (sig < 0 ? -sig : sig) + nullity(m);
}

SquareIntMatrix random_unimodular(int n, std::uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("random_unimodular: n must be positive");
    std::mt19937_64 rng(seed);
    SquareIntMatrix p = SquareIntMatrix::identity(n);
    if (n == 1) {
        p.at(0, 0) = (rng() & 1) ? 1 : -1;
        return p;
    }
    std::uniform_int_distribution<int> row(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    const Int bound = 64;
    int ops = 3 * n;
    while (ops > 0) {
        int i = row(rng), j = row(rng);
        if (i == j) continue;
        int c = coef(rng);
        bool ok = true;
        for (int k = 0; k < n; ++k)
            if (abs(p.at(i, k) + c * p.at(j, k)) > bound) { ok = false; break; }
        if (!ok) continue;
        for (int k = 0; k < n; ++k) p.at(i, k) += c * p.at(j, k);
        --ops;
    }
    if (rng() & 1)
        for (int k = 0; k < n; ++k) p.at(0, k) = -p.at(0, k);
    return p;
}

SymIntMatrix goeritz_matrix_full(const TaitStructure& t) {
    const int nw = static_cast<int>(t.white_faces.size());
    SymIntMatrix g(nw);
    for (size_t c = 0; c < t.eta.size(); ++c) {
        int i = t.white_index_pair[c].first;
        int j = t.white_index_pair[c].second;
        if (i == j) continue;  // self-incident crossings drop out
        g.at(i, j) -= t.eta[c];
        g.at(j, i) -= t.eta[c];
    }
    for (int i = 0; i < nw; ++i) {
        Int s = 0;
        for (int k = 0; k < nw; ++k)
            if (k != i) s += g.at(i, k);
        g.at(i, i) = -s;
    }
    assert(determinant(g) == 0);
    return g;
}

SymIntMatrix goeritz_matrix(const TaitStructure& t, int deleted) {
    SymIntMatrix full = goeritz_matrix_full(t);
    const int nw = full.dim();
    if (nw == 0) throw std::logic_error("goeritz_matrix: no white faces");
    if (deleted < 0 || deleted >= nw)
        throw std::invalid_argument("goeritz_matrix: deletion index out of range");
    SymIntMatrix g(nw - 1);
    for (int i = 0, gi = 0; i < nw; ++i) {
        if (i == deleted) continue;
        for (int j = 0, gj = 0; j < nw; ++j) {
            if (j == deleted) continue;
            g.at(gi, gj) = full.at(i, j);
            ++gj;
        }
        ++gi;
    }
    return g;
}

}  // namespace glinv
