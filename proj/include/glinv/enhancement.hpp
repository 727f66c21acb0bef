#pragma once

#include "glinv/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace glinv {

struct GaussianInt {
    Int re = 0;
    Int im = 0;

    GaussianInt() = default;
    GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }
    bool is_zero() const { return re == 0 && im == 0; }
    Int norm() const { return re * re + im * im; }
    std::string str() const;
};

/// Z/8 value or Infinity (improper form).
struct BrownValue {
    static BrownValue infinity() { return BrownValue{}; }
    static BrownValue of(int v) {
        BrownValue b;
        b.value_ = ((v % 8) + 8) % 8;
        return b;
    }

    bool is_infinity() const { return value_ < 0; }
    int value() const;

    /// Mod-8 arithmetic with infinity absorbing.
    BrownValue operator+(const BrownValue& o) const;
    BrownValue operator-() const;
    BrownValue operator-(const BrownValue& o) const { return *this + (-o); }
    bool operator==(const BrownValue& o) const { return value_ == o.value_; }
    std::string str() const;

private:
    int value_ = -1;
};

/// Z/2 inner-product space with a Z/4 quadratic enhancement, stored as the
/// special matrix representative: diagonal weights mod 4, off-diagonal gram
/// mod 2. Basis vectors are bitmasks, so dim <= 64.
struct EnhancedSpace {
    int dim = 0;
    std::vector<std::uint64_t> gram;  // row bitmasks; bit i of row i == weight mod 2
    std::vector<int> weights;         // phi(e_i) in Z/4

    bool is_even() const {
        for (int w : weights)
            if (w % 2 != 0) return false;
        return true;
    }
};

/// Simple Z/4-weighted graph (no loops, no multi-edges).
struct WeightedGraph {
    std::vector<int> weights;                   // Z/4 per vertex
    std::vector<std::pair<int, int>> edges;
};

constexpr int kDefaultEnumerationCap = 24;

/// Reduce a symmetric integer matrix: diagonal mod 4, off-diagonal mod 2.
EnhancedSpace enhance(const SymIntMatrix& m);

EnhancedSpace from_graph(const WeightedGraph& g);

enum class Indecomposable { Pplus, Pminus, T0, T4 };
EnhancedSpace indecomposable(Indecomposable kind);

/// phi(v) for a vector given as a bitmask.
int evaluate_phi(const EnhancedSpace& e, std::uint64_t v);

/// Basis (bitmasks) of the kernel of the full gram matrix over Z/2.
std::vector<std::uint64_t> radical(const EnhancedSpace& e);

/// phi vanishes on the radical <=> the Monsky sum is nonzero.
bool is_proper(const EnhancedSpace& e);

/// sum over v of i^phi(v); throws if dim exceeds the cap.
GaussianInt monsky_sum(const EnhancedSpace& e, int cap = kDefaultEnumerationCap);

/// Brown invariant: lambda = (sqrt 2)^(dimV+dimR) * e^(beta*pi*i/4), or
/// Infinity when lambda = 0. Above the cap the space is reduced modulo its
/// radical and split into orthogonal summands first.
BrownValue brown(const EnhancedSpace& e, int cap = kDefaultEnumerationCap);

EnhancedSpace orthogonal_sum(const EnhancedSpace& a, const EnhancedSpace& b);

/// For even proper forms beta is 0 or 4 and equals 4*Arf(q).
/// Throws on non-even input; throws "improper even form" when beta = inf.
int arf_of_even(const EnhancedSpace& e, int cap = kDefaultEnumerationCap);

/// Beta of a Gaussian integer known to lie on one of the eight rays
/// k*pi/4; throws on anything off-ray (internal consistency failure).
int brown_from_lambda(const GaussianInt& lambda);

}  // namespace glinv
