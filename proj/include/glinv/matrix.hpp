#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace glinv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Symmetric integer matrix. Dimension 0 (the empty form) is allowed.
class SymIntMatrix {
public:
    SymIntMatrix() : n_(0) {}

    explicit SymIntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {
        if (n < 0) throw std::invalid_argument("SymIntMatrix: negative dimension");
    }

    static SymIntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
        SymIntMatrix m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.n_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.n_)
                throw std::invalid_argument("SymIntMatrix: ragged rows");
            for (int j = 0; j < m.n_; ++j) m.at(i, j) = rows[i][j];
        }
        m.check_symmetric();
        return m;
    }

    static SymIntMatrix identity(int n) {
        SymIntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static SymIntMatrix diagonal(const std::vector<Int>& d) {
        SymIntMatrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n_; ++i) m.at(i, i) = d[i];
        return m;
    }

    int dim() const { return n_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    void check_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i))
                    throw std::invalid_argument("SymIntMatrix: not symmetric at (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
    }

    SymIntMatrix negated() const {
        SymIntMatrix m(n_);
        for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
        return m;
    }

    bool operator==(const SymIntMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

private:
    int n_;
    std::vector<Int> a_;
};

/// General square integer matrix, used for congruence transforms.
class SquareIntMatrix {
public:
    SquareIntMatrix() : n_(0) {}
    explicit SquareIntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    static SquareIntMatrix identity(int n) {
        SquareIntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int dim() const { return n_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

private:
    int n_;
    std::vector<Int> a_;
};

/// P^T M P, exact.
SymIntMatrix congruence(const SymIntMatrix& m, const SquareIntMatrix& p);

SquareIntMatrix matmul(const SquareIntMatrix& a, const SquareIntMatrix& b);

}  // namespace glinv
