#pragma once

#include <stdexcept>
#include <vector>

#include "subdiv/rational.hpp"

namespace subdiv {

/// Dense square matrix of exact rationals, 1-based indexing.
class SmallMatrix {
public:
    explicit SmallMatrix(int size)
        : size_(size), entries_(static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
        if (size < 1) throw std::invalid_argument("SmallMatrix: size must be >= 1");
    }

    int size() const { return size_; }

    Rational& at(int i, int j) { return entries_[index(i, j)]; }
    const Rational& at(int i, int j) const { return entries_[index(i, j)]; }

    friend bool operator==(const SmallMatrix& a, const SmallMatrix& b) {
        return a.size_ == b.size_ && a.entries_ == b.entries_;
    }

private:
    std::size_t index(int i, int j) const {
        if (i < 1 || i > size_ || j < 1 || j > size_)
            throw std::out_of_range("SmallMatrix: index out of range");
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(size_) +
               static_cast<std::size_t>(j - 1);
    }

    int size_;
    std::vector<Rational> entries_;
};

/// Max over rows of the sum of absolute entry values. Exact.
Rational infinity_norm(const SmallMatrix& m);

/// Largest eigenvalue modulus, to absolute accuracy tol.
double spectral_radius(const SmallMatrix& m, double tol = 1e-12);

/// Largest singular value (spectral 2-norm): sqrt of the spectral radius of
/// M^T M, the latter formed exactly.
double two_norm(const SmallMatrix& m, double tol = 1e-12);

}  // namespace subdiv
