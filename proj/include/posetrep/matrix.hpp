#pragma once

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "posetrep/rational.hpp"

namespace posetrep {

// Dense matrix over the rationals. Row-major storage.
class QMat {
  public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    QMat(std::initializer_list<std::initializer_list<long>> init);

    static QMat identity(int n);
    static QMat zero(int rows, int cols) { return QMat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const QMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const QMat& o) const { return !(*this == o); }

    QMat operator*(const QMat& o) const;
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator*(const Rat& c) const;

    QMat transpose() const;
    bool is_zero() const;

    // Horizontal / vertical stacking.
    static QMat hstack(const QMat& a, const QMat& b);
    static QMat vstack(const QMat& a, const QMat& b);
    QMat block(int r0, int c0, int nrows, int ncols) const;

    // In-place row reduction to reduced row echelon form; returns pivot columns.
    std::vector<int> rref();
    int rank() const;

    // Basis of the right null space as columns of the returned matrix.
    QMat nullspace() const;

    // Solves this * x = b for one x; nullopt when inconsistent.
    std::optional<QMat> solve(const QMat& b) const;

    QMat inverse() const;  // asserts squareness and invertibility

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Rat> a_;
};

// Signature (n_positive, n_negative, n_zero) of a symmetric rational matrix,
// computed exactly by congruence transformations.
struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
Inertia inertia(QMat g);

// Integer vectors appear throughout as dimension vectors.
using IVec = std::vector<long>;

QMat col_vector(const IVec& v);
QMat col_vector(const std::vector<Rat>& v);

}  // namespace posetrep
