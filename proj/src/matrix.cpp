#include "posetrep/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace posetrep {

std::optional<Rat> parse_rat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class num(s);
            return Rat(num);
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        Rat r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::string to_string(const Rat& r) { return r.get_str(); }

QMat::QMat(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    a_.resize(static_cast<size_t>(rows_) * cols_);
    int i = 0;
    for (const auto& row : init) {
        assert(static_cast<int>(row.size()) == cols_);
        int j = 0;
        for (long v : row) (*this)(i, j++) = Rat(v);
        ++i;
    }
}

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    assert(cols_ == o.rows_);
    QMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = (*this)(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o(k, j) != 0) r(i, j) += x * o(k, j);
            }
        }
    return r;
}

QMat QMat::operator+(const QMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    QMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    QMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

QMat QMat::operator*(const Rat& c) const {
    QMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

QMat QMat::transpose() const {
    QMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

bool QMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

QMat QMat::hstack(const QMat& a, const QMat& b) {
    assert(a.rows_ == b.rows_);
    QMat r(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
        for (int j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
    }
    return r;
}

QMat QMat::vstack(const QMat& a, const QMat& b) {
    assert(a.cols_ == b.cols_);
    QMat r(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) r(a.rows_ + i, j) = b(i, j);
    return r;
}

QMat QMat::block(int r0, int c0, int nrows, int ncols) const {
    QMat r(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
}

std::vector<int> QMat::rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int piv = -1;
        for (int i = row; i < rows_; ++i)
            if ((*this)(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(row, j));
        Rat inv = 1 / (*this)(row, col);
        for (int j = col; j < cols_; ++j) (*this)(row, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row) continue;
            const Rat f = (*this)(i, col);
            if (f == 0) continue;
            for (int j = col; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int QMat::rank() const {
    QMat copy = *this;
    return static_cast<int>(copy.rref().size());
}

QMat QMat::nullspace() const {
    QMat copy = *this;
    std::vector<int> pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    int nfree = cols_ - static_cast<int>(pivots.size());
    QMat basis(cols_, nfree);
    int k = 0;
    for (int col = 0; col < cols_; ++col) {
        if (is_pivot[col]) continue;
        basis(col, k) = 1;
        for (size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -copy(static_cast<int>(r), col);
        ++k;
    }
    return basis;
}

std::optional<QMat> QMat::solve(const QMat& b) const {
    assert(rows_ == b.rows());
    QMat aug = hstack(*this, b);
    std::vector<int> pivots = aug.rref();
    for (int p : pivots)
        if (p >= cols_) return std::nullopt;
    QMat x(cols_, b.cols());
    for (size_t r = 0; r < pivots.size(); ++r)
        for (int j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(static_cast<int>(r), cols_ + j);
    return x;
}

QMat QMat::inverse() const {
    assert(rows_ == cols_);
    QMat aug = hstack(*this, identity(rows_));
    std::vector<int> pivots = aug.rref();
    assert(static_cast<int>(pivots.size()) == rows_ && "matrix not invertible");
    return aug.block(0, rows_, rows_, rows_);
}

std::string QMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

// Symmetric Gaussian elimination by congruence. A zero diagonal with a nonzero
// off-diagonal entry is handled by the row/column addition trick, which keeps
// the transformation a congruence and the signature unchanged.
Inertia inertia(QMat g) {
    assert(g.rows() == g.cols());
    const int n = g.rows();
    Inertia sig;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int p = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && g(i, i) != 0) {
                p = i;
                break;
            }
        if (p < 0) {
            // All remaining diagonal entries vanish; find an off-diagonal entry.
            int a = -1, b = -1;
            for (int i = 0; i < n && a < 0; ++i) {
                if (done[i]) continue;
                for (int j = i + 1; j < n; ++j) {
                    if (done[j]) continue;
                    if (g(i, j) != 0) {
                        a = i;
                        b = j;
                        break;
                    }
                }
            }
            if (a < 0) {
                for (int i = 0; i < n; ++i)
                    if (!done[i]) ++sig.zero;
                return sig;
            }
            // Congruence: row/col a += row/col b, producing 2*g(a,b) on the diagonal.
            for (int j = 0; j < n; ++j) g(a, j) += g(b, j);
            for (int i = 0; i < n; ++i) g(i, a) += g(i, b);
            p = a;
        }
        const Rat d = g(p, p);
        if (d > 0)
            ++sig.positive;
        else
            ++sig.negative;
        // Row operations alone carry the congruence here: the remaining block
        // g(i,j) - g(i,p)g(p,j)/d is the Schur complement and stays symmetric.
        for (int i = 0; i < n; ++i) {
            if (i == p || done[i]) continue;
            if (g(i, p) == 0) continue;
            const Rat f = g(i, p) / d;
            for (int j = 0; j < n; ++j) g(i, j) -= f * g(p, j);
        }
        for (int j = 0; j < n; ++j) {
            g(p, j) = 0;
            g(j, p) = 0;
        }
        done[p] = true;
    }
    return sig;
}

QMat col_vector(const IVec& v) {
    QMat m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = Rat(static_cast<long>(v[i]));
    return m;
}

QMat col_vector(const std::vector<Rat>& v) {
    QMat m(static_cast<int>(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
    return m;
}

}  // namespace posetrep
