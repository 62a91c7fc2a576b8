#pragma once

#include "cubalg/scalar.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace cubalg {

template <class S>
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : d_(n, ScalarTraits<S>::zero()) {}
    Vec(std::initializer_list<S> init) : d_(init) {}
    explicit Vec(std::vector<S> d) : d_(std::move(d)) {}

    static Vec unit(std::size_t n, std::size_t i) {
        Vec v(n);
        v[i] = ScalarTraits<S>::one();
        return v;
    }

    std::size_t size() const { return d_.size(); }
    S& operator[](std::size_t i) { return d_[i]; }
    const S& operator[](std::size_t i) const { return d_[i]; }
    const std::vector<S>& data() const { return d_; }

    Vec& operator+=(const Vec& o) {
        for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
        return *this;
    }
    Vec& operator*=(const S& s) {
        for (auto& x : d_) x *= s;
        return *this;
    }
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const S& s, Vec a) { return a *= s; }
    friend Vec operator*(Vec a, const S& s) { return a *= s; }
    friend Vec operator-(Vec a) {
        for (auto& x : a.d_) x = -x;
        return a;
    }
    friend bool operator==(const Vec& a, const Vec& b) { return a.d_ == b.d_; }

    bool is_zero() const {
        return std::all_of(d_.begin(), d_.end(), [](const S& x) { return ScalarTraits<S>::is_zero(x); });
    }

private:
    std::vector<S> d_;
};

template <class S>
S dot(const Vec<S>& a, const Vec<S>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    S acc = ScalarTraits<S>::zero();
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

template <class S>
S max_abs(const Vec<S>& a) {
    S m = ScalarTraits<S>::zero();
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, ScalarTraits<S>::abs(a[i]), [](const S& x, const S& y) { return x < y; });
    return m;
}

inline double norm2(const Vec<double>& a) { return std::sqrt(dot(a, a)); }

// Dense row-major matrix. Small sizes only; exact Gaussian elimination in
// rational mode, partial pivoting in float mode.
template <class S>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols, ScalarTraits<S>::zero()) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarTraits<S>::one();
        return m;
    }
    static Mat outer(const Vec<S>& a, const Vec<S>& b) {
        Mat m(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    S& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    Mat& operator+=(const Mat& o) {
        for (std::size_t i = 0; i < d_.size(); ++i) d_[i] += o.d_[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (std::size_t i = 0; i < d_.size(); ++i) d_[i] -= o.d_[i];
        return *this;
    }
    Mat& operator*=(const S& s) {
        for (auto& x : d_) x *= s;
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const S& s, Mat a) { return a *= s; }
    friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_; }

    Vec<S> apply(const Vec<S>& x) const {
        if (x.size() != c_) throw std::invalid_argument("Mat::apply: dimension mismatch");
        Vec<S> y(r_);
        for (std::size_t i = 0; i < r_; ++i) {
            S acc = ScalarTraits<S>::zero();
            for (std::size_t j = 0; j < c_; ++j) acc += (*this)(i, j) * x[j];
            y[i] = acc;
        }
        return y;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("Mat::mul: dimension mismatch");
        Mat m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const S& aik = a(i, k);
                if (ScalarTraits<S>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += aik * b(k, j);
            }
        return m;
    }

    Mat transposed() const {
        Mat m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    bool is_zero() const {
        return std::all_of(d_.begin(), d_.end(), [](const S& x) { return ScalarTraits<S>::is_zero(x); });
    }

    S max_abs() const {
        S m = ScalarTraits<S>::zero();
        for (const auto& x : d_) {
            S a = ScalarTraits<S>::abs(x);
            if (m < a) m = a;
        }
        return m;
    }

    // Solves A x = b by Gaussian elimination with largest-pivot selection.
    // Throws on a singular matrix; exact in rational mode.
    Vec<S> solve(const Vec<S>& b) const {
        if (r_ != c_ || b.size() != r_) throw std::invalid_argument("Mat::solve: shape mismatch");
        const std::size_t n = r_;
        Mat a = *this;
        Vec<S> rhs = b;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            S best = ScalarTraits<S>::abs(a(col, col));
            for (std::size_t i = col + 1; i < n; ++i) {
                S cand = ScalarTraits<S>::abs(a(i, col));
                if (best < cand) {
                    best = cand;
                    piv = i;
                }
            }
            if (ScalarTraits<S>::is_zero(a(piv, col))) throw std::domain_error("singular matrix");
            if (piv != col) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
                std::swap(rhs[piv], rhs[col]);
            }
            for (std::size_t i = col + 1; i < n; ++i) {
                if (ScalarTraits<S>::is_zero(a(i, col))) continue;
                S f = a(i, col) / a(col, col);
                for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
                rhs[i] -= f * rhs[col];
            }
        }
        Vec<S> x(n);
        for (std::size_t i = n; i-- > 0;) {
            S acc = rhs[i];
            for (std::size_t j = i + 1; j < n; ++j) acc -= a(i, j) * x[j];
            x[i] = acc / a(i, i);
        }
        return x;
    }

    // Determinants of leading principal minors, exact. Used for the
    // positive-definiteness check in rational mode.
    std::vector<S> leading_principal_minors() const {
        if (r_ != c_) throw std::invalid_argument("leading_principal_minors: square matrix required");
        std::vector<S> out;
        for (std::size_t k = 1; k <= r_; ++k) {
            Mat sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub(i, j) = (*this)(i, j);
            out.push_back(sub.determinant());
        }
        return out;
    }

    S determinant() const {
        if (r_ != c_) throw std::invalid_argument("determinant: square matrix required");
        Mat a = *this;
        const std::size_t n = r_;
        S det = ScalarTraits<S>::one();
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            S best = ScalarTraits<S>::abs(a(col, col));
            for (std::size_t i = col + 1; i < n; ++i) {
                S cand = ScalarTraits<S>::abs(a(i, col));
                if (best < cand) {
                    best = cand;
                    piv = i;
                }
            }
            if (ScalarTraits<S>::is_zero(a(piv, col))) return ScalarTraits<S>::zero();
            if (piv != col) {
                for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
                det = -det;
            }
            det *= a(col, col);
            for (std::size_t i = col + 1; i < n; ++i) {
                if (ScalarTraits<S>::is_zero(a(i, col))) continue;
                S f = a(i, col) / a(col, col);
                for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
            }
        }
        return det;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<S> d_;
};

inline Eigen::MatrixXd to_eigen(const Mat<double>& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
    return e;
}

inline Eigen::VectorXd to_eigen(const Vec<double>& v) {
    Eigen::VectorXd e(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) e(i) = v[i];
    return e;
}

inline Vec<double> from_eigen(const Eigen::VectorXd& e) {
    Vec<double> v(e.size());
    for (Eigen::Index i = 0; i < e.size(); ++i) v[i] = e(i);
    return v;
}

// Spectral norm (largest singular value).
inline double spectral_norm(const Mat<double>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

template <class S>
Vec<double> to_double_vec(const Vec<S>& v) {
    Vec<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = ScalarTraits<S>::to_double(v[i]);
    return out;
}

template <class S>
Vec<S> vec_from_double(const Vec<double>& v) {
    Vec<S> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = ScalarTraits<S>::from_rational(snap_to_rational(v[i]));
    return out;
}

}  // namespace cubalg
