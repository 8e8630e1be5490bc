#ifndef GWALK_MATRIX_HPP
#define GWALK_MATRIX_HPP

#include "gwalk/exact.hpp"
#include "gwalk/errors.hpp"

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

namespace gwalk {

/// Dense square matrix indexed by arcs. Row index is the receiving arc,
/// column index the source arc: entry (b, a) is the weight carried from
/// arc a to arc b.
template <typename T>
class DenseMatrix {
public:
    DenseMatrix() : dim_(0) {}
    explicit DenseMatrix(std::size_t dim) : dim_(dim), e_(dim * dim, T(0)) {}

    static DenseMatrix identity(std::size_t dim) {
        DenseMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i)
            m.at(i, i) = T(1);
        return m;
    }

    std::size_t dim() const { return dim_; }

    T& at(std::size_t row, std::size_t col) { return e_[row * dim_ + col]; }
    const T& at(std::size_t row, std::size_t col) const { return e_[row * dim_ + col]; }

    bool operator==(const DenseMatrix& other) const {
        return dim_ == other.dim_ && e_ == other.e_;
    }
    bool operator!=(const DenseMatrix& other) const { return !(*this == other); }

    DenseMatrix operator*(const DenseMatrix& other) const {
        require_same_dim(other);
        DenseMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t k = 0; k < dim_; ++k) {
                const T& left = at(i, k);
                if (left == T(0))
                    continue;
                for (std::size_t j = 0; j < dim_; ++j) {
                    const T& right = other.at(k, j);
                    if (right == T(0))
                        continue;
                    out.at(i, j) += left * right;
                }
            }
        }
        return out;
    }

    DenseMatrix operator+(const DenseMatrix& other) const {
        require_same_dim(other);
        DenseMatrix out(dim_);
        for (std::size_t i = 0; i < e_.size(); ++i)
            out.e_[i] = e_[i] + other.e_[i];
        return out;
    }

    DenseMatrix transposed() const {
        DenseMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                out.at(j, i) = at(i, j);
        return out;
    }

    DenseMatrix power(std::size_t exponent) const {
        DenseMatrix result = identity(dim_);
        for (std::size_t i = 0; i < exponent; ++i)
            result = result * *this;
        return result;
    }

    T trace() const {
        T tr(0);
        for (std::size_t i = 0; i < dim_; ++i)
            tr += at(i, i);
        return tr;
    }

    bool is_zero_one() const {
        for (const T& v : e_)
            if (v != T(0) && v != T(1))
                return false;
        return true;
    }

    /// Row-major CSV with exact entry strings.
    std::string to_csv() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                if (j)
                    out << ',';
                out << at(i, j);
            }
            out << '\n';
        }
        return out.str();
    }

private:
    void require_same_dim(const DenseMatrix& other) const {
        if (dim_ != other.dim_)
            throw std::invalid_argument("matrix dimension mismatch");
    }

    std::size_t dim_;
    std::vector<T> e_;
};

using IntMatrix = DenseMatrix<Int>;
using RatMatrix = DenseMatrix<Rational>;

} // namespace gwalk

#endif
