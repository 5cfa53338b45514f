#ifndef CHANALLOC_MATRIX_HPP_
#define CHANALLOC_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace chanalloc {

/// Dense row-major matrix with value semantics. Small instances only; no
/// linear-algebra ambitions beyond element access.
template <typename T>
class Matrix {
public:
    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows)
        , cols_(cols)
        , data_(rows * cols, fill)
    {
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows)
    {
        Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != m.cols_)
                throw std::invalid_argument("Matrix::from_rows: ragged rows");
            std::size_t c = 0;
            for (const T& v : row)
                m(r, c++) = v;
            ++r;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Flat row-major element access; index in [0, rows*cols).
    T& operator[](std::size_t i) { return data_[i]; }
    const T& operator[](std::size_t i) const { return data_[i]; }

    const std::vector<T>& data() const { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Symmetric per-channel interference tensor: (user, user, channel) -> {0,1}.
/// Kept dense; instances stay small (tens of users, a handful of channels).
class ConflictTensor {
public:
    ConflictTensor() = default;

    ConflictTensor(std::size_t num_users, std::size_t num_channels)
        : users_(num_users)
        , channels_(num_channels)
        , data_(num_users * num_users * num_channels, 0)
    {
    }

    std::size_t num_users() const { return users_; }
    std::size_t num_channels() const { return channels_; }

    std::uint8_t& operator()(std::size_t n, std::size_t k, std::size_t m)
    {
        return data_[(n * users_ + k) * channels_ + m];
    }
    std::uint8_t operator()(std::size_t n, std::size_t k, std::size_t m) const
    {
        return data_[(n * users_ + k) * channels_ + m];
    }

    friend bool operator==(const ConflictTensor&, const ConflictTensor&) = default;

private:
    std::size_t users_ = 0;
    std::size_t channels_ = 0;
    std::vector<std::uint8_t> data_;
};

} // namespace chanalloc

#endif // CHANALLOC_MATRIX_HPP_
