#include "esnlm/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace esnlm {

SparseMatrix::Builder::Builder(std::int64_t rows, std::int64_t cols)
    : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) {
        throw std::invalid_argument("SparseMatrix: dimensions must be positive");
    }
    row_ptr_.assign(static_cast<std::size_t>(rows) + 1, 0);
}

void SparseMatrix::Builder::append(std::int32_t row, std::int32_t col, float value) {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
        throw std::invalid_argument("SparseMatrix: entry index out of range");
    }
    if (row < last_row_ || (row == last_row_ && col <= last_col_)) {
        throw std::invalid_argument("SparseMatrix: builder requires strict row-major order");
    }
    if (!std::isfinite(value)) {
        throw std::invalid_argument("SparseMatrix: non-finite value");
    }
    col_idx_.push_back(col);
    values_.push_back(value);
    row_ptr_[static_cast<std::size_t>(row) + 1] += 1;
    last_row_ = row;
    last_col_ = (row == last_row_) ? col : col;
}

SparseMatrix SparseMatrix::Builder::finish() {
    for (std::size_t i = 1; i < row_ptr_.size(); ++i) {
        row_ptr_[i] += row_ptr_[i - 1];
    }
    SparseMatrix m;
    m.rows_ = rows_;
    m.cols_ = cols_;
    m.row_ptr_ = std::move(row_ptr_);
    m.col_idx_ = std::move(col_idx_);
    m.values_ = std::move(values_);
    return m;
}

SparseMatrix SparseMatrix::from_triplets(std::int64_t rows, std::int64_t cols,
                                         std::vector<Triplet> entries) {
    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    Builder b(rows, cols);
    for (const Triplet& t : entries) {
        b.append(t.row, t.col, t.value); // duplicate (row, col) trips the order check
    }
    return b.finish();
}

SparseMatrix SparseMatrix::from_csr(std::int64_t rows, std::int64_t cols,
                                    std::vector<std::int64_t> row_ptr,
                                    std::vector<std::int32_t> col_idx,
                                    std::vector<float> values) {
    if (rows <= 0 || cols <= 0) {
        throw std::invalid_argument("SparseMatrix: dimensions must be positive");
    }
    if (row_ptr.size() != static_cast<std::size_t>(rows) + 1 || row_ptr.front() != 0 ||
        row_ptr.back() != static_cast<std::int64_t>(values.size()) ||
        col_idx.size() != values.size()) {
        throw std::invalid_argument("SparseMatrix: inconsistent CSR arrays");
    }
    for (std::size_t r = 0; r < static_cast<std::size_t>(rows); ++r) {
        if (row_ptr[r] > row_ptr[r + 1]) {
            throw std::invalid_argument("SparseMatrix: row_ptr not monotone");
        }
        for (std::int64_t k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
            if (col_idx[static_cast<std::size_t>(k)] < 0 ||
                col_idx[static_cast<std::size_t>(k)] >= cols) {
                throw std::invalid_argument("SparseMatrix: column index out of range");
            }
            if (k > row_ptr[r] && col_idx[static_cast<std::size_t>(k)] <=
                                      col_idx[static_cast<std::size_t>(k - 1)]) {
                throw std::invalid_argument("SparseMatrix: columns not strictly increasing");
            }
            if (!std::isfinite(values[static_cast<std::size_t>(k)])) {
                throw std::invalid_argument("SparseMatrix: non-finite value");
            }
        }
    }
    SparseMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.row_ptr_ = std::move(row_ptr);
    m.col_idx_ = std::move(col_idx);
    m.values_ = std::move(values);
    return m;
}

void SparseMatrix::scale_values(double s) {
    for (float& v : values_) {
        v = static_cast<float>(static_cast<double>(v) * s);
    }
    if (column_built_) {
        for (float& v : col_values_) {
            v = static_cast<float>(static_cast<double>(v) * s);
        }
    }
}

void SparseMatrix::build_column_index() {
    if (column_built_) return;
    col_ptr_.assign(static_cast<std::size_t>(cols_) + 1, 0);
    for (std::int32_t c : col_idx_) {
        col_ptr_[static_cast<std::size_t>(c) + 1] += 1;
    }
    for (std::size_t i = 1; i < col_ptr_.size(); ++i) {
        col_ptr_[i] += col_ptr_[i - 1];
    }
    col_rows_.resize(values_.size());
    col_values_.resize(values_.size());
    std::vector<std::int64_t> cursor(col_ptr_.begin(), col_ptr_.end() - 1);
    for (std::int64_t r = 0; r < rows_; ++r) {
        for (std::int64_t k = row_ptr_[static_cast<std::size_t>(r)];
             k < row_ptr_[static_cast<std::size_t>(r) + 1]; ++k) {
            std::int32_t c = col_idx_[static_cast<std::size_t>(k)];
            std::int64_t pos = cursor[static_cast<std::size_t>(c)]++;
            col_rows_[static_cast<std::size_t>(pos)] = static_cast<std::int32_t>(r);
            col_values_[static_cast<std::size_t>(pos)] = values_[static_cast<std::size_t>(k)];
        }
    }
    column_built_ = true;
}

SparseMatrix::ColumnView SparseMatrix::column(std::int32_t col) const {
    if (!column_built_) {
        throw std::logic_error("SparseMatrix: column index not built");
    }
    if (col < 0 || col >= cols_) {
        throw std::invalid_argument("SparseMatrix: column out of range: " + std::to_string(col));
    }
    std::size_t begin = static_cast<std::size_t>(col_ptr_[static_cast<std::size_t>(col)]);
    std::size_t end = static_cast<std::size_t>(col_ptr_[static_cast<std::size_t>(col) + 1]);
    return ColumnView{
        std::span<const std::int32_t>(col_rows_.data() + begin, end - begin),
        std::span<const float>(col_values_.data() + begin, end - begin),
    };
}

void SparseMatrix::multiply(std::span<const float> x, std::span<float> y) const {
    if (x.size() != static_cast<std::size_t>(cols_) ||
        y.size() != static_cast<std::size_t>(rows_)) {
        throw std::invalid_argument("SparseMatrix: multiply dimension mismatch");
    }
    multiply_block(x.data(), y.data(), 1, 1, 0, rows_);
}

void SparseMatrix::multiply_block(const float* x, float* y, int active, int stride,
                                  std::int64_t row_begin, std::int64_t row_end) const {
    const std::int64_t* rp = row_ptr_.data();
    const std::int32_t* ci = col_idx_.data();
    const float* va = values_.data();
    for (std::int64_t r = row_begin; r < row_end; ++r) {
        float* out = y + static_cast<std::size_t>(r) * static_cast<std::size_t>(stride);
        for (int l = 0; l < active; ++l) out[l] = 0.0f;
        for (std::int64_t k = rp[r]; k < rp[r + 1]; ++k) {
            const float v = va[k];
            const float* xin =
                x + static_cast<std::size_t>(ci[k]) * static_cast<std::size_t>(stride);
            for (int l = 0; l < active; ++l) {
                out[l] += v * xin[l];
            }
        }
    }
}

void SparseMatrix::multiply_f64(std::span<const double> x, std::span<double> y) const {
    if (x.size() != static_cast<std::size_t>(cols_) ||
        y.size() != static_cast<std::size_t>(rows_)) {
        throw std::invalid_argument("SparseMatrix: multiply dimension mismatch");
    }
    for (std::int64_t r = 0; r < rows_; ++r) {
        double acc = 0.0;
        for (std::int64_t k = row_ptr_[static_cast<std::size_t>(r)];
             k < row_ptr_[static_cast<std::size_t>(r) + 1]; ++k) {
            acc += static_cast<double>(values_[static_cast<std::size_t>(k)]) *
                   x[static_cast<std::size_t>(col_idx_[static_cast<std::size_t>(k)])];
        }
        y[static_cast<std::size_t>(r)] = acc;
    }
}

} // namespace esnlm
