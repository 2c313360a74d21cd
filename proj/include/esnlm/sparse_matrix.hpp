#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace esnlm {

/// Frozen sparse weight matrix in CSR layout, 32-bit float values.
///
/// Two access patterns are served: row-major iteration (the W_rec * h product)
/// and single-column extraction (the one-hot W_in * u product, realized as a
/// column gather). The column index is built on demand since only W_in needs it.
class SparseMatrix {
public:
    struct Triplet {
        std::int32_t row;
        std::int32_t col;
        float value;
    };

    /// Appends entries in strict row-major order without a sort pass.
    class Builder {
    public:
        Builder(std::int64_t rows, std::int64_t cols);
        void append(std::int32_t row, std::int32_t col, float value);
        SparseMatrix finish();

    private:
        std::int64_t rows_;
        std::int64_t cols_;
        std::int32_t last_row_ = -1;
        std::int32_t last_col_ = -1;
        std::vector<std::int64_t> row_ptr_;
        std::vector<std::int32_t> col_idx_;
        std::vector<float> values_;
    };

    SparseMatrix() = default;

    /// Validates ranges, duplicates, and finiteness; sorts into CSR.
    static SparseMatrix from_triplets(std::int64_t rows, std::int64_t cols,
                                      std::vector<Triplet> entries);

    /// Reassembles a matrix from raw CSR arrays (checkpoint load); validates structure.
    static SparseMatrix from_csr(std::int64_t rows, std::int64_t cols,
                                 std::vector<std::int64_t> row_ptr,
                                 std::vector<std::int32_t> col_idx,
                                 std::vector<float> values);

    std::int64_t rows() const noexcept { return rows_; }
    std::int64_t cols() const noexcept { return cols_; }
    std::int64_t nnz() const noexcept { return static_cast<std::int64_t>(values_.size()); }

    std::span<const std::int64_t> row_ptr() const noexcept { return row_ptr_; }
    std::span<const std::int32_t> col_idx() const noexcept { return col_idx_; }
    std::span<const float> values() const noexcept { return values_; }

    /// Multiplies all stored values by s (used once, for spectral normalization).
    void scale_values(double s);

    void build_column_index();
    bool has_column_index() const noexcept { return !column_built_ ? false : true; }

    /// Entries of one column as parallel (row, value) arrays. Requires the column index.
    struct ColumnView {
        std::span<const std::int32_t> rows;
        std::span<const float> values;
    };
    ColumnView column(std::int32_t col) const;

    /// y = M * x, float accumulation in storage order.
    void multiply(std::span<const float> x, std::span<float> y) const;

    /// Block product over `active` lanes: for each row r and lane l,
    ///   y[r*stride + l] = sum_nz value * x[col*stride + l].
    /// Rows restricted to [row_begin, row_end) so callers can split across threads.
    void multiply_block(const float* x, float* y, int active, int stride,
                        std::int64_t row_begin, std::int64_t row_end) const;

    /// y = M * x in 64-bit arithmetic (spectral-radius estimation).
    void multiply_f64(std::span<const double> x, std::span<double> y) const;

private:
    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::vector<std::int64_t> row_ptr_;
    std::vector<std::int32_t> col_idx_;
    std::vector<float> values_;

    // Column index over the CSR entries; values duplicated for contiguous gathers.
    bool column_built_ = false;
    std::vector<std::int64_t> col_ptr_;
    std::vector<std::int32_t> col_rows_;
    std::vector<float> col_values_;
};

} // namespace esnlm
