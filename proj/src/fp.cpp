#include "gravity/fp.hpp"

#include "gravity/errors.hpp"

#include <string>

namespace gravity {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(uint32_t p) {
    if (!is_prime(p)) fail(ErrorKind::BadInput, "p = " + std::to_string(p) + " is not prime");
}

uint32_t fp_inv(uint32_t a, uint32_t p) {
    if (a == 0) fail(ErrorKind::BadInput, "inverse of zero");
    // Extended Euclid on (a, p); p prime so gcd is 1.
    int64_t r0 = a, r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    int64_t inv = s0 % p;
    if (inv < 0) inv += p;
    return static_cast<uint32_t>(inv);
}

bool FpMatrix::is_zero() const {
    for (uint32_t e : entries_)
        if (e != 0) return false;
    return true;
}

FpMatrix FpMatrix::times(const FpMatrix& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_) fail(ErrorKind::BadInput, "matrix shape mismatch");
    FpMatrix out(rows_, rhs.cols_, p_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            uint32_t a = at(r, k);
            if (a == 0) continue;
            for (int c = 0; c < rhs.cols_; ++c) {
                uint32_t b = rhs.at(k, c);
                if (b != 0) out.add_at(r, c, fp_mul(a, b, p_));
            }
        }
    return out;
}

namespace {

// Row echelon form in place; returns pivot columns.  First nonzero entry in
// each column is the pivot, so the result is input-order deterministic.
std::vector<int> echelon(std::vector<std::vector<uint32_t>>& m, uint32_t p) {
    std::vector<int> pivot_cols;
    if (m.empty()) return pivot_cols;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (m[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) continue;
        std::swap(m[row], m[pivot]);
        uint32_t inv = fp_inv(m[row][col], p);
        for (int c = col; c < cols; ++c) m[row][c] = fp_mul(m[row][c], inv, p);
        for (int r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            uint32_t f = m[r][col];
            for (int c = col; c < cols; ++c)
                m[r][c] = fp_sub(m[r][c], fp_mul(f, m[row][c], p), p);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

int FpMatrix::rank() const {
    std::vector<std::vector<uint32_t>> m(rows_, std::vector<uint32_t>(cols_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    return static_cast<int>(echelon(m, p_).size());
}

std::vector<std::vector<uint32_t>> FpMatrix::kernel_basis() const {
    std::vector<std::vector<uint32_t>> m(rows_, std::vector<uint32_t>(cols_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);
    std::vector<int> pivot_cols = echelon(m, p_);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> v(cols_, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivot_cols.size(); ++r)
            v[pivot_cols[r]] = fp_neg(m[r][free], p_);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool RowSpace::insert(std::vector<uint32_t> row) {
    if (static_cast<int>(row.size()) != width_) fail(ErrorKind::BadInput, "row width mismatch");
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t f = row[pivots_[i]];
        if (f == 0) continue;
        for (int c = 0; c < width_; ++c) row[c] = fp_sub(row[c], fp_mul(f, rows_[i][c], p_), p_);
    }
    int pivot = -1;
    for (int c = 0; c < width_; ++c)
        if (row[c] != 0) {
            pivot = c;
            break;
        }
    if (pivot == -1) return false;
    uint32_t inv = fp_inv(row[pivot], p_);
    for (int c = 0; c < width_; ++c) row[c] = fp_mul(row[c], inv, p_);
    rows_.push_back(std::move(row));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace gravity
