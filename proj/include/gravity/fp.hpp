#pragma once

#include <cstdint>
#include <vector>

namespace gravity {

bool is_prime(uint32_t p);

// Checked at the API boundary; internal arithmetic assumes a valid prime.
void require_prime(uint32_t p);

inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}

inline uint32_t fp_neg(uint32_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) { return fp_add(a, fp_neg(b, p), p); }

inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

// Reduces possibly-negative integer coefficients (Koszul signs) into [0, p).
inline uint32_t fp_from_int(long long v, uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<uint32_t>(r);
}

uint32_t fp_inv(uint32_t a, uint32_t p);

// Dense matrix over F_p; rows index the target basis, columns the source.
class FpMatrix {
public:
    FpMatrix(int rows, int cols, uint32_t p)
        : rows_(rows), cols_(cols), p_(p), entries_(static_cast<size_t>(rows) * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    uint32_t prime() const { return p_; }

    uint32_t at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, uint32_t v) { entries_[static_cast<size_t>(r) * cols_ + c] = v; }
    void add_at(int r, int c, uint32_t v) {
        uint32_t& e = entries_[static_cast<size_t>(r) * cols_ + c];
        e = fp_add(e, v, p_);
    }

    bool operator==(const FpMatrix&) const = default;

    bool is_zero() const;
    FpMatrix times(const FpMatrix& rhs) const;  // this ∘ rhs as composition of maps
    int rank() const;

    // Basis of {v : Av = 0}, vectors of length cols(); deterministic order
    // (one vector per free column, ascending).
    std::vector<std::vector<uint32_t>> kernel_basis() const;

private:
    int rows_;
    int cols_;
    uint32_t p_;
    std::vector<uint32_t> entries_;
};

// Incrementally row-reduced span; used to pick homology representatives.
class RowSpace {
public:
    RowSpace(uint32_t p, int width) : p_(p), width_(width) {}

    // Returns true when the row was independent of the current span.
    bool insert(std::vector<uint32_t> row);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    uint32_t p_;
    int width_;
    std::vector<std::vector<uint32_t>> rows_;  // reduced, each with a unit pivot
    std::vector<int> pivots_;
};

}  // namespace gravity
