#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace modrep {

bool is_prime(uint32_t n);

uint32_t fp_pow(uint32_t base, uint64_t exp, uint32_t p);
uint32_t fp_inv(uint32_t a, uint32_t p);

// Dense matrix over GF(p) for a small prime p.  Entries are always fully
// reduced residues in [0, p).  Matrices are values: every operation returns
// a fresh matrix, and a published matrix is never mutated, so read-only
// sharing across tasks is safe.  Zero-row / zero-column shapes are legal
// everywhere.
class FpMatrix {
public:
    FpMatrix() : p_(2), rows_(0), cols_(0) {}
    FpMatrix(uint32_t p, size_t rows, size_t cols);  // zero-filled

    static FpMatrix identity(uint32_t p, size_t n);
    static FpMatrix from_rows(uint32_t p,
                              std::initializer_list<std::initializer_list<uint32_t>> rows);
    static FpMatrix from_flat(uint32_t p, size_t rows, size_t cols,
                              const std::vector<uint32_t>& row_major);
    static FpMatrix column_vector(uint32_t p, const std::vector<uint32_t>& entries);

    uint32_t prime() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_zero() const;
    bool is_identity() const;
    const std::vector<uint32_t>& flat() const { return a_; }

    uint32_t operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint32_t v) { a_[i * cols_ + j] = v % p_; }

    bool operator==(const FpMatrix& o) const;
    bool operator!=(const FpMatrix& o) const { return !(*this == o); }

    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix operator*(const FpMatrix& o) const;
    FpMatrix scaled(uint32_t c) const;
    FpMatrix negated() const;
    FpMatrix transposed() const;

    FpMatrix row(size_t i) const;
    FpMatrix col(size_t j) const;
    std::vector<uint32_t> row_vec(size_t i) const;
    std::vector<uint32_t> col_vec(size_t j) const;
    FpMatrix rows_at(const std::vector<size_t>& idx) const;
    FpMatrix cols_at(const std::vector<size_t>& idx) const;

    static FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
    static FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);
    static FpMatrix direct_sum(const FpMatrix& a, const FpMatrix& b);
    static FpMatrix kronecker(const FpMatrix& a, const FpMatrix& b);

    // Deterministic reduced row-echelon form: leftmost pivot column first,
    // first nonzero row below the cursor chosen as pivot row.
    struct Rref;
    Rref rref() const;
    size_t rank() const;

    // Columns form a basis of the right null space {x : Ax = 0}.
    FpMatrix kernel_basis() const;

    // Solves A X = B columnwise; nullopt when inconsistent.
    struct Solution;
    std::optional<Solution> solve_right(const FpMatrix& b) const;

    // nullopt when singular (or non-square).
    std::optional<FpMatrix> inverse() const;

    std::string to_string() const;

private:
    uint32_t p_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;  // row-major
};

struct FpMatrix::Rref {
    FpMatrix r;
    size_t rank = 0;
    std::vector<size_t> pivots;  // pivot column per pivot row
};

struct FpMatrix::Solution {
    FpMatrix x;       // one particular solution of A x = b
    FpMatrix kernel;  // basis of the homogeneous space, as columns
};

// Incrementally maintained canonical row space (rows kept in reduced
// echelon form, ordered by pivot column).  The workhorse behind spin
// closures, greedy generator picking and Krylov minimal polynomials.
class RowSpace {
public:
    RowSpace(uint32_t p, size_t ncols) : p_(p), ncols_(ncols) {}

    size_t dim() const { return rows_.size(); }
    size_t ncols() const { return ncols_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    // Reduces v against the current basis in place; returns false (and
    // leaves v zero) when dependent, otherwise inserts the normalized
    // residual and keeps the basis canonical.
    bool insert(std::vector<uint32_t> v);

    // Residual of v after reduction; empty-normalized vector if v lies in
    // the span.
    std::vector<uint32_t> reduce(std::vector<uint32_t> v) const;

    bool contains(const std::vector<uint32_t>& v) const;

    // Basis as matrix rows (canonical RREF).
    FpMatrix basis_matrix() const;

private:
    uint32_t p_;
    size_t ncols_;
    std::vector<std::vector<uint32_t>> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace modrep
