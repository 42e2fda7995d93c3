#include "modrep/fp_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "modrep/errors.hpp"

namespace modrep {

namespace {
// Keeps multiply accumulators safely inside uint64_t for any matrix this
// toolkit will ever see (desk-scale dimensions).
constexpr uint32_t kMaxPrime = 1u << 20;

void check_prime(uint32_t p) {
    if (p < 2 || p > kMaxPrime || !is_prime(p))
        throw ParseError("not a supported prime: " + std::to_string(p));
}
}  // namespace

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t fp_pow(uint32_t base, uint64_t exp, uint32_t p) {
    uint64_t b = base % p, r = 1;
    while (exp) {
        if (exp & 1) r = r * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<uint32_t>(r);
}

uint32_t fp_inv(uint32_t a, uint32_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("division by zero mod p");
    return fp_pow(a, p - 2, p);  // p prime
}

FpMatrix::FpMatrix(uint32_t p, size_t rows, size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
    check_prime(p);
}

FpMatrix FpMatrix::identity(uint32_t p, size_t n) {
    FpMatrix m(p, n, n);
    for (size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(uint32_t p,
                             std::initializer_list<std::initializer_list<uint32_t>> rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows.begin()->size();
    FpMatrix m(p, r, c);
    size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("ragged rows");
        size_t j = 0;
        for (uint32_t v : row) m.a_[i * c + j++] = v % p;
        ++i;
    }
    return m;
}

FpMatrix FpMatrix::from_flat(uint32_t p, size_t rows, size_t cols,
                             const std::vector<uint32_t>& row_major) {
    if (row_major.size() != rows * cols)
        throw std::invalid_argument("flat size mismatch");
    FpMatrix m(p, rows, cols);
    for (size_t i = 0; i < row_major.size(); ++i) m.a_[i] = row_major[i] % p;
    return m;
}

FpMatrix FpMatrix::column_vector(uint32_t p, const std::vector<uint32_t>& entries) {
    return from_flat(p, entries.size(), 1, entries);
}

bool FpMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](uint32_t v) { return v == 0; });
}

bool FpMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (a_[i * cols_ + j] != (i == j ? 1u : 0u)) return false;
    return true;
}

bool FpMatrix::operator==(const FpMatrix& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

namespace {
void check_same_shape(const FpMatrix& a, const FpMatrix& b) {
    if (a.prime() != b.prime() || a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("shape or prime mismatch");
}
}  // namespace

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    check_same_shape(*this, o);
    FpMatrix m(p_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) {
        uint32_t s = a_[i] + o.a_[i];
        m.a_[i] = s >= p_ ? s - p_ : s;
    }
    return m;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    check_same_shape(*this, o);
    FpMatrix m(p_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) {
        uint32_t s = a_[i] + p_ - o.a_[i];
        m.a_[i] = s >= p_ ? s - p_ : s;
    }
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (p_ != o.p_) throw std::invalid_argument("prime mismatch");
    if (cols_ != o.rows_) throw std::invalid_argument("inner dimension mismatch");
    FpMatrix m(p_, rows_, o.cols_);
    if (is_empty() || o.is_empty()) return m;
    std::vector<uint64_t> acc(o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        const uint32_t* arow = &a_[i * cols_];
        for (size_t k = 0; k < cols_; ++k) {
            uint64_t v = arow[k];
            if (v == 0) continue;
            const uint32_t* brow = &o.a_[k * o.cols_];
            for (size_t j = 0; j < o.cols_; ++j) acc[j] += v * brow[j];
        }
        uint32_t* mrow = &m.a_[i * o.cols_];
        for (size_t j = 0; j < o.cols_; ++j) mrow[j] = static_cast<uint32_t>(acc[j] % p_);
    }
    return m;
}

FpMatrix FpMatrix::scaled(uint32_t c) const {
    FpMatrix m(p_, rows_, cols_);
    uint64_t cc = c % p_;
    for (size_t i = 0; i < a_.size(); ++i)
        m.a_[i] = static_cast<uint32_t>(cc * a_[i] % p_);
    return m;
}

FpMatrix FpMatrix::negated() const { return scaled(p_ - 1); }

FpMatrix FpMatrix::transposed() const {
    FpMatrix m(p_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.a_[j * rows_ + i] = a_[i * cols_ + j];
    return m;
}

FpMatrix FpMatrix::row(size_t i) const { return rows_at({i}); }
FpMatrix FpMatrix::col(size_t j) const { return cols_at({j}); }

std::vector<uint32_t> FpMatrix::row_vec(size_t i) const {
    return std::vector<uint32_t>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

std::vector<uint32_t> FpMatrix::col_vec(size_t j) const {
    std::vector<uint32_t> v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = a_[i * cols_ + j];
    return v;
}

FpMatrix FpMatrix::rows_at(const std::vector<size_t>& idx) const {
    FpMatrix m(p_, idx.size(), cols_);
    for (size_t i = 0; i < idx.size(); ++i)
        std::copy(a_.begin() + idx[i] * cols_, a_.begin() + (idx[i] + 1) * cols_,
                  m.a_.begin() + i * cols_);
    return m;
}

FpMatrix FpMatrix::cols_at(const std::vector<size_t>& idx) const {
    FpMatrix m(p_, rows_, idx.size());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) m.a_[i * idx.size() + j] = a_[i * cols_ + idx[j]];
    return m;
}

FpMatrix FpMatrix::hstack(const FpMatrix& a, const FpMatrix& b) {
    if (a.p_ != b.p_ || a.rows_ != b.rows_) throw std::invalid_argument("hstack mismatch");
    FpMatrix m(a.p_, a.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i) {
        std::copy(a.a_.begin() + i * a.cols_, a.a_.begin() + (i + 1) * a.cols_,
                  m.a_.begin() + i * m.cols_);
        std::copy(b.a_.begin() + i * b.cols_, b.a_.begin() + (i + 1) * b.cols_,
                  m.a_.begin() + i * m.cols_ + a.cols_);
    }
    return m;
}

FpMatrix FpMatrix::vstack(const FpMatrix& a, const FpMatrix& b) {
    if (a.p_ != b.p_ || a.cols_ != b.cols_) throw std::invalid_argument("vstack mismatch");
    FpMatrix m(a.p_, a.rows_ + b.rows_, a.cols_);
    std::copy(a.a_.begin(), a.a_.end(), m.a_.begin());
    std::copy(b.a_.begin(), b.a_.end(), m.a_.begin() + a.a_.size());
    return m;
}

FpMatrix FpMatrix::direct_sum(const FpMatrix& a, const FpMatrix& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("prime mismatch");
    FpMatrix m(a.p_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        std::copy(a.a_.begin() + i * a.cols_, a.a_.begin() + (i + 1) * a.cols_,
                  m.a_.begin() + i * m.cols_);
    for (size_t i = 0; i < b.rows_; ++i)
        std::copy(b.a_.begin() + i * b.cols_, b.a_.begin() + (i + 1) * b.cols_,
                  m.a_.begin() + (a.rows_ + i) * m.cols_ + a.cols_);
    return m;
}

FpMatrix FpMatrix::kronecker(const FpMatrix& a, const FpMatrix& b) {
    if (a.p_ != b.p_) throw std::invalid_argument("prime mismatch");
    FpMatrix m(a.p_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t j = 0; j < a.cols_; ++j) {
            uint64_t v = a.a_[i * a.cols_ + j];
            if (v == 0) continue;
            for (size_t k = 0; k < b.rows_; ++k)
                for (size_t l = 0; l < b.cols_; ++l)
                    m.a_[(i * b.rows_ + k) * m.cols_ + j * b.cols_ + l] =
                        static_cast<uint32_t>(v * b.a_[k * b.cols_ + l] % a.p_);
        }
    return m;
}

FpMatrix::Rref FpMatrix::rref() const {
    Rref out;
    out.r = *this;
    auto& a = out.r.a_;
    size_t lead = 0;
    for (size_t c = 0; c < cols_ && lead < rows_; ++c) {
        size_t piv = lead;
        while (piv < rows_ && a[piv * cols_ + c] == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != lead)
            for (size_t j = 0; j < cols_; ++j) std::swap(a[piv * cols_ + j], a[lead * cols_ + j]);
        uint64_t inv = fp_inv(a[lead * cols_ + c], p_);
        for (size_t j = c; j < cols_; ++j)
            a[lead * cols_ + j] = static_cast<uint32_t>(inv * a[lead * cols_ + j] % p_);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == lead) continue;
            uint64_t f = a[i * cols_ + c];
            if (f == 0) continue;
            uint64_t nf = p_ - f;
            for (size_t j = c; j < cols_; ++j)
                a[i * cols_ + j] =
                    static_cast<uint32_t>((a[i * cols_ + j] + nf * a[lead * cols_ + j]) % p_);
        }
        out.pivots.push_back(c);
        ++lead;
    }
    out.rank = out.pivots.size();
    return out;
}

size_t FpMatrix::rank() const { return rref().rank; }

FpMatrix FpMatrix::kernel_basis() const {
    Rref rr = rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    FpMatrix k(p_, cols_, free_cols.size());
    for (size_t f = 0; f < free_cols.size(); ++f) {
        size_t fc = free_cols[f];
        k.a_[fc * k.cols_ + f] = 1;
        for (size_t i = 0; i < rr.rank; ++i) {
            uint32_t v = rr.r(i, fc);
            if (v) k.a_[rr.pivots[i] * k.cols_ + f] = p_ - v;
        }
    }
    return k;
}

std::optional<FpMatrix::Solution> FpMatrix::solve_right(const FpMatrix& b) const {
    if (b.p_ != p_ || b.rows_ != rows_) throw std::invalid_argument("solve_right shape mismatch");
    FpMatrix aug = hstack(*this, b);
    Rref rr = aug.rref();
    for (size_t c : rr.pivots)
        if (c >= cols_) return std::nullopt;  // inconsistent row
    Solution sol{FpMatrix(p_, cols_, b.cols_), kernel_basis()};
    for (size_t i = 0; i < rr.pivots.size(); ++i)
        for (size_t j = 0; j < b.cols_; ++j)
            sol.x.a_[rr.pivots[i] * b.cols_ + j] = rr.r(i, cols_ + j);
    return sol;
}

std::optional<FpMatrix> FpMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    FpMatrix aug = hstack(*this, identity(p_, rows_));
    Rref rr = aug.rref();
    // invertible iff all pivots land in the left block
    for (size_t i = 0; i < rows_; ++i)
        if (i >= rr.pivots.size() || rr.pivots[i] != i) return std::nullopt;
    std::vector<size_t> right(rows_);
    for (size_t j = 0; j < rows_; ++j) right[j] = cols_ + j;
    return rr.r.cols_at(right);
}

std::string FpMatrix::to_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " mod " << p_ << "\n";
    for (size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << a_[i * cols_ + j];
        os << "]\n";
    }
    return os.str();
}

bool RowSpace::insert(std::vector<uint32_t> v) {
    if (v.size() != ncols_) throw std::invalid_argument("RowSpace width mismatch");
    v = reduce(std::move(v));
    size_t lead = 0;
    while (lead < ncols_ && v[lead] == 0) ++lead;
    if (lead == ncols_) return false;
    uint64_t inv = fp_inv(v[lead], p_);
    for (size_t j = lead; j < ncols_; ++j) v[j] = static_cast<uint32_t>(inv * v[j] % p_);
    // Back-eliminate the new pivot from existing rows to stay canonical.
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint64_t f = rows_[r][lead];
        if (f == 0) continue;
        uint64_t nf = p_ - f;
        for (size_t j = lead; j < ncols_; ++j)
            rows_[r][j] = static_cast<uint32_t>((rows_[r][j] + nf * v[j]) % p_);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
    size_t at = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, lead);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
}

std::vector<uint32_t> RowSpace::reduce(std::vector<uint32_t> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint64_t f = v[pivots_[r]];
        if (f == 0) continue;
        uint64_t nf = p_ - f;
        const auto& row = rows_[r];
        for (size_t j = pivots_[r]; j < ncols_; ++j)
            v[j] = static_cast<uint32_t>((v[j] + nf * row[j]) % p_);
    }
    return v;
}

bool RowSpace::contains(const std::vector<uint32_t>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

FpMatrix RowSpace::basis_matrix() const {
    FpMatrix m(p_, rows_.size(), ncols_);
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = 0; j < ncols_; ++j) m.set(i, j, rows_[i][j]);
    return m;
}

}  // namespace modrep
