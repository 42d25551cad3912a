// Dense matrices over small finite fields, plus a sparse triplet form used
// for coboundary maps. Storage is picked by field: GF(2) rows are bit-packed
// into words, GF(3) rows are two bit-planes, everything else is one code per
// entry. The packed paths exist because the dominant workload is rank/spin
// on 10^3..10^4-column matrices over F2 and F3.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "progen/field.hpp"

namespace progen {

class Mat {
public:
    enum class Kind { GF2, GF3, GEN };

    Mat() : F_(&Field::get(2)), rows_(0), cols_(0) { init_kind(); }
    Mat(const Field& F, size_t rows, size_t cols) : F_(&F), rows_(rows), cols_(cols) {
        init_kind();
        alloc();
    }

    static Mat identity(const Field& F, size_t n) {
        Mat m(F, n, n);
        for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }
    static Mat from_rows(const Field& F, const std::vector<std::vector<fel>>& rows) {
        size_t c = rows.empty() ? 0 : rows[0].size();
        Mat m(F, rows.size(), c);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("Mat: ragged rows");
            for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
        }
        return m;
    }

    const Field& field() const { return *F_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    fel get(size_t i, size_t j) const {
        switch (kind_) {
            case Kind::GF2: return (w_[i * stride_ + j / 64] >> (j % 64)) & 1 ? 1 : 0;
            case Kind::GF3: {
                uint64_t lo = w_[i * stride_ + j / 64] >> (j % 64) & 1;
                uint64_t hi = w_[i * stride_ + wpr_ + j / 64] >> (j % 64) & 1;
                return static_cast<fel>(lo + 2 * hi);
            }
            default: return g_[i * cols_ + j];
        }
    }
    void set(size_t i, size_t j, fel v) {
        switch (kind_) {
            case Kind::GF2: {
                uint64_t& word = w_[i * stride_ + j / 64];
                uint64_t bit = 1ull << (j % 64);
                word = v ? (word | bit) : (word & ~bit);
                break;
            }
            case Kind::GF3: {
                uint64_t bit = 1ull << (j % 64);
                uint64_t& lo = w_[i * stride_ + j / 64];
                uint64_t& hi = w_[i * stride_ + wpr_ + j / 64];
                lo = (v == 1) ? (lo | bit) : (lo & ~bit);
                hi = (v == 2) ? (hi | bit) : (hi & ~bit);
                break;
            }
            default: g_[i * cols_ + j] = v;
        }
    }

    std::vector<fel> row_codes(size_t i) const {
        std::vector<fel> r(cols_);
        for (size_t j = 0; j < cols_; ++j) r[j] = get(i, j);
        return r;
    }
    void set_row(size_t i, const std::vector<fel>& v) {
        for (size_t j = 0; j < cols_; ++j) set(i, j, v[j]);
    }

    bool row_is_zero(size_t i) const {
        switch (kind_) {
            case Kind::GF2:
            case Kind::GF3: {
                const uint64_t* r = &w_[i * stride_];
                for (size_t k = 0; k < stride_; ++k)
                    if (r[k]) return false;
                return true;
            }
            default:
                for (size_t j = 0; j < cols_; ++j)
                    if (g_[i * cols_ + j]) return false;
                return true;
        }
    }
    bool is_zero() const {
        for (size_t i = 0; i < rows_; ++i)
            if (!row_is_zero(i)) return false;
        return true;
    }

    // dst_row += c * src row of other (other may be *this).
    void row_axpy(size_t dst, const Mat& other, size_t src, fel c) {
        if (c == 0) return;
        switch (kind_) {
            case Kind::GF2: {
                uint64_t* d = &w_[dst * stride_];
                const uint64_t* s = &other.w_[src * other.stride_];
                for (size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
                break;
            }
            case Kind::GF3: {
                uint64_t* dlo = &w_[dst * stride_];
                uint64_t* dhi = dlo + wpr_;
                const uint64_t* slo = &other.w_[src * other.stride_];
                const uint64_t* shi = slo + wpr_;
                if (c == 2) std::swap(slo, shi);  // multiplying by 2 negates: swap planes
                for (size_t k = 0; k < wpr_; ++k) {
                    uint64_t a = dlo[k], b = dhi[k], cc = slo[k], dd = shi[k];
                    uint64_t t1 = a | b, t2 = cc | dd;
                    dlo[k] = (cc & ~t1) | (a & ~t2) | (b & dd);
                    dhi[k] = (dd & ~t1) | (b & ~t2) | (a & cc);
                }
                break;
            }
            default: {
                fel* d = &g_[dst * cols_];
                const fel* s = &other.g_[src * other.cols_];
                const Field& F = *F_;
                if (c == 1) {
                    for (size_t j = 0; j < cols_; ++j) d[j] = F.add(d[j], s[j]);
                } else {
                    for (size_t j = 0; j < cols_; ++j) d[j] = F.add(d[j], F.mul(c, s[j]));
                }
            }
        }
    }

    void row_scale(size_t i, fel c) {
        if (c == 1) return;
        switch (kind_) {
            case Kind::GF2:
                if (c == 0) std::fill(w_.begin() + i * stride_, w_.begin() + (i + 1) * stride_, 0);
                break;
            case Kind::GF3:
                if (c == 0) {
                    std::fill(w_.begin() + i * stride_, w_.begin() + (i + 1) * stride_, 0);
                } else {  // c == 2: swap planes
                    for (size_t k = 0; k < wpr_; ++k)
                        std::swap(w_[i * stride_ + k], w_[i * stride_ + wpr_ + k]);
                }
                break;
            default:
                for (size_t j = 0; j < cols_; ++j) g_[i * cols_ + j] = F_->mul(g_[i * cols_ + j], c);
        }
    }

    void row_clear(size_t i) {
        switch (kind_) {
            case Kind::GF2:
            case Kind::GF3:
                std::fill(w_.begin() + i * stride_, w_.begin() + (i + 1) * stride_, 0);
                break;
            default:
                std::fill(g_.begin() + i * cols_, g_.begin() + (i + 1) * cols_, 0);
        }
    }

    void copy_row_from(size_t dst, const Mat& other, size_t src) {
        switch (kind_) {
            case Kind::GF2:
            case Kind::GF3:
                std::copy(other.w_.begin() + src * other.stride_, other.w_.begin() + (src + 1) * other.stride_,
                          w_.begin() + dst * stride_);
                break;
            default:
                std::copy(other.g_.begin() + src * other.cols_, other.g_.begin() + (src + 1) * other.cols_,
                          g_.begin() + dst * cols_);
        }
    }

    // Column index of the first nonzero entry of a row, or cols() if zero.
    size_t row_leading(size_t i) const {
        switch (kind_) {
            case Kind::GF2:
            case Kind::GF3: {
                const uint64_t* lo = &w_[i * stride_];
                const uint64_t* hi = kind_ == Kind::GF3 ? lo + wpr_ : lo;
                for (size_t k = 0; k < wpr_; ++k) {
                    uint64_t m = lo[k] | hi[k];
                    if (m) {
                        size_t j = k * 64 + static_cast<size_t>(__builtin_ctzll(m));
                        return j < cols_ ? j : cols_;
                    }
                }
                return cols_;
            }
            default:
                for (size_t j = 0; j < cols_; ++j)
                    if (g_[i * cols_ + j]) return j;
                return cols_;
        }
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        check_same(a, b);
        Mat r = a;
        for (size_t i = 0; i < r.rows_; ++i) r.row_axpy(i, b, i, 1);
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        check_same(a, b);
        Mat r = b;
        for (size_t i = 0; i < r.rows_; ++i) r.row_scale(i, r.F_->neg(1));
        for (size_t i = 0; i < r.rows_; ++i) r.row_axpy(i, a, i, 1);
        return r;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (&a.field() != &b.field()) throw std::invalid_argument("Mat: field mismatch");
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat r(a.field(), a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i) {
            for (size_t k = 0; k < a.cols_; ++k) {
                fel c = a.get(i, k);
                if (c) r.row_axpy(i, b, k, c);
            }
        }
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.F_->q() != b.F_->q()) return false;
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t j = 0; j < a.cols_; ++j)
                if (a.get(i, j) != b.get(i, j)) return false;
        return true;
    }

    // v * this for a row vector v of codes.
    std::vector<fel> apply_row(const std::vector<fel>& v) const {
        if (v.size() != rows_) throw std::invalid_argument("Mat: apply_row size mismatch");
        Mat acc(*F_, 1, cols_);
        for (size_t k = 0; k < rows_; ++k)
            if (v[k]) acc.row_axpy(0, *this, k, v[k]);
        return acc.row_codes(0);
    }

    Mat transpose() const {
        Mat r(*F_, cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                fel v = get(i, j);
                if (v) r.set(j, i, v);
            }
        return r;
    }

    Mat kron(const Mat& b) const {
        if (&field() != &b.field()) throw std::invalid_argument("Mat: kron field mismatch");
        Mat r(*F_, rows_ * b.rows_, cols_ * b.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                fel v = get(i, j);
                if (!v) continue;
                for (size_t k = 0; k < b.rows_; ++k)
                    for (size_t l = 0; l < b.cols_; ++l) {
                        fel w = b.get(k, l);
                        if (w) r.set(i * b.rows_ + k, j * b.cols_ + l, F_->mul(v, w));
                    }
            }
        return r;
    }

    // In-place reduced row echelon form. Returns rank; pivot columns out.
    size_t rref(std::vector<size_t>* pivot_cols = nullptr) {
        size_t rank = 0;
        if (pivot_cols) pivot_cols->clear();
        for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
            size_t piv = rows_;
            for (size_t i = rank; i < rows_; ++i)
                if (get(i, col)) { piv = i; break; }
            if (piv == rows_) continue;
            swap_rows(piv, rank);
            fel lead = get(rank, col);
            if (lead != 1) row_scale(rank, F_->inv(lead));
            for (size_t i = 0; i < rows_; ++i) {
                if (i == rank) continue;
                fel v = get(i, col);
                if (v) row_axpy(i, *this, rank, F_->neg(v));
            }
            if (pivot_cols) pivot_cols->push_back(col);
            ++rank;
        }
        return rank;
    }

    size_t rank() const {
        Mat t = *this;
        return t.rref();
    }

    // Basis of {x : this * x = 0}, one solution per row of the result.
    Mat kernel_right() const {
        Mat t = *this;
        std::vector<size_t> piv;
        size_t rank = t.rref(&piv);
        std::vector<bool> is_piv(cols_, false);
        for (size_t c : piv) is_piv[c] = true;
        Mat ker(*F_, cols_ - rank, cols_);
        size_t r = 0;
        for (size_t freec = 0; freec < cols_; ++freec) {
            if (is_piv[freec]) continue;
            ker.set(r, freec, 1);
            for (size_t k = 0; k < rank; ++k) {
                fel v = t.get(k, freec);
                if (v) ker.set(r, piv[k], F_->neg(v));
            }
            ++r;
        }
        return ker;
    }
    // Basis of {v : v * this = 0}.
    Mat kernel_left() const { return transpose().kernel_right(); }

    // Some x with this * x = b, if any.
    std::optional<std::vector<fel>> solve_right(const std::vector<fel>& b) const {
        if (b.size() != rows_) throw std::invalid_argument("Mat: solve size mismatch");
        Mat aug(*F_, rows_, cols_ + 1);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) aug.set(i, j, get(i, j));
            aug.set(i, cols_, b[i]);
        }
        std::vector<size_t> piv;
        aug.rref(&piv);
        if (!piv.empty() && piv.back() == cols_) return std::nullopt;
        std::vector<fel> x(cols_, 0);
        for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug.get(k, cols_);
        return x;
    }

    std::optional<Mat> inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Mat: inverse of non-square");
        Mat aug(*F_, rows_, 2 * cols_);
        for (size_t i = 0; i < rows_; ++i) {
            for (size_t j = 0; j < cols_; ++j) aug.set(i, j, get(i, j));
            aug.set(i, cols_ + i, 1);
        }
        std::vector<size_t> piv;
        aug.rref(&piv);
        // Singular iff some pivot spills into the augmented block.
        if (piv.size() < rows_ || piv[rows_ - 1] >= cols_) return std::nullopt;
        Mat inv(*F_, rows_, cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) inv.set(i, j, aug.get(i, cols_ + j));
        return inv;
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        switch (kind_) {
            case Kind::GF2:
            case Kind::GF3:
                for (size_t k = 0; k < stride_; ++k) std::swap(w_[i * stride_ + k], w_[j * stride_ + k]);
                break;
            default:
                for (size_t k = 0; k < cols_; ++k) std::swap(g_[i * cols_ + k], g_[j * cols_ + k]);
        }
    }

    Mat vstack(const Mat& other) const {
        if (cols_ != other.cols_ || F_->q() != other.F_->q())
            throw std::invalid_argument("Mat: vstack mismatch");
        Mat r(*F_, rows_ + other.rows_, cols_);
        for (size_t i = 0; i < rows_; ++i) r.copy_row_from(i, *this, i);
        for (size_t i = 0; i < other.rows_; ++i) r.copy_row_from(rows_ + i, other, i);
        return r;
    }

    Mat take_rows(size_t count) const {
        Mat r(*F_, count, cols_);
        for (size_t i = 0; i < count; ++i) r.copy_row_from(i, *this, i);
        return r;
    }

    std::string digest_bytes() const {
        std::string s;
        s.reserve(rows_ * cols_ * 2 + 16);
        s += std::to_string(F_->q()) + ":" + std::to_string(rows_) + "x" + std::to_string(cols_) + ";";
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                fel v = get(i, j);
                s.push_back(static_cast<char>('a' + (v & 15)));
                s.push_back(static_cast<char>('a' + (v >> 4)));
            }
        return s;
    }

private:
    const Field* F_;
    size_t rows_, cols_;
    Kind kind_ = Kind::GEN;
    size_t wpr_ = 0, stride_ = 0;  // packed kinds
    std::vector<uint64_t> w_;
    std::vector<fel> g_;

    void init_kind() {
        if (F_->q() == 2) kind_ = Kind::GF2;
        else if (F_->q() == 3) kind_ = Kind::GF3;
        else kind_ = Kind::GEN;
    }
    void alloc() {
        if (kind_ == Kind::GEN) {
            g_.assign(rows_ * cols_, 0);
        } else {
            wpr_ = (cols_ + 63) / 64;
            stride_ = kind_ == Kind::GF3 ? 2 * wpr_ : wpr_;
            w_.assign(rows_ * stride_, 0);
        }
    }
    static void check_same(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || &a.field() != &b.field())
            throw std::invalid_argument("Mat: shape/field mismatch");
    }
};

// Row space maintained in echelon form with unit pivots; rows are inserted
// incrementally. Optionally tracks companion rows (augmented system) that
// undergo the same row operations.
class EchelonBasis {
public:
    EchelonBasis(const Field& F, size_t cols, size_t aug_cols = 0)
        : F_(&F), cols_(cols), aug_cols_(aug_cols),
          store_(F, 0, cols), aug_(F, 0, aug_cols ? aug_cols : 1) {}

    size_t size() const { return pivots_.size(); }
    size_t cols() const { return cols_; }
    const Mat& rows() const { return store_; }
    const Mat& aug_rows() const { return aug_; }
    size_t pivot_col(size_t i) const { return pivots_[i]; }

    // Reduces vec (and aug) in place against the basis.
    void reduce_inplace(Mat& vec, size_t vrow, Mat* aug = nullptr, size_t arow = 0) const {
        for (size_t i = 0; i < pivots_.size(); ++i) {
            fel v = vec.get(vrow, pivots_[i]);
            if (v) {
                fel c = F_->neg(v);
                vec.row_axpy(vrow, store_, i, c);
                if (aug && aug_cols_) aug->row_axpy(arow, aug_, i, c);
            }
        }
    }

    // Insert a vector (destroys the scratch rows). Returns true if it
    // enlarged the basis, false if it reduced to zero.
    bool insert(Mat& vec, size_t vrow, Mat* aug = nullptr, size_t arow = 0) {
        reduce_inplace(vec, vrow, aug, arow);
        size_t lead = vec.row_leading(vrow);
        if (lead == cols_) return false;
        fel lv = vec.get(vrow, lead);
        if (lv != 1) {
            vec.row_scale(vrow, F_->inv(lv));
            if (aug && aug_cols_) aug->row_scale(arow, F_->inv(lv));
        }
        grow();
        store_.copy_row_from(pivots_.size(), vec, vrow);
        if (aug_cols_) {
            if (aug) aug_.copy_row_from(pivots_.size(), *aug, arow);
            else aug_.row_clear(pivots_.size());
        }
        pivots_.push_back(lead);
        return true;
    }

    bool insert_codes(const std::vector<fel>& v) {
        Mat scratch(*F_, 1, cols_);
        scratch.set_row(0, v);
        return insert(scratch, 0);
    }

    bool contains(const std::vector<fel>& v) const {
        Mat scratch(*F_, 1, cols_);
        scratch.set_row(0, v);
        reduce_inplace(scratch, 0);
        return scratch.row_is_zero(0);
    }

    // Snapshot of the basis as a rank x cols matrix (fully reduced form).
    Mat basis_matrix() const {
        Mat m = store_.take_rows(pivots_.size());
        m.rref();
        return m;
    }

private:
    const Field* F_;
    size_t cols_, aug_cols_;
    Mat store_, aug_;
    std::vector<size_t> pivots_;
    size_t cap_ = 0;

    void grow() {
        if (pivots_.size() < cap_) return;
        size_t ncap = cap_ ? cap_ * 2 : 16;
        if (ncap > cols_ + 1) ncap = std::max(cols_ + 1, pivots_.size() + 1);
        Mat ns(*F_, ncap, cols_);
        for (size_t i = 0; i < pivots_.size(); ++i) ns.copy_row_from(i, store_, i);
        store_ = std::move(ns);
        if (aug_cols_) {
            Mat na(*F_, ncap, aug_cols_);
            for (size_t i = 0; i < pivots_.size(); ++i) na.copy_row_from(i, aug_, i);
            aug_ = std::move(na);
        }
        cap_ = ncap;
    }
};

// Sparse matrix in triplet form; the workhorse representation for coboundary
// maps, which are block-sparse with at most four structural blocks per row.
class SparseMat {
public:
    SparseMat(const Field& F, size_t rows, size_t cols) : F_(&F), rows_(rows), cols_(cols) {}

    const Field& field() const { return *F_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t nnz() const { return trip_.size(); }

    void add(size_t r, size_t c, fel v) {
        if (v) trip_.push_back({r, c, v});
    }

    Mat to_dense() const {
        Mat m(*F_, rows_, cols_);
        for (const auto& t : trip_) m.set(t.r, t.c, F_->add(m.get(t.r, t.c), t.v));
        return m;
    }

    std::vector<fel> apply_row(const std::vector<fel>& v) const {
        // v (1 x rows) * this -> 1 x cols
        std::vector<fel> out(cols_, 0);
        for (const auto& t : trip_)
            if (v[t.r]) out[t.c] = F_->add(out[t.c], F_->mul(v[t.r], t.v));
        return out;
    }
    std::vector<fel> apply_col(const std::vector<fel>& x) const {
        // this * x (cols x 1) -> rows x 1
        std::vector<fel> out(rows_, 0);
        for (const auto& t : trip_)
            if (x[t.c]) out[t.r] = F_->add(out[t.r], F_->mul(t.v, x[t.c]));
        return out;
    }

    // Rank by Markowitz-style sparse elimination, falling back to dense
    // echelonization of the remaining block once fill passes the threshold.
    size_t rank(double dense_fill_threshold = 0.20) const {
        // Row-major working form with combined duplicate entries.
        std::vector<std::map<size_t, fel>> rowmaps(rows_);
        for (const auto& t : trip_) {
            fel& slot = rowmaps[t.r][t.c];
            slot = F_->add(slot, t.v);
            if (!slot) rowmaps[t.r].erase(t.c);
        }
        std::vector<size_t> colcount(cols_, 0);
        std::vector<bool> rowdone(rows_, false), coldone(cols_, false);
        size_t active_rows = 0;
        for (size_t i = 0; i < rows_; ++i) {
            if (rowmaps[i].empty()) rowdone[i] = true;
            else {
                ++active_rows;
                for (auto& [c, v] : rowmaps[i]) ++colcount[c];
            }
        }
        size_t rank = 0, active_cols = cols_;
        size_t nnz_now = trip_.size();
        while (active_rows > 0) {
            if (active_cols > 0 &&
                static_cast<double>(nnz_now) > dense_fill_threshold * static_cast<double>(active_rows) * active_cols &&
                active_rows > 64) {
                // Dense fallback on what is left.
                std::vector<size_t> live_cols;
                for (size_t c = 0; c < cols_; ++c)
                    if (!coldone[c]) live_cols.push_back(c);
                std::vector<size_t> colpos(cols_, 0);
                for (size_t k = 0; k < live_cols.size(); ++k) colpos[live_cols[k]] = k;
                size_t nlive = 0;
                for (size_t i = 0; i < rows_; ++i)
                    if (!rowdone[i]) ++nlive;
                Mat dense(*F_, nlive, live_cols.size());
                size_t r = 0;
                for (size_t i = 0; i < rows_; ++i) {
                    if (rowdone[i]) continue;
                    for (auto& [c, v] : rowmaps[i]) dense.set(r, colpos[c], v);
                    ++r;
                }
                return rank + dense.rank();
            }
            // Markowitz pivot: minimize (nnz(row)-1)*(nnz(col)-1).
            size_t best_r = rows_, best_c = cols_;
            uint64_t best_score = UINT64_MAX;
            for (size_t i = 0; i < rows_ && best_score > 0; ++i) {
                if (rowdone[i]) continue;
                uint64_t rw = rowmaps[i].size() - 1;
                for (auto& [c, v] : rowmaps[i]) {
                    uint64_t score = rw * (colcount[c] - 1);
                    if (score < best_score) { best_score = score; best_r = i; best_c = c; }
                    if (best_score == 0) break;
                }
            }
            if (best_r == rows_) break;
            // Eliminate best_c from all other active rows.
            fel piv = rowmaps[best_r][best_c];
            fel pinv = F_->inv(piv);
            std::vector<size_t> targets;
            for (size_t i = 0; i < rows_; ++i)
                if (i != best_r && !rowdone[i] && rowmaps[i].count(best_c)) targets.push_back(i);
            for (size_t i : targets) {
                fel factor = F_->neg(F_->mul(rowmaps[i][best_c], pinv));
                for (auto& [c, v] : rowmaps[best_r]) {
                    fel& slot = rowmaps[i][c];
                    bool existed = slot != 0;
                    slot = F_->add(slot, F_->mul(factor, v));
                    if (slot && !existed) { ++colcount[c]; ++nnz_now; }
                    else if (!slot && existed) {
                        rowmaps[i].erase(c);
                        --colcount[c];
                        --nnz_now;
                    }
                }
                if (rowmaps[i].empty()) { rowdone[i] = true; --active_rows; }
            }
            // Retire pivot row and column.
            for (auto& [c, v] : rowmaps[best_r]) { --colcount[c]; --nnz_now; }
            rowmaps[best_r].clear();
            rowdone[best_r] = true;
            --active_rows;
            coldone[best_c] = true;
            --active_cols;
            ++rank;
        }
        return rank;
    }

private:
    struct Trip { size_t r, c; fel v; };
    const Field* F_;
    size_t rows_, cols_;
    std::vector<Trip> trip_;
};

}  // namespace progen
