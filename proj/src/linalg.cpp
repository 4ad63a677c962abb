#include "derdim/linalg.hpp"

#include <algorithm>

namespace derdim {

bool is_prime(u32 n) {
    if (n < 2) return false;
    for (u32 d = 2; u64(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Mat Mat::identity(int n, u32 p) {
    Mat m(n, n, p);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](u32 x) { return x == 0; });
}

Mat Mat::transpose() const {
    Mat t(cols, rows, mod);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols != o.rows) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat out(rows, o.cols, mod);
    for (int r = 0; r < rows; ++r)
        for (int k = 0; k < cols; ++k) {
            u32 v = at(r, k);
            if (v == 0) continue;
            for (int c = 0; c < o.cols; ++c)
                out.at(r, c) = fp_add(out.at(r, c), fp_mul(v, o.at(k, c), mod), mod);
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat::operator+: shape mismatch");
    Mat out(rows, cols, mod);
    for (size_t i = 0; i < a.size(); ++i) out.a[i] = fp_add(a[i], o.a[i], mod);
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat::operator-: shape mismatch");
    Mat out(rows, cols, mod);
    for (size_t i = 0; i < a.size(); ++i) out.a[i] = fp_sub(a[i], o.a[i], mod);
    return out;
}

Mat Mat::scaled(u32 c) const {
    Mat out(rows, cols, mod);
    for (size_t i = 0; i < a.size(); ++i) out.a[i] = fp_mul(a[i], c, mod);
    return out;
}

void Mat::set_row(int r, const std::vector<u32>& v) {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("Mat::set_row: length mismatch");
    std::copy(v.begin(), v.end(), a.begin() + size_t(r) * cols);
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.cols != b.cols) throw std::invalid_argument("vstack: column mismatch");
    Mat out(a.rows + b.rows, a.cols, a.mod);
    std::copy(a.a.begin(), a.a.end(), out.a.begin());
    std::copy(b.a.begin(), b.a.end(), out.a.begin() + a.a.size());
    return out;
}

Mat hstack(const Mat& a, const Mat& b) {
    if (a.rows != b.rows) throw std::invalid_argument("hstack: row mismatch");
    Mat out(a.rows, a.cols + b.cols, a.mod);
    for (int r = 0; r < a.rows; ++r) {
        for (int c = 0; c < a.cols; ++c) out.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols; ++c) out.at(r, a.cols + c) = b.at(r, c);
    }
    return out;
}

Mat block_diag(const Mat& a, const Mat& b) {
    Mat out(a.rows + b.rows, a.cols + b.cols, a.mod);
    for (int r = 0; r < a.rows; ++r)
        for (int c = 0; c < a.cols; ++c) out.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows; ++r)
        for (int c = 0; c < b.cols; ++c) out.at(a.rows + r, a.cols + c) = b.at(r, c);
    return out;
}

RrefResult rref(const Mat& m) {
    Mat w = m;
    const u32 p = w.mod;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < w.cols && r < w.rows; ++c) {
        // first nonzero pivot in this column (exact arithmetic, deterministic)
        int pr = -1;
        for (int i = r; i < w.rows; ++i)
            if (w.at(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int c2 = c; c2 < w.cols; ++c2) std::swap(w.at(r, c2), w.at(pr, c2));
        u32 inv = fp_inv(w.at(r, c), p);
        for (int c2 = c; c2 < w.cols; ++c2) w.at(r, c2) = fp_mul(w.at(r, c2), inv, p);
        for (int i = 0; i < w.rows; ++i) {
            if (i == r) continue;
            u32 f = w.at(i, c);
            if (f == 0) continue;
            for (int c2 = c; c2 < w.cols; ++c2)
                w.at(i, c2) = fp_sub(w.at(i, c2), fp_mul(f, w.at(r, c2), p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    RrefResult res;
    res.rank = r;
    res.pivots = std::move(pivots);
    res.reduced = Mat(r, w.cols, p);
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < w.cols; ++c) res.reduced.at(i, c) = w.at(i, c);
    return res;
}

int rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
    RrefResult rr = rref(m);
    const u32 p = m.mod;
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : rr.pivots) is_pivot[c] = 1;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat out(static_cast<int>(free_cols.size()), m.cols, p);
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        out.at(static_cast<int>(k), fc) = 1;
        for (int i = 0; i < rr.rank; ++i)
            out.at(static_cast<int>(k), rr.pivots[i]) = fp_neg(rr.reduced.at(i, fc), p);
    }
    return out;
}

Mat left_kernel(const Mat& m) { return kernel_basis(m.transpose()); }

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows != b.rows) throw std::invalid_argument("solve: a.rows != b.rows");
    RrefResult rr = rref(hstack(a, b));
    // consistency: no pivot in the augmented block
    for (int c : rr.pivots)
        if (c >= a.cols) return std::nullopt;
    Mat x(a.cols, b.cols, a.mod);
    for (int i = 0; i < rr.rank; ++i)
        for (int c = 0; c < b.cols; ++c) x.at(rr.pivots[i], c) = rr.reduced.at(i, a.cols + c);
    return x;
}

std::optional<Mat> solve_left(const Mat& a, const Mat& b) {
    if (a.cols != b.cols) throw std::invalid_argument("solve_left: ambient mismatch");
    auto xt = solve(a.transpose(), b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

bool is_invertible(const Mat& m) { return m.rows == m.cols && rank(m) == m.rows; }

Subspace row_space(const Mat& m) {
    Subspace s(m.cols, m.mod);
    s.basis = rref(m).reduced;
    return s;
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
    if (u.ambient != w.ambient) throw std::invalid_argument("subspace_sum: ambient mismatch");
    return row_space(vstack(u.basis, w.basis));
}

// Zassenhaus: row-reduce [U U; W 0]; rows with zero left half carry a basis
// of the intersection in the right half.
Subspace subspace_intersection(const Subspace& u, const Subspace& w) {
    if (u.ambient != w.ambient) throw std::invalid_argument("subspace_intersection: ambient mismatch");
    const int n = u.ambient;
    const u32 p = u.mod;
    Mat top = hstack(u.basis, u.basis);
    Mat bot = hstack(w.basis, Mat(w.basis.rows, n, p));
    RrefResult rr = rref(vstack(top, bot));
    Mat inter(0, n, p);
    for (int i = 0; i < rr.rank; ++i) {
        bool left_zero = true;
        for (int c = 0; c < n; ++c)
            if (rr.reduced.at(i, c) != 0) { left_zero = false; break; }
        if (!left_zero) continue;
        Mat row(1, n, p);
        for (int c = 0; c < n; ++c) row.at(0, c) = rr.reduced.at(i, n + c);
        inter = vstack(inter, row);
    }
    return row_space(inter);
}

bool subspace_contains(const Subspace& u, const std::vector<u32>& v) {
    if (static_cast<int>(v.size()) != u.ambient) throw std::invalid_argument("subspace_contains: ambient mismatch");
    // reduce v against the RREF basis
    std::vector<u32> w = v;
    const u32 p = u.mod;
    for (int i = 0; i < u.basis.rows; ++i) {
        int pc = -1;
        for (int c = 0; c < u.ambient; ++c)
            if (u.basis.at(i, c) != 0) { pc = c; break; }
        if (pc < 0) continue;
        u32 f = w[pc];
        if (f != 0)
            for (int c = 0; c < u.ambient; ++c) w[c] = fp_sub(w[c], fp_mul(f, u.basis.at(i, c), p), p);
    }
    return std::all_of(w.begin(), w.end(), [](u32 x) { return x == 0; });
}

bool subspace_contains_all(const Subspace& u, const Mat& rows) {
    for (int r = 0; r < rows.rows; ++r)
        if (!subspace_contains(u, rows.row(r))) return false;
    return true;
}

Mat subspace_extension(const Subspace& u) {
    RrefResult rr = rref(u.basis);
    std::vector<char> is_pivot(u.ambient, 0);
    for (int c : rr.pivots) is_pivot[c] = 1;
    Mat ext(u.ambient - rr.rank, u.ambient, u.mod);
    int r = 0;
    for (int c = 0; c < u.ambient; ++c)
        if (!is_pivot[c]) ext.at(r++, c) = 1;
    return ext;
}

}  // namespace derdim
