// Dense exact linear algebra over the prime field GF(p).
//
// Everything downstream (path algebras, representations, complexes) reduces
// to rank / kernel / solve questions over GF(p), so this is the one place
// where arithmetic happens. All values are kept fully reduced mod p and all
// operations are pure; 0xN and Nx0 matrices are legal and act as zero maps.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace derdim {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// ---- scalar arithmetic mod p (p prime, 2 <= p < 2^31) ----

inline u32 fp_add(u32 a, u32 b, u32 p) { u32 s = a + b; return s >= p ? s - p : s; }
inline u32 fp_sub(u32 a, u32 b, u32 p) { return a >= b ? a - b : a + p - b; }
inline u32 fp_neg(u32 a, u32 p) { return a == 0 ? 0 : p - a; }
inline u32 fp_mul(u32 a, u32 b, u32 p) { return static_cast<u32>(u64(a) * b % p); }

inline u32 fp_pow(u32 a, u64 e, u32 p) {
    u32 r = 1 % p;
    while (e) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u32 fp_inv(u32 a, u32 p) {
    if (a == 0) throw std::domain_error("fp_inv: zero has no inverse");
    return fp_pow(a, p - 2, p);  // Fermat; p is prime
}

// Reduce a (possibly negative) integer into [0, p).
inline u32 fp_reduce(long long v, u32 p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<u32>(r);
}

bool is_prime(u32 n);

// ---- dense matrices ----

struct Mat {
    int rows = 0;
    int cols = 0;
    u32 mod = 2;
    std::vector<u32> a;  // row-major

    Mat() = default;
    Mat(int r, int c, u32 p) : rows(r), cols(c), mod(p), a(size_t(r) * c, 0) {}

    u32& at(int r, int c) { return a[size_t(r) * cols + c]; }
    u32 at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static Mat identity(int n, u32 p);

    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(u32 c) const;

    std::vector<u32> row(int r) const { return {a.begin() + size_t(r) * cols, a.begin() + size_t(r + 1) * cols}; }
    void set_row(int r, const std::vector<u32>& v);
};

// Stack b below a (same cols) / right of a (same rows).
Mat vstack(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
// Block diagonal of two matrices.
Mat block_diag(const Mat& a, const Mat& b);

struct RrefResult {
    Mat reduced;              // reduced row-echelon form, zero rows dropped
    std::vector<int> pivots;  // pivot column indices, ascending
    int rank = 0;
};

RrefResult rref(const Mat& m);

int rank(const Mat& m);

// Basis of the right null space {v : m v^T = 0}, one basis vector per row.
Mat kernel_basis(const Mat& m);

// Basis of the left null space {x : x m = 0}, one basis vector per row.
Mat left_kernel(const Mat& m);

// Solve a X = b for X; absent when inconsistent. Requires a.rows == b.rows.
std::optional<Mat> solve(const Mat& a, const Mat& b);

// Solve X a = b for X, i.e. express the rows of b in the row space of a.
// Absent when some row of b is outside the row span of a.
std::optional<Mat> solve_left(const Mat& a, const Mat& b);

bool is_invertible(const Mat& m);

// ---- row-span subspaces of GF(p)^ambient ----
//
// A subspace is stored by its canonical RREF basis, so equal subspaces
// compare equal as values.

struct Subspace {
    int ambient = 0;
    u32 mod = 2;
    Mat basis;  // RREF rows, rank many

    Subspace() = default;
    Subspace(int amb, u32 p) : ambient(amb), mod(p), basis(0, amb, p) {}

    int dim() const { return basis.rows; }
    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && basis == o.basis;
    }
};

// Canonicalize the row span of m as a subspace of GF(p)^{m.cols}.
Subspace row_space(const Mat& m);

Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_intersection(const Subspace& u, const Subspace& w);
bool subspace_contains(const Subspace& u, const std::vector<u32>& v);
bool subspace_contains_all(const Subspace& u, const Mat& rows);

// Rows completing a basis of u to a basis of the ambient space.
Mat subspace_extension(const Subspace& u);

}  // namespace derdim
