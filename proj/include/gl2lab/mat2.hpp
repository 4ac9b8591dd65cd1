#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl2 {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- small number-theory helpers over Z/nZ ----

long long mod_pow(long long base, long long exp, long long mod);
std::optional<long long> mod_inverse(long long a, long long n);
bool is_prime(long long n);

/// Least positive integer generating (Z/pZ)^x, p an odd prime.
int least_primitive_root(int p);

/// A square root of a mod p (p prime), if one exists.
std::optional<int> sqrt_mod(int a, int p);

std::vector<long long> divisors(long long n);

/// 2x2 matrix over Z/nZ, entries stored as reduced residues in [0, n).
/// Row-major: [[a, b], [c, d]].
struct Mat2 {
    int n;
    int a, b, c, d;

    Mat2(int n_, long long a_, long long b_, long long c_, long long d_);

    static Mat2 identity(int n);
    static Mat2 scalar(int n, long long s);
    static Mat2 diag(int n, long long x, long long y);
    /// gamma = [[1,1],[0,1]]
    static Mat2 unipotent(int n);
    static Mat2 antidiag(int n, long long b, long long c);

    bool operator==(const Mat2&) const = default;

    /// Total order by (n, a, b, c, d); gives canonical sorting.
    bool operator<(const Mat2& o) const;

    /// Dense index a*n^3 + b*n^2 + c*n + d, unique within fixed n.
    uint32_t code() const;
    static Mat2 from_code(int n, uint32_t code);
};

int det(const Mat2& x);
int trace(const Mat2& x);
bool is_invertible(const Mat2& x);
bool is_in_sl2(const Mat2& x);
bool is_scalar(const Mat2& x);
bool is_diagonal(const Mat2& x);
bool is_antidiagonal(const Mat2& x);
bool is_upper_triangular(const Mat2& x);

Mat2 mul(const Mat2& x, const Mat2& y);
Mat2 inv(const Mat2& x);
Mat2 mat_pow(const Mat2& x, long long k);

/// Least k >= 1 with x^k = I, by iterated multiplication.
int element_order(const Mat2& x);

/// m * x * m^-1
Mat2 conjugate(const Mat2& m, const Mat2& x);

/// Canonical textual encoding "a,b,c,d" (row-major, no spaces).
std::string encode(const Mat2& x);
Mat2 parse_mat(int n, const std::string& text);

/// Same GL2-conjugacy class? For 2x2 over F_p: scalars are conjugate only
/// to themselves; non-scalar matrices are conjugate iff char polys agree.
bool element_conjugate(const Mat2& x, const Mat2& y);

/// Explicit m with m x m^-1 = y, when x and y are conjugate (prime modulus).
std::optional<Mat2> element_conjugating_witness(const Mat2& x, const Mat2& y);

/// Eigenvalues in F_p, if the characteristic polynomial splits (prime p).
std::optional<std::pair<int, int>> eigenvalues(const Mat2& x);

/// Diagonalizable over F_p: char poly splits with distinct roots, or scalar.
bool is_diagonalizable_elt(const Mat2& x);

}  // namespace gl2
