#include "gl2lab/mat2.hpp"

#include <algorithm>
#include <numeric>

namespace gl2 {

long long mod_pow(long long base, long long exp, long long mod) {
    if (mod <= 0) throw Error("mod_pow: modulus must be positive");
    long long r = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

std::optional<long long> mod_inverse(long long a, long long n) {
    a %= n;
    if (a < 0) a += n;
    long long r0 = n, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        std::tie(r0, r1) = std::pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::pair(t1, t0 - q * t1);
    }
    if (r0 != 1) return std::nullopt;
    if (t0 < 0) t0 += n;
    return t0;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int least_primitive_root(int p) {
    if (!is_prime(p) || p < 3) throw Error("least_primitive_root: need an odd prime");
    std::vector<long long> prime_factors;
    long long m = p - 1;
    for (long long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    }
    if (m > 1) prime_factors.push_back(m);
    for (int g = 2; g < p; ++g) {
        bool ok = true;
        for (long long q : prime_factors) {
            if (mod_pow(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw Error("least_primitive_root: none found");
}

std::optional<int> sqrt_mod(int a, int p) {
    a %= p;
    if (a < 0) a += p;
    for (int x = 0; x < p; ++x)
        if (static_cast<long long>(x) * x % p == a) return x;
    return std::nullopt;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

static int reduce(long long v, int n) {
    v %= n;
    if (v < 0) v += n;
    return static_cast<int>(v);
}

Mat2::Mat2(int n_, long long a_, long long b_, long long c_, long long d_) : n(n_) {
    if (n < 2) throw Error("Mat2: modulus must be >= 2");
    a = reduce(a_, n);
    b = reduce(b_, n);
    c = reduce(c_, n);
    d = reduce(d_, n);
}

Mat2 Mat2::identity(int n) { return Mat2(n, 1, 0, 0, 1); }
Mat2 Mat2::scalar(int n, long long s) { return Mat2(n, s, 0, 0, s); }
Mat2 Mat2::diag(int n, long long x, long long y) { return Mat2(n, x, 0, 0, y); }
Mat2 Mat2::unipotent(int n) { return Mat2(n, 1, 1, 0, 1); }
Mat2 Mat2::antidiag(int n, long long b, long long c) { return Mat2(n, 0, b, c, 0); }

bool Mat2::operator<(const Mat2& o) const {
    if (n != o.n) return n < o.n;
    return code() < o.code();
}

uint32_t Mat2::code() const {
    uint32_t un = static_cast<uint32_t>(n);
    return ((static_cast<uint32_t>(a) * un + b) * un + c) * un + d;
}

Mat2 Mat2::from_code(int n, uint32_t code) {
    uint32_t un = static_cast<uint32_t>(n);
    int d = code % un;
    code /= un;
    int c = code % un;
    code /= un;
    int b = code % un;
    code /= un;
    int a = code;
    return Mat2(n, a, b, c, d);
}

int det(const Mat2& x) {
    return reduce(static_cast<long long>(x.a) * x.d - static_cast<long long>(x.b) * x.c, x.n);
}

int trace(const Mat2& x) { return reduce(static_cast<long long>(x.a) + x.d, x.n); }

bool is_invertible(const Mat2& x) { return std::gcd(det(x), x.n) == 1; }
bool is_in_sl2(const Mat2& x) { return det(x) == 1; }
bool is_scalar(const Mat2& x) { return x.b == 0 && x.c == 0 && x.a == x.d; }
bool is_diagonal(const Mat2& x) { return x.b == 0 && x.c == 0; }
bool is_antidiagonal(const Mat2& x) { return x.a == 0 && x.d == 0; }
bool is_upper_triangular(const Mat2& x) { return x.c == 0; }

Mat2 mul(const Mat2& x, const Mat2& y) {
    if (x.n != y.n) throw Error("mul: modulus mismatch");
    long long a = static_cast<long long>(x.a) * y.a + static_cast<long long>(x.b) * y.c;
    long long b = static_cast<long long>(x.a) * y.b + static_cast<long long>(x.b) * y.d;
    long long c = static_cast<long long>(x.c) * y.a + static_cast<long long>(x.d) * y.c;
    long long d = static_cast<long long>(x.c) * y.b + static_cast<long long>(x.d) * y.d;
    return Mat2(x.n, a, b, c, d);
}

Mat2 inv(const Mat2& x) {
    auto di = mod_inverse(det(x), x.n);
    if (!di) throw Error("inv: matrix not invertible mod " + std::to_string(x.n));
    long long u = *di;
    return Mat2(x.n, u * x.d, -u * x.b, -u * x.c, u * x.a);
}

Mat2 mat_pow(const Mat2& x, long long k) {
    Mat2 base = k < 0 ? inv(x) : x;
    if (k < 0) k = -k;
    Mat2 r = Mat2::identity(x.n);
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

int element_order(const Mat2& x) {
    if (!is_invertible(x)) throw Error("element_order: matrix not invertible");
    Mat2 id = Mat2::identity(x.n);
    Mat2 y = x;
    int k = 1;
    while (!(y == id)) {
        y = mul(y, x);
        ++k;
        if (k > x.n * x.n * x.n * x.n)
            throw Error("element_order: runaway iteration");
    }
    return k;
}

Mat2 conjugate(const Mat2& m, const Mat2& x) {
    return mul(mul(m, x), inv(m));
}

std::string encode(const Mat2& x) {
    return std::to_string(x.a) + "," + std::to_string(x.b) + "," + std::to_string(x.c) + "," +
           std::to_string(x.d);
}

Mat2 parse_mat(int n, const std::string& text) {
    long long vals[4];
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        size_t next = i < 3 ? text.find(',', pos) : text.size();
        if (next == std::string::npos) throw Error("parse_mat: expected \"a,b,c,d\", got \"" + text + "\"");
        std::string tok = text.substr(pos, next - pos);
        if (tok.empty()) throw Error("parse_mat: empty entry in \"" + text + "\"");
        size_t used = 0;
        long long v;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw Error("parse_mat: bad entry \"" + tok + "\"");
        }
        if (used != tok.size()) throw Error("parse_mat: bad entry \"" + tok + "\"");
        vals[i] = v;
        pos = next + 1;
    }
    return Mat2(n, vals[0], vals[1], vals[2], vals[3]);
}

bool element_conjugate(const Mat2& x, const Mat2& y) {
    if (x.n != y.n) return false;
    if (is_scalar(x) || is_scalar(y)) return x == y;
    return trace(x) == trace(y) && det(x) == det(y);
}

std::optional<Mat2> element_conjugating_witness(const Mat2& x, const Mat2& y) {
    if (x.n != y.n) return std::nullopt;
    if (x == y) return Mat2::identity(x.n);
    if (!element_conjugate(x, y)) return std::nullopt;
    if (!is_prime(x.n)) {
        // fall back to exhaustive search over invertible matrices
        int n = x.n;
        uint32_t total = static_cast<uint32_t>(n) * n * n * n;
        for (uint32_t c = 0; c < total; ++c) {
            Mat2 m = Mat2::from_code(n, c);
            if (!is_invertible(m)) continue;
            if (conjugate(m, x) == y) return m;
        }
        return std::nullopt;
    }
    // Non-scalar 2x2 over F_p: both are conjugate to the companion matrix of
    // their shared char poly. With a cyclic vector v, A := [v | x v] satisfies
    // A^-1 x A = C; likewise B for y; then (B A^-1) x (B A^-1)^-1 = y.
    int p = x.n;
    auto cyclic_basis = [p](const Mat2& g) -> std::optional<Mat2> {
        for (int v0 = 0; v0 < p; ++v0) {
            for (int v1 = 0; v1 < p; ++v1) {
                if (v0 == 0 && v1 == 0) continue;
                long long w0 = (static_cast<long long>(g.a) * v0 + g.b * v1) % p;
                long long w1 = (static_cast<long long>(g.c) * v0 + g.d * v1) % p;
                Mat2 A(p, v0, w0, v1, w1);
                if (is_invertible(A)) return A;
            }
        }
        return std::nullopt;
    };
    auto A = cyclic_basis(x);
    auto B = cyclic_basis(y);
    if (!A || !B) return std::nullopt;
    Mat2 m = mul(*B, inv(*A));
    if (!(conjugate(m, x) == y)) return std::nullopt;
    return m;
}

std::optional<std::pair<int, int>> eigenvalues(const Mat2& x) {
    if (!is_prime(x.n)) throw Error("eigenvalues: prime modulus required");
    int p = x.n;
    int t = trace(x), dt = det(x);
    // lambda^2 - t lambda + dt = 0; discriminant t^2 - 4 dt
    long long disc = (static_cast<long long>(t) * t - 4LL * dt) % p;
    if (disc < 0) disc += p;
    auto s = sqrt_mod(static_cast<int>(disc), p);
    if (!s) return std::nullopt;
    auto half = mod_inverse(2, p);
    if (!half) throw Error("eigenvalues: p must be odd");
    int l1 = static_cast<int>((static_cast<long long>(t) + *s) % p * *half % p);
    int l2 = static_cast<int>(((static_cast<long long>(t) - *s) % p + p) % p * *half % p);
    return std::pair(l1, l2);
}

bool is_diagonalizable_elt(const Mat2& x) {
    if (is_scalar(x)) return true;
    auto ev = eigenvalues(x);
    return ev && ev->first != ev->second;
}

}  // namespace gl2
