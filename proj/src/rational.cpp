#include "rational.hpp"

#include <numeric>
#include <tuple>

namespace fc {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

long long prime_to_part(long long n, int p) {
    if (p == 0 || n == 0) return n;
    while (n % p == 0) n /= p;
    return n;
}

static long long mod_pos(long long x, long long m) {
    long long r = x % m;
    return r < 0 ? r + m : r;
}

RootExp re_make(long long num, long long den, int characteristic) {
    if (den == 0) throw math_error("root exponent with zero denominator");
    if (den < 0) { den = -den; num = -num; }
    num = mod_pos(num, den);
    long long g = std::gcd(num, den);
    if (g == 0) g = den;  // num == 0
    num /= g;
    den /= g;
    if (characteristic != 0 && den % characteristic == 0)
        throw math_error("root of unity order divisible by the characteristic");
    return RootExp{num, den};
}

bool re_less(const RootExp& x, const RootExp& y) {
    return x.num * y.den < y.num * x.den;
}

RootExp re_add(const RootExp& x, const RootExp& y) {
    long long d = std::lcm(x.den, y.den);
    return re_make(x.num * (d / x.den) + y.num * (d / y.den), d);
}

RootExp re_sub(const RootExp& x, const RootExp& y) { return re_add(x, re_neg(y)); }

RootExp re_neg(const RootExp& x) { return re_make(-x.num, x.den); }

RootExp re_scale(long long k, const RootExp& x) { return re_make(k * x.num, x.den); }

long long re_order(const RootExp& x) { return x.den; }

std::string re_str(const RootExp& x) {
    return std::to_string(x.num) + "/" + std::to_string(x.den);
}

RootExp re_parse(const std::string& s, int characteristic) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            size_t used = 0;
            long long n = std::stoll(s, &used);
            if (used != s.size()) throw parse_error("bad root exponent: " + s);
            return re_make(n, 1, characteristic);
        }
        size_t u1 = 0, u2 = 0;
        long long n = std::stoll(s.substr(0, slash), &u1);
        long long d = std::stoll(s.substr(slash + 1), &u2);
        if (u1 != slash || u2 != s.size() - slash - 1)
            throw parse_error("bad root exponent: " + s);
        return re_make(n, d, characteristic);
    } catch (const std::invalid_argument&) {
        throw parse_error("bad root exponent: " + s);
    } catch (const std::out_of_range&) {
        throw parse_error("root exponent out of range: " + s);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw internal_error("matrix size mismatch in mat_mul");
    IntMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; i++)
        for (int k = 0; k < x.cols; k++) {
            long long xv = x.at(i, k);
            if (xv == 0) continue;
            for (int j = 0; j < y.cols; j++) r.at(i, j) += xv * y.at(k, j);
        }
    return r;
}

long long mat_det(const IntMatrix& m) {
    if (m.rows != m.cols) throw internal_error("determinant of non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    // Fraction-free Bareiss elimination.
    IntMatrix a = m;
    long long sign = 1, prev = 1;
    for (int k = 0; k < n - 1; k++) {
        if (a.at(k, k) == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; i++)
                if (a.at(i, k) != 0) { swap = i; break; }
            if (swap < 0) return 0;
            for (int j = 0; j < n; j++) std::swap(a.at(k, j), a.at(swap, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++)
            for (int j = k + 1; j < n; j++)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult r{IntMatrix::identity(m.rows), m, IntMatrix::identity(m.cols)};
    IntMatrix& s = r.s;
    auto row_op = [&](int i, int j, long long c) {  // row_i += c * row_j
        for (int k = 0; k < s.cols; k++) s.at(i, k) += c * s.at(j, k);
        for (int k = 0; k < r.u.cols; k++) r.u.at(i, k) += c * r.u.at(j, k);
    };
    auto col_op = [&](int i, int j, long long c) {  // col_i += c * col_j
        for (int k = 0; k < s.rows; k++) s.at(k, i) += c * s.at(k, j);
        for (int k = 0; k < r.v.rows; k++) r.v.at(k, i) += c * r.v.at(k, j);
    };
    auto row_swap = [&](int i, int j) {
        for (int k = 0; k < s.cols; k++) std::swap(s.at(i, k), s.at(j, k));
        for (int k = 0; k < r.u.cols; k++) std::swap(r.u.at(i, k), r.u.at(j, k));
    };
    auto col_swap = [&](int i, int j) {
        for (int k = 0; k < s.rows; k++) std::swap(s.at(k, i), s.at(k, j));
        for (int k = 0; k < r.v.rows; k++) std::swap(r.v.at(k, i), r.v.at(k, j));
    };
    auto row_negate = [&](int i) {
        for (int k = 0; k < s.cols; k++) s.at(i, k) = -s.at(i, k);
        for (int k = 0; k < r.u.cols; k++) r.u.at(i, k) = -r.u.at(i, k);
    };

    int n = std::min(s.rows, s.cols);
    for (int t = 0; t < n; t++) {
        // Move a nonzero pivot of minimal absolute value to (t, t).
        for (;;) {
            int pi = -1, pj = -1;
            long long best = 0;
            for (int i = t; i < s.rows; i++)
                for (int j = t; j < s.cols; j++) {
                    long long v = s.at(i, j) < 0 ? -s.at(i, j) : s.at(i, j);
                    if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
                }
            if (pi < 0) { pi = t; pj = t; }
            if (pi != t) row_swap(t, pi);
            if (pj != t) col_swap(t, pj);
            if (s.at(t, t) == 0) break;
            bool clean = true;
            for (int i = t + 1; i < s.rows; i++)
                if (s.at(i, t) != 0) { row_op(i, t, -(s.at(i, t) / s.at(t, t))); clean &= s.at(i, t) == 0; }
            for (int j = t + 1; j < s.cols; j++)
                if (s.at(t, j) != 0) { col_op(j, t, -(s.at(t, j) / s.at(t, t))); clean &= s.at(t, j) == 0; }
            if (!clean) continue;
            // Enforce divisibility of the remaining block by the pivot.
            long long d = s.at(t, t);
            bool fixed = false;
            for (int i = t + 1; i < s.rows && !fixed; i++)
                for (int j = t + 1; j < s.cols && !fixed; j++)
                    if (s.at(i, j) % d != 0) { row_op(t, i, 1); fixed = true; }
            if (!fixed) break;
        }
        if (s.at(t, t) < 0) row_negate(t);
    }
    return r;
}

std::optional<std::vector<long long>> solve_linear_mod(const IntMatrix& m,
                                                       const std::vector<long long>& b,
                                                       long long modulus) {
    if (static_cast<int>(b.size()) != m.rows) throw internal_error("rhs size mismatch");
    if (modulus <= 0) throw internal_error("non-positive modulus");
    int rows = m.rows, cols = m.cols;
    IntMatrix a = m;
    std::vector<long long> rhs = b;
    for (auto& x : a.a) x = mod_pos(x, modulus);
    for (auto& x : rhs) x = mod_pos(x, modulus);

    // Gcd elimination: reduce to echelon form where each pivot divides the
    // modulus, tracking the column used for each pivot row.
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; col++) {
        // Euclid across rows to make a single nonzero entry in this column.
        for (;;) {
            int best = -1;
            for (int i = row; i < rows; i++)
                if (a.at(i, col) != 0 && (best < 0 || a.at(i, col) < a.at(best, col))) best = i;
            if (best < 0) break;
            bool others = false;
            for (int i = row; i < rows; i++) {
                if (i == best || a.at(i, col) == 0) continue;
                long long q = a.at(i, col) / a.at(best, col);
                for (int j = col; j < cols; j++)
                    a.at(i, j) = mod_pos(a.at(i, j) - q * a.at(best, j), modulus);
                rhs[i] = mod_pos(rhs[i] - q * rhs[best], modulus);
                if (a.at(i, col) != 0) others = true;
            }
            if (!others) {
                if (best != row) {
                    for (int j = col; j < cols; j++) std::swap(a.at(best, j), a.at(row, j));
                    std::swap(rhs[best], rhs[row]);
                }
                break;
            }
        }
        if (a.at(row, col) != 0) {
            pivot_col.push_back(col);
            row++;
        }
    }
    // Consistency of the zero rows.
    for (int i = row; i < rows; i++)
        if (rhs[i] % modulus != 0) return std::nullopt;

    std::vector<long long> x(cols, 0);
    for (int i = row - 1; i >= 0; i--) {
        int col = pivot_col[i];
        long long acc = rhs[i];
        for (int j = col + 1; j < cols; j++)
            acc = mod_pos(acc - a.at(i, j) * x[j], modulus);
        // Solve p * x = acc (mod modulus); solvable iff gcd(p, modulus) | acc.
        long long p = a.at(i, col);
        long long g = std::gcd(p, modulus);
        if (acc % g != 0) return std::nullopt;
        long long m2 = modulus / g;
        // Inverse of p/g mod m2 via extended Euclid.
        long long x0 = 1, x1 = 0, r0 = mod_pos(p / g, m2), r1 = m2;
        while (r1 != 0) {
            long long q = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
            std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
        }
        x[col] = mod_pos((acc / g) % m2 * mod_pos(x0, m2), m2);
    }
    return x;
}

}  // namespace fc
