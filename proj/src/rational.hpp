#pragma once

// Exact arithmetic for roots of unity, written additively as rationals mod 1,
// plus the small integer linear algebra (Smith normal form, linear solving
// over Z/M) that the cohomology solvers are built on.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fc {

// Error taxonomy shared by the whole library. The code mirrors the CLI exit
// codes: 1 = parse, 2 = math domain, 3 = fixture mismatch, 4 = internal.
enum class ErrorCode { Parse = 1, MathDomain = 2, FixtureMismatch = 3, Internal = 4 };

// Specific failure kinds surfaced by the algebra layers.
enum class ErrKind {
    Generic,
    NotACocycle,
    PreconditionViolated,
    InternalInvariantViolation,
    NotInvertible,
    NotAGroup,
    BoundExceeded,
    NotCoprime,
    SplitObstruction,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg, ErrKind kind = ErrKind::Generic)
        : std::runtime_error(msg), code_(code), kind_(kind) {}
    ErrorCode code() const { return code_; }
    ErrKind kind() const { return kind_; }

private:
    ErrorCode code_;
    ErrKind kind_;
};

inline Error parse_error(const std::string& msg) { return Error(ErrorCode::Parse, msg); }
inline Error math_error(const std::string& msg, ErrKind kind = ErrKind::Generic) {
    return Error(ErrorCode::MathDomain, msg, kind);
}
inline Error internal_error(const std::string& msg, ErrKind kind = ErrKind::Generic) {
    return Error(ErrorCode::Internal, msg, kind);
}

// A root of unity x = e^{2 pi i num/den}, stored as the canonical reduced
// fraction num/den mod 1 with 0 <= num < den. The value 1 is 0/1. In
// characteristic p the denominator must be coprime to p (k^x has no
// p-torsion); the characteristic is a context value checked at construction.
struct RootExp {
    long long num = 0;
    long long den = 1;

    bool operator==(const RootExp&) const = default;
    bool is_zero() const { return num == 0; }
};

// Total order used for canonical minima: compare as rational numbers.
bool re_less(const RootExp& x, const RootExp& y);

RootExp re_make(long long num, long long den, int characteristic = 0);
RootExp re_add(const RootExp& x, const RootExp& y);
RootExp re_sub(const RootExp& x, const RootExp& y);
RootExp re_neg(const RootExp& x);
RootExp re_scale(long long k, const RootExp& x);

// Multiplicative order of the root of unity; equals den in canonical form.
long long re_order(const RootExp& x);

std::string re_str(const RootExp& x);
RootExp re_parse(const std::string& s, int characteristic = 0);

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;  // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    bool operator==(const IntMatrix&) const = default;
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
long long mat_det(const IntMatrix& m);  // small matrices only (expansion by elimination)

struct SnfResult {
    IntMatrix u, s, v;  // u * m * v = s, u and v unimodular, s diagonal d1 | d2 | ...
};

SnfResult smith_normal_form(const IntMatrix& m);

// Solves m * x = b (mod modulus). Returns the canonical particular solution
// obtained by gcd elimination to echelon form mod modulus followed by
// back-substitution with minimal non-negative representatives, or nullopt if
// the system has no solution.
std::optional<std::vector<long long>> solve_linear_mod(const IntMatrix& m,
                                                       const std::vector<long long>& b,
                                                       long long modulus);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

// Strips every factor of p from n (identity when p = 0).
long long prime_to_part(long long n, int p);

}  // namespace fc
