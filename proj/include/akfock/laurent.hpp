#pragma once

// Exact Laurent polynomials in v with 64-bit integer coefficients. Every
// arithmetic step is overflow-checked and throws std::overflow_error rather
// than wrapping.

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace akfock {

class LaurentPoly {
public:
    using Coeff = std::int64_t;

    LaurentPoly() = default;
    /// The constant polynomial c.
    LaurentPoly(Coeff c);  // NOLINT(google-explicit-constructor)
    /// c * v^exp.
    static LaurentPoly monomial(int exp, Coeff c = 1);
    static LaurentPoly from_terms(const std::map<int, Coeff>& terms);

    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of v^exp.
    Coeff coeff(int exp) const;
    /// Lowest and highest exponents with nonzero coefficient (zero poly: 0, -1).
    int min_exp() const { return lo_; }
    int max_exp() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
    /// Nonzero terms as exponent -> coefficient.
    std::map<int, Coeff> terms() const;

    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator-=(const LaurentPoly& q);
    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    LaurentPoly operator-() const;

    /// p * v^s.
    LaurentPoly shifted(int s) const;
    LaurentPoly scaled(Coeff c) const;
    /// Adds c * v^exp in place.
    void add_term(int exp, Coeff c);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void normalize();

    int lo_ = 0;
    std::vector<Coeff> coeffs_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly scalar_mul(LaurentPoly::Coeff c, const LaurentPoly& p);

/// v -> v^-1.
LaurentPoly bar(const LaurentPoly& p);

struct SymSplit {
    LaurentPoly alpha;
    LaurentPoly remainder;
};

/// The unique bar-invariant alpha agreeing with p in non-positive degrees,
/// and remainder = p - alpha, which lies in vZ[v].
SymSplit sym_part(const LaurentPoly& p);

bool is_bar_invariant(const LaurentPoly& p);
/// True when every exponent is at least 1 (the zero polynomial qualifies).
bool is_in_vZ(const LaurentPoly& p);
bool has_nonnegative_coefficients(const LaurentPoly& p);
LaurentPoly::Coeff eval_at_1(const LaurentPoly& p);
/// [m]! = prod_{t=1}^m (v^t - v^-t)/(v - v^-1).
LaurentPoly quantum_factorial(int m);

/// Ascending exponents, e.g. "v^-1 + 1 + 2v^3"; "0" for zero.
std::string to_string(const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace akfock
