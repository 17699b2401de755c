#include "akfock/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace akfock {

namespace {

using Coeff = LaurentPoly::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow in addition");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow in multiplication");
    return r;
}

Coeff checked_neg(Coeff a) {
    Coeff r;
    if (__builtin_sub_overflow(Coeff{0}, a, &r)) throw std::overflow_error("Laurent coefficient overflow in negation");
    return r;
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff c) {
    if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(int exp, Coeff c) {
    LaurentPoly p;
    if (c != 0) {
        p.lo_ = exp;
        p.coeffs_.push_back(c);
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Coeff>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

Coeff LaurentPoly::coeff(int exp) const {
    if (coeffs_.empty() || exp < lo_ || exp > max_exp()) return 0;
    return coeffs_[static_cast<std::size_t>(exp - lo_)];
}

std::map<int, Coeff> LaurentPoly::terms() const {
    std::map<int, Coeff> out;
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
        if (coeffs_[t] != 0) out.emplace(lo_ + static_cast<int>(t), coeffs_[t]);
    return out;
}

void LaurentPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        lo_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) lo_ = 0;
}

void LaurentPoly::add_term(int exp, Coeff c) {
    if (c == 0) return;
    if (coeffs_.empty()) {
        lo_ = exp;
        coeffs_.push_back(c);
        return;
    }
    if (exp < lo_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(lo_ - exp), 0);
        lo_ = exp;
    } else if (exp > max_exp()) {
        coeffs_.resize(static_cast<std::size_t>(exp - lo_ + 1), 0);
    }
    auto& slot = coeffs_[static_cast<std::size_t>(exp - lo_)];
    slot = checked_add(slot, c);
    if (slot == 0) normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    if (q.coeffs_.empty()) return *this;
    if (coeffs_.empty()) return *this = q;
    const int new_lo = std::min(lo_, q.lo_);
    const int new_hi = std::max(max_exp(), q.max_exp());
    if (new_lo < lo_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(lo_ - new_lo), 0);
    lo_ = new_lo;
    coeffs_.resize(static_cast<std::size_t>(new_hi - new_lo + 1), 0);
    for (std::size_t t = 0; t < q.coeffs_.size(); ++t) {
        auto& slot = coeffs_[static_cast<std::size_t>(q.lo_ - lo_) + t];
        slot = checked_add(slot, q.coeffs_[t]);
    }
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) { return *this += -q; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = checked_neg(c);
    return p;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly out;
    if (p.coeffs_.empty() || q.coeffs_.empty()) return out;
    out.lo_ = p.lo_ + q.lo_;
    out.coeffs_.assign(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
    for (std::size_t a = 0; a < p.coeffs_.size(); ++a) {
        if (p.coeffs_[a] == 0) continue;
        for (std::size_t b = 0; b < q.coeffs_.size(); ++b) {
            auto& slot = out.coeffs_[a + b];
            slot = checked_add(slot, checked_mul(p.coeffs_[a], q.coeffs_[b]));
        }
    }
    out.normalize();
    return out;
}

LaurentPoly LaurentPoly::shifted(int s) const {
    LaurentPoly p = *this;
    if (!p.coeffs_.empty()) p.lo_ += s;
    return p;
}

LaurentPoly LaurentPoly::scaled(Coeff c) const {
    if (c == 0) return {};
    LaurentPoly p = *this;
    for (auto& x : p.coeffs_) x = checked_mul(x, c);
    return p;
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }
LaurentPoly scalar_mul(Coeff c, const LaurentPoly& p) { return p.scaled(c); }

LaurentPoly bar(const LaurentPoly& p) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term(-e, c);
    return out;
}

SymSplit sym_part(const LaurentPoly& p) {
    SymSplit s;
    for (const auto& [e, c] : p.terms()) {
        if (e > 0) continue;
        s.alpha.add_term(e, c);
        if (e < 0) s.alpha.add_term(-e, c);
    }
    s.remainder = p - s.alpha;
    return s;
}

bool is_bar_invariant(const LaurentPoly& p) { return bar(p) == p; }

bool is_in_vZ(const LaurentPoly& p) { return p.is_zero() || p.min_exp() >= 1; }

bool has_nonnegative_coefficients(const LaurentPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (c < 0) return false;
    return true;
}

Coeff eval_at_1(const LaurentPoly& p) {
    Coeff s = 0;
    for (const auto& [e, c] : p.terms()) s = checked_add(s, c);
    return s;
}

LaurentPoly quantum_factorial(int m) {
    LaurentPoly out(1);
    for (int t = 1; t <= m; ++t) {
        // [t] = v^{t-1} + v^{t-3} + ... + v^{1-t}
        LaurentPoly qt;
        for (int k = 0; k < t; ++k) qt.add_term(t - 1 - 2 * k, 1);
        out = out * qt;
    }
    return out;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Coeff mag = c;
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (mag < 0) mag = -mag;
        if (e == 0) {
            s += std::to_string(mag);
        } else {
            if (mag != 1) s += std::to_string(mag);
            s += "v";
            if (e != 1) s += "^" + std::to_string(e);
        }
        first = false;
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

}  // namespace akfock
