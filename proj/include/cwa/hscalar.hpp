#pragma once

#include <map>
#include <string>

#include "cwa/rational.hpp"

namespace cwa {

// Finite Laurent polynomial in h^(1/2) with rational coefficients; the
// coefficient ring of every quantized object in this library. Exponents are
// stored in half-steps: the key k stands for h^(k/2). No root is ever taken,
// h^(1/2) is a formal grading variable.
class HScalar {
public:
    HScalar() = default;

    static HScalar rational(const Rat& q) {
        HScalar s;
        if (q != 0) s.terms_[0] = q;
        return s;
    }
    static HScalar one() { return rational(1); }
    // q * h^(half/2)
    static HScalar h_half(int half, const Rat& q = 1) {
        HScalar s;
        if (q != 0) s.terms_[half] = q;
        return s;
    }
    // q * h^e with integer e
    static HScalar h_pow(int e, const Rat& q = 1) { return h_half(2 * e, q); }

    const std::map<int, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }
    Rat rational_value() const {
        if (terms_.empty()) return Rat(0);
        if (!is_rational()) fail(errc::bad_argument, "scalar has nonzero h-degree: " + str());
        return terms_.begin()->second;
    }

    // Single Laurent monomial in h^(1/2)?
    bool is_monomial() const { return terms_.size() == 1; }
    int min_half_exponent() const {
        if (terms_.empty()) fail(errc::bad_argument, "zero scalar has no h-degree");
        return terms_.begin()->first;
    }

    HScalar inverse() const {
        if (!is_monomial()) fail(errc::bad_argument, "scalar not invertible: " + str());
        auto [k, q] = *terms_.begin();
        return h_half(-k, Rat(1) / q);
    }

    HScalar& operator+=(const HScalar& o) {
        for (auto& [k, q] : o.terms_) {
            Rat& slot = terms_[k];
            slot += q;
            if (slot == 0) terms_.erase(k);
        }
        return *this;
    }
    HScalar& operator-=(const HScalar& o) {
        for (auto& [k, q] : o.terms_) {
            Rat& slot = terms_[k];
            slot -= q;
            if (slot == 0) terms_.erase(k);
        }
        return *this;
    }
    friend HScalar operator+(HScalar a, const HScalar& b) { return a += b; }
    friend HScalar operator-(HScalar a, const HScalar& b) { return a -= b; }
    friend HScalar operator-(const HScalar& a) {
        HScalar r;
        for (auto& [k, q] : a.terms_) r.terms_[k] = -q;
        return r;
    }

    friend HScalar operator*(const HScalar& a, const HScalar& b) {
        HScalar r;
        for (auto& [ka, qa] : a.terms_)
            for (auto& [kb, qb] : b.terms_) {
                Rat& slot = r.terms_[ka + kb];
                slot += qa * qb;
                if (slot == 0) r.terms_.erase(ka + kb);
            }
        return r;
    }
    HScalar& operator*=(const HScalar& o) { return *this = *this * o; }

    friend HScalar operator*(const HScalar& a, const Rat& q) {
        HScalar r;
        if (q == 0) return r;
        for (auto& [k, c] : a.terms_) r.terms_[k] = c * q;
        return r;
    }
    friend HScalar operator*(const Rat& q, const HScalar& a) { return a * q; }

    friend bool operator==(const HScalar& a, const HScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const HScalar& a, const HScalar& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<int, Rat> terms_;  // half-exponent of h -> nonzero coefficient
};

}  // namespace cwa
