#pragma once

#include <map>
#include <string>
#include <vector>

#include "cwa/hscalar.hpp"
#include "cwa/rational.hpp"

namespace cwa {

// Sparse univariate polynomial over a commutative coefficient ring.
template <class C>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const C& c) {
        if (!coeff_is_zero(c)) terms_[0] = c;
    }
    static Polynomial variable() {
        Polynomial p;
        p.terms_[1] = unit();
        return p;
    }
    static Polynomial monomial(int deg, const C& c) {
        Polynomial p;
        if (!coeff_is_zero(c)) terms_set(p.terms_, deg, c);
        return p;
    }

    const std::map<int, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    Polynomial& operator+=(const Polynomial& o) {
        for (auto& [d, c] : o.terms_) add_to(d, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (auto& [d, c] : o.terms_) add_to(d, neg(c));
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        for (auto& [da, ca] : a.terms_)
            for (auto& [db, cb] : b.terms_) r.add_to(da + db, ca * cb);
        return r;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    friend Polynomial operator*(const Polynomial& a, const C& c) {
        Polynomial r;
        for (auto& [d, ca] : a.terms_) r.add_to(d, ca * c);
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // p(x + shift)
    Polynomial shifted(const C& shift) const {
        Polynomial x_plus = variable() + Polynomial(shift);
        Polynomial r, pw(unit());
        // Horner from the top keeps this O(deg^2) with no power table.
        for (auto it = terms_.rbegin(); it != terms_.rend();) {
            int d = it->first;
            r += Polynomial(it->second);
            ++it;
            int next = (it == terms_.rend()) ? 0 : it->first;
            for (int k = 0; k < d - next; ++k) r *= x_plus;
        }
        return r;
    }

    C eval(const C& x) const {
        C acc{};
        int top = degree();
        for (int d = top; d >= 0; --d) {
            acc = acc * x;
            auto it = terms_.find(d);
            if (it != terms_.end()) acc = acc + it->second;
        }
        return acc;
    }

    void add_to(int deg, const C& c) {
        if (coeff_is_zero(c)) return;
        auto it = terms_.find(deg);
        if (it == terms_.end()) {
            terms_.emplace(deg, c);
        } else {
            it->second = it->second + c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

private:
    static bool coeff_is_zero(const C& c) {
        if constexpr (std::is_same_v<C, HScalar>)
            return c.is_zero();
        else
            return c == 0;
    }
    static C neg(const C& c) {
        if constexpr (std::is_same_v<C, HScalar>)
            return -c;
        else
            return C(0) - c;
    }
    static C unit() {
        if constexpr (std::is_same_v<C, HScalar>)
            return HScalar::one();
        else
            return C(1);
    }
    static void terms_set(std::map<int, C>& m, int d, const C& c) { m.emplace(d, c); }

    std::map<int, C> terms_;
};

using Poly = Polynomial<Rat>;
using HPoly = Polynomial<HScalar>;

std::string poly_str(const Poly& p, const std::string& var = "h");

}  // namespace cwa
