#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwa/hscalar.hpp"

namespace cwa {

// Exponent vector of a normal-ordered word x^a y^b: all x-generators to the
// left of all y-generators, distinct indices commuting.
struct Monomial {
    std::vector<int> xe, ye;

    explicit Monomial(int rank = 0) : xe(rank, 0), ye(rank, 0) {}
    Monomial(std::vector<int> x, std::vector<int> y) : xe(std::move(x)), ye(std::move(y)) {}

    int rank() const { return static_cast<int>(xe.size()); }
    bool is_one() const {
        for (int e : xe)
            if (e) return false;
        for (int e : ye)
            if (e) return false;
        return true;
    }
    // Sum of generator exponents; the h^(1/2) exponent of the coefficient is
    // added separately when grading by the F-action.
    int generator_weight() const {
        int w = 0;
        for (int e : xe) w += e;
        for (int e : ye) w += e;
        return w;
    }

    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.xe != b.xe) return a.xe < b.xe;
        return a.ye < b.ye;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.xe == b.xe && a.ye == b.ye;
    }
};

// Per-generator invertibility flags. Chart discipline: at most one of x_i, y_i
// may be flagged at any index.
struct LocMask {
    std::uint32_t x_inv = 0;
    std::uint32_t y_inv = 0;

    bool x(int i) const { return (x_inv >> i) & 1u; }
    bool y(int i) const { return (y_inv >> i) & 1u; }
    void set_x(int i) { x_inv |= (1u << i); }
    void set_y(int i) { y_inv |= (1u << i); }
    bool disciplined() const { return (x_inv & y_inv) == 0; }
    friend bool operator==(const LocMask& a, const LocMask& b) {
        return a.x_inv == b.x_inv && a.y_inv == b.y_inv;
    }
};

// Union of two masks; throws IncompatibleMask if the union breaks chart
// discipline.
LocMask mask_union(const LocMask& a, const LocMask& b);

class SymbolPoly;

// Normal-ordered element of the rank-l Weyl algebra over HScalar, with
// [y_i, x_j] = delta_ij h and optional localization at flagged generators.
// Values are immutable in spirit: every operation returns a fresh element.
class WeylElement {
public:
    explicit WeylElement(int rank = 1, LocMask mask = {}) : rank_(rank), mask_(mask) {}

    static WeylElement zero(int rank, LocMask mask = {}) { return WeylElement(rank, mask); }
    static WeylElement scalar(int rank, const HScalar& c, LocMask mask = {});
    static WeylElement monomial(int rank, const Monomial& m, const HScalar& c = HScalar::one(),
                                LocMask mask = {});
    // x_i^e (i is 0-based)
    static WeylElement x(int rank, int i, int e = 1, LocMask mask = {});
    static WeylElement y(int rank, int i, int e = 1, LocMask mask = {});

    int rank() const { return rank_; }
    const LocMask& mask() const { return mask_; }
    const std::map<Monomial, HScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Additive accumulation; validates exponent signs against the mask.
    void add_term(const Monomial& m, const HScalar& c);

    WeylElement with_mask(const LocMask& m) const;

    friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator-(const WeylElement& a);
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend WeylElement operator*(const HScalar& c, const WeylElement& a);
    friend WeylElement operator*(const WeylElement& a, const HScalar& c);
    WeylElement pow(int n) const;  // n >= 0

    // Inverse of a single-term monomial all of whose generators are flagged
    // invertible.
    WeylElement monomial_inverse() const;

    // Equality is equality of term data; the mask is bookkeeping for which
    // localized algebra the element is read in.
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

    // Order-m symbol: the h^{-m} part as a commutative polynomial, scaled by
    // h^{-m}. Throws FiltrationViolation if any term lies below h^{-m}.
    SymbolPoly symbol(int m) const;

    // F-action weight (wt x_i = wt y_i = wt h^(1/2) = 1), nullopt when the
    // element mixes weights.
    std::optional<int> f_weight() const;

    std::string str() const;

private:
    int rank_;
    LocMask mask_;
    std::map<Monomial, HScalar> terms_;
};

WeylElement commutator(const WeylElement& a, const WeylElement& b);

// Commutative polynomial in the classical symbols (one pair per index), with
// HScalar coefficients. Negative exponents are allowed so that symbols of
// localized sections can be expressed.
class SymbolPoly {
public:
    explicit SymbolPoly(int rank = 1) : rank_(rank) {}

    static SymbolPoly scalar(int rank, const HScalar& c);
    static SymbolPoly monomial(int rank, const Monomial& m, const HScalar& c = HScalar::one());
    static SymbolPoly x(int rank, int i, int e = 1);
    static SymbolPoly xi(int rank, int i, int e = 1);

    int rank() const { return rank_; }
    const std::map<Monomial, HScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const HScalar& c);

    friend SymbolPoly operator+(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator-(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator-(const SymbolPoly& a);
    friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator*(const HScalar& c, const SymbolPoly& a);
    friend bool operator==(const SymbolPoly& a, const SymbolPoly& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymbolPoly& a, const SymbolPoly& b) { return !(a == b); }

    SymbolPoly d_x(int i) const;
    SymbolPoly d_xi(int i) const;

    bool has_negative_exponent() const;

    // Standard-ordering quantization x^a xi^b -> x^a y^b; the localization
    // mask is inferred from negative exponents.
    WeylElement normal_order() const;

    std::string str() const;

private:
    int rank_;
    std::map<Monomial, HScalar> terms_;
};

// The standard-ordered star product evaluated on commutative symbols:
//   f o g = sum_alpha h^|alpha| (1/alpha!) d_xi^alpha f . d_x^alpha g,
// returned as a normal-ordered element. Agrees with operator* on
// normal-ordered inputs; kept as an independent oracle for it.
WeylElement star_product(const SymbolPoly& f, const SymbolPoly& g);

SymbolPoly poisson_bracket(const SymbolPoly& f, const SymbolPoly& g);

// Canonical text grammar shared by rendering and parsing, e.g.
//   "3/2*h^(1/2)*x1^2*y3^-1 - 2*x1"
// Generator indices are 1-based in the text form.
std::string render(const WeylElement& u);
std::string render(const SymbolPoly& f);
WeylElement parse_weyl(const std::string& text, int rank);
SymbolPoly parse_symbol(const std::string& text, int rank);

}  // namespace cwa
