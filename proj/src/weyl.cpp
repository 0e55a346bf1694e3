#include "cwa/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cwa {

namespace {

// n(n-1)...(n-k+1) over the integers, n of either sign.
Rat falling(long long n, int k) {
    Rat r(1);
    for (int t = 0; t < k; ++t) r *= Rat(n - t);
    return r;
}

Rat factorial(int k) {
    Rat r(1);
    for (int t = 2; t <= k; ++t) r *= t;
    return r;
}

void check_rank(int a, int b) {
    if (a != b) fail(errc::bad_argument, "rank mismatch");
}

}  // namespace

LocMask mask_union(const LocMask& a, const LocMask& b) {
    LocMask u{a.x_inv | b.x_inv, a.y_inv | b.y_inv};
    if (!u.disciplined())
        fail(errc::incompatible_mask, "x_i and y_i flagged invertible at the same index");
    return u;
}

WeylElement WeylElement::scalar(int rank, const HScalar& c, LocMask mask) {
    WeylElement e(rank, mask);
    e.add_term(Monomial(rank), c);
    return e;
}

WeylElement WeylElement::monomial(int rank, const Monomial& m, const HScalar& c, LocMask mask) {
    WeylElement e(rank, mask);
    e.add_term(m, c);
    return e;
}

WeylElement WeylElement::x(int rank, int i, int e, LocMask mask) {
    Monomial m(rank);
    m.xe[i] = e;
    if (e < 0) mask.set_x(i);
    return monomial(rank, m, HScalar::one(), mask);
}

WeylElement WeylElement::y(int rank, int i, int e, LocMask mask) {
    Monomial m(rank);
    m.ye[i] = e;
    if (e < 0) mask.set_y(i);
    return monomial(rank, m, HScalar::one(), mask);
}

void WeylElement::add_term(const Monomial& m, const HScalar& c) {
    if (m.rank() != rank_) fail(errc::bad_argument, "monomial rank mismatch");
    if (c.is_zero()) return;
    for (int i = 0; i < rank_; ++i) {
        if (m.xe[i] < 0 && !mask_.x(i))
            fail(errc::mask_mismatch, "negative x-exponent at unflagged index " +
                                          std::to_string(i + 1));
        if (m.ye[i] < 0 && !mask_.y(i))
            fail(errc::mask_mismatch, "negative y-exponent at unflagged index " +
                                          std::to_string(i + 1));
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylElement WeylElement::with_mask(const LocMask& m) const {
    WeylElement out(rank_, m);
    for (auto& [mono, c] : terms_) out.add_term(mono, c);
    return out;
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
    check_rank(a.rank_, b.rank_);
    WeylElement out(a.rank_, mask_union(a.mask_, b.mask_));
    for (auto& [m, c] : a.terms_) out.add_term(m, c);
    for (auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) { return a + (-b); }

WeylElement operator-(const WeylElement& a) {
    WeylElement out(a.rank_, a.mask_);
    for (auto& [m, c] : a.terms_) out.add_term(m, -c);
    return out;
}

WeylElement operator*(const HScalar& c, const WeylElement& a) {
    WeylElement out(a.rank_, a.mask_);
    for (auto& [m, cm] : a.terms_) out.add_term(m, c * cm);
    return out;
}

WeylElement operator*(const WeylElement& a, const HScalar& c) { return c * a; }

// Normal-ordered product. Per index, y^b x^c is rewritten by the finite sum
//   y^b x^c = sum_k  fall(b,k) fall(c,k) / k!  h^k  x^{c-k} y^{b-k},
// pivoting on whichever of b, c is a nonnegative integer; distinct indices
// commute, so the index contributions multiply.
WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    check_rank(a.rank_, b.rank_);
    const int rank = a.rank_;
    WeylElement out(rank, mask_union(a.mask_, b.mask_));

    for (auto& [ma, ca] : a.terms_) {
        for (auto& [mb, cb] : b.terms_) {
            // bounds for the rewriting at each index
            std::vector<int> bound(rank);
            for (int i = 0; i < rank; ++i) {
                int bexp = ma.ye[i], cexp = mb.xe[i];
                if (bexp >= 0 && cexp >= 0)
                    bound[i] = std::min(bexp, cexp);
                else if (bexp >= 0)
                    bound[i] = bexp;
                else if (cexp >= 0)
                    bound[i] = cexp;
                else
                    fail(errc::unorderable_term,
                         "both exponents negative at index " + std::to_string(i + 1));
            }
            HScalar cab = ca * cb;
            std::vector<int> k(rank, 0);
            while (true) {
                Rat coef(1);
                int ktot = 0;
                for (int i = 0; i < rank; ++i) {
                    if (k[i]) {
                        coef *= falling(ma.ye[i], k[i]) * falling(mb.xe[i], k[i]) /
                                factorial(k[i]);
                        ktot += k[i];
                    }
                }
                if (coef != 0) {
                    Monomial m(rank);
                    for (int i = 0; i < rank; ++i) {
                        m.xe[i] = ma.xe[i] + mb.xe[i] - k[i];
                        m.ye[i] = ma.ye[i] + mb.ye[i] - k[i];
                    }
                    out.add_term(m, cab * HScalar::h_pow(ktot, coef));
                }
                int i = 0;
                while (i < rank && k[i] == bound[i]) k[i++] = 0;
                if (i == rank) break;
                ++k[i];
            }
        }
    }
    return out;
}

WeylElement WeylElement::pow(int n) const {
    if (n < 0) fail(errc::bad_argument, "negative power");
    WeylElement acc = WeylElement::scalar(rank_, HScalar::one(), mask_);
    for (int t = 0; t < n; ++t) acc = acc * (*this);
    return acc;
}

WeylElement WeylElement::monomial_inverse() const {
    if (terms_.size() != 1) fail(errc::bad_argument, "inverse of a non-monomial");
    auto& [m, c] = *terms_.begin();
    LocMask need = mask_;
    Monomial inv(rank_);
    for (int i = 0; i < rank_; ++i) {
        if (m.xe[i] != 0) {
            if (!mask_.x(i))
                fail(errc::mask_mismatch, "x" + std::to_string(i + 1) + " not invertible");
            inv.xe[i] = -m.xe[i];
        }
        if (m.ye[i] != 0) {
            if (!mask_.y(i))
                fail(errc::mask_mismatch, "y" + std::to_string(i + 1) + " not invertible");
            inv.ye[i] = -m.ye[i];
        }
    }
    return WeylElement::monomial(rank_, inv, c.inverse(), need);
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

SymbolPoly WeylElement::symbol(int m) const {
    SymbolPoly out(rank_);
    for (auto& [mono, c] : terms_) {
        for (auto& [half, q] : c.terms()) {
            if (half < -2 * m)
                fail(errc::filtration_violation,
                     "term below h^-" + std::to_string(m) + ": " + str());
            if (half == -2 * m) out.add_term(mono, HScalar::h_half(-2 * m, q));
        }
    }
    return out;
}

std::optional<int> WeylElement::f_weight() const {
    std::optional<int> w;
    for (auto& [mono, c] : terms_) {
        int base = mono.generator_weight();
        for (auto& [half, q] : c.terms()) {
            (void)q;
            int tw = base + half;
            if (!w)
                w = tw;
            else if (*w != tw)
                return std::nullopt;
        }
    }
    return w;  // nullopt only for the zero element
}

// ---------------------------------------------------------------------------
// SymbolPoly

SymbolPoly SymbolPoly::scalar(int rank, const HScalar& c) {
    SymbolPoly p(rank);
    p.add_term(Monomial(rank), c);
    return p;
}

SymbolPoly SymbolPoly::monomial(int rank, const Monomial& m, const HScalar& c) {
    SymbolPoly p(rank);
    p.add_term(m, c);
    return p;
}

SymbolPoly SymbolPoly::x(int rank, int i, int e) {
    Monomial m(rank);
    m.xe[i] = e;
    return monomial(rank, m);
}

SymbolPoly SymbolPoly::xi(int rank, int i, int e) {
    Monomial m(rank);
    m.ye[i] = e;
    return monomial(rank, m);
}

void SymbolPoly::add_term(const Monomial& m, const HScalar& c) {
    if (m.rank() != rank_) fail(errc::bad_argument, "monomial rank mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolPoly operator+(const SymbolPoly& a, const SymbolPoly& b) {
    check_rank(a.rank_, b.rank_);
    SymbolPoly out(a.rank_);
    for (auto& [m, c] : a.terms_) out.add_term(m, c);
    for (auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

SymbolPoly operator-(const SymbolPoly& a, const SymbolPoly& b) { return a + (-b); }

SymbolPoly operator-(const SymbolPoly& a) {
    SymbolPoly out(a.rank_);
    for (auto& [m, c] : a.terms_) out.add_term(m, -c);
    return out;
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
    check_rank(a.rank_, b.rank_);
    SymbolPoly out(a.rank_);
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) {
            Monomial m(a.rank_);
            for (int i = 0; i < a.rank_; ++i) {
                m.xe[i] = ma.xe[i] + mb.xe[i];
                m.ye[i] = ma.ye[i] + mb.ye[i];
            }
            out.add_term(m, ca * cb);
        }
    return out;
}

SymbolPoly operator*(const HScalar& c, const SymbolPoly& a) {
    SymbolPoly out(a.rank_);
    for (auto& [m, cm] : a.terms_) out.add_term(m, c * cm);
    return out;
}

SymbolPoly SymbolPoly::d_x(int i) const {
    SymbolPoly out(rank_);
    for (auto& [m, c] : terms_) {
        if (m.xe[i] == 0) continue;
        Monomial d = m;
        d.xe[i] -= 1;
        out.add_term(d, c * Rat(m.xe[i]));
    }
    return out;
}

SymbolPoly SymbolPoly::d_xi(int i) const {
    SymbolPoly out(rank_);
    for (auto& [m, c] : terms_) {
        if (m.ye[i] == 0) continue;
        Monomial d = m;
        d.ye[i] -= 1;
        out.add_term(d, c * Rat(m.ye[i]));
    }
    return out;
}

bool SymbolPoly::has_negative_exponent() const {
    for (auto& [m, c] : terms_) {
        (void)c;
        for (int e : m.xe)
            if (e < 0) return true;
        for (int e : m.ye)
            if (e < 0) return true;
    }
    return false;
}

WeylElement SymbolPoly::normal_order() const {
    LocMask mask;
    for (auto& [m, c] : terms_) {
        (void)c;
        for (int i = 0; i < rank_; ++i) {
            if (m.xe[i] < 0) mask.set_x(i);
            if (m.ye[i] < 0) mask.set_y(i);
        }
    }
    if (!mask.disciplined()) fail(errc::incompatible_mask, "symbol not chart-disciplined");
    WeylElement out(rank_, mask);
    for (auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

WeylElement star_product(const SymbolPoly& f, const SymbolPoly& g) {
    check_rank(f.rank(), g.rank());
    if (f.has_negative_exponent() || g.has_negative_exponent())
        fail(errc::bad_argument, "star product is defined on unlocalized symbols");
    const int rank = f.rank();

    // alpha runs over multi-indices up to the xi-degree of f per index
    std::vector<int> bound(rank, 0);
    for (auto& [m, c] : f.terms()) {
        (void)c;
        for (int i = 0; i < rank; ++i) bound[i] = std::max(bound[i], m.ye[i]);
    }

    SymbolPoly acc(rank);
    std::vector<int> alpha(rank, 0);
    while (true) {
        SymbolPoly df = f, dg = g;
        Rat fact(1);
        int tot = 0;
        for (int i = 0; i < rank; ++i) {
            for (int t = 0; t < alpha[i]; ++t) {
                df = df.d_xi(i);
                dg = dg.d_x(i);
            }
            fact *= factorial(alpha[i]);
            tot += alpha[i];
        }
        if (!df.is_zero() && !dg.is_zero())
            acc = acc + HScalar::h_pow(tot, Rat(1) / fact) * (df * dg);
        int i = 0;
        while (i < rank && alpha[i] == bound[i]) alpha[i++] = 0;
        if (i == rank) break;
        ++alpha[i];
    }
    return acc.normal_order();
}

SymbolPoly poisson_bracket(const SymbolPoly& f, const SymbolPoly& g) {
    check_rank(f.rank(), g.rank());
    SymbolPoly out(f.rank());
    for (int i = 0; i < f.rank(); ++i)
        out = out + f.d_xi(i) * g.d_x(i) - f.d_x(i) * g.d_xi(i);
    return out;
}

// ---------------------------------------------------------------------------
// text form

namespace {

void render_piece(std::ostringstream& os, const Monomial& m, int half, const Rat& mag) {
    bool printed = false;
    bool bare = m.is_one() && half == 0;
    if (bare || mag != 1) {
        os << numerator(mag).str();
        if (denominator(mag) != 1) os << "/" << denominator(mag).str();
        printed = true;
    }
    auto sep = [&] {
        if (printed) os << "*";
        printed = true;
    };
    if (half != 0) {
        sep();
        if (half == 2)
            os << "h";
        else if (half % 2 == 0)
            os << "h^" << half / 2;
        else
            os << "h^(" << half << "/2)";
    }
    for (int i = 0; i < m.rank(); ++i) {
        if (m.xe[i] != 0) {
            sep();
            os << "x" << (i + 1);
            if (m.xe[i] != 1) os << "^" << m.xe[i];
        }
    }
    for (int i = 0; i < m.rank(); ++i) {
        if (m.ye[i] != 0) {
            sep();
            os << "y" << (i + 1);
            if (m.ye[i] != 1) os << "^" << m.ye[i];
        }
    }
}

std::string render_terms(const std::map<Monomial, HScalar>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms) {
        for (auto& [half, q] : c.terms()) {
            Rat mag = q < 0 ? Rat(-q) : q;
            if (first) {
                if (q < 0) os << "-";
                first = false;
            } else {
                os << (q < 0 ? " - " : " + ");
            }
            render_piece(os, m, half, mag);
        }
    }
    return os.str();
}

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    int rank;

    explicit Parser(const std::string& text, int r) : s(text), rank(r) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    long long integer() {
        skip_ws();
        bool neg = eat('-');
        if (!neg) eat('+');
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail(errc::parse_error, "expected integer at offset " +
                                                      std::to_string(start) + " in '" + s + "'");
        long long v = std::stoll(s.substr(start, pos - start));
        return neg ? -v : v;
    }

    Rat rational() {
        long long num = integer();
        if (eat('/')) {
            long long den = integer();
            if (den == 0) fail(errc::parse_error, "zero denominator");
            return Rat(num, den);
        }
        return Rat(num);
    }

    // factor := rational | h[^exp] | x<i>[^exp] | y<i>[^exp]
    // exp := integer | '(' rational ')'   (the parenthesized form is only
    //        meaningful for h, where halves are allowed)
    struct Factor {
        Monomial mono;
        HScalar coeff;
    };

    Factor factor() {
        skip_ws();
        Factor f{Monomial(rank), HScalar::one()};
        char c = peek();
        if (c == 'h') {
            ++pos;
            int half = 2;
            if (eat('^')) {
                if (eat('(')) {
                    Rat e = rational();
                    if (!eat(')')) fail(errc::parse_error, "expected ')'");
                    Rat doubled = e * 2;
                    if (!is_integer(doubled))
                        fail(errc::parse_error, "h-exponent must be a half integer");
                    half = static_cast<int>(to_long(doubled));
                } else {
                    half = 2 * static_cast<int>(integer());
                }
            }
            f.coeff = HScalar::h_half(half);
        } else if (c == 'x' || c == 'y') {
            ++pos;
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail(errc::parse_error, "generator index expected");
            int idx = std::stoi(s.substr(start, pos - start));
            if (idx < 1 || idx > rank)
                fail(errc::parse_error, "generator index out of range: " + std::to_string(idx));
            int e = 1;
            if (eat('^')) {
                if (eat('(')) {
                    e = static_cast<int>(integer());
                    if (!eat(')')) fail(errc::parse_error, "expected ')'");
                } else {
                    e = static_cast<int>(integer());
                }
            }
            if (c == 'x')
                f.mono.xe[idx - 1] += e;
            else
                f.mono.ye[idx - 1] += e;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            f.coeff = HScalar::rational(rational());
        } else {
            fail(errc::parse_error, "unexpected character '" + std::string(1, c) + "'");
        }
        return f;
    }

    // term := factor ('*' factor)*
    Factor term() {
        Factor acc = factor();
        while (eat('*')) {
            Factor f = factor();
            for (int i = 0; i < rank; ++i) {
                acc.mono.xe[i] += f.mono.xe[i];
                acc.mono.ye[i] += f.mono.ye[i];
            }
            acc.coeff *= f.coeff;
        }
        return acc;
    }

    std::map<Monomial, HScalar> element() {
        std::map<Monomial, HScalar> terms;
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        while (true) {
            Factor t = term();
            HScalar c = neg ? -t.coeff : t.coeff;
            auto it = terms.find(t.mono);
            if (it == terms.end())
                terms.emplace(t.mono, c);
            else {
                it->second += c;
                if (it->second.is_zero()) terms.erase(it);
            }
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+'))
                neg = false;
            else if (eat('-'))
                neg = true;
            else
                fail(errc::parse_error, "expected '+' or '-' at offset " + std::to_string(pos));
        }
        return terms;
    }
};

}  // namespace

std::string WeylElement::str() const { return render_terms(terms_); }
std::string SymbolPoly::str() const { return render_terms(terms_); }

std::string render(const WeylElement& u) { return u.str(); }
std::string render(const SymbolPoly& f) { return f.str(); }

WeylElement parse_weyl(const std::string& text, int rank) {
    Parser p(text, rank);
    auto terms = p.element();
    LocMask mask;
    for (auto& [m, c] : terms) {
        (void)c;
        for (int i = 0; i < rank; ++i) {
            if (m.xe[i] < 0) mask.set_x(i);
            if (m.ye[i] < 0) mask.set_y(i);
        }
    }
    if (!mask.disciplined()) fail(errc::incompatible_mask, "parsed element breaks chart discipline");
    WeylElement out(rank, mask);
    for (auto& [m, c] : terms) out.add_term(m, c);
    return out;
}

SymbolPoly parse_symbol(const std::string& text, int rank) {
    Parser p(text, rank);
    auto terms = p.element();
    SymbolPoly out(rank);
    for (auto& [m, c] : terms) out.add_term(m, c);
    return out;
}

}  // namespace cwa
