#include "cwa/hscalar.hpp"

#include <sstream>

#include "cwa/poly.hpp"

namespace cwa {

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) fail(errc::parse_error, "zero denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const std::exception&) {
        fail(errc::parse_error, "bad rational '" + text + "'");
    }
}

std::string HScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, q] : terms_) {
        Rat mag = q < 0 ? Rat(-q) : q;
        if (first) {
            if (q < 0) os << "-";
            first = false;
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        bool has_h = (k != 0);
        if (!has_h || mag != 1) {
            os << numerator(mag).str();
            if (denominator(mag) != 1) os << "/" << denominator(mag).str();
            if (has_h) os << "*";
        }
        if (has_h) {
            if (k == 2)
                os << "h";
            else if (k % 2 == 0)
                os << "h^" << k / 2;
            else
                os << "h^(" << k << "/2)";
        }
    }
    return os.str();
}

std::string poly_str(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto [d, q] = *it;
        Rat mag = q < 0 ? Rat(-q) : q;
        if (first) {
            if (q < 0) os << "-";
            first = false;
        } else {
            os << (q < 0 ? " - " : " + ");
        }
        if (d == 0 || mag != 1) {
            os << numerator(mag).str();
            if (denominator(mag) != 1) os << "/" << denominator(mag).str();
            if (d != 0) os << "*";
        }
        if (d == 1)
            os << var;
        else if (d > 1)
            os << var << "^" << d;
    }
    return os.str();
}

}  // namespace cwa
