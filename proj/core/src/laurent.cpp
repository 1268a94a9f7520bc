#include "vknot/laurent.hpp"

namespace vknot {

LaurentPoly LaurentPoly::constant(std::int64_t c) { return monomial(c, 0); }

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
    LaurentPoly p;
    p.add_term(coeff, exponent);
    return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(std::int64_t coeff, int exponent) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [exp, c] : rhs.terms_) add_term(c, exp);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [exp, c] : rhs.terms_) add_term(-c, exp);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [e1, c1] : lhs.terms_)
        for (const auto& [e2, c2] : rhs.terms_) out.add_term(c1 * c2, e1 + e2);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::inverted_variable() const {
    LaurentPoly out;
    for (const auto& [exp, c] : terms_) out.add_term(c, -exp);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exp, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        out += std::to_string(c);
        out += "*A^";
        out += std::to_string(exp);
    }
    return out;
}

}  // namespace vknot
