#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace vknot {

// Integer-coefficient Laurent polynomial in one variable A. Exact
// arithmetic; zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(std::int64_t c);
    static LaurentPoly monomial(std::int64_t coeff, int exponent);

    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int exponent) const;
    const std::map<int, std::int64_t>& terms() const { return terms_; }

    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // Adds coeff * A^exponent.
    void add_term(std::int64_t coeff, int exponent);

    // The image under A -> A^{-1}.
    LaurentPoly inverted_variable() const;

    // Terms by ascending exponent, e.g. "-1*A^-16 + 1*A^-12 + 1*A^-4";
    // the zero polynomial prints as "0". The format is stable.
    std::string to_string() const;

private:
    std::map<int, std::int64_t> terms_;
};

}  // namespace vknot
