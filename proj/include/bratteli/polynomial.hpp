#pragma once

#include <string>
#include <vector>

#include "bratteli/bigint.hpp"

namespace bratteli {

/// Polynomial in the level variable n with big-integer coefficients,
/// stored low degree first.  Generator entries require nonnegative
/// coefficients; intermediate arithmetic (products, comparisons) may be
/// signed.
class Poly {
public:
    Poly() = default;
    explicit Poly(Int constant) { if (constant != 0) c_ = {std::move(constant)}; }
    explicit Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly variable();  // the monomial n

    /// Parses an expression over n with nonnegative integer literals,
    /// +, *, ^ (nonnegative integer exponents) and parentheses.
    static Poly parse(const std::string& expr);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }

    bool nonnegative_coeffs() const;

    Int eval(const Int& n) const;

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    bool operator==(const Poly& rhs) const = default;

    /// Substitute n -> a*n + b (integer a, b), used by telescoping re-indexing.
    Poly compose_affine(const Int& a, const Int& b) const;

    /// Sign of p(n) for all sufficiently large n: -1, 0, or +1.
    int eventual_sign() const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Int> c_;
};

/// True when p(n) <= q(n) for all sufficiently large n.
bool eventually_leq(const Poly& p, const Poly& q);

/// Ratio of polynomials used for symbolic series tests.  Degree of num/den
/// and the limit of n^(-deg) * ratio describe the asymptotics.
struct PolyRatio {
    Poly num;
    Poly den;

    int asymptotic_degree() const { return num.degree() - den.degree(); }
};

/// Asymptotically smallest ratio among candidates: the one eventually below
/// all others (total order since p*q' - q*p' has an eventual sign).
PolyRatio min_asymptotic(const std::vector<PolyRatio>& candidates);

}  // namespace bratteli
