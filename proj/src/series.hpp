#pragma once

#include <vector>

#include "rational.hpp"

namespace mirsym {

// Power series in z over Rational, truncated after z^order.
// Binary operations never extend precision: the result order is the
// minimum of the operand orders.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, int order);
    static TruncatedSeries monomial(const Rational& c, int power, int order);
    static TruncatedSeries one(int order) { return constant(1, order); }

    int order() const { return order_; }
    const Rational& coeff(int n) const { return c_[static_cast<size_t>(n)]; }
    void set_coeff(int n, const Rational& v) { c_[static_cast<size_t>(n)] = v; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;

    TruncatedSeries truncated(int new_order) const;
    // Multiplication by z^k; the truncation order stays fixed, so the top k
    // coefficients fall off the end.
    TruncatedSeries shifted_up(int k) const;
    // theta = z d/dz; acts coefficientwise as multiplication by n.
    TruncatedSeries theta() const;

    TruncatedSeries operator-() const;
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator*(const Rational& s) const;
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    // Multiplicative inverse; requires nonzero constant term.
    TruncatedSeries inverse() const;
    TruncatedSeries divided_by(const TruncatedSeries& unit) const { return *this * unit.inverse(); }
    // exp(a); requires a(0) = 0 (NonzeroConstantTerm otherwise).
    TruncatedSeries exp() const;
    // log(a); requires a(0) = 1 (ConstantTermNotOne otherwise).
    TruncatedSeries log() const;
    // a(b(z)); requires b(0) = 0.
    TruncatedSeries compose(const TruncatedSeries& b) const;
    // Compositional inverse; requires a(0) = 0 and a'(0) != 0 (NotInvertible).
    TruncatedSeries reversion() const;

private:
    int order_;
    std::vector<Rational> c_;
};

// Polynomial in L = log z of degree <= 3 with TruncatedSeries coefficients.
// All parts share one truncation order. Arithmetic that would push a nonzero
// coefficient past L^3 raises LogDegreeExceeded rather than extending.
class LogSeries {
public:
    static constexpr int kMaxLogDegree = 3;

    explicit LogSeries(int order, int log_degree = 0);
    explicit LogSeries(TruncatedSeries part0);

    static LogSeries log_monomial(const Rational& c, int log_power, int order);

    int order() const { return order_; }
    int log_degree() const { return static_cast<int>(parts_.size()) - 1; }
    TruncatedSeries part(int k) const;  // zero series beyond log_degree
    void set_part(int k, TruncatedSeries s);

    bool is_zero() const;
    // Drops trailing identically-zero parts.
    void normalize();

    LogSeries operator-() const;
    friend LogSeries operator+(const LogSeries& a, const LogSeries& b);
    friend LogSeries operator-(const LogSeries& a, const LogSeries& b);
    friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
    LogSeries operator*(const Rational& s) const;
    LogSeries operator*(const TruncatedSeries& s) const;
    friend bool operator==(const LogSeries& a, const LogSeries& b);

    // theta = z d/dz extended by theta(L) = 1:
    //   theta(L^k f) = k L^{k-1} f + L^k theta(f).
    // z-order bookkeeping is preserved (theta never consumes precision).
    LogSeries theta() const;
    // Division by a unit plain series.
    LogSeries divided_by(const TruncatedSeries& unit) const;

private:
    int order_;
    std::vector<TruncatedSeries> parts_;  // parts_[k] multiplies L^k
};

}  // namespace mirsym
