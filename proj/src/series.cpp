#include "series.hpp"

#include <algorithm>

#include "errors.hpp"

namespace mirsym {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw InvalidArgument("negative series order");
    c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    if (order < 0) throw InvalidArgument("negative series order");
    if (c_.size() != static_cast<size_t>(order) + 1)
        throw InvalidArgument("coefficient count does not match order");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, int order) {
    TruncatedSeries s(order);
    s.c_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const Rational& c, int power, int order) {
    TruncatedSeries s(order);
    if (power < 0) throw InvalidArgument("negative monomial power");
    if (power <= order) s.c_[static_cast<size_t>(power)] = c;
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order_) throw InvalidArgument("truncation cannot extend order");
    TruncatedSeries s(new_order);
    for (int n = 0; n <= new_order; ++n) s.c_[n] = c_[n];
    return s;
}

TruncatedSeries TruncatedSeries::shifted_up(int k) const {
    if (k < 0) throw InvalidArgument("negative shift");
    TruncatedSeries s(order_);
    for (int n = order_; n >= k; --n) s.c_[n] = c_[n - k];
    return s;
}

TruncatedSeries TruncatedSeries::theta() const {
    TruncatedSeries s(order_);
    for (int n = 1; n <= order_; ++n) s.c_[n] = c_[n] * Rational(n);
    return s;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(order_);
    for (int n = 0; n <= order_; ++n) s.c_[n] = -c_[n];
    return s;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int ord = std::min(a.order_, b.order_);
    TruncatedSeries s(ord);
    for (int n = 0; n <= ord; ++n) s.c_[n] = a.c_[n] + b.c_[n];
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    int ord = std::min(a.order_, b.order_);
    TruncatedSeries s(ord);
    for (int n = 0; n <= ord; ++n) s.c_[n] = a.c_[n] - b.c_[n];
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int ord = std::min(a.order_, b.order_);
    TruncatedSeries s(ord);
    for (int i = 0; i <= ord; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j <= ord; ++j) {
            if (b.c_[j].is_zero()) continue;
            s.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& r) const {
    TruncatedSeries s(order_);
    for (int n = 0; n <= order_; ++n) s.c_[n] = c_[n] * r;
    return s;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (c_[0].is_zero()) throw NotInvertible("inverse of series with zero constant term");
    TruncatedSeries s(order_);
    Rational u0 = c_[0].inv();
    s.c_[0] = u0;
    for (int n = 1; n <= order_; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += c_[k] * s.c_[n - k];
        s.c_[n] = -u0 * acc;
    }
    return s;
}

TruncatedSeries TruncatedSeries::exp() const {
    if (!c_[0].is_zero())
        throw NonzeroConstantTerm("exp requires zero constant term, got " + c_[0].str());
    // e' = a' e  =>  n e_n = sum_{k=1..n} k a_k e_{n-k}
    TruncatedSeries e(order_);
    e.c_[0] = Rational(1);
    for (int n = 1; n <= order_; ++n) {
        Rational acc(0);
        for (int k = 1; k <= n; ++k) acc += c_[k] * Rational(k) * e.c_[n - k];
        e.c_[n] = acc / Rational(n);
    }
    return e;
}

TruncatedSeries TruncatedSeries::log() const {
    if (c_[0] != Rational(1))
        throw ConstantTermNotOne("log requires constant term 1, got " + c_[0].str());
    // a = exp(l)  =>  n a_n = sum_{k=1..n} k l_k a_{n-k}
    TruncatedSeries l(order_);
    for (int n = 1; n <= order_; ++n) {
        Rational acc(0);
        for (int k = 1; k < n; ++k) acc += Rational(k) * l.c_[k] * c_[n - k];
        l.c_[n] = c_[n] - acc / Rational(n);
    }
    return l;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& b) const {
    if (!b.c_[0].is_zero())
        throw InvalidArgument("composition requires inner series with zero constant term");
    int ord = std::min(order_, b.order_);
    // Horner evaluation in the truncated ring.
    TruncatedSeries r = TruncatedSeries::constant(c_[ord], ord);
    TruncatedSeries bt = b.truncated(ord);
    for (int k = ord - 1; k >= 0; --k) {
        r = r * bt;
        r.c_[0] += c_[k];
    }
    return r;
}

TruncatedSeries TruncatedSeries::reversion() const {
    if (!c_[0].is_zero() || order_ < 1 || c_[1].is_zero())
        throw NotInvertible("reversion requires a(0) = 0 and a'(0) != 0");
    TruncatedSeries b(order_);
    Rational a1inv = c_[1].inv();
    b.c_[1] = a1inv;
    for (int n = 2; n <= order_; ++n) {
        // With b known through q^{n-1} and b_n = 0, the q^n coefficient of
        // a(b(q)) is off from delta_{n,1} by a1 * b_n.
        TruncatedSeries probe = compose(b.truncated(n));
        b.c_[n] = -a1inv * probe.coeff(n);
    }
    return b;
}

LogSeries::LogSeries(int order, int log_degree) : order_(order) {
    if (log_degree < 0 || log_degree > kMaxLogDegree)
        throw LogDegreeExceeded("log degree " + std::to_string(log_degree));
    parts_.assign(static_cast<size_t>(log_degree) + 1, TruncatedSeries(order));
}

LogSeries::LogSeries(TruncatedSeries part0) : order_(part0.order()) {
    parts_.push_back(std::move(part0));
}

LogSeries LogSeries::log_monomial(const Rational& c, int log_power, int order) {
    LogSeries s(order, log_power);
    s.parts_[static_cast<size_t>(log_power)] = TruncatedSeries::constant(c, order);
    return s;
}

TruncatedSeries LogSeries::part(int k) const {
    if (k < 0 || k > kMaxLogDegree) throw InvalidArgument("log part index out of range");
    if (k <= log_degree()) return parts_[static_cast<size_t>(k)];
    return TruncatedSeries(order_);
}

void LogSeries::set_part(int k, TruncatedSeries s) {
    if (k < 0 || k > kMaxLogDegree) throw LogDegreeExceeded(std::to_string(k));
    if (s.order() != order_) throw InvalidArgument("log part has mismatched order");
    while (log_degree() < k) parts_.push_back(TruncatedSeries(order_));
    parts_[static_cast<size_t>(k)] = std::move(s);
}

bool LogSeries::is_zero() const {
    return std::all_of(parts_.begin(), parts_.end(),
                       [](const TruncatedSeries& p) { return p.is_zero(); });
}

void LogSeries::normalize() {
    while (parts_.size() > 1 && parts_.back().is_zero()) parts_.pop_back();
}

LogSeries LogSeries::operator-() const {
    LogSeries s(order_, log_degree());
    for (int k = 0; k <= log_degree(); ++k) s.parts_[k] = -parts_[k];
    return s;
}

LogSeries operator+(const LogSeries& a, const LogSeries& b) {
    int ord = std::min(a.order_, b.order_);
    int deg = std::max(a.log_degree(), b.log_degree());
    LogSeries s(ord, deg);
    for (int k = 0; k <= deg; ++k)
        s.parts_[k] = a.part(k).truncated(ord) + b.part(k).truncated(ord);
    s.normalize();
    return s;
}

LogSeries operator-(const LogSeries& a, const LogSeries& b) {
    return a + (-b);
}

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
    int ord = std::min(a.order_, b.order_);
    LogSeries s(ord, 0);
    for (int i = 0; i <= a.log_degree(); ++i) {
        if (a.part(i).is_zero()) continue;
        for (int j = 0; j <= b.log_degree(); ++j) {
            if (b.part(j).is_zero()) continue;
            TruncatedSeries prod = a.part(i).truncated(ord) * b.part(j).truncated(ord);
            if (prod.is_zero()) continue;
            if (i + j > LogSeries::kMaxLogDegree)
                throw LogDegreeExceeded("product has nonzero L^" + std::to_string(i + j));
            s.set_part(i + j, s.part(i + j) + prod);
        }
    }
    s.normalize();
    return s;
}

LogSeries LogSeries::operator*(const Rational& r) const {
    LogSeries s(order_, log_degree());
    for (int k = 0; k <= log_degree(); ++k) s.parts_[k] = parts_[k] * r;
    return s;
}

LogSeries LogSeries::operator*(const TruncatedSeries& f) const {
    int ord = std::min(order_, f.order());
    LogSeries s(ord, log_degree());
    for (int k = 0; k <= log_degree(); ++k) s.parts_[k] = parts_[k].truncated(ord) * f;
    s.normalize();
    return s;
}

bool operator==(const LogSeries& a, const LogSeries& b) {
    if (a.order_ != b.order_) return false;
    int deg = std::max(a.log_degree(), b.log_degree());
    for (int k = 0; k <= deg; ++k)
        if (!(a.part(k) == b.part(k))) return false;
    return true;
}

LogSeries LogSeries::theta() const {
    LogSeries s(order_, log_degree());
    for (int k = 0; k <= log_degree(); ++k) {
        TruncatedSeries t = parts_[k].theta();
        if (k + 1 <= log_degree())
            t = t + parts_[k + 1] * Rational(k + 1);
        s.parts_[k] = t;
    }
    s.normalize();
    return s;
}

LogSeries LogSeries::divided_by(const TruncatedSeries& unit) const {
    TruncatedSeries inv = unit.inverse();
    return (*this) * inv;
}

}  // namespace mirsym
