#include "liexp/number.hpp"

#include <stdexcept>

namespace liexp {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.front() == '+') s.erase(s.begin());
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

Rational ratio(long n, long d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

int QSqrt2::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
    // opposite signs: compare a^2 with 2 b^2
    const Rational lhs = a_ * a_;
    const Rational rhs = 2 * b_ * b_;
    return lhs > rhs ? sa : sb;
}

QSqrt2 QSqrt2::inverse() const {
    const Rational norm = a_ * a_ - 2 * b_ * b_;
    if (sgn(norm) == 0) throw std::domain_error("division by zero in Q(sqrt2)");
    return QSqrt2(Rational(a_ / norm), Rational(-b_ / norm));
}

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
        return *this;
    }
    Rational a = a_ * o.a_ + 2 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

std::string QSqrt2::str() const {
    if (is_rational()) return a_.get_str();
    std::string out;
    if (sgn(a_) != 0) out = a_.get_str() + (sgn(b_) > 0 ? "+" : "");
    return out + b_.get_str() + "*sqrt2";
}

QSqrt2 QSqrt2::parse(std::string_view text) {
    std::string s(text);
    std::string compact;
    for (char c : s)
        if (c != ' ') compact.push_back(c);
    const std::string tag = "*sqrt2";
    const auto pos = compact.find(tag);
    if (pos == std::string::npos) return QSqrt2(parse_rational(compact));
    if (pos + tag.size() != compact.size()) throw std::invalid_argument("malformed Q(sqrt2) literal '" + s + "'");
    const std::string head = compact.substr(0, pos);
    // the irrational coefficient starts at the last sign that is not in first position
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if (head[i] == '+' || head[i] == '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) return QSqrt2(Rational(0), parse_rational(head));
    return QSqrt2(parse_rational(head.substr(0, split)), parse_rational(head.substr(split)));
}

}  // namespace liexp
