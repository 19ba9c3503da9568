#include "bcov/scalar.hpp"

#include <cctype>
#include <sstream>

namespace bcov {

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw ParseError("division by zero scalar");
    Rational n = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    os << '/';
    os << denominator(r);
    return os.str();
}

std::string to_string(const Scalar& s) {
    if (s.im == 0) return to_string(s.re);
    std::string out = to_string(s.re);
    if (s.im > 0) {
        out += '+';
        out += to_string(s.im);
    } else {
        out += '-';
        out += to_string(Rational(-s.im));
    }
    out += "*i";
    return out;
}

namespace {

// Parses "p", "-p", "p/q" with optional surrounding whitespace removed upstream.
Rational parse_plain_rational(const std::string& t) {
    if (t.empty()) throw ParseError("empty rational literal");
    size_t slash = t.find('/');
    boost::multiprecision::cpp_int num, den{1};
    try {
        if (slash == std::string::npos) {
            num = boost::multiprecision::cpp_int(t);
        } else {
            num = boost::multiprecision::cpp_int(t.substr(0, slash));
            den = boost::multiprecision::cpp_int(t.substr(slash + 1));
        }
    } catch (const std::runtime_error&) {
        throw ParseError("bad rational literal '" + t + "'");
    }
    if (den == 0) throw ParseError("zero denominator in '" + t + "'");
    return Rational(num, den);
}

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

}  // namespace

Rational parse_rational(const std::string& text) { return parse_plain_rational(strip(text)); }

Scalar parse_scalar(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw ParseError("empty scalar literal");

    // split at the last top-level '+'/'-' that is not the leading sign
    size_t split = std::string::npos;
    for (size_t i = 1; i < t.size(); ++i) {
        if (t[i] == '+' || t[i] == '-') split = i;
    }
    bool has_i = t.size() >= 1 && t.back() == 'i';
    if (!has_i) return Scalar(parse_plain_rational(t));

    // forms: "...*i" or "i" / "-i"
    auto parse_im_part = [](std::string part) -> Rational {
        // part ends with "i"
        part.pop_back();
        if (!part.empty() && part.back() == '*') part.pop_back();
        if (part.empty() || part == "+") return Rational(1);
        if (part == "-") return Rational(-1);
        return parse_plain_rational(part);
    };

    if (split == std::string::npos || split > t.size()) {
        return Scalar(Rational(0), parse_im_part(t));
    }
    // real part then signed imaginary part
    std::string real_part = t.substr(0, split);
    std::string imag_part = t.substr(split);  // keeps the sign
    if (imag_part.find('i') == std::string::npos)
        throw ParseError("bad scalar literal '" + text + "'");
    return Scalar(parse_plain_rational(real_part), parse_im_part(imag_part));
}

}  // namespace bcov
