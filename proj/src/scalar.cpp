#include "rigiditykit/scalar.hpp"

#include <cctype>

namespace rigiditykit {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    std::string_view num = body;
    std::string_view den = "1";
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("not a rational: '" + std::string(text) + "' (expected p/q or an integer)");
    }

    Rational q(std::string(num) + "/" + std::string(den));
    if (q.get_den() == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    q.canonicalize();
    if (negative) q = -q;
    return q;
}

std::string to_string(const Rational& x) {
    return x.get_str();  // canonical "p/q", or "p" when den == 1
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace rigiditykit
