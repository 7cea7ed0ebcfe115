#include "gravity/rational.hpp"

#include "gravity/errors.hpp"

#include <cctype>
#include <sstream>

namespace gravity {

namespace {

bool parse_integer(const std::string& text, Integer& out) {
    if (text.empty()) return false;
    size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (start == text.size()) return false;
    for (size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    // Skip leading zeros so cpp_int never sees an octal-looking prefix.
    size_t first = text.find_first_not_of('0', start);
    if (first == std::string::npos) {
        out = 0;
        return true;
    }
    out = Integer(text.substr(first));
    if (text[0] == '-') out = -out;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (auto slash = text.find('/'); slash != std::string::npos) {
        Integer num, den;
        if (!parse_integer(text.substr(0, slash), num) || !parse_integer(text.substr(slash + 1), den))
            fail(ErrorKind::Parse, "bad rational '" + text + "'");
        if (den == 0) fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        Integer num;
        if (!parse_integer(digits, num)) fail(ErrorKind::Parse, "bad decimal '" + text + "'");
        Integer den = 1;
        for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
        return Rational(num, den);
    }
    Integer num;
    if (!parse_integer(text, num)) fail(ErrorKind::Parse, "bad rational '" + text + "'");
    return Rational(num);
}

std::string format_rational(const Rational& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

}  // namespace gravity
