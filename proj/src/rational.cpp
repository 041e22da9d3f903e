#include "oretk/rational.hpp"

#include "oretk/errors.hpp"

#include <sstream>

namespace oretk {

std::string rational_to_string(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << '/' << denominator(r);
    return out.str();
}

Rational rational_from_string(const std::string& raw) {
    std::string text = raw;
    if (!text.empty() && text.front() == '+') text.erase(0, 1);
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in rational: " + text);
        return Rational(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("malformed rational: " + text);
    }
}

}  // namespace oretk
