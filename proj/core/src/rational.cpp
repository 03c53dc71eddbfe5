#include "wbu3/rational.hpp"

#include <cstdlib>

namespace wbu3 {

Rational Rational::parse(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("Rational::parse: empty string");
    std::size_t slash = text.find('/');
    auto to_int = [](const std::string& s) {
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("Rational::parse: not an integer: " + s);
        }
        if (pos != s.size())
            throw std::invalid_argument("Rational::parse: trailing junk in " + s);
        return static_cast<Int>(v);
    };
    if (slash == std::string::npos)
        return Rational(to_int(text));
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

} // namespace wbu3
