#include "loiqif/rational.hpp"

#include "loiqif/error.hpp"

#include <cctype>

namespace loiqif {

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && digits.front() == '-') {
        digits.remove_prefix(1);
    }
    if (!is_digits(digits) || !is_digits(den)) {
        throw InvalidDistribution("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw InvalidDistribution("zero denominator in '" + std::string(text) + "'");
    }
    return make_rational(n, d);
}

std::string to_string(const Rational& value)
{
    return value.get_str(10);
}

} // namespace loiqif
