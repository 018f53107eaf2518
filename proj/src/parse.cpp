#include "dehn/parse.hpp"

#include <cctype>
#include <charconv>

namespace dehn {

namespace {

// U+2212 (minus sign) as UTF-8.
constexpr const char* kUnicodeMinus = "\xe2\x88\x92";

std::string normalize_minus(std::string_view src) {
    std::string out;
    out.reserve(src.size());
    for (std::size_t i = 0; i < src.size();) {
        if (src.compare(i, 3, kUnicodeMinus) == 0) {
            out.push_back('-');
            i += 3;
        } else {
            out.push_back(src[i]);
            ++i;
        }
    }
    return out;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::invalid_argument(what + " (at position " + std::to_string(pos) + ")"),
      position(pos) {}

LaurentPolynomial parse_laurent(std::string_view src) {
    const std::string s = normalize_minus(src);
    std::size_t i = 0;
    const std::size_t n = s.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };

    skip_ws();
    if (i == n)
        throw ParseError("empty polynomial", i);

    LaurentPolynomial out;
    bool first = true;
    while (true) {
        int sign = +1;
        if (i < n && (s[i] == '+' || s[i] == '-')) {
            sign = (s[i] == '-') ? -1 : +1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", i);
        }

        std::string digits;
        while (i < n && is_digit(s[i]))
            digits.push_back(s[i++]);
        bool have_coeff = !digits.empty();
        Integer coeff = have_coeff ? Integer(digits) : Integer(1);
        skip_ws();

        int exponent = 0;
        if (i < n && s[i] == 't') {
            ++i;
            exponent = 1;
            skip_ws();
            if (i < n && s[i] == '^') {
                ++i;
                skip_ws();
                int exp_sign = +1;
                if (i < n && (s[i] == '+' || s[i] == '-')) {
                    exp_sign = (s[i] == '-') ? -1 : +1;
                    ++i;
                }
                if (i >= n || !is_digit(s[i]))
                    throw ParseError("expected exponent digits after '^'", i);
                long value = 0;
                while (i < n && is_digit(s[i])) {
                    value = value * 10 + (s[i] - '0');
                    if (value > 1000000)
                        throw ParseError("exponent out of range", i);
                    ++i;
                }
                exponent = static_cast<int>(exp_sign * value);
            }
        } else if (!have_coeff) {
            throw ParseError("expected a coefficient or 't'", i);
        }

        out.add_term(exponent, sign < 0 ? Integer(-coeff) : coeff);
        first = false;
        skip_ws();
        if (i == n)
            break;
        if (s[i] != '+' && s[i] != '-')
            throw ParseError("unexpected character in polynomial", i);
    }
    return out;
}

std::string render_laurent(const LaurentPolynomial& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const int exp = it->first;
        const Integer& c = it->second;
        const bool negative = c < 0;
        Integer mag = abs(c);
        if (out.empty()) {
            if (negative)
                out += '-';
        } else {
            out += negative ? '-' : '+';
        }
        if (exp == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1)
                out += mag.get_str();
            out += 't';
            if (exp != 1) {
                out += '^';
                out += std::to_string(exp);
            }
        }
    }
    return out;
}

std::string render_poly(const IntPolynomial& f) {
    LaurentPolynomial l;
    for (int i = 0; i <= f.degree(); ++i)
        l.add_term(i, f.coeff(i));
    return render_laurent(l);
}

std::int64_t parse_int(std::string_view text, const std::string& what) {
    const std::string s = normalize_minus(text);
    std::int64_t value = 0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw std::invalid_argument(what + ": expected an integer, got '" + s + "'");
    return value;
}

}  // namespace dehn
