#include "crosstint/rational.hpp"

#include <stdexcept>

namespace crosstint {

Int binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k == 0 || k == n) return 1;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: result is C(n-k+i, i) after each pass
    }
    return result;
}

Rat rat_pow(const Rat& x, long long e) {
    if (e < 0) {
        if (x == 0) throw std::invalid_argument("rat_pow: 0 to a negative power");
        return rat_pow(Rat(denominator(x), numerator(x)), -e);
    }
    Rat result = 1;
    Rat base = x;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rat(Int(std::string(text)));
        }
        Int num{std::string(text.substr(0, slash))};
        Int den{std::string(text.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rat: malformed rational '" + std::string(text) + "'");
    }
}

std::string format_rat(const Rat& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

Int ceil_rat(const Rat& value) {
    Int q = numerator(value) / denominator(value);
    if (q * denominator(value) < numerator(value)) ++q;
    return q;
}

}  // namespace crosstint
