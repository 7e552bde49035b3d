#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wpsi {

/// Exact arbitrary-precision rational. All arithmetic in the library is exact;
/// there is no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "n" or "n/d" with optional sign. Throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
    for (char c : text)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("parse_rat: bad character in '" + text + "'");
    Rat r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("parse_rat: malformed '" + text + "'");
    if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

/// "num/den" without spaces, or just "num" when den == 1.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

/// binom(m, n) with the convention binom(m, n) = 0 if n > m or n < 0.
inline Int binomial(long m, long n) {
    if (n < 0 || n > m) return Int(0);
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
    return b;
}

}  // namespace wpsi
