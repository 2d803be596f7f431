#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ttw {

// Exact rational coefficient type. mpq_class keeps the canonical form we
// rely on everywhere: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rat = mpq_class;
using Int = mpz_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
    if (num.empty() || den.empty()) throw FormatError("empty rational component");
    Int n, d;
    if (n.set_str(num, 10) != 0) throw FormatError("bad integer literal: " + num);
    if (d.set_str(den, 10) != 0) throw FormatError("bad integer literal: " + den);
    if (d == 0) throw FormatError("zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline std::string num_string(const Rat& r) { return r.get_num().get_str(); }
inline std::string den_string(const Rat& r) { return r.get_den().get_str(); }

// Renders "p" or "p/q"; q is always positive in canonical form.
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace ttw
