#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace germlab {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator) as long as arithmetic starts from canonical inputs.
using Rat = mpq_class;
using Int = mpz_class;

inline int sign(const Rat& q) { return sgn(q); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

inline Rat rat_pow(const Rat& base, unsigned e)
{
    Rat r(1);
    Rat b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
inline Rat rat_from_string(const std::string& text)
{
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("invalid rational literal: " + text);
    if (sgn(q.get_den()) == 0)
        throw std::invalid_argument("zero denominator in rational literal: " + text);
    q.canonicalize();
    return q;
}

// Canonical text form: "p" for integers, otherwise "p/q".
inline std::string rat_to_string(const Rat& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace germlab
