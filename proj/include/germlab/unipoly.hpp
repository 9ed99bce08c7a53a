#pragma once

#include "germlab/rational.hpp"
#include "germlab/truncpoly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace germlab {

// Dense univariate polynomial over the rationals (not truncated).
// Coefficient i is the coefficient of t^i; trailing zeros are stripped.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }

    static UniPoly constant(const Rat& v) { return UniPoly({v}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const
    {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : Rat(0);
    }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    Rat eval(const Rat& t) const
    {
        Rat acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    UniPoly derivative() const
    {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rat> d(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return UniPoly(std::move(d));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b)
    {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b)
    {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }

    friend UniPoly operator*(const UniPoly& a, const Rat& s)
    {
        std::vector<Rat> r = a.c_;
        for (auto& v : r) v *= s;
        return UniPoly(std::move(r));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    // Euclidean remainder.
    friend UniPoly rem(UniPoly a, const UniPoly& b)
    {
        if (b.is_zero()) throw std::invalid_argument("rem: division by zero polynomial");
        while (!a.is_zero() && a.degree() >= b.degree()) {
            const Rat f = a.leading() / b.leading();
            const int shift = a.degree() - b.degree();
            for (size_t i = 0; i < b.c_.size(); ++i)
                a.c_[i + static_cast<size_t>(shift)] -= f * b.c_[i];
            a.strip();
        }
        return a;
    }

    // Monic gcd; gcd with the zero polynomial is the other argument made monic.
    friend UniPoly poly_gcd(UniPoly a, UniPoly b)
    {
        while (!b.is_zero()) {
            UniPoly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) {
            const Rat inv = 1 / a.leading();
            for (auto& v : a.c_) v *= inv;
        }
        return a;
    }

    // p(a*t + b) for the slice machinery.
    UniPoly compose_affine(const Rat& a, const Rat& b) const
    {
        UniPoly acc;
        UniPoly line({b, a});
        UniPoly power = UniPoly::constant(Rat(1));
        for (size_t i = 0; i < c_.size(); ++i) {
            acc = acc + power * c_[i];
            power = power * line;
        }
        return acc;
    }

private:
    void strip()
    {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<Rat> c_;
};

// Restriction of a two-variable truncated polynomial to the line
// (x, y) = (ax*t + bx, ay*t + by), as an exact univariate polynomial in t.
inline UniPoly restrict_to_line(const TruncPoly& p, const Rat& ax, const Rat& bx, const Rat& ay,
                                const Rat& by)
{
    if (p.nvars() != 2) throw std::invalid_argument("restrict_to_line: need a 2-variable polynomial");
    UniPoly x_line({bx, ax});
    UniPoly y_line({by, ay});
    std::vector<UniPoly> xp{UniPoly::constant(Rat(1))};
    std::vector<UniPoly> yp{UniPoly::constant(Rat(1))};
    auto power = [](std::vector<UniPoly>& cache, const UniPoly& base, int k) -> const UniPoly& {
        while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * base);
        return cache[static_cast<size_t>(k)];
    };
    UniPoly acc;
    for (const auto& [e, c] : p.terms())
        acc = acc + power(xp, x_line, e[0]) * power(yp, y_line, e[1]) * c;
    return acc;
}

namespace detail {
inline int sign_variations(const std::vector<UniPoly>& chain, const Rat& t)
{
    int last = 0, var = 0;
    for (const auto& p : chain) {
        const int s = sign(p.eval(t));
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}
} // namespace detail

inline std::vector<UniPoly> sturm_chain(const UniPoly& p)
{
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        UniPoly r = rem(chain[chain.size() - 2], chain.back());
        chain.push_back(r * Rat(-1));
    }
    chain.pop_back();
    return chain;
}

// Exact number of distinct real roots of p in (lo, hi].
// Requires p nonzero, lo < hi and no root at either endpoint.
inline int sturm_root_count(const UniPoly& p, const Rat& lo, const Rat& hi)
{
    if (p.is_zero()) throw std::invalid_argument("sturm_root_count: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_root_count: empty interval");
    if (is_zero(p.eval(lo)) || is_zero(p.eval(hi)))
        throw std::invalid_argument("sturm_root_count: root at an interval endpoint");
    const auto chain = sturm_chain(p);
    return detail::sign_variations(chain, lo) - detail::sign_variations(chain, hi);
}

} // namespace germlab
