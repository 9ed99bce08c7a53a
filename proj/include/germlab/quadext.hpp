#pragma once

#include "germlab/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace germlab {

// Element a + b*sqrt(d) of a real quadratic extension of the rationals.
// Rational values carry d = 0; a perfect-square radicand collapses to the
// rational part on construction, so zero testing is always exact.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(int v) : a_(v), b_(0), d_(0) {}
    QuadExt(const Rat& v) : a_(v), b_(0), d_(0) {}

    QuadExt(const Rat& a, const Rat& b, const Rat& d) : a_(a), b_(b), d_(d)
    {
        if (is_zero(b_)) {
            d_ = 0;
            return;
        }
        if (sign(d) <= 0) throw std::invalid_argument("QuadExt: radicand must be positive");
        if (auto root = exact_sqrt(d)) {
            a_ += b_ * *root;
            b_ = 0;
            d_ = 0;
        }
    }

    const Rat& rational_part() const { return a_; }
    const Rat& surd_part() const { return b_; }
    const Rat& radicand() const { return d_; }
    bool is_rational() const { return is_zero(b_); }

    static std::optional<Rat> exact_sqrt(const Rat& v)
    {
        if (sign(v) < 0) return std::nullopt;
        Int num = v.get_num(), den = v.get_den();
        if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
            Int rn, rd;
            mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
            return Rat(rn, rd);
        }
        return std::nullopt;
    }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y)
    {
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, merged_radicand(x, y));
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y)
    {
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, merged_radicand(x, y));
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y)
    {
        const Rat d = merged_radicand(x, y);
        return QuadExt(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y)
    {
        const Rat d = merged_radicand(x, y);
        const Rat norm = y.a_ * y.a_ - y.b_ * y.b_ * d;
        if (is_zero(norm)) throw std::invalid_argument("QuadExt: division by zero");
        // multiply by the conjugate of y
        const Rat na = (x.a_ * y.a_ - x.b_ * y.b_ * d) / norm;
        const Rat nb = (x.b_ * y.a_ - x.a_ * y.b_) / norm;
        return QuadExt(na, nb, d);
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }

    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_, x.d_); }

    friend bool operator==(const QuadExt& x, const QuadExt& y)
    {
        if (!(x.a_ == y.a_) || !(x.b_ == y.b_)) return false;
        return x.is_rational() || x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string to_string() const
    {
        if (is_rational()) return rat_to_string(a_);
        std::string surd;
        if (b_ == 1)
            surd = "sqrt(" + rat_to_string(d_) + ")";
        else if (b_ == -1)
            surd = "-sqrt(" + rat_to_string(d_) + ")";
        else
            surd = rat_to_string(b_) + "*sqrt(" + rat_to_string(d_) + ")";
        if (is_zero(a_)) return surd;
        if (surd[0] == '-') return rat_to_string(a_) + " - " + surd.substr(1);
        return rat_to_string(a_) + " + " + surd;
    }

private:
    static Rat merged_radicand(const QuadExt& x, const QuadExt& y)
    {
        if (x.is_rational()) return y.d_;
        if (y.is_rational()) return x.d_;
        if (!(x.d_ == y.d_)) throw std::invalid_argument("QuadExt: mixed radicands");
        return x.d_;
    }

    Rat a_, b_, d_;
};

} // namespace germlab
