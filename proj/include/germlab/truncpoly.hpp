#pragma once

#include "germlab/rational.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace germlab {

// Exponent vector of a monomial; entry i is the power of variable i.
using Expo = std::vector<int>;

inline int total_degree(const Expo& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lexicographic order: by total degree, ties broken lexicographically.
struct GradedLexLess {
    bool operator()(const Expo& a, const Expo& b) const
    {
        const int da = total_degree(a);
        const int db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// A multivariate polynomial over the field K, truncated at total degree
// `order`: terms of higher degree are discarded eagerly, so the type models
// the coordinate ring of a jet space. Zero coefficients are never stored.
template <class K>
class TruncPolyT {
public:
    using TermMap = std::map<Expo, K, GradedLexLess>;

    TruncPolyT() : nvars_(0), order_(0) {}
    TruncPolyT(int nvars, int order) : nvars_(nvars), order_(order)
    {
        if (nvars < 0 || order < 1) throw std::invalid_argument("TruncPoly: need nvars >= 0 and order >= 1");
    }

    static TruncPolyT constant(int nvars, int order, const K& c)
    {
        TruncPolyT p(nvars, order);
        p.set_coeff(Expo(static_cast<size_t>(nvars), 0), c);
        return p;
    }

    static TruncPolyT variable(int nvars, int order, int index)
    {
        TruncPolyT p(nvars, order);
        Expo e(static_cast<size_t>(nvars), 0);
        e.at(static_cast<size_t>(index)) = 1;
        p.set_coeff(e, K(1));
        return p;
    }

    static TruncPolyT monomial(int nvars, int order, const Expo& e, const K& c)
    {
        TruncPolyT p(nvars, order);
        p.set_coeff(e, c);
        return p;
    }

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    K coeff(const Expo& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? K(0) : it->second;
    }

    K constant_term() const { return coeff(Expo(static_cast<size_t>(nvars_), 0)); }

    void set_coeff(const Expo& e, const K& c)
    {
        if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("TruncPoly: exponent arity mismatch");
        if (total_degree(e) > order_) return;
        if (c == K(0))
            terms_.erase(e);
        else
            terms_[e] = c;
    }

    void add_term(const Expo& e, const K& c)
    {
        if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("TruncPoly: exponent arity mismatch");
        if (total_degree(e) > order_ || c == K(0)) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == K(0)) terms_.erase(it);
        }
    }

    // Minimal total degree of a nonzero term; nullopt means the polynomial
    // truncates to zero, i.e. vanishing order is at least order()+1.
    std::optional<int> vanishing_order() const
    {
        if (terms_.empty()) return std::nullopt;
        return total_degree(terms_.begin()->first);
    }

    int max_degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

    TruncPolyT truncated(int new_order) const
    {
        TruncPolyT r(nvars_, new_order);
        for (const auto& [e, c] : terms_) {
            if (total_degree(e) > new_order) break;
            r.terms_[e] = c;
        }
        return r;
    }

    TruncPolyT homogeneous_part(int degree) const
    {
        TruncPolyT r(nvars_, order_);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) == degree) r.terms_[e] = c;
        return r;
    }

    TruncPolyT& operator+=(const TruncPolyT& o)
    {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    TruncPolyT& operator-=(const TruncPolyT& o)
    {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, K(0) - c);
        return *this;
    }

    TruncPolyT& operator*=(const K& s)
    {
        if (s == K(0)) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= s;
        }
        return *this;
    }

    friend TruncPolyT operator+(TruncPolyT a, const TruncPolyT& b) { return a += b; }
    friend TruncPolyT operator-(TruncPolyT a, const TruncPolyT& b) { return a -= b; }
    friend TruncPolyT operator*(TruncPolyT a, const K& s) { return a *= s; }
    friend TruncPolyT operator*(const K& s, TruncPolyT a) { return a *= s; }

    friend TruncPolyT operator-(const TruncPolyT& a)
    {
        TruncPolyT r = a;
        for (auto& [e, c] : r.terms_) c = K(0) - c;
        return r;
    }

    // Product with eager truncation: terms of total degree > order are dropped.
    friend TruncPolyT operator*(const TruncPolyT& a, const TruncPolyT& b)
    {
        a.check_compatible(b);
        TruncPolyT r(a.nvars_, a.order_);
        Expo e(static_cast<size_t>(a.nvars_), 0);
        for (const auto& [ea, ca] : a.terms_) {
            const int da = total_degree(ea);
            for (const auto& [eb, cb] : b.terms_) {
                if (da + total_degree(eb) > a.order_) break; // graded order: rest is too big
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const TruncPolyT& a, const TruncPolyT& b)
    {
        return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    // Formal partial derivative. The result keeps the same order, but its
    // top-degree slice is not trustworthy data for a jet of this order:
    // consumers that care must re-truncate to order()-1.
    TruncPolyT derivative(int var) const
    {
        if (var < 0 || var >= nvars_) throw std::invalid_argument("derivative: variable index out of range");
        TruncPolyT r(nvars_, order_);
        for (const auto& [e, c] : terms_) {
            const int k = e[static_cast<size_t>(var)];
            if (k == 0) continue;
            Expo d = e;
            d[static_cast<size_t>(var)] = k - 1;
            r.add_term(d, c * K(k));
        }
        return r;
    }

    // Substitutes args[i] for variable i. All args must share nvars/order and
    // have zero constant term, otherwise truncation would silently lose
    // low-degree information.
    TruncPolyT substitute(const std::vector<TruncPolyT>& args) const
    {
        if (static_cast<int>(args.size()) != nvars_)
            throw std::invalid_argument("substitute: argument count mismatch");
        int anv = nvars_ == 0 ? 0 : args[0].nvars();
        int aord = order_;
        for (const auto& a : args) {
            anv = a.nvars();
            aord = a.order();
            break;
        }
        for (const auto& a : args) {
            if (a.nvars() != anv || a.order() != aord)
                throw std::invalid_argument("substitute: arguments disagree in nvars/order");
            if (!(a.constant_term() == K(0)))
                throw std::invalid_argument("substitute: argument has nonzero constant term");
        }
        // args[i]^k vanishes to order >= k, so powers above aord are zero.
        std::vector<std::vector<TruncPolyT>> pow(static_cast<size_t>(nvars_));
        auto power = [&](int var, int k) -> const TruncPolyT& {
            auto& pv = pow[static_cast<size_t>(var)];
            if (pv.empty()) pv.push_back(constant(anv, aord, K(1)));
            while (static_cast<int>(pv.size()) <= k) pv.push_back(pv.back() * args[static_cast<size_t>(var)]);
            return pv[static_cast<size_t>(k)];
        };
        TruncPolyT r(anv, aord);
        for (const auto& [e, c] : terms_) {
            if (total_degree(e) > aord) break;
            TruncPolyT term = constant(anv, aord, c);
            for (int j = 0; j < nvars_ && !term.is_zero(); ++j) {
                const int k = e[static_cast<size_t>(j)];
                if (k > 0) term = term * power(j, k);
            }
            r += term;
        }
        return r;
    }

    K eval(const std::vector<K>& point) const
    {
        if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("eval: point arity mismatch");
        K acc(0);
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (int j = 0; j < nvars_; ++j)
                for (int k = 0; k < e[static_cast<size_t>(j)]; ++k) t *= point[static_cast<size_t>(j)];
            acc += t;
        }
        return acc;
    }

    std::string to_string(const std::function<std::string(int)>& var_name,
                          const std::function<std::string(const K&)>& coeff_str) const
    {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (int j = 0; j < nvars_; ++j) {
                const int k = e[static_cast<size_t>(j)];
                if (k == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += var_name(j);
                if (k > 1) mono += "^" + std::to_string(k);
            }
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            std::string mag = neg ? cs.substr(1) : cs;
            std::string piece;
            if (mono.empty())
                piece = mag;
            else if (mag == "1")
                piece = mono;
            else
                piece = mag + "*" + mono;
            if (out.empty())
                out = (neg ? "-" : "") + piece;
            else
                out += (neg ? " - " : " + ") + piece;
        }
        return out;
    }

private:
    void check_compatible(const TruncPolyT& o) const
    {
        if (nvars_ != o.nvars_ || order_ != o.order_)
            throw std::invalid_argument("TruncPoly: nvars/order mismatch");
    }

    int nvars_;
    int order_;
    TermMap terms_;
};

using TruncPoly = TruncPolyT<Rat>;

} // namespace germlab
