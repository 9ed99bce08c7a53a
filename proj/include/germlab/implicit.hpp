#pragma once

#include "germlab/truncpoly.hpp"

#include <stdexcept>

namespace germlab {

// Multiplicative inverse of a unit (nonzero constant term) in the truncated
// polynomial ring, via Newton doubling: inv <- inv*(2 - w*inv).
template <class K>
TruncPolyT<K> series_reciprocal(const TruncPolyT<K>& w)
{
    const K w0 = w.constant_term();
    if (w0 == K(0)) throw std::invalid_argument("series_reciprocal: not a unit");
    TruncPolyT<K> inv = TruncPolyT<K>::constant(w.nvars(), w.order(), K(1) / w0);
    const TruncPolyT<K> two = TruncPolyT<K>::constant(w.nvars(), w.order(), K(2));
    for (int correct = 1; correct <= w.order(); correct *= 2)
        inv = inv * (two - w * inv);
    return inv;
}

// Solves g(u, v) = 0 for the variable with index solve_var as a power series
// in the other variable, by exact Newton iteration on truncated series.
//
// Preconditions: g is a 2-variable polynomial with g(0,0) = 0 and
// dg/d(solve_var)(0,0) != 0. The result s is a univariate series of order
// g.order()-1 with s(0) = 0 and g(u, s(u)) = 0 modulo degree > g.order()-1.
template <class K>
TruncPolyT<K> implicit_series_solve(const TruncPolyT<K>& g, int solve_var)
{
    if (g.nvars() != 2) throw std::invalid_argument("implicit_series_solve: need a 2-variable polynomial");
    if (solve_var != 0 && solve_var != 1)
        throw std::invalid_argument("implicit_series_solve: variable index out of range");
    if (!(g.constant_term() == K(0)))
        throw std::invalid_argument("implicit_series_solve: g(0,0) != 0");
    const TruncPolyT<K> gv = g.derivative(solve_var);
    if (gv.constant_term() == K(0))
        throw std::invalid_argument("implicit_series_solve: dg/dv(0,0) = 0, nondegeneracy fails");

    const int m = g.order() - 1; // the derivative is only reliable to this degree
    const TruncPolyT<K> u = TruncPolyT<K>::variable(1, m, 0);
    TruncPolyT<K> s(1, m);
    auto at_graph = [&](const TruncPolyT<K>& p) {
        return solve_var == 1 ? p.substitute({u, s}) : p.substitute({s, u});
    };
    for (int pass = 0; pass <= m + 1; ++pass) {
        const TruncPolyT<K> residual = at_graph(g);
        if (residual.is_zero()) return s;
        s -= residual * series_reciprocal(at_graph(gv));
    }
    throw std::logic_error("implicit_series_solve: Newton iteration failed to converge");
}

} // namespace germlab
