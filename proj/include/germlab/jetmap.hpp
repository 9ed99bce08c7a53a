#pragma once

#include "germlab/truncpoly.hpp"

#include <stdexcept>
#include <vector>

namespace germlab {

// A jet of a map germ fixing the origin: a tuple of truncated polynomials
// with zero constant term, one per target coordinate.
template <class K>
class JetMapT {
public:
    JetMapT() : source_dim_(0), target_dim_(0), order_(0) {}

    JetMapT(int source_dim, int order, std::vector<TruncPolyT<K>> components)
        : source_dim_(source_dim), target_dim_(static_cast<int>(components.size())), order_(order),
          comps_(std::move(components))
    {
        if (target_dim_ < 1) throw std::invalid_argument("JetMap: needs at least one component");
        for (const auto& c : comps_) {
            if (c.nvars() != source_dim_ || c.order() != order_)
                throw std::invalid_argument("JetMap: component nvars/order mismatch");
            if (!(c.constant_term() == K(0)))
                throw std::invalid_argument("JetMap: component has nonzero constant term (jets fix the origin)");
        }
    }

    static JetMapT identity(int dim, int order)
    {
        std::vector<TruncPolyT<K>> comps;
        comps.reserve(static_cast<size_t>(dim));
        for (int i = 0; i < dim; ++i) comps.push_back(TruncPolyT<K>::variable(dim, order, i));
        return JetMapT(dim, order, std::move(comps));
    }

    // Jet of a linear map given by a row-major matrix (rows: target coords).
    static JetMapT linear(int source_dim, int order, const std::vector<std::vector<K>>& matrix)
    {
        std::vector<TruncPolyT<K>> comps;
        for (const auto& row : matrix) {
            if (static_cast<int>(row.size()) != source_dim)
                throw std::invalid_argument("JetMap::linear: row arity mismatch");
            TruncPolyT<K> c(source_dim, order);
            for (int j = 0; j < source_dim; ++j) {
                Expo e(static_cast<size_t>(source_dim), 0);
                e[static_cast<size_t>(j)] = 1;
                c.set_coeff(e, row[static_cast<size_t>(j)]);
            }
            comps.push_back(std::move(c));
        }
        return JetMapT(source_dim, order, std::move(comps));
    }

    int source_dim() const { return source_dim_; }
    int target_dim() const { return target_dim_; }
    int order() const { return order_; }
    const std::vector<TruncPolyT<K>>& components() const { return comps_; }
    const TruncPolyT<K>& component(int i) const { return comps_.at(static_cast<size_t>(i)); }

    // Jacobian at the origin as a target_dim x source_dim matrix.
    std::vector<std::vector<K>> linear_part() const
    {
        std::vector<std::vector<K>> m(static_cast<size_t>(target_dim_),
                                      std::vector<K>(static_cast<size_t>(source_dim_), K(0)));
        for (int i = 0; i < target_dim_; ++i) {
            for (int j = 0; j < source_dim_; ++j) {
                Expo e(static_cast<size_t>(source_dim_), 0);
                e[static_cast<size_t>(j)] = 1;
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = comps_[static_cast<size_t>(i)].coeff(e);
            }
        }
        return m;
    }

    JetMapT truncated(int new_order) const
    {
        std::vector<TruncPolyT<K>> comps;
        for (const auto& c : comps_) comps.push_back(c.truncated(new_order));
        return JetMapT(source_dim_, new_order, std::move(comps));
    }

    friend bool operator==(const JetMapT& a, const JetMapT& b)
    {
        return a.source_dim_ == b.source_dim_ && a.order_ == b.order_ && a.comps_ == b.comps_;
    }

private:
    int source_dim_;
    int target_dim_;
    int order_;
    std::vector<TruncPolyT<K>> comps_;
};

// outer(inner(.)), truncated to the common order.
template <class K>
JetMapT<K> compose(const JetMapT<K>& outer, const JetMapT<K>& inner)
{
    if (inner.target_dim() != outer.source_dim())
        throw std::invalid_argument("compose: inner target dimension does not match outer source dimension");
    if (inner.order() != outer.order()) throw std::invalid_argument("compose: order mismatch");
    std::vector<TruncPolyT<K>> comps;
    comps.reserve(static_cast<size_t>(outer.target_dim()));
    for (int i = 0; i < outer.target_dim(); ++i)
        comps.push_back(outer.component(i).substitute(inner.components()));
    return JetMapT<K>(inner.source_dim(), inner.order(), std::move(comps));
}

namespace detail {

// Gauss-Jordan inverse over an arbitrary field K; throws on singular input.
template <class K>
std::vector<std::vector<K>> field_matrix_inverse(std::vector<std::vector<K>> a)
{
    const size_t n = a.size();
    std::vector<std::vector<K>> inv(n, std::vector<K>(n, K(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = K(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == K(0)) ++piv;
        if (piv == n) throw std::invalid_argument("jet_invert: singular linear part");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        const K d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] = a[col][j] / d;
            inv[col][j] = inv[col][j] / d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == K(0)) continue;
            const K f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] = a[i][j] - f * a[col][j];
                inv[i][j] = inv[i][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace detail

// Jet of an invertible map germ: square, with invertible linear part.
template <class K>
class DiffeoJetT {
public:
    explicit DiffeoJetT(JetMapT<K> map) : map_(std::move(map))
    {
        if (map_.source_dim() != map_.target_dim())
            throw std::invalid_argument("DiffeoJet: map is not square");
        detail::field_matrix_inverse(map_.linear_part()); // throws when singular
    }

    const JetMapT<K>& map() const { return map_; }
    int dim() const { return map_.source_dim(); }
    int order() const { return map_.order(); }

private:
    JetMapT<K> map_;
};

// Group inverse in the truncated jet group: compose(phi, jet_invert(phi)) is
// the identity modulo degree > order, and symmetrically.
template <class K>
DiffeoJetT<K> jet_invert(const DiffeoJetT<K>& phi)
{
    const int dim = phi.dim();
    const int order = phi.order();
    const auto lin_inv = detail::field_matrix_inverse(phi.map().linear_part());
    const JetMapT<K> linv = JetMapT<K>::linear(dim, order, lin_inv);
    // phi = L (id + H) with H of vanishing order >= 2; invert id + H by the
    // fixed-point iteration theta <- id - H(theta), one degree per pass.
    const JetMapT<K> unipotent = compose(linv, phi.map());
    const JetMapT<K> id = JetMapT<K>::identity(dim, order);
    std::vector<TruncPolyT<K>> hcomps;
    for (int i = 0; i < dim; ++i) hcomps.push_back(unipotent.component(i) - id.component(i));
    const JetMapT<K> h(dim, order, std::move(hcomps));
    JetMapT<K> theta = id;
    for (int pass = 1; pass < order; ++pass) {
        const JetMapT<K> ht = compose(h, theta);
        std::vector<TruncPolyT<K>> comps;
        for (int i = 0; i < dim; ++i) comps.push_back(id.component(i) - ht.component(i));
        theta = JetMapT<K>(dim, order, std::move(comps));
    }
    return DiffeoJetT<K>(compose(theta, linv));
}

using JetMap = JetMapT<Rat>;
using DiffeoJet = DiffeoJetT<Rat>;

} // namespace germlab
