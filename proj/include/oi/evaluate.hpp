#pragma once

#include <cstdint>

#include "oi/parallel.hpp"
#include "oi/presentation.hpp"

namespace oi {

/// W_n: the span in F_n of all composites act(beta, w) over the listed
/// relations w and all morphisms beta from the relation degree into [n].
template <FieldType F>
Subspace<F> relation_space(const Presentation<F>& p, int n) {
    const F& f = p.field;
    FreeBasis basis(p.free, n);
    auto w = Subspace<F>::zero(f, basis.dim());
    for (const auto& rel : p.relations) {
        if (rel.degree > n) continue;
        for (const auto& beta : enumerate_maps(rel.degree, n)) {
            if (w.is_full()) return w;
            std::vector<typename F::Scalar> row(basis.dim(), f.zero());
            for (const auto& t : rel.terms) {
                // beta . alpha is injective in alpha, so coordinates never collide
                row[basis.index(t.gen, compose(beta, t.map))] = t.coeff;
            }
            std::vector<std::vector<typename F::Scalar>> rows;
            rows.push_back(std::move(row));
            w = span_extend(std::move(w), std::move(rows));
        }
    }
    return w;
}

/// Coordinates of F_n hit by act(beta, -) images of the F_m basis over all
/// beta : [m] -> [n]. The action sends basis vectors to basis vectors, so the
/// image span of F_m is the coordinate subspace flagged here.
inline std::vector<bool> image_coordinate_mask(const FreeModule& free, int m, int n) {
    FreeBasis src(free, m);
    FreeBasis dst(free, n);
    std::vector<bool> mask(dst.dim(), false);
    for (const auto& beta : enumerate_maps(m, n))
        for (std::size_t i = 0; i < src.dim(); ++i) {
            auto bv = src.at(i);
            mask[dst.index(bv.gen, compose(beta, bv.map))] = true;
        }
    return mask;
}

/// Degreewise evaluation V_n = F_n / W_n.
template <FieldType F>
struct Evaluation {
    int degree = 0;
    std::size_t free_dim = 0;
    Subspace<F> relation_subspace;
    std::int64_t dim() const {
        return static_cast<std::int64_t>(free_dim) - static_cast<std::int64_t>(relation_subspace.dim());
    }
};

template <FieldType F>
Evaluation<F> evaluate_at(const Presentation<F>& p, int n) {
    auto w = relation_space(p, n);
    return Evaluation<F>{n, free_dim(p.free, n), std::move(w)};
}

template <FieldType F>
std::int64_t dim_at(const Presentation<F>& p, int n) {
    return evaluate_at(p, n).dim();
}

/// dims of V on the window [n0, n1]; the parallel path computes degrees
/// independently and writes results by index.
template <FieldType F>
std::vector<std::int64_t> window_dims(const Presentation<F>& p, int n0, int n1,
                                      Exec exec = Exec::serial) {
    if (n0 < 0 || n1 < n0) throw SchemaError("window_dims: bad window");
    std::vector<std::int64_t> out(static_cast<std::size_t>(n1 - n0 + 1));
    for_each_degree(exec, n0, n1, [&](int n) { out[static_cast<std::size_t>(n - n0)] = dim_at(p, n); });
    return out;
}

/// W_n plus the one-step images of F_{n-1}: everything of degree n that is
/// generated below degree n. Every increasing injection [m] -> [n] with m < n
/// factors through [n-1], so one step suffices. At n = 0 this is W_0.
template <FieldType F>
Subspace<F> trailing_image(const Presentation<F>& p, int n) {
    auto u = relation_space(p, n);
    if (n == 0) return u;
    return span_extend_units(std::move(u), image_coordinate_mask(p.free, n - 1, n));
}

/// dim (V_<d)_n: the degree-n part of the submodule generated below degree d.
template <FieldType F>
std::int64_t submodule_below_dim(const Presentation<F>& p, int d, int n) {
    if (d <= 0) return 0;
    if (n < d) return dim_at(p, n);
    auto w = relation_space(p, n);
    const std::size_t w_dim = w.dim();
    w = span_extend_units(std::move(w), image_coordinate_mask(p.free, d - 1, n));
    return static_cast<std::int64_t>(w.dim() - w_dim);
}

} // namespace oi
