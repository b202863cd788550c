#pragma once

// Brute-force reference computations for the test suites. These deliberately
// avoid the library's subspace/RREF machinery and its homology algorithms:
// plain forward elimination, explicit back substitution, and homology along
// fat degreewise covers instead of minimal syzygy presentations. They share
// only the combinatorial basis conventions with the code under test.

#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "oi/evaluate.hpp"

namespace oracle {

template <oi::FieldType F>
using Vec = std::vector<typename F::Scalar>;

// Forward elimination without normalization or back-elimination; returns the
// echelon rows (a basis of the row space) paired with their pivot columns.
template <oi::FieldType F>
std::vector<std::pair<std::size_t, Vec<F>>> echelon(const F& f, std::vector<Vec<F>> rows) {
    std::vector<std::pair<std::size_t, Vec<F>>> ech;
    for (auto& v : rows) {
        for (const auto& [p, row] : ech) {
            if (f.is_zero(v[p])) continue;
            const auto factor = f.mul(v[p], f.inv(row[p]));
            for (std::size_t j = 0; j < v.size(); ++j)
                if (!f.is_zero(row[j])) v[j] = f.sub(v[j], f.mul(factor, row[j]));
        }
        std::size_t p = 0;
        while (p < v.size() && f.is_zero(v[p])) ++p;
        if (p < v.size()) ech.emplace_back(p, std::move(v));
    }
    return ech;
}

template <oi::FieldType F>
std::size_t rank(const F& f, std::vector<Vec<F>> rows) {
    return echelon(f, std::move(rows)).size();
}

template <oi::FieldType F>
std::vector<Vec<F>> echelon_basis(const F& f, std::vector<Vec<F>> rows) {
    std::vector<Vec<F>> out;
    for (auto& [p, row] : echelon(f, std::move(rows))) out.push_back(std::move(row));
    return out;
}

// Kernel of a matrix given as rows, by echelon + back substitution on the
// free columns.
template <oi::FieldType F>
std::vector<Vec<F>> kernel(const F& f, std::size_t cols, std::vector<Vec<F>> rows) {
    auto ech = echelon(f, std::move(rows));
    std::sort(ech.begin(), ech.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<bool> is_pivot(cols, false);
    for (const auto& [p, row] : ech) is_pivot[p] = true;

    std::vector<Vec<F>> out;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Vec<F> x(cols, f.zero());
        x[fc] = f.one();
        for (auto it = ech.rbegin(); it != ech.rend(); ++it) {
            const auto& [p, row] = *it;
            auto acc = f.zero();
            for (std::size_t j = p + 1; j < cols; ++j)
                if (!f.is_zero(row[j]) && !f.is_zero(x[j])) acc = f.add(acc, f.mul(row[j], x[j]));
            x[p] = f.neg(f.mul(acc, f.inv(row[p])));
        }
        out.push_back(std::move(x));
    }
    return out;
}

// All composite rows act(beta, w) spanning W_n, assembled directly.
template <oi::FieldType F>
std::vector<Vec<F>> relation_rows(const oi::Presentation<F>& p, int n) {
    const F& f = p.field;
    oi::FreeBasis basis(p.free, n);
    std::vector<Vec<F>> rows;
    for (const auto& rel : p.relations) {
        if (rel.degree > n) continue;
        for (const auto& beta : oi::enumerate_maps(rel.degree, n)) {
            Vec<F> row(basis.dim(), f.zero());
            for (const auto& t : rel.terms)
                row[basis.index(t.gen, oi::compose(beta, t.map))] = t.coeff;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

template <oi::FieldType F>
std::int64_t dim_at(const oi::Presentation<F>& p, int n) {
    return static_cast<std::int64_t>(oi::free_dim(p.free, n)) -
           static_cast<std::int64_t>(rank(p.field, relation_rows(p, n)));
}

// Span of act(beta, F_m basis) over every m < n and every beta : [m] -> [n],
// together with W_n. The multi-step counterpart of the one-step trailing image.
template <oi::FieldType F>
std::vector<Vec<F>> full_lower_span_rows(const oi::Presentation<F>& p, int n) {
    const F& f = p.field;
    oi::FreeBasis dst(p.free, n);
    auto rows = relation_rows(p, n);
    for (int m = 0; m < n; ++m) {
        oi::FreeBasis src(p.free, m);
        for (const auto& beta : oi::enumerate_maps(m, n))
            for (std::size_t i = 0; i < src.dim(); ++i) {
                auto bv = src.at(i);
                Vec<F> row(dst.dim(), f.zero());
                row[dst.index(bv.gen, oi::compose(beta, bv.map))] = f.one();
                rows.push_back(std::move(row));
            }
    }
    return rows;
}

// Relocate a degree-s coordinate vector of the frame along gamma : [s] -> [n].
template <oi::FieldType F>
Vec<F> relocate(const F& f, const oi::FreeModule& frame, int s, int n,
                const oi::IncreasingMap& gamma, const Vec<F>& v) {
    oi::FreeBasis src(frame, s);
    oi::FreeBasis dst(frame, n);
    Vec<F> out(dst.dim(), f.zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (f.is_zero(v[i])) continue;
        auto bv = src.at(i);
        out[dst.index(bv.gen, oi::compose(gamma, bv.map))] = v[i];
    }
    return out;
}

// A module described degreewise inside the coordinate frame of a free module.
template <oi::FieldType F>
struct Module {
    oi::FreeModule frame;
    std::function<std::vector<Vec<F>>(int)> basis_at; // echelonized, memoized
};

template <oi::FieldType F>
Module<F> memoized(oi::FreeModule frame, std::function<std::vector<Vec<F>>(int)> fn) {
    auto cache = std::make_shared<std::map<int, std::vector<Vec<F>>>>();
    return Module<F>{std::move(frame), [cache, fn = std::move(fn)](int n) {
                         auto it = cache->find(n);
                         if (it == cache->end()) it = cache->emplace(n, fn(n)).first;
                         return it->second;
                     }};
}

template <oi::FieldType F>
Module<F> relation_module(const oi::Presentation<F>& p) {
    return memoized<F>(p.free, [p](int n) { return echelon_basis(p.field, relation_rows(p, n)); });
}

// Fat cover of a module: one free generator per basis vector in every degree
// up to the bound. Surjective onto the module in every degree <= bound because
// the degree-n generators alone already hit a basis of the degree-n part.
template <oi::FieldType F>
struct Cover {
    oi::FreeModule gfree;
    std::vector<std::pair<int, Vec<F>>> gens; // (degree, vector in the parent frame)
};

template <oi::FieldType F>
Cover<F> fat_cover(const Module<F>& x, int bound) {
    Cover<F> c;
    for (int s = 0; s <= bound; ++s)
        for (const auto& v : x.basis_at(s)) {
            c.gfree.degrees.push_back(s);
            c.gens.emplace_back(s, v);
        }
    return c;
}

// Kernel of the cover map G_n -> frame_n as a degreewise module over gfree.
template <oi::FieldType F>
Module<F> kernel_module(const F& f, const Module<F>& x, const Cover<F>& c) {
    auto frame = x.frame;
    auto gens = c.gens;
    auto gfree = c.gfree;
    return memoized<F>(gfree, [f, frame, gens, gfree](int n) {
        oi::FreeBasis gb(gfree, n);
        oi::FreeBasis fb(frame, n);
        // rows indexed by frame coordinates, columns by cover coordinates
        std::vector<Vec<F>> rows(fb.dim(), Vec<F>(gb.dim(), f.zero()));
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const auto& [s, vec] = gens[k];
            if (s > n) continue;
            for (const auto& gamma : oi::enumerate_maps(s, n)) {
                const std::size_t col = gb.index(k, gamma);
                auto moved = relocate(f, frame, s, n, gamma, vec);
                for (std::size_t i = 0; i < moved.size(); ++i)
                    if (!f.is_zero(moved[i])) rows[i][col] = moved[i];
            }
        }
        return echelon_basis(f, kernel(f, gb.dim(), std::move(rows)));
    });
}

// dim H_1 of a module along its fat cover: with L = ker(G -> X),
// dim H_1(X)_n = dim(L_n meet U^G_n) - dim U^L_n.
template <oi::FieldType F>
std::int64_t h1_along_cover(const F& f, const Cover<F>& c, const Module<F>& l, int n) {
    const auto l_rows = l.basis_at(n);
    if (n == 0 || l_rows.empty()) return 0;

    oi::FreeBasis gb(c.gfree, n);
    oi::FreeBasis gb_prev(c.gfree, n - 1);
    std::vector<bool> ug(gb.dim(), false);
    std::vector<Vec<F>> ul_rows;
    for (const auto& beta : oi::enumerate_maps(n - 1, n)) {
        for (std::size_t i = 0; i < gb_prev.dim(); ++i) {
            auto bv = gb_prev.at(i);
            ug[gb.index(bv.gen, oi::compose(beta, bv.map))] = true;
        }
        for (const auto& v : l.basis_at(n - 1))
            ul_rows.push_back(relocate(f, c.gfree, n - 1, n, beta, v));
    }

    std::size_t ug_dim = 0;
    std::vector<Vec<F>> stacked = l_rows;
    for (std::size_t i = 0; i < ug.size(); ++i) {
        if (!ug[i]) continue;
        ++ug_dim;
        Vec<F> unit(gb.dim(), f.zero());
        unit[i] = f.one();
        stacked.push_back(std::move(unit));
    }
    const std::size_t meet = l_rows.size() + ug_dim - rank(f, std::move(stacked));
    return static_cast<std::int64_t>(meet) - static_cast<std::int64_t>(rank(f, std::move(ul_rows)));
}

// H_i(V) dims for i >= 2 through the bound, via fat covers only.
template <oi::FieldType F>
std::map<int, std::int64_t> h_dims(const oi::Presentation<F>& p, int i, int bound) {
    const F& f = p.field;
    Module<F> x = relation_module(p);
    for (int level = 0; level < i - 2; ++level) x = kernel_module(f, x, fat_cover(x, bound));
    const Cover<F> c = fat_cover(x, bound);
    const Module<F> l = kernel_module(f, x, c);
    std::map<int, std::int64_t> out;
    for (int n = 0; n <= bound; ++n) {
        const auto v = h1_along_cover(f, c, l, n);
        if (v != 0) out[n] = v;
    }
    return out;
}

} // namespace oracle
