#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "oi/matrix.hpp"

namespace oi {

template <FieldType F>
class Subspace;

/// Basis of the right kernel {x : Mx = 0}, canonicalized to RREF.
template <FieldType F>
Subspace<F> kernel_basis(const F& f, const Matrix<F>& m);

/// A subspace of k^ambient held as a reduced row-echelon basis.
/// The RREF basis is the canonical representative, so equality of subspaces
/// is a syntactic comparison. Immutable once built.
template <FieldType F>
class Subspace {
public:
    using Scalar = typename F::Scalar;
    using Vec = std::vector<Scalar>;

    static Subspace zero(const F& f, std::size_t ambient) {
        return Subspace(f, ambient);
    }

    static Subspace span(const F& f, std::size_t ambient, const std::vector<Vec>& rows) {
        Subspace s(f, ambient);
        for (const auto& r : rows) s.insert(r);
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    bool is_full() const { return dim() == ambient_; }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residual of v after elimination against the basis; zero iff v lies in the span.
    Vec reduce(Vec v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = v[pivots_[i]];
            if (field_.is_zero(c)) continue;
            const auto factor = c;
            const Vec& row = rows_[i];
            for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
                if (field_.is_zero(row[j])) continue;
                v[j] = field_.sub(v[j], field_.mul(factor, row[j]));
            }
        }
        return v;
    }

    bool contains(const Vec& v) const {
        Vec r = reduce(v);
        return std::all_of(r.begin(), r.end(), [&](const Scalar& x) { return field_.is_zero(x); });
    }

    bool contains(const Subspace& other) const {
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    /// Canonical comparison: same ambient space and identical RREF bases.
    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
    }

    Matrix<F> basis_matrix() const {
        Matrix<F> m(field_, rows_.size(), ambient_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) m.at(i, j) = rows_[i][j];
        return m;
    }

    friend Subspace span_join(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw SchemaError("span_join: ambient dimension mismatch");
        Subspace out = a;
        for (const auto& r : b.rows_) out.insert(r);
        return out;
    }

    /// Extend by extra spanning vectors; pass by value so callers can move.
    friend Subspace span_extend(Subspace a, std::vector<Vec> rows) {
        for (auto& r : rows) a.insert(std::move(r));
        return a;
    }

    /// Extend by unit vectors at the flagged coordinates.
    friend Subspace span_extend_units(Subspace a, const std::vector<bool>& coords) {
        Vec unit(a.ambient_, a.field_.zero());
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (!coords[i] || a.is_full()) continue;
            unit[i] = a.field_.one();
            a.insert(unit);
            unit[i] = a.field_.zero();
        }
        return a;
    }

    friend std::size_t intersect_dim(const Subspace& a, const Subspace& b) {
        return a.dim() + b.dim() - span_join(a, b).dim();
    }

    /// Explicit basis of the intersection, found by matching coordinates of
    /// combinations drawn from the two bases.
    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw SchemaError("intersect: ambient dimension mismatch");
        const F& f = a.field_;
        const std::size_t da = a.dim(), db = b.dim(), n = a.ambient_;
        // columns: coefficients on a-rows then b-rows; rows: ambient coordinates
        Matrix<F> m(f, n, da + db);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(j, i) = a.rows_[i][j];
        for (std::size_t i = 0; i < db; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(j, da + i) = f.neg(b.rows_[i][j]);
        Subspace ker = kernel_basis(f, m);
        Subspace out(f, n);
        for (const auto& kv : ker.basis()) {
            Vec v(n, f.zero());
            for (std::size_t i = 0; i < da; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    v[j] = f.add(v[j], f.mul(kv[i], a.rows_[i][j]));
            out.insert(v);
        }
        return out;
    }

    template <FieldType G>
    friend Subspace<G> kernel_basis(const G& f, const Matrix<G>& m);

private:
    Subspace(const F& f, std::size_t ambient) : field_(f), ambient_(ambient) {}

    // Reduce and, if independent, normalize, back-eliminate and insert in pivot order.
    bool insert(Vec v) {
        if (v.size() != ambient_) throw SchemaError("subspace: vector of wrong dimension");
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < ambient_ && field_.is_zero(v[p])) ++p;
        if (p == ambient_) return false;
        const auto scale = field_.inv(v[p]);
        for (std::size_t j = p; j < ambient_; ++j) v[j] = field_.mul(v[j], scale);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& c = rows_[i][p];
            if (field_.is_zero(c)) continue;
            const auto factor = c;
            for (std::size_t j = p; j < ambient_; ++j) {
                if (field_.is_zero(v[j])) continue;
                rows_[i][j] = field_.sub(rows_[i][j], field_.mul(factor, v[j]));
            }
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, p);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
        return true;
    }

    F field_;
    std::size_t ambient_;
    std::vector<Vec> rows_;          // RREF rows sorted by pivot
    std::vector<std::size_t> pivots_;
};

template <FieldType F>
Subspace<F> kernel_basis(const F& f, const Matrix<F>& m) {
    auto [r, rank] = rref(f, m);
    std::vector<std::size_t> pivot_cols;
    pivot_cols.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        std::size_t j = 0;
        while (j < r.cols && f.is_zero(r.at(i, j))) ++j;
        pivot_cols.push_back(j);
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;

    Subspace<F> out(f, m.cols);
    for (std::size_t fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        typename Subspace<F>::Vec v(m.cols, f.zero());
        v[fc] = f.one();
        for (std::size_t i = 0; i < rank; ++i) v[pivot_cols[i]] = f.neg(r.at(i, fc));
        out.insert(std::move(v));
    }
    return out;
}

} // namespace oi
