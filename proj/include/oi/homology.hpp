#pragma once

#include <map>
#include <optional>

#include "oi/evaluate.hpp"

namespace oi {

/// Dimensions of a homology functor H_i, certified complete for all degrees
/// up to certified_through. Only nonzero dimensions are stored.
struct HomologyTable {
    int index = 0;
    std::map<int, std::int64_t> dims;
    int certified_through = -1;

    bool operator==(const HomologyTable&) const = default;
    std::int64_t at(int n) const {
        auto it = dims.find(n);
        return it == dims.end() ? 0 : it->second;
    }
    int top_degree() const { return dims.empty() ? -1 : dims.rbegin()->first; }
};

/// One-step image of W: the span in F_n of act(beta, W_{n-1}) over all
/// beta : [n-1] -> [n].
template <FieldType F>
Subspace<F> relation_one_step(const Presentation<F>& p, int n) {
    const F& f = p.field;
    FreeBasis dst(p.free, n);
    auto out = Subspace<F>::zero(f, dst.dim());
    if (n == 0) return out;
    auto w_prev = relation_space(p, n - 1);
    if (w_prev.dim() == 0) return out;
    FreeBasis src(p.free, n - 1);
    for (const auto& beta : enumerate_maps(n - 1, n)) {
        std::vector<std::vector<typename F::Scalar>> rows;
        rows.reserve(w_prev.dim());
        for (const auto& v : w_prev.basis()) rows.push_back(push_vector(f, src, dst, beta, v));
        out = span_extend(std::move(out), std::move(rows));
        if (out.is_full()) break;
    }
    return out;
}

/// dim H_0(V)_n = dim F_n - dim(W_n + one-step images of F_{n-1}).
template <FieldType F>
std::int64_t h0_dim_at(const Presentation<F>& p, int n) {
    return static_cast<std::int64_t>(free_dim(p.free, n)) -
           static_cast<std::int64_t>(trailing_image(p, n).dim());
}

/// H_0(V): nonzero above the top generator degree is impossible, so the table
/// is complete.
template <FieldType F>
HomologyTable h0_dims(const Presentation<F>& p, Exec exec = Exec::serial) {
    const int top = p.max_generator_degree();
    HomologyTable t;
    t.index = 0;
    t.certified_through = top;
    std::vector<std::int64_t> vals(static_cast<std::size_t>(top + 1), 0);
    for_each_degree(exec, 0, top, [&](int n) { vals[static_cast<std::size_t>(n)] = h0_dim_at(p, n); });
    for (int n = 0; n <= top; ++n)
        if (vals[static_cast<std::size_t>(n)] != 0) t.dims[n] = vals[static_cast<std::size_t>(n)];
    return t;
}

template <FieldType F>
int t0(const Presentation<F>& p, Exec exec = Exec::serial) {
    return h0_dims(p, exec).top_degree();
}

/// dim H_1(V)_n = dim(W_n meet U^F_n) - dim U^W_n, from the homology exact
/// sequence of 0 -> W -> F -> V -> 0 and vanishing higher homology of F.
template <FieldType F>
std::int64_t h1_dim_at(const Presentation<F>& p, int n) {
    if (n == 0) return 0;
    auto w = relation_space(p, n);
    if (w.dim() == 0) return 0;
    const auto uf_mask = image_coordinate_mask(p.free, n - 1, n);
    std::size_t uf_dim = 0;
    for (bool b : uf_mask) uf_dim += b ? 1 : 0;
    const std::size_t w_dim = w.dim();
    const std::size_t join = span_extend_units(std::move(w), uf_mask).dim();
    const std::size_t meet = w_dim + uf_dim - join;
    return static_cast<std::int64_t>(meet) -
           static_cast<std::int64_t>(relation_one_step(p, n).dim());
}

/// H_1(V) injects into H_0(W) and W is generated in the listed relation
/// degrees, so the table is complete through the top relation degree.
template <FieldType F>
HomologyTable h1_dims(const Presentation<F>& p, Exec exec = Exec::serial) {
    const int top = p.max_relation_degree();
    HomologyTable t;
    t.index = 1;
    t.certified_through = top;
    std::vector<std::int64_t> vals(static_cast<std::size_t>(top + 1), 0);
    for_each_degree(exec, 0, top, [&](int n) { vals[static_cast<std::size_t>(n)] = h1_dim_at(p, n); });
    for (int n = 0; n <= top; ++n)
        if (vals[static_cast<std::size_t>(n)] != 0) t.dims[n] = vals[static_cast<std::size_t>(n)];
    return t;
}

template <FieldType F>
int t1(const Presentation<F>& p, Exec exec = Exec::serial) {
    return h1_dims(p, exec).top_degree();
}

template <FieldType F>
int prd(const Presentation<F>& p, Exec exec = Exec::serial) {
    return std::max(t0(p, exec), t1(p, exec));
}

/// dim H_0(W)_n for the relation module W of the presentation.
template <FieldType F>
std::int64_t h0_of_relations_dim(const Presentation<F>& p, int n) {
    return static_cast<std::int64_t>(relation_space(p, n).dim()) -
           static_cast<std::int64_t>(relation_one_step(p, n).dim());
}

/// Alternating dimension sum of the four-term exact sequence
/// 0 -> H_1(V) -> H_0(W) -> H_0(F) -> H_0(V) -> 0 at one degree; always 0.
template <FieldType F>
std::int64_t four_term_defect(const Presentation<F>& p, int n) {
    std::int64_t h0f = 0;
    for (int d : p.free.degrees) h0f += d == n ? 1 : 0;
    return h1_dim_at(p, n) - h0_of_relations_dim(p, n) + h0f - h0_dim_at(p, n);
}

/// A presentation of the relation module W, valid through the degree bound:
/// generators are canonical lifts of an H_0(W) basis, relations are the
/// minimal generators of the kernel of the induced cover found up to the bound.
template <FieldType F>
struct SyzygyPresentation {
    Presentation<F> pres;
    int valid_through = -1;
};

namespace detail {

/// Rows of the RREF basis of `space` whose pivot is not a pivot of `sub`;
/// together with `sub` they span `space`, so they are canonical lifts of a
/// basis of space/sub. Requires sub to be contained in space.
template <FieldType F>
std::vector<std::vector<typename F::Scalar>> complement_rows(const Subspace<F>& space,
                                                             const Subspace<F>& sub) {
    std::vector<bool> covered(space.ambient(), false);
    for (auto pv : sub.pivots()) covered[pv] = true;
    std::vector<std::vector<typename F::Scalar>> out;
    for (std::size_t i = 0; i < space.dim(); ++i)
        if (!covered[space.pivots()[i]]) out.push_back(space.basis()[i]);
    return out;
}

} // namespace detail

template <FieldType F>
SyzygyPresentation<F> syzygy_presentation(const Presentation<F>& p, int bound) {
    const F& f = p.field;
    const int maxrel = p.max_relation_degree();
    if (bound < maxrel)
        throw HypothesisError("syzygy bound " + std::to_string(bound) +
                              " is below the top relation degree " + std::to_string(maxrel));

    // Generators of W: one canonical lift per H_0(W) basis element. W is
    // generated in degrees at most the top relation degree.
    std::vector<int> gen_degrees;
    std::vector<Element<F>> lifts;
    for (int s = 0; s <= maxrel; ++s) {
        auto w = relation_space(p, s);
        if (w.dim() == 0) continue;
        auto rows = detail::complement_rows(w, relation_one_step(p, s));
        FreeBasis basis(p.free, s);
        for (auto& r : rows) {
            gen_degrees.push_back(s);
            lifts.push_back(vector_element(f, basis, r));
        }
    }

    SyzygyPresentation<F> out{Presentation<F>{f, FreeModule{gen_degrees}, {}}, bound};
    if (gen_degrees.empty()) return out;

    // Relations: minimal generators of ker(G -> W), found degreewise.
    const FreeModule& gfree = out.pres.free;
    auto kernel_at = [&](int n) {
        FreeBasis gb(gfree, n);
        FreeBasis fb(p.free, n);
        Matrix<F> m(f, fb.dim(), gb.dim());
        for (std::size_t k = 0; k < lifts.size(); ++k) {
            if (gen_degrees[k] > n) continue;
            for (const auto& gamma : enumerate_maps(gen_degrees[k], n)) {
                const std::size_t col = gb.index(k, gamma);
                for (const auto& t : lifts[k].terms)
                    m.at(fb.index(t.gen, compose(gamma, t.map)), col) = t.coeff;
            }
        }
        return kernel_basis(f, m);
    };

    std::optional<Subspace<F>> prev_kernel;
    for (int n = 0; n <= bound; ++n) {
        auto ker = kernel_at(n);
        FreeBasis gb(gfree, n);
        auto uk = Subspace<F>::zero(f, gb.dim());
        if (n > 0 && prev_kernel && prev_kernel->dim() > 0) {
            FreeBasis gb_prev(gfree, n - 1);
            for (const auto& beta : enumerate_maps(n - 1, n)) {
                std::vector<std::vector<typename F::Scalar>> rows;
                rows.reserve(prev_kernel->dim());
                for (const auto& v : prev_kernel->basis())
                    rows.push_back(push_vector(f, gb_prev, gb, beta, v));
                uk = span_extend(std::move(uk), std::move(rows));
            }
        }
        for (auto& r : detail::complement_rows(ker, uk))
            out.pres.relations.push_back(vector_element(f, gb, r));
        prev_kernel = std::move(ker);
    }
    return out;
}

/// H_i(V) for degrees up to the bound, by dimension shifting along syzygy
/// presentations: H_i(V) = H_{i-1}(W) for i >= 2. For i >= 2 the table is
/// exact for every degree <= bound but makes no claim beyond it.
template <FieldType F>
HomologyTable h_dims(const Presentation<F>& p, int i, int bound, Exec exec = Exec::serial) {
    if (i < 0) throw SchemaError("h_dims: negative homology index");
    if (i == 0) return h0_dims(p, exec);
    if (i == 1) return h1_dims(p, exec);
    Presentation<F> current = p;
    for (int level = 0; level < i - 1; ++level) {
        if (bound < current.max_relation_degree())
            throw HypothesisError("h_dims: bound " + std::to_string(bound) +
                                  " is below the relation degree " +
                                  std::to_string(current.max_relation_degree()) +
                                  " at syzygy level " + std::to_string(level));
        current = syzygy_presentation(current, bound).pres;
    }
    HomologyTable t = h1_dims(current, exec);
    t.index = i;
    t.certified_through = bound;
    return t;
}

/// Complete certificate of semi-inducedness: a finitely presented module is
/// semi-induced exactly when H_1 vanishes, and H_1 lives in degrees bounded by
/// the top relation degree.
struct SemiInducedCertificate {
    bool verdict = false;
    HomologyTable h1_table;
    std::optional<int> witness_degree;
};

template <FieldType F>
SemiInducedCertificate is_semi_induced(const Presentation<F>& p, Exec exec = Exec::serial) {
    SemiInducedCertificate cert;
    cert.h1_table = h1_dims(p, exec);
    cert.verdict = cert.h1_table.dims.empty();
    if (!cert.verdict) cert.witness_degree = cert.h1_table.dims.begin()->first;
    return cert;
}

/// Multiplicities of the natural filtration of a semi-induced module: the
/// layer generated at degree n is induced with multiplicity dim H_0(V)_n, and
/// dim V_m = sum over n of mult(n) * C(m, n).
template <FieldType F>
std::map<int, std::int64_t> filtration_multiplicities(const Presentation<F>& p,
                                                      Exec exec = Exec::serial,
                                                      bool allow_unmet = false) {
    if (!allow_unmet && !is_semi_induced(p, exec).verdict)
        throw HypothesisError("filtration_multiplicities: module is not semi-induced");
    return h0_dims(p, exec).dims;
}

} // namespace oi
