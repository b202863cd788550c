#pragma once

#include <optional>
#include <string>

#include "oi/homology.hpp"

namespace oi {

/// The decomposition of a shifted free module: each generator j of degree d_j
/// splits into one summand M(d_j - |E|) per subset E of [r] with |E| <= d_j.
/// Entries are ordered by generator, then by |E|, then lexicographically in E,
/// which fixes the coordinates of the shifted presentation.
struct ShiftedDecomposition {
    struct Entry {
        std::size_t gen;
        std::vector<int> prefix; // the subset E
        int degree;              // d_gen - |E|
    };

    int r = 0;
    std::vector<Entry> entries;

    FreeModule shifted_free() const {
        FreeModule f;
        f.degrees.reserve(entries.size());
        for (const auto& e : entries) f.degrees.push_back(e.degree);
        return f;
    }

    /// Index of the summand a basis morphism gamma of Sigma^r M(d_gen) lands in.
    std::size_t entry_index(std::size_t gen, const std::vector<int>& prefix) const {
        std::size_t idx = offsets_[gen];
        const int ell = static_cast<int>(prefix.size());
        for (int l = 0; l < ell; ++l) idx += binomial_index(r, l);
        idx += rank_map(IncreasingMap(prefix, r));
        return idx;
    }

    static ShiftedDecomposition make(const FreeModule& free, int r) {
        if (r < 0) throw SchemaError("shift: negative r");
        ShiftedDecomposition dec;
        dec.r = r;
        for (std::size_t j = 0; j < free.degrees.size(); ++j) {
            dec.offsets_.push_back(dec.entries.size());
            const int d = free.degrees[j];
            for (int ell = 0; ell <= std::min(d, r); ++ell)
                for (const auto& e : enumerate_maps(ell, r))
                    dec.entries.push_back(Entry{j, e.values, d - ell});
        }
        dec.offsets_.push_back(dec.entries.size());
        return dec;
    }

private:
    std::vector<std::size_t> offsets_;
};

/// Presentation of Sigma^r V: the shifted free module from the decomposition,
/// with one relation per basis vector of W_{m+r} for each m up to the top
/// relation degree, re-coordinatized through the decomposition.
template <FieldType F>
std::pair<Presentation<F>, ShiftedDecomposition> shift_presentation(const Presentation<F>& p,
                                                                    int r) {
    const F& f = p.field;
    auto dec = ShiftedDecomposition::make(p.free, r);
    Presentation<F> out{f, dec.shifted_free(), {}};
    for (int m = 0; m <= p.max_relation_degree(); ++m) {
        auto w = relation_space(p, m + r);
        if (w.dim() == 0) continue;
        FreeBasis basis(p.free, m + r);
        for (const auto& v : w.basis()) {
            Element<F> e;
            e.degree = m;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (f.is_zero(v[i])) continue;
                auto bv = basis.at(i);
                auto split = decompose_shifted(bv.map, r);
                e.terms.push_back(
                    Term<F>{dec.entry_index(bv.gen, split.prefix), split.residual, v[i]});
            }
            normalize_element(f, e);
            out.relations.push_back(std::move(e));
        }
    }
    return {std::move(out), std::move(dec)};
}

/// The degreewise oracle for the shift: dim (Sigma^r V)_n = dim V_{n+r}.
template <FieldType F>
std::int64_t shift_eval_dim(const Presentation<F>& p, int r, int n) {
    if (r < 0) throw SchemaError("shift: negative r");
    return dim_at(p, n + r);
}

struct KappaDelta {
    std::int64_t kappa = 0;
    std::int64_t delta = 0;
};

/// Kernel and cokernel dimensions of the natural map V_n -> V_{n+1} induced
/// by iota. The image is spanned by the iota-images of the F_n basis modulo
/// W_{n+1}, which are unit coordinates.
template <FieldType F>
KappaDelta kappa_delta_at(const Presentation<F>& p, int n) {
    const std::int64_t dim_n = dim_at(p, n);
    auto w_next = relation_space(p, n + 1);
    const std::int64_t dim_next =
        static_cast<std::int64_t>(free_dim(p.free, n + 1)) - static_cast<std::int64_t>(w_next.dim());

    FreeBasis src(p.free, n);
    FreeBasis dst(p.free, n + 1);
    const auto inc = iota(n);
    std::vector<bool> mask(dst.dim(), false);
    for (std::size_t i = 0; i < src.dim(); ++i) {
        auto bv = src.at(i);
        mask[dst.index(bv.gen, compose(inc, bv.map))] = true;
    }
    const std::size_t w_dim = w_next.dim();
    const std::size_t join = span_extend_units(std::move(w_next), mask).dim();
    const std::int64_t rank = static_cast<std::int64_t>(join - w_dim);

    KappaDelta kd;
    kd.kappa = dim_n - rank;
    kd.delta = dim_next - dim_n + kd.kappa;
    return kd;
}

template <FieldType F>
std::int64_t kappa_dim(const Presentation<F>& p, int n) {
    return kappa_delta_at(p, n).kappa;
}

template <FieldType F>
std::int64_t delta_dim(const Presentation<F>& p, int n) {
    return kappa_delta_at(p, n).delta;
}

/// dim H_0(Delta V)_n from the degreewise description of Delta V:
/// (Delta V)_n = F_{n+1} / (W_{n+1} + iota F_n), with morphisms acting through
/// their sigma lifts.
template <FieldType F>
std::int64_t delta_h0_dim(const Presentation<F>& p, int n) {
    auto t = relation_space(p, n + 1);
    FreeBasis mid(p.free, n);
    FreeBasis dst(p.free, n + 1);
    const auto inc = iota(n);
    std::vector<bool> mask(dst.dim(), false);
    for (std::size_t i = 0; i < mid.dim(); ++i) {
        auto bv = mid.at(i);
        mask[dst.index(bv.gen, compose(inc, bv.map))] = true;
    }
    t = span_extend_units(std::move(t), mask);
    const std::int64_t delta_dim_n =
        static_cast<std::int64_t>(dst.dim()) - static_cast<std::int64_t>(t.dim());
    if (n == 0) return delta_dim_n;

    // images of (Delta V)_{n-1}: sigma-lifted one-step maps applied to F_n
    std::vector<bool> img(dst.dim(), false);
    for (const auto& beta : enumerate_maps(n - 1, n)) {
        const auto lifted = sigma_lift(beta);
        for (std::size_t i = 0; i < mid.dim(); ++i) {
            auto bv = mid.at(i);
            img[dst.index(bv.gen, compose(lifted, bv.map))] = true;
        }
    }
    const std::size_t before = t.dim();
    t = span_extend_units(std::move(t), img);
    const std::int64_t image_dim = static_cast<std::int64_t>(t.dim() - before);
    return delta_dim_n - image_dim;
}

/// The data behind the V-bar construction: the top free part P and the
/// hat generators of the projected relation module.
template <FieldType F>
struct VBarData {
    int d = 0;                                // t_0 of the input
    int r = 0;
    std::vector<std::size_t> top_generators;  // generator indices of degree d
    FreeModule pfree;                         // |I| generators of degree d
    std::vector<Element<F>> what_generators;  // over pfree; first values all 1
    int search_bound = -1;                    // relation degrees searched
};

/// First value of a basis morphism of M(d) at degree s, with the convention
/// that the empty map out of [0] counts as first value s + 1: it survives the
/// projection at exactly one hat index.
inline int first_value(const IncreasingMap& a) {
    return a.source() == 0 ? a.target + 1 : a(1);
}

template <FieldType F>
VBarData<F> what_generators(const Presentation<F>& p, int r, Exec exec = Exec::serial) {
    const F& f = p.field;
    VBarData<F> vb;
    vb.d = t0(p, exec);
    vb.r = r;
    if (vb.d < 0) throw HypothesisError("what_generators: zero module");
    if (p.max_generator_degree() != vb.d)
        throw HypothesisError(
            "what_generators: the cover must have top generator degree equal to t0; "
            "remove generators above degree " +
            std::to_string(vb.d));

    std::vector<std::optional<std::size_t>> new_index(p.free.degrees.size());
    for (std::size_t j = 0; j < p.free.degrees.size(); ++j) {
        if (p.free.degrees[j] != vb.d) continue;
        new_index[j] = vb.top_generators.size();
        vb.top_generators.push_back(j);
    }
    vb.pfree.degrees.assign(vb.top_generators.size(), vb.d);
    vb.search_bound = p.max_relation_degree();

    for (int s = vb.d; s <= vb.search_bound; ++s) {
        auto w = relation_space(p, s);
        if (w.dim() == 0) continue;
        FreeBasis basis(p.free, s);
        for (const auto& v : w.basis()) {
            const auto elem = vector_element(f, basis, v);
            for (int ell = 1; ell <= s - vb.d + 1; ++ell) {
                Element<F> hat_elem;
                hat_elem.degree = s - ell + 1;
                for (const auto& t : elem.terms) {
                    if (!new_index[t.gen] || first_value(t.map) != ell) continue;
                    std::vector<int> vals = t.map.values;
                    for (int& x : vals) x -= ell - 1;
                    hat_elem.terms.push_back(Term<F>{*new_index[t.gen],
                                                     IncreasingMap(std::move(vals), hat_elem.degree),
                                                     t.coeff});
                }
                normalize_element(f, hat_elem);
                if (!hat_elem.is_zero()) vb.what_generators.push_back(std::move(hat_elem));
            }
        }
    }
    return vb;
}

/// V-bar = Sigma^r V / (Sigma^r V)_<d as the quotient of the top free part P
/// by the span of the hat generators.
template <FieldType F>
Presentation<F> vbar_presentation(const Presentation<F>& p, int r, Exec exec = Exec::serial) {
    auto vb = what_generators(p, r, exec);
    return Presentation<F>{p.field, std::move(vb.pfree), std::move(vb.what_generators)};
}

/// Result of a windowed certification run.
struct Certificate {
    std::string check;
    std::map<std::string, std::int64_t> params;
    int window = 0;
    bool pass = false;
    std::optional<int> first_failure;
    bool exploratory = false; // hypothesis unmet, run was forced
};

/// Certifies kappa(V-bar) = 0 on all degrees <= window. Requires r >= prd
/// unless force is set, in which case the certificate is marked exploratory.
template <FieldType F>
Certificate check_kappa_vbar(const Presentation<F>& p, int r, int window,
                             Exec exec = Exec::serial, bool force = false) {
    Certificate cert;
    cert.check = "theorem-1.1-kappa-vbar";
    cert.window = window;
    if (window < 1) throw SchemaError("check_kappa_vbar: window must be >= 1");
    const int pres_deg = prd(p, exec);
    cert.params["r"] = r;
    cert.params["prd"] = pres_deg;
    if (r < pres_deg) {
        if (!force)
            throw HypothesisError("check_kappa_vbar: r = " + std::to_string(r) +
                                  " is below prd = " + std::to_string(pres_deg));
        cert.exploratory = true;
    }
    const auto vbar = vbar_presentation(p, r, exec);
    std::vector<std::int64_t> kappa(static_cast<std::size_t>(window) + 1, 0);
    for_each_degree(exec, 0, window,
                    [&](int n) { kappa[static_cast<std::size_t>(n)] = kappa_dim(vbar, n); });
    cert.pass = true;
    for (int n = 0; n <= window; ++n) {
        if (kappa[static_cast<std::size_t>(n)] == 0) continue;
        cert.pass = false;
        cert.first_failure = n;
        break;
    }
    return cert;
}

/// Compares, degree by degree, the span of the composites of the hat
/// generators against the direct projection of (Sigma^r W)_n onto the top
/// part P: terms whose morphism stays above r, shifted down by r.
template <FieldType F>
Certificate verify_what_span(const Presentation<F>& p, int r, int window,
                             Exec exec = Exec::serial) {
    const F& f = p.field;
    Certificate cert;
    cert.check = "proposition-3.2-what-span";
    cert.window = window;
    if (window < 0 || r < 0) throw SchemaError("verify_what_span: bad parameters");
    const int pres_deg = prd(p, exec);
    cert.params["r"] = r;
    cert.params["prd"] = pres_deg;
    cert.exploratory = r < pres_deg;

    auto vb = what_generators(p, r, exec);
    Presentation<F> hat_pres{f, vb.pfree, vb.what_generators};
    std::vector<std::optional<std::size_t>> new_index(p.free.degrees.size());
    for (std::size_t i = 0; i < vb.top_generators.size(); ++i)
        new_index[vb.top_generators[i]] = i;

    std::vector<char> equal(static_cast<std::size_t>(window) + 1, 0);
    for_each_degree(exec, 0, window, [&](int n) {
        const auto lhs = relation_space(hat_pres, n);

        FreeBasis pb(vb.pfree, n);
        auto rhs = Subspace<F>::zero(f, pb.dim());
        auto w = relation_space(p, n + r);
        FreeBasis fb(p.free, n + r);
        std::vector<std::vector<typename F::Scalar>> rows;
        rows.reserve(w.dim());
        for (const auto& v : w.basis()) {
            std::vector<typename F::Scalar> row(pb.dim(), f.zero());
            bool nonzero = false;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (f.is_zero(v[i])) continue;
                auto bv = fb.at(i);
                if (!new_index[bv.gen] || first_value(bv.map) <= r) continue;
                std::vector<int> vals = bv.map.values;
                for (int& x : vals) x -= r;
                row[pb.index(*new_index[bv.gen], IncreasingMap(std::move(vals), n))] = v[i];
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
        rhs = span_extend(std::move(rhs), std::move(rows));
        equal[static_cast<std::size_t>(n)] = lhs == rhs ? 1 : 0;
    });

    cert.pass = true;
    for (int n = 0; n <= window; ++n) {
        if (equal[static_cast<std::size_t>(n)]) continue;
        cert.pass = false;
        cert.first_failure = n;
        break;
    }
    return cert;
}

} // namespace oi
