#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "oi/combinatorics.hpp"
#include "oi/field.hpp"
#include "oi/subspace.hpp"

namespace oi {

/// A free OI-module given by the multiset of its generator degrees.
/// The list order is fixed and defines the coordinate block order.
struct FreeModule {
    std::vector<int> degrees;

    bool operator==(const FreeModule&) const = default;
    int max_degree() const {
        return degrees.empty() ? -1 : *std::max_element(degrees.begin(), degrees.end());
    }
};

/// Coordinate system of F_n: one block per generator, lexicographic map order
/// within a block.
class FreeBasis {
public:
    FreeBasis(const FreeModule& f, int n) : free_(&f), n_(n) {
        check_degree_cap(n);
        offsets_.reserve(f.degrees.size() + 1);
        std::size_t acc = 0;
        for (int d : f.degrees) {
            offsets_.push_back(acc);
            acc += binomial_index(n, d);
        }
        offsets_.push_back(acc);
    }

    int degree() const { return n_; }
    std::size_t dim() const { return offsets_.back(); }
    std::size_t block_begin(std::size_t gen) const { return offsets_[gen]; }
    std::size_t block_size(std::size_t gen) const { return offsets_[gen + 1] - offsets_[gen]; }

    std::size_t index(std::size_t gen, const IncreasingMap& map) const {
        return offsets_[gen] + rank_map(map);
    }

    struct BasisVector {
        std::size_t gen;
        IncreasingMap map;
    };

    BasisVector at(std::size_t idx) const {
        std::size_t gen = 0;
        while (idx >= offsets_[gen + 1]) ++gen;
        return BasisVector{gen, unrank_map(free_->degrees[gen], n_, idx - offsets_[gen])};
    }

private:
    const FreeModule* free_;
    int n_;
    std::vector<std::size_t> offsets_;
};

inline std::size_t free_dim(const FreeModule& f, int n) { return FreeBasis(f, n).dim(); }

template <FieldType F>
struct Term {
    std::size_t gen;
    IncreasingMap map; // [d_gen] -> [degree]
    typename F::Scalar coeff;

    bool operator==(const Term&) const = default;
};

/// A homogeneous element of F_degree: a normalized k-linear combination of
/// (generator, morphism) basis vectors. Terms are kept sorted by generator
/// then by map, with no duplicates and no zero coefficients.
template <FieldType F>
struct Element {
    int degree = 0;
    std::vector<Term<F>> terms;

    bool operator==(const Element&) const = default;
    bool is_zero() const { return terms.empty(); }
};

template <FieldType F>
void normalize_element(const F& f, Element<F>& e) {
    std::sort(e.terms.begin(), e.terms.end(), [](const Term<F>& a, const Term<F>& b) {
        if (a.gen != b.gen) return a.gen < b.gen;
        return a.map < b.map;
    });
    std::vector<Term<F>> out;
    out.reserve(e.terms.size());
    for (auto& t : e.terms) {
        if (!out.empty() && out.back().gen == t.gen && out.back().map == t.map)
            out.back().coeff = f.add(out.back().coeff, t.coeff);
        else
            out.push_back(std::move(t));
        if (!out.empty() && f.is_zero(out.back().coeff)) out.pop_back();
    }
    e.terms = std::move(out);
}

/// Verify an element against a free module: map sources must match generator
/// degrees and map targets the element degree.
template <FieldType F>
void validate_element(const FreeModule& fm, const Element<F>& e) {
    for (const auto& t : e.terms) {
        if (t.gen >= fm.degrees.size()) throw SchemaError("element: generator index out of range");
        if (t.map.source() != fm.degrees[t.gen])
            throw SchemaError("element: map source does not match generator degree");
        if (t.map.target != e.degree)
            throw SchemaError("element: map target does not match element degree");
    }
}

/// Functorial action: each term (j, alpha, c) becomes (j, beta.alpha, c).
template <FieldType F>
Element<F> act(const F& f, const IncreasingMap& beta, const Element<F>& e) {
    if (beta.source() != e.degree) throw SchemaError("act: map source does not match element degree");
    Element<F> out;
    out.degree = beta.target;
    out.terms.reserve(e.terms.size());
    for (const auto& t : e.terms)
        out.terms.push_back(Term<F>{t.gen, compose(beta, t.map), t.coeff});
    normalize_element(f, out);
    return out;
}

template <FieldType F>
std::vector<typename F::Scalar> element_vector(const F& f, const FreeBasis& basis,
                                               const Element<F>& e) {
    if (e.degree != basis.degree()) throw SchemaError("element_vector: degree mismatch");
    std::vector<typename F::Scalar> v(basis.dim(), f.zero());
    for (const auto& t : e.terms)
        v[basis.index(t.gen, t.map)] = f.add(v[basis.index(t.gen, t.map)], t.coeff);
    return v;
}

template <FieldType F>
Element<F> vector_element(const F& f, const FreeBasis& basis,
                          const std::vector<typename F::Scalar>& v) {
    if (v.size() != basis.dim()) throw SchemaError("vector_element: dimension mismatch");
    Element<F> e;
    e.degree = basis.degree();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (f.is_zero(v[i])) continue;
        auto bv = basis.at(i);
        e.terms.push_back(Term<F>{bv.gen, std::move(bv.map), v[i]});
    }
    return e; // already sorted by construction
}

/// Image of a coordinate vector of F_src under act(beta, -), written in F_dst
/// coordinates. The action permutes basis vectors, so this is a coordinate
/// relocation (j, alpha) -> (j, beta.alpha).
template <FieldType F>
std::vector<typename F::Scalar> push_vector(const F& f, const FreeBasis& src, const FreeBasis& dst,
                                            const IncreasingMap& beta,
                                            const std::vector<typename F::Scalar>& v) {
    std::vector<typename F::Scalar> out(dst.dim(), f.zero());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (f.is_zero(v[i])) continue;
        auto bv = src.at(i);
        out[dst.index(bv.gen, compose(beta, bv.map))] = v[i];
    }
    return out;
}

} // namespace oi
