#pragma once

#include "oi/functors.hpp"

namespace oi {

/// The doubly-recursive bound C_d(r) = C_{d-1}(C_{d-1}(r-1) + 3) + r with
/// C_0(r) = r, on arbitrary integers. Memoized; exact big integers.
BigInt c_bound(int d, const BigInt& r);

/// 2^(2^e); guarded against exponents too large to materialize.
BigInt two_pow_two_pow(int e);

/// Quantitative invariants of a presentation.
struct BoundReport {
    int t0 = -1;
    int t1 = -1;
    int prd = -1;
    bool degenerate = false; // zero module: reg = -1 by convention
    BigInt c_bound = -1;               // C_{t0}(prd), the sharper bound
    BigInt reg_bound = -1;             // closed form 2^(2^t0) * prd
    BigInt onset_bound = -1;           // Hilbert polynomiality onset, same closed form
    BigInt filtration_size_bound = 0;  // 2^(t0+1) - 1
};

template <FieldType F>
BoundReport reg_bound(const Presentation<F>& p, Exec exec = Exec::serial) {
    BoundReport b;
    b.t0 = t0(p, exec);
    b.t1 = t1(p, exec);
    b.prd = std::max(b.t0, b.t1);
    if (b.t0 < 0) {
        b.degenerate = true;
        return b;
    }
    b.c_bound = c_bound(b.t0, BigInt(b.prd));
    b.reg_bound = two_pow_two_pow(b.t0) * b.prd;
    b.onset_bound = b.reg_bound;
    b.filtration_size_bound = (BigInt(1) << (b.t0 + 1)) - 1;
    return b;
}

/// An exact polynomial fit of the Hilbert function on the tail of a window.
struct HilbertFit {
    int from = 0;
    int to = 0;
    std::vector<std::int64_t> values;
    bool found = false;
    int empirical_onset = -1;
    std::vector<Rational> polynomial; // monomial coefficients, constant first

    int degree() const { return static_cast<int>(polynomial.size()) - 1; }
};

/// Evaluate the fitted polynomial at an integer point.
Rational eval_polynomial(const std::vector<Rational>& coeffs, long x);

namespace detail {

/// Newton forward interpolation through (a, v[0]), ..., (a + k, v[k]):
/// monomial coefficients of the unique polynomial of degree <= k.
std::vector<Rational> newton_interpolate(int a, const std::vector<std::int64_t>& v);

} // namespace detail

/// Finds the largest tail of [n0, n1] on which the (t0+1)-th finite difference
/// of the Hilbert function vanishes identically, and interpolates the exact
/// polynomial of degree <= t0 through it. Exact arithmetic, no tolerance.
template <FieldType F>
HilbertFit hilbert_poly_fit(const Presentation<F>& p, int n0, int n1, Exec exec = Exec::serial) {
    const int d0 = t0(p, exec);
    HilbertFit fit;
    fit.from = n0;
    fit.to = n1;
    if (n0 < 0 || n1 < n0) throw SchemaError("hilbert_poly_fit: bad window");
    if (d0 >= 0 && n1 - n0 < d0 + 2)
        throw SchemaError("hilbert_poly_fit: window must span at least t0 + 2 degrees");
    fit.values = window_dims(p, n0, n1, exec);
    if (d0 < 0) {
        fit.found = true;
        fit.empirical_onset = n0;
        return fit; // zero module: the zero polynomial
    }

    const int k = d0 + 1;
    // forward differences of order k over the window
    std::vector<Rational> diff(fit.values.begin(), fit.values.end());
    for (int step = 0; step < k; ++step)
        for (std::size_t i = 0; i + 1 < diff.size() - static_cast<std::size_t>(step); ++i)
            diff[i] = diff[i + 1] - diff[i];
    const std::size_t dcount = fit.values.size() - static_cast<std::size_t>(k);

    std::size_t start = dcount;
    while (start > 0 && diff[start - 1] == 0) --start;
    if (start == dcount) return fit; // no vanishing tail inside the window

    fit.empirical_onset = n0 + static_cast<int>(start);
    std::vector<std::int64_t> nodes(fit.values.begin() + static_cast<std::ptrdiff_t>(start),
                                    fit.values.begin() + static_cast<std::ptrdiff_t>(start) + d0 + 1);
    fit.polynomial = detail::newton_interpolate(fit.empirical_onset, nodes);
    for (std::size_t i = start; i < fit.values.size(); ++i) {
        if (eval_polynomial(fit.polynomial, n0 + static_cast<long>(i)) != fit.values[i])
            throw Error("hilbert_poly_fit: internal consistency failure");
    }
    fit.found = true;
    return fit;
}

/// t0 of the shifted presentations for shifts 0..max_shift, plus their
/// minimum: an empirical probe of the stable degree, with no claim of global
/// minimality.
template <FieldType F>
std::pair<std::vector<int>, int> std_empirical(const Presentation<F>& p, int max_shift,
                                               Exec exec = Exec::serial) {
    if (max_shift < 0) throw SchemaError("std_empirical: negative shift");
    std::vector<int> seq(static_cast<std::size_t>(max_shift) + 1, -1);
    for_each_degree(exec, 0, max_shift, [&](int n) {
        seq[static_cast<std::size_t>(n)] = t0(shift_presentation(p, n).first);
    });
    int best = seq.empty() ? -1 : *std::min_element(seq.begin(), seq.end());
    return {std::move(seq), best};
}

} // namespace oi
