#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "oi/error.hpp"

namespace oi {

using BigInt = mpz_class;

/// A morphism of OI: a strictly increasing map [m] -> [n], stored as its
/// value sequence (1-based). The empty sequence is the unique map out of [0].
struct IncreasingMap {
    int target = 0;
    std::vector<int> values; // strictly increasing, each in 1..target

    IncreasingMap() = default;
    IncreasingMap(std::vector<int> vals, int tgt);

    int source() const { return static_cast<int>(values.size()); }
    int operator()(int h) const { return values[static_cast<std::size_t>(h) - 1]; }

    static IncreasingMap identity(int n);

    bool operator==(const IncreasingMap& o) const = default;
    // values-lexicographic, matching enumeration order within fixed (m, n)
    bool operator<(const IncreasingMap& o) const;
};

std::string to_string(const IncreasingMap& a);

/// Global degree cap guarding combinatorial blowup (default 64).
int degree_cap();
void set_degree_cap(int cap);
/// Throws DegreeCapError when n exceeds the cap.
void check_degree_cap(int n);

/// C(n, k) exactly; 0 when k > n or k < 0.
BigInt binomial(long n, long k);
/// C(n, k) as an index type; throws SchemaError when it does not fit.
std::size_t binomial_index(int n, int k);

/// All increasing maps [m] -> [n] in lexicographic order of value sequences.
/// This order is the canonical basis order everywhere in the library.
std::vector<IncreasingMap> enumerate_maps(int m, int n);

/// Position of a map within enumerate_maps(source, target).
std::size_t rank_map(const IncreasingMap& a);
/// Inverse of rank_map; 0 <= index < C(n, m).
IncreasingMap unrank_map(int m, int n, std::size_t index);

/// Composition (beta . alpha)(h) = beta(alpha(h)); requires alpha.target = beta.source.
IncreasingMap compose(const IncreasingMap& beta, const IncreasingMap& alpha);

/// iota : [n] -> [n+1], h |-> h+1.
IncreasingMap iota(int n);

/// sigma(alpha) : [m+1] -> [n+1] with sigma(alpha)(1) = 1 and
/// sigma(alpha)(h) = alpha(h-1)+1 for h > 1.
IncreasingMap sigma_lift(const IncreasingMap& a);

/// Prefix embedding alpha_E : [m] -> [alpha.target + r], where E = {e_1 < ... < e_l}
/// is a subset of [r]: the first l values are E, the rest are alpha shifted by r.
IncreasingMap embed_prefix(const IncreasingMap& a, const std::vector<int>& e, int r);

struct HatResult {
    int ell = 0;          // = alpha(1)
    IncreasingMap map;    // [d] -> [s - ell + 1], values alpha(h) - ell + 1
};

/// Hat normalization of a nonempty map; the result always has first value 1.
HatResult hat(const IncreasingMap& a);

struct ShiftSplit {
    std::vector<int> prefix;  // E = values of gamma that land in [r]
    IncreasingMap residual;   // [m - |E|] -> [gamma.target - r]
};

/// Inverse of embed_prefix: split gamma : [m] -> [n + r] into the prefix
/// subset E of [r] it hits and the residual map into [n].
ShiftSplit decompose_shifted(const IncreasingMap& g, int r);

} // namespace oi
