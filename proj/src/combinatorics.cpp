#include "oi/combinatorics.hpp"

#include <atomic>
#include <sstream>

namespace oi {

namespace {
std::atomic<int> g_degree_cap{64};
}

int degree_cap() { return g_degree_cap.load(std::memory_order_relaxed); }

void set_degree_cap(int cap) {
    if (cap < 0) throw SchemaError("degree cap must be non-negative");
    g_degree_cap.store(cap, std::memory_order_relaxed);
}

void check_degree_cap(int n) {
    if (n > degree_cap()) {
        std::ostringstream os;
        os << "degree " << n << " exceeds the degree cap " << degree_cap();
        throw DegreeCapError(os.str());
    }
}

IncreasingMap::IncreasingMap(std::vector<int> vals, int tgt) : target(tgt), values(std::move(vals)) {
    if (target < 0) throw SchemaError("map target must be non-negative");
    int prev = 0;
    for (int v : values) {
        if (v <= prev) throw SchemaError("map values must be strictly increasing and >= 1");
        prev = v;
    }
    if (prev > target) throw SchemaError("map value exceeds target");
}

IncreasingMap IncreasingMap::identity(int n) {
    std::vector<int> vals(static_cast<std::size_t>(n));
    for (int h = 1; h <= n; ++h) vals[static_cast<std::size_t>(h) - 1] = h;
    return IncreasingMap(std::move(vals), n);
}

bool IncreasingMap::operator<(const IncreasingMap& o) const {
    return values < o.values;
}

std::string to_string(const IncreasingMap& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (i) os << ",";
        os << a.values[i];
    }
    os << "):[" << a.source() << "]->[" << a.target << "]";
    return os.str();
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::size_t binomial_index(int n, int k) {
    BigInt b = binomial(n, k);
    if (!b.fits_ulong_p()) throw SchemaError("binomial coefficient too large for an index");
    return static_cast<std::size_t>(b.get_ui());
}

std::vector<IncreasingMap> enumerate_maps(int m, int n) {
    if (m < 0 || n < 0) throw SchemaError("enumerate_maps: negative size");
    check_degree_cap(n);
    std::vector<IncreasingMap> out;
    if (m > n) return out;
    out.reserve(binomial_index(n, m));
    std::vector<int> vals(static_cast<std::size_t>(m));
    for (int h = 0; h < m; ++h) vals[static_cast<std::size_t>(h)] = h + 1;
    while (true) {
        out.emplace_back(vals, n);
        // advance to the next combination in lexicographic order
        int h = m - 1;
        while (h >= 0 && vals[static_cast<std::size_t>(h)] == n - (m - 1 - h)) --h;
        if (h < 0) break;
        ++vals[static_cast<std::size_t>(h)];
        for (int j = h + 1; j < m; ++j)
            vals[static_cast<std::size_t>(j)] = vals[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::size_t rank_map(const IncreasingMap& a) {
    const int m = a.source();
    const int n = a.target;
    std::size_t rank = 0;
    int prev = 0;
    for (int h = 1; h <= m; ++h) {
        for (int w = prev + 1; w < a(h); ++w)
            rank += binomial_index(n - w, m - h);
        prev = a(h);
    }
    return rank;
}

IncreasingMap unrank_map(int m, int n, std::size_t index) {
    if (m < 0 || n < 0) throw SchemaError("unrank_map: negative size");
    if (BigInt(static_cast<unsigned long>(index)) >= binomial(n, m))
        throw SchemaError("unrank_map: index out of range");
    std::vector<int> vals(static_cast<std::size_t>(m));
    int prev = 0;
    for (int h = 1; h <= m; ++h) {
        int w = prev + 1;
        while (true) {
            std::size_t block = binomial_index(n - w, m - h);
            if (index < block) break;
            index -= block;
            ++w;
        }
        vals[static_cast<std::size_t>(h) - 1] = w;
        prev = w;
    }
    return IncreasingMap(std::move(vals), n);
}

IncreasingMap compose(const IncreasingMap& beta, const IncreasingMap& alpha) {
    if (alpha.target != beta.source())
        throw SchemaError("compose: source/target mismatch");
    std::vector<int> vals(alpha.values.size());
    for (std::size_t h = 0; h < alpha.values.size(); ++h)
        vals[h] = beta.values[static_cast<std::size_t>(alpha.values[h]) - 1];
    return IncreasingMap(std::move(vals), beta.target);
}

IncreasingMap iota(int n) {
    std::vector<int> vals(static_cast<std::size_t>(n));
    for (int h = 1; h <= n; ++h) vals[static_cast<std::size_t>(h) - 1] = h + 1;
    return IncreasingMap(std::move(vals), n + 1);
}

IncreasingMap sigma_lift(const IncreasingMap& a) {
    std::vector<int> vals(a.values.size() + 1);
    vals[0] = 1;
    for (std::size_t h = 0; h < a.values.size(); ++h) vals[h + 1] = a.values[h] + 1;
    return IncreasingMap(std::move(vals), a.target + 1);
}

IncreasingMap embed_prefix(const IncreasingMap& a, const std::vector<int>& e, int r) {
    int prev = 0;
    for (int v : e) {
        if (v <= prev || v > r)
            throw SchemaError("embed_prefix: E must be a strictly increasing subset of [r]");
        prev = v;
    }
    std::vector<int> vals;
    vals.reserve(e.size() + a.values.size());
    for (int v : e) vals.push_back(v);
    for (int v : a.values) vals.push_back(v + r);
    return IncreasingMap(std::move(vals), a.target + r);
}

HatResult hat(const IncreasingMap& a) {
    if (a.source() == 0) throw SchemaError("hat: empty map");
    const int ell = a(1);
    std::vector<int> vals(a.values.size());
    for (std::size_t h = 0; h < a.values.size(); ++h) vals[h] = a.values[h] - ell + 1;
    return HatResult{ell, IncreasingMap(std::move(vals), a.target - ell + 1)};
}

ShiftSplit decompose_shifted(const IncreasingMap& g, int r) {
    if (g.target < r) throw SchemaError("decompose_shifted: target smaller than r");
    ShiftSplit out;
    std::vector<int> rest;
    for (int v : g.values) {
        if (v <= r) out.prefix.push_back(v);
        else rest.push_back(v - r);
    }
    out.residual = IncreasingMap(std::move(rest), g.target - r);
    return out;
}

} // namespace oi
