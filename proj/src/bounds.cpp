#include "oi/bounds.hpp"

#include <map>
#include <mutex>

namespace oi {

namespace {
std::mutex g_cbound_mutex;
std::map<std::pair<int, BigInt>, BigInt> g_cbound_memo;
} // namespace

BigInt c_bound(int d, const BigInt& r) {
    if (d < 0) throw SchemaError("c_bound: negative d");
    if (d == 0) return r;
    {
        std::lock_guard<std::mutex> lock(g_cbound_mutex);
        auto it = g_cbound_memo.find({d, r});
        if (it != g_cbound_memo.end()) return it->second;
    }
    BigInt inner = c_bound(d - 1, r - 1) + 3;
    BigInt value = c_bound(d - 1, inner) + r;
    std::lock_guard<std::mutex> lock(g_cbound_mutex);
    g_cbound_memo.emplace(std::make_pair(d, r), value);
    return value;
}

BigInt two_pow_two_pow(int e) {
    if (e < 0) throw SchemaError("two_pow_two_pow: negative exponent");
    if (e > 26) throw SchemaError("two_pow_two_pow: result too large to materialize");
    return BigInt(1) << (1UL << static_cast<unsigned>(e));
}

Rational eval_polynomial(const std::vector<Rational>& coeffs, long x) {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace detail {

std::vector<Rational> newton_interpolate(int a, const std::vector<std::int64_t>& v) {
    const std::size_t k = v.size();
    // forward difference pyramid at the left node
    std::vector<Rational> delta(v.begin(), v.end());
    std::vector<Rational> lead;
    lead.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        lead.push_back(delta[0]);
        for (std::size_t i = 0; i + 1 < delta.size() - j; ++i) delta[i] = delta[i + 1] - delta[i];
    }

    // P(x) = sum_j lead[j]/j! * (x - a)(x - a - 1)...(x - a - j + 1)
    std::vector<Rational> poly{Rational(0)};
    std::vector<Rational> falling{Rational(1)};
    Rational factorial(1);
    for (std::size_t j = 0; j < k; ++j) {
        if (j > 0) {
            factorial *= static_cast<long>(j);
            std::vector<Rational> next(falling.size() + 1, Rational(0));
            const Rational root(a + static_cast<long>(j) - 1);
            for (std::size_t i = 0; i < falling.size(); ++i) {
                next[i + 1] += falling[i];
                next[i] -= falling[i] * root;
            }
            falling = std::move(next);
        }
        const Rational coef = lead[j] / factorial;
        if (poly.size() < falling.size()) poly.resize(falling.size(), Rational(0));
        for (std::size_t i = 0; i < falling.size(); ++i) poly[i] += coef * falling[i];
    }

    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    return poly;
}

} // namespace detail

} // namespace oi
