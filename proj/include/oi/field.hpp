#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "oi/error.hpp"

namespace oi {

using Rational = mpq_class;

/// Runtime description of the coefficient field of a presentation.
struct FieldSpec {
    enum class Kind { rationals, prime };
    Kind kind = Kind::rationals;
    std::uint64_t p = 0; // prime characteristic, prime kind only

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t p);

/// The field of rationals with arbitrary-precision arithmetic.
class RationalField {
public:
    using Scalar = Rational;

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::rationals, 0}; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }
    Scalar from_int(long v) const { return Scalar(v); }
    Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
    Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar neg(const Scalar& a) const { return -a; }
    Scalar inv(const Scalar& a) const {
        if (a == 0) throw SchemaError("division by zero");
        return Scalar(1) / a;
    }
    bool is_zero(const Scalar& a) const { return a == 0; }
    bool eq(const Scalar& a, const Scalar& b) const { return a == b; }

    /// Canonical form: "a" or "a/b" with b > 0 and gcd(a, b) = 1.
    std::string to_string(const Scalar& a) const { return a.get_str(); }
    Scalar parse(const std::string& s) const;
};

/// A prime field F_p with residues 0..p-1; p must be an odd-sized prime < 2^31
/// so that products fit in 64-bit intermediates.
class PrimeField {
public:
    using Scalar = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    FieldSpec spec() const { return FieldSpec{FieldSpec::Kind::prime, p_}; }
    std::uint64_t characteristic() const { return p_; }

    Scalar zero() const { return 0; }
    Scalar one() const { return 1 % p_; }
    Scalar from_int(long v) const {
        long r = v % static_cast<long>(p_);
        if (r < 0) r += static_cast<long>(p_);
        return static_cast<Scalar>(r);
    }
    Scalar add(Scalar a, Scalar b) const {
        Scalar s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + p_ - b; }
    Scalar mul(Scalar a, Scalar b) const { return (a * b) % p_; }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar inv(Scalar a) const;
    bool is_zero(Scalar a) const { return a == 0; }
    bool eq(Scalar a, Scalar b) const { return a == b; }

    /// Canonical form: the decimal residue 0..p-1.
    std::string to_string(Scalar a) const { return std::to_string(a); }
    Scalar parse(const std::string& s) const;

private:
    std::uint64_t p_;
};

template <class F>
concept FieldType = requires(const F f, const typename F::Scalar a, const typename F::Scalar b) {
    { f.zero() } -> std::same_as<typename F::Scalar>;
    { f.one() } -> std::same_as<typename F::Scalar>;
    { f.add(a, b) } -> std::same_as<typename F::Scalar>;
    { f.sub(a, b) } -> std::same_as<typename F::Scalar>;
    { f.mul(a, b) } -> std::same_as<typename F::Scalar>;
    { f.neg(a) } -> std::same_as<typename F::Scalar>;
    { f.inv(a) } -> std::same_as<typename F::Scalar>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.eq(a, b) } -> std::same_as<bool>;
    { f.to_string(a) } -> std::same_as<std::string>;
    { f.spec() } -> std::same_as<FieldSpec>;
};

/// Dispatch a callable over the concrete field type named by a FieldSpec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::rationals) return fn(RationalField{});
    return fn(PrimeField{spec.p});
}

} // namespace oi
