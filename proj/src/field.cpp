#include "oi/field.hpp"

#include <cctype>

namespace oi {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

// Accepts an optional sign, digits, and an optional "/digits" part.
void split_fraction(const std::string& s, std::string& num, std::string& den) {
    auto slash = s.find('/');
    num = slash == std::string::npos ? s : s.substr(0, slash);
    den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto valid = [](const std::string& t, bool sign_ok) {
        if (t.empty()) return false;
        std::size_t i = 0;
        if (sign_ok && (t[0] == '-' || t[0] == '+')) i = 1;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!valid(num, true) || !valid(den, false))
        throw SchemaError("malformed scalar '" + s + "'");
}

} // namespace

Rational RationalField::parse(const std::string& s) const {
    std::string num, den;
    split_fraction(s, num, den);
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
        throw SchemaError("malformed scalar '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw SchemaError("zero denominator in scalar '" + s + "'");
    q.canonicalize();
    return q;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw SchemaError("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 31)) throw SchemaError("prime characteristic too large");
}

PrimeField::Scalar PrimeField::inv(Scalar a) const {
    if (a == 0) throw SchemaError("division by zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(t);
}

PrimeField::Scalar PrimeField::parse(const std::string& s) const {
    std::string num, den;
    split_fraction(s, num, den);
    bool negative = !num.empty() && num[0] == '-';
    std::string mag = (negative || (!num.empty() && num[0] == '+')) ? num.substr(1) : num;
    auto reduce = [this](const std::string& digits) {
        Scalar acc = 0;
        for (char c : digits) acc = (acc * 10 + static_cast<Scalar>(c - '0')) % p_;
        return acc;
    };
    Scalar n = reduce(mag);
    if (negative) n = neg(n);
    Scalar d = reduce(den);
    if (d == 0) throw SchemaError("scalar '" + s + "' has denominator divisible by " + std::to_string(p_));
    return mul(n, inv(d));
}

} // namespace oi
