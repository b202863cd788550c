#include <doctest.h>

#include <random>

#include "oi/subspace.hpp"
#include "oracle.hpp"

using namespace oi;

namespace {

template <FieldType F>
Matrix<F> from_rows(const F& f, const std::vector<std::vector<long>>& rows) {
    Matrix<F> m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = f.from_int(rows[i][j]);
    return m;
}

template <FieldType F>
Matrix<F> random_matrix(const F& f, std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> dist(-3, 3);
    Matrix<F> m(f, rows, cols);
    for (auto& x : m.data) x = f.from_int(dist(rng));
    return m;
}

template <FieldType F>
std::vector<std::vector<typename F::Scalar>> matrix_rows(const Matrix<F>& m) {
    std::vector<std::vector<typename F::Scalar>> rows;
    for (std::size_t i = 0; i < m.rows; ++i) rows.push_back(m.row(i));
    return rows;
}

} // namespace

TEST_CASE("scalar parsing and canonical serialization") {
    RationalField q;
    CHECK(q.to_string(q.parse("2/3")) == "2/3");
    CHECK(q.to_string(q.parse("4/6")) == "2/3");
    CHECK(q.to_string(q.parse("-4/6")) == "-2/3");
    CHECK(q.to_string(q.parse("7")) == "7");
    CHECK(q.to_string(q.parse("14/2")) == "7");
    CHECK_THROWS_AS(q.parse("1/0"), SchemaError);
    CHECK_THROWS_AS(q.parse("a"), SchemaError);
    CHECK_THROWS_AS(q.parse("1/-2"), SchemaError);

    PrimeField f5(5);
    CHECK(f5.parse("7") == 2);
    CHECK(f5.parse("-1") == 4);
    CHECK(f5.parse("3/2") == 4); // 3 * inv(2) = 3 * 3 = 9 = 4
    CHECK_THROWS_AS(f5.parse("1/5"), SchemaError);
    CHECK(f5.to_string(f5.parse("-1")) == "4");

    CHECK_THROWS_AS(PrimeField(4), SchemaError);
    CHECK_THROWS_AS(PrimeField(1), SchemaError);
    CHECK(PrimeField(2).inv(1) == 1);
    for (std::uint64_t a = 1; a < 7; ++a) {
        PrimeField f7(7);
        CHECK(f7.mul(a, f7.inv(a)) == 1);
    }
}

TEST_CASE("rref basics") {
    RationalField q;
    auto [id3, rank_id] = rref(q, from_rows(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(rank_id == 3);
    CHECK(id3 == from_rows(q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

    auto [z, rank_z] = rref(q, from_rows(q, {{0, 0}, {0, 0}}));
    CHECK(rank_z == 0);
    CHECK(z == from_rows(q, {{0, 0}, {0, 0}}));

    auto [m, rank_m] = rref(q, from_rows(q, {{1, 2}, {2, 4}}));
    CHECK(rank_m == 1);
    CHECK(m == from_rows(q, {{1, 2}, {0, 0}}));
}

TEST_CASE("kernel basics and rank-nullity against the oracle") {
    RationalField q;
    CHECK(kernel_basis(q, from_rows(q, {{1, 0}, {0, 1}})).dim() == 0);
    CHECK(kernel_basis(q, from_rows(q, {{0, 0, 0}, {0, 0, 0}})).dim() == 3);

    std::mt19937 rng(1234);
    PrimeField f5(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto mq = random_matrix(q, rng, 5, 7);
        auto ker = kernel_basis(q, mq);
        CHECK(ker.dim() == 7 - oracle::rank(q, matrix_rows(mq)));
        for (const auto& v : ker.basis()) {
            for (std::size_t i = 0; i < mq.rows; ++i) {
                auto acc = q.zero();
                for (std::size_t j = 0; j < mq.cols; ++j) acc += mq.at(i, j) * v[j];
                CHECK(q.is_zero(acc));
            }
        }

        auto mp = random_matrix(f5, rng, 5, 7);
        CHECK(kernel_basis(f5, mp).dim() == 7 - oracle::rank(f5, matrix_rows(mp)));
    }
}

TEST_CASE("subspace joins, intersections and the modular law") {
    RationalField q;
    std::mt19937 rng(99);

    auto random_subspace = [&](std::size_t ambient, std::size_t nrows) {
        std::vector<std::vector<Rational>> rows;
        std::uniform_int_distribution<long> dist(-2, 2);
        for (std::size_t i = 0; i < nrows; ++i) {
            std::vector<Rational> v(ambient);
            for (auto& x : v) x = q.from_int(dist(rng));
            rows.push_back(std::move(v));
        }
        return Subspace<RationalField>::span(q, ambient, rows);
    };

    for (int trial = 0; trial < 25; ++trial) {
        auto a = random_subspace(6, 3);
        auto b = random_subspace(6, 3);
        auto zero = Subspace<RationalField>::zero(q, 6);

        CHECK(span_join(a, zero) == a);
        CHECK(intersect_dim(a, a) == a.dim());
        CHECK(span_join(a, b).dim() + intersect_dim(a, b) == a.dim() + b.dim());

        auto meet = intersect(a, b);
        CHECK(meet.dim() == intersect_dim(a, b));
        CHECK(a.contains(meet));
        CHECK(b.contains(meet));

        // modular law with C <= A: A meet (B + C) = (A meet B) + C
        auto c = random_subspace(6, 1);
        c = intersect(c, a); // force containment in A
        auto lhs = intersect(a, span_join(b, c));
        auto rhs = span_join(intersect(a, b), c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("subspace canonicality and determinism") {
    RationalField q;
    std::vector<std::vector<Rational>> rows = {
        {q.from_int(2), q.from_int(4), q.from_int(0)},
        {q.from_int(1), q.from_int(2), q.from_int(1)},
        {q.from_int(3), q.from_int(6), q.from_int(1)},
    };
    auto s1 = Subspace<RationalField>::span(q, 3, rows);
    std::reverse(rows.begin(), rows.end());
    auto s2 = Subspace<RationalField>::span(q, 3, rows);
    CHECK(s1 == s2);
    CHECK(s1.dim() == 2);

    // idempotence: re-reducing the basis reproduces it
    auto again = Subspace<RationalField>::span(q, 3, s1.basis());
    CHECK(again == s1);

    CHECK(s1.contains(rows[0]));
    CHECK_FALSE(s1.contains({q.one(), q.zero(), q.zero()}));
}
