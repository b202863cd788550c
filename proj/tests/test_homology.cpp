#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oi/homology.hpp"
#include "oracle.hpp"

using namespace oi;

namespace {

std::map<int, std::int64_t> dims_only(const HomologyTable& t) { return t.dims; }

} // namespace

TEST_CASE("h0 tables and generation degrees") {
    RationalField q;

    auto m2 = corpus::free_module(q, {2});
    CHECK(dims_only(h0_dims(m2)) == std::map<int, std::int64_t>{{2, 1}});

    auto ramos = corpus::ramos(q);
    CHECK(dims_only(h0_dims(ramos)) == std::map<int, std::int64_t>{{1, 1}});
    CHECK(h0_dims(ramos).certified_through == 1);
    CHECK(t0(ramos) == 1);

    auto ex42 = corpus::example42(q);
    CHECK(dims_only(h0_dims(ex42)) == std::map<int, std::int64_t>{{0, 1}, {1, 1}});
    CHECK(t0(ex42) == 1);

    auto zero = corpus::free_module(q, {});
    CHECK(h0_dims(zero).dims.empty());
    CHECK(t0(zero) == -1);

    // a killed module: one degree-0 generator equated to zero in degree 0
    Presentation<RationalField> killed{q, FreeModule{{0}}, {}};
    Element<RationalField> rel;
    rel.degree = 0;
    rel.terms.push_back(Term<RationalField>{0, IncreasingMap({}, 0), q.one()});
    killed.relations.push_back(rel);
    CHECK(t0(killed) == -1);
    for (int n = 0; n <= 4; ++n) CHECK(dim_at(killed, n) == 0);
}

TEST_CASE("h1 tables and relation degrees") {
    RationalField q;
    for (int m = 0; m <= 3; ++m) CHECK(h1_dims(corpus::free_module(q, {m})).dims.empty());

    auto ramos = corpus::ramos(q);
    CHECK(dims_only(h1_dims(ramos)) == std::map<int, std::int64_t>{{2, 1}});
    CHECK(t1(ramos) == 2);
    CHECK(prd(ramos) == 2);

    auto ex42 = corpus::example42(q);
    CHECK(t1(ex42) == -1);
    CHECK(prd(ex42) == 1);

    // additivity on direct sums
    std::mt19937 rng(71);
    for (int trial = 0; trial < 6; ++trial) {
        auto a = corpus::random_presentation(q, rng);
        auto b = corpus::random_presentation(q, rng);
        auto sum_table = h1_dims(direct_sum(a, b));
        auto ta = h1_dims(a), tb = h1_dims(b);
        std::map<int, std::int64_t> expected = ta.dims;
        for (const auto& [deg, dim] : tb.dims) expected[deg] += dim;
        for (auto it = expected.begin(); it != expected.end();)
            it = it->second == 0 ? expected.erase(it) : std::next(it);
        CHECK(dims_only(sum_table) == expected);
    }

    // t1 never exceeds the top relation degree
    PrimeField f5(5);
    for (int trial = 0; trial < 12; ++trial) {
        auto p = corpus::random_presentation(f5, rng);
        CHECK(t1(p) <= p.max_relation_degree());
    }
}

TEST_CASE("four-term exactness at every degree") {
    RationalField q;
    PrimeField f5(5);
    std::mt19937 rng(81);
    auto check_presentation = [&](const auto& p) {
        for (int n = 0; n <= 6; ++n) CHECK(four_term_defect(p, n) == 0);
    };
    check_presentation(corpus::ramos(q));
    check_presentation(corpus::example42(q));
    for (int trial = 0; trial < 8; ++trial) check_presentation(corpus::random_presentation(q, rng));
    for (int trial = 0; trial < 8; ++trial) check_presentation(corpus::random_presentation(f5, rng));
}

TEST_CASE("syzygy presentations") {
    RationalField q;

    auto free_p = corpus::free_module(q, {1, 2});
    auto syz_free = syzygy_presentation(free_p, 6);
    CHECK(syz_free.pres.free.degrees.empty());
    CHECK(syz_free.pres.relations.empty());

    auto ramos = corpus::ramos(q);
    auto syz = syzygy_presentation(ramos, 6);
    CHECK(syz.valid_through == 6);
    CHECK(syz.pres.free.degrees == std::vector<int>{2});
    // the syzygy module presents W: dim W_n = dim F_n - dim V_n
    for (int n = 0; n <= 6; ++n) {
        const auto expected = oracle::rank(q, oracle::relation_rows(ramos, n));
        CHECK(dim_at(syz.pres, n) == static_cast<std::int64_t>(expected));
    }

    CHECK_THROWS_AS(syzygy_presentation(ramos, 1), HypothesisError);

    PrimeField f5(5);
    std::mt19937 rng(91);
    for (int trial = 0; trial < 6; ++trial) {
        auto p = corpus::random_presentation(f5, rng);
        auto s = syzygy_presentation(p, 6);
        for (int n = 0; n <= 6; ++n)
            CHECK(dim_at(s.pres, n) ==
                  static_cast<std::int64_t>(oracle::rank(f5, oracle::relation_rows(p, n))));
    }
}

TEST_CASE("windowed higher homology against the fat-cover oracle") {
    RationalField q;
    auto ramos = corpus::ramos(q);

    CHECK(h_dims(ramos, 0, 8) == h0_dims(ramos));
    CHECK(h_dims(ramos, 1, 8) == h1_dims(ramos));
    CHECK(h_dims(corpus::free_module(q, {2}), 3, 6).dims.empty());

    auto h2 = h_dims(ramos, 2, 8);
    CHECK(h2.index == 2);
    CHECK(h2.certified_through == 8);
    CHECK(h2.dims == std::map<int, std::int64_t>{{3, 1}});
    CHECK(h2.dims == oracle::h_dims(ramos, 2, 8));

    // one more level: H_3 over a shorter window, still matching the oracle
    auto h3 = h_dims(ramos, 3, 6);
    CHECK(h3.dims == oracle::h_dims(ramos, 3, 6));
    CHECK(h3.dims == std::map<int, std::int64_t>{{4, 1}});

    CHECK_THROWS_AS(h_dims(ramos, 2, 1), HypothesisError);

    PrimeField f5(5);
    auto ramos5 = corpus::ramos(f5);
    CHECK(h_dims(ramos5, 2, 8).dims == oracle::h_dims(ramos5, 2, 8));
}

TEST_CASE("adding a redundant relation changes nothing") {
    RationalField q;
    PrimeField f5(5);
    std::mt19937 rng(101);

    auto with_redundant = [](auto p) {
        const auto& f = p.field;
        REQUIRE(!p.relations.empty());
        const auto& w = p.relations.front();
        // image of an existing relation under a morphism: already in the span
        auto extra = act(f, unrank_map(w.degree, w.degree + 1, 0), w);
        p.relations.push_back(std::move(extra));
        return p;
    };

    auto check_invariance = [&](const auto& p) {
        auto p2 = with_redundant(p);
        CHECK(window_dims(p, 0, 8) == window_dims(p2, 0, 8));
        CHECK(dims_only(h0_dims(p)) == dims_only(h0_dims(p2)));
        CHECK(dims_only(h1_dims(p)) == dims_only(h1_dims(p2)));
    };

    check_invariance(corpus::ramos(q));
    int done = 0;
    while (done < 5) {
        auto p = corpus::random_presentation(f5, rng);
        if (p.relations.empty()) continue;
        check_invariance(p);
        ++done;
    }
}

TEST_CASE("semi-induced certificates") {
    RationalField q;

    CHECK(is_semi_induced(corpus::example42(q)).verdict);
    CHECK(is_semi_induced(induced(q, 2, 3)).verdict);
    for (int m = 0; m <= 3; ++m) CHECK(is_semi_induced(corpus::free_module(q, {m})).verdict);

    auto cert = is_semi_induced(corpus::ramos(q));
    CHECK_FALSE(cert.verdict);
    REQUIRE(cert.witness_degree.has_value());
    CHECK(*cert.witness_degree == 2);
}

TEST_CASE("filtration multiplicities reproduce the Hilbert function") {
    RationalField q;

    CHECK(filtration_multiplicities(corpus::example42(q)) ==
          std::map<int, std::int64_t>{{0, 1}, {1, 1}});
    CHECK(filtration_multiplicities(induced(q, 2, 3)) == std::map<int, std::int64_t>{{2, 3}});

    CHECK_THROWS_AS(filtration_multiplicities(corpus::ramos(q)), HypothesisError);
    CHECK(filtration_multiplicities(corpus::ramos(q), Exec::serial, true) ==
          std::map<int, std::int64_t>{{1, 1}});

    // random finite direct sums of induced modules are semi-induced
    std::mt19937 rng(111);
    auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int trial = 0; trial < 8; ++trial) {
        auto p = induced(q, pick(0, 3), pick(1, 2));
        const int pieces = pick(0, 2);
        for (int k = 0; k < pieces; ++k) p = direct_sum(p, induced(q, pick(0, 3), pick(1, 2)));
        REQUIRE(is_semi_induced(p).verdict);
        auto mult = filtration_multiplicities(p);
        for (int n = 0; n <= 10; ++n) {
            BigInt expected = 0;
            for (const auto& [deg, m] : mult) expected += m * binomial(n, deg);
            CHECK(BigInt(static_cast<long>(dim_at(p, n))) == expected);
        }
    }
}

TEST_CASE("homology tables are identical under both execution policies") {
    PrimeField f5(5);
    std::mt19937 rng(121);
    for (int trial = 0; trial < 6; ++trial) {
        auto p = corpus::random_presentation(f5, rng);
        CHECK(h0_dims(p, Exec::serial) == h0_dims(p, Exec::parallel));
        CHECK(h1_dims(p, Exec::serial) == h1_dims(p, Exec::parallel));
    }
}
