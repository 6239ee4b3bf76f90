#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <vector>

#include "omplab/counterexample.hpp"
#include "omplab/matrix.hpp"
#include "omplab/matrix_io.hpp"
#include "omplab/model.hpp"
#include "omplab/rip.hpp"
#include "omplab/rng.hpp"
#include "oracles.hpp"
#include "subprocess.hpp"

#define CHECK_NEAR(a, b, tol) CHECK(std::abs((a) - (b)) <= (tol))

using namespace omplab;

namespace {

bool bit_identical(const std::vector<double>& a, const std::vector<double>& b)
{
    return a.size() == b.size() &&
           (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

} // namespace

TEST_CASE("support construction sorts and validates")
{
    const Support s = Support::from_indices({4, 1, 7});
    CHECK(s.indices() == std::vector<int>{1, 4, 7});
    CHECK(s.size() == 3);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(2));
    CHECK(s.max_index() == 7);

    CHECK(Support{}.max_index() == -1);
    CHECK(Support{}.empty());

    CHECK_THROWS_AS(Support::from_indices({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Support::from_indices({-1}), std::invalid_argument);

    const Support grown = s.with(2);
    CHECK(grown.indices() == std::vector<int>{1, 2, 4, 7});
    CHECK_THROWS_AS(s.with(4), std::invalid_argument);
}

TEST_CASE("sparse signals track their exact nonzero support")
{
    const SparseSignal x = SparseSignal::from_entries({0.0, 3.0, 0.0, -2.0});
    CHECK(x.length() == 4);
    CHECK(x.sparsity() == 2);
    CHECK(x.support.indices() == std::vector<int>{1, 3});
    CHECK(x.norm1() == 5.0);
    CHECK_NEAR(x.norm2(), std::sqrt(13.0), 1e-15);

    CHECK(SparseSignal::from_entries({0.0, 0.0}).support.empty());
    CHECK_THROWS_AS(SparseSignal::from_entries({}), std::invalid_argument);
    CHECK_THROWS_AS(SparseSignal::from_entries({std::nan("")}), std::invalid_argument);
}

TEST_CASE("apply is the identity map on the identity matrix")
{
    const std::vector<double> x = {3.0, -1.0, 0.5};
    CHECK(omplab::apply(DenseMatrix::identity(3), x) == x);
}

TEST_CASE("apply maps the tight construction's signal straight through")
{
    // The last coordinate of x is zero, so only the basis columns act.
    const std::vector<double> y = omplab::apply(build_matrix(2), {1.0, 1.0, 0.0});
    CHECK(y == std::vector<double>{1.0, 1.0, 0.0});
}

TEST_CASE("apply matches the naive oracle and rejects bad dimensions")
{
    Xoshiro256pp rng(606);
    for (int rep = 0; rep < 10; ++rep) {
        const DenseMatrix a = random_matrix(4, 6, Ensemble::GaussianRaw, rng);
        std::vector<double> x(6);
        for (double& v : x)
            v = rng.gaussian();
        const std::vector<double> y = omplab::apply(a, x);
        const std::vector<double> oracle = oracles::naive_matvec(a, x);
        REQUIRE(y.size() == 4);
        for (std::size_t i = 0; i < y.size(); ++i)
            CHECK_NEAR(y[i], oracle[i], 1e-12);
    }
    CHECK_THROWS_AS(omplab::apply(DenseMatrix::identity(3), {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("correlations on the tight construction are all exactly one")
{
    const DenseMatrix a = build_matrix(2);
    const SparseSignal x = build_signal(2);
    const CorrelationProfile profile = correlations(a, omplab::apply(a, x.entries), x.support);
    REQUIRE(profile.values.size() == 3);
    for (double v : profile.values)
        CHECK_NEAR(v, 1.0, 1e-12);
    CHECK_NEAR(profile.s0, 1.0, 1e-12);
    CHECK(profile.s0_argmax == Support::from_indices({0, 1}));
}

TEST_CASE("correlations of the zero vector vanish")
{
    const CorrelationProfile profile =
        correlations(DenseMatrix::identity(4), {0.0, 0.0, 0.0, 0.0},
                     Support::from_indices({1, 2}));
    CHECK(profile.values == std::vector<double>{0.0, 0.0, 0.0, 0.0});
    CHECK(profile.s0 == 0.0);
}

TEST_CASE("correlations match the naive oracle and validate dimensions")
{
    Xoshiro256pp rng(707);
    const DenseMatrix a = random_matrix(5, 7, Ensemble::GaussianUnitColumns, rng);
    std::vector<double> v(5);
    for (double& e : v)
        e = rng.gaussian();
    const Support support = Support::from_indices({0, 2});

    const CorrelationProfile profile = correlations(a, v, support);
    double expected_s0 = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double oracle = oracles::naive_dot(a.column(i), v);
        CHECK_NEAR(profile.values[static_cast<std::size_t>(i)], oracle, 1e-12);
        if (support.contains(i))
            expected_s0 = std::max(expected_s0, std::abs(oracle));
    }
    CHECK_NEAR(profile.s0, expected_s0, 1e-12);
    CHECK_FALSE(profile.s0_argmax.empty());

    // Empty support: no in-support maximum to speak of.
    const CorrelationProfile loose = correlations(a, v, Support{});
    CHECK(loose.s0 == 0.0);
    CHECK(loose.s0_argmax.empty());

    CHECK_THROWS_AS(correlations(a, {1.0}, support), std::invalid_argument);
    CHECK_THROWS_AS(correlations(a, v, Support::from_indices({7})), std::invalid_argument);
}

TEST_CASE("correlations are linear in the vector argument")
{
    Xoshiro256pp rng(808);
    const DenseMatrix a = random_matrix(6, 5, Ensemble::GaussianRaw, rng);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> v1(6), v2(6), sum(6);
        for (int i = 0; i < 6; ++i) {
            v1[static_cast<std::size_t>(i)] = rng.gaussian();
            v2[static_cast<std::size_t>(i)] = rng.gaussian();
            sum[static_cast<std::size_t>(i)] =
                v1[static_cast<std::size_t>(i)] + v2[static_cast<std::size_t>(i)];
        }
        const auto p1 = correlations(a, v1, Support{}).values;
        const auto p2 = correlations(a, v2, Support{}).values;
        const auto ps = correlations(a, sum, Support{}).values;
        for (std::size_t i = 0; i < ps.size(); ++i)
            CHECK_NEAR(ps[i], p1[i] + p2[i], 1e-12);
    }
}

TEST_CASE("matrix files round-trip exactly")
{
    const auto dir = testutil::make_temp_dir("omplab-model");
    const auto path = (dir / "m.txt").string();

    const DenseMatrix id = DenseMatrix::identity(3);
    save_matrix(id, path);
    const DenseMatrix id_back = load_matrix(path);
    REQUIRE(id_back.rows() == 3);
    REQUIRE(id_back.cols() == 3);
    CHECK(bit_identical(id_back.entries(), id.entries()));

    // Awkward values: tiny, huge, negative zero, non-terminating binary
    // fractions. The shortest round-trip decimal must reproduce all bits.
    const DenseMatrix nasty(2, 3,
                            {1.0 / 3.0, 5e-324, -0.0, 1.7976931348623157e308,
                             -12345.678901234567, 0.1 + 0.2});
    save_matrix(nasty, path);
    CHECK(bit_identical(load_matrix(path).entries(), nasty.entries()));

    Xoshiro256pp rng(909);
    const DenseMatrix random = random_matrix(7, 5, Ensemble::GaussianUnitColumns, rng);
    save_matrix(random, path);
    CHECK(bit_identical(load_matrix(path).entries(), random.entries()));

    std::filesystem::remove_all(dir);
}

TEST_CASE("vector files round-trip exactly")
{
    const auto dir = testutil::make_temp_dir("omplab-model");
    const auto path = (dir / "v.txt").string();
    const std::vector<double> v = {0.0, -0.0, 1.0 / 7.0, 2.5e-300, -3.0};
    save_vector(v, path);
    CHECK(bit_identical(load_vector(path), v));
    std::filesystem::remove_all(dir);
}

TEST_CASE("malformed matrix files fail with located parse errors")
{
    const auto dir = testutil::make_temp_dir("omplab-model");
    const auto path = (dir / "bad.txt").string();

    // A 2-entry row in a 3-column matrix.
    testutil::write_file(path, "2 3\n1 2 3\n4 5\n");
    try {
        load_matrix(path);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("dimension inconsistency") != std::string::npos);
    }

    testutil::write_file(path, "2 3\n1 2 3\n");
    CHECK_THROWS_AS(load_matrix(path), ParseError); // too few rows

    testutil::write_file(path, "1 2\n1 2\n3 4\n");
    CHECK_THROWS_AS(load_matrix(path), ParseError); // too many rows

    testutil::write_file(path, "2\n1 2\n");
    CHECK_THROWS_AS(load_matrix(path), ParseError); // header not "rows cols"

    testutil::write_file(path, "1 2\n1 oops\n");
    try {
        load_matrix(path);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 3);
    }

    testutil::write_file(path, "1 2\n1 nan\n");
    CHECK_THROWS_AS(load_matrix(path), ParseError); // non-finite rejected

    testutil::write_file(path, "1 2\ninf 1\n");
    CHECK_THROWS_AS(load_matrix(path), ParseError);

    CHECK_THROWS_AS(load_matrix((dir / "missing.txt").string()), ParseError);

    testutil::write_file(path, "3\n1\n2\n");
    CHECK_THROWS_AS(load_vector(path), ParseError); // vector length mismatch

    std::filesystem::remove_all(dir);
}

TEST_CASE("the K=4 construction survives a file round trip with identical delta")
{
    const auto dir = testutil::make_temp_dir("omplab-model");
    const auto path = (dir / "thm.txt").string();

    const DenseMatrix a = build_matrix(4);
    const double delta_direct = ric_exact(a, 5).delta;
    save_matrix(a, path);
    const double delta_loaded = ric_exact(load_matrix(path), 5).delta;

    CHECK(delta_loaded == delta_direct); // bitwise: entries round-trip exactly
    CHECK_NEAR(delta_loaded, 0.5, 1e-10); // 1/sqrt(4) is exactly representable

    std::filesystem::remove_all(dir);
}
