#include <random>

#include <gtest/gtest.h>

#include <drinfeld/drinfeld.hpp>

#include "fixtures.hpp"

using namespace drinfeld;

namespace {

struct Instance {
    Series s;
    int n;
};

const std::vector<Instance> grid = {{Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::A, 4},
                                    {Series::B, 1}, {Series::B, 2}, {Series::B, 3}, {Series::C, 1},
                                    {Series::C, 2}, {Series::C, 3}, {Series::D, 2}, {Series::D, 3},
                                    {Series::D, 4}};

std::vector<std::string> labels(const std::vector<GeneratorId>& gs)
{
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(g.label());
    return out;
}

Element br(const LieAlgebra& alg, const GeneratorId& x, const GeneratorId& y) { return bracket(elem(x), elem(y), alg); }

}  // namespace

TEST(Generators, Enumeration)
{
    EXPECT_EQ(labels(enumerate_generators(Series::A, 1)),
              (std::vector<std::string>{"H1", "H2", "I1", "I2", "F1,2", "F2,1"}));
    EXPECT_EQ(labels(enumerate_generators(Series::D, 2)),
              (std::vector<std::string>{"H1", "H2", "I1", "I2", "F1,2", "S1,2", "F2,1", "T1,2"}));
    EXPECT_EQ(labels(enumerate_generators(Series::B, 1)), (std::vector<std::string>{"H1", "I1", "U1", "V1"}));
    EXPECT_EQ(enumerate_generators(Series::C, 2).size(), 12U);
}

TEST(Generators, DimensionFormulas)
{
    for (const auto& [s, n] : grid) {
        const std::size_t m = static_cast<std::size_t>(n);
        std::size_t want = 0;
        switch (s) {
        case Series::A: want = (m + 1) * (m + 1) + (m + 1); break;
        case Series::B:
        case Series::C: want = m * (2 * m + 1) + m; break;
        case Series::D: want = m * (2 * m - 1) + m; break;
        }
        EXPECT_EQ(enumerate_generators(s, n).size(), want);
        EXPECT_EQ(build_series(s, n).dim(), want);
    }
}

TEST(Generators, RankGate)
{
    EXPECT_THROW(enumerate_generators(Series::D, 1), rank_error);
    EXPECT_THROW(enumerate_generators(Series::A, 0), rank_error);
    EXPECT_NO_THROW(enumerate_generators(Series::B, 1));
}

TEST(Generators, LabelRoundTrip)
{
    for (const auto& g : enumerate_generators(Series::C, 3)) EXPECT_EQ(GeneratorId::parse(g.label()), g);
    EXPECT_EQ(GeneratorId::parse("x^2"), xm(2));
    EXPECT_EQ(GeneratorId::parse("X1,2"), Xp(1, 2));
    EXPECT_THROW(GeneratorId::parse("Z1"), std::invalid_argument);
    EXPECT_THROW(GeneratorId::parse("F1,"), std::invalid_argument);
}

TEST(Brackets, TableExamples)
{
    const auto a = build_series(Series::A, 1);
    EXPECT_EQ(br(a, H(1), F(1, 2)), elem(F(1, 2)));
    EXPECT_EQ(br(a, I(1), F(1, 2)), Element());
    EXPECT_EQ(br(a, H(1), H(2)), Element());

    const auto c = build_series(Series::C, 2);
    EXPECT_EQ(br(c, P(1, 1), Q(1, 1)), Scalar(2) * elem(H(1)));

    const auto b = build_series(Series::B, 1);
    EXPECT_EQ(br(b, U(1), V(1)), elem(H(1)));

    const auto d = build_series(Series::D, 2);
    EXPECT_EQ(br(d, S(1, 2), T(1, 2)), elem(H(1)) + elem(H(2)));
}

TEST(Brackets, ForeignGeneratorThrows)
{
    const auto b = build_series(Series::B, 1);
    EXPECT_THROW(br(b, F(1, 2), U(1)), foreign_generator_error);
}

// Collisions of the symmetric P/Q rules where a diagonal generator appears.
// Each expected value is a hand oscillator computation; the bosonic rep
// repeats it numerically.
TEST(Brackets, DiagonalCollisionFixtures)
{
    const auto c = build_series(Series::C, 3);
    const Scalar r2 = Scalar::sqrt2();
    struct Case {
        GeneratorId x, y;
        Element want;
    };
    const std::vector<Case> cases = {
        {F(2, 1), P(1, 2), r2 * elem(P(2, 2))},
        {F(1, 2), P(2, 2), r2 * elem(P(1, 2))},
        {F(1, 2), P(1, 2), r2 * elem(P(1, 1))},
        {F(1, 2), Q(1, 1), -r2 * elem(Q(1, 2))},
        {F(2, 1), Q(2, 2), -r2 * elem(Q(1, 2))},
        {F(1, 3), P(3, 3), r2 * elem(P(1, 3))},
        {F(3, 2), P(2, 2), r2 * elem(P(2, 3))},
        {P(1, 2), Q(1, 1), r2 * elem(F(2, 1))},
        {P(1, 1), Q(1, 2), r2 * elem(F(1, 2))},
        {P(1, 2), Q(1, 2), elem(H(1)) + elem(H(2))},
        {P(2, 3), Q(1, 3), elem(F(2, 1))},
    };
    const auto rep = bosonic_rep(Series::C, 3, 6);
    for (const auto& k : cases) {
        const Element got = br(c, k.x, k.y);
        EXPECT_EQ(got, k.want) << "[" << k.x.label() << "," << k.y.label() << "] = " << to_string(got);
        const auto diff = commutator(rep.of(k.x), rep.of(k.y)) - rep.of(got);
        const auto cols = detail::protected_columns(rep.basis, std::max(diff.reach, 0));
        const auto v = detail::residual_violation(diff, cols, false, bosonic_tolerance, {"x"});
        EXPECT_EQ(v.magnitude, 0.0) << k.x.label() << "," << k.y.label();
    }
}

TEST(Brackets, AntisymmetryAndRandomSelfBracket)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (const auto& [s, n] : grid) {
        const auto alg = build_series(s, n);
        for (Index p = 0; p < alg.dim(); ++p)
            for (Index q = 0; q < alg.dim(); ++q) EXPECT_EQ(alg.table().at(p, q), -alg.table().at(q, p));
        Vec x;
        for (Index k = 0; k < alg.dim(); ++k) x.add(k, Scalar(coeff(rng)));
        EXPECT_TRUE(alg.bracket(x, x).is_zero());
    }
}

TEST(Brackets, CentralGeneratorsCommute)
{
    for (const auto& [s, n] : grid) {
        const auto alg = build_series(s, n);
        for (const auto& g : alg.basis()) {
            if (g.kind != Kind::I) continue;
            for (const auto& h : alg.basis()) EXPECT_EQ(br(alg, g, h), Element()) << g.label() << "," << h.label();
        }
    }
}

TEST(Brackets, RootGrading)
{
    for (const auto& [s, n] : grid) {
        const auto alg = build_series(s, n);
        const int modes = cartan_count(s, n);
        for (const auto& r : alg.basis()) {
            if (r.is_cartan()) continue;
            const auto w = weight(r, modes);
            for (int i = 1; i <= modes; ++i)
                EXPECT_EQ(br(alg, H(i), r), Scalar(w[static_cast<std::size_t>(i - 1)]) * elem(r)) << r.label();
        }
    }
}

TEST(Jacobi, GridPassesExactly)
{
    for (const auto& [s, n] : grid) {
        const auto r = verify_jacobi(build_series(s, n));
        EXPECT_TRUE(r.pass()) << r.summary();
    }
}

TEST(Jacobi, DetectsMutatedBracket)
{
    const auto alg = build_series(Series::B, 2);
    const auto bad = fixtures::with_bracket(alg, U(1), V(1), Scalar(2) * elem(H(1)));
    const auto r = verify_jacobi(bad);
    ASSERT_FALSE(r.pass());
    for (const auto& v : r.violations) {
        const auto& ix = v.indices;
        const bool u = std::find(ix.begin(), ix.end(), "U1") != ix.end();
        const bool vv = std::find(ix.begin(), ix.end(), "V1") != ix.end();
        EXPECT_TRUE(u || vv);
    }
}

TEST(Jacobi, AbelianPasses)
{
    const LieAlgebra ab(Series::A, 1, {H(1), H(2), I(1)}, StructureTable(3));
    EXPECT_TRUE(verify_jacobi(ab).pass());
}

TEST(Brackets, ChainEmbedsUnderIndexPreservingInjection)
{
    for (const auto& [s, n] : std::vector<Instance>{{Series::A, 2}, {Series::B, 1}, {Series::C, 1}, {Series::D, 2}}) {
        const auto small = build_series(s, n), big = build_series(s, n + 1);
        for (Index p = 0; p < small.dim(); ++p)
            for (Index q = p + 1; q < small.dim(); ++q) {
                Element want;
                for (const auto& [g, x] : small.to_element(small.table().at(p, q))) want.add(g, x);
                EXPECT_EQ(br(big, small.generator(p), small.generator(q)), want);
            }
    }
}

TEST(Brackets, OscillatorOracleOnGrid)
{
    for (const auto& [s, n] : grid) {
        if (s == Series::C || (s == Series::A && n > 3)) continue;
        const auto r = verify_rep_homomorphism(fermionic_rep(s, n), build_series(s, n));
        EXPECT_TRUE(r.pass()) << to_char(s) << n << " " << r.summary();
    }
    for (int n = 1; n <= 3; ++n) {
        const auto r = verify_rep_homomorphism(bosonic_rep(Series::C, n, 6), build_series(Series::C, n));
        EXPECT_TRUE(r.pass()) << "C" << n << " " << r.summary();
    }
}
