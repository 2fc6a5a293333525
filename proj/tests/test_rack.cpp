#include <gtest/gtest.h>

#include "test_support.hpp"

#include <algorithm>
#include <random>

using namespace coxrack;
using namespace coxrack::testing;

namespace {

const OpTable constant_1234 = one_based({{2, 2, 2, 2}, {1, 1, 1, 1}, {4, 4, 4, 4}, {3, 3, 3, 3}});
const OpTable coxeter_example = one_based({{3, 1, 3, 1}, {2, 4, 2, 4}, {1, 3, 1, 3}, {4, 2, 4, 2}});
const OpTable quandle_example = one_based({{1, 3, 1, 3}, {4, 2, 4, 2}, {3, 1, 3, 1}, {2, 4, 2, 4}});
const OpTable hopf_rack = one_based({{1, 1, 2, 2}, {2, 2, 1, 1}, {4, 4, 4, 4}, {3, 3, 3, 3}});

// Existence of an isomorphism by trying every permutation.
bool isomorphic_by_permutations(const FiniteRack &a, const FiniteRack &b)
{
    if (a.size() != b.size())
        return false;
    std::vector<std::size_t> phi(a.size());
    std::iota(phi.begin(), phi.end(), std::size_t{0});
    do {
        if (is_isomorphism(a, b, phi))
            return true;
    } while (std::next_permutation(phi.begin(), phi.end()));
    return false;
}

FiniteRack relabel(const FiniteRack &r, const std::vector<std::size_t> &phi)
{
    OpTable t(r.size(), std::vector<std::size_t>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j)
            t[phi[i]][phi[j]] = phi[r.op(i, j)];
    return FiniteRack::from_table(t);
}

} // namespace

TEST(VerifyRack, KnownMatricesAreRacks)
{
    EXPECT_TRUE(verify_rack(constant_1234).valid());
    EXPECT_TRUE(verify_rack(coxeter_example).valid());
    EXPECT_TRUE(verify_rack(quandle_example).valid());
    EXPECT_TRUE(verify_rack(hopf_rack).valid());
}

TEST(VerifyRack, RepeatedColumnEntry)
{
    auto report = verify_rack(one_based({{1, 1}, {1, 2}}));
    ASSERT_FALSE(report.valid());
    EXPECT_EQ(report.violations.front().kind, Violation::Kind::ColumnNotPermutation);
    EXPECT_EQ(report.violations.front().column, 0u);
    EXPECT_EQ(report.violations.front().describe(), "axiom (i): column 1 is not a permutation");
}

TEST(VerifyRack, SelfDistributivityFailure)
{
    // columns are permutations, but (x|>y)|>z != (x|>z)|>(y|>z) somewhere
    auto report = verify_rack(one_based({{1, 2, 3}, {3, 1, 2}, {2, 3, 1}}));
    ASSERT_FALSE(report.valid());
    EXPECT_TRUE(std::all_of(report.violations.begin(), report.violations.end(),
                            [](const Violation &v) { return v.kind == Violation::Kind::SelfDistributivity; }));
}

TEST(VerifyRack, MalformedInput)
{
    EXPECT_THROW(verify_rack({{0, 5}, {1, 0}}), std::invalid_argument);
    EXPECT_THROW(verify_rack({{0, 1}, {1}}), std::invalid_argument);
    EXPECT_THROW(verify_rack({}), std::invalid_argument);
    EXPECT_THROW(FiniteRack::from_table(one_based({{1, 1}, {1, 2}})), RackAxiomError);
}

TEST(VerifyRack, DetectsEverySingleEntryCorruption)
{
    std::mt19937 rng(3);
    for (const auto &rack : small_rack_pool()) {
        const auto k = rack.size();
        if (k < 2)
            continue;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                auto t = rack.table();
                std::uniform_int_distribution<std::size_t> shift(1, k - 1);
                t[i][j] = (t[i][j] + shift(rng)) % k;
                EXPECT_FALSE(verify_rack(t).valid()) << "corrupted (" << i << "," << j << ") of size " << k;
            }
    }
}

TEST(FiniteRack, InverseTable)
{
    for (const auto &r : small_rack_pool())
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < r.size(); ++j) {
                EXPECT_EQ(r.inv(r.op(i, j), j), i);
                EXPECT_EQ(r.op(r.inv(i, j), j), i);
            }
}

TEST(IsQuandle, Examples)
{
    EXPECT_TRUE(is_quandle(FiniteRack::from_table(quandle_example)));
    EXPECT_FALSE(is_quandle(FiniteRack::from_table(coxeter_example)));
    EXPECT_TRUE(is_quandle(trivial_rack(5)));
}

TEST(RackRank, Examples)
{
    EXPECT_EQ(rack_rank(FiniteRack::from_table(quandle_example)), 1u);
    EXPECT_EQ(rack_rank(dihedral_quandle(5)), 1u);
    EXPECT_EQ(rack_rank(FiniteRack::from_table(hopf_rack)), 2u);
    EXPECT_EQ(rack_rank(FiniteRack::from_table(constant_1234)), 2u);
    EXPECT_EQ(rack_rank(constant_action_rack({1, 2, 0, 4, 3})), 6u);
}

TEST(RackRank, DiagonalPowerIsIdentity)
{
    for (const auto &r : small_rack_pool()) {
        auto n = rack_rank(r);
        for (std::size_t i = 0; i < r.size(); ++i)
            EXPECT_EQ(diagonal_map(r, i, static_cast<std::int64_t>(n)), i);
        for (auto len : diagonal_cycle_lengths(r))
            EXPECT_EQ(n % len, 0u);
    }
}

TEST(DiagonalMap, Examples)
{
    auto hopf = FiniteRack::from_table(hopf_rack);
    for (std::size_t i = 0; i < 4; ++i)
        EXPECT_EQ(diagonal_map(hopf, i, 0), i);
    EXPECT_EQ(diagonal_map(hopf, 2, 1), 3u); // row 3 has diagonal entry 4
    auto q = dihedral_quandle(3);
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_EQ(diagonal_map(q, i, 7), i);
}

TEST(DiagonalMap, NegativePowersInvert)
{
    auto r = constant_action_rack({1, 2, 0, 4, 3});
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::int64_t p = -7; p <= 7; ++p)
            EXPECT_EQ(diagonal_map(r, diagonal_map(r, i, p), -p), i);
}

TEST(SubrackClosure, Examples)
{
    auto hopf = FiniteRack::from_table(hopf_rack);
    EXPECT_EQ(subrack_closure(hopf, {0, 1, 2, 3}), (std::vector<std::size_t>{0, 1, 2, 3}));
    EXPECT_EQ(subrack_closure(hopf, {0}), (std::vector<std::size_t>{0}));
    EXPECT_EQ(subrack_closure(hopf, {2}), (std::vector<std::size_t>{2, 3}));
    EXPECT_EQ(subrack_closure(hopf, {0, 2}), (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(SubrackClosure, ClosedMonotoneIdempotent)
{
    std::mt19937 rng(5);
    for (const auto &r : small_rack_pool()) {
        std::uniform_int_distribution<std::size_t> pick(0, r.size() - 1);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::size_t> seed{pick(rng)};
            auto closure = subrack_closure(r, seed);
            for (auto x : closure)
                for (auto y : closure) {
                    EXPECT_TRUE(std::binary_search(closure.begin(), closure.end(), r.op(x, y)));
                    EXPECT_TRUE(std::binary_search(closure.begin(), closure.end(), r.inv(x, y)));
                }
            EXPECT_EQ(subrack_closure(r, closure), closure);
            auto bigger = seed;
            bigger.push_back(pick(rng));
            auto closure2 = subrack_closure(r, bigger);
            EXPECT_TRUE(std::includes(closure2.begin(), closure2.end(), closure.begin(), closure.end()));
        }
    }
}

TEST(RackPolynomial, CoxeterOverZ5)
{
    EXPECT_EQ(rack_polynomial(coxeter(5, 2, 3, "1,2;2,0")).to_string(), "16");
    EXPECT_EQ(rack_polynomial(coxeter(5, 2, 1, "1,2;2,0")).to_string(), "16*s^4*t^4");
}

TEST(RackPolynomial, TrivialRack)
{
    for (std::size_t k = 1; k <= 5; ++k) {
        MultiPoly expected({"s", "t"});
        expected.add_term({k, k}, static_cast<long>(k));
        EXPECT_EQ(rack_polynomial(trivial_rack(k)), expected);
    }
}

TEST(RackPolynomial, ConventionIsColumnFixesOnS)
{
    // In the Hopf rack: element 1 fixes itself under 1,2 (row), and 1,2 are fixed by acting with 1 (column).
    auto hopf = FiniteRack::from_table(hopf_rack);
    EXPECT_EQ(row_fix_count(hopf, 0), 2u);
    EXPECT_EQ(column_fix_count(hopf, 0), 2u);
    EXPECT_EQ(row_fix_count(hopf, 2), 0u);
    EXPECT_EQ(column_fix_count(hopf, 2), 0u);
    EXPECT_EQ(rack_polynomial(hopf).to_string(), "2 + 2*s^2*t^2");
}

TEST(FindIsomorphism, FormPairs)
{
    auto a = coxeter(3, 2, 1, "1,2;2,0");
    auto b = coxeter(3, 2, 1, "0,2;2,0");
    EXPECT_NE(a.table(), b.table());
    auto phi = find_isomorphism(a, b);
    ASSERT_TRUE(phi.has_value());
    EXPECT_TRUE(is_isomorphism(a, b, *phi));

    EXPECT_FALSE(find_isomorphism(a, coxeter(3, 2, 2, "1,2;2,0")).has_value());
}

TEST(FindIsomorphism, SelfIsIdentityOrAutomorphism)
{
    for (const auto &r : small_rack_pool()) {
        auto phi = find_isomorphism(r, r);
        ASSERT_TRUE(phi.has_value());
        EXPECT_TRUE(is_isomorphism(r, r, *phi));
    }
}

TEST(FindIsomorphism, AgreesWithPermutationOracle)
{
    auto pool = small_rack_pool();
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j) {
            auto phi = find_isomorphism(pool[i], pool[j]);
            EXPECT_EQ(phi.has_value(), isomorphic_by_permutations(pool[i], pool[j])) << i << " vs " << j;
            if (phi)
                EXPECT_TRUE(is_isomorphism(pool[i], pool[j], *phi));
        }
}

TEST(FindIsomorphism, RecoversRandomRelabeling)
{
    std::mt19937 rng(9);
    std::vector<FiniteRack> racks = small_rack_pool();
    racks.push_back(coxeter(7, 2, 3, "1,0;0,1"));
    racks.push_back(coxeter(5, 2, 2, "1,2;2,0"));
    for (const auto &r : racks) {
        std::vector<std::size_t> phi(r.size());
        std::iota(phi.begin(), phi.end(), std::size_t{0});
        std::shuffle(phi.begin(), phi.end(), rng);
        auto s = relabel(r, phi);
        auto found = find_isomorphism(r, s);
        ASSERT_TRUE(found.has_value());
        EXPECT_TRUE(is_isomorphism(r, s, *found));
        EXPECT_EQ(rack_polynomial(r), rack_polynomial(s));
    }
}

TEST(RackPolynomial, IsomorphismInvariantOnFormPair)
{
    EXPECT_EQ(rack_polynomial(coxeter(3, 2, 1, "1,2;2,0")), rack_polynomial(coxeter(3, 2, 1, "0,2;2,0")));
}
