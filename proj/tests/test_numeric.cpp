#include "torus_lab/linalg.hpp"
#include "torus_lab/numeric.hpp"

#include <gtest/gtest.h>

using namespace torus_lab;

TEST(ModPrime, FieldAxioms) {
    ModPrime a = 123456789, b = -987654321;
    EXPECT_EQ(a * a.inverse(), ModPrime(1));
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a / b * b, a);
    EXPECT_EQ(ModPrime(-1) + ModPrime(1), ModPrime(0));
    EXPECT_EQ(ModPrime(static_cast<long long>(ModPrime::modulus)), ModPrime(0));
}

TEST(Fibonacci, SmallValues) {
    std::vector<int> f{0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(fibonacci(static_cast<int>(i)), f[i]);
    EXPECT_EQ(fibonacci(100), BigInt("354224848179261915075"));
}

TEST(Linalg, RankAndKernel) {
    Matrix<Rational> m(3, 4);
    int vals[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = vals[r][c];
    EXPECT_EQ(rank(m), 2u);
    Matrix<Rational> k = null_space(m);
    EXPECT_EQ(k.cols(), 2u);
    Matrix<Rational> prod = m * k;
    for (std::size_t r = 0; r < prod.rows(); ++r)
        for (std::size_t c = 0; c < prod.cols(); ++c) EXPECT_EQ(prod(r, c), 0);
}

TEST(Linalg, SparseEliminatorMatchesDense) {
    // five rows of rank 3
    SparseEliminator<Rational> e(5);
    e.add({{0, 1}, {1, 1}});
    e.add({{1, 1}, {2, 1}});
    e.add({{0, 1}, {2, -1}}); // first minus second
    e.add({{3, 2}});
    e.add({{3, 4}});
    EXPECT_EQ(e.rank(), 3u);
}
