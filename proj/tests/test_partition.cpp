#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symqt/partition.hpp"

using namespace symqt;

namespace {

// Independent oracle: count classical semistandard tableaux of shape mu with
// entries in {1..N} by direct row filling (weakly increasing rows, strictly
// increasing columns).
int count_ssyt(const Partition& mu, int N) {
    std::vector<std::vector<int>> rows(mu.length());
    int total = 0;
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == mu.length()) {
            ++total;
            return;
        }
        if (j == mu.part(i + 1)) {
            self(self, i + 1, 0);
            return;
        }
        int lo = 1;
        if (j > 0) lo = std::max(lo, rows[i][j - 1]);
        if (i > 0 && j < mu.part(i)) lo = std::max(lo, rows[i - 1][j] + 1);
        for (int v = lo; v <= N; ++v) {
            rows[i].push_back(v);
            self(self, i, j + 1);
            rows[i].pop_back();
        }
    };
    rec(rec, 0, 0);
    return total;
}

}  // namespace

TEST_CASE("horizontal strips") {
    CHECK(is_horizontal_strip(Partition({2, 1}), Partition({1})));
    CHECK_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1})));
    CHECK(is_horizontal_strip(Partition({3, 1}), Partition({3, 1})));
    CHECK_FALSE(is_horizontal_strip(Partition({1}), Partition({2})));
}

TEST_CASE("partitions_up_to order") {
    auto p0 = partitions_up_to(0, 3);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].is_empty());

    auto p22 = partitions_up_to(2, 2);
    REQUIRE(p22.size() == 4);
    CHECK(p22[0] == Partition::empty());
    CHECK(p22[1] == Partition({1}));
    CHECK(p22[2] == Partition({2}));
    CHECK(p22[3] == Partition({1, 1}));

    auto p41 = partitions_up_to(4, 1);
    REQUIRE(p41.size() == 5);
    CHECK(p41[4] == Partition({4}));
}

TEST_CASE("chain enumeration matches direct tableau count") {
    CHECK(enumerate_rtab(Partition({1}), 2).size() == 2);
    CHECK(enumerate_rtab(Partition({2, 1}), 2).size() == 2);
    CHECK(enumerate_rtab(Partition({1, 1, 1}), 2).empty());
    for (int n = 0; n <= 6; ++n) {
        for (int N = 1; N <= 4; ++N) {
            for (const Partition& mu : partitions_of(n, n)) {
                CAPTURE(mu.str());
                CHECK(static_cast<int>(enumerate_rtab(mu, N).size()) == count_ssyt(mu, N));
            }
        }
    }
}

TEST_CASE("chains interlace and entries decay") {
    Partition mu({2, 1});
    auto chains = enumerate_rtab(mu, 2);
    REQUIRE(chains.size() == 2);
    for (const auto& c : chains) {
        REQUIRE(c.size() == 3);
        CHECK(c.front() == mu);
        CHECK(c.back().is_empty());
        for (size_t k = 1; k < c.size(); ++k) CHECK(is_horizontal_strip(c[k - 1], c[k]));
    }
    // the middle partition is (1) or (2)
    CHECK(((chains[0][1] == Partition({2}) && chains[1][1] == Partition({1})) ||
           (chains[0][1] == Partition({1}) && chains[1][1] == Partition({2}))));
}

TEST_CASE("containment, arm and leg") {
    Partition lam({3, 2});
    CHECK(lam.contains(Partition({2, 2})));
    CHECK_FALSE(lam.contains(Partition({1, 1, 1})));
    CHECK(lam.arm(1, 1) == 2);
    CHECK(lam.leg(1, 1) == 1);
    CHECK(lam.arm(2, 2) == 0);
    CHECK(lam.leg(2, 2) == 0);
    CHECK(lam.conjugate() == Partition({2, 2, 1}));
}

TEST_CASE("strip size counted by columns") {
    Partition mu({4, 2, 1}), nu({3, 1, 1});
    REQUIRE(is_horizontal_strip(mu, nu));
    CHECK(mu.size() - nu.size() == 2);
}

TEST_CASE("parse") {
    CHECK(parse_partition("[3,1]") == Partition({3, 1}));
    CHECK(parse_partition("3,1") == Partition({3, 1}));
    CHECK(parse_partition("") == Partition::empty());
    CHECK_THROWS(parse_partition("1,x"));
}
