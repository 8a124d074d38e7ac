#include "doctest.h"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "qmsort/metrics.hpp"
#include "qmsort/rng.hpp"
#include "qmsort/selection.hpp"

using namespace qmsort;

namespace {

using Vec = std::vector<std::int64_t>;

bool same_multiset(Vec a, Vec b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::int64_t oracle_kth(Vec v, std::size_t k) {
    std::sort(v.begin(), v.end());
    return v[k - 1];
}

Vec fig_array() { return Vec{7, 11, 4, 5, 6, 10, 9, 2, 3, 1, 0, 8}; }

} // namespace

TEST_CASE("median_of_5: sorted and duplicate examples") {
    Metrics m;
    CountingComparator<std::less<>> cmp(m);
    Vec a{1, 2, 3, 4, 5};
    CHECK(a[median_of_5_index(a.begin(), 0, 1, 2, 3, 4, cmp)] == 3);
    Vec b{3, 1, 4, 1, 5};
    CHECK(b[median_of_5_index(b.begin(), 0, 1, 2, 3, 4, cmp)] == 3);
}

TEST_CASE("median_of_5: all 120 orderings, at most 7 comparisons, zero moves") {
    Vec base{10, 20, 30, 40, 50};
    std::uint64_t worst = 0;
    do {
        Vec v = base;
        Metrics m;
        CountingComparator<std::less<>> cmp(m);
        const std::size_t mi = median_of_5_index(v.begin(), 0, 1, 2, 3, 4, cmp);
        CHECK(v[mi] == 30);
        CHECK(m.moves == 0);
        worst = std::max(worst, m.comparisons);
    } while (std::next_permutation(base.begin(), base.end()));
    CHECK(worst <= 7);
}

TEST_CASE("sort_triples: the worked 12-element grouping") {
    Vec v = fig_array();
    Metrics m;
    CountingComparator<std::less<>> cmp(m);
    sort_triples(v.begin(), 4, cmp, m);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(v[3 * i] <= v[3 * i + 1]);
        CHECK(v[3 * i + 1] <= v[3 * i + 2]);
    }
    CHECK(v[1] == 7);
    CHECK(v[4] == 6);
    CHECK(v[7] == 3);
    CHECK(v[10] == 1);
    CHECK(m.comparisons <= 12);
}

TEST_CASE("sort_triples: ordered triples untouched, fuzz predicate") {
    Vec v{1, 2, 3, 4, 5, 6};
    Vec before = v;
    Metrics m;
    CountingComparator<std::less<>> cmp(m);
    sort_triples(v.begin(), 2, cmp, m);
    CHECK(v == before);
    CHECK(m.moves == 0);

    SplitMix64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t t = 1 + bounded(rng, 30);
        Vec w(3 * t);
        for (auto& x : w) x = static_cast<std::int64_t>(bounded(rng, 10));
        Vec orig = w;
        Metrics mm;
        CountingComparator<std::less<>> c2(mm);
        sort_triples(w.begin(), t, c2, mm);
        for (std::size_t i = 0; i < t; ++i) {
            CHECK(w[3 * i] <= w[3 * i + 1]);
            CHECK(w[3 * i + 1] <= w[3 * i + 2]);
        }
        CHECK(same_multiset(w, orig));
        CHECK(mm.comparisons <= 3 * t);
    }
}

TEST_CASE("select_kth: k = 1 returns the minimum") {
    Vec v{9, 4, 7, 1, 8, 2};
    Metrics m;
    CountingComparator<std::less<>> cmp(m);
    const std::size_t p = select_nth(v.begin(), v.end(), 1, cmp, m);
    CHECK(v[p] == 1);
}

TEST_CASE("select_kth: middle rank of a 101-element permutation") {
    Vec v(101);
    std::iota(v.begin(), v.end(), 1);
    SplitMix64 rng(17);
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[bounded(rng, i)]);
    Metrics m;
    CountingComparator<std::less<>> cmp(m);
    const std::size_t p = select_nth(v.begin(), v.end(), 51, cmp, m);
    CHECK(v[p] == 51);
}

TEST_CASE("select_kth fuzz: rank oracle, partition contract, duplicates included") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + bounded(rng, 400);
        Vec v(n);
        const std::uint64_t span = trial % 2 ? 5 : 100000;
        for (auto& x : v) x = static_cast<std::int64_t>(bounded(rng, span));
        const std::size_t k = 1 + bounded(rng, n);
        Vec before = v;
        Metrics m;
        CountingComparator<std::less<>> cmp(m);
        const std::size_t p = select_nth(v.begin(), v.end(), k, cmp, m);
        CHECK(v[p] == oracle_kth(before, k));
        CHECK(same_multiset(v, before));
        for (std::size_t i = 0; i < p; ++i) CHECK(v[i] <= v[p]);
        for (std::size_t i = p + 1; i < n; ++i) CHECK(v[i] >= v[p]);
    }
}

TEST_CASE("select_kth: comparison budget and geometric shrink at n = 100000") {
    SplitMix64 rng(808);
    const std::size_t n = 100000;
    for (double frac : {0.01, 0.2, 0.3, 0.5, 0.7, 0.9, 1.0}) {
        Vec v(n);
        std::iota(v.begin(), v.end(), 1);
        for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[bounded(rng, i)]);
        const auto k = static_cast<std::size_t>(
            std::max<double>(1.0, frac * static_cast<double>(n)));
        Metrics m;
        CountingComparator<std::less<>> cmp(m);
        SelectAudit audit;
        const std::size_t p = select_nth(v.begin(), v.end(), k, cmp, m, &audit);
        CHECK(v[p] == static_cast<std::int64_t>(k));
        CHECK(m.comparisons <= 22 * n);
        CHECK(audit.violations == 0);
    }
}

TEST_CASE("triple_median_pivot: the worked example pins pivot 3") {
    Vec v = fig_array();
    Metrics m;
    CountingComparator<std::less<>> cmp(m);
    const std::size_t piv = triple_median_pivot(v.begin(), v.end(), cmp, m);
    CHECK(v[piv] == 3);
    // guarantee on the worked values: 4 elements <= 3 and 9 elements >= 3
    const auto le = std::count_if(v.begin(), v.end(), [](auto x) { return x <= 3; });
    const auto ge = std::count_if(v.begin(), v.end(), [](auto x) { return x >= 3; });
    CHECK(le == 4);
    CHECK(ge == 9);
    CHECK(le >= 2 * (v.size() / 6));
}

TEST_CASE("partition_after_triple_pivot: worked example, side sizes and cost") {
    Vec v = fig_array();
    Vec before = v;
    Metrics m;
    CountingComparator<std::less<>> cmp(m);
    const std::size_t piv = triple_median_pivot(v.begin(), v.end(), cmp, m);
    const Metrics at_pivot = snapshot(m);
    const PartitionResult pr = partition_after_triple_pivot(v.begin(), v.end(), piv, cmp, m);
    CHECK(v[pr.lt_end] == 3);
    for (std::size_t i = 0; i < pr.lt_end; ++i) CHECK(v[i] <= 3);
    for (std::size_t i = pr.gt_begin; i < v.size(); ++i) CHECK(v[i] >= 3);
    CHECK(same_multiset(v, before));
    // partition phase alone: at most 2 comparisons per triple plus slack
    CHECK(m.comparisons - at_pivot.comparisons <= 2 * (v.size() / 3) + 4);
}

TEST_CASE("triple pivot guarantee holds deterministically on adversarial inputs") {
    SplitMix64 rng(60);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 12 + bounded(rng, 2000);
        Vec v(n);
        switch (trial % 4) {
            case 0:
                std::iota(v.begin(), v.end(), 1);
                break;
            case 1:
                for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(n - i);
                break;
            case 2:
                for (std::size_t i = 0; i < n; ++i)
                    v[i] = static_cast<std::int64_t>(std::min(i + 1, n - i));
                break;
            default:
                std::iota(v.begin(), v.end(), 1);
                for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[bounded(rng, i)]);
                break;
        }
        Metrics m;
        CountingComparator<std::less<>> cmp(m);
        const std::size_t piv = triple_median_pivot(v.begin(), v.end(), cmp, m);
        const PartitionResult pr = partition_after_triple_pivot(v.begin(), v.end(), piv, cmp, m);
        const std::int64_t pv = v[pr.lt_end];
        for (std::size_t i = 0; i < pr.lt_end; ++i) REQUIRE(v[i] <= pv);
        for (std::size_t i = pr.gt_begin; i < n; ++i) REQUIRE(v[i] >= pv);
        const std::size_t bound = 2 * (n / 6) >= 2 ? 2 * (n / 6) - 2 : 0;
        CHECK(pr.left_size >= bound);
        CHECK(pr.right_size >= bound);
    }
}

TEST_CASE("reverse and organ-pipe at n = 999: guarantee holds exactly") {
    for (int kind = 0; kind < 2; ++kind) {
        const std::size_t n = 999;
        Vec v(n);
        if (kind == 0)
            for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>(n - i);
        else
            for (std::size_t i = 0; i < n; ++i)
                v[i] = static_cast<std::int64_t>(std::min(i + 1, n - i));
        Metrics m;
        CountingComparator<std::less<>> cmp(m);
        const std::size_t piv = triple_median_pivot(v.begin(), v.end(), cmp, m);
        const PartitionResult pr = partition_after_triple_pivot(v.begin(), v.end(), piv, cmp, m);
        const std::size_t bound = 2 * (n / 6) - 2;
        CHECK(pr.left_size >= bound);
        CHECK(pr.right_size >= bound);
    }
}

TEST_CASE("triple machinery fuzz: contract with duplicates") {
    SplitMix64 rng(0x1234);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + bounded(rng, 500);
        Vec v(n);
        for (auto& x : v) x = static_cast<std::int64_t>(bounded(rng, 6));
        Vec before = v;
        Metrics m;
        CountingComparator<std::less<>> cmp(m);
        const std::size_t piv = triple_median_pivot(v.begin(), v.end(), cmp, m);
        const std::int64_t pv = v[piv];
        const PartitionResult pr = partition_after_triple_pivot(v.begin(), v.end(), piv, cmp, m);
        CHECK(v[pr.lt_end] == pv);
        for (std::size_t i = 0; i < pr.lt_end; ++i) REQUIRE(v[i] <= pv);
        for (std::size_t i = pr.gt_begin; i < n; ++i) REQUIRE(v[i] >= pv);
        CHECK(same_multiset(v, before));
    }
}
