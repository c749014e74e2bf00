#include <map>

#include <gtest/gtest.h>

#include "abcore/isomorphism.hpp"

using abcore::gap_poset;

namespace {

std::vector<int> elems(const gap_poset& p) { return {p.elements().begin(), p.elements().end()}; }

}  // namespace

TEST(SubPosets, Examples) {
    EXPECT_EQ(elems(abcore::m2::P_upper(6, 3)), (std::vector<int>{7, 8, 14, 20}));
    EXPECT_EQ(elems(abcore::m2::P_lower(6, 3)), (std::vector<int>{4, 5, 10, 11, 17, 23}));
    EXPECT_EQ(elems(abcore::m2::Q_upper(5, 4)), (std::vector<int>{14, 15, 20, 21, 27, 33}));
    EXPECT_EQ(elems(abcore::m2::Q_lower(5, 4)), (std::vector<int>{11, 17}));
}

TEST(SubPosets, LabelsArePreserved) {
    const auto p = abcore::m2::P(6);
    const auto sub = abcore::m2::P_upper(6, 3);
    for (int x : sub.elements()) EXPECT_TRUE(p.contains(x));
}

TEST(Isomorphism, CatalogHoldsUpToSeven) {
    const auto catalog = abcore::isomorphism_catalog(7);
    std::map<std::string, int> per_family;
    for (const auto& inst : catalog) {
        const auto r = inst.verify();
        EXPECT_TRUE(r.ok) << inst.family << " " << inst.label << ": " << r.witness;
        ++per_family[inst.family];
    }
    EXPECT_EQ(per_family.size(), 5u);
    for (const auto& [family, count] : per_family) EXPECT_GE(count, 3) << family;
}

TEST(Isomorphism, DetectsBrokenMaps) {
    const auto src = gap_poset::of(3, 4);  // {1, 2, 5}
    const auto dst = gap_poset::of(3, 4);
    EXPECT_TRUE(abcore::check_isomorphism(src, dst, [](int p) { return p; }).ok);

    const auto swap12 = abcore::check_isomorphism(src, dst, [](int p) {
        return p == 1 ? 2 : p == 2 ? 1 : p;
    });
    EXPECT_TRUE(swap12.ok);  // 5 covers both, so the swap is an automorphism

    const auto off = abcore::check_isomorphism(src, dst, [](int p) { return p + 1; });
    EXPECT_FALSE(off.ok);
    EXPECT_NE(off.witness.find("not total"), std::string::npos);

    const auto collapse = abcore::check_isomorphism(src, dst, [](int p) { return p == 2 ? 1 : p; });
    EXPECT_FALSE(collapse.ok);
    EXPECT_NE(collapse.witness.find("injective"), std::string::npos);

    const auto size = abcore::check_isomorphism(src, gap_poset::of(3, 5), [](int p) { return p; });
    EXPECT_FALSE(size.ok);
}

TEST(Isomorphism, RejectsOrderBreakingBijection) {
    // P_{3,5} = {1, 2, 4, 7}: covers 4->1, 7->2, 7->4.
    const auto p = gap_poset::of(3, 5);
    const auto r = abcore::check_isomorphism(p, p, [](int x) {
        return x == 1 ? 2 : x == 2 ? 1 : x;
    });
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.witness.find("non-cover"), std::string::npos);
}
