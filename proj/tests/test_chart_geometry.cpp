#include "support.hpp"

#include <gtest/gtest.h>

using namespace toric;
using namespace toric::testing;

namespace {

EmbeddingState cusp_state() {
    return EmbeddingState(Chart::root(4, {0, 1, 2, 3}, {"x", "y", "z", "w"}),
                          Lattice::from_generators(4, {{2, -3, 0, 0}, {1, 1, 1, -2}}));
}

}  // namespace

TEST(Chart, RootChart) {
    Chart c = Chart::root(3, {0, 2});
    EXPECT_EQ(c.names, (std::vector<std::string>{"x0", "x1", "x2"}));
    EXPECT_EQ(c.rays, identity(3));
    EXPECT_TRUE(c.H.empty());
    EXPECT_FALSE(c.lineage);
}

TEST(Chart, Localize) {
    Chart c = Chart::root(3, {0, 1, 2});
    c.H = {1, 2};
    Chart l = localize(c, {0, 2});
    EXPECT_EQ(l.E, (IndexSet{0, 2}));
    EXPECT_EQ(l.H, (IndexSet{2}));
    EXPECT_THROW(localize(Chart::root(3, {0}), {1}), Error);
}

TEST(ChartGeometry, HcodimAtWorkedExampleStrata) {
    EmbeddingState st = cusp_state();
    EXPECT_EQ(st.dim_x, 2u);
    EXPECT_EQ(hcodim(st, {}), 0u);
    EXPECT_EQ(hcodim(st, {2, 3}), 1u);
    EXPECT_EQ(hcodim(st, {0, 1, 3}), 2u);
    EXPECT_EQ(hcodim(st, {0, 1, 2, 3}), 2u);
}

TEST(ChartGeometry, EnvelopeIsTransversalAndInsideX) {
    EmbeddingState st = cusp_state();
    HyperbolicIdeal v = minimal_transversal_envelope(st, {2, 3});
    EXPECT_EQ(v.lattice.rank(), 1u);
    EXPECT_TRUE(st.lattice.contains(v.lattice));
    EXPECT_TRUE(is_transversal(v.lattice, {2, 3}));
    EXPECT_EQ(Lattice::from_generators(4, v.basis), v.lattice);
}

TEST(ChartGeometry, HcodimBoundedByCodimension) {
    Rng rng(21);
    for (int it = 0; it < 100; ++it) {
        auto n = static_cast<std::size_t>(uniform(rng, 2, 4));
        auto r = static_cast<std::size_t>(uniform(rng, 1, static_cast<long long>(n) - 1));
        EmbeddingState st(Chart::root(n, range_set(static_cast<int>(n))), random_saturated(rng, n, r, 3));
        for (const auto& s : all_subsets(st.chart.E)) {
            if (!stratum_meets(st.lattice, s)) continue;
            std::size_t h = hcodim(st, s);
            EXPECT_LE(h, r);
            // Hcodim agrees with the rank of the projection onto the stratum coordinates.
            IMat proj;
            for (const auto& b : st.lattice.basis()) proj.push_back(project(b, s));
            EXPECT_EQ(h, rank_of(proj));
        }
    }
}

TEST(ChartGeometry, RelativeIdealDropsTheEnvelope) {
    EmbeddingState st = cusp_state();
    HyperbolicIdeal v = minimal_transversal_envelope(st, {2, 3});
    RelativeIdeal rel = relative_ideal(st, v);
    EXPECT_EQ(rel.lattice.ambient_dim(), 3u);
    EXPECT_EQ(rel.lattice.rank(), 1u);
    EXPECT_EQ(rel.projection.size(), 3u);
    for (const auto& row : rel.projection)
        for (const auto& b : v.basis) EXPECT_EQ(dot(row, b), 0);
    // z and w survive as boundary coordinates of the envelope.
    IndexSet sources;
    for (int i : rel.E) sources.push_back(rel.source[static_cast<std::size_t>(i)]);
    std::sort(sources.begin(), sources.end());
    EXPECT_TRUE(contains(sources, 2));
    EXPECT_TRUE(contains(sources, 3));
}

TEST(ChartGeometry, RelativeIdealRejectsForeignEnvelope) {
    EmbeddingState st = cusp_state();
    Lattice other = Lattice::from_generators(4, {{1, 0, 0, 0}});
    EXPECT_THROW(relative_ideal(st, HyperbolicIdeal{other, {{1, 0, 0, 0}}}), Error);
}

TEST(ChartGeometry, RootImage) {
    Chart root = Chart::root(3, {0, 1, 2});
    auto children = blow_up_chart(root, {0, 1});
    const Chart& c = children.front().first;
    EXPECT_EQ(root_image(c, {0}), (IndexSet{0, 1}));
    EXPECT_EQ(root_image(c, {2}), (IndexSet{2}));
    EXPECT_EQ(root_image(c, {}), IndexSet{});
}
