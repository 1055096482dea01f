#include <gtest/gtest.h>

#include <map>
#include <set>

#include <json.hpp>

#include "comax/builders.hpp"
#include "comax/invariants.hpp"
#include "comax/spec_parser.hpp"
#include "oracles.hpp"

using namespace comax;

namespace {

Ring ring(const char* text) { return make_ring(parse_ring_spec(text)); }

std::size_t at(const Graph& g, std::size_t element_index) {
  auto pos = element_positions(g, 4096);
  EXPECT_GE(pos[element_index], 0);
  return static_cast<std::size_t>(pos[element_index]);
}

std::vector<std::uint32_t> label_keys(const Graph& g) {
  std::vector<std::uint32_t> out;
  for (const auto& l : g.labels()) out.push_back(l.key.front());
  return out;
}

const std::vector<const char*> kRings{"Z2",     "Z4",       "Z6",         "Z12",   "Z30",       "Z36",
                                      "GF(8)",  "Z2xZ2",    "Z2xZ2xZ2",   "Z2xZ4", "Z2xGF(4)",  "Z3xZ4",
                                      "Z4xZ9",  "Z2xZ3xZ5", "Z2xZ2xZ2xZ2", "Z8xZ3", "GF(4)xZ9", "Z60"};

// Ω built from brute-force sums only.
oracle::Matrix omega_oracle(const Ring& r) {
  oracle::Matrix m(r.size(), std::vector<bool>(r.size(), false));
  for (std::size_t x = 0; x < r.size(); ++x)
    for (std::size_t y = x + 1; y < r.size(); ++y)
      m[x][y] = m[y][x] = oracle::comaximal_by_search(r, element(x), element(y));
  return m;
}

}  // namespace

TEST(Omega, MatchesBruteForceSums) {
  for (const char* text : kRings) {
    const Ring r = ring(text);
    const Graph omega = build_omega(r);
    ASSERT_EQ(omega.size(), r.size());
    for (std::size_t v = 0; v < omega.size(); ++v) EXPECT_EQ(omega.label(v).key.front(), v);
    EXPECT_EQ(oracle::adjacency(omega), omega_oracle(r)) << text;
  }
}

TEST(Omega, UnitAndRadicalNeighbourhoods) {
  for (const char* text : kRings) {
    const Ring r = ring(text);
    const Graph omega = build_omega(r);
    for (Element u : r.units()) EXPECT_EQ(omega.degree(index_of(u)), r.size() - 1) << text;
    for (Element j : r.radical().members) EXPECT_EQ(omega.neighbors(index_of(j)), r.unit_mask()) << text;
  }
}

TEST(Omega, Examples) {
  const Graph z4 = build_omega(ring("Z4"));
  const Graph d2k2[] = {discrete_graph(2), complete_graph(2)};
  EXPECT_TRUE(isomorphic(z4, sequential_sum(d2k2)));
  EXPECT_EQ(z4.edge_count(), 5u);
  EXPECT_FALSE(z4.adjacent(0, 2));

  const Graph k1k1h[] = {complete_graph(1), complete_graph(1), triangle_with_pendants()};
  EXPECT_TRUE(isomorphic(build_omega(ring("Z2xZ2xZ2")), sequential_sum(k1k1h)));

  const Graph gf3 = build_omega(ring("GF(3)"));
  EXPECT_EQ(gf3.edge_count(), 3u);
  EXPECT_TRUE(isomorphic(gf3, complete_graph(3)));
}

TEST(Gamma, MatchesBruteForceVertexSet) {
  for (const char* text : kRings) {
    const Ring r = ring(text);
    const auto units = oracle::units_by_search(r);
    const auto rad = oracle::radical_by_units(r);
    std::vector<std::uint32_t> expected;
    for (std::uint32_t x = 0; x < r.size(); ++x)
      if (!std::count(units.begin(), units.end(), x) && !std::count(rad.begin(), rad.end(), x)) expected.push_back(x);
    const Graph g = build_gamma(r);
    EXPECT_EQ(label_keys(g), expected) << text;
    const oracle::Matrix full = omega_oracle(r);
    for (std::size_t u = 0; u < g.size(); ++u)
      for (std::size_t v = 0; v < g.size(); ++v) EXPECT_EQ(g.adjacent(u, v), full[expected[u]][expected[v]]) << text;
    EXPECT_EQ(g.empty(), r.is_local()) << text;
  }
}

TEST(Gamma, Z12IsK42) {
  const Graph g = build_gamma(ring("Z12"));
  EXPECT_EQ(label_keys(g), (std::vector<std::uint32_t>{2, 3, 4, 8, 9, 10}));
  EXPECT_EQ(g.edge_count(), 8u);
  for (std::size_t a : {2, 4, 8, 10})
    for (std::size_t b : {3, 9}) EXPECT_TRUE(g.adjacent(at(g, a), at(g, b)));
  EXPECT_FALSE(g.adjacent(at(g, 2), at(g, 4)));
  EXPECT_FALSE(g.adjacent(at(g, 3), at(g, 9)));
  EXPECT_TRUE(isomorphic(g, complete_bipartite(4, 2)));
}

TEST(Gamma, LocalIsEmptyAndFieldTimesZ2IsStar) {
  EXPECT_TRUE(build_gamma(ring("Z4")).empty());
  EXPECT_TRUE(build_gamma(ring("GF(9)")).empty());
  EXPECT_TRUE(isomorphic(build_gamma(ring("Z2xGF(5)")), star_graph(4)));
}

TEST(GammaR, MatchesBruteForcePrincipalIdeals) {
  for (const char* text : kRings) {
    const Ring r = ring(text);
    const Graph g = build_gamma(r);
    std::map<std::set<std::size_t>, std::uint32_t> classes;  // member set -> least Γ generator
    for (const auto& l : g.labels()) {
      std::set<std::size_t> members;
      for (std::size_t s = 0; s < r.size(); ++s) members.insert(index_of(r.mul(element(s), element(l.key.front()))));
      classes.emplace(members, l.key.front());
    }
    const Graph gr = build_gamma_r(r);
    ASSERT_EQ(gr.size(), classes.size()) << text;
    std::set<std::set<std::size_t>> labelled;
    for (const auto& l : gr.labels()) labelled.insert(std::set<std::size_t>(l.key.begin(), l.key.end()));
    std::set<std::set<std::size_t>> expected;
    for (const auto& [m, x] : classes) expected.insert(m);
    EXPECT_EQ(labelled, expected) << text;
    // Adjacency by the generators' brute-force co-maximality.
    for (std::size_t u = 0; u < gr.size(); ++u)
      for (std::size_t v = 0; v < gr.size(); ++v) {
        if (u == v) continue;
        const auto& mu = gr.label(u).key;
        const auto& mv = gr.label(v).key;
        const std::uint32_t xu = classes.at(std::set<std::size_t>(mu.begin(), mu.end()));
        const std::uint32_t xv = classes.at(std::set<std::size_t>(mv.begin(), mv.end()));
        EXPECT_EQ(gr.adjacent(u, v), oracle::comaximal_by_search(r, element(xu), element(xv))) << text;
      }
  }
}

TEST(GammaR, Examples) {
  const Graph z12 = build_gamma_r(ring("Z12"));
  ASSERT_EQ(z12.size(), 3u);
  std::map<std::string, std::size_t> by_text;
  for (std::size_t v = 0; v < z12.size(); ++v) by_text[z12.label(v).text] = v;
  ASSERT_TRUE(by_text.count("{0,2,4,6,8,10}"));
  ASSERT_TRUE(by_text.count("{0,3,6,9}"));
  ASSERT_TRUE(by_text.count("{0,4,8}"));
  EXPECT_EQ(z12.edge_count(), 2u);
  EXPECT_TRUE(z12.adjacent(by_text["{0,2,4,6,8,10}"], by_text["{0,3,6,9}"]));
  EXPECT_TRUE(z12.adjacent(by_text["{0,3,6,9}"], by_text["{0,4,8}"]));
  EXPECT_TRUE(isomorphic(build_gamma_r(ring("Z2xZ3")), complete_graph(2)));
  EXPECT_TRUE(isomorphic(build_gamma_r(ring("Z2xZ2xZ2")), build_gamma(ring("Z2xZ2xZ2"))));
  EXPECT_EQ(build_gamma_r(ring("Z2xZ2xZ2")).size(), 6u);
}

TEST(GammaR, AdjacencyIndependentOfGenerator) {
  for (const char* text : {"Z12", "Z36", "Z2xZ4xZ3", "Z4xZ9"}) {
    const Ring r = ring(text);
    for (std::size_t x = 0; x < r.size(); ++x)
      for (std::size_t y = 0; y < r.size(); ++y) {
        if (r.principal_id(element(x)) != r.principal_id(element(y))) continue;
        for (std::size_t z = 0; z < r.size(); ++z)
          ASSERT_EQ(is_comaximal(r, element(x), element(z)), is_comaximal(r, element(y), element(z))) << text;
      }
  }
}

TEST(SequentialSum, Construction) {
  const Graph parts[] = {complete_graph(1), complete_graph(1), triangle_with_pendants()};
  const Graph s = sequential_sum(parts);
  EXPECT_EQ(s.size(), 8u);
  // K1-K1 edge, K1 joined to all of H, edges of H.
  EXPECT_EQ(s.edge_count(), 1u + 6u + 6u);
  const Graph single[] = {cycle_graph(5)};
  EXPECT_TRUE(isomorphic(sequential_sum(single), cycle_graph(5)));
  EXPECT_EQ(sequential_sum(single).edge_count(), 5u);
}

TEST(SequentialSum, JoinsOnlyConsecutiveParts) {
  const Graph a = path_graph(3), b = discrete_graph(2), c = complete_graph(3);
  const Graph abc[] = {a, b, c};
  const Graph flat = sequential_sum(abc);
  ASSERT_EQ(flat.size(), 8u);
  EXPECT_EQ(flat.edge_count(), a.edge_count() + b.edge_count() + c.edge_count() + 3 * 2 + 2 * 3);
  // Vertices are in part order: 0..2 from a, 3..4 from b, 5..7 from c.
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 5; v < 8; ++v) EXPECT_FALSE(flat.adjacent(u, v));
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 3; v < 5; ++v) EXPECT_TRUE(flat.adjacent(u, v));
  for (std::size_t u = 3; u < 5; ++u)
    for (std::size_t v = 5; v < 8; ++v) EXPECT_TRUE(flat.adjacent(u, v));
  EXPECT_FALSE(flat.adjacent(3, 4));
}

TEST(Decompose, HoldsForAllTestRings) {
  for (const char* text : kRings) EXPECT_TRUE(decompose_omega(ring(text))) << text;
  EXPECT_TRUE(decompose_omega(ring("GF(7)")));
}

TEST(Decompose, DetectsTamperedGraph) {
  const Ring r = ring("Z12");
  Graph omega = build_omega(r);
  const Graph gamma = build_gamma(r);
  omega.add_edge(0, 6);  // two radical elements
  EXPECT_FALSE(decompose_omega(r, omega, gamma));
}

TEST(TwinCollapse, Examples) {
  const Ring z12 = ring("Z12");
  const Graph g = build_gamma(z12);
  const auto sigs = vertex_signatures(z12, g);
  const TwinCollapse tc = collapse_false_twins(g, sigs);
  EXPECT_EQ(tc.graph.size(), 2u);
  EXPECT_EQ(tc.graph.edge_count(), 1u);
  EXPECT_EQ(tc.class_of[at(g, 2)], tc.class_of[at(g, 10)]);
  EXPECT_EQ(tc.class_of[at(g, 3)], tc.class_of[at(g, 9)]);
  std::multiset<std::size_t> sizes(tc.class_size.begin(), tc.class_size.end());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{2, 4}));
  EXPECT_EQ(clique_number(g), 2u);
  EXPECT_EQ(clique_number(tc.graph), 2u);
  EXPECT_EQ(chromatic_number(tc.graph), 2u);

  const Ring z2c = ring("Z2xZ2xZ2");
  const Graph h = build_gamma(z2c);
  const TwinCollapse tc2 = collapse_false_twins(h, vertex_signatures(z2c, h));
  EXPECT_EQ(tc2.graph.size(), 6u);
  EXPECT_EQ(tc2.graph.edge_count(), h.edge_count());

  const Graph d = discrete_graph(4);
  const std::vector<SSignature> same(4, SSignature(1, 2));
  EXPECT_EQ(collapse_false_twins(d, same).graph.size(), 1u);
  EXPECT_EQ(collapse_false_twins(d).graph.size(), 1u);
}

TEST(TwinCollapse, RejectsInconsistentSignatures) {
  const Graph k2 = complete_graph(2);
  const std::vector<SSignature> same(2, SSignature(1, 2));
  EXPECT_THROW(collapse_false_twins(k2, same), InternalError);
}

TEST(TwinCollapse, PreservesCliqueAndChromatic) {
  for (const char* text : {"Z12", "Z30", "Z2xZ2xZ2", "Z2xZ4", "Z3xZ4", "Z2xZ3xZ2", "Z6xZ2"}) {
    const Ring r = ring(text);
    const Graph g = build_gamma(r);
    const TwinCollapse tc = collapse_false_twins(g, vertex_signatures(r, g));
    ASSERT_LE(tc.graph.size(), 10u);
    const auto m = oracle::adjacency(tc.graph);
    EXPECT_EQ(oracle::clique_number(m), clique_number(g)) << text;
    EXPECT_EQ(oracle::chromatic_number(m), chromatic_number(g)) << text;
    if (g.size() <= 10) {
      EXPECT_EQ(oracle::clique_number(oracle::adjacency(g)), oracle::clique_number(m)) << text;
      EXPECT_EQ(oracle::chromatic_number(oracle::adjacency(g)), oracle::chromatic_number(m)) << text;
    }
  }
}

TEST(TwinCollapse, GenericMatchesSignatureForm) {
  for (const char* text : kRings) {
    const Ring r = ring(text);
    const Graph g = build_gamma(r);
    const TwinCollapse a = collapse_false_twins(g, vertex_signatures(r, g));
    const TwinCollapse b = collapse_false_twins(g);
    EXPECT_EQ(a.graph.size(), b.graph.size()) << text;
    for (std::size_t u = 0; u < g.size(); ++u)
      for (std::size_t v = 0; v < g.size(); ++v)
        EXPECT_EQ(a.class_of[u] == a.class_of[v], b.class_of[u] == b.class_of[v]) << text;
  }
}

TEST(Retraction, GammaOntoGammaR) {
  const Ring z12 = ring("Z12");
  const RetractCheck c = retraction_gamma_to_gamma_r(z12);
  EXPECT_TRUE(c.holds());
  const Graph g = build_gamma(z12);
  std::set<std::uint32_t> reps;
  for (std::size_t v : c.retraction.representatives) reps.insert(g.label(v).key.front());
  EXPECT_EQ(reps, (std::set<std::uint32_t>{2, 3, 4}));
  EXPECT_TRUE(is_retraction(g, c.retraction));
  for (std::size_t v = 0; v < g.size(); ++v)
    EXPECT_EQ(c.retraction.target[c.retraction.target[v]], c.retraction.target[v]);

  EXPECT_TRUE(retraction_gamma_to_gamma_r(ring("Z2xZ3")).holds());
  const RetractCheck z2c = retraction_gamma_to_gamma_r(ring("Z2xZ2xZ2"));
  EXPECT_TRUE(z2c.holds());
  for (std::size_t v = 0; v < z2c.retraction.target.size(); ++v) EXPECT_EQ(z2c.retraction.target[v], v);
  for (const char* text : kRings) EXPECT_TRUE(retraction_gamma_to_gamma_r(ring(text)).holds()) << text;
}

TEST(Retraction, QuotientByIdealInRadical) {
  const Ring z12 = ring("Z12");
  const RetractCheck c = quotient_retract_check(z12, z12.radical());
  EXPECT_TRUE(c.holds());
  // Γ(Z6) built directly: 2-3, 3-4.
  const Graph z6 = build_gamma(ring("Z6"));
  EXPECT_EQ(label_keys(z6), (std::vector<std::uint32_t>{2, 3, 4}));
  EXPECT_EQ(z6.edge_count(), 2u);
  EXPECT_TRUE(isomorphic(build_gamma(quotient_ring(z12, z12.radical())), z6));

  for (const char* text : kRings) {
    const Ring r = ring(text);
    EXPECT_TRUE(quotient_retract_check(r, zero_ideal(r)).holds()) << text;
    for (const Ideal& i : r.ideals()) {
      if (!i.is_subset_of(r.radical())) continue;
      EXPECT_TRUE(quotient_retract_check(r, i).holds()) << text;
    }
  }
  const Ring z4 = ring("Z4");
  EXPECT_TRUE(quotient_retract_check(z4, z4.radical()).holds());
  EXPECT_THROW(quotient_retract_check(z12, principal_ideal(z12, element(3))), RingError);
}

TEST(Export, Dot) {
  const std::string k2 = export_graph(complete_graph(2), GraphFormat::dot);
  EXPECT_EQ(std::count(k2.begin(), k2.end(), '\n'), 3);
  EXPECT_NE(k2.find(" -- "), std::string::npos);
  EXPECT_EQ(export_graph(Graph(), GraphFormat::dot), "graph {\n}\n");
  const std::string z6 = export_graph(build_gamma(ring("Z6")), GraphFormat::dot);
  EXPECT_EQ(z6, "graph {\n  \"2\" -- \"3\";\n  \"3\" -- \"4\";\n}\n");
  // Isolated vertices are listed.
  EXPECT_NE(export_graph(discrete_graph(1), GraphFormat::dot).find(";"), std::string::npos);
}

TEST(Export, Json) {
  const auto doc = nlohmann::json::parse(export_graph(build_gamma(ring("Z12")), GraphFormat::json));
  EXPECT_EQ(doc["vertices"].size(), 6u);
  EXPECT_EQ(doc["edges"].size(), 8u);
  for (const auto& e : doc["edges"]) EXPECT_LT(e[0].get<int>(), e[1].get<int>());
  const auto empty = nlohmann::json::parse(export_graph(Graph(), GraphFormat::json));
  EXPECT_TRUE(empty["vertices"].empty());
  EXPECT_TRUE(empty["edges"].empty());
  EXPECT_EQ(export_graph(build_gamma(ring("Z12")), GraphFormat::json),
            export_graph(build_gamma(ring("Z12")), GraphFormat::json));
}
