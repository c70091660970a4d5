#include <gtest/gtest.h>

#include <numbers>

#include "support.hpp"

using namespace lafr;

namespace {

Graph with_edges(Graph g, std::initializer_list<Edge> extra) {
  auto e = g.edges();
  e.insert(e.end(), extra.begin(), extra.end());
  return Graph(g.order(), e);
}

std::vector<std::pair<Vertex, Vertex>> proper_pair_list(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& d : proper_pairs(g)) out.emplace_back(d.a, d.b);
  return out;
}

void expect_oracle_block(const Graph& g, const RevivalDecision& d) {
  ASSERT_EQ(d.status, RevivalStatus::proper);
  const auto u = oracle::transition_matrix(g, d.earliest_time->value());
  const auto blk = oracle::block_fr_check(u, d.a, d.b, 1e-9);
  ASSERT_TRUE(blk.block) << "leakage " << blk.leakage;
  const auto amp = amplitudes_at(*d.phase);
  EXPECT_LT(std::abs(blk.block->alpha - amp.alpha), 1e-9);
  EXPECT_LT(std::abs(blk.block->beta - amp.beta), 1e-9);
  EXPECT_LT(std::abs(blk.block->gamma - amp.alpha), 1e-9);
  EXPECT_LE(oracle_residual(g, d), 1e-9);
}

TEST(PiTime, Normalization) {
  EXPECT_EQ(PiTime::make(4, 6).num, 2);
  EXPECT_EQ(PiTime::make(4, 6).den, 3);
  EXPECT_EQ(PiTime::make(2, -4).num, -1);
  EXPECT_EQ(PiTime::make(2, 4), PiTime::make(1, 2));
  EXPECT_LT(PiTime::make(1, 3), PiTime::make(1, 2));
  EXPECT_EQ(PiTime::make(2, 3).to_string(), "2/3 π");
  EXPECT_EQ(PiTime::make(1, 1).to_string(), "π");
  EXPECT_EQ(PiTime::make(2, 1).to_string(), "2 π");
  EXPECT_THROW(PiTime::make(1, 0), DomainError);
  EXPECT_NEAR(PiTime::make(2, 3).value(), 2 * std::numbers::pi / 3, 1e-15);
}

TEST(PhaseRational, LazyEquality) {
  EXPECT_EQ((PhaseRational{2, 4}), (PhaseRational{1, 2}));
  EXPECT_NE((PhaseRational{1, 3}), (PhaseRational{2, 3}));
}

TEST(ClassGcd, Examples) {
  EXPECT_EQ(class_gcd(PairPartition{0, 2, {0, 3}, {1}, {}}), 3);
  EXPECT_EQ(class_gcd(PairPartition{0, 3, {0, 3}, {1, 4}, {}}), 3);
  for (long n = 3; n <= 9; ++n) EXPECT_EQ(class_gcd(PairPartition{0, 1, {0, n}, {n - 2}, {}}), n);
  EXPECT_THROW(class_gcd(PairPartition{0, 1, {0}, {2}, {}}), SpecialSmall);
}

TEST(Decide, P3) {
  const auto d = decide_proper_lafr(path_graph(3), 0, 2);
  EXPECT_EQ(d.status, RevivalStatus::proper);
  EXPECT_EQ(d.g, 3);
  EXPECT_EQ(d.earliest_time, PiTime::make(2, 3));
  EXPECT_EQ(d.phase, (PhaseRational{1, 3}));
  EXPECT_EQ(d.is_pst, false);
  expect_oracle_block(path_graph(3), d);
}

TEST(Decide, DoubleConeOverK3) {
  const Graph g = double_cone(complete_graph(3));
  const auto d = decide_proper_lafr(g, 0, 1);
  EXPECT_EQ(d.status, RevivalStatus::proper);
  EXPECT_EQ(d.g, 5);
  EXPECT_EQ(d.earliest_time, PiTime::make(2, 5));
  EXPECT_EQ(d.is_pst, false);
  expect_oracle_block(g, d);
}

TEST(Decide, C4IsPerfectStateTransfer) {
  const Graph g = double_cone(empty_graph(2));
  const auto d = decide_proper_lafr(g, 0, 1);
  EXPECT_EQ(d.status, RevivalStatus::proper);
  EXPECT_EQ(d.phase, (PhaseRational{1, 2}));
  EXPECT_EQ(d.is_pst, true);
  const auto amp = amplitudes_at(*d.phase);
  EXPECT_EQ(amp.alpha, 0.0);
  EXPECT_EQ(amp.beta, 1.0);
  expect_oracle_block(g, d);
}

TEST(Decide, NegativeStatuses) {
  // Ends of P4 are mirror images, but their supports contain 2 +- sqrt 2.
  EXPECT_EQ(decide_proper_lafr(path_graph(4), 0, 3).status, RevivalStatus::non_integer_support);
  EXPECT_TRUE(oracle::numeric_strong_cospectral(path_graph(4), 0, 3, 1e-9));
  EXPECT_EQ(decide_proper_lafr(cycle_graph(5), 0, 2).status, RevivalStatus::non_integer_support);
  const auto k4 = decide_proper_lafr(complete_graph(4), 0, 1);
  EXPECT_EQ(k4.status, RevivalStatus::not_strongly_cospectral);
  EXPECT_FALSE(k4.partition);
  EXPECT_EQ(decide_proper_lafr(cycle_graph(6), 0, 1).status, RevivalStatus::not_strongly_cospectral);
}

TEST(Decide, PeriodicOnlyCarriesPartition) {
  // K2 x K2 x K2 (the cube): antipodes have minus eigenvalues 2 and 6, plus 0 and 4; g = 2, residue 0.
  const Graph cube = cartesian_product(cartesian_product(complete_graph(2), complete_graph(2)), complete_graph(2));
  bool found = false;
  for (Vertex b = 1; b < 8; ++b) {
    if (!eigenvalue_support(cube, b).all_integer) continue;
    const auto d = decide_proper_lafr(cube, 0, b);
    if (d.status != RevivalStatus::periodic_only) continue;
    found = true;
    ASSERT_TRUE(d.partition);
    ASSERT_TRUE(d.g);
    for (long mu : d.partition->minus) EXPECT_EQ(mu % *d.g, 0);
    EXPECT_FALSE(d.earliest_time);
    EXPECT_FALSE(d.is_pst);
    // The oracle sees beta = 0 at every multiple of 2 pi / g.
    const auto u = oracle::transition_matrix(cube, 2 * std::numbers::pi / static_cast<double>(*d.g));
    EXPECT_LT(std::abs(u.entries(0, b)), 1e-9);
  }
  const auto all = all_lafr_pairs(cube);
  EXPECT_EQ(found, std::any_of(all.begin(), all.end(), [](const auto& d) { return d.status == RevivalStatus::periodic_only; }));
}

TEST(Decide, Errors) {
  EXPECT_THROW(decide_proper_lafr(complete_graph(2), 0, 1), SpecialSmall);
  EXPECT_THROW(decide_proper_lafr(path_graph(3), 1, 1), DomainError);
  EXPECT_THROW(decide_proper_lafr(path_graph(3), 0, 3), DomainError);
}

TEST(Amplitudes, Examples) {
  const auto pst = amplitudes_at({1, 2});
  EXPECT_EQ(pst.alpha, 0.0);
  EXPECT_EQ(pst.beta, 1.0);
  const auto per = amplitudes_at({0, 1});
  EXPECT_EQ(per.alpha, 1.0);
  EXPECT_EQ(per.beta, 0.0);
  const auto third = amplitudes_at({1, 3});
  EXPECT_NEAR(std::norm(third.alpha), 0.25, 1e-15);
  EXPECT_NEAR(std::norm(third.beta), 0.75, 1e-15);
  EXPECT_THROW(amplitudes_at({3, 3}), DomainError);
  for (long long g = 1; g <= 12; ++g)
    for (long long k = 0; k < g; ++k) {
      const auto a = amplitudes_at({k, g});
      EXPECT_NEAR(std::norm(a.alpha) + std::norm(a.beta), 1.0, 1e-12);
      EXPECT_EQ(std::abs(a.beta) > 1e-12, k != 0);
    }
}

TEST(Amplitudes, SignConventionMatchesOracle) {
  // U(t) = exp(+itL): on P3 at 2 pi / 3 the (0,0) entry is (1 + e^{2 pi i/3})/2 = (1 + sqrt3 i)/4,
  // not its conjugate.
  const auto u = oracle::transition_matrix(path_graph(3), 2 * std::numbers::pi / 3);
  const std::complex<double> expected(0.25, std::sqrt(3.0) / 4);
  EXPECT_LT(std::abs(u.entries(0, 0) - expected), 1e-12);
  EXPECT_GT(std::abs(u.entries(0, 0) - std::conj(expected)), 0.5);
  EXPECT_LT(std::abs(amplitudes_at({1, 3}).alpha - expected), 1e-15);
  EXPECT_NEAR(std::norm(u.entries(0, 2)), 0.75, 1e-9);
}

TEST(K2Schedule, ClosedForm) {
  EXPECT_TRUE(K2Schedule::periodic_at(PiTime::make(1, 1)));
  EXPECT_FALSE(K2Schedule::proper_at(PiTime::make(2, 1)));
  EXPECT_TRUE(K2Schedule::pst_at(PiTime::make(1, 2)));
  EXPECT_TRUE(K2Schedule::pst_at(PiTime::make(3, 2)));
  EXPECT_TRUE(K2Schedule::proper_at(PiTime::make(1, 3)));
  EXPECT_FALSE(K2Schedule::pst_at(PiTime::make(1, 3)));
  const oracle::Propagator prop(complete_graph(2));
  for (long long q : {2, 3, 5, 7})
    for (long long p = 1; p < 2 * q; ++p) {
      const auto t = PiTime::make(p, q);
      const auto amp = amplitudes_at(K2Schedule::phase_at(t));
      EXPECT_LT(std::abs(prop.entry(0, 0, t.value()) - amp.alpha), 1e-12);
      EXPECT_LT(std::abs(prop.entry(0, 1, t.value()) - amp.beta), 1e-12);
      EXPECT_EQ(K2Schedule::proper_at(t), std::abs(amp.beta) > 1e-12);
      EXPECT_EQ(K2Schedule::pst_at(t), std::abs(amp.alpha) < 1e-12);
    }
}

TEST(AllPairs, C6) {
  EXPECT_EQ(proper_pair_list(cycle_graph(6)), (std::vector<std::pair<Vertex, Vertex>>{{0, 3}, {1, 4}, {2, 5}}));
}

TEST(AllPairs, ChordsOnC6) {
  for (const Graph& g : {with_edges(cycle_graph(6), {{1, 5}}), with_edges(cycle_graph(6), {{1, 5}, {0, 3}}),
                         with_edges(cycle_graph(6), {{1, 5}, {2, 4}})}) {
    const auto pairs = proper_pairs(g);
    ASSERT_EQ(pairs.size(), 1U) << to_graph6(g);
    EXPECT_EQ(std::make_pair(pairs[0].a, pairs[0].b), std::make_pair(Vertex{0}, Vertex{3}));
    expect_oracle_block(g, pairs[0]);
  }
}

TEST(AllPairs, P4AndOrdering) {
  EXPECT_TRUE(all_lafr_pairs(path_graph(4)).empty());
  const auto pairs = all_lafr_pairs(cartesian_product(complete_graph(3), path_graph(3)));
  for (std::size_t i = 1; i < pairs.size(); ++i)
    EXPECT_LT(std::make_pair(pairs[i - 1].a, pairs[i - 1].b), std::make_pair(pairs[i].a, pairs[i].b));
  EXPECT_THROW(all_lafr_pairs(complete_graph(2)), SpecialSmall);
}

TEST(AllPairs, MatchesUnprunedScan) {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 80; ++iter) {
    const auto g = testkit::random_graph(rng, 3 + iter % 6, 0.6);
    SpectralAnalyzer sa(g);
    std::vector<RevivalDecision> slow;
    for (Vertex a = 0; a < g.order(); ++a)
      for (Vertex b = a + 1; b < g.order(); ++b) {
        RevivalDecision d;
        try {
          d = decide_proper_lafr(sa, a, b);
        } catch (const SpecialSmall&) {
          continue;
        }
        if (d.status == RevivalStatus::proper || d.status == RevivalStatus::periodic_only) slow.push_back(d);
      }
    EXPECT_EQ(all_lafr_pairs(g), slow) << to_graph6(g);
  }
}

TEST(AllPairs, K2ComponentIsSkipped) {
  const Graph g = disjoint_union(complete_graph(2), path_graph(3));
  EXPECT_THROW(decide_proper_lafr(g, 0, 1), SpecialSmall);
  const auto pairs = all_lafr_pairs(g);
  ASSERT_EQ(pairs.size(), 1U);
  EXPECT_EQ(pairs[0].a, 2U);
  EXPECT_EQ(pairs[0].b, 4U);
}

TEST(EarliestCommon, Examples) {
  EXPECT_EQ(earliest_common_lafr_time(path_graph(3)), PiTime::make(2, 3));
  EXPECT_EQ(earliest_common_lafr_time(cycle_graph(6)), PiTime::make(2, 3));
  EXPECT_EQ(earliest_common_lafr_time(complete_graph(4)), std::nullopt);
  EXPECT_EQ(earliest_common_lafr_time(complete_graph(2)), std::nullopt);
}

TEST(ProperAt, MultiplesOfTheEarliestTime) {
  const auto d = decide_proper_lafr(path_graph(3), 0, 2);
  EXPECT_TRUE(proper_at(d, PiTime::make(2, 3)));
  EXPECT_TRUE(proper_at(d, PiTime::make(4, 3)));
  EXPECT_FALSE(proper_at(d, PiTime::make(2, 1)));
  EXPECT_FALSE(proper_at(d, PiTime::make(1, 3)));
  EXPECT_TRUE(revives_at(d, PiTime::make(2, 1)));
  const oracle::Propagator prop(path_graph(3));
  for (long long p = 1; p <= 12; ++p) {
    const auto t = PiTime::make(p, 3);
    const auto blk = oracle::block_fr_check(prop.at(t.value()), 0, 2, 1e-9);
    EXPECT_EQ(revives_at(d, t), blk.block.has_value()) << p;
    EXPECT_EQ(proper_at(d, t), blk.block && std::abs(blk.block->beta) > 1e-9) << p;
  }
}

TEST(Cartesian, Examples) {
  const auto pos = check_cartesian_theorem(complete_graph(3), path_graph(3), PiTime::make(2, 3));
  EXPECT_TRUE(pos.holds());
  EXPECT_TRUE(pos.left);
  for (Vertex v = 0; v < 3; ++v)
    EXPECT_NE(std::find(pos.witnesses.begin(), pos.witnesses.end(), std::make_pair(3 * v, 3 * v + 2)), pos.witnesses.end());
  const auto neg = check_cartesian_theorem(complete_graph(2), path_graph(3), PiTime::make(2, 3));
  EXPECT_TRUE(neg.holds());
  EXPECT_FALSE(neg.left);
  EXPECT_FALSE(neg.right);
  const auto id = check_cartesian_theorem(complete_graph(1), path_graph(3), PiTime::make(2, 3));
  EXPECT_TRUE(id.holds());
  EXPECT_TRUE(id.left);
  EXPECT_THROW(check_cartesian_theorem(complete_graph(1), path_graph(3), PiTime::make(0, 1)), DomainError);
}

TEST(Cartesian, ProductPropagatorIsTensorProduct) {
  const Graph x = complete_graph(3), y = path_graph(3);
  const Graph xy = cartesian_product(x, y);
  for (double t : {0.3, 1.7, 2 * std::numbers::pi / 3}) {
    const auto ux = oracle::transition_matrix(x, t), uy = oracle::transition_matrix(y, t);
    const auto uxy = oracle::transition_matrix(xy, t);
    for (Vertex i = 0; i < 9; ++i)
      for (Vertex j = 0; j < 9; ++j)
        EXPECT_LT(std::abs(uxy.entries(i, j) - ux.entries(i / 3, j / 3) * uy.entries(i % 3, j % 3)), 1e-8);
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(check_complement_transfer(cycle_graph(4), PiTime::make(1, 2)), Verdict::holds);
  EXPECT_EQ(check_complement_transfer(disjoint_union(path_graph(3), complete_graph(1)), PiTime::make(1, 2)), Verdict::holds);
  EXPECT_EQ(check_complement_transfer(path_graph(5), PiTime::make(2, 1)), Verdict::holds);
  EXPECT_EQ(check_complement_transfer(cycle_graph(4), PiTime::make(1, 3)), Verdict::not_applicable);
  // 2K2 inherits the PST of C4 at pi/2.
  const auto u = oracle::transition_matrix(complement(cycle_graph(4)), std::numbers::pi / 2);
  EXPECT_NEAR(std::abs(u.entries(0, 2)), 1.0, 1e-9);
}

TEST(JoinTiming, Examples) {
  EXPECT_EQ(check_join_timing(double_cone(complete_graph(3))), Verdict::holds);
  const Graph z = join(empty_graph(2), complete_graph(4));
  EXPECT_EQ(check_join_timing(z), Verdict::holds);
  for (const auto& d : proper_pairs(z)) EXPECT_TRUE(*d.g == 3 || *d.g == 6);
  EXPECT_EQ(check_join_timing(cycle_graph(6)), Verdict::not_applicable);
}

TEST(Infjoin, Examples) {
  const auto a = check_infjoin_construction(cycle_graph(4), 0, 2, complete_graph(4));
  ASSERT_TRUE(a);
  EXPECT_TRUE(proper_at(*a, PiTime::make(1, 2)));
  const auto b = check_infjoin_construction(double_cone(complete_graph(4)), 0, 1, cycle_graph(6));
  ASSERT_TRUE(b);
  EXPECT_TRUE(proper_at(*b, PiTime::make(1, 3)));
  expect_oracle_block(join(double_cone(complete_graph(4)), cycle_graph(6)), *b);
  const auto c = check_infjoin_construction(path_graph(3), 0, 2, complete_graph(3));
  ASSERT_TRUE(c);
  EXPECT_TRUE(proper_at(*c, PiTime::make(2, 3)));
  // 3 does not divide 4
  EXPECT_FALSE(check_infjoin_construction(path_graph(3), 0, 2, complete_graph(4)));
  // not a proper pair
  EXPECT_FALSE(check_infjoin_construction(path_graph(3), 0, 1, complete_graph(3)));
}

TEST(Polygamy, Arithmetic) {
  for (long long q : {1, 3, 5}) {
    const auto p = check_polygamy_conditions(12 * q, 12, 6 * q, 4);
    EXPECT_TRUE(p.ok);
    EXPECT_EQ(p.lafr_x_per_y_time, PiTime::make(1, 2));
    EXPECT_EQ(p.lafr_y_per_x_time, PiTime::make(1, 3));
  }
  EXPECT_FALSE(check_polygamy_conditions(3, 3, 1, 1).ok);
  EXPECT_THROW(check_polygamy_conditions(0, 3, 1, 1), DomainError);
}

TEST(Polygamy, SmallProductInstance) {
  // P3 x P3 at 2 pi / 3 against the lemma: g = h = 3, G = H = 1 fails the hypothesis,
  // and indeed (0,c) -> (2,c) is proper while the end vertex is not periodic there.
  const auto d = decide_proper_lafr(path_graph(3), 0, 2);
  const auto pa = is_periodic(path_graph(3), 0);
  const auto c = check_polygamy_conditions(*d.g, *d.g, *pa.big_g, *pa.big_g);
  EXPECT_FALSE(c.ok);
}

TEST(Hadamard, Partitions) {
  for (unsigned n : {2U, 4U}) {
    const Graph h = hadamard_graph(sylvester_hadamard(n == 2 ? 2 : 4));
    const auto d = decide_proper_lafr(h, 0, h.order() / 4);
    ASSERT_TRUE(d.partition);
    EXPECT_TRUE(hadamard_partition_check(n, *d.partition));
    EXPECT_EQ(d.status, RevivalStatus::proper);
    EXPECT_EQ(d.g, 2 * static_cast<long long>(n));
    EXPECT_EQ(d.is_pst, true);
    EXPECT_EQ(d.earliest_time, PiTime::make(1, n));
    expect_oracle_block(h, d);
  }
  EXPECT_FALSE(hadamard_partition_check(3, PairPartition{0, 1, {0, 4, 8}, {2, 6}, {}}));
}

TEST(Threshold, Conditions) {
  const std::vector<std::size_t> m{2, 4};
  const auto d = decide_proper_lafr(threshold_graph(m), 0, 1);
  EXPECT_EQ(d.status, RevivalStatus::proper);
  EXPECT_EQ(d.earliest_time, PiTime::make(1, 3));
  EXPECT_TRUE(threshold_lafr_conditions(m, 0, 1, PiTime::make(1, 3)));
  EXPECT_FALSE(threshold_lafr_conditions(m, 0, 1, PiTime::make(1, 2)));
  EXPECT_FALSE(threshold_lafr_conditions(m, 0, 2, PiTime::make(1, 3)));
  EXPECT_FALSE(threshold_lafr_conditions({3, 3}, 0, 1, PiTime::make(1, 3)));
  // Theorem direction on a longer sequence: conditions and decision agree at multiples of pi/6.
  const std::vector<std::size_t> m4{2, 1, 3, 6};
  const Graph g = threshold_graph(m4);
  const auto d4 = decide_proper_lafr(g, 0, 1);
  for (long long p = 1; p < 12; ++p) {
    const auto t = PiTime::make(p, 6);
    EXPECT_EQ(threshold_lafr_conditions(m4, 0, 1, t), proper_at(d4, t) && (2 * t.num) % t.den != 0) << p;
  }
}

}  // namespace
