#include "fcqec/report.hpp"

#include <gtest/gtest.h>

#include "fcqec/errors.hpp"

namespace fcqec {
namespace {

TEST(Verification, OddThreePasses) {
  const auto r = run_verification(3, 5, 42);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.parity, "odd");
  EXPECT_EQ(r.cnot_count, 3u);
  EXPECT_EQ(r.h_count, 0u);
  EXPECT_EQ(r.conjugation_residuals, (std::array<double, 3>{0.0, 0.0, 0.0}));
  ASSERT_EQ(r.trials.size(), 5u);
  for (const auto& t : r.trials) {
    EXPECT_EQ(t.sigma, "random");
    EXPECT_FALSE(t.hybrid_exact.has_value());
  }
}

TEST(Verification, EvenFourIncludesHybridSweep) {
  const auto r = run_verification(4, 3, 42);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.cnot_count, 5u);
  EXPECT_EQ(r.h_count, 1u);
  ASSERT_EQ(r.trials.size(), 3u * 5);
  std::size_t hybrid = 0;
  for (const auto& t : r.trials) {
    if (t.hybrid_exact) {
      ++hybrid;
      EXPECT_TRUE(*t.hybrid_exact);
      EXPECT_EQ(t.sigma.rfind("classical:", 0), 0u);
    }
  }
  EXPECT_EQ(hybrid, 12u);
}

TEST(Verification, Deterministic) {
  EXPECT_EQ(run_verification(5, 2, 7), run_verification(5, 2, 7));
  EXPECT_NE(run_verification(5, 2, 7).trials[0].seed, run_verification(5, 2, 8).trials[0].seed);
}

TEST(Verification, BadQubitCounts) {
  EXPECT_THROW(run_verification(1, 1, 0), BadQubitCount);
  EXPECT_THROW(run_verification(13, 1, 0), BadQubitCount);
}

TEST(Verification, PassRecomputationCatchesBadFields) {
  auto r = run_verification(3, 1, 1);
  EXPECT_TRUE(report_passes(r));
  r.conjugation_residuals[1] = 1e-300;
  EXPECT_FALSE(report_passes(r));
  r = run_verification(4, 1, 1);
  r.trials.back().hybrid_exact = false;
  EXPECT_FALSE(report_passes(r));
  r = run_verification(4, 1, 1);
  r.cnot_count = 4;
  EXPECT_FALSE(report_passes(r));
}

TEST(ReportJson, RoundTrip) {
  for (unsigned n : {3u, 4u}) {
    const auto r = run_verification(n, 2, 11);
    EXPECT_EQ(report_from_json(report_to_json(r)), r);
  }
  EXPECT_THROW(report_from_json("{"), InvalidArgument);
  EXPECT_THROW(report_from_json("{}"), InvalidArgument);
}

TEST(ReportTable, MentionsVerdict) {
  const auto text = render_table(run_verification(3, 1, 0));
  EXPECT_NE(text.find("PASS"), std::string::npos);
  EXPECT_NE(text.find("CNOT gates: 3"), std::string::npos);
}

TEST(MatrixJson, RoundTrip) {
  const auto m = random_density(4, 17).mat();
  EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
  EXPECT_THROW(matrix_from_json(R"({"dim": 2, "entries": [[1,0]]})"), InvalidArgument);
  EXPECT_THROW(matrix_from_json("[]"), InvalidArgument);
}

TEST(ChannelsJson, ParsesBothKinds) {
  const auto chans = channels_from_json(
      R"([{"pauli": [0.5, 0.5, 0, 0]}, {"span": [[0.6, 0, 0, 0, 0, 0.8, 0, 0]]}])", 3);
  ASSERT_EQ(chans.size(), 2u);
  EXPECT_TRUE(std::holds_alternative<PauliChannel>(chans[0]));
  ASSERT_TRUE(std::holds_alternative<SpanChannel>(chans[1]));
  EXPECT_EQ(std::get<SpanChannel>(chans[1]).kraus()[0][2], (cplx{0.0, 0.8}));
  EXPECT_THROW(channels_from_json(R"([{"span": [[1, 0, 1, 0, 0, 0, 0, 0]]}])", 3), NotTracePreserving);
  EXPECT_THROW(channels_from_json(R"([{"other": 1}])", 3), InvalidArgument);
  EXPECT_THROW(channels_from_json(R"([{"pauli": [1, 1, 0, 0]}])", 3), InvalidProbabilities);
}

TEST(Optimality, ReportValues) {
  const auto r = run_optimality();
  EXPECT_EQ(r.mismatch, 12u);
  EXPECT_EQ(r.lower_bound, 3u);
  EXPECT_FALSE(r.found_up_to_two);
  EXPECT_EQ(r.words_up_to_two, 42u);
  EXPECT_EQ(r.witness.size(), 3u);
  EXPECT_TRUE(r.witness_realizes_p3);
  EXPECT_NE(render_optimality(r).find("no length-2 decomposition"), std::string::npos);
}

TEST(RandomProbs, Normalised) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto p = random_probs(s);
    double sum = 0.0;
    for (double x : p) {
      EXPECT_GE(x, 0.0);
      sum += x;
    }
    EXPECT_NEAR(sum, 1.0, 1e-15);
  }
}

}  // namespace
}  // namespace fcqec
