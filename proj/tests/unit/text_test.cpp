#include <gtest/gtest.h>

#include "causax/corpus.hpp"
#include "causax/error.hpp"
#include "causax/record.hpp"
#include "causax/text.hpp"
#include "test_support.hpp"

namespace causax {
namespace {

using testing::names;

AxiomInstance make(std::string_view premise, Hypothesis h) {
  AxiomInstance inst{.graph = testing::dag(premise), .hypothesis = std::move(h)};
  inst.task = task_of(inst.hypothesis);
  inst.label = oracle_label(inst);
  inst.node_count = inst.graph.node_count();
  return inst;
}

TEST(SerializeText, Transitivity) {
  auto inst = make("X1 causes X2. X2 causes X3.", TransitivityQuery{NodeName("X1"), NodeName("X3")});
  EXPECT_EQ(serialize_text(inst), "X1 causes X2. X2 causes X3. Does X1 cause X3? Yes");
  auto single = make("X causes Y.", TransitivityQuery{NodeName("X"), NodeName("Y")});
  EXPECT_EQ(serialize_text(single), "X causes Y. Does X cause Y? Yes");
}

TEST(SerializeText, DsepWithAndWithoutConditioning) {
  auto empty = make("nL causes A. A causes xx. xx causes 5Cg.",
                    DsepQuery{NodeName("xx"), NodeName("nL"), {}});
  EXPECT_EQ(serialize_text(empty),
            "nL causes A. A causes xx. xx causes 5Cg. Are xx and nL d-separated? No");
  auto given = make("A causes B. B causes C.", DsepQuery{NodeName("A"), NodeName("C"), names({"B"})});
  EXPECT_EQ(hypothesis_text(given.hypothesis), "Are A and C d-separated given {B}?");
  EXPECT_EQ(hypothesis_text(DsepQuery{NodeName("A"), NodeName("C"), names({"t4d", "kT"})}),
            "Are A and C d-separated given {t4d, kT}?");
}

TEST(ParseText, AcceptsColonAndTrailingPeriod) {
  auto a = parse_text("Mhb causes iqB. iqB causes G. Does G cause iqB?: No");
  auto b = parse_text("Mhb causes iqB. iqB causes G. Does G cause iqB? No.");
  ASSERT_TRUE(a.label && b.label);
  EXPECT_EQ(*a.label, Label::No);
  EXPECT_EQ(*b.label, Label::No);
  EXPECT_EQ(a.hypothesis, b.hypothesis);
  EXPECT_FALSE(parse_text("X causes Y. Does X cause Y?").label.has_value());
}

TEST(ParseText, RejectsMalformedInput) {
  EXPECT_THROW(parse_text("X causes Y Does X cause Y? Yes"), ParseError);
  EXPECT_THROW(parse_text("X causes Y. Does X cause Y? Maybe"), ParseError);
  EXPECT_THROW(parse_text("X causes Y. Are X and Y d-separated given {X Y}? No"), ParseError);
  EXPECT_THROW(parse_text("X causes Y."), ParseError);
  EXPECT_THROW(parse_hypothesis("Does X cause Y"), ParseError);
}

TEST(ParseText, DsepConditioningSetOrderKept) {
  auto h = parse_hypothesis("Are zW and pij d-separated given {t4d, kT, Z4P}?");
  const auto& q = std::get<DsepQuery>(h);
  EXPECT_EQ(q.conditioning_set, names({"t4d", "kT", "Z4P"}));
}

TEST(InstanceFromText, OracleFillsMissingLabel) {
  auto inst = instance_from_text("X causes Y. Y causes Z. Does Z cause X?");
  EXPECT_EQ(inst.label, Label::No);
  EXPECT_EQ(inst.node_count, 3u);
  EXPECT_EQ(serialize_text(inst), "X causes Y. Y causes Z. Does Z cause X? No");
}

TEST(InstanceFromText, QueryOnlyNodeIsIsolated) {
  auto inst = instance_from_text("X causes Y. Does X cause Q?");
  EXPECT_EQ(inst.graph.node_count(), 3u);
  EXPECT_EQ(inst.label, Label::No);
}

TEST(Record, RoundTripsGeneratedCorpora) {
  CorpusSpec transitivity{.name = "rt",
                          .task = Task::Transitivity,
                          .components = {{PerturbationProfile{.flip_probability = 0.5}, 3000},
                                         {PerturbationProfile{.node_count = {7, 9},
                                                              .name_length = {8, 10},
                                                              .shuffle_edges = true},
                                          2000}},
                          .master_seed = 5};
  CorpusSpec dsep{.name = "rt-dsep",
                  .task = Task::Dsep,
                  .components = {{PerturbationProfile{.branching_factor = RealRange{0.6, 0.8}}, 3000},
                                 {PerturbationProfile{.node_count = {5, 8},
                                                      .branching_factor = RealRange{1.4, 1.4}},
                                  2000}},
                  .master_seed = 5};
  std::size_t checked = 0;
  for (const auto& spec : {transitivity, dsep}) {
    for (const auto& inst : build_corpus(spec)) {
      const auto line = serialize_record(inst);
      ASSERT_EQ(line.find('\n'), std::string::npos);
      ASSERT_EQ(parse_record(line), inst) << line;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 10000u);
}

TEST(Record, KeepsIsolatedNodesAndNodeOrder) {
  AxiomInstance inst = make("B causes A.", TransitivityQuery{NodeName("A"), NodeName("B")});
  inst.graph = CausalDag(names({"A", "B", "C"}), {{1, 0}});
  inst.node_count = 3;
  inst.id = "x";
  EXPECT_EQ(parse_record(serialize_record(inst)), inst);
}

TEST(Record, LabelFieldIsYesOrNo) {
  auto inst = make("X causes Y.", TransitivityQuery{NodeName("Y"), NodeName("X")});
  EXPECT_NE(serialize_record(inst).find("\"label\":\"No\""), std::string::npos);
}

TEST(Record, RejectsMalformedLines) {
  EXPECT_THROW(parse_record("not json"), ParseError);
  EXPECT_THROW(parse_record("{}"), ParseError);
  auto inst = make("X causes Y.", TransitivityQuery{NodeName("X"), NodeName("Y")});
  auto line = serialize_record(inst);
  auto bad_count = line;
  bad_count.replace(bad_count.find("\"node_count\":2"), 14, "\"node_count\":7");
  EXPECT_THROW(parse_record(bad_count), Error);
  auto bad_task = line;
  bad_task.replace(bad_task.find("transitivity"), 12, "dsep");
  EXPECT_THROW(parse_record(bad_task), Error);
}

}  // namespace
}  // namespace causax
