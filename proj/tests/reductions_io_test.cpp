#include "support.hpp"
#include "wcr/random_instances.hpp"
#include "wcr/reductions_io.hpp"

namespace wcr::io {
namespace {

TEST(FormulaIo, RoundTrip) {
  random::Rng rng(79);
  for (int trial = 0; trial < 20; ++trial) {
    sat::Formula f = random::max2sat_formula(rng, 4);
    f.target = 3;
    const sat::Formula g = read_formula(dump(to_json(f)));
    EXPECT_EQ(dump(to_json(g)), dump(to_json(f)));
    const sat::Formula h = random::sat22_formula(rng, 3);
    EXPECT_EQ(dump(to_json(read_formula(dump(to_json(h))))), dump(to_json(h)));
  }
}

TEST(FormulaIo, RejectsWrongDialect) {
  EXPECT_EQ(test::error_kind([] {
              read_formula(R"({"dialect":"3sat22","variables":1,"clauses":[[1,1,1]]})");
            }),
            ErrorKind::dialect);
  EXPECT_EQ(test::error_kind([] { read_formula(R"({"dialect":"cnf","variables":1,"clauses":[]})"); }),
            ErrorKind::parse);
}

TEST(AssignmentIo, SignedLiterals) {
  const sat::Assignment a{true, false, true};
  EXPECT_EQ(assignment_json(a), Json::parse("[1,-2,3]"));
  const Json j = Json::parse("[1,-2,3]");
  EXPECT_EQ(assignment_from(JsonReader(j), 3), a);
  const Json bad = Json::parse("[1,2]");
  EXPECT_EQ(test::error_kind([&] { assignment_from(JsonReader(bad), 3); }), ErrorKind::parse);
}

TEST(MetaIo, EveryConstructionRebuilds) {
  random::Rng rng(83);
  sat::Formula f2 = random::max2sat_formula(rng, 2);
  f2.target = 2;
  const auto mn = reductions::gen_minnum(f2);
  const Json mn_meta = meta_json(mn.meta);
  EXPECT_EQ(construction_of(JsonReader(mn_meta)), "minnum");
  EXPECT_EQ(dump(to_json(minnum_reduction_from(JsonReader(mn_meta)).config)), dump(to_json(mn.config)));

  sat::Formula f3 = random::sat22_formula(rng, 3);
  const auto vh = reductions::gen_vh(f3);
  const Json vh_meta = meta_json(vh.meta);
  EXPECT_EQ(construction_of(JsonReader(vh_meta)), "vh");
  EXPECT_EQ(dump(to_json(vh_reduction_from(JsonReader(vh_meta)).instance)), dump(to_json(vh.instance)));

  const auto mm = reductions::gen_minmax(vh.instance);
  const Json mm_meta = meta_json(mm.meta);
  EXPECT_EQ(construction_of(JsonReader(mm_meta)), "minmax");
  EXPECT_EQ(dump(to_json(minmax_reduction_from(JsonReader(mm_meta)).config)), dump(to_json(mm.config)));
}

TEST(MetaIo, TamperedMetaIsRejected) {
  random::Rng rng(89);
  const auto vh = reductions::gen_vh(random::sat22_formula(rng, 3));
  Json meta = meta_json(vh.meta);
  ASSERT_TRUE(meta.contains("clauses"));
  meta["clauses"][0]["v_col"] = 1;
  EXPECT_EQ(test::error_kind([&] { vh_reduction_from(JsonReader(meta)); }), ErrorKind::not_gadget_instance);
}

}  // namespace
}  // namespace wcr::io
