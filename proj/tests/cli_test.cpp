#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("wcr-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Result run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " + WCR_BINARY + std::string(" ") + args + " >" + path("stdout") +
                            " 2>" + path("stderr");
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(path("stdout")), slurp(path("stderr"))};
  }

  fs::path dir_;
};

const char* kTiny =
    R"({"mode":"integer","metric":"manhattan","rect":{"width":3,"height":3},"sensors":[)"
    R"({"id":0,"x":1,"y":1,"range":"1/2"},{"id":1,"x":2,"y":1,"range":"1/2"},)"
    R"({"id":2,"x":1,"y":2,"range":"1/2"}]})";

const char* kUnsat = R"({"dialect":"3sat22","variables":3,"clauses":[[-3,-2,-2],[-3,2,2],[-1,-1,3],[1,1,3]]})";
const char* kSat = R"({"dialect":"3sat22","variables":3,"clauses":[[1,2,3],[-1,-2,-3],[1,-2,3],[-1,2,-3]]})";

TEST_F(Cli, SolveMinNumOnTheLShape) {
  const auto inst = file("tiny.json", kTiny);
  const Result r = run("solve minnum " + inst.string() + " -o " + path("sol.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["moved"], 1);
  EXPECT_TRUE(r.err.empty());
  const Result v = run("verify " + inst.string() + " --solution " + path("sol.json"));
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(Json::parse(v.out)["blocking"], true);
  EXPECT_EQ(Json::parse(v.out)["costs"]["moved"], 1);
}

TEST_F(Cli, EmittedSolutionsReverifyWithTheSameObjective) {
  const auto inst = file("tiny.json", kTiny);
  for (const std::string problem : {"minnum", "minsum", "minmax"}) {
    const Result s = run("solve " + problem + " " + inst.string() + " -o " + path(problem + ".json"));
    ASSERT_EQ(s.code, 0) << problem << s.err;
    const Json solved = Json::parse(s.out);
    const Result v = run("verify " + inst.string() + " --solution " + path(problem + ".json"));
    ASSERT_EQ(v.code, 0) << problem;
    const Json costs = Json::parse(v.out)["costs"];
    if (problem == "minnum") EXPECT_EQ(costs["moved"], solved["moved"]);
    if (problem == "minsum") EXPECT_EQ(costs["sum"], solved["cost"]);
    if (problem == "minmax") EXPECT_EQ(costs["max"], solved["max_move"]);
  }
}

TEST_F(Cli, UnsatisfiableGadgetIsInfeasible) {
  const auto f = file("f.json", kUnsat);
  ASSERT_EQ(run("gen vh --formula " + f.string() + " -o " + path("vh.json")).code, 0);
  const Result r = run("decide vh " + path("vh.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(Json::parse(r.out)["feasible"], false);
  EXPECT_EQ(run("oracle sat " + f.string()).code, 1);
}

TEST_F(Cli, GadgetPipeline) {
  const auto f = file("f.json", kSat);
  ASSERT_EQ(run("gen vh --formula " + f.string() + " -o " + path("vh.json") + " --meta " + path("vh.meta")).code, 0);
  const Result sat = run("oracle sat " + f.string());
  ASSERT_EQ(sat.code, 0);
  file("a.json", sat.out);
  ASSERT_EQ(run("embed vh --meta " + path("vh.meta") + " --assignment " + path("a.json") + " -o " +
                path("vhsol.json"))
                .code,
            0);
  EXPECT_EQ(run("verify " + path("vh.json") + " --solution " + path("vhsol.json")).code, 0);
  const Result back = run("extract vh --meta " + path("vh.meta") + " --solution " + path("vhsol.json"));
  ASSERT_EQ(back.code, 0);
  EXPECT_EQ(Json::parse(back.out)["satisfied"], 4);
  ASSERT_EQ(run("integerize --meta " + path("vh.meta") + " --solution " + path("vhsol.json")).code, 0);

  ASSERT_EQ(run("gen minmax --vh " + path("vh.json") + " -o " + path("mm.json") + " --meta " + path("mm.meta")).code, 0);
  ASSERT_EQ(run("embed minmax --meta " + path("mm.meta") + " --solution " + path("vhsol.json") + " -o " +
                path("mmsol.json"))
                .code,
            0);
  const Result full = run("verify " + path("mm.json") + " --solution " + path("mmsol.json"));
  EXPECT_EQ(full.code, 0);
  EXPECT_EQ(Json::parse(full.out)["costs"]["max"], "1");
  ASSERT_EQ(run("extract minmax --meta " + path("mm.meta") + " --solution " + path("mmsol.json") + " -o " +
                path("back.json"))
                .code,
            0);
  EXPECT_EQ(slurp(path("back.json")), slurp(path("vhsol.json")));

  EXPECT_EQ(run("extract minnum --meta " + path("vh.meta") + " --solution " + path("vhsol.json")).code, 2);
}

TEST_F(Cli, MinNumGadgetPipeline) {
  const auto f = file("f.json", R"({"dialect":"max2sat-3occ","variables":2,"clauses":[[1,2],[-1,2],[1,-2]],"t":3})");
  ASSERT_EQ(run("gen minnum --formula " + f.string() + " -o " + path("mn.json") + " --meta " + path("mn.meta")).code, 0);
  file("a.json", "[1,2]");
  const Result e = run("embed minnum --meta " + path("mn.meta") + " --assignment " + path("a.json") + " -o " + path("s.json"));
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(Json::parse(e.out)["moved"], 3);
  EXPECT_EQ(run("verify " + path("mn.json") + " --solution " + path("s.json")).code, 0);
  file("bad.json", "[-1,-2]");
  EXPECT_EQ(run("embed minnum --meta " + path("mn.meta") + " --assignment " + path("bad.json")).code, 2);
}

TEST_F(Cli, ExitCodes) {
  const auto bad = file("bad.json", R"({"mode":"integer","rect":)");
  Result r = run("verify " + bad.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("malformed JSON"), std::string::npos);

  const auto field = file("field.json",
                          R"({"mode":"integer","rect":{"width":2,"height":2},"sensors":[{"id":0,"x":1,"y":"q"}]})");
  r = run("verify " + field.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("$.sensors[0].y"), std::string::npos) << r.err;

  EXPECT_EQ(run("verify " + path("missing.json")).code, 2);
  EXPECT_EQ(run("solve maxflow " + path("missing.json")).code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);

  const auto f = file("f.json", kSat);
  ASSERT_EQ(run("gen vh --formula " + f.string() + " -o " + path("vh.json")).code, 0);
  EXPECT_EQ(run("decide vh " + path("vh.json") + " --budget 3").code, 3);
  EXPECT_EQ(run("decide vh " + path("vh.json"), "WCR_NODE_BUDGET=3").code, 3);
  EXPECT_EQ(run("decide vh " + path("vh.json"), "WCR_NODE_BUDGET=lots").code, 2);

  const auto blocked = file("short.json", R"({"mode":"integer","rect":{"width":3,"height":3},"sensors":[{"id":0,"x":1,"y":1}]})");
  EXPECT_EQ(run("solve minnum " + blocked.string()).code, 1);
  EXPECT_EQ(run("verify " + blocked.string()).code, 1);
}

TEST_F(Cli, MetricOverrideIsRecorded) {
  const auto inst = file("tiny.json", kTiny);
  const Result r = run("--metric euclidean solve minmax " + inst.string());
  ASSERT_EQ(r.code, 0);
  const Json out = Json::parse(r.out);
  EXPECT_EQ(out["metric_override"], "euclidean");
  EXPECT_EQ(out["max_move"], "sqrt(2)");
  EXPECT_EQ(Json::parse(run("solve minmax " + inst.string()).out)["max_move"], "2");
}

TEST_F(Cli, OutputIsByteIdentical) {
  const auto inst = file("tiny.json", kTiny);
  for (const std::string& args : std::vector<std::string>{"diff minnum --seed 7 --count 20", "diff vh --seed 3 --count 20 --max-grid 4",
                                 "diff minsum --count 20", "solve minmax " + inst.string(),
                                 "oracle minmax " + inst.string()}) {
    const Result a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << args << a.err;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
  EXPECT_NE(run("diff minnum --seed 7 --count 20").out, run("diff minnum --seed 8 --count 20").out);
}

TEST_F(Cli, DiffReportsOneLinePerInstance) {
  const Result r = run("diff minmax --seed 1 --count 15 --max-grid 4 --max-sensors 6");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    EXPECT_EQ(j["agree"], true);
    EXPECT_EQ(j["index"], n);
    EXPECT_EQ(j["digest"].get<std::string>().size(), 16u);
    ++n;
  }
  EXPECT_EQ(n, 15);
}

}  // namespace
