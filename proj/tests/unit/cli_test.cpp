// Copyright 2026 The fpt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(FPTSIM_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(::testing::TempDir()) /
           ("fptsim_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(Cli, SimulateWritesSamplesAndManifest) {
  const auto r = run("simulate --algo algo1 --boundary sqrt:alpha=1 --epsilon 9.765625e-4 "
                     "--trials 10000 --seed 7 --out " + path("s.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string csv = slurp(path("s.csv"));
  EXPECT_EQ(csv.rfind("trial,tau,steps,truncated,exit_reason\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 10001);
  const std::string manifest = slurp(path("s.csv") + ".manifest.json");
  EXPECT_NE(manifest.find("\"master_seed\": \"7\""), std::string::npos);
  EXPECT_NE(manifest.find("\"start_time\""), std::string::npos);
  EXPECT_NE(r.out.find("mean_tau"), std::string::npos);

  const auto again = run("simulate --algo algo1 --boundary sqrt:alpha=1 --epsilon 9.765625e-4 "
                         "--trials 10000 --seed 7 --workers 3 --out " + path("t.csv"));
  ASSERT_EQ(again.code, 0);
  EXPECT_EQ(slurp(path("t.csv")), csv);
}

TEST_F(Cli, HypothesisGateExitsThreeWithWitness) {
  const auto r = run("simulate --algo algo1 --boundary cosine:alpha=3.5,beta=3,omega=1.5707963 "
                     "--trials 10");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("H2"), std::string::npos);
  EXPECT_NE(r.out.find("t = "), std::string::npos);
  const auto forced = run("simulate --algo algo1 --boundary cosine:alpha=3.5,beta=3,omega=1.5707963 "
                          "--trials 10 --force --out " + path("f.csv"));
  EXPECT_EQ(forced.code, 0) << forced.out;
  EXPECT_NE(forced.out.find("WARNING"), std::string::npos);
}

TEST_F(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run("simulate --boundary sqrt:alpha=x").code, 2);
  EXPECT_EQ(run("simulate --trials 0").code, 2);
  EXPECT_EQ(run("simulate --preset nope").code, 2);
  EXPECT_EQ(run("simulate --no-such-flag").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("simulate --algo ou --boundary sqrt:alpha=1").code, 2);
}

TEST_F(Cli, OuFigurePresetRunsEndToEnd) {
  const auto r = run("simulate --algo ou --preset ou-figure --epsilon 2^-20 --trials 200 --out " +
                     path("ou.csv") + " --cdf-out " + path("ou_cdf.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(slurp(path("ou_cdf.csv")).rfind("t,cdf,stderr\n", 0), 0u);
}

TEST_F(Cli, PrecedenceFlagsOverConfigOverPreset) {
  std::ofstream(path("exp.cfg")) << "trials = 30\nseed = 5\n";
  setenv("FPT_SEED", "99", 1);
  const auto r = run("simulate --preset sqrt-1 --config " + path("exp.cfg") +
                     " --seed 6 --out " + path("p.csv"));
  unsetenv("FPT_SEED");
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string manifest = slurp(path("p.csv") + ".manifest.json");
  EXPECT_NE(manifest.find("\"trials\": \"30\""), std::string::npos);
  EXPECT_NE(manifest.find("\"seed\": \"6\""), std::string::npos);

  setenv("FPT_SEED", "99", 1);
  const auto e = run("simulate --preset sqrt-1 --trials 5 --out " + path("q.csv"));
  unsetenv("FPT_SEED");
  ASSERT_EQ(e.code, 0);
  EXPECT_NE(slurp(path("q.csv") + ".manifest.json").find("\"seed\": \"99\""), std::string::npos);
}

TEST_F(Cli, SweepRowsMatchSchedule) {
  const auto r = run("sweep --preset sqrt-1 --trials 300 --out " + path("sw.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string csv = slurp(path("sw.csv"));
  EXPECT_EQ(csv.rfind("n,epsilon,mean_steps,stderr,n_trials\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);

  const auto k = run("sweep --preset cosine-K20 --trials 100 --horizons 20,100 --out " +
                     path("k.csv"));
  ASSERT_EQ(k.code, 0) << k.out;
  EXPECT_EQ(slurp(path("k.csv")).rfind("K,epsilon,", 0), 0u);

  const auto psi = run("sweep --preset psi-curve --draws 500 --out " + path("psi.csv"));
  ASSERT_EQ(psi.code, 0) << psi.out;
  EXPECT_EQ(slurp(path("psi.csv")).rfind("alpha,psi,stderr,n_draws\n", 0), 0u);
}

TEST_F(Cli, CheckReportsJsonAndExitStatus) {
  const auto ok = run("check --preset sqrt-1 --trials 2000 --grid-points 32 --out " +
                      path("c.json"));
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(slurp(path("c.json")).find("\"all_pass\": true"), std::string::npos);
  const auto bad = run("check --preset cosine-K20 --algo algo1 --out " + path("d.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(slurp(path("d.json")).find("\"all_pass\": false"), std::string::npos);
}

TEST_F(Cli, BenchSchema) {
  const auto r = run("bench --preset euler-bias --trials 200 --ref-trials 200 "
                     "--ref-epsilon 2^-10 --dts 0.2,0.1 --out " + path("b.csv"));
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string csv = slurp(path("b.csv"));
  EXPECT_EQ(csv.rfind("variant,dt,mean_tau,bias,stderr,slope\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
}

TEST_F(Cli, ReplayIsByteIdenticalAcrossWorkerCounts) {
  ASSERT_EQ(run("simulate --preset cosine-K20 --trials 3000 --out " + path("a.csv") +
                " --cdf-out " + path("a_cdf.csv")).code, 0);
  for (const char* workers : {"1", "8"}) {
    const std::string out_dir = path(std::string("replay") + workers);
    const auto r = run("replay " + path("a.csv") + ".manifest.json --out-dir " + out_dir +
                       " --workers " + workers);
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(slurp(fs::path(out_dir) / "a.csv"), slurp(path("a.csv")));
    EXPECT_EQ(slurp(fs::path(out_dir) / "a_cdf.csv"), slurp(path("a_cdf.csv")));
  }
  EXPECT_EQ(run("replay " + path("missing.json")).code, 1);
}

TEST_F(Cli, PresetsListed) {
  const auto r = run("presets");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("euler-bias"), std::string::npos);
}

}  // namespace
