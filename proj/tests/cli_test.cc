/*
 * Copyright 2026 The lbowkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "lbow/cli.h"

#include "lbow/io.h"
#include "lbow/model.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace lbow {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = runCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string readFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string golden(const std::string& name) {
  const std::string text = readFile(fs::path(LBOW_TEST_DATA_DIR) / name);
  EXPECT_FALSE(text.empty()) << "missing golden file " << name;
  return text;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
        ("lbowkit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    std::ofstream train(path("train.txt"));
    const char* topics[3][3] = {
        {"goal", "match", "team"},
        {"vote", "party", "law"},
        {"chip", "code", "data"}};
    const char* names[3] = {"sport", "politics", "tech"};
    for (int rep = 0; rep < 10; rep++) {
      for (int c = 0; c < 3; c++) {
        train << "__label__" << names[c] << ' ' << topics[c][rep % 3] << " the "
              << topics[c][(rep + 1) % 3] << " a\n";
      }
    }
    std::ofstream text(path("text.txt"));
    text << "the goal team\nvote law\ncode data chip the\n";
  }
  void TearDown() override {
    fs::remove_all(dir_);
  }
  std::string path(const std::string& name) const {
    return (dir_ / name).string();
  }
  CliRun trainModel(std::vector<std::string> extra = {}) {
    std::vector<std::string> args = {
        "train", "--input", path("train.txt"), "--output", path("model.bin"),
        "--epochs", "20", "--lr", "0.5", "--seed", "3"};
    args.insert(args.end(), extra.begin(), extra.end());
    return run(args);
  }

  fs::path dir_;
};

TEST_F(CliTest, TrainPrintsProgressAndSavesModel) {
  const CliRun r = trainModel({"--hidden", "--dim", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("epoch 1 loss "), std::string::npos);
  EXPECT_NE(r.out.find("epoch 20 loss "), std::string::npos);
  EXPECT_NE(r.out.find("labels 3 "), std::string::npos);
  EXPECT_NE(r.out.find("train-accuracy 1.0000"), std::string::npos);
  const LBoWModel model = loadModel(path("model.bin"));
  EXPECT_TRUE(model.hasHidden());
  EXPECT_EQ(model.dim(), 4u);
  EXPECT_EQ(model.labels(), (std::vector<std::string>{"sport", "politics", "tech"}));
}

TEST_F(CliTest, PredictLabelsAndProbabilities) {
  ASSERT_EQ(trainModel().code, kExitOk);
  CliRun r = run({"predict", "--model", path("model.bin"), "--input", path("text.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "sport\npolitics\ntech\n");

  r = run({"predict", "--model", path("model.bin"), "--input", path("text.txt"), "--probs"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line)) {
    EXPECT_NE(line.find(" sport:0."), std::string::npos) << line;
    EXPECT_NE(line.find(" tech:0."), std::string::npos) << line;
  }
}

TEST_F(CliTest, PredictReportsBadLines) {
  ASSERT_EQ(trainModel().code, kExitOk);
  std::ofstream(path("bad.txt")) << "goal\n\nunknownword\nlaw\n";
  const CliRun r = run({"predict", "--model", path("model.bin"), "--input", path("bad.txt")});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_EQ(r.out, "sport\n!error EmptyDocument\n!error EmptyDocument\npolitics\n");
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, FoldCompressVerify) {
  ASSERT_EQ(trainModel({"--hidden", "--dim", "6"}).code, kExitOk);
  CliRun r = run({"fold", "--model", path("model.bin"), "--output", path("folded.bin")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "labels 3 words 11 dim 3 hidden 0 softmax full\n");
  r = run({"compress", "--model", path("model.bin"), "--output", path("small.bin")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "labels 3 words 11 dim 2 hidden 0 softmax reduced\n");
  r = run({"reduce", "--model", path("folded.bin"), "--output", path("reduced.bin")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(readFile(path("reduced.bin")), readFile(path("small.bin")));

  for (const char* other : {"folded.bin", "small.bin"}) {
    r = run({"verify", "--model-a", path("model.bin"), "--model-b", path(other),
             "--input", path("text.txt")});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_NE(r.out.find("strict-equivalent yes"), std::string::npos);
  }

  const CliRun before = run({"predict", "--model", path("model.bin"), "--input", path("text.txt")});
  const CliRun after = run({"predict", "--model", path("small.bin"), "--input", path("text.txt")});
  EXPECT_EQ(before.out, after.out);

  r = run({"reduce", "--model", path("model.bin"), "--output", path("x.bin")});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_NE(r.err.find("HasHiddenLayer"), std::string::npos);
}

TEST_F(CliTest, VerifySelfMatchesGolden) {
  ASSERT_EQ(trainModel().code, kExitOk);
  const CliRun r = run({"verify", "--model-a", path("model.bin"), "--model-b", path("model.bin"),
                     "--input", path("text.txt"), "--tol", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, golden("verify_self.txt"));
}

TEST_F(CliTest, VerifyDetectsDifferentModels) {
  ASSERT_EQ(trainModel().code, kExitOk);
  fs::copy_file(path("model.bin"), path("a.bin"));
  ASSERT_EQ(
      run({"train", "--input", path("train.txt"), "--output", path("model.bin"),
           "--epochs", "1", "--seed", "4"})
          .code,
      kExitOk);
  const CliRun r = run({"verify", "--model-a", path("a.bin"), "--model-b", path("model.bin"),
                     "--input", path("text.txt")});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_NE(r.out.find("strict-equivalent no"), std::string::npos);
}

TEST_F(CliTest, AdversarialMatchesGolden) {
  const CliRun r = run({"adversarial", "--m", "4", "--dim", "3", "--seed", "1"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, golden("adversarial_m4_dim3_seed1.txt"));
  const CliRun reduced = run({"adversarial", "--m", "3", "--dim", "2", "--seed", "2", "--reduced"});
  EXPECT_EQ(reduced.code, kExitOk);
  EXPECT_EQ(reduced.out, golden("adversarial_m3_dim2_seed2_reduced.txt"));
}

TEST_F(CliTest, BenchReportsMatchingCounts) {
  ASSERT_EQ(trainModel({"--hidden", "--dim", "8"}).code, kExitOk);
  const CliRun r = run({"bench", "--model", path("model.bin"), "--input", path("text.txt"),
                     "--repeat", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("documents 3 occurrences 9 repeat 5"), std::string::npos);
  // Original: 9*8 + 3*3*8; compressed: 9*2.
  EXPECT_NE(r.out.find("multiplies 144 expected 144"), std::string::npos);
  EXPECT_NE(r.out.find("multiplies 18 expected 18"), std::string::npos);
  EXPECT_NE(r.out.find("counts-match yes"), std::string::npos);
}

TEST_F(CliTest, UsageAndDomainErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"nosuchcommand"}).code, kExitUsage);
  EXPECT_EQ(run({"adversarial", "--m", "4", "--dim", "4"}).code, kExitUsage);
  EXPECT_EQ(run({"train", "--input", path("train.txt")}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);

  const CliRun missing = run({"predict", "--model", path("none.bin"), "--input", path("text.txt")});
  EXPECT_EQ(missing.code, kExitDomainError);
  EXPECT_NE(missing.err.find("IoError"), std::string::npos);

  std::ofstream(path("junk.bin")) << "not a model at all";
  const CliRun junk = run({"predict", "--model", path("junk.bin"), "--input", path("text.txt")});
  EXPECT_EQ(junk.code, kExitDomainError);
  EXPECT_NE(junk.err.find("BadMagic"), std::string::npos);

  const CliRun epochs = trainModel({"--epochs", "0"});
  EXPECT_NE(epochs.code, kExitOk);
}

} // namespace
} // namespace lbow
