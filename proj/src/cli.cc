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

#include "lbow/adversarial.h"
#include "lbow/bench.h"
#include "lbow/error.h"
#include "lbow/io.h"
#include "lbow/train.h"
#include "lbow/transforms.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>

namespace lbow {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream openInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, path + " cannot be opened for reading");
  }
  return in;
}

std::string formatDouble(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

// Encodes every line of a prediction-mode file against the model's
// vocabulary. Label tokens are ignored.
std::vector<Document> readDocuments(
    const std::string& path,
    const LBoWModel& model,
    bool lowercase) {
  auto in = openInput(path);
  const Vocabulary vocab = model.vocabulary();
  const LabelSet noLabels;
  std::vector<Document> docs;
  std::string line;
  std::size_t lineNo = 0;
  while (std::getline(in, line)) {
    lineNo++;
    try {
      const LabeledLine parsed = parseLabeledLine(line, lowercase);
      docs.push_back(encodeDocument(parsed.tokens, vocab, std::nullopt, noLabels));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  return docs;
}

// Run-length form: "w0*3 w2*1" for [w0 w0 w0 w2].
std::string joinWords(const Document& doc, const LBoWModel& model) {
  std::string s;
  for (std::size_t i = 0; i < doc.words.size();) {
    std::size_t j = i;
    while (j < doc.words.size() && doc.words[j] == doc.words[i]) {
      j++;
    }
    if (!s.empty()) {
      s += ' ';
    }
    s += model.words()[doc.words[i]] + "*" + std::to_string(j - i);
    i = j;
  }
  return s;
}

void printReport(
    std::ostream& out,
    const EquivalenceReport& r,
    double tol) {
  out << "documents " << r.numDocuments << '\n';
  out << "max-abs-prob-diff " << formatDouble("%.6e", r.maxAbsProbDiff) << '\n';
  out << "label-disagreements " << r.labelDisagreements << '\n';
  out << "plain-equivalent " << (r.plain ? "yes" : "no") << '\n';
  out << "strict-equivalent " << (r.strict ? "yes" : "no") << " tol "
      << formatDouble("%.3e", tol) << '\n';
}

} // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear bag-of-words text classifier toolkit", "lbowkit"};
  app.require_subcommand(1);

  std::function<int()> action;

  // train
  std::string trainInput, trainOutput;
  TrainConfig cfg;
  auto* trainCmd = app.add_subcommand("train", "Train a model on labeled text");
  trainCmd->add_option("--input", trainInput, "Labeled training file")->required();
  trainCmd->add_option("--output", trainOutput, "Model output path")->required();
  trainCmd->add_option("--dim", cfg.dim, "Word-vector dimension (with --hidden)")
      ->check(CLI::PositiveNumber);
  trainCmd->add_option("--epochs", cfg.epochs, "Passes over the data")
      ->check(CLI::PositiveNumber);
  trainCmd->add_option("--lr", cfg.learningRate, "Initial learning rate")
      ->check(CLI::PositiveNumber);
  trainCmd->add_option("--min-count", cfg.minCount, "Minimal word count")
      ->check(CLI::PositiveNumber);
  trainCmd->add_option("--seed", cfg.seed, "Random seed");
  trainCmd->add_flag("--hidden", cfg.useHidden, "Train with a hidden layer");
  trainCmd->add_flag("--lowercase", cfg.lowercase, "Lowercase tokens");
  trainCmd->callback([&] {
    action = [&] {
      auto in = openInput(trainInput);
      const Dataset ds = readDataset(in, cfg.minCount, cfg.lowercase);
      const TrainResult result = train(ds, cfg);
      for (std::size_t e = 0; e < result.epochLoss.size(); e++) {
        out << "epoch " << (e + 1) << " loss "
            << formatDouble("%.6f", result.epochLoss[e]) << '\n';
      }
      out << "labels " << ds.labels.size() << " words " << ds.vocabulary.size()
          << " documents " << ds.documents.size() << " dim "
          << result.model.dim() << " hidden " << (result.model.hasHidden() ? 1 : 0)
          << '\n';
      out << "train-accuracy " << formatDouble("%.4f", result.trainAccuracy) << '\n';
      saveModel(result.model, trainOutput);
      return kExitOk;
    };
  });

  // predict
  std::string predModel, predInput;
  bool probs = false;
  bool predLower = false;
  auto* predictCmd = app.add_subcommand("predict", "Predict one label per line");
  predictCmd->add_option("--model", predModel, "Model file")->required();
  predictCmd->add_option("--input", predInput, "Text file, one document per line")
      ->required();
  predictCmd->add_flag("--probs", probs, "Append the class distribution");
  predictCmd->add_flag("--lowercase", predLower, "Lowercase tokens");
  predictCmd->callback([&] {
    action = [&] {
      const LBoWModel model = loadModel(predModel);
      const Vocabulary vocab = model.vocabulary();
      const LabelSet noLabels;
      auto in = openInput(predInput);
      std::string line;
      std::size_t lineNo = 0;
      bool failed = false;
      while (std::getline(in, line)) {
        lineNo++;
        try {
          const LabeledLine parsed = parseLabeledLine(line, predLower);
          const Document doc =
              encodeDocument(parsed.tokens, vocab, std::nullopt, noLabels);
          out << model.labels()[predict(model, doc)];
          if (probs) {
            const Vector p = probabilities(doc, model);
            for (std::size_t j = 0; j < p.size(); j++) {
              out << ' ' << model.labels()[j] << ':' << formatDouble("%.9f", p[j]);
            }
          }
          out << '\n';
        } catch (const Error& e) {
          failed = true;
          out << "!error " << errorName(e.code()) << '\n';
          err << "error: " << errorName(e.code()) << ": line " << lineNo << ": "
              << e.what() << '\n';
        }
      }
      return failed ? kExitDomainError : kExitOk;
    };
  });

  // fold / reduce / compress
  std::string xfModel, xfOutput;
  auto addTransform = [&](const char* name, const char* help,
                          LBoWModel (*fn)(const LBoWModel&)) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--model", xfModel, "Input model")->required();
    cmd->add_option("--output", xfOutput, "Output model")->required();
    cmd->callback([&, fn] {
      action = [&, fn] {
        const LBoWModel result = fn(loadModel(xfModel));
        saveModel(result, xfOutput);
        out << "labels " << result.numLabels() << " words " << result.vocabSize()
            << " dim " << result.dim() << " hidden "
            << (result.hasHidden() ? 1 : 0) << " softmax "
            << (result.variant() == SoftmaxVariant::Reduced ? "reduced" : "full")
            << '\n';
        return kExitOk;
      };
    });
  };
  addTransform("fold", "Fold the hidden layer into the word vectors", &foldHiddenLayer);
  addTransform("reduce", "Shift-reduce word vectors to m-1 dimensions", &shiftReduce);
  addTransform("compress", "Fold (if needed) then shift-reduce", &compress);

  // verify
  std::string modelA, modelB, verifyInput;
  double tol = kDefaultTolerance;
  bool verifyLower = false;
  auto* verifyCmd = app.add_subcommand("verify", "Compare two models document by document");
  verifyCmd->add_option("--model-a", modelA, "First model")->required();
  verifyCmd->add_option("--model-b", modelB, "Second model")->required();
  verifyCmd->add_option("--input", verifyInput, "Text file")->required();
  verifyCmd->add_option("--tol", tol, "Probability tolerance")
      ->check(CLI::NonNegativeNumber);
  verifyCmd->add_flag("--lowercase", verifyLower, "Lowercase tokens");
  verifyCmd->callback([&] {
    action = [&] {
      const LBoWModel a = loadModel(modelA);
      const LBoWModel b = loadModel(modelB);
      if (a.words() != b.words()) {
        throw Error(
            ErrorCode::DimensionMismatch, "models have different vocabularies");
      }
      const auto docs = readDocuments(verifyInput, a, verifyLower);
      const EquivalenceReport r = verifyEquivalence(a, b, docs, tol);
      printReport(out, r, tol);
      return r.strict ? kExitOk : kExitDomainError;
    };
  });

  // adversarial
  int32_t advM = 3, advQ = 2;
  uint64_t advSeed = 0;
  bool advReduced = false;
  auto* advCmd = app.add_subcommand(
      "adversarial", "Force an error from an under-dimensioned random model");
  advCmd->add_option("--m", advM, "Number of classes (= words)")
      ->required()
      ->check(CLI::Range(2, 4096));
  advCmd->add_option("--dim", advQ, "Word-vector dimension, below m")
      ->required()
      ->check(CLI::PositiveNumber);
  advCmd->add_option("--seed", advSeed, "Random seed");
  advCmd->add_flag(
      "--reduced", advReduced, "Reduced-softmax model without hidden layer");
  advCmd->callback([&] {
    if (advQ >= advM) {
      throw UsageError("--dim must be smaller than --m");
    }
    if (advReduced && advQ != advM - 1) {
      throw UsageError("--reduced needs --dim equal to m - 1");
    }
    action = [&] {
      const LBoWModel model =
          randomUnderDimensionedModel(advM, advQ, advSeed, advReduced);
      out << "model m " << advM << " dim " << advQ << " hidden "
          << (model.hasHidden() ? 1 : 0) << " seed " << advSeed << '\n';
      const AdversarialOutcome o = runAdversarial(model);
      out << "certificate";
      for (const auto& c : o.certificate.coefficients) {
        out << ' ' << c.str();
      }
      out << '\n';
      out << "sign-case " << signCaseName(o.certificate.signCase) << " nonzero "
          << o.certificate.nonzeroCount << '\n';
      const Counterexample& cx = o.counterexample;
      out << "repetitions " << cx.repetitions << '\n';
      out << "left " << joinWords(cx.left, model) << '\n';
      out << "right " << joinWords(cx.right, model) << '\n';
      out << "shared-direction";
      for (const auto& v : cx.sharedDirection) {
        out << ' ' << toString(v);
      }
      out << '\n';
      out << "true-labels " << model.labels()[o.report.trueLabelLeft] << ' '
          << model.labels()[o.report.trueLabelRight] << '\n';
      out << "predicted " << model.labels()[o.report.predictedLeft] << ' '
          << model.labels()[o.report.predictedRight] << '\n';
      out << "forced-error " << (o.report.forcedError() ? "yes" : "no") << '\n';
      return o.report.forcedError() ? kExitOk : kExitDomainError;
    };
  });

  // bench
  std::string benchModel, benchInput;
  int64_t repeat = 1;
  bool benchLower = false;
  auto* benchCmd = app.add_subcommand("bench", "Time the model and its compressed forms");
  benchCmd->add_option("--model", benchModel, "Model file")->required();
  benchCmd->add_option("--input", benchInput, "Text file")->required();
  benchCmd->add_option("--repeat", repeat, "Passes over the input")
      ->check(CLI::PositiveNumber);
  benchCmd->add_flag("--lowercase", benchLower, "Lowercase tokens");
  benchCmd->callback([&] {
    action = [&] {
      const LBoWModel model = loadModel(benchModel);
      const auto docs = readDocuments(benchInput, model, benchLower);
      const BenchReport report = runBench(model, docs, repeat);
      printBenchReport(out, report);
      return report.countsMatch() ? kExitOk : kExitDomainError;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << errorName(e.code()) << ": " << e.what() << '\n';
    return kExitDomainError;
  }
}

} // namespace lbow
