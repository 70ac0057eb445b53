//
// Project BRSKit - Copyright 2026 The BRSKit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <json.hpp>

#include "brs/cli/commands.h"
#include "brs/dataset/record.h"
#include "brs/encode/binary.h"
#include "brs/encode/vocab.h"
#include "test_support.h"

namespace brs {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const CliResult &r) { return nlohmann::json::parse(r.out); }

TEST(Cli, Canon) {
  const CliResult r = cli({"canon", "--smiles", "OCC"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json_of(r)["canonical"], "CCO");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"canon"}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"match", "--smarts", "[#6]", "--smiles", "C", "--intra", "--inter"}).code, kExitUsage);
  const CliResult bad = cli({"canon", "--smiles", "C1CC"});
  EXPECT_EQ(bad.code, kExitData);
  EXPECT_FALSE(bad.err.empty());
  EXPECT_EQ(cli({"apply", "--template", "99", "--reactants", "CC"}).code, kExitData);
}

TEST(Cli, Match) {
  const CliResult r = cli({"match", "--smarts", "[#8].[#7]", "--smiles", "CO,N", "--inter"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json_of(r)["count"], 1);
}

TEST(Cli, ApplyByIdAndSmarts) {
  const CliResult a = cli({"apply", "--template", "3", "--reactants", "OCCO"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(json_of(a)["products"], nlohmann::json::array({canonical_smiles("OC#CO")}));
  const CliResult b = cli({"apply", "--template", "[N,C;h2:1][N,C;h2:2]>>[N,C:1]#[N,C:2]", "--reactants", "OCCO"});
  EXPECT_EQ(json_of(b)["products"], json_of(a)["products"]);
  const CliResult d = cli({"apply", "--template", "11", "--reactants", "CCOC", "--keep-discarded"});
  ASSERT_EQ(d.code, kExitOk) << d.err;
  EXPECT_EQ(json_of(d)["discarded"]["CCO"], nlohmann::json::array({"C"}));
}

TEST(Cli, AugmentTsv) {
  const CliResult r = cli({"augment", "--template", "2", "--max", "5", "--seed", "3", "--tsv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  int n = 0;
  for (std::string line; std::getline(lines, line); ++n) {
    EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 2) << line;
    EXPECT_EQ(line.rfind("2\t", 0), 0u);
  }
  EXPECT_EQ(n, 5);
  EXPECT_EQ(cli({"augment", "--template", "2", "--max", "5", "--seed", "3", "--tsv"}).out, r.out);
  EXPECT_EQ(cli({"augment", "--template", "2", "--ops", "nope"}).code, kExitUsage);
}

TEST(Cli, Pipeline) {
  const std::filesystem::path dir = test::temp_dir("cli_pipeline");
  const nlohmann::json cfg = {
      {"sources", {{{"name", "pool"}, {"path", test::data_path("evo_pool.smi")}}}},
      {"counts", {{"train", 40}, {"valid", 8}, {"test", 8}}},
      {"seed", 5},
  };
  test::write_file((dir / "cfg.json").string(), cfg.dump());
  const std::string data = (dir / "data").string();
  const CliResult g = cli({"gen-dataset", "--config", (dir / "cfg.json").string(), "--out", data, "--workers", "2"});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  EXPECT_EQ(json_of(g)["train"], 40);
  EXPECT_EQ(read_records(data + "/train.jsonl").size(), 40u);

  const std::string aug = (dir / "train_aug.jsonl").string();
  const CliResult a = cli({"aug-corpus", "--in", data + "/train.jsonl", "--seed", "1", "--out", aug});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(read_records(aug).size(), 80u);

  const std::string rnd = (dir / "train_rnd.jsonl").string();
  ASSERT_EQ(cli({"aug-inputs", "--in", data + "/train.jsonl", "--factor", "2", "--seed", "1", "--out", rnd}).code,
            kExitOk);
  EXPECT_EQ(read_records(rnd).size(), 80u);

  const std::string vocab = (dir / "vocab.txt").string();
  const CliResult v = cli({"build-vocab", "--records", aug + "," + data + "/valid.jsonl," + data + "/test.jsonl", "--out", vocab});
  ASSERT_EQ(v.code, kExitOk) << v.err;
  EXPECT_EQ(json_of(v)["size"], Vocab::load(vocab).size());

  const std::string prefix = (dir / "test").string();
  const CliResult t = cli({"tokenize", "--records", data + "/test.jsonl", "--vocab", vocab, "--mode", "tf", "--out", prefix});
  ASSERT_EQ(t.code, kExitOk) << t.err;
  EXPECT_EQ(read_encoded(prefix).src.size(), json_of(t)["pairs"].get<std::size_t>());
  EXPECT_EQ(cli({"tokenize", "--records", data + "/test.jsonl", "--vocab", vocab, "--mode", "xx", "--out", prefix}).code,
            kExitUsage);

  // Predictions: first reference product of each record.
  std::string preds;
  for (const DatasetRecord &r : read_records(data + "/test.jsonl")) preds += r.products.front() + "\n";
  test::write_file((dir / "pred.txt").string(), preds);
  const CliResult e = cli({"eval", "--pred", (dir / "pred.txt").string(), "--refs", data + "/test.jsonl"});
  ASSERT_EQ(e.code, kExitOk) << e.err;
  EXPECT_DOUBLE_EQ(json_of(e)["accuracy"].get<double>(), 1.0);
  const CliResult p = cli({"eval", "--pred", (dir / "pred.txt").string(), "--refs", data + "/test.jsonl", "--pretty"});
  EXPECT_NE(p.out.find("all"), std::string::npos);
}

TEST(Cli, ScaffoldAllowlist) {
  const std::filesystem::path dir = test::temp_dir("cli_scaffold");
  test::write_file((dir / "m.smi").string(), "c1ccccc1\nC1CC1C\nCCO\n");
  const CliResult r = cli({"scaffold-allowlist", "--molecules", (dir / "m.smi").string(), "--out", (dir / "a.txt").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json_of(r)["signatures"], 2);
}

TEST(Cli, MissingFileIsDataError) {
  EXPECT_EQ(cli({"eval", "--pred", "/nonexistent/p.txt", "--refs", "/nonexistent/r.jsonl"}).code, kExitData);
}

}  // namespace
}  // namespace brs
