#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "lex2vec/report.hpp"

namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lex2vec_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    write("emb.txt", "good 1.0 0.0\nbad 0.0 0.5\ntable 0.5 1.0\n");
    write("lex.tsv", "good\tposemo\nbad\tnegemo\n");
    write("empty.tsv", "");
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name, std::ios::binary) << text;
  }

  int run(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "lex2vec");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(stdin_text);
    out_.str("");
    err_.str("");
    return lex2vec::cli::run(static_cast<int>(argv.size()), argv.data(), in, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

}  // namespace

TEST_F(CliTest, LabelTsv) {
  ASSERT_EQ(0, run({"label", "--embeddings", path("emb.txt"), "--lexicon", path("lex.tsv") + ":plain",
                    "--theta", "0.75"}));
  EXPECT_EQ("0\tnegemo+posemo\tnegemo:1,posemo:1\n1\tposemo\tposemo:1\n", out_.str());
}

TEST_F(CliTest, LabelFromStdinIsDeterministic) {
  const std::string emb = "3 2\ngood 1.0 0.0\nbad 0.0 0.5\ntable 0.5 1.0\n";
  std::vector<std::string> args{"label",   "--embeddings", "-",      "--lexicon", path("lex.tsv") + ":plain",
                                "--theta", "0.75",         "--json", "--contributors"};
  ASSERT_EQ(0, run(args, emb));
  const std::string first = out_.str();
  ASSERT_EQ(0, run(args, emb));
  EXPECT_EQ(first, out_.str());
  EXPECT_NE(std::string::npos, first.find("\"contributors\""));
}

TEST_F(CliTest, EmptyLexiconIsAllUnnamed) {
  ASSERT_EQ(0, run({"label", "--embeddings", path("emb.txt"), "--lexicon",
                    path("empty.tsv") + ":plain", "--theta", "0.75"}));
  EXPECT_EQ("0\tUNNAMED\t\n1\tUNNAMED\t\n", out_.str());
}

TEST_F(CliTest, UnreadableEmbeddings) {
  EXPECT_EQ(1, run({"label", "--embeddings", path("missing.txt"), "--lexicon",
                    path("lex.tsv") + ":plain", "--theta", "0.75"}));
  EXPECT_NE(std::string::npos, err_.str().find(path("missing.txt")));
  EXPECT_NE(std::string::npos, err_.str().find("parse"));
}

TEST_F(CliTest, MalformedInputsNameStageAndLine) {
  write("bad.txt", "good 1.0 0.0\nbad -1.0\n");
  EXPECT_EQ(1, run({"label", "--embeddings", path("bad.txt"), "--lexicon", path("lex.tsv") + ":plain",
                    "--theta", "0.75"}));
  EXPECT_NE(std::string::npos, err_.str().find("line 2"));
  write("bad.dic", "%\n1\tposemo\n%\njoy\t9\n");
  EXPECT_EQ(1, run({"label", "--embeddings", path("emb.txt"), "--lexicon", path("bad.dic") + ":liwc",
                    "--theta", "0.75"}));
  EXPECT_NE(std::string::npos, err_.str().find("lexicon error"));
  EXPECT_NE(std::string::npos, err_.str().find("line 4"));
}

TEST_F(CliTest, UsageErrors) {
  const std::string emb = path("emb.txt");
  const std::string lex = path("lex.tsv") + ":plain";
  EXPECT_EQ(2, run({"sweep", "--embeddings", emb, "--lexicon", lex, "--theta-grid", ""}));
  EXPECT_EQ(2, run({"sweep", "--embeddings", emb, "--lexicon", lex, "--theta-grid", ",,"}));
  EXPECT_EQ(2, run({"label", "--embeddings", emb, "--lexicon", lex, "--theta", "0.4"}));
  EXPECT_EQ(2, run({"label", "--embeddings", emb, "--lexicon", lex}));
  EXPECT_EQ(2, run({"label", "--embeddings", emb, "--lexicon", path("lex.tsv"), "--theta", "0.8"}));
  EXPECT_EQ(2, run({"label", "--embeddings", emb, "--lexicon", lex, "--theta", "0.8", "--filter", "cap:0"}));
  EXPECT_EQ(2, run({"label", "--embeddings", emb, "--lexicon", lex, "--theta", "0.8", "--filter", "top:2"}));
  EXPECT_EQ(2, run({}));
  EXPECT_EQ(2, run({"bogus"}));
}

TEST_F(CliTest, SweepDefaultsToPublishedGrid) {
  ASSERT_EQ(0, run({"sweep", "--embeddings", path("emb.txt"), "--lexicon", path("lex.tsv") + ":plain"}));
  EXPECT_EQ(
      "theta\tresource\tpct_unnamed\tavg_labels_dim\n"
      "0.81\tlex\t0.0%\t1.5\n0.79\tlex\t0.0%\t1.5\n0.77\tlex\t0.0%\t1.5\n0.75\tlex\t0.0%\t1.5\n",
      out_.str());
}

TEST_F(CliTest, SweepJsonAndOutputFile) {
  ASSERT_EQ(0, run({"sweep", "--embeddings", path("emb.txt"), "--lexicon", path("lex.tsv") + ":plain",
                    "--theta-grid", "0.9,0.6", "--json", "--output", path("out.json")}));
  EXPECT_EQ("", out_.str());
  std::ifstream f(path("out.json"));
  std::stringstream text;
  text << f.rdbuf();
  auto report = lex2vec::report_from_json(text.str());
  ASSERT_EQ(2u, report.rows.size());
  EXPECT_EQ(0.9, report.rows[0].theta);
  EXPECT_NE(std::string::npos, text.str().find("\"avg_named\""));
}

TEST_F(CliTest, MetricsWithFilterAndModes) {
  ASSERT_EQ(0, run({"metrics", "--embeddings", path("emb.txt"), "--lexicon", path("lex.tsv") + ":plain",
                    "--theta", "0.75", "--filter", "topk:1", "--avg-mode", "named"}));
  EXPECT_EQ("theta\tresource\tpct_unnamed\tavg_labels_dim\n0.75\tlex\t0.0%\t1.0\n", out_.str());
  ASSERT_EQ(0, run({"metrics", "--embeddings", path("emb.txt"), "--lexicon", path("lex.tsv") + ":plain",
                    "--theta", "0.75", "--distinct-labels"}));
  EXPECT_EQ("theta\tresource\tpct_unnamed\tavg_labels_dim\n0.75\tlex\t0.0%\t1.5\n", out_.str());
}

TEST_F(CliTest, MultipleLexiconsMergeForLabel) {
  write("more.tsv", "table\tobject\n");
  ASSERT_EQ(0, run({"label", "--embeddings", path("emb.txt"), "--lexicon", path("lex.tsv") + ":plain",
                    "--lexicon", path("more.tsv") + ":plain", "--theta", "0.75", "--json"}));
  EXPECT_NE(std::string::npos, out_.str().find("\"resource\": \"lex+more\""));
  EXPECT_NE(std::string::npos, out_.str().find("\"object\""));
}
