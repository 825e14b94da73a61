#include <gtest/gtest.h>

#include <set>

#include "corpus_data.hpp"
#include "corpus_runner.hpp"

using artinian::tools::json;

namespace {

json corpus() { return json::parse(artinian::tools::kCorpusJson); }

}  // namespace

TEST(Corpus, EveryCheckPasses) {
    auto outcomes = artinian::tools::run_corpus(corpus(), "all", 20240913, 64);
    EXPECT_GE(outcomes.size(), 60u);
    for (const auto& o : outcomes) EXPECT_TRUE(o.pass) << o.entry << " / " << o.what << ": " << o.detail;
}

TEST(Corpus, ShapeAndOrigins) {
    auto c = corpus();
    const auto& entries = c.at("entries");
    EXPECT_GE(entries.size(), 12u);
    const std::set<std::string> origins{"published", "elementary", "computed"};
    std::set<std::string> names;
    for (const auto& e : entries) {
        EXPECT_TRUE(names.insert(e.at("name").get<std::string>()).second) << "duplicate name " << e.at("name");
        EXPECT_NO_THROW(artinian::parse_ring(e.at("ring").get<std::string>()));
        for (const auto& [key, spec] : e.at("expect").items())
            EXPECT_TRUE(origins.count(spec.at("origin").get<std::string>())) << e.at("name") << " " << key;
        for (const auto& chk : e.at("checks"))
            EXPECT_TRUE(origins.count(chk.at("origin").get<std::string>())) << e.at("name") << " " << chk.dump();
    }
}

TEST(Corpus, UnknownSelectorFails) {
    auto outcomes = artinian::tools::run_corpus(corpus(), "no-such-ring", 1, 8);
    ASSERT_EQ(outcomes.size(), 1u);
    EXPECT_FALSE(outcomes.front().pass);
}
