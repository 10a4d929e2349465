#include "doctest.h"

#include "doc_examples.hpp"

TEST_CASE("shell-like splitting")
{
    const auto t = docs::split_command(R"(chopf charnum quasitoric --space '{"factors":[1]}' "a b" c)");
    REQUIRE(t.size() == 7);
    CHECK(t[6] == "c");
    CHECK(t[4] == R"({"factors":[1]})");
    CHECK(t[5] == "a b");
}

TEST_CASE("every documented example reproduces")
{
    const auto examples = docs::load_examples(CHOPF_DOCS_DIR "/examples.md");
    REQUIRE(examples.size() > 100);
    for (const auto& ex : examples) {
        const auto got = docs::run_example(ex);
        INFO("line " << ex.line << ": " << ex.command);
        CHECK(got.exit_code == ex.exit_code);
        CHECK(got.output == ex.expected);
    }
}
