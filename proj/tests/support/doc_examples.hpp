#pragma once

#include <string>
#include <vector>

namespace docs {

struct Example {
    int line = 0;
    std::string command;
    std::vector<std::string> args; // without the leading "chopf"
    std::string expected;          // combined stdout and stderr
    int exit_code = 0;
};

/// Splits a shell-like command line, honouring single and double quotes.
std::vector<std::string> split_command(const std::string& line);

/// Collects every "$ chopf ..." invocation inside ```console blocks of a markdown file.
std::vector<Example> load_examples(const std::string& path);

struct Outcome {
    std::string output;
    int exit_code = 0;
};

Outcome run_example(const Example& ex);

} // namespace docs
