#include "doc_examples.hpp"

#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "chopf_cli/app.hpp"

namespace docs {

std::vector<std::string> split_command(const std::string& line)
{
    std::vector<std::string> out;
    std::string cur;
    bool have = false;
    char quote = 0;
    for (char c : line) {
        if (quote) {
            if (c == quote)
                quote = 0;
            else
                cur += c;
        }
        else if (c == '"' || c == '\'') {
            quote = c;
            have = true;
        }
        else if (c == ' ' || c == '\t') {
            if (have)
                out.push_back(cur);
            cur.clear();
            have = false;
        }
        else {
            cur += c;
            have = true;
        }
    }
    if (quote)
        throw std::invalid_argument("unterminated quote in: " + line);
    if (have)
        out.push_back(cur);
    return out;
}

std::vector<Example> load_examples(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    static const std::regex exit_line(R"(^\[exit (\d+)\]$)");
    std::vector<Example> out;
    std::string line;
    bool in_block = false;
    int n = 0;
    Example* cur = nullptr;
    while (std::getline(in, line)) {
        ++n;
        if (line.starts_with("```")) {
            in_block = !in_block && line == "```console";
            cur = nullptr;
            continue;
        }
        if (!in_block)
            continue;
        std::smatch m;
        if (line.starts_with("$ chopf")) {
            Example ex;
            ex.line = n;
            ex.command = line.substr(2);
            auto tokens = split_command(ex.command);
            ex.args.assign(tokens.begin() + 1, tokens.end());
            out.push_back(std::move(ex));
            cur = &out.back();
        }
        else if (cur && std::regex_match(line, m, exit_line)) {
            cur->exit_code = std::stoi(m[1]);
        }
        else if (cur) {
            cur->expected += line + "\n";
        }
    }
    return out;
}

Outcome run_example(const Example& ex)
{
    std::ostringstream os;
    const int code = chopf::cli::run(ex.args, os, os);
    return {os.str(), code};
}

} // namespace docs
