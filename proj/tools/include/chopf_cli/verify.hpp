#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chopf/element.hpp"
#include "chopf_cli/json_io.hpp"

namespace chopf::cli {

struct Check {
    std::string name;
    bool pass = true;
    std::size_t cases = 0;
    std::string detail; // first failure, if any
};

struct SuiteReport {
    std::string suite;
    int weight = 0;
    std::vector<Check> checks;
    bool exploratory = false; // checks are candidates; the summary counts those that hold

    [[nodiscard]] bool passed() const;
    [[nodiscard]] Json to_json() const;
    [[nodiscard]] std::string text() const;
};

/// A graded connected Hopf algebra given on basis words.
struct HopfStructure {
    std::string name;
    Space space;
    std::function<std::vector<Word>(int)> words;
    std::function<Tensor(const Element&)> coproduct;
    std::function<Element(const Element&)> antipode;
};

/// S* binomial (e basis), N* binomial, Q*, Faa di Bruno, BFK.
std::vector<HopfStructure> hopf_structures();

Check check_coassociativity(const HopfStructure& h, int max_weight);
Check check_counit(const HopfStructure& h, int max_weight);
/// Both m(chi (x) 1)Delta = eps and m(1 (x) chi)Delta = eps.
Check check_antipode(const HopfStructure& h, int max_weight);

/// Suite names accepted by run_suite, each with its default weight.
std::vector<std::pair<std::string, int>> suite_names();

/// Runs a named suite; weight defaults to the suite's own default. Throws
/// DomainError for an unknown suite.
SuiteReport run_suite(const std::string& name, std::optional<int> weight = std::nullopt);

/// The Hall / N-Q pairing compatibility experiment: for each candidate involution
/// phi of S*, whether <phi(abelianize(Z_I)), m_lambda> = <Z_I, include(m_lambda)>
/// for all |I| = |lambda| <= weight.
SuiteReport run_duality_experiment(int weight);

} // namespace chopf::cli
