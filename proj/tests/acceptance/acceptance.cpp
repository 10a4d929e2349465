// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chopf/cobar.hpp"
#include "chopf/nsym.hpp"
#include "chopf/sym.hpp"
#include "chopf/topology.hpp"
#include "chopf_cli/app.hpp"
#include "chopf_cli/expression.hpp"
#include "chopf_cli/verify.hpp"
#include "doc_examples.hpp"
#include "oracles.hpp"

using namespace chopf;
using namespace chopf::cli;

namespace {

struct Criterion {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }

    void suite(const std::string& name, std::optional<int> weight = std::nullopt)
    {
        const SuiteReport rep = run_suite(name, weight);
        for (const auto& c : rep.checks)
            require(c.pass, name + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
    }
};

Criterion hopf_axioms()
{
    Criterion c;
    for (const auto& h : hopf_structures()) {
        const bool wide = h.name == "S* binomial" || h.name == "N* binomial";
        const int w = wide ? 7 : 6;
        for (const Check& k : {check_coassociativity(h, w), check_counit(h, w), check_antipode(h, w)})
            c.require(k.pass, k.name + " " + k.detail);
    }
    return c;
}

Criterion antipode_crosscheck()
{
    Criterion c;
    c.suite("antipode-crosscheck", 8);
    // chi_S(e_n) against (-1)^n h_n as explicit polynomials in n variables
    for (int n = 1; n <= 8; ++n) {
        const Element chi = sym_antipode(Element::basis(kSymE, {n}));
        oracle::Poly h = oracle::h_poly(n, n);
        oracle::Poly neg;
        oracle::poly_add(neg, h, n % 2 ? -1 : 1);
        c.require(oracle::sym_poly(chi, n) == neg, "chi_S(e_" + std::to_string(n) + ") polynomial");
    }
    return c;
}

Criterion duality()
{
    Criterion c;
    c.suite("duality", 6);
    for (int wa = 1; wa <= 4; ++wa)
        for (int wb = 1; wa + wb <= 5; ++wb)
            for (const auto& a : compositions_of(wa))
                for (const auto& b : compositions_of(wb)) {
                    const int vars = wa + wb;
                    const auto lhs = oracle::qsym_poly(quasi_shuffle(a, b), vars);
                    const auto rhs = oracle::poly_mul(oracle::monomial_qsym_poly(a.parts(), vars),
                                                      oracle::monomial_qsym_poly(b.parts(), vars));
                    c.require(lhs == rhs, "quasi-shuffle oracle");
                }
    for (int n = 1; n <= 6; ++n)
        for (const auto& i : compositions_of(n))
            c.require(qsym_antipode(Element::basis(kQSym, i.parts())) == oracle::qsym_antipode_closed_form(i.parts()),
                      "Q* antipode closed form");
    return c;
}

Criterion bfk()
{
    Criterion c;
    c.suite("bfk", 7);
    return c;
}

Criterion algebroid()
{
    Criterion c;
    c.suite("comodule-algebroid", 5);
    const SplitAlgebroid alg(AlgebroidKind::sym_fdb);
    for (int w = 0; w <= 3; ++w) {
        const auto kernel = oracle::invariant_kernel_dimension(w);
        c.require(kernel == 1 && cohomology_rank(alg, w, 0) == 1, "H^0 weight " + std::to_string(w));
    }
    return c;
}

Criterion topology()
{
    Criterion c;
    c.suite("topology", 7);
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : partitions_of(n))
            c.require(cp_char_number(n, lam).raw() == oracle::normal_bundle_number(n, lam.parts()),
                      "cp_char_number " + std::to_string(n));
    return c;
}

Criterion counts()
{
    Criterion c;
    c.suite("counts", 12);
    return c;
}

Criterion cli_contract(const std::string& docs_path)
{
    Criterion c;
    std::mt19937 rng(1);
    const Space spaces[] = {kSymE, kSymH, kSymP, kSymM, kNSym, kQSym, kFdB};
    for (Space s : spaces) {
        int bad = 0;
        for (int i = 0; i < 1000; ++i) {
            const Element x = oracle::random_element(rng, s, 6, 5);
            Element back = evaluate_element(x.str(), {});
            if (back.algebra() == Algebra::scalar)
                back = back.relabeled(s);
            if (!(back == x))
                ++bad;
        }
        c.require(bad == 0, std::to_string(bad) + " round-trip failures in " + basis_str(s, {1}));
    }
    const std::vector<std::string> cmd = {"coproduct", "--structure", "bfk", "Z[1,2] + 3*Z[2,1]"};
    std::ostringstream a, b, err;
    run(cmd, a, err);
    run(cmd, b, err);
    c.require(a.str() == b.str() && !a.str().empty(), "JSON output not byte-stable");

    const auto examples = docs::load_examples(docs_path);
    int failures = 0;
    int zero_exit = 0;
    for (const auto& ex : examples) {
        const auto got = docs::run_example(ex);
        if (got.output != ex.expected || got.exit_code != ex.exit_code) {
            ++failures;
            c.require(false, "example at line " + std::to_string(ex.line) + ": " + ex.command);
        }
        zero_exit += got.exit_code == 0;
    }
    c.require(examples.size() > 100, "too few documented examples");
    c.notes.insert(c.notes.begin(), std::to_string(examples.size()) + " documented examples, " + std::to_string(zero_exit) +
                                         " with exit code 0, " + std::to_string(failures) + " mismatches");
    return c;
}

} // namespace

int main(int argc, char** argv)
{
    const std::string docs_path = argc > 1 ? argv[1] : CHOPF_DOCS_DIR "/examples.md";
    struct Entry {
        const char* title;
        Criterion (*run)();
    };
    const Entry entries[] = {
        {"Hopf axioms for S* and N* binomial (weight <= 7), Q*, FdB and BFK (weight <= 6)", hopf_axioms},
        {"antipode cross-checks (S* e_n vs h_n, FdB vs reversion, BFK vs FdB)", antipode_crosscheck},
        {"duality: pairing, adjunctions, quasi-shuffle oracle", duality},
        {"BFK coproduct values and coassociativity through weight 7", bfk},
        {"comodule axioms, cosimplicial identities, d^2 = 0, H^0 of S.B", algebroid},
        {"topology: log, Hurewicz, characteristic numbers, fgl, beta, cp-infinity", topology},
        {"combinatorial counts", counts},
    };
    bool all = true;
    int index = 1;
    auto report = [&](const char* title, const Criterion& c) {
        std::cout << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << index++ << ": " << title << "\n";
        for (const auto& n : c.notes)
            std::cout << "       " << n << "\n";
        all = all && c.pass;
    };
    for (const auto& e : entries) {
        try {
            report(e.title, e.run());
        }
        catch (const std::exception& ex) {
            Criterion c;
            c.require(false, std::string("exception: ") + ex.what());
            report(e.title, c);
        }
    }
    try {
        report("CLI contract: round trip, byte-stable JSON, documented examples", cli_contract(docs_path));
    }
    catch (const std::exception& ex) {
        Criterion c;
        c.require(false, std::string("exception: ") + ex.what());
        report("CLI contract: round trip, byte-stable JSON, documented examples", c);
    }
    return all ? 0 : 1;
}
