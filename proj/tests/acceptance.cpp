// Acceptance suite: one line per criterion, exit status = number of failures.
//
// Each criterion is exact (tolerance zero): objective equality against the
// reference oracles, combinatorial identities, and structural certificates.

#include <cstdio>
#include <string>
#include <vector>

#include "tvlab/verify.hpp"

using tvlab::verify::run_suite;
using tvlab::verify::SuiteParams;
using tvlab::verify::SuiteResult;

namespace {

struct Criterion {
    int id;
    std::string description;
    std::vector<SuiteResult> parts;
    bool pass() const {
        for (const auto& p : parts)
            if (!p.pass()) return false;
        return true;
    }
};

void report(const Criterion& c) {
    uint64_t checked = 0, failures = 0;
    double seconds = 0;
    for (const auto& p : c.parts) {
        checked += p.checked;
        failures += p.failures;
        seconds += p.seconds;
    }
    std::printf("[%s] criterion %d: %s (checks=%llu, failures=%llu, %.1fs)\n",
                c.pass() ? "PASS" : "FAIL", c.id, c.description.c_str(),
                (unsigned long long)checked, (unsigned long long)failures, seconds);
    if (!c.pass())
        for (const auto& p : c.parts)
            if (!p.pass())
                std::printf("       suite %s: first failure:\n%s\n", p.name.c_str(),
                            p.first_failure.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    std::vector<Criterion> criteria;

    {
        Criterion c{1,
                    "exhaustive P4-free equivalence, n<=7, W = empty + 30 random subsets",
                    {}};
        SuiteParams p;
        p.n = 7;
        p.w_samples = 30;
        c.parts.push_back(run_suite("p4free-exhaustive", p));
        report(c);
        criteria.push_back(c);
    }

    {
        Criterion c{2,
                    "(sP1+P3) equivalence for s in {0,1,2}: exhaustive n<=7 plus 300 random "
                    "n<=11 (n<=10 for COCT-ext)",
                    {}};
        for (int s = 0; s <= 2; ++s) {
            SuiteParams p;
            p.n = 7;
            p.s = s;
            p.w_samples = 2;
            p.seed = 100 + s;
            c.parts.push_back(run_suite("sp1p3-exhaustive", p));
            SuiteParams q;
            q.n = 11;
            q.s = s;
            q.count = 300;
            q.w_samples = 2;
            q.seed = 200 + s;
            c.parts.push_back(run_suite("sp1p3-random", q));
        }
        report(c);
        criteria.push_back(c);
    }

    {
        Criterion c{3,
                    "lemma suite: split, component structure, tree bound (n<=12), connector "
                    "(500 per s), contraction closure (500)",
                    {}};
        SuiteParams p;
        p.n = 7;
        p.count = 200;
        c.parts.push_back(run_suite("lemma-split", p));
        SuiteParams q;
        q.n = 7;
        c.parts.push_back(run_suite("lemma-components", q));
        SuiteParams t;
        t.n = 12;
        c.parts.push_back(run_suite("lemma-tree", t));
        SuiteParams r;
        r.count = 500;
        c.parts.push_back(run_suite("lemma-connector", r));
        SuiteParams k;
        k.count = 500;
        c.parts.push_back(run_suite("lemma-contract", k));
        report(c);
        criteria.push_back(c);
    }

    {
        Criterion c{4,
                    "reduction suite: exhaustive n<=4 with every budget, witnesses both ways, "
                    "5n+m sizes, class certificates + 50 random n=8 certificates",
                    {}};
        SuiteParams p;
        p.n = 4;
        c.parts.push_back(run_suite("reduction-exhaustive", p));
        SuiteParams q;
        q.n = 8;
        q.count = 50;
        c.parts.push_back(run_suite("reduction-random-class", q));
        report(c);
        criteria.push_back(c);
    }

    {
        Criterion c{5,
                    "oracle self-consistency on all graphs n<=7: engine agreement, "
                    "|VC|+|MIS|=n, boost equals direct MIS",
                    {}};
        SuiteParams p;
        p.n = 7;
        c.parts.push_back(run_suite("oracle-consistency", p));
        report(c);
        criteria.push_back(c);
    }

    {
        Criterion c{6,
                    "dominating-set pipeline equals the connected-VC oracle: exhaustive P5-free "
                    "n<=7 (s=0) and 200 random (P1+P5)-free n<=12 (s=1)",
                    {}};
        SuiteParams p;
        p.n = 7;
        p.w_samples = 2;
        c.parts.push_back(run_suite("pipeline-exhaustive", p));
        SuiteParams q;
        q.n = 12;
        q.s = 1;
        q.count = 200;
        q.w_samples = 2;
        c.parts.push_back(run_suite("pipeline-random", q));
        report(c);
        criteria.push_back(c);
    }

    {
        Criterion c{7, "determinism: identical inputs and seeds give byte-identical reports",
                    {}};
        c.parts.push_back(run_suite("determinism", {}));
        report(c);
        criteria.push_back(c);
    }

    int failed = 0;
    for (const auto& c : criteria)
        if (!c.pass()) ++failed;
    std::printf("%d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed;
}
