#include <cstdlib>
#include <iostream>

#include "sba/suite.hpp"

int main(int argc, char** argv) {
    sba::SuiteConfig cfg;
    if (argc > 1) cfg.seed = std::strtoull(argv[1], nullptr, 10);
    sba::Catalog cat = sba::Catalog::load(sba::catalog_dir());
    cfg.cat = &cat;
    int failed = 0;
    auto crit = sba::all_criteria();
    for (size_t i = 0; i < crit.size(); ++i) {
        int id = static_cast<int>(i + 1);
        sba::CriterionResult r = sba::run_criterion(crit[i], cfg, id);
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << id << " " << r.title << ": " << r.detail << std::endl;
        failed += !r.pass;
    }
    std::cout << (crit.size() - failed) << "/" << crit.size() << " criteria pass (seed " << cfg.seed << ")" << std::endl;
    return failed == 0 ? 0 : 1;
}
