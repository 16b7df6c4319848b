#pragma once

#include <functional>
#include <string>
#include <vector>

namespace modkit::selftest {

struct Options {
    std::string tables_dir;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    std::function<CriterionResult(const Options&)> run;
};

const std::vector<Criterion>& criteria();

// Runs one criterion, converting exceptions into failures.
CriterionResult run(const Criterion& c, const Options& opt);

std::string format_line(const CriterionResult& r);

}  // namespace modkit::selftest
