#include <cstdlib>
#include <iostream>
#include <string>

#include "selftest.hpp"

int main(int argc, char** argv) {
    modkit::selftest::Options opt;
    opt.tables_dir = MODKIT_TABLES_DIR;
    if (const char* env = std::getenv("MODKIT_TABLES")) opt.tables_dir = env;
    if (argc > 1) opt.tables_dir = argv[1];
    int failed = 0;
    for (const auto& c : modkit::selftest::criteria()) {
        auto r = modkit::selftest::run(c, opt);
        std::cout << modkit::selftest::format_line(r) << std::endl;
        if (!r.pass) ++failed;
    }
    std::cout << (modkit::selftest::criteria().size() - failed) << "/" << modkit::selftest::criteria().size() << " criteria passed" << std::endl;
    return failed ? 1 : 0;
}
