#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "powval/nevanlinna.hpp"

#include <iostream>

int main(int argc, char** argv) {
    doctest::Context ctx(argc, argv);
    const int rc = ctx.run();
    if (ctx.shouldExit()) return rc;
    const auto audit = powval::truncation_audit();
    if (audit.violations != 0) {
        std::cerr << "truncated count exceeded the full count " << audit.violations << " times\n";
        return 1;
    }
    return rc;
}
