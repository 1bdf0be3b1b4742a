#include <doctest.h>

#include "sfgloc/sfg_builder.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace sfgloc;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot open " << path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Hand-analyzed methods, one .java/.json pair each; the serialized graph
// must match the golden file byte for byte.
const std::vector<std::string> kGoldenCases = {
    "g01_call_dataflow", "g02_assign_roles", "g03_invocation_roles", "g04_if_then_else",
    "g05_while_loop",    "g06_join_and_follow", "g07_do_while",      "g08_for_loop",
    "g09_foreach",       "g10_switch",       "g11_nested",           "g12_role_table",
};

} // namespace

TEST_SUITE_BEGIN("sfg_golden");

TEST_CASE("twelve golden methods serialize byte-identically") {
    const std::string dir = SFGLOC_GOLDEN_DIR;
    for (const std::string& name : kGoldenCases) {
        CAPTURE(name);
        std::string source = slurp(dir + "/" + name + ".java");
        std::string expected = slurp(dir + "/" + name + ".json");
        SemanticFlowGraph g = build_sfg_from_source(source);
        std::string actual = sfg_to_json(g);
        CHECK_MESSAGE(actual == expected, "golden mismatch for " << name << "\n--- expected ---\n"
                                                                 << expected << "--- actual ---\n"
                                                                 << actual);
    }
}

TEST_SUITE_END();
