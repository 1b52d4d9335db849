#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "tsy/json_io.hpp"
#include "tsy/verify.hpp"

using namespace tsy;
using nlohmann::json;

TEST_CASE("variety descriptors") {
    JetVariety c = variety_from_json(json::parse(R"({"kind":"rnc","params":{"d":4}})"));
    REQUIRE(c.kind() == "rnc");
    REQUIRE(c.ambient().dim == 5);

    JetVariety s = variety_from_json(
        json::parse(R"({"kind":"segre","params":{"dims":[2,3,2]}})"));
    REQUIRE(s.ambient().dim == 12);
    REQUIRE(s.intrinsic_dim() == 4);

    JetVariety v = variety_from_json(
        json::parse(R"({"kind":"segre_veronese","params":{"dims":[2,2],"degs":[2,1]}})"));
    REQUIRE(v.ambient().dim == 6);

    JetVariety p = variety_from_json(
        json::parse(R"({"kind":"pencil_product","params":{"degs":[2,2]}})"));
    REQUIRE(p.ambient().dim == 9);
    REQUIRE(p.kind() == "pencil_product");

    REQUIRE_THROWS_AS(variety_from_json(json::parse(R"({"kind":"elliptic"})")),
                      std::invalid_argument);
}

TEST_CASE("tensor descriptors round trip") {
    json j = json::parse(R"({
        "sources": [2, 2],
        "target": 3,
        "coeffs": [
            {"index": [0, 0], "vector": ["1", "0", "0"]},
            {"index": [0, 1], "vector": ["0", "1/2", "0"]},
            {"index": [1, 0], "vector": ["0", "1", "0"]},
            {"index": [1, 1], "vector": ["0", "0", "-3"]}
        ]
    })");
    LinearTensor t = tensor_from_json(j);
    REQUIRE(t.source_size() == 4);
    REQUIRE(t.coeffs[1] == SparseVec{{1, rat_of(1, 2)}});
    LinearTensor t2 = tensor_from_json(tensor_to_json(t));
    for (int64_t f = 0; f < t.source_size(); ++f) REQUIRE(t.coeffs[f] == t2.coeffs[f]);

    json bad = j;
    bad["coeffs"][0]["index"] = {5, 0};
    REQUIRE_THROWS_AS(tensor_from_json(bad), std::invalid_argument);
}

TEST_CASE("verify registry") {
    auto names = verify::suite_names();
    REQUIRE(names.size() >= 10);
    // the quick suites run clean
    for (const char* quick : {"jacobi", "x-multiplicative", "lascoux"}) {
        auto suite = verify::registry().at(quick)(1729);
        REQUIRE(verify::suite_passed(suite));
    }
}

TEST_CASE("identical invocations produce byte-identical output") {
    const char* bin = std::getenv("TSY_SECQ_PATH");
    if (!bin) {
        SUCCEED("TSY_SECQ_PATH not set; exercised via ctest");
        return;
    }
    {
        std::ofstream f("cli_det_rnc5.json");
        f << R"({"kind":"rnc","params":{"d":5}})";
    }
    auto run = [&](const std::string& args, const std::string& out) {
        std::string cmd = std::string(bin) + " " + args + " > " + out + " 2>/dev/null";
        REQUIRE(std::system(cmd.c_str()) == 0);
        std::ifstream in(out);
        std::stringstream ss;
        ss << in.rdbuf();
        std::remove(out.c_str());
        return ss.str();
    };
    for (const char* args :
         {"equations cli_det_rnc5.json --q 2 --k 0 --format json --seed 99",
          "betti-row cli_det_rnc5.json --q 1 --k 1 --p-max 1 --format csv --seed 7"}) {
        std::string a = run(args, "cli_det_a.txt");
        std::string b = run(args, "cli_det_b.txt");
        REQUIRE(a == b);
        REQUIRE(!a.empty());
    }
    std::remove("cli_det_rnc5.json");
}
