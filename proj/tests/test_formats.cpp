#include <catch2/catch_amalgamated.hpp>

#include <schurbound/schurbound.hpp>

using namespace schurbound;

TEST_CASE("polynomial JSON is schema-exact and key-ordered") {
    const CPolynomial p = jacobi_trudi({2, 1}, 3);  // c_{2,1} - c_3
    CHECK(to_json(p).dump() ==
          R"({"rank":3,"terms":[{"partition":[3],"coeff":-1},{"partition":[2,1],"coeff":1}]})");

    CHECK(to_json(CPolynomial(2)).dump() == R"({"rank":2,"terms":[]})");
    CHECK(to_json(monomial({}, 2)).dump() ==
          R"({"rank":2,"terms":[{"partition":[],"coeff":1}]})");
}

TEST_CASE("expansion JSON carries the degree") {
    const SchurExpansion e = expand_to_schur(monomial({2, 1}, 3));
    CHECK(to_json(e).dump() ==
          R"({"rank":3,"degree":3,"terms":[{"partition":[3],"coeff":1},{"partition":[2,1],"coeff":1}]})");
}

TEST_CASE("interval JSON golden for Par(3)") {
    const HasseInterval iv = build_interval({3}, {1, 1, 1}, 3);
    CHECK(to_json(iv).dump() ==
          R"({"top":[3],"bottom":[1,1,1],"nodes":[[3],[2,1],[1,1,1]],)"
          R"("edges":[[[3],[2,1]],[[2,1],[1,1,1]]],)"
          R"("longest_from_top":{"3":0,"2,1":1,"1,1,1":2}})");
}

TEST_CASE("DOT golden for Par(3)") {
    const HasseInterval iv = build_interval({3}, {1, 1, 1}, 3);
    CHECK(to_dot(iv) ==
          "digraph hasse {\n"
          "  rankdir=TB;\n"
          "  \"3\";\n"
          "  \"2,1\";\n"
          "  \"1,1,1\";\n"
          "  \"3\" -> \"2,1\";\n"
          "  \"2,1\" -> \"1,1,1\";\n"
          "}\n");
}

TEST_CASE("certificate JSON golden") {
    CHECK(to_json(compute_B({1, 1, 1})).dump() ==
          R"({"lambda":[1,1,1],"n":3,"longest_length":2,)"
          R"("best_chain":[[3],[2,1],[1,1,1]],"per_step":[2,1],)"
          R"("bound_B":4,"floor_bound":4})");
}

TEST_CASE("verification report JSON has the documented shape") {
    const VerificationReport report = verify_weight_bound(3, 3);
    Json j = to_json(report);
    CHECK(j["scope"]["mode"] == "weight-bound");
    CHECK(j["scope"]["n"] == 3);
    CHECK(j["scope"]["r"] == 3);
    CHECK(j["all_pass"] == true);
    CHECK(j.contains("elapsed_ms"));
    REQUIRE(j["records"].size() == 3);
    CHECK(j["records"][0] ==
          Json({{"partitions", {{3}}}, {"W", 1}, {"B", 1}, {"floor", 1}, {"pass", true}}));

    // byte-identical across runs once the timing field is fixed
    Json k = to_json(verify_weight_bound(3, 3));
    j["elapsed_ms"] = 0;
    k["elapsed_ms"] = 0;
    CHECK(j.dump() == k.dump());
}

TEST_CASE("serialization is independent of construction order") {
    const CPolynomial a = monomial({3, 1}, 4) + monomial({2, 2}, 4) * Int{5};
    const CPolynomial b = monomial({2, 2}, 4) * Int{5} + monomial({3, 1}, 4);
    CHECK(to_json(a).dump() == to_json(b).dump());

    const SchurExpansion ea = expand_to_schur(a);
    const SchurExpansion eb = expand_to_schur(b);
    CHECK(to_json(ea).dump() == to_json(eb).dump());
}
