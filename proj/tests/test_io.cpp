#include <doctest.h>

#include <filesystem>
#include <unistd.h>

#include "ordex/io.hpp"

using namespace ordex;

namespace {

struct TempDir {
    std::filesystem::path dir;
    TempDir() {
        dir = std::filesystem::temp_directory_path() /
              ("ordex_io_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
    }
    ~TempDir() { std::filesystem::remove_all(dir); }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("family json round trip") {
    const std::string text = R"({"universe": 4, "orders": [[0,1,2],[2,1],[3]]})";
    const FamilyDocument doc = family_from_json(text);
    CHECK_FALSE(doc.cyclic);
    CHECK(doc.linear.universe_size == 4);
    CHECK(doc.linear.num_orders() == 3);
    CHECK(doc.linear.orders[0].seq == std::vector<Symbol>{0, 1, 2});

    const FamilyDocument again = family_from_json(family_to_json(doc.linear));
    CHECK(again.linear.universe_size == doc.linear.universe_size);
    for (int i = 0; i < 3; ++i) CHECK(again.linear.orders[i].seq == doc.linear.orders[i].seq);
}

TEST_CASE("cyclic family json linearizes at the canonical start") {
    const std::string text = R"({"universe": 5, "cyclic": true, "orders": [[2,3,1],[4,0]]})";
    const FamilyDocument doc = family_from_json(text);
    CHECK(doc.cyclic);
    CHECK(doc.linear.orders[0].seq == std::vector<Symbol>{1, 2, 3});
    CHECK(doc.linear.orders[1].seq == std::vector<Symbol>{0, 4});
}

TEST_CASE("family json rejects malformed input") {
    CHECK_THROWS(family_from_json(R"({"orders": [[0]]})"));                    // missing universe
    CHECK_THROWS(family_from_json(R"({"universe": 2, "orders": [[0,5]]})"));   // id out of range
    CHECK_THROWS(family_from_json(R"({"universe": 3, "orders": [[1,1]]})"));   // repeated symbol
    CHECK_THROWS(family_from_json("not json at all"));
}

TEST_CASE("matrix text round trip") {
    const ZeroOneMatrix m = matrix_from_text("1010\n1001\n0101\n");
    CHECK(m == s_t(2));
    CHECK(matrix_from_text(matrix_to_text(m)) == m);
    CHECK_THROWS(matrix_from_text("10\n1\n"));
    CHECK_THROWS(matrix_from_text("12\n"));
}

TEST_CASE("edge-ordered graph text round trip") {
    const EdgeOrderedGraph g = c4_1243();
    const EdgeOrderedGraph back = eograph_from_text(eograph_to_text(g));
    CHECK(back.num_vertices == g.num_vertices);
    CHECK(back.edges == g.edges);
    CHECK_THROWS(eograph_from_text("4 2\n0 1\n"));   // truncated
    CHECK_THROWS(eograph_from_text("3 1\n0 0\n"));   // loop
}

TEST_CASE("geometry text round trip") {
    const GeometricGraph g = make_geometric({{0, 0}, {10, 1}, {3, 7}}, {{0, 1}, {1, 2}});
    const GeometricGraph back = geometry_from_text(geometry_to_text(g));
    CHECK(back.points.size() == g.points.size());
    CHECK(back.edges == g.edges);
    CHECK_THROWS(geometry_from_text("2 1\n0 0\n"));
}

TEST_CASE("file save and load") {
    TempDir tmp;
    OrderFamily f;
    f.universe_size = 3;
    f.orders.emplace_back(std::vector<Symbol>{2, 0, 1});
    save_family_file(tmp.path("fam.json"), f);
    const FamilyDocument doc = load_family_file(tmp.path("fam.json"));
    CHECK(doc.linear.orders[0].seq == f.orders[0].seq);

    save_matrix_file(tmp.path("m.txt"), hat());
    CHECK(load_matrix_file(tmp.path("m.txt")) == hat());

    CHECK_THROWS(load_family_file(tmp.path("missing.json")));
}

TEST_CASE("audit report json contains the schema and checks") {
    OrderFamily f;
    f.universe_size = 4;
    f.orders.emplace_back(std::vector<Symbol>{0, 1, 2, 3});
    f.orders.emplace_back(std::vector<Symbol>{1, 0, 3, 2});
    const std::string js = audit_report_to_json(full_audit(f));
    CHECK(js.find("ordex-audit-v1") != std::string::npos);
    CHECK(js.find("\"s_value\": -8") != std::string::npos);
    CHECK(js.find("family_valid") != std::string::npos);
    CHECK(js.find("all_unconditional_pass\": true") != std::string::npos);
}

TEST_CASE("seed spec json") {
    const FamilySeedSpec s =
        seed_spec_from_json(R"({"n": 5, "universe": 9, "max_len": 6, "seed": 11})");
    CHECK(s.n == 5);
    CHECK(s.universe == 9);
    CHECK(s.min_len == 0);
    CHECK(s.max_len == 6);
    CHECK(s.seed == 11);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK(Rational::parse("1.25") == Rational(5, 4));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("3/0"));
}
