#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "progen/io.hpp"
#include "progen/verify.hpp"

using namespace progen;

TEST_CASE("matrix text format round trip") {
    const Field& F9 = Field::get(3, 2);
    Mat m(F9, 2, 3);
    m.set(0, 0, 4);
    m.set(0, 2, 8);
    m.set(1, 1, 1);
    std::string text = write_matrix(m);
    CHECK(text.substr(0, 6) == "9 2 3\n");
    std::istringstream in(text);
    CHECK(read_matrix(in) == m);
}

TEST_CASE("group file format round trip") {
    PermGroup G = named_group("S4");
    std::string text = write_group(G);
    std::istringstream in(text);
    PermGroup H = read_group(in);
    CHECK(H.degree() == G.degree());
    CHECK(H.order() == G.order());
    for (size_t i = 0; i < G.gens().size(); ++i) CHECK(H.gens()[i] == G.gens()[i]);
}

TEST_CASE("module file format round trip") {
    PermGroup S3 = symmetric_group(3);
    GModule aug = augmentation_module(S3, Field::get(2));
    std::string text = write_module(aug, "S3");
    std::istringstream in(text);
    GModule back = read_module(in);
    CHECK(back.dim() == aug.dim());
    for (size_t gi = 0; gi < aug.num_gens(); ++gi) CHECK(back.gen_matrix(gi) == aug.gen_matrix(gi));
}

TEST_CASE("census json round trip with matrices") {
    IrrCensus c = irr_census(symmetric_group(3), 2);
    ordered_json j = census_json(c, "S3", true);
    IrrCensus back = census_from_json(j, 2);
    REQUIRE(back.classes.size() == c.classes.size());
    for (size_t i = 0; i < c.classes.size(); ++i) {
        CHECK(back.classes[i].label == c.classes[i].label);
        CHECK(back.classes[i].module.dim() == c.classes[i].module.dim());
        CHECK(is_iso(back.classes[i].module, c.classes[i].module));
    }
}

TEST_CASE("rationals serialize as num/den strings") {
    Rational r(BigInt(6), BigInt(8));
    CHECK(r.str() == "3/4");
    CHECK(Rational::parse(r.str()) == r);
    CHECK(Rational(1).str() == "1/1");
}

TEST_CASE("tower spec json parsing and validation") {
    ordered_json j = ordered_json::parse(R"({"levels": [[{"factor":"A5","mult":1}],
                                                        [{"factor":"A5","mult":2}]]})");
    TowerSpec spec = parse_tower_spec(j);
    CHECK(spec.levels.size() == 2);
    CHECK(spec.levels[1][0].mult == 2);
    ordered_json bad = ordered_json::parse(R"({"levels": [[{"factor":"A5","mult":1,"oops":3}]]})");
    CHECK_THROWS_AS(parse_tower_spec(bad), ConfigError);
}

TEST_CASE("atomic write and determinism of emitted reports") {
    IrrCensus c = irr_census(symmetric_group(3), 2);
    GrowthTable t = growth_sums(symmetric_group(3), 2, 1, c);
    std::string a = growth_csv(t);
    std::string b = growth_csv(growth_sums(symmetric_group(3), 2, 1, irr_census(symmetric_group(3), 2)));
    CHECK(a == b);
    auto path = std::filesystem::temp_directory_path() / "progen_test_growth.csv";
    atomic_write(path, a);
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == a);
    std::filesystem::remove(path);
}

TEST_CASE("census cache round trip through PROGEN_CACHE_DIR") {
    auto dir = std::filesystem::temp_directory_path() / "progen_test_cache";
    std::filesystem::remove_all(dir);
    setenv("PROGEN_CACHE_DIR", dir.c_str(), 1);
    PermGroup S3 = symmetric_group(3);
    IrrCensus first = irr_census_cached(S3, Field::get(2), "S3");
    CHECK(std::filesystem::exists(dir));
    size_t files = std::distance(std::filesystem::directory_iterator(dir), {});
    CHECK(files == 1);
    IrrCensus second = irr_census_cached(S3, Field::get(2), "S3");
    REQUIRE(second.classes.size() == first.classes.size());
    for (size_t i = 0; i < first.classes.size(); ++i)
        CHECK(is_iso(first.classes[i].module, second.classes[i].module));
    unsetenv("PROGEN_CACHE_DIR");
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify suite registry") {
    CHECK(verify_suite_ids().size() == 21);
    CHECK_THROWS_AS(run_verify_suite("no-such-suite", 1), ConfigError);
    VerifyReport rep = run_verify_suite("mobius", 1);
    CHECK(rep.all_pass());
    CHECK(rep.items.size() >= 5);
}
