#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "mumford/errors.hpp"
#include "mumford/hurwitz.hpp"
#include "mumford/tables.hpp"

using namespace mumford;
using nlohmann::json;

namespace {

struct EnvGuard {
    std::string old;
    bool had;
    explicit EnvGuard(const std::string& dir) {
        const char* prev = std::getenv("MUMFORD_DATA_DIR");
        had = prev != nullptr;
        if (had) old = prev;
        setenv("MUMFORD_DATA_DIR", dir.c_str(), 1);
    }
    ~EnvGuard() {
        if (had)
            setenv("MUMFORD_DATA_DIR", old.c_str(), 1);
        else
            unsetenv("MUMFORD_DATA_DIR");
    }
};

}  // namespace

TEST_CASE("all golden tables diff clean") {
    for (const std::string name : {"5.4.1", "5.4.2", "5.4.3", "6.3", "gnu"}) {
        CHECK(tables::diff_table(name).empty());
        CHECK_NOTHROW(tables::check_table(name));
    }
}

TEST_CASE("regenerated segment tables have the advertised shape") {
    auto t541 = tables::regenerate("5.4.1");
    CHECK(t541["rows"].size() == 14);
    auto t543 = tables::regenerate("5.4.3");
    CHECK(t543["rows"].size() == 3);
    for (const auto& r : t543["rows"]) CHECK(r["e"] == "B(1,2)");
    // every 6.3 row must satisfy a/b == mu
    auto t63 = tables::regenerate("6.3");
    CHECK(t63["rows"].size() >= 80);
    for (const auto& r : t63["rows"]) {
        Rat a(r["a"].get<std::string>());
        Rat b(r["b"].get<std::string>());
        Rat m(r["mu"].get<std::string>());
        CHECK(a / b == m);
    }
}

TEST_CASE("tampered golden data is detected") {
    namespace fs = std::filesystem;
    fs::path tmp = fs::temp_directory_path() / "mumford_tamper_test";
    fs::path src = tables::data_dir();
    fs::create_directories(tmp);
    // copy the real golden files, then corrupt one exact row
    for (const auto& entry : fs::directory_iterator(src))
        fs::copy_file(entry.path(), tmp / entry.path().filename(),
                      fs::copy_options::overwrite_existing);
    {
        std::ifstream in(tmp / "table_5_4_3.json");
        json doc = json::parse(in);
        in.close();
        doc["rows"][0]["mu"][0] = "1/7";
        std::ofstream out(tmp / "table_5_4_3.json");
        out << doc.dump();
    }
    EnvGuard guard(tmp.string());
    auto diffs = tables::diff_table("5.4.3");
    REQUIRE(diffs.size() == 1);
    CHECK(diffs[0].find("1/7") != std::string::npos);
    CHECK_THROWS_AS(tables::check_table("5.4.3"), table_mismatch_error);
    // the ge rows tolerate a recomputed minimum above the recorded bound,
    // but not below it; start again from the clean file
    fs::copy_file(src / "table_5_4_3.json", tmp / "table_5_4_3.json",
                  fs::copy_options::overwrite_existing);
    {
        std::ifstream in(tmp / "table_5_4_3.json");
        json doc = json::parse(in);
        in.close();
        doc["rows"][1]["mu"][0] = "1/1000";  // recomputed min >= 1/1000: fine
        std::ofstream out(tmp / "table_5_4_3.json");
        out << doc.dump();
    }
    CHECK(tables::diff_table("5.4.3").empty());
    {
        std::ifstream in(tmp / "table_5_4_3.json");
        json doc = json::parse(in);
        in.close();
        doc["rows"][1]["mu"][0] = "1000/1";  // unreachable bound
        std::ofstream out(tmp / "table_5_4_3.json");
        out << doc.dump();
    }
    CHECK_FALSE(tables::diff_table("5.4.3").empty());
}

TEST_CASE("group counts come from the enumeration and drive the census") {
    // regenerate from scratch (the enumeration oracle), then compare with
    // the shipped data: both routes must agree
    auto fresh = tables::gnu_counts(true);
    auto cached = tables::gnu_counts(false);
    CHECK(fresh == cached);
    auto rep = census_exceptional(fresh, tables::nonsolvable_counts(true));
    CHECK(rep.total == 134);
    CHECK(rep.nonsolvable_total == 1);
    REQUIRE(rep.nonsolvable.size() == 1);
    CHECK(rep.nonsolvable.begin()->first == 60);
    // per-genus partition adds up
    long sum = 0;
    for (const auto& row : rep.per_genus) sum += row.group_count;
    CHECK(sum == rep.total);
}
