#include "support.hpp"

#include "tqs/batch.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace tqs;
using namespace tqs::test;
using nlohmann::json;

namespace {

std::string location_of(const json& spec) {
    try {
        parse_group_spec(spec);
    } catch (const ParseError& e) {
        return e.location();
    }
    return "<no error>";
}

BatchJob job_of(const json& j) { return parse_batch_job(j); }

json named(const std::string& id, std::size_t d) {
    for (const auto* cat : {&builtin_catalog(), &builtin_matrix_catalog()})
        for (const auto& e : *cat)
            if (e.id == id) return {{"id", id}, {"group", e.spec}, {"d", d}};
    throw std::runtime_error(id);
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("tqs-io-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST(GroupSpec, Examples) {
    const auto d4 = parse_group_spec(json::parse(R"({"catalog":{"family":"dihedral","params":[4]}})"));
    EXPECT_EQ(d4.group->order(), 8u);
    EXPECT_EQ(identify_group(d4.group), "D4");
    EXPECT_EQ(d4.kind, "catalog");

    const auto minus = parse_group_spec(
        json::parse(R"({"matrix":{"dimension":2,"generators":[[["-1/1","0/1"],["0/1","-1/1"]]]}})"));
    EXPECT_EQ(minus.group->order(), 2u);
    ASSERT_TRUE(minus.rep);
    EXPECT_EQ((*minus.rep)(1), diag({-1, -1}));
    EXPECT_EQ((*minus.rep)(0), CycMatrix::identity(2));

    const auto s5 = parse_group_spec(json::parse(R"({"permutation":{"degree":5,"generators":[[1,2,3,4,0],[1,0,2,3,4]]}})"),
                                     kCap);
    // oracle: closure of the generators as explicit permutations
    std::set<Permutation> seen{{0, 1, 2, 3, 4}};
    std::vector<Permutation> frontier(seen.begin(), seen.end());
    const std::vector<Permutation> gens = {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                Permutation q(5);
                for (std::size_t i = 0; i < 5; ++i) q[i] = g[p[i]];
                if (seen.insert(q).second) next.push_back(q);
            }
        frontier = std::move(next);
    }
    EXPECT_EQ(s5.group->order(), seen.size());
    EXPECT_EQ(seen.size(), 120u);
}

TEST(GroupSpec, ErrorLocations) {
    EXPECT_EQ(location_of(json::parse(R"({"catalog":{"family":"cyclic","params":[0]}})")), "/catalog/params/0");
    EXPECT_EQ(location_of(json::parse(R"({"catalog":{"family":"nope","params":[3]}})")), "/catalog/family");
    EXPECT_EQ(location_of(json::parse(R"({"matrix":{"dimension":2,"generators":[[["1/1","0/1"],["0/1","x"]]]}})"))
                  .rfind("/matrix/generators/0/1/1", 0),
              0u);
    EXPECT_EQ(location_of(json::parse(R"({"permutation":{"degree":3,"generators":[[0,0,1]]}})"))
                  .rfind("/permutation/generators/0", 0),
              0u);
    EXPECT_EQ(location_of(json::array()), "");
    EXPECT_THROW(parse_group_spec(json::parse(R"({"matrix":{"dimension":2,"generators":[[["1/1","0/1"],["0/1","0/1"]]]}})")),
                 NonInvertibleGenerator);
    EXPECT_THROW(parse_group_spec(json::parse(R"({"catalog":{"family":"symmetric","params":[7]}})"), 1000),
                 OrderCapExceeded);
}

TEST(GroupSpec, RoundTripIsIsomorphic) {
    for (const auto* cat : {&builtin_catalog(), &builtin_matrix_catalog()})
        for (const auto& e : *cat) {
            const auto a = parse(e.spec);
            if (a.group->order() > 720) continue;
            const json s = serialize_group_spec(a);
            const auto b = parse(json::parse(s.dump()));
            EXPECT_EQ(b.group->order(), a.group->order()) << e.id;
            EXPECT_TRUE(is_isomorphic(a.group, b.group)) << e.id;
            EXPECT_EQ(serialize_group_spec(b), s) << e.id;
            if (a.rep) {
                ASSERT_TRUE(b.rep) << e.id;
                EXPECT_EQ(b.rep->dimension, a.rep->dimension) << e.id;
            }
        }
}

TEST(Wire, CyclotomicRoundTrip) {
    const auto x = zeta(12) + CyclotomicNumber(Rational(1, 3));
    const json j = to_json(x);
    EXPECT_EQ(cyclotomic_from_json(j), x);
    EXPECT_EQ(cyclotomic_from_json(json("-3/4")), CyclotomicNumber(Rational(-3, 4)));
    EXPECT_EQ(cyclotomic_from_json(json(5)), CyclotomicNumber(5));
    for (const auto& c : j["coeffs"]) EXPECT_TRUE(c.is_string());
}

TEST(Wire, CertificateRecord) {
    CertifyOptions o;
    const auto c = certify({group("C35"), 4, nullptr, "C35"}, o);
    const json j = to_json(c);
    EXPECT_EQ(j["verdict"], "CertifiedRd");
    EXPECT_EQ(j["rule"], "ThmRd2");
    EXPECT_EQ(j["scope"], "group");
    EXPECT_EQ(j["group_id"], "C35");
    EXPECT_EQ(j["timing_ms"], 0);
}

TEST(Batch, EmptyJob) {
    const auto r = run_batch(job_of(json::parse(R"({"queries": []})")));
    EXPECT_EQ(r.errors, 0u);
    EXPECT_EQ(r.internal_errors, 0u);
    EXPECT_TRUE(r.json["records"].empty());
    EXPECT_EQ(r.json["summary"]["queries"], 0);
    EXPECT_EQ(r.json["schema_version"], kSchemaVersion);
}

TEST(Batch, CapErrorIsIsolated) {
    json j = {{"queries", json::array({named("C35", 4), named("S7", 2), named("C2", 2)})},
              {"options", {{"order_cap", 1000}}}};
    const auto r = run_batch(job_of(j));
    const auto& recs = r.json["records"];
    ASSERT_EQ(recs.size(), 3u);
    EXPECT_EQ(recs[1]["error"]["type"], "OrderCapExceeded");
    EXPECT_EQ(recs[0]["certificate"]["rule"], "ThmRd2");
    EXPECT_EQ(recs[2]["certificate"]["verdict"], "KnownNotRd");
    EXPECT_TRUE(recs[0]["verified"].get<bool>());
    EXPECT_EQ(r.errors, 1u);
    EXPECT_EQ(r.internal_errors, 0u);
}

TEST(Batch, ParseErrorsCarryLocation) {
    json j = {{"queries", json::array({{{"id", "bad"}, {"group", {{"catalog", {{"family", "cyclic"}, {"params", {-1}}}}}}, {"d", 2}},
                                       named("D4", 2)})}};
    const auto r = run_batch(job_of(j));
    const auto& e = r.json["records"][0]["error"];
    EXPECT_EQ(e["type"], "ParseError");
    EXPECT_EQ(e["location"], "/catalog/params/0");
    EXPECT_EQ(r.json["records"][1]["certificate"]["rule"], "StronglyRd");
    EXPECT_THROW(parse_batch_job(json::parse(R"({"queries": [{"group": {}, "d": 0}]})")), ParseError);
}

TEST(Batch, MatrixQueriesCarrySingularityData) {
    json q = named("mu2_A3", 3);
    q.erase("d");  // defaults to the dimension
    const auto r = run_batch(job_of({{"queries", json::array({q})}}));
    const auto& rec = r.json["records"][0];
    EXPECT_EQ(rec["d"], 3);
    EXPECT_EQ(rec["singularity_certificate"]["rule"], "ScalarMuN");
    EXPECT_EQ(rec["singularity_certificate"]["scope"], "representation");
    EXPECT_TRUE(rec["singularity_verified"].get<bool>());
    EXPECT_EQ(rec["certificate"]["verdict"], "KnownNotRd");
    EXPECT_TRUE(rec.contains("singularity"));
}

TEST(Batch, DeterministicAcrossThreadsAndCache) {
    json qs = json::array();
    for (const char* id : {"C2^2", "C3^2", "D5", "C2", "S5", "A5", "C35", "C6xC10", "F21", "Q8"}) qs.push_back(named(id, 2));
    qs.push_back(named("D6_std", 2));
    qs.push_back(named("mu3_A2", 2));
    const std::string base = run_batch(job_of({{"queries", qs}})).json.dump();
    EXPECT_EQ(run_batch(job_of({{"queries", qs}})).json.dump(), base);
    EXPECT_EQ(run_batch(job_of({{"queries", qs}, {"options", {{"threads", 4}}}})).json.dump(), base);

    TempDir dir;
    const json cached = {{"queries", qs}, {"options", {{"cache_dir", dir.path.string()}}}};
    EXPECT_EQ(run_batch(job_of(cached)).json.dump(), base);
    EXPECT_FALSE(std::filesystem::is_empty(dir.path));
    EXPECT_EQ(run_batch(job_of(cached)).json.dump(), base);  // served from the cache
}

TEST(Cache, KeysSeparateLabellingsAndParams) {
    TempDir dir;
    ResultCache cache(dir.path);
    const auto g = group("D5");
    const auto h = perm_group(5, {{1, 0, 4, 3, 2}, {1, 2, 3, 4, 0}});
    ASSERT_TRUE(is_isomorphic(g, h));
    cache.put(g, "certify", "d=2", json{{"x", 1}});
    EXPECT_EQ(cache.get(g, "certify", "d=2"), json({{"x", 1}}));
    EXPECT_FALSE(cache.get(g, "certify", "d=3"));
    EXPECT_FALSE(cache.get(g, "table", "d=2"));
    if (!h->same_table(*g)) EXPECT_FALSE(cache.get(h, "certify", "d=2"));
    EXPECT_NE(ResultCache::key(g, "certify", "d=2"), ResultCache::key(g, "certify", "d=3"));
}
