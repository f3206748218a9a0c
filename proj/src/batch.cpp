#include "tqs/batch.hpp"

#include "tqs/automorphism.hpp"
#include "tqs/errors.hpp"
#include "tqs/serialize.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

namespace tqs {

using nlohmann::json;

namespace {

std::size_t size_option(const json& o, const char* key, std::size_t fallback) {
    if (!o.contains(key)) return fallback;
    const json& v = o[key];
    if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(std::string("/options/") + key, "expected a non-negative integer");
    return v.get<std::size_t>();
}

// FNV-1a; stable across platforms and runs, unlike std::hash.
std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

json error_record(const char* type, const std::string& message, const std::string& location = "") {
    json e = {{"type", type}, {"message", message}};
    if (!location.empty()) e["location"] = location;
    return e;
}

} // namespace

BatchJob parse_batch_job(const json& j) {
    if (!j.is_object()) throw ParseError("", "batch job must be an object");
    BatchJob job;
    if (!j.contains("queries") || !j["queries"].is_array()) throw ParseError("/queries", "expected an array");
    const json& qs = j["queries"];
    for (std::size_t i = 0; i < qs.size(); ++i) {
        const std::string loc = "/queries/" + std::to_string(i);
        const json& q = qs[i];
        if (!q.is_object()) throw ParseError(loc, "expected an object");
        BatchQuery bq;
        bq.id = q.contains("id") && q["id"].is_string() ? q["id"].get<std::string>() : "q" + std::to_string(i);
        if (!q.contains("group")) throw ParseError(loc, "missing field \"group\"");
        bq.group = q["group"];
        if (q.contains("d")) {
            if (!q["d"].is_number_integer() || q["d"].get<long long>() < 1) throw ParseError(loc + "/d", "expected a positive integer");
            bq.d = q["d"].get<std::size_t>();
        } else {
            bq.d = 0;  // matrix input: the representation's dimension
        }
        job.queries.push_back(std::move(bq));
    }
    if (j.contains("output_path")) {
        if (!j["output_path"].is_string()) throw ParseError("/output_path", "expected a string");
        job.output_path = j["output_path"].get<std::string>();
    }
    if (j.contains("options")) {
        const json& o = j["options"];
        if (!o.is_object()) throw ParseError("/options", "expected an object");
        auto& opt = job.options;
        opt.order_cap = size_option(o, "order_cap", opt.order_cap);
        opt.aut_cap = size_option(o, "aut_cap", opt.aut_cap);
        opt.series_order = size_option(o, "series_order", opt.series_order);
        opt.threads = size_option(o, "threads", opt.threads);
        if (o.contains("timings")) opt.timings = o["timings"].get<bool>();
        if (o.contains("cache_dir")) opt.cache_dir = o["cache_dir"].get<std::string>();
    }
    return job;
}

// ---------------------------------------------------------------- cache

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::string ResultCache::key(const GroupPtr& g, const std::string& op, const std::string& params) {
    // The fingerprint names the isomorphism type loosely; the table hash pins the
    // concrete labelling that witnesses refer to.
    std::ostringstream os;
    os << fingerprint(g).key() << "#" << hex64(g->table_hash()) << "#" << op << "#" << params << "#" << kEngineVersion;
    return os.str();
}

std::optional<json> ResultCache::get(const GroupPtr& g, const std::string& op, const std::string& params) const {
    const std::string k = key(g, op, params);
    std::ifstream in(dir_ / (hex64(fnv1a(k)) + ".json"));
    if (!in) return std::nullopt;
    try {
        json blob = json::parse(in);
        if (blob.value("key", "") != k) return std::nullopt;  // hash collision
        return blob["value"];
    } catch (const json::exception&) {
        return std::nullopt;
    }
}

void ResultCache::put(const GroupPtr& g, const std::string& op, const std::string& params, const json& value) const {
    const std::string k = key(g, op, params);
    const auto final_path = dir_ / (hex64(fnv1a(k)) + ".json");
    // write-then-rename so concurrent workers never see a torn blob
    std::ostringstream tmp_name;
    tmp_name << hex64(fnv1a(k)) << ".tmp." << std::this_thread::get_id();
    const auto tmp = dir_ / tmp_name.str();
    {
        std::ofstream out(tmp);
        out << json{{"key", k}, {"value", value}}.dump();
    }
    std::error_code ec;
    std::filesystem::rename(tmp, final_path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

// ---------------------------------------------------------------- runner

json run_query(const BatchQuery& q, std::size_t index, const BatchOptions& opts, CertificateMemo* memo) {
    json rec = {{"index", index}, {"id", q.id}};
    std::optional<ResultCache> cache;
    if (opts.cache_dir && !opts.timings) cache.emplace(*opts.cache_dir);
    try {
        const ParsedGroup pg = parse_group_spec(q.group, opts.order_cap);
        const std::size_t d = q.d ? q.d : (pg.rep ? pg.rep->dimension : 0);
        if (d == 0) throw ParseError("/d", "d is required for non-matrix input");
        rec["d"] = d;
        rec["group"] = {{"kind", pg.kind}, {"order", pg.group->order()}, {"label", identify_group(pg.group)}};

        CertifyOptions copts;
        copts.aut_cap = opts.aut_cap;
        copts.memo = memo;
        const std::string params = "d=" + std::to_string(d) + ";aut_cap=" + std::to_string(opts.aut_cap);

        std::optional<json> cached = cache ? cache->get(pg.group, "certify", params) : std::nullopt;
        if (cached) {
            rec["certificate"] = (*cached)["certificate"];
            rec["certificate"]["group_id"] = q.id;
            rec["verified"] = (*cached)["verified"];
        } else {
            const RdQuery rq{pg.group, d, nullptr, q.id};
            const RdCertificate cert = certify(rq, copts);
            std::string reason;
            const bool ok = verify_certificate(cert, rq, CounterexampleDB::builtin(), &reason);
            rec["certificate"] = to_json(cert, opts.timings);
            rec["verified"] = ok;
            if (!ok) rec["verification_failure"] = reason;
            if (cache && ok) cache->put(pg.group, "certify", params, {{"certificate", rec["certificate"]}, {"verified", ok}});
        }

        if (pg.rep && pg.rep->dimension == d) {
            const std::string sparams = params + ";series=" + std::to_string(opts.series_order) + ";rep=" +
                                        hex64(fnv1a(serialize_group_spec(pg).dump()));
            std::optional<json> scached = cache ? cache->get(pg.group, "singularity", sparams) : std::nullopt;
            if (scached) {
                rec["singularity"] = (*scached)["singularity"];
                rec["singularity_certificate"] = (*scached)["singularity_certificate"];
                rec["singularity_certificate"]["group_id"] = q.id;
                rec["singularity_verified"] = (*scached)["singularity_verified"];
            } else {
                const SingularityDescriptor s = analyze_singularity(*pg.rep, opts.series_order);
                const RdQuery rq{pg.group, d, &*pg.rep, q.id};
                CertifyOptions sopts = copts;
                sopts.memo = nullptr;
                const RdCertificate sc = certify_singularity(rq, sopts);
                std::string reason;
                const bool ok = verify_certificate(sc, rq, CounterexampleDB::builtin(), &reason);
                rec["singularity"] = to_json(s);
                rec["singularity_certificate"] = to_json(sc, opts.timings);
                rec["singularity_verified"] = ok;
                if (!ok) rec["singularity_verification_failure"] = reason;
                if (cache && ok)
                    cache->put(pg.group, "singularity", sparams,
                               {{"singularity", rec["singularity"]},
                                {"singularity_certificate", rec["singularity_certificate"]},
                                {"singularity_verified", ok}});
            }
        }
    } catch (const ParseError& e) {
        rec["error"] = error_record("ParseError", e.what(), e.location());
    } catch (const OrderCapExceeded& e) {
        rec["error"] = error_record("OrderCapExceeded", e.what());
    } catch (const AutCapExceeded& e) {
        rec["error"] = error_record("AutCapExceeded", e.what());
    } catch (const ConductorOverflow& e) {
        rec["error"] = error_record("ConductorOverflow", e.what());
    } catch (const NonInvertibleGenerator& e) {
        rec["error"] = error_record("NonInvertibleGenerator", e.what());
    } catch (const Error& e) {
        rec["error"] = error_record("Error", e.what());
    } catch (const json::exception& e) {
        rec["error"] = error_record("ParseError", e.what());
    } catch (const std::exception& e) {
        rec["error"] = error_record("InternalError", e.what());
    }
    return rec;
}

BatchReport run_batch(const BatchJob& job) {
    const std::size_t n = job.queries.size();
    std::vector<json> records(n);
    CertificateMemo memo;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) records[i] = run_query(job.queries[i], i, job.options, &memo);
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(job.options.threads, n));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    BatchReport rep;
    std::map<std::string, std::size_t> verdicts, rules, error_types;
    for (const auto& r : records) {
        if (r.contains("error")) {
            ++rep.errors;
            const std::string type = r["error"]["type"];
            ++error_types[type];
            if (type == "InternalError") ++rep.internal_errors;
            continue;
        }
        ++verdicts[r["certificate"]["verdict"].get<std::string>()];
        ++rules[r["certificate"]["rule"].get<std::string>()];
        if (!r["verified"].get<bool>()) ++rep.internal_errors;
        if (r.contains("singularity_verified") && !r["singularity_verified"].get<bool>()) ++rep.internal_errors;
    }
    rep.json = {{"schema_version", kSchemaVersion},
                {"engine_version", kEngineVersion},
                {"records", records},
                {"summary",
                 {{"queries", n},
                  {"verdicts", verdicts},
                  {"rules", rules},
                  {"errors", rep.errors},
                  {"error_types", error_types},
                  {"internal_errors", rep.internal_errors}}}};
    return rep;
}

} // namespace tqs
