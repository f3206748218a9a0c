#ifndef TQS_BATCH_HPP
#define TQS_BATCH_HPP

#include "tqs/certifier.hpp"
#include "tqs/group.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace tqs {

struct BatchOptions {
    std::size_t order_cap = kDefaultOrderCap;
    std::size_t aut_cap = kDefaultAutCap;
    std::size_t series_order = 0;  // 0: 2|G|
    std::size_t threads = 1;
    bool timings = false;
    std::optional<std::filesystem::path> cache_dir;
};

struct BatchQuery {
    std::string id;
    nlohmann::json group;  // GroupSpec, parsed by the worker
    std::size_t d = 1;
};

struct BatchJob {
    std::vector<BatchQuery> queries;
    std::optional<std::filesystem::path> output_path;
    BatchOptions options;
};

/// {"queries": [{"id", "group", "d"}], "output_path"?, "options"?}; d may be
/// omitted for matrix input (defaults to the dimension).
BatchJob parse_batch_job(const nlohmann::json& j);

struct BatchReport {
    nlohmann::json json;
    std::size_t errors = 0;           // per-query errors (parse, caps, ...)
    std::size_t internal_errors = 0;  // failed self-verification or non-engine exceptions
};

/// Fans the queries out over options.threads workers; records come back in input order.
BatchReport run_batch(const BatchJob& job);

/// One record, as run_batch would produce it at the given index.
nlohmann::json run_query(const BatchQuery& q, std::size_t index, const BatchOptions& opts,
                         CertificateMemo* memo = nullptr);

/// Content-addressed store of JSON blobs keyed by (concrete table, operation, params).
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);
    std::optional<nlohmann::json> get(const GroupPtr& g, const std::string& op, const std::string& params) const;
    void put(const GroupPtr& g, const std::string& op, const std::string& params, const nlohmann::json& value) const;

    static std::string key(const GroupPtr& g, const std::string& op, const std::string& params);

private:
    std::filesystem::path dir_;
};

} // namespace tqs

#endif
