// tqs: certify R_d conditions, analyze quotient singularities, print character tables.
//
// Permutations on the wire are 0-based image arrays: [1,2,0] is the 3-cycle 0->1->2->0.

#include "tqs/automorphism.hpp"
#include "tqs/batch.hpp"
#include "tqs/catalog.hpp"
#include "tqs/errors.hpp"
#include "tqs/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tqs;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kParse = 2, kCap = 3, kInternal = 4 };

// Inline JSON, a builtin catalog id, or a path to a JSON file.
json load_group(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return json::parse(arg);
    for (const auto* cat : {&builtin_catalog(), &builtin_matrix_catalog()})
        for (const auto& e : *cat)
            if (e.id == arg) return e.spec;
    std::ifstream in(arg);
    if (!in) throw ParseError("", "cannot open group file '" + arg + "'");
    return json::parse(in);
}

int exit_for(const json& record) {
    if (!record.contains("error")) {
        const bool ok = record.value("verified", true) && record.value("singularity_verified", true);
        return ok ? kOk : kInternal;
    }
    const std::string type = record["error"]["type"];
    if (type == "ParseError") return kParse;
    if (type == "OrderCapExceeded" || type == "AutCapExceeded") return kCap;
    if (type == "InternalError") return kInternal;
    return kParse;  // malformed input of another kind (non-invertible generator, conductor)
}

std::string describe(const json& cert) {
    std::ostringstream os;
    os << cert["verdict"].get<std::string>();
    if (cert["rule"] != "None") os << " via " << cert["rule"].get<std::string>();
    os << " (" << cert["scope"].get<std::string>() << " scope)";
    return os.str();
}

void print_record_text(const json& r, std::ostream& os) {
    os << r["id"].get<std::string>();
    if (r.contains("error")) {
        os << ": error " << r["error"]["type"].get<std::string>() << ": " << r["error"]["message"].get<std::string>() << "\n";
        return;
    }
    const auto& g = r["group"];
    os << "  |G|=" << g["order"];
    if (!g["label"].get<std::string>().empty()) os << " (" << g["label"].get<std::string>() << ")";
    os << "  d=" << r["d"] << "\n";
    os << "  certificate: " << describe(r["certificate"]) << (r["verified"].get<bool>() ? ", verified" : ", NOT verified")
       << "\n";
    if (r.contains("singularity")) {
        const auto& s = r["singularity"];
        os << "  singularity: " << (s["is_smooth"].get<bool>() ? "smooth" : "singular")
           << ", pseudoreflections=" << s["pseudoreflection_count"]
           << ", reflection subgroup order=" << s["reflection_subgroup_order"]
           << ", fundamental group order=" << s["fundamental_group"]["order"];
        if (!s["fundamental_group"]["label"].is_null()) os << " (" << s["fundamental_group"]["label"].get<std::string>() << ")";
        os << "\n";
        if (!s["shephard_todd_degrees"].is_null()) os << "  invariant degrees: " << s["shephard_todd_degrees"].dump() << "\n";
        os << "  singularity certificate: " << describe(r["singularity_certificate"])
           << (r["singularity_verified"].get<bool>() ? ", verified" : ", NOT verified") << "\n";
    }
}

void print_table_text(const CharacterTable& t, std::ostream& os) {
    const auto& conj = t.conj();
    os << "|G| = " << t.group()->order() << ", " << conj.classes.size() << " classes, exponent " << t.exponent() << "\n";
    os << "class sizes:";
    for (std::size_t c = 0; c < conj.classes.size(); ++c) os << " " << conj.classes[c].size();
    os << "\nelement orders:";
    for (auto o : conj.rep_order) os << " " << o;
    os << "\n";
    for (std::size_t i = 0; i < t.irreducibles().size(); ++i) {
        os << "chi_" << i << ":";
        for (const auto& v : t.irreducibles()[i].values) os << "  " << v.to_string();
        os << "\n";
    }
}

void emit(const json& j, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact character theory and R_d certification for finite groups"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    BatchOptions opts;
    std::string format = "json";
    std::string cache_dir;
    app.add_option("--order-cap", opts.order_cap, "largest group order to enumerate")->capture_default_str();
    app.add_option("--aut-cap", opts.aut_cap, "largest group order for automorphism searches")->capture_default_str();
    app.add_option("--series-order", opts.series_order, "Molien truncation order (0: 2|G|)")->capture_default_str();
    app.add_option("--threads", opts.threads, "batch worker threads")->capture_default_str();
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_flag("--timings", opts.timings, "include wall-clock timings (reports are then not byte-stable)");
    app.add_option("--cache-dir", cache_dir, "directory for the content-addressed result cache");

    std::string group_arg, job_path, output;
    std::size_t d = 0;

    auto* certify_cmd = app.add_subcommand("certify", "certify one (group, d) query");
    certify_cmd->add_option("--group", group_arg, "GroupSpec: inline JSON, catalog id, or file")->required();
    certify_cmd->add_option("--d", d, "dimension (defaults to the dimension of matrix input)");

    auto* batch_cmd = app.add_subcommand("batch", "run a batch job");
    batch_cmd->add_option("--job", job_path, "batch job file")->required();
    batch_cmd->add_option("--output", output, "report path (overrides the job's output_path; '-' for stdout)");

    auto* sing_cmd = app.add_subcommand("analyze-singularity", "describe A^d/G for matrix input");
    sing_cmd->add_option("--group", group_arg, "matrix GroupSpec: inline JSON, catalog id, or file")->required();

    auto* table_cmd = app.add_subcommand("table", "print the character table");
    table_cmd->add_option("--group", group_arg, "GroupSpec: inline JSON, catalog id, or file")->required();

    auto* list_cmd = app.add_subcommand("catalog", "list the builtin catalog ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kParse;
    }
    if (!cache_dir.empty()) opts.cache_dir = cache_dir;
    const bool text = format == "text";

    try {
        if (*list_cmd) {
            json out = json::array();
            for (const auto* cat : {&builtin_catalog(), &builtin_matrix_catalog()})
                for (const auto& e : *cat) {
                    if (text) std::cout << e.id << "\t" << e.spec.dump() << "\n";
                    out.push_back({{"id", e.id}, {"group", e.spec}});
                }
            if (!text) std::cout << out.dump(2) << "\n";
            return kOk;
        }

        if (*certify_cmd || *sing_cmd) {
            BatchQuery q{!group_arg.empty() && group_arg.front() == '{' ? "inline" : group_arg, load_group(group_arg), *certify_cmd ? d : 0};
            if (*sing_cmd && !q.group.contains("matrix")) {
                std::cerr << "analyze-singularity needs matrix input\n";
                return kParse;
            }
            json rec = run_query(q, 0, opts);
            if (text) print_record_text(rec, std::cout);
            else std::cout << rec.dump(2) << "\n";
            if (rec.contains("error")) std::cerr << rec["error"]["message"].get<std::string>() << "\n";
            return exit_for(rec);
        }

        if (*table_cmd) {
            const ParsedGroup pg = parse_group_spec(load_group(group_arg), opts.order_cap);
            const CharacterTable t(pg.group);
            if (text) print_table_text(t, std::cout);
            else std::cout << to_json(t).dump(2) << "\n";
            return kOk;
        }

        if (*batch_cmd) {
            std::ifstream in(job_path);
            if (!in) throw ParseError("", "cannot open job file '" + job_path + "'");
            BatchJob job = parse_batch_job(json::parse(in));
            // command-line flags win over the job's options when given
            auto* root = &app;
            if (root->count("--order-cap")) job.options.order_cap = opts.order_cap;
            if (root->count("--aut-cap")) job.options.aut_cap = opts.aut_cap;
            if (root->count("--series-order")) job.options.series_order = opts.series_order;
            if (root->count("--threads")) job.options.threads = opts.threads;
            if (opts.timings) job.options.timings = true;
            if (opts.cache_dir) job.options.cache_dir = opts.cache_dir;
            if (!output.empty()) job.output_path = output;

            const BatchReport rep = run_batch(job);
            if (text) {
                for (const auto& r : rep.json["records"]) print_record_text(r, std::cout);
                std::cout << "summary: " << rep.json["summary"].dump() << "\n";
                if (job.output_path && job.output_path->string() != "-") emit(rep.json, job.output_path->string());
            } else {
                emit(rep.json, job.output_path ? job.output_path->string() : "");
            }
            return rep.internal_errors ? kInternal : kOk;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCap;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kOk;
}
