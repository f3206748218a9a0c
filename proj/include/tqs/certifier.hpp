#ifndef TQS_CERTIFIER_HPP
#define TQS_CERTIFIER_HPP

#include "tqs/automorphism.hpp"
#include "tqs/character_table.hpp"
#include "tqs/group.hpp"
#include "tqs/rational.hpp"
#include "tqs/representation.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace tqs {

enum class Verdict { CertifiedRd, VacuouslyRd, KnownNotRd, Unknown };
/// None is the rule attached to an Unknown verdict.
enum class Rule { R1Trivial, NoFaithfulRep, CounterexampleDB, ThmRd2, StronglyRd, ThmRd1, Composition, ScalarMuN, None };
enum class Scope { Group, Representation };

const char* to_string(Verdict v);
const char* to_string(Rule r);
const char* to_string(Scope s);

struct R1Witness {};

struct NoFaithfulWitness {
    std::vector<long> irreducible_degrees;
};

struct CounterexampleWitness {
    std::string entry;
    std::vector<Elem> isomorphism;  // G -> database group, by element
};

struct ThmRd2Witness {
    std::size_t order = 0;
    Integer d_factorial;
    Integer gcd;
};

struct StronglyRdWitness {
    std::vector<AbstractRepresentation> representations;   // every faithful degree-d representation
    std::vector<std::vector<std::uint32_t>> reflection_classes;  // per representation
};

struct ThmRd1Witness {
    std::vector<Elem> center;
    std::vector<Elem> domain_generators;
    std::size_t aut_order = 0;
    std::size_t inner_order = 0;
    std::size_t out_order = 0;
    /// Generators of a complement of Inn in Aut, as images of domain_generators.
    std::vector<std::vector<Elem>> complement_generators;
    std::size_t complement_order = 0;
    bool group_perfect = false;
    std::vector<std::vector<Elem>> normal_subgroups;
    std::vector<bool> perfect;
};

struct RdCertificate;

struct CompositionWitness {
    std::vector<Elem> normal_subgroup;
    StronglyRdWitness strong;
    std::shared_ptr<const RdCertificate> quotient;
};

struct ScalarWitness {
    std::size_t n = 0;
    std::size_t gcd = 0;
    Elem generator = 0;
    CyclotomicNumber scalar;
};

using Witness = std::variant<std::monostate, R1Witness, NoFaithfulWitness, CounterexampleWitness, ThmRd2Witness,
                             StronglyRdWitness, ThmRd1Witness, CompositionWitness, ScalarWitness>;

/// Raw condition-by-condition outcome of the Aut/Out criterion, kept whenever it was tried.
struct ThmRd1Findings {
    bool center_trivial = false;
    std::size_t center_order = 0;
    bool group_perfect = false;
    bool proper_normals_perfect = false;
    std::optional<std::size_t> aut_order;
    std::optional<std::size_t> out_order;
    std::optional<bool> aut_splits;
};

struct RdCertificate {
    std::string group_id;
    std::size_t d = 0;
    Verdict verdict = Verdict::Unknown;
    Rule rule = Rule::None;
    Scope scope = Scope::Group;
    Witness witness;
    double timing_ms = 0;
    std::optional<ThmRd1Findings> thm_rd1;
};

struct CounterexampleEntry {
    std::string name;
    GroupPtr group;
    std::size_t d_min = 2;
    std::size_t d_max = 0;  // 0: unbounded
};

/// Groups known not to be R_d. The built-in list holds exactly one fact: C_2 for d >= 2.
class CounterexampleDB {
public:
    static const CounterexampleDB& builtin();
    void add(CounterexampleEntry e) { entries_.push_back(std::move(e)); }
    const std::vector<CounterexampleEntry>& entries() const noexcept { return entries_; }
    const CounterexampleEntry* find(const std::string& name) const;
    std::optional<CounterexampleWitness> match(const GroupPtr& g, std::size_t d) const;

private:
    std::vector<CounterexampleEntry> entries_;
};

/// Shared memo of group-level certificates keyed by (fingerprint, d). A hit
/// needs the identical multiplication table, since witnesses are element indices.
class CertificateMemo {
public:
    std::optional<RdCertificate> lookup(const GroupPtr& g, std::size_t d) const;
    void store(const GroupPtr& g, std::size_t d, const RdCertificate& cert);
    std::size_t size() const;

private:
    mutable std::mutex mu_;
    std::map<std::string, std::vector<std::pair<GroupPtr, RdCertificate>>> map_;
};

struct RdQuery {
    GroupPtr group;
    std::size_t d = 1;
    const MatrixRepresentation* rep = nullptr;
    std::string group_id;
};

struct CertifyOptions {
    std::size_t aut_cap = kDefaultAutCap;
    std::size_t composition_depth = 4;
    const CounterexampleDB* db = nullptr;  // builtin when null
    CertificateMemo* memo = nullptr;
};

/// First applicable rule in the order R1Trivial, NoFaithfulRep, CounterexampleDB,
/// ThmRd2, StronglyRd, ThmRd1, Composition, ScalarMuN; otherwise Unknown.
RdCertificate certify(const RdQuery& q, const CertifyOptions& opts = {});

/// Trivial center, split Aut -> Out, and G perfect or all proper normal subgroups perfect.
std::optional<ThmRd1Witness> certify_thm_rd1(const GroupPtr& g, std::size_t aut_cap = kDefaultAutCap,
                                             ThmRd1Findings* findings = nullptr);
std::optional<ThmRd2Witness> certify_thm_rd2(std::size_t group_order, std::size_t d);
std::optional<StronglyRdWitness> certify_strongly_rd(const CharacterTable& t, std::size_t d);
std::optional<CompositionWitness> certify_composition(const GroupPtr& g, std::size_t d, const CertifyOptions& opts = {});
/// Image exactly mu_n Id and gcd(n, d) = 1.
std::optional<ScalarWitness> certify_scalar_mu_n(const MatrixRepresentation& rep, std::size_t d);

/// Certificate about the specific singularity A^d/G given by q.rep: ScalarMuN
/// when it applies, else a group-level proof that covers every representation.
RdCertificate certify_singularity(const RdQuery& q, const CertifyOptions& opts = {});

/// Re-validates the witness against the group without rerunning the searches.
bool verify_certificate(const RdCertificate& cert, const RdQuery& q, const CounterexampleDB& db,
                        std::string* reason = nullptr);
inline bool verify_certificate(const RdCertificate& cert, const RdQuery& q) {
    return verify_certificate(cert, q, CounterexampleDB::builtin());
}

} // namespace tqs

#endif
