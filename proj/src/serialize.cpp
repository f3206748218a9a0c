#include "tqs/serialize.hpp"

#include "tqs/errors.hpp"

namespace tqs {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where, std::string("missing field \"") + key + "\"");
    return *it;
}

long as_long(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
    return j.get<long>();
}

unsigned as_param(const json& params, std::size_t i, const std::string& where) {
    if (!params.is_array() || params.size() <= i) throw ParseError(where, "missing parameter " + std::to_string(i));
    const long v = as_long(params[i], where + "/" + std::to_string(i));
    if (v < 1 || v > 100000) throw ParseError(where + "/" + std::to_string(i), "parameter out of range");
    return static_cast<unsigned>(v);
}

json integer_json(const Integer& z) { return z.get_str(); }

json strong_json(const StronglyRdWitness& w) {
    json reps = json::array();
    for (std::size_t i = 0; i < w.representations.size(); ++i)
        reps.push_back({{"multiplicities", w.representations[i].multiplicities},
                        {"reflection_classes", w.reflection_classes[i]}});
    return {{"count", w.representations.size()}, {"representations", reps}};
}

json witness_json(const Witness& w) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, R1Witness>) {
                return json::object();
            } else if constexpr (std::is_same_v<T, NoFaithfulWitness>) {
                return {{"irreducible_degrees", x.irreducible_degrees}};
            } else if constexpr (std::is_same_v<T, CounterexampleWitness>) {
                return {{"entry", x.entry}, {"isomorphism", x.isomorphism}};
            } else if constexpr (std::is_same_v<T, ThmRd2Witness>) {
                return {{"order", x.order}, {"d_factorial", integer_json(x.d_factorial)}, {"gcd", integer_json(x.gcd)}};
            } else if constexpr (std::is_same_v<T, StronglyRdWitness>) {
                return strong_json(x);
            } else if constexpr (std::is_same_v<T, ThmRd1Witness>) {
                json normals = json::array();
                for (std::size_t i = 0; i < x.normal_subgroups.size(); ++i)
                    normals.push_back({{"order", x.normal_subgroups[i].size()},
                                       {"perfect", static_cast<bool>(x.perfect[i])},
                                       {"members", x.normal_subgroups[i]}});
                return {{"center", x.center},
                        {"domain_generators", x.domain_generators},
                        {"aut_order", x.aut_order},
                        {"inner_order", x.inner_order},
                        {"out_order", x.out_order},
                        {"complement_order", x.complement_order},
                        {"complement_generators", x.complement_generators},
                        {"group_perfect", x.group_perfect},
                        {"normal_subgroups", normals}};
            } else if constexpr (std::is_same_v<T, CompositionWitness>) {
                return {{"normal_subgroup", x.normal_subgroup},
                        {"normal_subgroup_order", x.normal_subgroup.size()},
                        {"strongly_rd", strong_json(x.strong)},
                        {"quotient", x.quotient ? to_json(*x.quotient) : json(nullptr)}};
            } else {
                return {{"n", x.n}, {"gcd", x.gcd}, {"generator", x.generator}, {"scalar", to_json(x.scalar)}};
            }
        },
        w);
}

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

} // namespace

json to_json(const CyclotomicNumber& x) {
    const CyclotomicNumber r = cyc_reduce(x);
    json coeffs = json::array();
    for (const auto& q : r.coeffs()) coeffs.push_back(to_wire(q));
    return {{"n", r.conductor()}, {"coeffs", coeffs}};
}

CyclotomicNumber cyclotomic_from_json(const json& j, const std::string& where) {
    if (j.is_string()) {
        try {
            return CyclotomicNumber(parse_rational(j.get<std::string>()));
        } catch (const ParseError& e) {
            throw ParseError(where, e.what());
        }
    }
    if (j.is_number_integer()) return CyclotomicNumber(j.get<long>());
    if (!j.is_object()) throw ParseError(where, "expected a cyclotomic number");
    const long n = as_long(field(j, "n", where), where + "/n");
    if (n < 1 || static_cast<unsigned long>(n) > kMaxConductor) throw ParseError(where + "/n", "conductor out of range");
    const json& c = field(j, "coeffs", where);
    if (!c.is_array()) throw ParseError(where + "/coeffs", "expected an array");
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::string loc = where + "/coeffs/" + std::to_string(i);
        if (!c[i].is_string()) throw ParseError(loc, "rationals are written as \"p/q\" strings");
        try {
            coeffs.push_back(parse_rational(c[i].get<std::string>()));
        } catch (const ParseError& e) {
            throw ParseError(loc, e.what());
        }
    }
    try {
        return CyclotomicNumber::from_coeffs(static_cast<unsigned long>(n), std::move(coeffs));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(where, e.what());
    }
}

json to_json(const CycMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) {
            const CyclotomicNumber x = cyc_reduce(m(i, k));
            row.push_back(x.is_rational() ? json(to_wire(x.to_rational())) : to_json(x));
        }
        rows.push_back(row);
    }
    return rows;
}

CycMatrix matrix_from_json(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim) throw ParseError(where, "expected " + std::to_string(dim) + " rows");
    CycMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string rw = where + "/" + std::to_string(i);
        if (!j[i].is_array() || j[i].size() != dim) throw ParseError(rw, "expected " + std::to_string(dim) + " entries");
        for (std::size_t k = 0; k < dim; ++k) m(i, k) = cyclotomic_from_json(j[i][k], rw + "/" + std::to_string(k));
    }
    return m;
}

PermutationSpec catalog_permutations(const json& c, const std::string& where) {
    const json& fj = field(c, "family", where);
    if (!fj.is_string()) throw ParseError(where + "/family", "expected a string");
    const std::string family = fj.get<std::string>();
    const json params = c.contains("params") ? c["params"] : json::array();
    const std::string pw = where + "/params";
    if (!params.is_array()) throw ParseError(pw, "expected an array");
    try {
        if (family == "cyclic") return cyclic_spec(as_param(params, 0, pw));
        if (family == "dihedral") return dihedral_spec(as_param(params, 0, pw));
        if (family == "symmetric") return symmetric_spec(as_param(params, 0, pw));
        if (family == "alternating") return alternating_spec(as_param(params, 0, pw));
        if (family == "quaternion") return quaternion_spec(as_param(params, 0, pw));
        if (family == "elementary_abelian") return elementary_abelian_spec(as_param(params, 0, pw), as_param(params, 1, pw));
        if (family == "direct_product") {
            std::vector<PermutationSpec> f;
            for (std::size_t i = 0; i < params.size(); ++i) {
                const json& sub = params[i].contains("catalog") ? params[i]["catalog"] : params[i];
                f.push_back(catalog_permutations(sub, pw + "/" + std::to_string(i)));
            }
            return direct_product_spec(f);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(where, e.what());
    }
    throw ParseError(where + "/family", "unknown family \"" + family + "\"");
}

ParsedGroup parse_group_spec(const json& spec, std::size_t order_cap) {
    if (!spec.is_object()) throw ParseError("", "group spec must be an object");
    ParsedGroup out;
    std::optional<PermutationSpec> perm;
    if (spec.contains("catalog")) {
        out.kind = "catalog";
        perm = catalog_permutations(spec["catalog"], "/catalog");
    } else if (spec.contains("permutation")) {
        out.kind = "permutation";
        const json& p = spec["permutation"];
        const long degree = as_long(field(p, "degree", "/permutation"), "/permutation/degree");
        if (degree < 1 || degree > 100000) throw ParseError("/permutation/degree", "degree out of range");
        const json& gens = field(p, "generators", "/permutation");
        if (!gens.is_array()) throw ParseError("/permutation/generators", "expected an array");
        PermutationSpec s;
        s.degree = static_cast<std::size_t>(degree);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const std::string loc = "/permutation/generators/" + std::to_string(i);
            if (!gens[i].is_array() || gens[i].size() != s.degree)
                throw ParseError(loc, "expected " + std::to_string(degree) + " 0-based images");
            Permutation g;
            for (std::size_t k = 0; k < gens[i].size(); ++k) {
                const long v = as_long(gens[i][k], loc + "/" + std::to_string(k));
                if (v < 0 || v >= degree) throw ParseError(loc + "/" + std::to_string(k), "image out of range");
                g.push_back(static_cast<std::uint32_t>(v));
            }
            std::vector<char> hit(s.degree, 0);
            for (auto v : g)
                if (hit[v]++) throw ParseError(loc, "image array is not a permutation");
            s.generators.push_back(std::move(g));
        }
        perm = std::move(s);
    } else if (spec.contains("matrix")) {
        out.kind = "matrix";
        const json& m = spec["matrix"];
        const long dim = as_long(field(m, "dimension", "/matrix"), "/matrix/dimension");
        if (dim < 1 || dim > 64) throw ParseError("/matrix/dimension", "dimension out of range");
        const json& gens = field(m, "generators", "/matrix");
        if (!gens.is_array()) throw ParseError("/matrix/generators", "expected an array");
        std::vector<CycMatrix> mats;
        for (std::size_t i = 0; i < gens.size(); ++i)
            mats.push_back(matrix_from_json(gens[i], static_cast<std::size_t>(dim), "/matrix/generators/" + std::to_string(i)));
        MatrixGroup mg = group_from_matrices(static_cast<std::size_t>(dim), mats, order_cap);
        out.group = mg.group;
        out.degree = static_cast<std::size_t>(dim);
        out.rep = std::move(mg.rep);
        return out;
    } else {
        throw ParseError("", "group spec needs one of \"catalog\", \"permutation\", \"matrix\"");
    }
    PermutationGroup pg = group_from_permutations(perm->degree, perm->generators, order_cap);
    out.group = pg.group;
    out.degree = pg.degree;
    out.permutations = std::move(pg.elements);
    return out;
}

json serialize_group_spec(const ParsedGroup& g) {
    if (g.rep) {
        json gens = json::array();
        for (Elem s : g.group->generators()) gens.push_back(to_json((*g.rep)(s)));
        return {{"matrix", {{"dimension", g.rep->dimension}, {"generators", gens}}}};
    }
    json gens = json::array();
    for (Elem s : g.group->generators()) gens.push_back(g.permutations[s]);
    return {{"permutation", {{"degree", g.degree}, {"generators", gens}}}};
}

json to_json(const CharacterTable& t) {
    const auto& conj = t.conj();
    json classes = json::array();
    for (std::size_t c = 0; c < conj.classes.size(); ++c)
        classes.push_back({{"size", conj.classes[c].size()},
                           {"order", conj.rep_order[c]},
                           {"representative", conj.representative[c]},
                           {"power_map", conj.power_map[c]}});
    json irr = json::array();
    for (const auto& chi : t.irreducibles()) {
        json vals = json::array();
        for (const auto& v : chi.values) vals.push_back(to_json(v));
        irr.push_back({{"degree", chi.degree}, {"values", vals}});
    }
    return {{"schema_version", kSchemaVersion},
            {"group_order", t.group()->order()},
            {"exponent", t.exponent()},
            {"prime", t.prime()},
            {"classes", classes},
            {"irreducibles", irr}};
}

json to_json(const RdCertificate& c, bool with_timing) {
    json j = {{"group_id", c.group_id},
              {"d", c.d},
              {"verdict", to_string(c.verdict)},
              {"rule", to_string(c.rule)},
              {"scope", to_string(c.scope)},
              {"witness", witness_json(c.witness)},
              {"engine_version", kEngineVersion},
              {"timing_ms", with_timing ? c.timing_ms : 0.0}};
    if (c.thm_rd1) {
        const auto& f = *c.thm_rd1;
        j["thm_rd1_findings"] = {{"center_order", f.center_order},
                                 {"center_trivial", f.center_trivial},
                                 {"group_perfect", f.group_perfect},
                                 {"proper_normals_perfect", f.proper_normals_perfect},
                                 {"aut_order", opt(f.aut_order)},
                                 {"out_order", opt(f.out_order)},
                                 {"aut_splits", opt(f.aut_splits)}};
    }
    return j;
}

json to_json(const SingularityDescriptor& s) {
    json molien = json::array();
    for (const auto& q : s.molien.coeffs()) molien.push_back(to_wire(q));
    return {{"group_order", s.group->order()},
            {"dimension", s.dimension},
            {"reflection_subgroup_order", s.reflection_subgroup ? s.reflection_subgroup->order() : 0},
            {"pseudoreflection_count", s.pseudoreflection_count},
            {"is_smooth", s.is_smooth},
            {"fundamental_group",
             {{"order", s.fundamental_group ? s.fundamental_group->order() : 0},
              {"label", s.fundamental_group_label.empty() ? json(nullptr) : json(s.fundamental_group_label)}}},
            {"scalar_order", s.scalar_order},
            {"projective_image_order", s.projective_image_order},
            {"molien_series", molien},
            {"shephard_todd_degrees", opt(s.degrees)},
            {"degrees_match_pseudoreflection_count", s.degrees_match_count},
            {"character_and_matrix_paths_agree", s.character_and_matrix_paths_agree},
            {"quotient_reflection_free", opt(s.quotient_reflection_free)}};
}

} // namespace tqs
