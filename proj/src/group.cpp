#include "tqs/group.hpp"

#include "tqs/detail/closure.hpp"
#include "tqs/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace tqs {

GroupPtr FiniteGroup::from_table(std::size_t order, std::vector<std::uint16_t> table, std::vector<Elem> generators) {
    if (order == 0 || order > kMaxGroupOrder) throw Error("group order out of range");
    if (table.size() != order * order) throw Error("Cayley table has wrong size");
    std::shared_ptr<FiniteGroup> g(new FiniteGroup());
    g->n_ = order;
    g->table_ = std::move(table);
    const std::size_t n = order;
    for (Elem a = 0; a < n; ++a)
        if (g->mul(0, a) != a || g->mul(a, 0) != a) throw Error("element 0 is not the identity");
    // Latin square + inverses from row scans.
    g->inv_.assign(n, 0);
    std::vector<char> seen(n);
    for (Elem a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        bool found = false;
        for (Elem b = 0; b < n; ++b) {
            const Elem c = g->mul(a, b);
            if (c >= n || seen[c]) throw Error("Cayley table row is not a permutation");
            seen[c] = 1;
            if (c == 0) {
                g->inv_[a] = b;
                found = true;
            }
        }
        if (!found) throw Error("element without inverse");
    }
    for (Elem b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (Elem a = 0; a < n; ++a) {
            const Elem c = g->mul(a, b);
            if (seen[c]) throw Error("Cayley table column is not a permutation");
            seen[c] = 1;
        }
    }
    g->orders_.assign(n, 1);
    g->exponent_ = 1;
    for (Elem a = 1; a < n; ++a) {
        unsigned k = 1;
        Elem x = a;
        while (x != 0) {
            x = g->mul(x, a);
            if (++k > n) throw Error("element of unbounded order: table is not associative");
        }
        g->orders_[a] = k;
        g->exponent_ = std::lcm(g->exponent_, k);
    }
    for (Elem s : generators)
        if (s >= n) throw Error("generator index out of range");
    g->gens_ = std::move(generators);
    g->abelian_ = true;
    for (Elem s : g->gens_)
        for (Elem t : g->gens_)
            if (g->mul(s, t) != g->mul(t, s)) g->abelian_ = false;

    // Generation check: closure of the generators must be everything.
    {
        std::vector<char> in(n, 0);
        std::vector<Elem> queue{0};
        in[0] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Elem s : g->gens_) {
                const Elem y = g->mul(queue[i], s);
                if (!in[y]) {
                    in[y] = 1;
                    queue.push_back(y);
                }
            }
        if (queue.size() != n) throw Error("generators do not generate the group");
    }

    // Conjugacy classes: orbits of x -> s x s^-1 over generators s.
    g->class_of_.assign(n, UINT32_MAX);
    for (Elem x = 0; x < n; ++x) {
        if (g->class_of_[x] != UINT32_MAX) continue;
        const auto id = static_cast<std::uint32_t>(g->classes_.size());
        std::vector<Elem> cls{x};
        g->class_of_[x] = id;
        for (std::size_t i = 0; i < cls.size(); ++i)
            for (Elem s : g->gens_) {
                const Elem y = g->conj(cls[i], s);
                if (g->class_of_[y] == UINT32_MAX) {
                    g->class_of_[y] = id;
                    cls.push_back(y);
                }
            }
        std::sort(cls.begin(), cls.end());
        g->classes_.push_back(std::move(cls));
    }
    return g;
}

Elem FiniteGroup::pow(Elem a, long k) const {
    const long ord = orders_[a];
    long e = k % ord;
    if (e < 0) e += ord;
    Elem r = 0;
    Elem base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::size_t FiniteGroup::table_hash() const noexcept {
    std::size_t h = n_;
    for (auto v : table_) h = h * 1099511628211ull ^ v;
    return h;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> members) : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(Elem a) const { return std::binary_search(members_.begin(), members_.end(), a); }

bool Subgroup::is_whole() const { return members_.size() == parent_->order(); }

bool Subgroup::is_subgroup() const {
    if (members_.empty() || members_.front() != 0) return false;
    for (Elem a : members_) {
        if (a >= parent_->order()) return false;
        for (Elem b : members_)
            if (!contains(parent_->mul(a, b))) return false;
    }
    return true;
}

bool Subgroup::is_normal() const {
    for (Elem s : parent_->generators())
        for (Elem a : members_)
            if (!contains(parent_->conj(a, s))) return false;
    return true;
}

bool GroupHomomorphism::is_homomorphism() const {
    if (image.size() != source->order()) return false;
    for (Elem x : image)
        if (x >= target->order()) return false;
    for (Elem a = 0; a < source->order(); ++a)
        for (Elem b = 0; b < source->order(); ++b)
            if (image[source->mul(a, b)] != target->mul(image[a], image[b])) return false;
    return true;
}

bool GroupHomomorphism::is_bijective() const {
    if (source->order() != target->order()) return false;
    std::vector<char> hit(target->order(), 0);
    for (Elem x : image) {
        if (x >= target->order() || hit[x]) return false;
        hit[x] = 1;
    }
    return true;
}

Subgroup GroupHomomorphism::kernel() const {
    std::vector<Elem> k;
    for (Elem a = 0; a < source->order(); ++a)
        if (image[a] == target->identity()) k.push_back(a);
    return Subgroup(source, std::move(k));
}

PermutationGroup group_from_permutations(std::size_t degree, const std::vector<Permutation>& gens,
                                         std::size_t order_cap) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& p = gens[i];
        if (p.size() != degree) throw NonInvertibleGenerator(i);
        std::vector<char> hit(degree, 0);
        for (auto x : p) {
            if (x >= degree || hit[x]) throw NonInvertibleGenerator(i);
            hit[x] = 1;
        }
    }
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0u);
    auto mul = [](const Permutation& a, const Permutation& b) {
        Permutation c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
        return c;
    };
    auto hash = [](const Permutation& p) {
        std::size_t h = 1469598103934665603ull;
        for (auto x : p) h = (h ^ x) * 1099511628211ull;
        return h;
    };
    auto closure = detail::enumerate_group(id, gens, mul, hash, std::equal_to<Permutation>(), order_cap);
    return PermutationGroup{std::move(closure.group), degree, std::move(closure.elements)};
}

namespace {

// Closure of gens inside g, returned as a membership mask plus the member list.
std::vector<Elem> closure_members(const FiniteGroup& g, std::span<const Elem> gens, std::vector<char>& in) {
    in.assign(g.order(), 0);
    std::vector<Elem> members{0};
    in[0] = 1;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (Elem s : gens) {
            const Elem y = g.mul(members[i], s);
            if (!in[y]) {
                in[y] = 1;
                members.push_back(y);
            }
        }
    return members;
}

} // namespace

Subgroup generated_subgroup(const GroupPtr& g, std::span<const Elem> gens) {
    std::vector<char> in;
    return Subgroup(g, closure_members(*g, gens, in));
}

Subgroup normal_closure(const GroupPtr& g, std::span<const Elem> elems) {
    std::vector<Elem> gens(elems.begin(), elems.end());
    std::vector<char> in;
    std::vector<Elem> members = closure_members(*g, gens, in);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (Elem s : g->generators()) {
            const Elem y = g->conj(gens[i], s);
            if (!in[y]) {
                gens.push_back(y);
                members = closure_members(*g, gens, in);
            }
        }
    return Subgroup(g, std::move(members));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup whole_group(const GroupPtr& g) {
    std::vector<Elem> all(g->order());
    std::iota(all.begin(), all.end(), 0u);
    return Subgroup(g, std::move(all));
}

Subgroup center(const GroupPtr& g) {
    std::vector<Elem> z;
    for (Elem a = 0; a < g->order(); ++a) {
        bool central = true;
        for (Elem s : g->generators())
            if (g->mul(a, s) != g->mul(s, a)) {
                central = false;
                break;
            }
        if (central) z.push_back(a);
    }
    return Subgroup(g, std::move(z));
}

Subgroup derived_subgroup(const GroupPtr& g) {
    // G' is the normal closure of the commutators of a generating set.
    std::vector<Elem> comms;
    const auto& gens = g->generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) comms.push_back(g->commutator(gens[i], gens[j]));
    return normal_closure(g, comms);
}

bool is_perfect(const GroupPtr& g) { return derived_subgroup(g).is_whole(); }

std::vector<std::size_t> derived_series_orders(const GroupPtr& g) {
    std::vector<std::size_t> out{g->order()};
    GroupPtr cur = g;
    while (true) {
        Subgroup d = derived_subgroup(cur);
        if (d.order() == cur->order()) break;
        out.push_back(d.order());
        if (d.is_trivial()) break;
        cur = subgroup_as_group(d);
    }
    return out;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& g) {
    // Every normal subgroup is a join of normal closures of conjugacy classes.
    struct Node {
        std::vector<Elem> gens;
        std::vector<Elem> members;
    };
    std::set<std::vector<Elem>> seen;
    std::vector<Node> found;
    std::vector<char> in;
    auto add = [&](std::vector<Elem> gens) {
        std::vector<Elem> members = closure_members(*g, gens, in);
        std::sort(members.begin(), members.end());
        if (seen.insert(members).second) found.push_back(Node{std::move(gens), std::move(members)});
    };
    add({});
    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t c = 1; c < g->num_classes(); ++c) {
            const Elem rep = g->classes()[c].front();
            if (std::binary_search(found[i].members.begin(), found[i].members.end(), rep)) continue;
            std::vector<Elem> gens = found[i].gens;
            gens.insert(gens.end(), g->classes()[c].begin(), g->classes()[c].end());
            add(std::move(gens));
        }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& node : found) out.emplace_back(g, std::move(node.members));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.members() < b.members();
    });
    return out;
}

Quotient quotient(const Subgroup& n) {
    const GroupPtr& g = n.parent();
    if (!n.is_subgroup() || !n.is_normal()) throw NotNormal();
    std::vector<std::uint32_t> coset_of(g->order(), UINT32_MAX);
    std::vector<Elem> reps;
    for (Elem x = 0; x < g->order(); ++x) {
        if (coset_of[x] != UINT32_MAX) continue;
        const auto id = static_cast<std::uint32_t>(reps.size());
        reps.push_back(x);
        for (Elem m : n.members()) coset_of[g->mul(x, m)] = id;
    }
    const std::size_t q = reps.size();
    std::vector<std::uint16_t> table(q * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            table[i * q + j] = static_cast<std::uint16_t>(coset_of[g->mul(reps[i], reps[j])]);
    std::vector<Elem> gens;
    for (Elem s : g->generators()) gens.push_back(coset_of[s]);
    GroupPtr qg = FiniteGroup::from_table(q, std::move(table), std::move(gens));
    GroupHomomorphism proj{g, qg, std::vector<Elem>(coset_of.begin(), coset_of.end())};
    return Quotient{std::move(qg), std::move(proj)};
}

GroupPtr subgroup_as_group(const Subgroup& h, std::vector<Elem>* embedding) {
    const GroupPtr& g = h.parent();
    const auto& mem = h.members();  // sorted, so the identity comes first
    if (mem.empty() || mem.front() != 0) throw Error("subgroup does not contain the identity");
    std::vector<std::uint32_t> local(g->order(), UINT32_MAX);
    for (std::size_t i = 0; i < mem.size(); ++i) local[mem[i]] = static_cast<std::uint32_t>(i);
    const std::size_t m = mem.size();
    std::vector<std::uint16_t> table(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const auto v = local[g->mul(mem[i], mem[j])];
            if (v == UINT32_MAX) throw Error("subset is not closed under multiplication");
            table[i * m + j] = static_cast<std::uint16_t>(v);
        }
    // Greedy generators inside the subgroup.
    std::vector<Elem> gens;
    std::vector<char> in;
    std::vector<Elem> cur = closure_members(*g, gens, in);
    for (Elem x : mem) {
        if (cur.size() == m) break;
        if (in[x]) continue;
        gens.push_back(x);
        cur = closure_members(*g, gens, in);
    }
    std::vector<Elem> local_gens;
    for (Elem x : gens) local_gens.push_back(local[x]);
    if (embedding) *embedding = mem;
    return FiniteGroup::from_table(m, std::move(table), std::move(local_gens));
}

std::vector<Elem> small_generating_set(const GroupPtr& g) {
    const std::size_t n = g->order();
    std::vector<Elem> cand(n > 0 ? n - 1 : 0);
    std::iota(cand.begin(), cand.end(), 1u);
    // Prefer small classes (fewer candidate images later), then high order.
    std::stable_sort(cand.begin(), cand.end(), [&](Elem a, Elem b) {
        const auto ca = g->classes()[g->class_of(a)].size(), cb = g->classes()[g->class_of(b)].size();
        if (ca != cb) return ca < cb;
        return g->element_order(a) > g->element_order(b);
    });
    std::vector<Elem> gens;
    std::vector<char> in, best_in;
    std::vector<Elem> cur = closure_members(*g, gens, in);
    while (cur.size() < n) {
        std::vector<char> cur_in = in;
        std::size_t best = 0;
        Elem best_x = 0;
        for (Elem x : cand) {
            if (cur_in[x]) continue;
            gens.push_back(x);
            const std::size_t sz = closure_members(*g, gens, in).size();
            gens.pop_back();
            if (sz > best) {
                best = sz;
                best_x = x;
                if (sz == n) break;
            }
        }
        gens.push_back(best_x);
        cur = closure_members(*g, gens, in);
    }
    return gens;
}

} // namespace tqs
