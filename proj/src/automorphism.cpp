#include "tqs/automorphism.hpp"

#include "tqs/detail/closure.hpp"
#include "tqs/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

namespace tqs {

namespace {

constexpr Elem kNone = UINT32_MAX;

// Backtracking over generator images. At level j the map is extended to
// <gens[0..j]> by breadth-first search and checked for consistency (and
// injectivity when asked), so bad prefixes die early.
class HomSearch {
public:
    HomSearch(const FiniteGroup& src, std::vector<Elem> gens, const FiniteGroup& dst,
              std::vector<std::vector<Elem>> candidates, bool injective)
        : src_(src), dst_(dst), gens_(std::move(gens)), cand_(std::move(candidates)), injective_(injective),
          phi_(src.order(), kNone), used_(dst.order(), 0), im_(gens_.size()) {
        phi_[0] = 0;
        used_[0] = 1;
        members_.push_back(0);
    }

    // on_found(images, phi) returns false to stop.
    template <class F>
    void run(F&& on_found) {
        stop_ = false;
        descend(0, on_found);
    }

private:
    template <class F>
    void descend(std::size_t j, F& on_found) {
        if (j == gens_.size()) {
            if (members_.size() == src_.order() && !on_found(im_, phi_)) stop_ = true;
            return;
        }
        for (Elem y : cand_[j]) {
            const std::size_t start = members_.size();
            im_[j] = y;
            if (extend(j, start)) descend(j + 1, on_found);
            undo(start);
            if (stop_) return;
        }
    }

    bool extend(std::size_t j, std::size_t start) {
        for (std::size_t idx = 0; idx < members_.size(); ++idx) {
            const Elem x = members_[idx];
            // Old members were already checked against gens 0..j-1.
            for (std::size_t i = idx < start ? j : 0; i <= j; ++i) {
                const Elem z = src_.mul(x, gens_[i]);
                const Elem w = dst_.mul(phi_[x], im_[i]);
                if (phi_[z] == kNone) {
                    if (injective_ && used_[w]) return false;
                    phi_[z] = w;
                    used_[w] = 1;
                    members_.push_back(z);
                } else if (phi_[z] != w) {
                    return false;
                }
            }
        }
        return true;
    }

    void undo(std::size_t start) {
        for (std::size_t idx = start; idx < members_.size(); ++idx) {
            used_[phi_[members_[idx]]] = 0;
            phi_[members_[idx]] = kNone;
        }
        members_.resize(start);
        used_[0] = 1;
    }

    const FiniteGroup& src_;
    const FiniteGroup& dst_;
    std::vector<Elem> gens_;
    std::vector<std::vector<Elem>> cand_;
    bool injective_;
    std::vector<Elem> phi_;
    std::vector<char> used_;
    std::vector<Elem> im_;
    std::vector<Elem> members_;
    bool stop_ = false;
};

// Elements of `dst` that could be the image of x under an isomorphism.
std::vector<Elem> matching_elements(const FiniteGroup& src, Elem x, const FiniteGroup& dst) {
    std::vector<Elem> out;
    const auto order = src.element_order(x);
    const auto csize = src.classes()[src.class_of(x)].size();
    for (Elem y = 0; y < dst.order(); ++y)
        if (dst.element_order(y) == order && dst.classes()[dst.class_of(y)].size() == csize) out.push_back(y);
    return out;
}

// Words for every element in terms of a generating set, for evaluating
// homomorphisms given by generator images.
struct WordTree {
    std::vector<Elem> parent;
    std::vector<std::uint32_t> pgen;

    WordTree(const FiniteGroup& g, const std::vector<Elem>& gens) : parent(g.order(), kNone), pgen(g.order(), 0) {
        parent[0] = 0;
        std::vector<Elem> queue{0};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (std::uint32_t k = 0; k < gens.size(); ++k) {
                const Elem y = g.mul(queue[i], gens[k]);
                if (parent[y] == kNone) {
                    parent[y] = queue[i];
                    pgen[y] = k;
                    queue.push_back(y);
                }
            }
    }

    template <class Images>
    Elem apply(const FiniteGroup& target, const Images& images, Elem x) const {
        std::vector<std::uint32_t> word;
        while (x != 0) {
            word.push_back(pgen[x]);
            x = parent[x];
        }
        Elem r = 0;
        for (auto it = word.rbegin(); it != word.rend(); ++it) r = target.mul(r, images[*it]);
        return r;
    }
};

struct TupleHash {
    std::size_t operator()(const std::vector<std::uint16_t>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

std::optional<Subgroup> find_complement(const AutOutData& data, const Quotient& out) {
    const GroupPtr& aut = data.aut_group;
    if (out.group->order() == 1) return trivial_subgroup(aut);
    const std::vector<Elem> ogens = small_generating_set(out.group);
    std::vector<std::vector<Elem>> cand(ogens.size());
    for (Elem a = 0; a < aut->order(); ++a)
        for (std::size_t i = 0; i < ogens.size(); ++i)
            if (out.projection(a) == ogens[i] && aut->element_order(a) == out.group->element_order(ogens[i]))
                cand[i].push_back(a);
    // Target orders of <o_1..o_j>.
    std::vector<std::size_t> want(ogens.size());
    for (std::size_t j = 0; j < ogens.size(); ++j)
        want[j] = generated_subgroup(out.group, std::span<const Elem>(ogens.data(), j + 1)).order();

    std::vector<Elem> chosen;
    std::optional<Subgroup> result;
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == ogens.size()) {
            result = generated_subgroup(aut, chosen);
            return;
        }
        for (Elem a : cand[j]) {
            chosen.push_back(a);
            // Projection is onto <o_1..o_j>, so equal orders means K meets Inn trivially.
            if (generated_subgroup(aut, chosen).order() == want[j]) self(self, j + 1);
            chosen.pop_back();
            if (result) return;
        }
    };
    rec(rec, 0);
    return result;
}

} // namespace

std::vector<Elem> AutOutData::map_of(Elem a) const {
    const FiniteGroup& g = *group;
    const auto& im = generator_images[a];
    std::vector<Elem> phi(g.order(), kNone);
    phi[0] = 0;
    std::vector<Elem> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t k = 0; k < domain_generators.size(); ++k) {
            const Elem y = g.mul(queue[i], domain_generators[k]);
            if (phi[y] == kNone) {
                phi[y] = g.mul(phi[queue[i]], im[k]);
                queue.push_back(y);
            }
        }
    return phi;
}

GroupHomomorphism AutOutData::automorphism(Elem a) const { return GroupHomomorphism{group, group, map_of(a)}; }

std::optional<Elem> AutOutData::find(const std::vector<std::uint16_t>& images) const {
    // linear scan over the aut elements
    for (Elem a = 0; a < generator_images.size(); ++a)
        if (generator_images[a] == images) return a;
    return std::nullopt;
}

Elem AutOutData::inner_automorphism(Elem g) const {
    std::vector<std::uint16_t> im;
    for (Elem s : domain_generators) im.push_back(static_cast<std::uint16_t>(group->conj(s, g)));
    auto a = find(im);
    if (!a) throw Error("inner automorphism missing from automorphism group");
    return *a;
}

std::optional<std::vector<Elem>> extend_to_homomorphism(const FiniteGroup& source, const std::vector<Elem>& gens,
                                                        const FiniteGroup& target, const std::vector<Elem>& images) {
    if (gens.size() != images.size()) return std::nullopt;
    std::vector<Elem> phi(source.order(), kNone);
    phi[0] = 0;
    std::vector<Elem> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t k = 0; k < gens.size(); ++k) {
            const Elem y = source.mul(queue[i], gens[k]);
            const Elem w = target.mul(phi[queue[i]], images[k]);
            if (phi[y] == kNone) {
                phi[y] = w;
                queue.push_back(y);
            } else if (phi[y] != w) {
                return std::nullopt;
            }
        }
    if (queue.size() != source.order()) return std::nullopt;
    return phi;
}

AutOutData automorphism_group(const GroupPtr& g, std::size_t aut_cap) {
    if (g->order() > aut_cap)
        throw AutCapExceeded("group order " + std::to_string(g->order()) + " exceeds aut cap " +
                             std::to_string(aut_cap));
    const std::size_t limit = std::min(8 * aut_cap, kMaxGroupOrder);
    AutOutData data{g, nullptr, small_generating_set(g), {}, trivial_subgroup(g), 1, std::nullopt};
    const auto& dg = data.domain_generators;

    std::vector<std::vector<Elem>> cand;
    for (Elem s : dg) cand.push_back(matching_elements(*g, s, *g));
    std::vector<std::vector<std::uint16_t>> found;
    HomSearch search(*g, dg, *g, cand, true);
    search.run([&](const std::vector<Elem>& im, const std::vector<Elem>&) {
        found.emplace_back(im.begin(), im.end());
        if (found.size() > limit)
            throw AutCapExceeded("automorphism group larger than " + std::to_string(limit));
        return true;
    });

    // Aut as an explicit group: close a few automorphisms under composition,
    // adding found ones until the closure is everything.
    const WordTree words(*g, dg);
    std::vector<std::uint16_t> id(dg.begin(), dg.end());
    auto compose = [&](const std::vector<std::uint16_t>& a, const std::vector<std::uint16_t>& b) {
        std::vector<std::uint16_t> c(b.size());
        for (std::size_t i = 0; i < b.size(); ++i) c[i] = static_cast<std::uint16_t>(words.apply(*g, a, b[i]));
        return c;
    };
    std::vector<std::vector<std::uint16_t>> agens;
    for (Elem s : g->generators()) {
        std::vector<std::uint16_t> t;
        for (Elem x : dg) t.push_back(static_cast<std::uint16_t>(g->conj(x, s)));
        if (t != id && std::find(agens.begin(), agens.end(), t) == agens.end()) agens.push_back(std::move(t));
    }
    detail::Closure<std::vector<std::uint16_t>> closure;
    while (true) {
        try {
            closure = detail::enumerate_group(id, agens, compose, TupleHash(),
                                              std::equal_to<std::vector<std::uint16_t>>(), found.size());
        } catch (const OrderCapExceeded&) {
            throw Error("automorphism closure exceeds the searched automorphisms");
        }
        if (closure.elements.size() == found.size()) break;
        std::unordered_set<std::vector<std::uint16_t>, TupleHash> have(closure.elements.begin(),
                                                                       closure.elements.end());
        for (const auto& f : found)
            if (!have.count(f)) {
                agens.push_back(f);
                break;
            }
    }
    data.aut_group = closure.group;
    data.generator_images = std::move(closure.elements);

    std::unordered_map<std::vector<std::uint16_t>, Elem, TupleHash> index;
    for (Elem a = 0; a < data.generator_images.size(); ++a) index.emplace(data.generator_images[a], a);
    std::vector<Elem> inn;
    for (Elem x = 0; x < g->order(); ++x) {
        std::vector<std::uint16_t> t;
        for (Elem s : dg) t.push_back(static_cast<std::uint16_t>(g->conj(s, x)));
        inn.push_back(index.at(t));
    }
    data.inner = Subgroup(data.aut_group, std::move(inn));
    data.out_order = data.aut_group->order() / data.inner.order();
    const Quotient out = quotient(data.inner);
    data.splitting = find_complement(data, out);
    return data;
}

std::size_t count_automorphisms(const GroupPtr& g) {
    // Deliberately plain: every tuple of order/class-size compatible images
    // is extended in full and tested for bijectivity.
    const std::vector<Elem> gens = g->generators();
    std::vector<std::vector<Elem>> cand;
    for (Elem s : gens) cand.push_back(matching_elements(*g, s, *g));
    std::vector<Elem> im(gens.size());
    std::size_t count = 0;
    std::vector<char> hit(g->order());
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == gens.size()) {
            auto phi = extend_to_homomorphism(*g, gens, *g, im);
            if (!phi) return;
            std::fill(hit.begin(), hit.end(), 0);
            for (Elem y : *phi) {
                if (hit[y]) return;
                hit[y] = 1;
            }
            ++count;
            return;
        }
        for (Elem y : cand[j]) {
            im[j] = y;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    return count;
}

std::string GroupFingerprint::key() const {
    std::ostringstream os;
    os << order << "|";
    for (auto c : class_sizes) os << c << ",";
    os << "|";
    std::map<unsigned, std::size_t> counts;
    for (auto o : element_orders) ++counts[o];
    for (auto [o, c] : counts) os << o << ":" << c << ",";
    os << "|";
    for (auto d : derived_series) os << d << ",";
    os << "|" << center_order;
    return os.str();
}

GroupFingerprint fingerprint(const GroupPtr& g) {
    GroupFingerprint f;
    f.order = g->order();
    for (const auto& c : g->classes()) f.class_sizes.push_back(c.size());
    std::sort(f.class_sizes.begin(), f.class_sizes.end());
    for (Elem x = 0; x < g->order(); ++x) f.element_orders.push_back(g->element_order(x));
    std::sort(f.element_orders.begin(), f.element_orders.end());
    f.derived_series = derived_series_orders(g);
    f.center_order = center(g).order();
    return f;
}

std::optional<GroupHomomorphism> is_isomorphic(const GroupPtr& g, const GroupPtr& h) {
    if (g->order() != h->order()) return std::nullopt;
    if (!(fingerprint(g) == fingerprint(h))) return std::nullopt;
    const std::vector<Elem> gens = small_generating_set(g);
    std::vector<std::vector<Elem>> cand;
    for (Elem s : gens) cand.push_back(matching_elements(*g, s, *h));
    std::optional<GroupHomomorphism> result;
    HomSearch search(*g, gens, *h, std::move(cand), true);
    search.run([&](const std::vector<Elem>&, const std::vector<Elem>& phi) {
        result = GroupHomomorphism{g, h, phi};
        return false;
    });
    return result;
}

} // namespace tqs
