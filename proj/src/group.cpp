#include "cliffcode/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cliffcode {

int FiniteGroup::element_order(int i) const {
    int ord = 1;
    int x = i;
    while (x != identity()) {
        x = mul(x, i);
        ++ord;
        if (ord > order()) throw InconsistencyError("element order exceeds group order");
    }
    return ord;
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (int i = 0; i < order(); ++i) e = std::lcm(e, static_cast<long long>(element_order(i)));
    return static_cast<int>(e);
}

int FiniteGroup::find(const CycMatrix& m) const {
    CycMatrix probe = m.order() == ambient_order_ ? m : m.embedded(ambient_order_);
    auto it = index_.find(probe);
    return it == index_.end() ? -1 : it->second;
}

std::string FiniteGroup::word(int i, const std::vector<std::string>& names) const {
    if (i == identity()) return "1";
    std::vector<int> slots;
    for (int cur = i; cur != identity();) {
        auto [parent, slot] = derivation_[static_cast<std::size_t>(cur)];
        slots.push_back(slot);
        cur = parent;
    }
    std::string out;
    for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
        if (!out.empty()) out += "*";
        out += names[static_cast<std::size_t>(*it)];
    }
    return out;
}

FiniteGroup close_generators(const std::vector<CycMatrix>& gens, int max_order) {
    if (gens.empty()) throw InputError("closure requires at least one generator");
    const int d = gens[0].rows();
    unsigned order0 = 1;
    for (const CycMatrix& g : gens) {
        if (g.rows() != d || g.cols() != d)
            throw InputError("generators must be square matrices of equal size");
        order0 = std::lcm(order0, g.order());
    }
    std::vector<CycMatrix> embedded;
    embedded.reserve(gens.size());
    for (const CycMatrix& g : gens) {
        CycMatrix e = g.embedded(order0);
        if (!e.is_unitary()) throw InputError("generator is not unitary");
        embedded.push_back(std::move(e));
    }

    FiniteGroup grp;
    grp.degree_ = d;
    grp.ambient_order_ = order0;
    grp.elements_.push_back(CycMatrix::identity(d, order0));
    grp.index_.emplace(grp.elements_[0], 0);
    grp.derivation_.emplace_back(-1, -1);

    const int ngens = static_cast<int>(gens.size());
    // genprod[i][s] = index of elements[i] * gens[s], filled along the BFS.
    std::vector<std::vector<int>> genprod;

    for (std::size_t head = 0; head < grp.elements_.size(); ++head) {
        genprod.emplace_back(ngens, -1);
        for (int s = 0; s < ngens; ++s) {
            CycMatrix prod = grp.elements_[head] * embedded[static_cast<std::size_t>(s)];
            auto it = grp.index_.find(prod);
            int j;
            if (it != grp.index_.end()) {
                j = it->second;
            } else {
                j = static_cast<int>(grp.elements_.size());
                if (j >= max_order)
                    throw InputError("closure exceeded max order " + std::to_string(max_order));
                grp.index_.emplace(prod, j);
                grp.elements_.push_back(std::move(prod));
                grp.derivation_.emplace_back(static_cast<int>(head), s);
            }
            genprod[head][static_cast<std::size_t>(s)] = j;
        }
    }

    const int n = grp.order();
    grp.generator_indices_.reserve(gens.size());
    for (int s = 0; s < ngens; ++s)
        grp.generator_indices_.push_back(genprod[0][static_cast<std::size_t>(s)]);

    // Full Cayley table from the BFS derivations: if j = parent * gen_s then
    // i*j = (i*parent)*gen_s, which is a genprod lookup.
    grp.mul_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) grp.mul_[static_cast<std::size_t>(i) * n + 0] = i;
    for (int j = 1; j < n; ++j) {
        auto [parent, slot] = grp.derivation_[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i) {
            int ip = grp.mul_[static_cast<std::size_t>(i) * n + parent];
            grp.mul_[static_cast<std::size_t>(i) * n + j] =
                genprod[static_cast<std::size_t>(ip)][static_cast<std::size_t>(slot)];
        }
    }

    grp.inv_.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (grp.mul(i, j) == 0) {
                grp.inv_[static_cast<std::size_t>(i)] = j;
                break;
            }

    // Re-embed everything into the ambient order lcm(entry order, exponent)
    // so character values of arbitrary subgroups always fit.
    unsigned ambient = std::lcm(order0, static_cast<unsigned>(grp.exponent()));
    if (ambient != order0) {
        grp.ambient_order_ = ambient;
        grp.index_.clear();
        for (int i = 0; i < n; ++i) {
            grp.elements_[static_cast<std::size_t>(i)] =
                grp.elements_[static_cast<std::size_t>(i)].embedded(ambient);
            grp.index_.emplace(grp.elements_[static_cast<std::size_t>(i)], i);
        }
    }
    return grp;
}

Subgroup::Subgroup(const FiniteGroup& g, std::vector<int> members, std::vector<int> gens)
    : parent_(&g), members_(std::move(members)), gens_(std::move(gens)),
      mask_(static_cast<std::size_t>(g.order()), false) {
    std::sort(members_.begin(), members_.end());
    for (int m : members_) mask_[static_cast<std::size_t>(m)] = true;
}

Subgroup Subgroup::whole(const FiniteGroup& g) {
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> gens(g.generator_indices());
    return Subgroup(g, std::move(all), std::move(gens));
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup(g, {g.identity()}, {}); }

bool Subgroup::contains(const Subgroup& other) const {
    for (int m : other.members_)
        if (!contains(m)) return false;
    return true;
}

bool Subgroup::less(const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members_ < b.members_;
}

Subgroup center(const FiniteGroup& g) {
    std::vector<int> members;
    for (int z = 0; z < g.order(); ++z) {
        bool central = true;
        for (int x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
        if (central) members.push_back(z);
    }
    std::vector<int> gens;
    {
        // reduce to a small generating set
        Subgroup so_far = Subgroup::trivial(g);
        for (int m : members)
            if (!so_far.contains(m)) {
                gens.push_back(m);
                std::vector<int> seed = gens;
                so_far = subgroup_generated(g, seed);
            }
    }
    return Subgroup(g, std::move(members), std::move(gens));
}

ConjugacyClassSet conjugacy_classes(const Subgroup& h) {
    const FiniteGroup& g = h.group();
    ConjugacyClassSet out;
    out.class_of_element.assign(static_cast<std::size_t>(g.order()), -1);
    for (int rep : h.members()) {
        if (out.class_of_element[static_cast<std::size_t>(rep)] != -1) continue;
        int cls = static_cast<int>(out.classes.size());
        std::vector<int> orbit;
        for (int x : h.members()) {
            int y = g.conjugate(x, rep);
            if (out.class_of_element[static_cast<std::size_t>(y)] == -1) {
                out.class_of_element[static_cast<std::size_t>(y)] = cls;
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.representatives.push_back(orbit.front());
        out.classes.push_back(std::move(orbit));
    }
    return out;
}

Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& seed) {
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    std::vector<int> members{g.identity()};
    seen[static_cast<std::size_t>(g.identity())] = true;
    for (std::size_t head = 0; head < members.size(); ++head)
        for (int s : seed) {
            int y = g.mul(members[head], s);
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = true;
                members.push_back(y);
            }
        }
    // Greedy reduced generating set.
    std::vector<int> gens;
    std::vector<bool> span(static_cast<std::size_t>(g.order()), false);
    span[static_cast<std::size_t>(g.identity())] = true;
    std::size_t span_size = 1;
    for (int s : seed) {
        if (span[static_cast<std::size_t>(s)]) continue;
        gens.push_back(s);
        // grow span by BFS over current gens
        std::vector<int> frontier{g.identity()};
        std::fill(span.begin(), span.end(), false);
        span[static_cast<std::size_t>(g.identity())] = true;
        span_size = 1;
        for (std::size_t head = 0; head < frontier.size(); ++head)
            for (int t : gens) {
                int y = g.mul(frontier[head], t);
                if (!span[static_cast<std::size_t>(y)]) {
                    span[static_cast<std::size_t>(y)] = true;
                    ++span_size;
                    frontier.push_back(y);
                }
            }
        if (span_size == members.size()) break;
    }
    return Subgroup(g, std::move(members), std::move(gens));
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
    for (int gen : g.generator_indices())
        for (int m : h.members())
            if (!h.contains(g.conjugate(gen, m))) return false;
    return true;
}

bool is_abelian(const Subgroup& h) {
    const FiniteGroup& g = h.group();
    const auto& m = h.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (g.mul(m[i], m[j]) != g.mul(m[j], m[i])) return false;
    return true;
}

int exponent(const Subgroup& h) {
    long long e = 1;
    for (int m : h.members()) e = std::lcm(e, static_cast<long long>(h.group().element_order(m)));
    return static_cast<int>(e);
}

namespace {

// Dedup key for subgroups of one parent group.
struct MemberSetLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const { return a < b; }
};

std::vector<int> joined_seed(const Subgroup& a, const Subgroup& b) {
    std::vector<int> seed = a.gens();
    seed.insert(seed.end(), b.gens().begin(), b.gens().end());
    return seed;
}

} // namespace

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g) {
    ConjugacyClassSet classes = conjugacy_classes(Subgroup::whole(g));

    // Atoms: normal closures of single classes (a class is conjugation
    // closed, so the subgroup it generates is normal).
    std::vector<Subgroup> atoms;
    std::map<std::vector<int>, int, MemberSetLess> seen;
    std::vector<Subgroup> found;
    auto add = [&](Subgroup s) -> bool {
        auto it = seen.find(s.members());
        if (it != seen.end()) return false;
        seen.emplace(s.members(), static_cast<int>(found.size()));
        found.push_back(std::move(s));
        return true;
    };

    add(Subgroup::trivial(g));
    for (const auto& cls : classes.classes) {
        Subgroup closure = subgroup_generated(g, cls);
        if (add(closure)) atoms.push_back(found.back());
    }

    std::vector<Subgroup> worklist = found;
    while (!worklist.empty()) {
        Subgroup current = std::move(worklist.back());
        worklist.pop_back();
        for (const Subgroup& atom : atoms) {
            if (current.contains(atom)) continue;
            Subgroup j = subgroup_generated(g, joined_seed(current, atom));
            if (add(j)) worklist.push_back(found.back());
        }
    }

    std::sort(found.begin(), found.end(), Subgroup::less);
    return found;
}

std::vector<Subgroup> subgroups_within(const Subgroup& h) {
    if (h.order() > 4096) throw InputError("subgroup enumeration bound exceeded: |H| > 4096");
    const FiniteGroup& g = h.group();

    std::map<std::vector<int>, int, MemberSetLess> seen;
    std::vector<Subgroup> found;
    auto add = [&](Subgroup s) -> bool {
        auto it = seen.find(s.members());
        if (it != seen.end()) return false;
        seen.emplace(s.members(), static_cast<int>(found.size()));
        found.push_back(std::move(s));
        return true;
    };

    add(Subgroup::trivial(g));
    std::vector<Subgroup> worklist = found;
    while (!worklist.empty()) {
        Subgroup current = std::move(worklist.back());
        worklist.pop_back();
        for (int m : h.members()) {
            if (current.contains(m)) continue;
            std::vector<int> seed = current.gens();
            seed.push_back(m);
            Subgroup ext = subgroup_generated(g, seed);
            if (add(ext)) worklist.push_back(found.back());
        }
    }

    std::sort(found.begin(), found.end(), Subgroup::less);
    return found;
}

} // namespace cliffcode
