#include "zpg/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace zpg {

FiniteGroup FiniteGroup::from_generators(std::string name, std::vector<Perm> generators,
                                         size_t max_order) {
    if (generators.empty()) throw NotAGroup("empty generator list");
    uint32_t degree = generators.front().degree();
    for (const Perm& g : generators)
        if (g.degree() != degree) throw NotAGroup("generators of mixed degree");

    FiniteGroup G;
    G.name_ = std::move(name);
    G.elements_.push_back(Perm::identity(degree));
    G.index_.emplace(G.elements_.front().images(), 0u);

    // Breadth-first closure; each new layer is sorted by image list so the
    // enumeration is canonical for a given generator list.
    std::vector<Perm> frontier = {G.elements_.front()};
    while (!frontier.empty()) {
        std::set<Perm> next_layer;
        for (const Perm& x : frontier)
            for (const Perm& g : generators) {
                Perm y = x * g;
                if (!G.index_.contains(y.images())) next_layer.insert(y);
            }
        frontier.clear();
        for (const Perm& y : next_layer) {
            if (G.elements_.size() >= max_order)
                throw ClosureTooLarge("group closure exceeds " + std::to_string(max_order) + " elements");
            G.index_.emplace(y.images(), static_cast<uint32_t>(G.elements_.size()));
            G.elements_.push_back(y);
            frontier.push_back(y);
        }
    }
    G.finalize();
    return G;
}

void FiniteGroup::finalize() {
    size_t n = elements_.size();
    table_.resize(n * n);
    inverse_.assign(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Perm prod = elements_[i] * elements_[j];
            auto it = index_.find(prod.images());
            if (it == index_.end()) throw NotAGroup("multiplication left the closure");
            table_[i * n + j] = it->second;
            if (it->second == 0) inverse_[i] = static_cast<uint32_t>(j);
        }

    element_order_.resize(n);
    exponent_ = 1;
    for (size_t i = 0; i < n; ++i) {
        element_order_[i] = elements_[i].order();
        exponent_ = std::lcm(exponent_, element_order_[i]);
    }

    // Conjugacy classes by orbit of conjugation.
    class_of_.assign(n, UINT32_MAX);
    std::vector<ConjClass> raw;
    for (uint32_t i = 0; i < n; ++i) {
        if (class_of_[i] != UINT32_MAX) continue;
        ConjClass cls;
        std::set<uint32_t> members;
        for (uint32_t x = 0; x < n; ++x)
            members.insert(table_[table_[x * n + i] * n + inverse_[x]]);  // x i x^-1
        cls.member_indices.assign(members.begin(), members.end());
        cls.rep_index = cls.member_indices.front();
        cls.size = cls.member_indices.size();
        cls.element_order = element_order_[i];
        uint32_t tag = static_cast<uint32_t>(raw.size());
        for (uint32_t m : cls.member_indices) class_of_[m] = tag;
        raw.push_back(std::move(cls));
    }
    std::sort(raw.begin(), raw.end(), [](const ConjClass& a, const ConjClass& b) {
        return std::tie(a.element_order, a.size, a.rep_index) <
               std::tie(b.element_order, b.size, b.rep_index);
    });
    classes_ = std::move(raw);
    for (uint32_t c = 0; c < classes_.size(); ++c)
        for (uint32_t m : classes_[c].member_indices) class_of_[m] = c;
}

uint32_t FiniteGroup::index_of(const Perm& p) const {
    auto it = index_.find(p.images());
    if (it == index_.end()) throw NotAGroup("permutation is not a group element");
    return it->second;
}

uint32_t FiniteGroup::power(uint32_t i, int64_t k) const {
    uint64_t e = exponent_;
    uint64_t kk = static_cast<uint64_t>(((k % static_cast<int64_t>(e)) + static_cast<int64_t>(e)) % static_cast<int64_t>(e));
    uint32_t acc = 0, base = i;
    while (kk) {
        if (kk & 1) acc = mult(acc, base);
        base = mult(base, base);
        kk >>= 1;
    }
    return acc;
}

std::vector<uint32_t> FiniteGroup::class_power_map(int64_t k) const {
    std::vector<uint32_t> out(classes_.size());
    for (uint32_t c = 0; c < classes_.size(); ++c)
        out[c] = class_of_[power(classes_[c].rep_index, k)];
    return out;
}

std::vector<std::vector<uint32_t>> FiniteGroup::cyclic_subgroup_reps() const {
    // All cyclic subgroups, as sorted index sets.
    std::set<std::vector<uint32_t>> subgroups;
    for (uint32_t g = 0; g < order(); ++g) {
        std::set<uint32_t> members = {0u};
        uint32_t x = g;
        while (x != 0) { members.insert(x); x = mult(x, g); }
        subgroups.insert(std::vector<uint32_t>(members.begin(), members.end()));
    }
    // Fuse conjugates; keep the lexicographically smallest member of each
    // conjugacy class of subgroups.
    std::vector<std::vector<uint32_t>> reps;
    std::set<std::vector<uint32_t>> seen;
    for (const auto& H : subgroups) {
        if (seen.contains(H)) continue;
        std::vector<std::vector<uint32_t>> orbit;
        for (uint32_t x = 0; x < order(); ++x) {
            std::vector<uint32_t> conj;
            conj.reserve(H.size());
            for (uint32_t h : H) conj.push_back(mult(mult(x, h), inverse_[x]));
            std::sort(conj.begin(), conj.end());
            if (!seen.contains(conj)) { seen.insert(conj); orbit.push_back(std::move(conj)); }
        }
        reps.push_back(*std::min_element(orbit.begin(), orbit.end()));
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return reps;
}

std::optional<FiniteGroup> FiniteGroup::normal_sylow_quotient(uint64_t p) const {
    // p-part of |G|
    uint64_t pa = 1, m = order();
    while (m % p == 0) { m /= p; pa *= p; }

    // The union of all Sylow p-subgroups is the set of p-elements; it has size
    // p^a exactly when the Sylow subgroup is unique, i.e. normal.
    std::vector<uint32_t> p_elements;
    for (uint32_t i = 0; i < order(); ++i) {
        uint64_t o = element_order_[i];
        while (o % p == 0) o /= p;
        if (o == 1) p_elements.push_back(i);
    }
    if (p_elements.size() != pa) return std::nullopt;

    // Cosets of P, each as a sorted index set; the quotient acts on them.
    std::vector<bool> in_p(order(), false);
    for (uint32_t i : p_elements) in_p[i] = true;
    std::vector<uint32_t> coset_of(order(), UINT32_MAX);
    std::vector<uint32_t> coset_reps;
    for (uint32_t g = 0; g < order(); ++g) {
        if (coset_of[g] != UINT32_MAX) continue;
        uint32_t tag = static_cast<uint32_t>(coset_reps.size());
        coset_reps.push_back(g);
        for (uint32_t h : p_elements) coset_of[mult(g, h)] = tag;  // right coset gP
    }

    // Image of each group element as a permutation of the cosets.
    std::set<Perm> images;
    for (uint32_t g = 0; g < order(); ++g) {
        std::vector<uint32_t> img(coset_reps.size());
        for (uint32_t c = 0; c < coset_reps.size(); ++c)
            img[c] = coset_of[mult(g, coset_reps[c])];
        images.insert(Perm(std::move(img)));
    }
    std::vector<Perm> gens(images.begin(), images.end());
    return from_generators(name_ + "/Syl" + std::to_string(p), std::move(gens));
}

FiniteGroup FiniteGroup::builtin(const std::string& descriptor) {
    auto parse_n = [&](size_t offset) -> uint32_t {
        if (descriptor.size() <= offset) throw SchemaError("group descriptor missing size: " + descriptor);
        for (size_t i = offset; i < descriptor.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(descriptor[i])))
                throw SchemaError("bad group descriptor: " + descriptor);
        unsigned long n = std::stoul(descriptor.substr(offset));
        if (n == 0) throw SchemaError("group size must be positive: " + descriptor);
        return static_cast<uint32_t>(n);
    };
    if (descriptor == "Q8") {
        // Regular action on {1,-1,i,-i,j,-j,k,-k}; generators: left translation
        // by i and by j.
        Perm gi(std::vector<uint32_t>{2, 3, 1, 0, 6, 7, 5, 4});
        Perm gj(std::vector<uint32_t>{4, 5, 7, 6, 1, 0, 2, 3});
        return from_generators("Q8", {gi, gj});
    }
    if (descriptor.size() >= 2 && descriptor[0] == 'C') {
        uint32_t n = parse_n(1);
        std::vector<uint32_t> imgs(n);
        for (uint32_t i = 0; i < n; ++i) imgs[i] = (i + 1) % n;
        return from_generators(descriptor, {Perm(std::move(imgs))});
    }
    if (descriptor.size() >= 2 && descriptor[0] == 'S') {
        uint32_t n = parse_n(1);
        if (n == 1) return builtin("C1");
        std::vector<uint32_t> cyc(n), swap01(n);
        for (uint32_t i = 0; i < n; ++i) { cyc[i] = (i + 1) % n; swap01[i] = i; }
        std::swap(swap01[0], swap01[1]);
        return from_generators(descriptor, {Perm(std::move(swap01)), Perm(std::move(cyc))});
    }
    if (descriptor.size() >= 2 && descriptor[0] == 'A') {
        uint32_t n = parse_n(1);
        if (n <= 2) return FiniteGroup::from_generators(descriptor, {Perm::identity(std::max(n, 1u))});
        std::vector<uint32_t> three(n);
        std::iota(three.begin(), three.end(), 0u);
        three[0] = 1; three[1] = 2; three[2] = 0;  // (1,2,3)
        if (n == 3) return from_generators(descriptor, {Perm(std::move(three))});
        std::vector<uint32_t> big(n);
        std::iota(big.begin(), big.end(), 0u);
        if (n % 2 == 1) {
            for (uint32_t i = 0; i < n; ++i) big[i] = (i + 1) % n;           // n-cycle
        } else {
            for (uint32_t i = 1; i < n; ++i) big[i] = 1 + (i % (n - 1));     // (2,3,...,n)
        }
        return from_generators(descriptor, {Perm(std::move(three)), Perm(std::move(big))});
    }
    if (descriptor.size() >= 2 && descriptor[0] == 'D') {
        uint32_t n = parse_n(1);
        if (n < 3) throw SchemaError("dihedral descriptor needs n >= 3: " + descriptor);
        std::vector<uint32_t> rot(n), refl(n);
        for (uint32_t i = 0; i < n; ++i) { rot[i] = (i + 1) % n; refl[i] = (n - i) % n; }
        return from_generators(descriptor, {Perm(std::move(rot)), Perm(std::move(refl))});
    }
    throw SchemaError("unknown group descriptor: " + descriptor);
}

} // namespace zpg
