#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zpg/perm.hpp"

namespace zpg {

// A conjugacy class, described by member indices into the group's element list.
struct ConjClass {
    uint32_t rep_index = 0;                 // smallest member index
    std::vector<uint32_t> member_indices;   // sorted ascending
    uint64_t size = 0;
    uint64_t element_order = 0;
};

// A finite permutation group held fully in memory: element list (identity at
// index 0), multiplication table, and conjugacy class data.  Elements are
// enumerated from the generators breadth-first, sorting each new BFS layer by
// image list, so the indexing depends only on the generator list.
class FiniteGroup {
public:
    static constexpr size_t kMaxOrder = 10000;

    // Closure of the generator list.  Throws ClosureTooLarge past max_order.
    static FiniteGroup from_generators(std::string name, std::vector<Perm> generators,
                                       size_t max_order = kMaxOrder);
    // Builtin families: "C<n>", "S<n>", "A<n>", "D<n>" (order 2n, n >= 3), "Q8".
    static FiniteGroup builtin(const std::string& descriptor);

    const std::string& name() const { return name_; }
    size_t order() const { return elements_.size(); }
    uint64_t exponent() const { return exponent_; }
    uint32_t degree() const { return elements_.front().degree(); }

    const Perm& element(uint32_t i) const { return elements_[i]; }
    const std::vector<Perm>& elements() const { return elements_; }
    uint32_t index_of(const Perm& p) const;

    uint32_t mult(uint32_t i, uint32_t j) const { return table_[i * order() + j]; }
    uint32_t inverse(uint32_t i) const { return inverse_[i]; }
    uint32_t power(uint32_t i, int64_t k) const;
    uint64_t element_order(uint32_t i) const { return element_order_[i]; }

    // Classes sorted by (element order, size, smallest member index); the
    // identity class is therefore first.
    const std::vector<ConjClass>& classes() const { return classes_; }
    uint32_t class_of(uint32_t element_index) const { return class_of_[element_index]; }

    // class_power_map(k)[c] = class containing g^k for g in class c.  k is
    // taken mod the exponent, so negative k works.
    std::vector<uint32_t> class_power_map(int64_t k) const;

    // One representative per conjugacy class of cyclic subgroups, each given as
    // the sorted element-index set; ordered by (size, member list).
    std::vector<std::vector<uint32_t>> cyclic_subgroup_reps() const;

    // If the Sylow p-subgroup P is normal, the quotient G/P as a permutation
    // group on the cosets (regular action); otherwise nullopt.  For p not
    // dividing |G| this returns G itself re-enumerated in its regular action.
    std::optional<FiniteGroup> normal_sylow_quotient(uint64_t p) const;

private:
    FiniteGroup() = default;
    void finalize();   // tables, orders, classes

    std::string name_;
    std::vector<Perm> elements_;
    std::map<std::vector<uint32_t>, uint32_t> index_;  // image list -> element index
    std::vector<uint32_t> table_;                      // order x order
    std::vector<uint32_t> inverse_;
    std::vector<uint64_t> element_order_;
    uint64_t exponent_ = 1;
    std::vector<ConjClass> classes_;
    std::vector<uint32_t> class_of_;
};

} // namespace zpg
