#pragma once
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zpg/error.hpp"

namespace zpg {

// A permutation of {0, ..., degree-1}, stored as its image list.  Points are
// 0-based internally; cycle notation in text form is 1-based, so "(1,2,3)" on
// degree 3 maps 0->1, 1->2, 2->0.
class Perm {
public:
    explicit Perm(std::vector<uint32_t> images);
    static Perm identity(uint32_t degree);
    // Parse "(1,2,3)(4,5)" or "()" into a permutation of the given degree.
    static Perm parse_cycles(std::string_view text, uint32_t degree);

    uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }
    uint32_t apply(uint32_t point) const { return images_[point]; }

    // (a * b) applies b first, then a.
    friend Perm operator*(const Perm& a, const Perm& b);
    Perm inverse() const;
    bool is_identity() const;
    uint64_t order() const;

    // Canonical 1-based cycle notation: cycles sorted by smallest moved point,
    // each cycle starting at its smallest member; identity prints "()".
    std::string cycle_string() const;

    const std::vector<uint32_t>& images() const { return images_; }
    auto operator<=>(const Perm&) const = default;

private:
    std::vector<uint32_t> images_;
};

} // namespace zpg
