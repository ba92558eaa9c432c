#include "zpg/perm.hpp"

#include <algorithm>
#include <numeric>

namespace zpg {

Perm::Perm(std::vector<uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (uint32_t img : images_) {
        if (img >= images_.size() || seen[img])
            throw NotAGroup("image list is not a bijection");
        seen[img] = true;
    }
}

Perm Perm::identity(uint32_t degree) {
    std::vector<uint32_t> imgs(degree);
    std::iota(imgs.begin(), imgs.end(), 0u);
    return Perm(std::move(imgs));
}

Perm Perm::parse_cycles(std::string_view text, uint32_t degree) {
    std::vector<uint32_t> imgs(degree);
    std::iota(imgs.begin(), imgs.end(), 0u);
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    bool saw_cycle = false;
    while (i < text.size()) {
        if (text[i] != '(') throw SchemaError("cycle notation: expected '('");
        ++i;
        std::vector<uint32_t> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw SchemaError("cycle notation: expected a point");
            unsigned long point = std::stoul(std::string(text.substr(start, i - start)));
            if (point == 0 || point > degree)
                throw SchemaError("cycle notation: point out of range for degree " + std::to_string(degree));
            cycle.push_back(static_cast<uint32_t>(point - 1));
            skip_ws();
            if (i < text.size() && (text[i] == ',' || text[i] == ' ')) { ++i; skip_ws(); }
        }
        if (i == text.size()) throw SchemaError("cycle notation: missing ')'");
        ++i; // ')'
        skip_ws();
        saw_cycle = true;
        for (size_t k = 0; k + 1 < cycle.size(); ++k) {
            if (imgs[cycle[k]] != cycle[k])
                throw SchemaError("cycle notation: point repeated");
        }
        for (size_t k = 0; k < cycle.size(); ++k) {
            uint32_t from = cycle[k], to = cycle[(k + 1) % cycle.size()];
            if (cycle.size() > 1 && imgs[from] != from)
                throw SchemaError("cycle notation: point repeated");
            imgs[from] = to;
        }
    }
    if (!saw_cycle) throw SchemaError("cycle notation: empty string");
    return Perm(std::move(imgs));
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.degree() != b.degree()) throw NotAGroup("degree mismatch in composition");
    std::vector<uint32_t> imgs(a.degree());
    for (uint32_t i = 0; i < a.degree(); ++i) imgs[i] = a.images_[b.images_[i]];
    return Perm(std::move(imgs));
}

Perm Perm::inverse() const {
    std::vector<uint32_t> imgs(images_.size());
    for (uint32_t i = 0; i < images_.size(); ++i) imgs[images_[i]] = i;
    return Perm(std::move(imgs));
}

bool Perm::is_identity() const {
    for (uint32_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

uint64_t Perm::order() const {
    // lcm of cycle lengths
    uint64_t result = 1;
    std::vector<bool> seen(images_.size(), false);
    for (uint32_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        uint64_t len = 0;
        for (uint32_t j = i; !seen[j]; j = images_[j]) { seen[j] = true; ++len; }
        result = std::lcm(result, len);
    }
    return result;
}

std::string Perm::cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (uint32_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) { seen[i] = true; continue; }
        out += '(';
        bool first = true;
        for (uint32_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            if (!first) out += ',';
            out += std::to_string(j + 1);
            first = false;
        }
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

} // namespace zpg
