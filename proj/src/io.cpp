#include "zpg/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <utility>
#include <vector>

#include "zpg/cyclotomic.hpp"
#include "zpg/error.hpp"
#include "zpg/perm.hpp"
#include "zpg/rational.hpp"

#ifndef ZPG_FIXTURE_DIR
#define ZPG_FIXTURE_DIR "fixtures"
#endif

namespace zpg {
namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& ex) {
        throw SchemaError(path + ": " + ex.what());
    }
    if (!j.is_object()) throw SchemaError(path + ": top level must be a JSON object");
    return j;
}

const json& field(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + ": missing field \"" + key + "\"");
    return *it;
}

std::string get_string(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_string())
        throw SchemaError(where + ": field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

uint64_t get_uint(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_unsigned())
        throw SchemaError(where + ": field \"" + key + "\" must be a nonnegative integer");
    return v.get<uint64_t>();
}

Rational get_rational(const json& v, const std::string& where) {
    if (!v.is_string())
        throw SchemaError(where + ": expected a rational string \"a\" or \"a/b\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const Error& ex) {
        throw SchemaError(where + ": " + ex.what());
    }
}

// A value is either a rational string or a list of [exponent, coefficient]
// terms in the root of unity of the ambient conductor.
Cyclotomic get_value(const json& v, uint32_t conductor, const std::string& where) {
    if (v.is_string()) return Cyclotomic(conductor, get_rational(v, where));
    if (!v.is_array())
        throw SchemaError(where +
                          ": expected \"a/b\" or a list of [exponent, \"a/b\"] terms");
    std::vector<std::pair<int64_t, Rational>> terms;
    for (const json& t : v) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
            throw SchemaError(where + ": each term must be [exponent, \"a/b\"]");
        terms.emplace_back(t[0].get<int64_t>(), get_rational(t[1], where));
    }
    return Cyclotomic::from_terms(conductor, terms);
}

Perm get_perm(const json& v, uint32_t degree, const std::string& where) {
    if (!v.is_string())
        throw SchemaError(where + ": expected a permutation cycle string");
    try {
        return Perm::parse_cycles(v.get<std::string>(), degree);
    } catch (const Error& ex) {
        throw SchemaError(where + ": " + ex.what());
    }
}

std::unique_ptr<FiniteGroup> group_from_file(const std::string& path) {
    json j = parse_file(path);
    std::string name = get_string(j, "name", path);
    uint64_t degree = get_uint(j, "degree", path);
    if (degree == 0 || degree > 1024)
        throw SchemaError(path + ": degree out of range");
    const json& gens = field(j, "generators", path);
    if (!gens.is_array() || gens.empty())
        throw SchemaError(path + ": \"generators\" must be a nonempty array");
    std::vector<Perm> generators;
    for (const json& gj : gens)
        generators.push_back(get_perm(gj, static_cast<uint32_t>(degree), path));
    return std::make_unique<FiniteGroup>(
        FiniteGroup::from_generators(std::move(name), std::move(generators)));
}

// Maps a file's class list onto the group's conjugacy classes through the
// stated representatives, checking sizes and element orders.  Returns
// to_group[i] = class index of the i-th listed class.
std::vector<uint32_t> match_classes(const FiniteGroup& g, const json& classes,
                                    const std::string& where) {
    if (!classes.is_array() || classes.size() != g.classes().size())
        throw SchemaError(where + ": \"classes\" must list exactly " +
                          std::to_string(g.classes().size()) + " conjugacy classes");
    std::vector<uint32_t> to_group(classes.size());
    std::vector<bool> seen(g.classes().size(), false);
    for (size_t i = 0; i < classes.size(); ++i) {
        std::string loc = where + ": classes[" + std::to_string(i) + "]";
        const json& cj = classes[i];
        if (!cj.is_object()) throw SchemaError(loc + ": must be an object");
        Perm rep = get_perm(field(cj, "rep", loc), g.degree(), loc);
        uint32_t idx;
        try {
            idx = g.index_of(rep);
        } catch (const Error&) {
            throw SemanticError(loc + ": representative is not an element of " + g.name());
        }
        uint32_t c = g.class_of(idx);
        if (seen[c]) throw SemanticError(loc + ": conjugacy class listed twice");
        seen[c] = true;
        if (get_uint(cj, "size", loc) != g.classes()[c].size)
            throw SemanticError(loc + ": class size does not match the group");
        if (get_uint(cj, "order", loc) != g.classes()[c].element_order)
            throw SemanticError(loc + ": element order does not match the group");
        to_group[i] = c;
    }
    return to_group;
}

} // namespace

std::unique_ptr<FiniteGroup> load_group(const std::string& descriptor) {
    if (descriptor.empty()) throw SchemaError("empty group descriptor");
    if (descriptor.front() == '@') return group_from_file(descriptor.substr(1));
    return std::make_unique<FiniteGroup>(FiniteGroup::builtin(descriptor));
}

std::string fixture_path(const std::string& name) {
    namespace fs = std::filesystem;
    if (fs::exists(fs::path(name))) return name;
    if (name.find('/') != std::string::npos)
        throw SchemaError("no such file: " + name);
    fs::path base(ZPG_FIXTURE_DIR);
    for (const fs::path& cand : {base / name, base / (name + ".json")})
        if (fs::exists(cand)) return cand.string();
    throw SchemaError("no fixture named \"" + name + "\" under " + base.string());
}

LoadedTable load_table_file(const std::string& path) {
    json j = parse_file(path);
    LoadedTable out;
    out.group = load_group(get_string(j, "group", path));
    const FiniteGroup& g = *out.group;

    uint64_t conductor = get_uint(j, "conductor", path);
    if (conductor != g.exponent())
        throw SchemaError(path + ": conductor must equal the group exponent " +
                          std::to_string(g.exponent()));

    std::vector<uint32_t> to_group = match_classes(g, field(j, "classes", path), path);
    size_t k = g.classes().size();

    CharacterTable t;
    t.group = &g;
    t.conductor = static_cast<uint32_t>(conductor);
    const json& rows = field(j, "rows", path);
    if (!rows.is_array() || rows.size() != k)
        throw SchemaError(path + ": \"rows\" must list exactly " + std::to_string(k) +
                          " characters");
    for (size_t r = 0; r < rows.size(); ++r) {
        std::string loc = path + ": rows[" + std::to_string(r) + "]";
        const json& rj = rows[r];
        if (!rj.is_object()) throw SchemaError(loc + ": must be an object");
        t.labels.push_back(get_string(rj, "label", loc));
        const json& vals = field(rj, "values", loc);
        if (!vals.is_array() || vals.size() != k)
            throw SchemaError(loc + ": \"values\" must have one entry per class");
        std::vector<Cyclotomic> row(k, Cyclotomic(t.conductor));
        for (size_t i = 0; i < k; ++i)
            row[to_group[i]] = get_value(vals[i], t.conductor, loc);
        t.rows.push_back(std::move(row));
    }
    verify_table(t);
    out.table = std::move(t);
    return out;
}

LoadedModular load_modular_file(const std::string& path) {
    json j = parse_file(path);
    LoadedModular out;
    out.group = load_group(get_string(j, "group", path));
    const FiniteGroup& g = *out.group;

    ModularData m;
    m.group = &g;
    m.p = get_uint(j, "p", path);
    m.conductor = static_cast<uint32_t>(get_uint(j, "conductor", path));

    const json& reg = field(j, "regular_classes", path);
    if (!reg.is_array() || reg.empty())
        throw SchemaError(path + ": \"regular_classes\" must be a nonempty array");
    std::vector<uint32_t> listed;   // class index of each listed representative
    for (size_t i = 0; i < reg.size(); ++i) {
        std::string loc = path + ": regular_classes[" + std::to_string(i) + "]";
        Perm rep = get_perm(reg[i], g.degree(), loc);
        uint32_t idx;
        try {
            idx = g.index_of(rep);
        } catch (const Error&) {
            throw SemanticError(loc + ": representative is not an element of " + g.name());
        }
        listed.push_back(g.class_of(idx));
    }
    // Re-sort into ascending class-index order, remembering the permutation so
    // row values (listed in file order) can follow.
    std::vector<size_t> perm(listed.size());
    std::iota(perm.begin(), perm.end(), size_t{0});
    std::sort(perm.begin(), perm.end(),
              [&](size_t a, size_t b) { return listed[a] < listed[b]; });
    for (size_t i = 0; i + 1 < perm.size(); ++i)
        if (listed[perm[i]] == listed[perm[i + 1]])
            throw SemanticError(path + ": a p-regular class is listed twice");
    for (size_t i : perm) m.regular_classes.push_back(listed[i]);

    const json& rows = field(j, "rows", path);
    if (!rows.is_array() || rows.empty())
        throw SchemaError(path + ": \"rows\" must be a nonempty array");
    for (size_t r = 0; r < rows.size(); ++r) {
        std::string loc = path + ": rows[" + std::to_string(r) + "]";
        const json& rj = rows[r];
        if (!rj.is_object()) throw SchemaError(loc + ": must be an object");
        BrauerRow row;
        row.label = get_string(rj, "label", loc);
        row.dim = get_uint(rj, "dim", loc);
        row.s = get_uint(rj, "s", loc);
        const json& vals = field(rj, "values", loc);
        if (!vals.is_array() || vals.size() != listed.size())
            throw SchemaError(loc + ": \"values\" must have one entry per regular class");
        std::vector<Cyclotomic> v;
        for (size_t i : perm) v.push_back(get_value(vals[i], m.conductor, loc));
        row.values = std::move(v);
        m.rows.push_back(std::move(row));
    }

    if (auto it = j.find("cartan_columns"); it != j.end()) {
        const json& cc = *it;
        if (!cc.is_array() || cc.size() != m.rows.size())
            throw SchemaError(path + ": \"cartan_columns\" must have one column per row");
        std::vector<std::vector<uint64_t>> cols;
        for (const json& col : cc) {
            if (!col.is_array() || col.size() != m.rows.size())
                throw SchemaError(path + ": each Cartan column must have one entry per row");
            std::vector<uint64_t> c;
            for (const json& e : col) {
                if (!e.is_number_unsigned())
                    throw SchemaError(path + ": Cartan entries must be nonnegative integers");
                c.push_back(e.get<uint64_t>());
            }
            cols.push_back(std::move(c));
        }
        m.cartan_columns = std::move(cols);
    }

    verify_modular_data(m);
    out.modular = std::move(m);
    return out;
}

LoadedIdemTable load_idemtable_file(const std::string& path) {
    json j = parse_file(path);
    LoadedIdemTable out;
    out.group = load_group(get_string(j, "group", path));
    out.p = get_uint(j, "p", path);
    const json& idems = field(j, "idempotents", path);
    if (!idems.is_array() || idems.empty())
        throw SchemaError(path + ": \"idempotents\" must be a nonempty array");
    for (size_t c = 0; c < idems.size(); ++c) {
        std::string loc = path + ": idempotents[" + std::to_string(c) + "]";
        const json& ij = idems[c];
        if (!ij.is_object()) throw SchemaError(loc + ": must be an object");
        std::string label = get_string(ij, "label", loc);
        const json& coeffs = field(ij, "coeffs", loc);
        if (!coeffs.is_array())
            throw SchemaError(loc + ": \"coeffs\" must be an array of pairs");
        std::vector<std::pair<std::string, std::string>> pairs;
        for (const json& pj : coeffs) {
            if (!pj.is_array() || pj.size() != 2 || !pj[0].is_string() ||
                !pj[1].is_string())
                throw SchemaError(loc + ": each coefficient must be [cycles, \"a/b\"]");
            pairs.emplace_back(pj[0].get<std::string>(), pj[1].get<std::string>());
        }
        try {
            out.columns.emplace_back(std::move(label),
                                     algq_from_sparse(*out.group, pairs));
        } catch (const SchemaError& ex) {
            throw SchemaError(loc + ": " + ex.what());
        } catch (const Error& ex) {
            throw SemanticError(loc + ": " + ex.what());
        }
    }
    return out;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order() || a.degree() != b.degree()) return false;
    for (uint32_t i = 0; i < a.order(); ++i)
        if (a.element(i).images() != b.element(i).images()) return false;
    return true;
}

ModularData rebind_modular(const ModularData& m, const FiniteGroup& g) {
    if (!m.group || !same_group(*m.group, g))
        throw DomainMismatch("modular data describes a different group");
    ModularData out = m;
    out.group = &g;
    return out;
}

} // namespace zpg
