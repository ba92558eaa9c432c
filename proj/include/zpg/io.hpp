#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "zpg/algelem.hpp"
#include "zpg/chartab.hpp"
#include "zpg/group.hpp"
#include "zpg/ktheory.hpp"

namespace zpg {

// Turns a group descriptor into a group.  Accepted forms:
//   - a builtin family name: "C<n>", "S<n>", "A<n>", "D<n>", "Q8";
//   - "@<path>": a JSON file {"name": str, "degree": int,
//     "generators": [cycle strings]} closed under products.
// Throws SchemaError on malformed files, NotAGroup / ClosureTooLarge as usual.
std::unique_ptr<FiniteGroup> load_group(const std::string& descriptor);

// Resolves a fixture name to a path: a name that already exists as a file (or
// contains a path separator) is returned as-is, otherwise it is looked up in
// the compiled-in fixture directory, appending ".json" when absent.  Throws
// SchemaError if nothing exists at the resolved location.
std::string fixture_path(const std::string& name);

// A character table read from disk, together with the group it refers to.
// table.group points at *group.
struct LoadedTable {
    std::unique_ptr<FiniteGroup> group;
    CharacterTable table;
};

// Reads {"group", "conductor", "classes": [{"rep", "size", "order"}],
// "rows": [{"label", "values"}]} where each value is either a rational string
// "a/b" or a list of [exponent, "a/b"] terms in the root of unity of the
// stated conductor.  The file's class listing is matched bijectively to the
// group's conjugacy classes through the representatives, columns are permuted
// into the group's class order, and the result must pass the full
// orthogonality verification.  Throws SchemaError / SemanticError.
LoadedTable load_table_file(const std::string& path);

// Modular (p-singular) reference data read from disk; modular.group points at
// *group.
struct LoadedModular {
    std::unique_ptr<FiniteGroup> group;
    ModularData modular;
};

// Reads {"group", "p", "conductor", "regular_classes": [cycle strings],
// "rows": [{"label", "dim", "s", "values"}], "cartan_columns": [[int]]?}.
// Row values are listed in the order of the "regular_classes" array and are
// re-sorted into ascending class-index order along with the class list.
// The result must pass the modular consistency verification.
LoadedModular load_modular_file(const std::string& path);

// A table of claimed rational idempotent certificates, one column per
// projective type.
struct LoadedIdemTable {
    std::unique_ptr<FiniteGroup> group;
    uint64_t p = 0;
    std::vector<std::pair<std::string, AlgQ>> columns;
};

// Reads {"group", "p", "idempotents": [{"label", "coeffs":
// [[cycle string, "a/b"], ...]}]}.  Coefficients are sparse: omitted group
// elements are zero.  Only shape and group membership are checked here;
// idempotency and type identification are the verifier's job.
LoadedIdemTable load_idemtable_file(const std::string& path);

// True when the two groups have the same degree and identical element
// enumeration (hence the same multiplication table and class order).
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

// Copy of m pointing at another instance of the same group, so data loaded
// from separate files can be combined.  Throws DomainMismatch unless
// same_group(*m.group, g).
ModularData rebind_modular(const ModularData& m, const FiniteGroup& g);

} // namespace zpg
