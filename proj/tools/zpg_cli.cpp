// Command-line front end for the p-local group algebra toolkit.
//
// Subcommands: table, criterion, cyclic, reduce, lift, verify-idem,
// conjecture.  Group descriptors: C<n>, S<n>, A<n>, D<n>, Q8, or @path.json.
//
// Exit codes: 0 positive verdict / all checks pass, 1 negative verdict /
// check failure, 2 undecided or certificate not found, 64 usage error,
// 65 file or data error.
#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <zpg/algelem.hpp>
#include <zpg/chartab.hpp>
#include <zpg/cyclotomic.hpp>
#include <zpg/error.hpp>
#include <zpg/group.hpp>
#include <zpg/io.hpp>
#include <zpg/ktheory.hpp>
#include <zpg/lifting.hpp>
#include <zpg/ordcrit.hpp>
#include <zpg/rational.hpp>

using nlohmann::ordered_json;
using namespace zpg;

namespace {

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kUnknown = 2;
constexpr int kUsage = 64;
constexpr int kDataError = 65;

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::Semiperfect: return kPositive;
        case Verdict::NotSemiperfect: return kNegative;
        default: return kUnknown;
    }
}

std::string schur_str(SchurVerdict v) {
    switch (v) {
        case SchurVerdict::One: return "One";
        case SchurVerdict::AtLeastTwo: return "AtLeastTwo";
        default: return "Unknown";
    }
}

// --- JSON rendering ----------------------------------------------------------

ordered_json value_json(const Cyclotomic& v) {
    if (v.is_rational()) return rational_str(v.rational_part());
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : v.terms())
        terms.push_back(ordered_json::array({e, rational_str(c)}));
    return terms;
}

ordered_json sparse_json(const AlgQ& a) {
    ordered_json arr = ordered_json::array();
    for (const auto& [cyc, val] : algq_sparse(a))
        arr.push_back(ordered_json::array({cyc, val}));
    return arr;
}

// Emitted in the same shape the table loader accepts.
ordered_json table_json(const CharacterTable& t) {
    const FiniteGroup& g = *t.group;
    ordered_json j;
    j["group"] = g.name();
    j["conductor"] = t.conductor;
    ordered_json classes = ordered_json::array();
    for (const auto& c : g.classes()) {
        ordered_json cj;
        cj["rep"] = g.element(c.rep_index).cycle_string();
        cj["size"] = c.size;
        cj["order"] = c.element_order;
        classes.push_back(cj);
    }
    j["classes"] = classes;
    ordered_json rows = ordered_json::array();
    for (size_t r = 0; r < t.rows.size(); ++r) {
        ordered_json rj;
        rj["label"] = t.labels[r];
        ordered_json vals = ordered_json::array();
        for (const Cyclotomic& v : t.rows[r]) vals.push_back(value_json(v));
        rj["values"] = vals;
        rows.push_back(rj);
    }
    j["rows"] = rows;
    return j;
}

ordered_json criterion_json(const CriterionReport& rep) {
    ordered_json j;
    j["group"] = rep.group_name;
    j["p"] = rep.p;
    ordered_json orbits = ordered_json::array();
    for (const auto& o : rep.orbits) {
        ordered_json oj;
        oj["labels"] = o.labels;
        oj["field_degree"] = o.field_degree;
        oj["inert"] = o.inert;
        oj["schur"] = schur_str(o.schur.verdict);
        oj["indicator"] = o.schur.indicator;
        oj["witness"] = o.schur.witness;
        orbits.push_back(oj);
    }
    j["orbits"] = orbits;
    j["reduction_trail"] = rep.reduction_trail;
    j["verdict"] = verdict_str(rep.verdict);
    return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void print_criterion(const CriterionReport& rep) {
    std::cout << "group " << rep.group_name << "  p=" << rep.p << "\n";
    for (const auto& line : rep.reduction_trail) std::cout << "reduction: " << line << "\n";
    for (const auto& o : rep.orbits) {
        std::cout << "orbit {";
        for (size_t i = 0; i < o.labels.size(); ++i)
            std::cout << (i ? "," : "") << o.labels[i];
        std::cout << "}: degree " << o.field_degree << ", "
                  << (o.inert ? "inert" : "split") << ", Schur "
                  << schur_str(o.schur.verdict);
        if (!o.schur.witness.empty()) std::cout << " (" << o.schur.witness << ")";
        std::cout << "\n";
    }
    std::cout << "verdict: " << verdict_str(rep.verdict) << "\n";
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

// Brauer data for (g, p): an explicit --modular file if given; computed from
// the ordinary table when p is regular; otherwise a shipped fixture named
// <group>_p<p> if one exists.
ModularData resolve_modular(const FiniteGroup& g, uint64_t p, const std::string& file,
                            uint64_t seed) {
    if (!file.empty()) {
        LoadedModular lm = load_modular_file(fixture_path(file));
        if (lm.modular.p != p)
            throw SemanticError("modular file is for p=" + std::to_string(lm.modular.p) +
                                ", not p=" + std::to_string(p));
        return rebind_modular(lm.modular, g);
    }
    if (g.order() % p != 0) return modular_from_ordinary(dixon_table(g, seed), p);
    std::string name = lower(g.name()) + "_p" + std::to_string(p);
    std::string path;
    try {
        path = fixture_path(name);
    } catch (const SchemaError&) {
        throw SemanticError("p divides |" + g.name() +
                            "|: supply Brauer data with --modular <file> (no fixture \"" +
                            name + "\")");
    }
    return rebind_modular(load_modular_file(path).modular, g);
}

// --- subcommands -------------------------------------------------------------

int cmd_table(const std::string& gdesc, const std::string& fixture, uint64_t seed,
              bool json_out) {
    std::unique_ptr<FiniteGroup> g = load_group(gdesc);
    CharacterTable t = dixon_table(*g, seed);
    std::optional<bool> match;
    if (!fixture.empty()) {
        LoadedTable lt = load_table_file(fixture_path(fixture));
        if (!same_group(*lt.group, *g))
            throw DomainMismatch("fixture describes a different group");
        CharacterTable ft = lt.table;
        ft.group = g.get();
        match = same_characters(t, ft);
    }
    if (json_out) {
        ordered_json j = table_json(t);
        j["seed"] = seed;
        if (match) j["fixture_match"] = *match;
        emit(j);
    } else {
        std::cout << "group " << g->name() << "  classes " << g->classes().size()
                  << "  conductor " << t.conductor << "  seed=" << seed << "\n";
        for (size_t r = 0; r < t.rows.size(); ++r) {
            std::cout << t.labels[r] << ":";
            for (const Cyclotomic& v : t.rows[r]) std::cout << " " << v.str();
            std::cout << "\n";
        }
        if (match)
            std::cout << "fixture match: " << (*match ? "yes" : "NO") << "\n";
    }
    if (match && !*match) return kNegative;
    return kPositive;
}

int cmd_criterion(const std::string& gdesc, uint64_t p, uint64_t seed, bool json_out) {
    std::unique_ptr<FiniteGroup> g = load_group(gdesc);
    CriterionReport rep;
    if (g->order() % p != 0) {
        rep = semiperfect_ordinary(*g, p, seed);
    } else if (auto reduced = reduce_by_normal_sylow(*g, p, seed)) {
        rep = *reduced;
    } else {
        rep.group_name = g->name();
        rep.p = p;
        rep.verdict = Verdict::Unknown;
        rep.reduction_trail = {"Sylow " + std::to_string(p) +
                               "-subgroup is not normal; the ordinary criterion does not "
                               "apply (try `conjecture` with Brauer data)"};
    }
    if (json_out) {
        ordered_json j = criterion_json(rep);
        j["seed"] = seed;
        emit(j);
    } else {
        std::cout << "seed=" << seed << "\n";
        print_criterion(rep);
    }
    return verdict_exit(rep.verdict);
}

int cmd_cyclic(uint64_t n, uint64_t p, bool json_out) {
    if (n % p == 0) {
        if (json_out) {
            ordered_json j;
            j["n"] = n;
            j["p"] = p;
            j["verdict"] = verdict_str(Verdict::Unknown);
            j["reason"] = "p divides n";
            emit(j);
        } else {
            std::cout << "p divides n: the cyclic shortcut decides only the p-regular case\n";
        }
        return kUnknown;
    }
    CyclicReport rep = cyclic_criterion(n, p);
    if (json_out) {
        ordered_json j;
        j["n"] = rep.n;
        j["p"] = rep.p;
        ordered_json divs = ordered_json::array();
        for (const auto& d : rep.divisors) {
            ordered_json dj;
            dj["d"] = d.d;
            dj["order"] = d.order;
            dj["phi"] = d.phi;
            divs.push_back(dj);
        }
        j["divisors"] = divs;
        j["verdict"] = verdict_str(rep.verdict);
        emit(j);
    } else {
        std::cout << "C" << rep.n << "  p=" << rep.p << "\n";
        for (const auto& d : rep.divisors)
            std::cout << "d=" << d.d << ": ord_d(p)=" << d.order << " phi(d)=" << d.phi
                      << (d.order == d.phi ? "  inert" : "  split") << "\n";
        std::cout << "verdict: " << verdict_str(rep.verdict) << "\n";
    }
    return verdict_exit(rep.verdict);
}

int cmd_reduce(const std::string& gdesc, uint64_t p, uint64_t seed, bool json_out) {
    std::unique_ptr<FiniteGroup> g = load_group(gdesc);
    auto reduced = reduce_by_normal_sylow(*g, p, seed);
    if (!reduced) {
        if (json_out) {
            ordered_json j;
            j["group"] = g->name();
            j["p"] = p;
            j["seed"] = seed;
            j["reduced"] = false;
            j["verdict"] = verdict_str(Verdict::Unknown);
            emit(j);
        } else {
            std::cout << "Sylow " << p << "-subgroup of " << g->name()
                      << " is not normal: no reduction available\n";
        }
        return kUnknown;
    }
    if (json_out) {
        ordered_json j = criterion_json(*reduced);
        j["seed"] = seed;
        j["reduced"] = true;
        emit(j);
    } else {
        std::cout << "seed=" << seed << "\n";
        print_criterion(*reduced);
    }
    return verdict_exit(reduced->verdict);
}

int cmd_lift(const std::string& gdesc, uint64_t p, const std::string& label,
             const std::string& modfile, uint64_t seed, uint64_t precision_max,
             const std::string& height, bool json_out) {
    std::unique_ptr<FiniteGroup> g = load_group(gdesc);
    ModularData m = resolve_modular(*g, p, modfile, seed);
    std::vector<std::string> targets;
    if (!label.empty()) {
        targets.push_back(label);
    } else {
        for (const auto& row : m.rows) targets.push_back(row.label);
    }
    mpz_class height_bound(height);
    if (height_bound < 0) throw SemanticError("height bound must be nonnegative");

    bool all_found = true;
    ordered_json results = ordered_json::array();
    for (const auto& target : targets) {
        LiftOutcome out = lift_pim(*g, p, m, target, seed, precision_max, height_bound);
        if (json_out) {
            ordered_json rj;
            rj["label"] = target;
            rj["found"] = out.report.has_value();
            rj["precision_reached"] = out.precision_reached;
            rj["retries"] = out.retries_used;
            if (out.report) {
                rj["dim"] = out.report->dim;
                rj["precision"] = out.report->precision;
                rj["idempotent"] = sparse_json(out.report->idempotent);
            }
            results.push_back(rj);
        } else if (out.report) {
            std::cout << target << ": dim " << out.report->dim << ", precision p^"
                      << out.report->precision << ", retries " << out.retries_used
                      << "\n  e =";
            bool first = true;
            for (const auto& [cyc, val] : algq_sparse(out.report->idempotent)) {
                std::cout << (first ? " " : " + ") << val << "*" << cyc;
                first = false;
            }
            std::cout << "\n";
        } else {
            std::cout << target << ": NotFound (precision reached p^"
                      << out.precision_reached << ", retries " << out.retries_used
                      << ")\n";
        }
        all_found = all_found && out.report.has_value();
    }
    if (json_out) {
        ordered_json j;
        j["group"] = g->name();
        j["p"] = p;
        j["seed"] = seed;
        j["precision_max"] = precision_max;
        j["results"] = results;
        emit(j);
    }
    return all_found ? kPositive : kUnknown;
}

int cmd_verify_idem(const std::string& file, const std::string& modfile, uint64_t seed,
                    bool json_out) {
    LoadedIdemTable it = load_idemtable_file(fixture_path(file));
    ModularData m = resolve_modular(*it.group, it.p, modfile, seed);
    IdemTableReport rep = verify_idemtable(*it.group, it.p, it.columns, m, seed);
    if (json_out) {
        ordered_json j;
        j["group"] = rep.group_name;
        j["p"] = rep.p;
        j["seed"] = seed;
        ordered_json cols = ordered_json::array();
        for (const auto& c : rep.columns) {
            ordered_json cj;
            cj["label"] = c.declared_label;
            cj["idempotent"] = c.idempotent;
            cj["p_integral"] = c.p_integral;
            cj["dim"] = c.dim;
            cj["identified_label"] = c.identified_label;
            cj["label_matches"] = c.label_matches;
            cj["dim_matches"] = c.dim_matches;
            cols.push_back(cj);
        }
        j["columns"] = cols;
        j["all_ok"] = rep.all_ok;
        emit(j);
    } else {
        std::cout << "group " << rep.group_name << "  p=" << rep.p << "  seed=" << seed
                  << "\n";
        for (const auto& c : rep.columns)
            std::cout << c.declared_label << ": idempotent=" << (c.idempotent ? "yes" : "NO")
                      << " p-integral=" << (c.p_integral ? "yes" : "NO") << " dim=" << c.dim
                      << " identified=" << (c.identified_label.empty() ? "-" : c.identified_label)
                      << (c.label_matches && c.dim_matches ? "" : "  MISMATCH") << "\n";
        std::cout << (rep.all_ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
    return rep.all_ok ? kPositive : kNegative;
}

int cmd_conjecture(const std::string& gdesc, uint64_t p, const std::string& modfile,
                   uint64_t seed, bool json_out) {
    std::unique_ptr<FiniteGroup> g = load_group(gdesc);
    CharacterTable t = dixon_table(*g, seed);
    ModularData m = resolve_modular(*g, p, modfile, seed);
    if (!m.cartan_columns)
        throw SemanticError("the cone check needs Cartan columns in the modular data");
    DecompositionResult dec = decomposition_rows(t, m);
    ConeCertificate cert = cone_inclusion(dec.rows, *m.cartan_columns);

    if (json_out) {
        ordered_json j;
        j["group"] = g->name();
        j["p"] = p;
        j["seed"] = seed;
        ordered_json rows = ordered_json::array();
        for (size_t r = 0; r < dec.rows.size(); ++r) {
            ordered_json rj;
            rj["label"] = dec.row_labels[r];
            rj["row"] = dec.rows[r];
            rows.push_back(rj);
        }
        j["decomposition_rows"] = rows;
        j["cartan_columns"] = *m.cartan_columns;
        j["holds"] = cert.holds;
        if (cert.holds)
            j["coefficients"] = cert.coefficients;
        else
            j["witness_column"] = *cert.witness_column;
        emit(j);
    } else {
        std::cout << "group " << g->name() << "  p=" << p << "  seed=" << seed << "\n";
        for (size_t r = 0; r < dec.rows.size(); ++r) {
            std::cout << "row " << dec.row_labels[r] << ": (";
            for (size_t i = 0; i < dec.rows[r].size(); ++i)
                std::cout << (i ? "," : "") << dec.rows[r][i];
            std::cout << ")\n";
        }
        if (cert.holds) {
            std::cout << "cone inclusion holds; certificates:\n";
            for (size_t c = 0; c < cert.coefficients.size(); ++c) {
                std::cout << "  column " << m.rows[c].label << " =";
                for (size_t r = 0; r < cert.coefficients[c].size(); ++r)
                    if (cert.coefficients[c][r] != 0)
                        std::cout << " + " << cert.coefficients[c][r] << "*row("
                                  << dec.row_labels[r] << ")";
                std::cout << "\n";
            }
        } else {
            std::cout << "cone inclusion FAILS at column " << *cert.witness_column << " ("
                      << m.rows[*cert.witness_column].label << ")\n";
        }
    }
    return cert.holds ? kPositive : kNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semiperfectness toolkit for p-local group algebras"};
    app.require_subcommand(1);

    std::string gdesc, fixture, modfile, label, file, height = "0";
    uint64_t p = 0, seed = 0, precision_max = 4096, n = 0;
    bool json_out = false, all = false;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json_out, "JSON output"); };
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "RNG seed (default 0; printed in reports)");
    };
    auto add_prime = [&](CLI::App* sub) {
        sub->add_option("-p,--prime", p, "the prime p")->required();
    };

    CLI::App* t = app.add_subcommand("table", "ordinary character table of a group");
    t->add_option("group", gdesc, "group descriptor (C<n>, S<n>, A<n>, D<n>, Q8, @path.json)")
        ->required();
    t->add_option("--fixture", fixture, "compare against a stored table");
    add_seed(t);
    add_json(t);

    CLI::App* c = app.add_subcommand("criterion",
                                     "decide semiperfectness of the p-local group algebra");
    c->add_option("group", gdesc, "group descriptor")->required();
    add_prime(c);
    add_seed(c);
    add_json(c);

    CLI::App* cy = app.add_subcommand("cyclic", "fast criterion for cyclic groups");
    cy->add_option("n", n, "order of the cyclic group")->required();
    add_prime(cy);
    add_json(cy);

    CLI::App* r = app.add_subcommand("reduce", "factor out a normal Sylow p-subgroup");
    r->add_option("group", gdesc, "group descriptor")->required();
    add_prime(r);
    add_seed(r);
    add_json(r);

    CLI::App* l = app.add_subcommand("lift",
                                     "rational idempotent certificates for projective types");
    l->add_option("group", gdesc, "group descriptor")->required();
    add_prime(l);
    l->add_option("label", label, "projective type to lift (default: all)");
    l->add_flag("--all", all, "lift every projective type (the default)");
    l->add_option("--modular", modfile, "Brauer data file");
    l->add_option("--precision-max", precision_max, "residue exponent cap (default 4096)");
    l->add_option("--height", height, "numerator/denominator bound for reconstruction");
    add_seed(l);
    add_json(l);

    CLI::App* v = app.add_subcommand("verify-idem", "re-verify a table of idempotents");
    v->add_option("file", file, "idempotent table (path or fixture name)")->required();
    v->add_option("--modular", modfile, "Brauer data file");
    add_seed(v);
    add_json(v);

    CLI::App* cj = app.add_subcommand("conjecture",
                                      "K-theoretic cone inclusion for the modular case");
    cj->add_option("group", gdesc, "group descriptor")->required();
    add_prime(cj);
    cj->add_option("--modular", modfile, "Brauer data file");
    add_seed(cj);
    add_json(cj);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    if ((c->parsed() || cy->parsed() || r->parsed() || l->parsed() || cj->parsed()) &&
        !is_prime_u64(p)) {
        std::cerr << "error: " << p << " is not prime\n";
        return kUsage;
    }
    (void)all;

    try {
        if (t->parsed()) return cmd_table(gdesc, fixture, seed, json_out);
        if (c->parsed()) return cmd_criterion(gdesc, p, seed, json_out);
        if (cy->parsed()) return cmd_cyclic(n, p, json_out);
        if (r->parsed()) return cmd_reduce(gdesc, p, seed, json_out);
        if (l->parsed())
            return cmd_lift(gdesc, p, label, modfile, seed, precision_max, height, json_out);
        if (v->parsed()) return cmd_verify_idem(file, modfile, seed, json_out);
        if (cj->parsed()) return cmd_conjecture(gdesc, p, modfile, seed, json_out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataError;
    }
    return kUsage;
}
