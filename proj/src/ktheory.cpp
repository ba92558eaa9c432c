#include "zpg/ktheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "zpg/error.hpp"
#include "zpg/linalg.hpp"
#include "zpg/numutil.hpp"
#include "zpg/polyq.hpp"

namespace zpg {

uint64_t ModularData::projective_dim(size_t j) const {
    if (!cartan_columns) throw SemanticError("no Cartan data attached");
    const auto& col = cartan_columns->at(j);
    uint64_t d = 0;
    for (size_t i = 0; i < rows.size(); ++i) d += col.at(i) * rows[i].dim;
    return d;
}

void verify_modular_data(const ModularData& m) {
    if (!m.group) throw SemanticError("modular data has no group");
    const FiniteGroup& g = *m.group;
    if (!is_prime_u64(m.p)) throw SemanticError("p must be prime");
    if (m.conductor != coprime_part(g.exponent(), m.p))
        throw SemanticError("conductor is not the p'-part of the exponent");

    std::vector<uint32_t> expect_regular;
    for (uint32_t c = 0; c < g.classes().size(); ++c)
        if (g.classes()[c].element_order % m.p != 0) expect_regular.push_back(c);
    if (m.regular_classes != expect_regular)
        throw SemanticError("regular classes must list exactly the classes of "
                            "order coprime to p, ascending");

    if (m.rows.empty()) throw SemanticError("no simple modules listed");
    std::set<std::string> labels;
    for (const BrauerRow& r : m.rows) {
        if (r.label.empty() || !labels.insert(r.label).second)
            throw SemanticError("row labels must be distinct and nonempty");
        if (r.dim == 0) throw SemanticError("simple module of dimension 0");
        if (r.s == 0 || r.dim % r.s != 0)
            throw SemanticError("endomorphism degree must divide the dimension");
        if (r.values.size() != m.regular_classes.size())
            throw SemanticError("value count does not match the regular classes");
        for (const Cyclotomic& v : r.values)
            if (v.conductor() != m.conductor)
                throw SemanticError("value conductor differs from the data conductor");
        if (m.regular_classes.empty() || m.regular_classes[0] != 0)
            throw SemanticError("identity class missing from the regular classes");
        if (!(r.values[0] == Cyclotomic(m.conductor, Rational(static_cast<unsigned long>(r.dim)))))
            throw SemanticError("value at the identity must equal the dimension");
    }

    // dim of the semisimple quotient cannot exceed dim of the algebra
    uint64_t ss = 0;
    for (const BrauerRow& r : m.rows) ss += r.dim * (r.dim / r.s);
    if (ss > g.order())
        throw SemanticError("semisimple quotient would exceed the algebra dimension");

    if (m.cartan_columns) {
        const auto& cc = *m.cartan_columns;
        if (cc.size() != m.rows.size())
            throw SemanticError("Cartan column count does not match the simples");
        for (const auto& col : cc)
            if (col.size() != m.rows.size())
                throw SemanticError("Cartan column length does not match the simples");
        uint64_t total = 0;
        for (size_t j = 0; j < m.rows.size(); ++j) {
            if (cc[j][j] == 0)
                throw SemanticError("projective cover must contain its own top");
            total += (m.rows[j].dim / m.rows[j].s) * m.projective_dim(j);
        }
        if (total != g.order())
            throw SemanticError("projective covers do not fill the regular module: " +
                                std::to_string(total) + " != " + std::to_string(g.order()));
    }
}

ModularData modular_from_ordinary(const CharacterTable& t, uint64_t p) {
    if (!is_prime_u64(p)) throw SemanticError("p must be prime");
    const FiniteGroup& g = *t.group;
    if (g.order() % p == 0)
        throw PrimeDividesOrder("reduction is only semisimple for p coprime to |G|");

    ModularData m;
    m.group = t.group;
    m.p = p;
    m.conductor = t.conductor;   // p does not divide the exponent
    for (uint32_t c = 0; c < g.classes().size(); ++c) m.regular_classes.push_back(c);

    std::vector<bool> seen(t.rows.size(), false);
    for (size_t i = 0; i < t.rows.size(); ++i) {
        if (seen[i]) continue;
        std::vector<size_t> orbit;
        size_t cur = i;
        do {
            orbit.push_back(cur);
            seen[cur] = true;
            cur = galois_twist_row(t, cur, static_cast<int64_t>(p));
        } while (cur != i);
        std::sort(orbit.begin(), orbit.end());

        BrauerRow row;
        for (size_t r : orbit) {
            if (!row.label.empty()) row.label += "+";
            row.label += t.labels[r];
        }
        row.s = orbit.size();
        row.dim = 0;
        for (size_t r : orbit) row.dim += t.degree(r);
        for (size_t c = 0; c < t.rows[i].size(); ++c) {
            Cyclotomic v(t.conductor);
            for (size_t r : orbit) v = v + t.rows[r][c];
            row.values.push_back(v);
        }
        m.rows.push_back(std::move(row));
    }

    std::vector<std::vector<uint64_t>> id(m.rows.size(),
                                          std::vector<uint64_t>(m.rows.size(), 0));
    for (size_t j = 0; j < m.rows.size(); ++j) id[j][j] = 1;
    m.cartan_columns = std::move(id);
    verify_modular_data(m);
    return m;
}

namespace {

// Solve target = sum_i x_i * row_i over Q by expanding each cyclotomic value
// into its rational coordinates; nullopt when inconsistent.  All values must
// share work_conductor.
std::optional<std::vector<Rational>> solve_in_brauer_basis(
    const ModularData& m, const std::vector<Cyclotomic>& target, uint32_t work_conductor) {
    const size_t R = m.rows.size();
    const size_t C = m.regular_classes.size();
    if (target.size() != C) throw SemanticError("value count mismatch in basis solve");

    QMat a;
    QMat rhs_col(1);
    for (size_t c = 0; c < C; ++c) {
        std::vector<std::vector<Rational>> row_coords(R);
        for (size_t r = 0; r < R; ++r)
            row_coords[r] = m.rows[r].values[c].embed(work_conductor).coeffs();
        std::vector<Rational> t_coords = target[c].embed(work_conductor).coeffs();
        for (size_t b = 0; b < t_coords.size(); ++b) {
            std::vector<Rational> eq(R);
            for (size_t r = 0; r < R; ++r) eq[r] = row_coords[r][b];
            a.push_back(std::move(eq));
            rhs_col[0].push_back(t_coords[b]);
        }
    }
    try {
        QMat sol = q_solve(a, rhs_col);
        return sol[0];
    } catch (const SemanticError&) {
        return std::nullopt;
    }
}

std::vector<uint64_t> require_nonneg_integers(const std::vector<Rational>& x,
                                              const char* what) {
    std::vector<uint64_t> out;
    for (const Rational& v : x) {
        if (v.get_den() != 1 || v < 0)
            throw NoIntegralSolution(std::string(what) +
                                     ": coefficient " + rational_str(v) +
                                     " is not a nonnegative integer");
        out.push_back(v.get_num().get_ui());
    }
    return out;
}

} // namespace

std::optional<std::vector<Rational>> brauer_coordinates(
    const ModularData& m, const std::vector<Cyclotomic>& values,
    uint32_t work_conductor) {
    if (work_conductor % m.conductor != 0)
        throw SemanticError("work conductor must be a multiple of the modular conductor");
    for (const Cyclotomic& v : values)
        if (work_conductor % v.conductor() != 0)
            throw SemanticError("value conductor does not divide the work conductor");
    return solve_in_brauer_basis(m, values, work_conductor);
}

DecompositionResult decomposition_rows(const CharacterTable& t, const ModularData& m) {
    if (t.group != m.group) throw DomainMismatch("table and modular data on different groups");
    if (t.conductor % m.conductor != 0)
        throw SemanticError("modular conductor must divide the table conductor");

    DecompositionResult result;
    for (const auto& orbit : galois_orbits(t)) {
        SchurProbe probe = schur_probe(t, orbit.front());
        if (probe.verdict != SchurVerdict::One) {
            std::string lbl;
            for (size_t r : orbit) lbl += (lbl.empty() ? "" : "+") + t.labels[r];
            throw SchurUnknown("Schur index not certified to be 1 for " + lbl +
                               " (" + probe.witness + ")");
        }

        std::string label;
        for (size_t r : orbit) label += (label.empty() ? "" : "+") + t.labels[r];

        std::vector<Cyclotomic> target;
        for (uint32_t c : m.regular_classes) {
            Cyclotomic v(t.conductor);
            for (size_t r : orbit) v = v + t.rows[r][c];
            target.push_back(v);
        }
        auto x = solve_in_brauer_basis(m, target, t.conductor);
        if (!x)
            throw NoIntegralSolution("restriction of " + label +
                                     " is not in the span of the Brauer characters");
        result.row_labels.push_back(label);
        result.rows.push_back(require_nonneg_integers(*x, "decomposition row"));
    }
    return result;
}

namespace {

bool cone_search(const std::vector<std::vector<uint64_t>>& rows, size_t j,
                 std::vector<uint64_t>& remaining, std::vector<uint64_t>& coeff) {
    if (j == rows.size())
        return std::all_of(remaining.begin(), remaining.end(),
                           [](uint64_t v) { return v == 0; });
    uint64_t bound = 0;
    bool constrained = false;
    for (size_t i = 0; i < remaining.size(); ++i) {
        if (rows[j][i] == 0) continue;
        uint64_t b = remaining[i] / rows[j][i];
        bound = constrained ? std::min(bound, b) : b;
        constrained = true;
    }
    if (!constrained) bound = 0;   // zero row contributes nothing
    for (uint64_t x = bound + 1; x-- > 0;) {
        bool ok = true;
        for (size_t i = 0; i < remaining.size() && ok; ++i)
            if (rows[j][i] * x > remaining[i]) ok = false;
        if (!ok) continue;
        for (size_t i = 0; i < remaining.size(); ++i) remaining[i] -= rows[j][i] * x;
        coeff[j] = x;
        if (cone_search(rows, j + 1, remaining, coeff)) return true;
        for (size_t i = 0; i < remaining.size(); ++i) remaining[i] += rows[j][i] * x;
    }
    return false;
}

} // namespace

ConeCertificate cone_inclusion(const std::vector<std::vector<uint64_t>>& rows,
                               const std::vector<std::vector<uint64_t>>& columns) {
    size_t width = rows.empty() ? (columns.empty() ? 0 : columns[0].size()) : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != width) throw SchemaError("ragged row in cone inclusion");
    for (const auto& c : columns)
        if (c.size() != width) throw SchemaError("column width does not match the rows");

    ConeCertificate cert;
    cert.holds = true;
    for (size_t ci = 0; ci < columns.size(); ++ci) {
        std::vector<uint64_t> remaining = columns[ci];
        std::vector<uint64_t> coeff(rows.size(), 0);
        if (!cone_search(rows, 0, remaining, coeff)) {
            cert.holds = false;
            cert.witness_column = ci;
            return cert;
        }
        // re-multiply as a guard against search bookkeeping errors
        for (size_t i = 0; i < width; ++i) {
            uint64_t v = 0;
            for (size_t j = 0; j < rows.size(); ++j) v += coeff[j] * rows[j][i];
            if (v != columns[ci][i]) throw SemanticError("cone certificate failed re-check");
        }
        cert.coefficients.push_back(std::move(coeff));
    }
    return cert;
}

namespace {

// Arithmetic in F = F_p[z]/(psi0) with zeta = z of multiplicative order M.
struct LiftField {
    PolyFp psi0;
    uint64_t p = 0;
    std::vector<PolyFp> zeta_pow;   // z^a mod psi0 for a in [0, M)

    explicit LiftField(uint64_t prime, uint32_t conductor) : p(prime) {
        PolyFp phi = polyq_reduce_mod_p(cyclotomic_polynomial(conductor), prime);
        auto factors = factor_poly_fp(phi);
        psi0 = factors.front().first;   // canonical least factor fixes the embedding
        PolyFp z(p, {0, 1});
        PolyFp cur = PolyFp::one(p);
        for (uint32_t a = 0; a < conductor; ++a) {
            zeta_pow.push_back(cur);
            cur = polyfp_divmod(polyfp_mul(cur, z), psi0).second;
        }
    }

    bool is_root(const PolyFp& f, const PolyFp& u) const {
        PolyFp acc = PolyFp::zero(p);
        for (int k = f.deg(); k >= 0; --k) {
            acc = polyfp_divmod(polyfp_mul(acc, u), psi0).second;
            acc = polyfp_add(acc, PolyFp(p, {f.coeff(static_cast<size_t>(k))}));
        }
        return acc.is_zero();
    }
};

} // namespace

std::vector<Cyclotomic> brauer_character_of_left_ideal(
    const AlgFp& f, uint32_t conductor, const std::vector<uint32_t>& regular_classes) {
    if (!f.is_idempotent()) throw NotIdempotent("left ideal needs an idempotent generator");
    const FiniteGroup& g = f.group();
    const uint64_t p = f.dom().p;
    if (conductor % p == 0) throw NotCoprime("conductor must be coprime to p");

    const FpMat basis = fp_column_basis(right_mult_matrix(f), p);
    const size_t d = basis.size();
    FpMat bmat(g.order(), std::vector<uint64_t>(d, 0));
    for (size_t j = 0; j < d; ++j)
        for (uint32_t x = 0; x < g.order(); ++x) bmat[x][j] = basis[j][x];
    LiftField field(p, conductor);

    std::vector<Cyclotomic> out;
    for (uint32_t c : regular_classes) {
        const uint32_t m = g.classes().at(c).element_order;
        if (conductor % m != 0)
            throw SemanticError("class order does not divide the conductor");
        const uint32_t rep = g.classes()[c].rep_index;

        // matrix of left multiplication by the representative on A*f
        FpMat images;
        for (size_t j = 0; j < d; ++j) {
            std::vector<uint64_t> img(g.order(), 0);
            for (uint32_t x = 0; x < g.order(); ++x)
                img[g.mult(rep, x)] = basis[j][x];
            images.push_back(std::move(img));
        }
        FpMat coords = fp_solve(bmat, images, p);
        FpMat action(d, std::vector<uint64_t>(d, 0));
        for (size_t j = 0; j < d; ++j)
            for (size_t i = 0; i < d; ++i) action[i][j] = coords[j][i];

        Cyclotomic value(conductor);
        for (const auto& [factor, mult] : factor_poly_fp(fp_charpoly(action, p))) {
            int found = 0;
            for (uint32_t j = 0; j < m; ++j) {
                uint32_t e = j * (conductor / m);
                if (!field.is_root(factor, field.zeta_pow[e])) continue;
                ++found;
                value = value + Cyclotomic::zeta_power(conductor, e)
                                    .scaled_by(Rational(static_cast<unsigned long>(mult)));
            }
            if (found != factor.deg())
                throw SemanticError("eigenvalue lift found " + std::to_string(found) +
                                    " roots for a degree-" + std::to_string(factor.deg()) +
                                    " factor");
        }
        out.push_back(value);
    }
    return out;
}

namespace {

struct PimType {
    size_t rep;                 // index into the decomposition
    uint64_t count = 0;
    uint64_t dim = 0;           // dim of the projective A*f
    std::vector<uint64_t> composition;   // solved against m.rows
};

} // namespace

CartanResult cartan_from_idempotents(const std::vector<AlgFp>& decomposition,
                                     const ModularData& m) {
    if (decomposition.empty()) throw SemanticError("empty decomposition");
    const FiniteGroup& g = *m.group;
    for (const AlgFp& f : decomposition) {
        if (&f.group() != &g) throw DomainMismatch("idempotent on a different group");
        if (f.dom().p != m.p) throw DomainMismatch("idempotent over a different prime");
        if (!f.is_idempotent()) throw NotIdempotent("decomposition entry is not idempotent");
        if (f.is_zero()) throw SemanticError("decomposition entry is zero");
    }
    AlgFp sum = AlgFp::zero(g, decomposition.front().dom());
    for (const AlgFp& f : decomposition) sum = sum + f;
    if (!(sum == AlgFp::one(g, decomposition.front().dom())))
        throw SemanticError("decomposition does not sum to 1");
    for (size_t i = 0; i < decomposition.size(); ++i)
        for (size_t j = i + 1; j < decomposition.size(); ++j)
            if (!(decomposition[i] * decomposition[j]).is_zero() ||
                !(decomposition[j] * decomposition[i]).is_zero())
                throw SemanticError("decomposition is not orthogonal");

    // fuse isomorphic projectives: dimension and fingerprint are cheap
    // isomorphism invariants, but can coincide for non-isomorphic covers
    // (e.g. both projectives of F_3 S3), so the solved composition vector is
    // part of the key as well
    using Key = std::tuple<size_t, std::string, std::vector<uint64_t>>;
    std::map<Key, std::vector<size_t>> groups;
    for (size_t i = 0; i < decomposition.size(); ++i) {
        std::string print;
        for (const PolyFp& f : pim_fingerprint(decomposition[i]))
            print += f.str() + ";";
        auto beta = brauer_character_of_left_ideal(decomposition[i], m.conductor,
                                                   m.regular_classes);
        auto x = solve_in_brauer_basis(m, beta, m.conductor);
        if (!x)
            throw NonIntegralCartanEntry("projective character is outside the span of "
                                         "the Brauer characters");
        std::vector<uint64_t> comp;
        try {
            comp = require_nonneg_integers(*x, "Cartan column");
        } catch (const NoIntegralSolution& e) {
            throw NonIntegralCartanEntry(e.what());
        }
        size_t dim = left_ideal_dim(decomposition[i]);
        uint64_t audit = 0;
        for (size_t r = 0; r < m.rows.size(); ++r) audit += comp[r] * m.rows[r].dim;
        if (audit != dim)
            throw NonIntegralCartanEntry("composition does not add up to the projective "
                                         "dimension");
        groups[Key(dim, std::move(print), std::move(comp))].push_back(i);
    }

    if (groups.size() != m.rows.size())
        throw SemanticError("found " + std::to_string(groups.size()) +
                            " projective types for " + std::to_string(m.rows.size()) +
                            " simple modules");

    std::vector<PimType> types;
    std::vector<size_t> type_of_idem(decomposition.size());
    for (const auto& [key, members] : groups) {
        PimType t;
        t.rep = members.front();
        t.count = members.size();
        t.dim = std::get<0>(key);
        t.composition = std::get<2>(key);
        for (size_t mem : members) type_of_idem[mem] = types.size();
        types.push_back(std::move(t));
    }

    // match types to m.rows: copies of P_j in the regular module = dim_j / s_j,
    // and scaled hom dimensions must reproduce the composition vectors
    const size_t R = m.rows.size();
    std::vector<size_t> assign(R);   // assign[type] = row index
    std::iota(assign.begin(), assign.end(), 0);
    std::sort(assign.begin(), assign.end());
    bool matched = false;
    do {
        bool ok = true;
        for (size_t tt = 0; tt < R && ok; ++tt) {
            const auto& row = m.rows[assign[tt]];
            if (types[tt].count != row.dim / row.s) ok = false;
        }
        for (size_t a = 0; a < R && ok; ++a) {
            const uint64_t s = m.rows[assign[a]].s;
            for (size_t b = 0; b < R && ok; ++b) {
                size_t h = hom_dim(decomposition[types[a].rep], decomposition[types[b].rep]);
                if (h % s != 0 || h / s != types[b].composition[assign[a]]) ok = false;
            }
        }
        if (ok) {
            matched = true;
            break;
        }
    } while (std::next_permutation(assign.begin(), assign.end()));
    if (!matched)
        throw SemanticError("no labeling of the projectives is consistent with the "
                            "declared simple modules");

    CartanResult result;
    result.columns.assign(R, {});
    result.multiplicities.assign(R, 0);
    for (size_t tt = 0; tt < R; ++tt) {
        result.columns[assign[tt]] = types[tt].composition;
        result.multiplicities[assign[tt]] = types[tt].count;
    }
    result.row_of_idempotent.resize(decomposition.size());
    for (size_t i = 0; i < decomposition.size(); ++i)
        result.row_of_idempotent[i] = assign[type_of_idem[i]];
    return result;
}

TriangleReport cartan_brauer_consistency(const ModularData& m,
                                         const std::vector<AlgQ>& lifted) {
    if (!m.cartan_columns)
        throw SemanticError("triangle comparison needs declared Cartan columns");
    const FiniteGroup& g = *m.group;

    TriangleReport report;
    for (const AlgQ& e : lifted) {
        if (&e.group() != &g) throw DomainMismatch("idempotent on a different group");
        if (!e.is_idempotent()) throw NotIdempotent("certificate element is not idempotent");
        if (!is_p_integral(e, m.p))
            throw SemanticError("certificate element is not p-integral");
        AlgFp ebar = algq_mod_p(e, m.p);
        if (ebar.is_zero()) throw SemanticError("certificate element reduces to zero");

        // route 1: lifted eigenvalues of the reduction
        std::vector<Cyclotomic> beta =
            brauer_character_of_left_ideal(ebar, m.conductor, m.regular_classes);

        // route 2: rational character of QG*e on the same classes
        QMat basis = q_column_basis(right_mult_matrix_q(e));
        const size_t d = basis.size();
        QMat bmat(g.order(), std::vector<Rational>(d, Rational(0)));
        for (size_t j = 0; j < d; ++j)
            for (uint32_t x = 0; x < g.order(); ++x) bmat[x][j] = basis[j][x];
        std::vector<Rational> chi;
        for (uint32_t c : m.regular_classes) {
            const uint32_t rep = g.classes()[c].rep_index;
            QMat images;
            for (size_t j = 0; j < d; ++j) {
                std::vector<Rational> img(g.order(), Rational(0));
                for (uint32_t x = 0; x < g.order(); ++x)
                    img[g.mult(rep, x)] = basis[j][x];
                images.push_back(std::move(img));
            }
            QMat coords = q_solve(bmat, images);
            Rational tr(0);
            for (size_t j = 0; j < d; ++j) tr += coords[j][j];
            chi.push_back(tr);
        }

        for (size_t c = 0; c < m.regular_classes.size(); ++c)
            if (!(beta[c] == Cyclotomic(m.conductor, chi[c])))
                throw TriangleMismatch(
                    "character of the rational lattice disagrees with the lifted "
                    "eigenvalues of its reduction on class " +
                    std::to_string(m.regular_classes[c]));

        // resolve against the declared Cartan columns
        auto x = solve_in_brauer_basis(m, beta, m.conductor);
        if (!x) throw TriangleMismatch("reduction character is outside the Brauer span");
        std::vector<uint64_t> xi;
        try {
            xi = require_nonneg_integers(*x, "composition vector");
        } catch (const NoIntegralSolution& err) {
            throw TriangleMismatch(err.what());
        }
        size_t match = m.rows.size();
        for (size_t j = 0; j < m.cartan_columns->size(); ++j)
            if ((*m.cartan_columns)[j] == xi) {
                match = j;
                break;
            }
        if (match == m.rows.size())
            throw TriangleMismatch("composition vector matches no declared Cartan column");
        if (trace_dim(e) != static_cast<unsigned long>(m.projective_dim(match)))
            throw TriangleMismatch("rational dimension differs from the projective cover");
        report.matched_labels.push_back(m.rows[match].label);
        report.dims.push_back(m.projective_dim(match));
    }
    return report;
}

} // namespace zpg
