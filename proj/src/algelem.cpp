#include "zpg/algelem.hpp"

namespace zpg {

bool is_p_integral(const AlgQ& a, uint64_t p) {
    for (uint32_t i = 0; i < a.group().order(); ++i)
        if (!is_p_integral(a.coeff(i), p)) return false;
    return true;
}

AlgFp algq_mod_p(const AlgQ& a, uint64_t p) {
    AlgFp out(a.group(), FpDom{p});
    for (uint32_t i = 0; i < a.group().order(); ++i)
        out.set_coeff(i, reduce_mod_p(a.coeff(i), p));
    return out;
}

AlgMod algq_mod(const AlgQ& a, const mpz_class& modulus) {
    AlgMod out(a.group(), ModDom{modulus});
    for (uint32_t i = 0; i < a.group().order(); ++i)
        out.set_coeff(i, reduce_mod(a.coeff(i), modulus));
    return out;
}

AlgMod algfp_lift(const AlgFp& a, const mpz_class& modulus) {
    AlgMod out(a.group(), ModDom{modulus});
    for (uint32_t i = 0; i < a.group().order(); ++i)
        out.set_coeff(i, mpz_class(static_cast<unsigned long>(a.coeff(i))) % modulus);
    return out;
}

AlgMod algmod_recast(const AlgMod& a, const mpz_class& new_modulus) {
    AlgMod out(a.group(), ModDom{new_modulus});
    for (uint32_t i = 0; i < a.group().order(); ++i)
        out.set_coeff(i, a.coeff(i) % new_modulus);
    return out;
}

AlgFp algmod_mod_p(const AlgMod& a, uint64_t p) {
    AlgFp out(a.group(), FpDom{p});
    for (uint32_t i = 0; i < a.group().order(); ++i) {
        mpz_class r = a.coeff(i) % p;
        out.set_coeff(i, r.get_ui());
    }
    return out;
}

std::optional<AlgQ> algmod_reconstruct(const AlgMod& a) {
    AlgQ out(a.group(), QDom{});
    for (uint32_t i = 0; i < a.group().order(); ++i) {
        auto rec = rat_reconstruct(Residue(a.coeff(i), a.dom().modulus));
        if (!rec) return std::nullopt;
        out.set_coeff(i, *rec);
    }
    return out;
}

mpz_class trace_dim(const AlgQ& e) {
    Rational d = Rational(static_cast<unsigned long>(e.group().order())) * e.coeff(0);
    if (d.get_den() != 1 || d < 0)
        throw SemanticError("trace dimension is not a nonnegative integer: " + rational_str(d));
    return d.get_num();
}

FpMat right_mult_matrix(const AlgFp& a) {
    const FiniteGroup& G = a.group();
    size_t n = G.order();
    FpMat m(n, std::vector<uint64_t>(n, 0));
    // column g is the coefficient vector of g * a: (g*a)(h) = a(g^-1 h)
    for (uint32_t g = 0; g < n; ++g) {
        uint32_t ginv = G.inverse(g);
        for (uint32_t h = 0; h < n; ++h) m[h][g] = a.coeff(G.mult(ginv, h));
    }
    return m;
}

QMat right_mult_matrix_q(const AlgQ& a) {
    const FiniteGroup& G = a.group();
    size_t n = G.order();
    QMat m(n, std::vector<Rational>(n, Rational(0)));
    for (uint32_t g = 0; g < n; ++g) {
        uint32_t ginv = G.inverse(g);
        for (uint32_t h = 0; h < n; ++h) m[h][g] = a.coeff(G.mult(ginv, h));
    }
    return m;
}

size_t left_ideal_dim(const AlgFp& e) {
    if (!e.is_idempotent()) throw NotIdempotent("left_ideal_dim needs an idempotent");
    return fp_rank(right_mult_matrix(e), e.dom().p);
}

size_t left_ideal_dim_q(const AlgQ& e) {
    if (!e.is_idempotent()) throw NotIdempotent("left_ideal_dim needs an idempotent");
    return q_rank(right_mult_matrix_q(e));
}

size_t hom_dim(const AlgFp& f1, const AlgFp& f2) {
    if (!f1.is_idempotent() || !f2.is_idempotent())
        throw NotIdempotent("hom_dim needs idempotents");
    const FiniteGroup& G = f1.group();
    size_t n = G.order();
    // span of f2 * g * f1 over all group elements g
    FpMat rows;
    rows.reserve(n);
    for (uint32_t g = 0; g < n; ++g) {
        AlgFp x = (f2 * AlgFp::basis(G, f2.dom(), g)) * f1;
        rows.push_back(x.coeffs());
    }
    return fp_rank(std::move(rows), f1.dom().p);
}

std::vector<PolyFp> pim_fingerprint(const AlgFp& f) {
    if (!f.is_idempotent()) throw NotIdempotent("pim_fingerprint needs an idempotent");
    const FiniteGroup& G = f.group();
    uint64_t p = f.dom().p;
    size_t n = G.order();
    FpMat basis_cols = fp_column_basis(right_mult_matrix(f), p);
    size_t d = basis_cols.size();
    // basis matrix B with columns = basis_cols
    FpMat B(n, std::vector<uint64_t>(d, 0));
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < n; ++i) B[i][j] = basis_cols[j][i];

    std::vector<PolyFp> out;
    for (const ConjClass& cls : G.classes()) {
        // right multiplication by the class sum, restricted to A*f
        FpMat image_cols(d, std::vector<uint64_t>(n, 0));
        for (size_t j = 0; j < d; ++j) {
            for (uint32_t g = 0; g < n; ++g) {
                uint64_t v = B[g][j];
                if (v == 0) continue;
                for (uint32_t k : cls.member_indices) {
                    uint32_t h = G.mult(g, k);
                    image_cols[j][h] = fp_add(image_cols[j][h], v, p);
                }
            }
        }
        FpMat C_cols = fp_solve(B, image_cols, p);  // C_cols[j] = coords of image j
        FpMat C(d, std::vector<uint64_t>(d, 0));
        for (size_t j = 0; j < d; ++j)
            for (size_t i = 0; i < d; ++i) C[i][j] = C_cols[j][i];
        out.push_back(fp_charpoly(std::move(C), p));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> algq_sparse(const AlgQ& a) {
    std::vector<std::pair<std::string, std::string>> out;
    for (uint32_t i = 0; i < a.group().order(); ++i)
        if (a.coeff(i) != 0)
            out.emplace_back(a.group().element(i).cycle_string(), rational_str(a.coeff(i)));
    return out;
}

AlgQ algq_from_sparse(const FiniteGroup& g,
                      const std::vector<std::pair<std::string, std::string>>& pairs) {
    AlgQ out(g, QDom{});
    std::vector<bool> seen(g.order(), false);
    for (const auto& [cycles, value] : pairs) {
        uint32_t idx = g.index_of(Perm::parse_cycles(cycles, g.degree()));
        if (seen[idx]) throw SchemaError("duplicate support element " + cycles);
        seen[idx] = true;
        out.set_coeff(idx, parse_rational(value));
    }
    return out;
}

} // namespace zpg
