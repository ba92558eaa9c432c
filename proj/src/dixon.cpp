#include <algorithm>
#include <cmath>

#include "zpg/chartab.hpp"
#include "zpg/error.hpp"
#include "zpg/linalg.hpp"

// Class-matrix character table computation (Burnside/Dixon): diagonalize the
// class-sum structure constants over a prime field F_q that contains all the
// needed roots of unity, then pull eigenvalues back to cyclotomic integers.

namespace zpg {

namespace {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Smallest prime q with q ≡ 1 (mod e) and q > bound.
uint64_t find_splitting_prime(uint64_t e, uint64_t bound) {
    uint64_t q = (bound / e) * e + 1;
    while (q <= bound) q += e;
    for (; q < (1ULL << 31); q += e)
        if (is_prime_u64(q)) return q;
    throw NoSuitablePrime("no prime ≡ 1 mod " + std::to_string(e) + " below 2^31");
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

uint64_t primitive_root(uint64_t q) {
    std::vector<uint64_t> ps = prime_factors(q - 1);
    for (uint64_t g = 2; g < q; ++g) {
        bool ok = true;
        for (uint64_t pf : ps)
            if (fp_pow(g, (q - 1) / pf, q) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw SemanticError("no primitive root found");   // unreachable for prime q
}

} // namespace

CharacterTable dixon_table(const FiniteGroup& g, uint64_t seed) {
    const size_t n = g.order();
    const size_t k = g.classes().size();
    const uint64_t e = g.exponent();
    const uint64_t q = find_splitting_prime(
        e, static_cast<uint64_t>(2.0 * std::sqrt(static_cast<double>(n))) + 1);

    // structure constants a[i][j][l] = #{(x,y) in C_i x C_j : xy = z_l}
    std::vector<FpMat> M(k, FpMat(k, std::vector<uint64_t>(k, 0)));
    for (size_t i = 0; i < k; ++i) {
        for (uint32_t x : g.classes()[i].member_indices) {
            uint32_t xinv = g.inverse(x);
            for (size_t l = 0; l < k; ++l) {
                uint32_t y = g.mult(xinv, g.classes()[l].rep_index);
                M[i][g.class_of(y)][l] += 1;
            }
        }
    }
    for (auto& m : M)
        for (auto& row : m)
            for (auto& v : row) v %= q;

    // common eigenvectors of all class matrices: refine subspaces through the
    // eigenspaces of each M_i in turn
    std::vector<FpMat> spaces;   // each space = list of basis columns (length k)
    {
        FpMat id;
        for (size_t j = 0; j < k; ++j) {
            std::vector<uint64_t> col(k, 0);
            col[j] = 1;
            id.push_back(col);
        }
        spaces.push_back(std::move(id));
    }
    for (size_t i = 1; i < k; ++i) {
        std::vector<FpMat> next;
        for (FpMat& space : spaces) {
            const size_t d = space.size();
            if (d == 1) {
                next.push_back(std::move(space));
                continue;
            }
            // B (k x d) from basis columns; restriction R solves B R = M_i B
            FpMat B(k, std::vector<uint64_t>(d, 0));
            for (size_t j = 0; j < d; ++j)
                for (size_t r = 0; r < k; ++r) B[r][j] = space[j][r];
            FpMat images(d);
            for (size_t j = 0; j < d; ++j) {
                std::vector<uint64_t> img(k, 0);
                for (size_t r = 0; r < k; ++r) {
                    uint64_t acc = 0;
                    for (size_t c = 0; c < k; ++c)
                        acc = fp_add(acc, fp_mul(M[i][r][c], space[j][c], q), q);
                    img[r] = acc;
                }
                images[j] = std::move(img);
            }
            FpMat coords = fp_solve(B, images, q);
            FpMat R(d, std::vector<uint64_t>(d, 0));
            for (size_t j = 0; j < d; ++j)
                for (size_t r = 0; r < d; ++r) R[r][j] = coords[j][r];

            size_t split_total = 0;
            for (const auto& [fac, mult] : factor_poly_fp(fp_charpoly(R, q), seed)) {
                if (fac.deg() != 1)
                    throw SemanticError("class algebra fails to split over F_q");
                uint64_t lambda = fp_sub(0, fac.c[0], q);   // root of z + c0
                FpMat shifted = R;
                for (size_t r = 0; r < d; ++r) shifted[r][r] = fp_sub(shifted[r][r], lambda, q);
                FpMat ker = fp_kernel(shifted, q);
                if (ker.size() != mult)
                    throw SemanticError("class matrix is not diagonalizable");
                FpMat sub;
                for (const auto& kv : ker) {
                    std::vector<uint64_t> col(k, 0);
                    for (size_t r = 0; r < k; ++r) {
                        uint64_t acc = 0;
                        for (size_t j = 0; j < d; ++j)
                            acc = fp_add(acc, fp_mul(space[j][r], kv[j], q), q);
                        col[r] = acc;
                    }
                    sub.push_back(std::move(col));
                }
                split_total += sub.size();
                next.push_back(std::move(sub));
            }
            if (split_total != d) throw SemanticError("eigenspace dimensions do not add up");
        }
        spaces = std::move(next);
        bool all_lines = true;
        for (const FpMat& s : spaces) all_lines &= (s.size() == 1);
        if (all_lines) break;
    }
    if (spaces.size() != k)
        throw SemanticError("expected " + std::to_string(k) + " one-dimensional joint eigenspaces");

    // normalize: omega(identity class) = 1
    std::vector<std::vector<uint64_t>> omegas;
    for (const FpMat& space : spaces) {
        std::vector<uint64_t> w = space[0];
        if (w[0] == 0) throw SemanticError("eigenvector vanishes on the identity class");
        uint64_t inv0 = fp_inv(w[0], q);
        for (auto& v : w) v = fp_mul(v, inv0, q);
        omegas.push_back(std::move(w));
    }

    // degrees from the norm relation chi(1)^2 sum_j w_j w_{jbar} / |C_j| = |G|
    const std::vector<uint32_t> invc = g.class_power_map(-1);
    std::vector<uint64_t> degree(k, 0);
    std::vector<std::vector<uint64_t>> chi_modq(k, std::vector<uint64_t>(k, 0));
    const uint64_t sqrt_n = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)) + 0.5);
    for (size_t t = 0; t < k; ++t) {
        uint64_t s = 0;
        for (size_t j = 0; j < k; ++j) {
            uint64_t term = fp_mul(omegas[t][j], omegas[t][invc[j]], q);
            s = fp_add(s, fp_mul(term, fp_inv(g.classes()[j].size % q, q), q), q);
        }
        uint64_t d2 = fp_mul(n % q, fp_inv(s, q), q);
        for (uint64_t d = 1; d <= sqrt_n + 1; ++d) {
            if (fp_mul(d, d, q) == d2) { degree[t] = d; break; }
        }
        if (degree[t] == 0) throw SemanticError("no integer degree matches the norm relation");
        for (size_t j = 0; j < k; ++j)
            chi_modq[t][j] = fp_mul(degree[t],
                                    fp_mul(omegas[t][j], fp_inv(g.classes()[j].size % q, q), q), q);
    }

    // lift values: chi(g_j) = sum_l m_l zeta_{ord}^l with multiplicities m_l
    // recovered by an inverse discrete Fourier transform over F_q
    const uint64_t zeta = fp_pow(primitive_root(q), (q - 1) / e, q);
    std::vector<std::vector<uint32_t>> pow_map;   // pow_map[s] = class_power_map(s)
    {
        uint64_t max_ord = 0;
        for (const ConjClass& c : g.classes()) max_ord = std::max(max_ord, c.element_order);
        for (uint64_t s = 0; s <= max_ord; ++s)
            pow_map.push_back(g.class_power_map(static_cast<int64_t>(s)));
    }

    CharacterTable table;
    table.group = &g;
    table.conductor = static_cast<uint32_t>(e);
    for (size_t t = 0; t < k; ++t) {
        std::vector<Cyclotomic> row;
        for (size_t j = 0; j < k; ++j) {
            const uint64_t m = g.classes()[j].element_order;
            const uint64_t theta = fp_pow(zeta, e / m, q);
            const uint64_t theta_inv = fp_inv(theta, q);
            const uint64_t m_inv = fp_inv(m % q, q);
            std::vector<std::pair<int64_t, Rational>> terms;
            uint64_t total = 0;
            for (uint64_t l = 0; l < m; ++l) {
                uint64_t acc = 0;
                for (uint64_t s = 0; s < m; ++s)
                    acc = fp_add(acc,
                                 fp_mul(chi_modq[t][pow_map[s][j]],
                                        fp_pow(theta_inv, l * s, q), q), q);
                uint64_t mult = fp_mul(acc, m_inv, q);
                if (mult > degree[t])
                    throw SemanticError("eigenvalue multiplicity exceeds the degree");
                total += mult;
                if (mult)
                    terms.emplace_back(static_cast<int64_t>(l * (e / m)),
                                       Rational(static_cast<unsigned long>(mult)));
            }
            if (total != degree[t])
                throw SemanticError("eigenvalue multiplicities do not sum to the degree");
            row.push_back(Cyclotomic::from_terms(table.conductor, terms));
        }
        table.rows.push_back(std::move(row));
    }

    // canonical order and labels
    table.labels.assign(k, "");
    std::vector<size_t> order = canonical_row_order(table);
    std::vector<std::vector<Cyclotomic>> sorted;
    for (size_t i : order) sorted.push_back(std::move(table.rows[i]));
    table.rows = std::move(sorted);
    for (size_t i = 0; i < k; ++i) table.labels[i] = "chi" + std::to_string(i + 1);

    verify_table(table);
    return table;
}

} // namespace zpg
