#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zpg/error.hpp"
#include "zpg/group.hpp"
#include "zpg/linalg.hpp"
#include "zpg/rational.hpp"
#include "zpg/residue.hpp"

namespace zpg {

// Coefficient domains for group-algebra elements.
struct QDom {
    using Value = Rational;
    static Value zero() { return Rational(0); }
    static Value one() { return Rational(1); }
    static bool is_zero(const Value& a) { return a == 0; }
    static Value add(const Value& a, const Value& b) { return a + b; }
    static Value sub(const Value& a, const Value& b) { return a - b; }
    static Value mul(const Value& a, const Value& b) { return a * b; }
    static Value neg(const Value& a) { return -a; }
    bool operator==(const QDom&) const { return true; }
};

struct FpDom {
    uint64_t p;
    using Value = uint64_t;
    Value zero() const { return 0; }
    Value one() const { return 1 % p; }
    bool is_zero(Value a) const { return a % p == 0; }
    Value add(Value a, Value b) const { return fp_add(a, b, p); }
    Value sub(Value a, Value b) const { return fp_sub(a, b, p); }
    Value mul(Value a, Value b) const { return fp_mul(a, b, p); }
    Value neg(Value a) const { return fp_sub(0, a, p); }
    bool operator==(const FpDom&) const = default;
};

struct ModDom {
    mpz_class modulus;
    using Value = mpz_class;
    Value zero() const { return mpz_class(0); }
    Value one() const { return mpz_class(1) % modulus; }
    bool is_zero(const Value& a) const { return a % modulus == 0; }
    Value norm(Value a) const { a %= modulus; if (a < 0) a += modulus; return a; }
    Value add(const Value& a, const Value& b) const { return norm(a + b); }
    Value sub(const Value& a, const Value& b) const { return norm(a - b); }
    Value mul(const Value& a, const Value& b) const { return norm(a * b); }
    Value neg(const Value& a) const { return norm(-a); }
    bool operator==(const ModDom&) const = default;
};

// An element of the group algebra over the given coefficient domain, as a
// dense coefficient vector indexed by the group's element list.
template <class Dom>
class AlgElem {
public:
    using Value = typename Dom::Value;

    AlgElem(const FiniteGroup& g, Dom dom)
        : g_(&g), dom_(std::move(dom)), c_(g.order(), this->dom_.zero()) {}

    static AlgElem zero(const FiniteGroup& g, Dom dom) { return AlgElem(g, std::move(dom)); }
    static AlgElem one(const FiniteGroup& g, Dom dom) {
        AlgElem e(g, std::move(dom));
        e.c_[0] = e.dom_.one();
        return e;
    }
    static AlgElem basis(const FiniteGroup& g, Dom dom, uint32_t element_index) {
        AlgElem e(g, std::move(dom));
        e.c_[element_index] = e.dom_.one();
        return e;
    }

    const FiniteGroup& group() const { return *g_; }
    const Dom& dom() const { return dom_; }
    const Value& coeff(uint32_t i) const { return c_[i]; }
    void set_coeff(uint32_t i, Value v) { c_[i] = std::move(v); }
    const std::vector<Value>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!dom_.is_zero(x)) return false;
        return true;
    }

    friend AlgElem operator+(const AlgElem& a, const AlgElem& b) {
        a.check(b);
        AlgElem out = a;
        for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.dom_.add(a.c_[i], b.c_[i]);
        return out;
    }
    friend AlgElem operator-(const AlgElem& a, const AlgElem& b) {
        a.check(b);
        AlgElem out = a;
        for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.dom_.sub(a.c_[i], b.c_[i]);
        return out;
    }
    // Convolution product: (ab)(h) = sum_g a(g) b(g^-1 h).
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b) {
        a.check(b);
        const FiniteGroup& G = *a.g_;
        AlgElem out(G, a.dom_);
        for (uint32_t i = 0; i < G.order(); ++i) {
            if (a.dom_.is_zero(a.c_[i])) continue;
            for (uint32_t j = 0; j < G.order(); ++j) {
                if (b.dom_.is_zero(b.c_[j])) continue;
                uint32_t k = G.mult(i, j);
                out.c_[k] = out.dom_.add(out.c_[k], a.dom_.mul(a.c_[i], b.c_[j]));
            }
        }
        return out;
    }
    AlgElem scaled(const Value& v) const {
        AlgElem out = *this;
        for (auto& x : out.c_) x = dom_.mul(x, v);
        return out;
    }

    bool operator==(const AlgElem& other) const {
        if (g_ != other.g_ || !(dom_ == other.dom_)) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!dom_.is_zero(dom_.sub(c_[i], other.c_[i]))) return false;
        return true;
    }

    bool is_idempotent() const { return (*this) * (*this) == *this; }

private:
    void check(const AlgElem& other) const {
        if (g_ != other.g_) throw DomainMismatch("group mismatch between algebra elements");
        if (!(dom_ == other.dom_)) throw DomainMismatch("coefficient domain mismatch");
    }
    const FiniteGroup* g_;
    Dom dom_;
    std::vector<Value> c_;
};

using AlgQ = AlgElem<QDom>;
using AlgFp = AlgElem<FpDom>;
using AlgMod = AlgElem<ModDom>;

// --- conversions -------------------------------------------------------------

bool is_p_integral(const AlgQ& a, uint64_t p);
// Coefficient-wise reduction mod p; throws NotCoprime unless p-integral.
AlgFp algq_mod_p(const AlgQ& a, uint64_t p);
AlgMod algq_mod(const AlgQ& a, const mpz_class& modulus);
// Embed F_p coefficients as integers into Z/modulus.
AlgMod algfp_lift(const AlgFp& a, const mpz_class& modulus);
// Reinterpret coefficients (taken as integers in [0, m)) in Z/new_modulus.
AlgMod algmod_recast(const AlgMod& a, const mpz_class& new_modulus);
AlgFp algmod_mod_p(const AlgMod& a, uint64_t p);
// Coefficient-wise rational reconstruction.
std::optional<AlgQ> algmod_reconstruct(const AlgMod& a);

// Trace-identity dimension |G| * (identity coefficient); the identity
// coefficient of an idempotent e is tr(right-mult-by-e)/|G|, so this is the
// Q-dimension of QG*e.  Throws SemanticError if not a nonnegative integer.
mpz_class trace_dim(const AlgQ& e);

// --- module-theoretic measurements over F_p ----------------------------------

// Matrix of x -> x*a in the group basis (columns indexed by the basis).
FpMat right_mult_matrix(const AlgFp& a);
QMat right_mult_matrix_q(const AlgQ& a);

// dim of the left ideal A*e for idempotent e (throws NotIdempotent).
size_t left_ideal_dim(const AlgFp& e);
size_t left_ideal_dim_q(const AlgQ& e);

// dim of f2 * A * f1 = Hom_A(A f1, A f2) for idempotents f1, f2.
size_t hom_dim(const AlgFp& f1, const AlgFp& f2);

// Characteristic polynomials of the right action of each conjugacy-class sum
// on A*f, listed in class order.  Isomorphic left ideals give equal lists, so
// together with left_ideal_dim this is the projective-module fingerprint.
std::vector<PolyFp> pim_fingerprint(const AlgFp& f);

// --- exchange form -----------------------------------------------------------

// Sparse (cycle-string, rational-string) pairs, ordered by element index.
std::vector<std::pair<std::string, std::string>> algq_sparse(const AlgQ& a);
AlgQ algq_from_sparse(const FiniteGroup& g,
                      const std::vector<std::pair<std::string, std::string>>& pairs);

} // namespace zpg
