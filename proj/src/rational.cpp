#include "zpg/rational.hpp"

#include <cctype>

#include "zpg/error.hpp"

namespace zpg {

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw SchemaError("empty rational literal");
    for (char ch : text)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw SchemaError("bad rational literal: " + std::string(text));
    mpq_class q;
    if (q.set_str(std::string(text), 10) != 0)
        throw SchemaError("bad rational literal: " + std::string(text));
    if (q.get_den() == 0) throw SchemaError("zero denominator: " + std::string(text));
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

bool is_p_integral(const Rational& q, uint64_t p) {
    return !mpz_divisible_ui_p(q.get_den().get_mpz_t(), p);
}

uint64_t reduce_mod_p(const Rational& q, uint64_t p) {
    mpz_class m(static_cast<unsigned long>(p));
    return reduce_mod(q, m).get_ui();
}

mpz_class reduce_mod(const Rational& q, const mpz_class& m) {
    mpz_class den_inv;
    if (!mpz_invert(den_inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t()))
        throw NotCoprime("denominator not invertible mod " + m.get_str());
    mpz_class r = (q.get_num() % m) * den_inv % m;
    if (r < 0) r += m;
    return r;
}

} // namespace zpg
