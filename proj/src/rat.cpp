#include "heispoly/rat.hpp"

#include <cctype>
#include <ostream>

namespace heispoly {

Rat::Rat(long num, long den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::parse(const std::string& s) {
    // Accepted grammar: [+-]?digits(/digits)? with a nonzero denominator.
    auto fail = [&] { throw std::invalid_argument("Rat: malformed rational \"" + s + "\""); };
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t num_begin = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) fail();
    if (i < s.size()) {
        if (s[i] != '/') fail();
        ++i;
        std::size_t den_begin = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != s.size()) fail();
        if (s.substr(den_begin).find_first_not_of('0') == std::string::npos)
            throw std::domain_error("Rat: zero denominator in \"" + s + "\"");
    }
    mpq_class v;
    // mpq set_str takes no leading '+'
    if (v.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) fail();
    v.canonicalize();
    return Rat(std::move(v));
}

Rat pow(const Rat& base, unsigned exp) {
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), base.raw().get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.raw().get_den_mpz_t(), exp);
    return Rat(std::move(out));
}

Rat factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rat(mpq_class(f));
}

Rat binomial(unsigned n, unsigned k) {
    if (k > n) return Rat(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(mpq_class(b));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace heispoly
