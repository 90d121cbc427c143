#include "sdsolid/rational.hpp"

#include <ostream>

#include "sdsolid/errors.hpp"

namespace sds {

rat::rat(const std::string& s) {
    mpq_init(v_);
    if (s.empty() || mpq_set_str(v_, s.c_str(), 10) != 0) {
        mpq_clear(v_);
        mpq_init(v_);
        fail(errc::parse_error, "bad rational literal '" + s + "'");
    }
    // mpq_set_str accepts "a/0"; reject it before canonicalize divides by zero.
    if (mpz_sgn(mpq_denref(v_)) == 0) {
        fail(errc::parse_error, "zero denominator in '" + s + "'");
    }
    mpq_canonicalize(v_);
}

rat rat::inv() const {
    if (is_zero()) fail(errc::parse_error, "division by zero rational");
    rat r;
    mpq_inv(r.v_, v_);
    return r;
}

std::string rat::str() const {
    char* raw = mpq_get_str(nullptr, 10, v_);
    std::string out(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, out.size() + 1);
    return out;
}

std::ostream& operator<<(std::ostream& os, const rat& r) { return os << r.str(); }

}  // namespace sds
