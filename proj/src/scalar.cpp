#include "schurzeta/scalar.hpp"

#include <sstream>

namespace schurzeta {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    if (r.get_den() == 1) os << r.get_num();
    else os << r.get_num() << '/' << r.get_den();
    return os.str();
}

Rational parse_rational_string(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string Scalar::str() const {
    if (is_exact()) return rational_str(std::get<Rational>(v_));
    const Complex c = std::get<Complex>(v_);
    std::ostringstream os;
    os << c.real();
    if (c.imag() != 0.0) os << (c.imag() < 0 ? "" : "+") << c.imag() << 'i';
    return os.str();
}

Scalar Scalar::parse_rational(const std::string& text) {
    return Scalar(parse_rational_string(text));
}

}  // namespace schurzeta
