#include "umbral/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>

namespace umbral {

std::string_view to_string(Mode mode)
{
    return mode == Mode::exact ? "exact" : "floating";
}

Tolerance::Tolerance(double abs, double rel) : abs_eps(abs), rel_eps(rel)
{
    if (!(abs >= 0.0) || !(rel >= 0.0))
        throw ParameterError("tolerance components must be non-negative");
}

Tolerance Tolerance::default_tolerance()
{
    Tolerance tol;
    if (const char* env = std::getenv("UMBRAL_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v >= 0.0)
            tol.abs_eps = v;
    }
    return tol;
}

Scalar::Scalar(const rational& q) : value_(q)
{
    std::get<rational>(value_).canonicalize();
}

Scalar Scalar::exact(long num, long den)
{
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    rational q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::integer(long n, Mode mode)
{
    if (mode == Mode::exact)
        return Scalar(rational(n));
    return Scalar(complex(static_cast<double>(n), 0.0));
}

namespace {

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

// Decimal or scientific literal to an exact rational.
mpq_class parse_decimal(const std::string& text)
{
    std::string mant = text;
    long exp10 = 0;
    if (auto epos = text.find_first_of("eE"); epos != std::string::npos) {
        mant = text.substr(0, epos);
        exp10 = std::stol(text.substr(epos + 1));
    }
    bool neg = false;
    std::size_t i = 0;
    if (!mant.empty() && (mant[0] == '+' || mant[0] == '-')) {
        neg = mant[0] == '-';
        i = 1;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    for (; i < mant.size(); ++i) {
        char c = mant[i];
        if (c == '.') {
            if (seen_dot)
                throw ParameterError("malformed number: " + text);
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_dot)
                ++frac_digits;
        } else {
            throw ParameterError("malformed number: " + text);
        }
    }
    if (digits.empty())
        throw ParameterError("malformed number: " + text);
    mpz_class num(digits, 10);
    mpz_class ten_pow;
    long net = exp10 - frac_digits;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(net)));
    mpq_class q = net >= 0 ? mpq_class(num * ten_pow) : mpq_class(num, ten_pow);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

mpq_class parse_rational(const std::string& text)
{
    if (auto slash = text.find('/'); slash != std::string::npos) {
        mpq_class num = parse_decimal(trim(text.substr(0, slash)));
        mpq_class den = parse_decimal(trim(text.substr(slash + 1)));
        if (den == 0)
            throw DivisionByZero("rational with zero denominator: " + text);
        mpq_class q = num / den;
        q.canonicalize();
        return q;
    }
    return parse_decimal(text);
}

double parse_real(const std::string& text)
{
    if (text.find('/') != std::string::npos)
        return parse_rational(text).get_d();
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ParameterError("malformed number: " + text);
    }
    if (used != text.size())
        throw ParameterError("malformed number: " + text);
    return v;
}

std::complex<double> parse_complex(const std::string& text)
{
    if (text.empty() || (text.back() != 'i' && text.back() != 'j'))
        return {parse_real(text), 0.0};
    std::string body = text.substr(0, text.size() - 1);
    // split at the last sign that is not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [](const std::string& s) {
        if (s.empty() || s == "+")
            return 1.0;
        if (s == "-")
            return -1.0;
        return parse_real(s);
    };
    if (split == std::string::npos)
        return {0.0, imag_of(body)};
    return {parse_real(body.substr(0, split)), imag_of(body.substr(split))};
}

} // namespace

Scalar Scalar::parse(std::string_view text, Mode mode)
{
    std::string t = trim(text);
    if (t.empty())
        throw ParameterError("empty number");
    if (mode == Mode::exact)
        return Scalar(parse_rational(t));
    return Scalar(parse_complex(t));
}

const Scalar::rational& Scalar::as_rational() const
{
    if (auto p = std::get_if<rational>(&value_))
        return *p;
    throw ModeMismatch("expected an exact scalar, got a floating one");
}

const Scalar::complex& Scalar::as_complex() const
{
    if (auto p = std::get_if<complex>(&value_))
        return *p;
    throw ModeMismatch("expected a floating scalar, got an exact one");
}

Scalar::complex Scalar::to_complex() const
{
    if (auto p = std::get_if<rational>(&value_))
        return {p->get_d(), 0.0};
    return std::get<complex>(value_);
}

double Scalar::magnitude() const
{
    if (auto p = std::get_if<rational>(&value_))
        return std::fabs(p->get_d());
    return std::abs(std::get<complex>(value_));
}

bool Scalar::is_zero() const
{
    if (auto p = std::get_if<rational>(&value_))
        return sgn(*p) == 0;
    return std::get<complex>(value_) == complex(0.0, 0.0);
}

bool Scalar::is_zero(const Tolerance& tol) const
{
    if (is_exact())
        return is_zero();
    return std::abs(std::get<complex>(value_)) <= tol.abs_eps;
}

void require_same_mode(const Scalar& a, const Scalar& b)
{
    if (a.mode() != b.mode())
        throw ModeMismatch("mixed exact/floating arithmetic");
}

Scalar Scalar::operator-() const
{
    if (auto p = std::get_if<rational>(&value_))
        return Scalar(rational(-*p));
    return Scalar(-std::get<complex>(value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    require_same_mode(*this, rhs);
    if (auto p = std::get_if<rational>(&value_))
        *p += std::get<rational>(rhs.value_);
    else
        std::get<complex>(value_) += std::get<complex>(rhs.value_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    require_same_mode(*this, rhs);
    if (auto p = std::get_if<rational>(&value_))
        *p -= std::get<rational>(rhs.value_);
    else
        std::get<complex>(value_) -= std::get<complex>(rhs.value_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    require_same_mode(*this, rhs);
    if (auto p = std::get_if<rational>(&value_))
        *p *= std::get<rational>(rhs.value_);
    else
        std::get<complex>(value_) *= std::get<complex>(rhs.value_);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    require_same_mode(*this, rhs);
    if (rhs.is_zero())
        throw DivisionByZero("division by zero");
    if (auto p = std::get_if<rational>(&value_))
        *p /= std::get<rational>(rhs.value_);
    else
        std::get<complex>(value_) /= std::get<complex>(rhs.value_);
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    require_same_mode(a, b);
    if (a.is_exact())
        return a.as_rational() == b.as_rational();
    return a.as_complex() == b.as_complex();
}

std::string Scalar::to_string() const
{
    if (auto p = std::get_if<rational>(&value_))
        return p->get_str();
    const complex& z = std::get<complex>(value_);
    std::ostringstream os;
    os.precision(17);
    if (z.imag() == 0.0) {
        os << z.real();
    } else {
        os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

bool scalar_eq(const Scalar& a, const Scalar& b, const Tolerance& tol)
{
    require_same_mode(a, b);
    if (a.is_exact())
        return a.as_rational() == b.as_rational();
    const double diff = std::abs(a.as_complex() - b.as_complex());
    const double scale = std::max(std::abs(a.as_complex()), std::abs(b.as_complex()));
    return diff <= tol.abs_eps + tol.rel_eps * scale;
}

Scalar divide(const Scalar& a, const Scalar& b, const Tolerance& tol)
{
    require_same_mode(a, b);
    if (b.is_zero(tol))
        throw DivisionByZero("divisor vanishes within tolerance");
    return a / b;
}

Scalar pow(const Scalar& base, long exponent)
{
    if (exponent < 0)
        return Scalar::one(base.mode()) / pow(base, -exponent);
    if (base.is_exact()) {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), base.as_rational().get_num_mpz_t(),
                   static_cast<unsigned long>(exponent));
        mpz_pow_ui(den.get_mpz_t(), base.as_rational().get_den_mpz_t(),
                   static_cast<unsigned long>(exponent));
        return Scalar(mpq_class(num, den));
    }
    Scalar result = Scalar::one(Mode::floating);
    Scalar b = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1UL)
            result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

} // namespace umbral
