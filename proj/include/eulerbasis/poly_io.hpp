#ifndef EULERBASIS_POLY_IO_HPP
#define EULERBASIS_POLY_IO_HPP

#include "polynomial.hpp"

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerbasis {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what)
        , position_(position)
    {
    }

    /// Zero-based byte offset into the input.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

namespace detail {

// Recursive descent over
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'x' ('^' nat)? | '(' expr ')'
//   rational := int ('/' posint)?
class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text)
        : text_(text)
    {
    }

    Polynomial parse()
    {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos_); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c)
    {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    Integer digits()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a digit");
        return Integer(std::string(text_.substr(start, pos_ - start)), 10);
    }

    Polynomial expr()
    {
        const bool negate = accept('-');
        Polynomial acc = term();
        if (negate)
            acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        while (accept('*'))
            acc = acc * factor();
        return acc;
    }

    Polynomial factor()
    {
        skip_ws();
        if (pos_ == text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            if (!accept('^'))
                return Polynomial::x();
            const Integer e = digits();
            if (!e.fits_uint_p() || e > 100000)
                fail("exponent too large");
            return Polynomial::monomial(e.get_ui());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const Integer num = digits();
            if (!accept('/'))
                return Polynomial::constant(Rational(num));
            const std::size_t den_pos = pos_;
            const Integer den = digits();
            if (den == 0) {
                pos_ = den_pos;
                skip_ws();
                fail("division by zero in rational literal");
            }
            return Polynomial::constant(make_rational(num, den));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(std::string_view text)
{
    return detail::PolynomialParser(text).parse();
}

enum class PolyFormat { plain, latex };

namespace detail {

inline std::string latex_rational(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

inline std::string render_power(std::size_t i, PolyFormat format)
{
    if (i == 1)
        return "x";
    if (format == PolyFormat::latex)
        return "x^{" + std::to_string(i) + "}";
    return "x^" + std::to_string(i);
}

} // namespace detail

/// Descending powers; plain output parses back to the same polynomial.
inline std::string render_polynomial(const Polynomial& p, PolyFormat format = PolyFormat::plain)
{
    if (p.is_zero())
        return "0";
    std::string out;
    const auto c = p.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0)
            continue;
        const bool negative = c[i] < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Rational mag = abs(c[i]);
        const std::string num = format == PolyFormat::latex ? detail::latex_rational(mag) : mag.get_str();
        if (i == 0)
            out += num;
        else if (mag == 1)
            out += detail::render_power(i, format);
        else
            out += num + (format == PolyFormat::latex ? "" : "*") + detail::render_power(i, format);
    }
    return out;
}

} // namespace eulerbasis

#endif
