/**
 * Exact rational scalar type and dense linear-algebra aliases used throughout
 * the library, plus parsing/formatting helpers and the error hierarchy.
 *
 * All arithmetic is exact: the scalar is a GMP-backed rational, and every
 * Eigen object instantiated here is dense and dynamically sized over that
 * scalar.  There is no floating point anywhere in the computational core.
 */

#ifndef POLYMINK_RATIONAL_HPP
#define POLYMINK_RATIONAL_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace polymink {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/** Input that does not conform to the expected grammar or schema. */
struct ParseError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/** A documented precondition of an operation was violated by the caller. */
struct PreconditionError : std::invalid_argument
{
    using std::invalid_argument::invalid_argument;
};

struct EmptyPolyhedronError : PreconditionError
{
    using PreconditionError::PreconditionError;
};
struct DimensionMismatchError : PreconditionError
{
    using PreconditionError::PreconditionError;
};
struct NotAMemberError : PreconditionError
{
    using PreconditionError::PreconditionError;
};
struct NotAConeError : PreconditionError
{
    using PreconditionError::PreconditionError;
};
struct NotSupplementaryError : PreconditionError
{
    using PreconditionError::PreconditionError;
};
struct TooLargeError : PreconditionError
{
    using PreconditionError::PreconditionError;
};
struct NotInDomainError : PreconditionError
{
    using PreconditionError::PreconditionError;
};
struct DomainNotConeError : PreconditionError
{
    using PreconditionError::PreconditionError;
};
struct NotSublinearError : PreconditionError
{
    using PreconditionError::PreconditionError;
};
struct AffineFlatError : PreconditionError
{
    using PreconditionError::PreconditionError;
};

/**
 * A mathematical identity that the library promises to uphold failed at
 * runtime.  This always indicates a bug, never bad input.
 */
struct InvariantViolation : std::logic_error
{
    using std::logic_error::logic_error;
};

/**
 * Parse a rational number written as "p" or "p/q" in base ten.
 *
 * The result is reduced to lowest terms with a positive denominator, no
 * matter how the input was scaled ("-3/6" parses to -1/2).
 *
 * @param text String to parse.
 * @returns Parsed rational.
 * @throws ParseError if the string is not a valid rational literal.
 */
inline Rational parse_rational(const std::string& text)
{
    const auto is_int = [](const std::string& s) -> bool {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    try
    {
        const auto slash = text.find('/');
        if (slash == std::string::npos)
        {
            if (!is_int(text))
                throw ParseError("invalid rational literal: \"" + text + "\"");
            return Rational(Integer(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den))
            throw ParseError("invalid rational literal: \"" + text + "\"");
        const Integer d(den);
        if (d == 0)
            throw ParseError("zero denominator in rational literal: \"" + text + "\"");
        return Rational(Integer(num)) / Rational(d);
    }
    catch (const ParseError&)
    {
        throw;
    }
    catch (const std::exception&)
    {
        throw ParseError("invalid rational literal: \"" + text + "\"");
    }
}

/**
 * Format a rational as "p" (denominator one) or "p/q" with q > 0 and
 * gcd(p, q) = 1.  Inverse of parse_rational on canonical strings.
 */
inline std::string format_rational(const Rational& r)
{
    return r.str();
}

/** Lexicographic comparison of two vectors of equal size. */
inline int lex_compare(const QVector& a, const QVector& b)
{
    for (Eigen::Index i = 0; i < a.size(); ++i)
    {
        if (a[i] < b[i])
            return -1;
        if (a[i] > b[i])
            return 1;
    }
    return 0;
}

/** Strict lexicographic order, suitable for std::sort and ordered containers. */
struct LexLess
{
    bool operator()(const QVector& a, const QVector& b) const
    {
        return lex_compare(a, b) < 0;
    }
};

/**
 * Scale a nonzero vector by the unique positive rational that makes all
 * entries integers with overall gcd one.  Preserves direction; this is the
 * canonical representative of a ray.  The zero vector is returned unchanged.
 */
inline QVector primitive_scaled(const QVector& v)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;

    Integer den_lcm = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            den_lcm = lcm(den_lcm, denominator(v[i]));
    Integer num_gcd = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            num_gcd = gcd(num_gcd, numerator(v[i] * Rational(den_lcm)));
    if (num_gcd == 0)
        return v;
    const Rational scale = Rational(den_lcm) / Rational(num_gcd);
    return v * scale;
}

}  // namespace polymink

#endif  // POLYMINK_RATIONAL_HPP
