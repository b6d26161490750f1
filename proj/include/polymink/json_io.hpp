/**
 * JSON serialization of polyhedra and piecewise-linear functions.
 *
 * Schemas: `polyhedron.v1` describes a polyhedron either by inequalities,
 *
 *   {"schema": "polyhedron.v1", "dim": n,
 *    "ineq": [{"a": ["p/q", ...], "b": "p/q"}, ...],
 *    "eq":   [{"a": [...], "b": "..."}, ...]}
 *
 * or by generators,
 *
 *   {"schema": "polyhedron.v1", "dim": n,
 *    "vertices": [["p/q", ...], ...], "rays": [...], "lines": [...]}
 *
 * and `plfunction.v1` describes max-of-affine functions,
 *
 *   {"schema": "plfunction.v1", "dim": n,
 *    "pieces": [{"a": [...], "b": "p/q"}, ...], "domain": <polyhedron.v1>}.
 *
 * Rationals travel as exact strings ("p/q" or "p"); plain JSON integers are
 * also accepted on input.  Malformed documents raise ParseError.
 */

#ifndef POLYMINK_JSON_IO_HPP
#define POLYMINK_JSON_IO_HPP

#include <json.hpp>

#include "epigraph.hpp"

namespace polymink {

using nlohmann::json;

inline Rational rational_from_json(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    throw ParseError("expected a rational as a string or an integer");
}

inline json rational_to_json(const Rational& r)
{
    return format_rational(r);
}

inline QVector vector_from_json(const json& j, Eigen::Index expected_dim)
{
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != expected_dim)
        throw ParseError("expected a vector of length " + std::to_string(expected_dim));
    QVector v(expected_dim);
    for (Eigen::Index i = 0; i < expected_dim; ++i)
        v[i] = rational_from_json(j[static_cast<std::size_t>(i)]);
    return v;
}

inline json vector_to_json(const QVector& v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(rational_to_json(v[i]));
    return out;
}

namespace detail {

inline void check_schema(const json& j, const std::string& expected)
{
    if (j.contains("schema") &&
        (!j["schema"].is_string() || j["schema"].get<std::string>() != expected))
        throw ParseError("document schema is not " + expected);
}

inline Eigen::Index dim_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("expected an object with an integer \"dim\"");
    const long long n = j["dim"].get<long long>();
    if (n < 0)
        throw ParseError("\"dim\" must be nonnegative");
    return static_cast<Eigen::Index>(n);
}

/** Reads [{"a": [...], "b": ...}, ...] into a row matrix and a rhs vector. */
inline std::pair<QMatrix, QVector> rows_from_json(const json& j, Eigen::Index n,
                                                  const char* what)
{
    if (!j.is_array())
        throw ParseError(std::string(what) + " must be an array of rows");
    const Eigen::Index m = static_cast<Eigen::Index>(j.size());
    QMatrix a(m, n);
    QVector b(m);
    for (Eigen::Index i = 0; i < m; ++i)
    {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_object() || !row.contains("a") || !row.contains("b"))
            throw ParseError(std::string(what) + " rows need fields \"a\" and \"b\"");
        a.row(i) = vector_from_json(row["a"], n).transpose();
        b[i] = rational_from_json(row["b"]);
    }
    return {std::move(a), std::move(b)};
}

inline std::vector<QVector> vectors_from_json(const json& j, Eigen::Index n,
                                              const char* what)
{
    if (!j.is_array())
        throw ParseError(std::string(what) + " must be an array of vectors");
    std::vector<QVector> out;
    for (const json& row : j)
        out.push_back(vector_from_json(row, n));
    return out;
}

}  // namespace detail

/** True when the document uses the generator form of polyhedron.v1. */
inline bool json_is_v_form(const json& j)
{
    return j.is_object() &&
           (j.contains("vertices") || j.contains("rays") || j.contains("lines"));
}

inline HPolyhedron h_polyhedron_from_json(const json& j)
{
    detail::check_schema(j, "polyhedron.v1");
    const Eigen::Index n = detail::dim_from_json(j);
    auto [a, b] = detail::rows_from_json(j.value("ineq", json::array()), n, "\"ineq\"");
    auto [e, d] = detail::rows_from_json(j.value("eq", json::array()), n, "\"eq\"");
    return HPolyhedron(std::move(a), std::move(b), std::move(e), std::move(d));
}

inline json h_polyhedron_to_json(const HPolyhedron& p)
{
    json out;
    out["schema"] = "polyhedron.v1";
    out["dim"] = p.ambient_dim();
    out["ineq"] = json::array();
    for (Eigen::Index i = 0; i < p.ineq_matrix().rows(); ++i)
        out["ineq"].push_back({{"a", vector_to_json(p.ineq_matrix().row(i).transpose())},
                               {"b", rational_to_json(p.ineq_rhs()[i])}});
    out["eq"] = json::array();
    for (Eigen::Index i = 0; i < p.eq_matrix().rows(); ++i)
        out["eq"].push_back({{"a", vector_to_json(p.eq_matrix().row(i).transpose())},
                             {"b", rational_to_json(p.eq_rhs()[i])}});
    return out;
}

inline VPolyhedron v_polyhedron_from_json(const json& j)
{
    detail::check_schema(j, "polyhedron.v1");
    VPolyhedron v;
    v.dim = detail::dim_from_json(j);
    v.vertices = detail::vectors_from_json(j.value("vertices", json::array()), v.dim,
                                           "\"vertices\"");
    v.rays = detail::vectors_from_json(j.value("rays", json::array()), v.dim, "\"rays\"");
    v.lines =
        detail::vectors_from_json(j.value("lines", json::array()), v.dim, "\"lines\"");
    return v;
}

inline json v_polyhedron_to_json(const VPolyhedron& v)
{
    json out;
    out["schema"] = "polyhedron.v1";
    out["dim"] = v.dim;
    out["vertices"] = json::array();
    for (const QVector& x : v.vertices)
        out["vertices"].push_back(vector_to_json(x));
    out["rays"] = json::array();
    for (const QVector& x : v.rays)
        out["rays"].push_back(vector_to_json(x));
    out["lines"] = json::array();
    for (const QVector& x : v.lines)
        out["lines"].push_back(vector_to_json(x));
    return out;
}

inline PLFunction pl_function_from_json(const json& j)
{
    detail::check_schema(j, "plfunction.v1");
    const Eigen::Index n = detail::dim_from_json(j);
    if (!j.contains("pieces") || !j.contains("domain"))
        throw ParseError("plfunction.v1 needs \"pieces\" and \"domain\"");
    auto [grads, offsets] = detail::rows_from_json(j["pieces"], n, "\"pieces\"");
    HPolyhedron domain = h_polyhedron_from_json(j["domain"]);
    if (domain.ambient_dim() != n)
        throw ParseError("plfunction.v1 domain dimension mismatch");
    return PLFunction(std::move(grads), std::move(offsets), std::move(domain));
}

inline json pl_function_to_json(const PLFunction& f)
{
    json out;
    out["schema"] = "plfunction.v1";
    out["dim"] = f.dim();
    out["pieces"] = json::array();
    for (Eigen::Index i = 0; i < f.piece_count(); ++i)
        out["pieces"].push_back({{"a", vector_to_json(f.gradients().row(i).transpose())},
                                 {"b", rational_to_json(f.offsets()[i])}});
    out["domain"] = h_polyhedron_to_json(f.domain());
    return out;
}

}  // namespace polymink

#endif  // POLYMINK_JSON_IO_HPP
