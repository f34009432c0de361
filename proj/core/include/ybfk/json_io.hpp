#pragma once

#include "ybfk/lie_algebra.hpp"
#include "ybfk/matgroup.hpp"
#include "ybfk/rmatrix.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>

namespace ybfk {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const QMatrix& m);
Json to_json(const GroupElement& g);
/// Named nonzero coefficients, e.g. {"E": "1/2"}.
Json to_json(const LieAlgebra& a, const std::vector<Rational>& coefficients);

/// {"label", "dim", "basis", "brackets": [[i, j, [[k, "p/q"], ...]], ...]} plus
/// "matrices" when the algebra is realized.
Json algebra_to_json(const LieAlgebra& a);
/// Accepts a builtin name ("sl2", "sl(3)", ...) or the object form above. With
/// "matrices" present the brackets are recomputed and must agree if also given.
AlgebraPtr algebra_from_json(const Json& j);

/// {"algebra": <name or object>, "entries": [[u, v, "p/q"], ...]} with u < v.
Json bivector_to_json(const Bivector& r, bool inline_algebra = false);
Bivector bivector_from_json(const Json& j);
Bivector load_bivector(const std::filesystem::path& path);

/// Named r-matrices: "sl2-jordanian" (E∧H), "sl2-nonsolution" (E∧F),
/// "jordanian-<n>" (the Frobenius-route Jordanian r on sl(n)).
Bivector builtin_bivector(std::string_view name);

} // namespace ybfk
