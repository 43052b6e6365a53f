#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "recipchow/detrep.hpp"
#include "recipchow/multipoly.hpp"

namespace recipchow {

using ordered_json = nlohmann::ordered_json;

/// On-disk form of a space: {"rows": d, "cols": n, "entries": [["p/q", ...], ...]},
/// rationals as strings (plain integers also accepted). An optional
/// "kernel_basis" block of the same shape pins the orthogonal frame used by
/// the entropic command.
struct SpaceFile {
    RatMatrix mat;
    std::optional<RatMatrix> kernel_basis;
};

SpaceFile load_space_file(const std::string& path);
SpaceFile space_from_json(const ordered_json& j);

ordered_json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const ordered_json& j);

/// {"vars": [...], "terms": [{"coeff": "p/q", "exps": [...]}]} with terms
/// from the leading one down in graded-lex order.
ordered_json multipoly_to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const ordered_json& j);

ordered_json plucker_to_json(const PlueckerVector& p);

} // namespace recipchow
