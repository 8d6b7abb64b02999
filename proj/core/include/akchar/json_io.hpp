#pragma once

#include <nlohmann/json.hpp>

#include "akchar/cyclotomic.hpp"
#include "akchar/multipoly.hpp"
#include "akchar/partitions.hpp"
#include "akchar/regev.hpp"
#include "akchar/relations.hpp"
#include "akchar/series.hpp"

namespace akchar {

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
nlohmann::json integer_to_json(const Integer& c);
Integer integer_from_json(const nlohmann::json& j);

/// {"m": 2, "terms": [{"c": 1, "eq": 0, "eu": [0, 1]}, ...]} in canonical term order.
nlohmann::json to_json(const MultiPoly& p);
/// Inverse of to_json(MultiPoly); throws ParseError.
MultiPoly multipoly_from_json(const nlohmann::json& j);

/// {"modulus": m, "coeffs": [...]}.
nlohmann::json to_json(const CycloElem& c);
/// {"order": D, "coeffs": [<MultiPoly>, ...]}.
nlohmann::json to_json(const TruncSeries& s);

/// Tagged value: {"ring": "generic"|"group"|"t-adic", "text": ..., ...}.
nlohmann::json to_json(const CharValue& v);

/// [[3,1],[],[2]].
nlohmann::json to_json(const MultiPartition& mu);

/// {"relation": ..., "status": "pass"|"fail", "witness": [letters]|null}, letters 1-based.
nlohmann::json to_json(const RelationResult& r);

}  // namespace akchar
