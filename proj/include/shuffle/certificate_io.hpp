#pragma once

#include <string>

#include "json.hpp"
#include "shuffle/conditions.hpp"
#include "shuffle/generators.hpp"

namespace shuffle {

inline constexpr int kCertificateSchema = 1;

// Module certificate:
//   {"schema": 1, "kind": "module", "target": [d1, ...],
//    "combination": [{"cofactor": "<canonical poly>", "word": [...]}, ...]}
// Ideal certificate:
//   {"schema": 1, "kind": "ideal", "target": [d1, ...] | "<canonical poly>",
//    "arity": k, "A": "<canonical poly>", "B": "<canonical poly>"}
// Combination entries are ordered lexicographically by word.

nlohmann::json to_json(const ModuleCertificate& c);
nlohmann::json to_json(const IdealCertificate& c);

/// Throw FormatError on schema violations and SyntaxError on bad polynomials.
ModuleCertificate module_certificate_from_json(const nlohmann::json& j);
IdealCertificate ideal_certificate_from_json(const nlohmann::json& j);

/// "sh[...] = (c1) sh[...] + (c2) sh[...]"; the right-hand side is itself a
/// valid expression.
std::string to_text(const ModuleCertificate& c);
/// Three lines: target, A and B.
std::string to_text(const IdealCertificate& c);

}  // namespace shuffle
