#pragma once

#include <json.hpp>
#include <string>

#include "wreg/oracle.hpp"

namespace wreg {

using Json = nlohmann::ordered_json;

/// Parses the bit-exact polynomial grammar:
///   poly     := term ("+" term)* | "0"
///   term     := [sign] [rational "*"] factor ("*" factor)*
///   factor   := "x" index ["^" nat]
///   rational := int ["/" nat]
/// No whitespace.  Errors carry the offending position.
WeightedPoly parse_poly(const std::string& text, int nvars);
std::string poly_to_string(const WeightedPoly& p);

/// Sheaf documents: {"weights": [...], "sheaf": <expr>} with expr one of
/// split | monad | twist | sum.  Unknown keys are rejected.
SheafExpr parse_document(const Json& doc);
SheafExpr parse_document_text(const std::string& text);
Json serialize_document(const SheafExpr& e);

Json to_json(const Int& v);  // number when it fits 64 bits, string otherwise
Json to_json(const CohomologyTable& t);
std::string to_csv(const CohomologyTable& t);
Json to_json(const RegularityReport& r);
Json to_json(const MonadValidity& v);
Json to_json(const PullbackRegReport& r);
Json to_json(const RestrictReport& r);
Json to_json(const MonadBoundReport& r);
Json to_json(const GgCertificate& c);
Json to_json(const HorrocksShape& s);
Json to_json(const VerificationReport& r);
VerificationReport verification_report_from_json(const Json& j);

}  // namespace wreg
