#pragma once

#include <json.hpp>

#include "sqleg/caseaudit.hpp"
#include "sqleg/hypotheses.hpp"
#include "sqleg/search.hpp"
#include "sqleg/transfer.hpp"
#include "sqleg/triples.hpp"

namespace sqleg {

using json = nlohmann::json;

/// Big integers serialize as decimal strings in every machine format.
std::string dec(const Natural& v);

json to_json(const SearchCertificate& cert);
json to_json(const QuarticSolution& sol);
json to_json(const Eq19Solution& sol);
json to_json(const Factorization& f);
json to_json(const PrimitiveTriple& t);
json to_json(const DicksonDecomposition& d);
json to_json(const Theorem1Report& rep);
json to_json(const Theorem2Report& rep);
json to_json(const CaseAuditReport& rep);
json to_json(const DecompositionTrace& trace);
json to_json(const DivisorTriple& row);

}  // namespace sqleg
