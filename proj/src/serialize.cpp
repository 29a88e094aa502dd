#include "sqleg/serialize.hpp"

namespace sqleg {

std::string dec(const Natural& v) { return v.str(); }

json to_json(const SearchCertificate& cert) {
  json params = json::array();
  for (const Natural& p : cert.params) params.push_back(dec(p));
  json out{{"equation", to_string(cert.equation)},
           {"params", params},
           {"bound", dec(cert.bound)},
           {"outcome", to_string(cert.outcome)},
           {"scanned", cert.scanned},
           {"elapsed_ms", cert.elapsed_ms},
           {"workers", cert.workers}};
  if (cert.witness)
    out["witness"] = json::array({dec(cert.witness->x), dec(cert.witness->y), dec(cert.witness->z)});
  return out;
}

json to_json(const QuarticSolution& sol) {
  return json{{"n", dec(sol.n.value())}, {"x", dec(sol.x)}, {"y", dec(sol.y)}, {"z", dec(sol.z)}};
}

json to_json(const Eq19Solution& sol) {
  return json{{"d1", dec(sol.d1.value())}, {"d2", dec(sol.d2.value())},
              {"d3", dec(sol.d3.value())}, {"w", dec(sol.w)},
              {"u", dec(sol.u)},           {"v", dec(sol.v)}};
}

json to_json(const Factorization& f) {
  json powers = json::array();
  for (const auto& [p, e] : f.prime_powers) powers.push_back(json::array({dec(p), e}));
  return json{{"prime_powers", powers}};
}

json to_json(const PrimitiveTriple& t) {
  return json{{"a", dec(t.a)}, {"b", dec(t.b)}, {"c", dec(t.c)},
              {"m", dec(t.m)}, {"n", dec(t.n)}};
}

json to_json(const DicksonDecomposition& d) {
  return json{{"s", dec(d.s)},   {"x", dec(d.x)},   {"k", dec(d.k)},  {"d1", dec(d.d1)},
              {"d2", dec(d.d2)}, {"m1", dec(d.m1)}, {"n1", dec(d.n1)}};
}

json to_json(const Theorem1Report& rep) {
  json out{{"s1", dec(rep.s1)},       {"s2", dec(rep.s2)},       {"cond_a", rep.cond_a},
           {"cond_b", rep.cond_b},    {"cond_c", rep.cond_c},    {"satisfied", rep.satisfied}};
  if (rep.witness) out["witness"] = dec(*rep.witness);
  return out;
}

json to_json(const Theorem2Report& rep) {
  json splits = json::array();
  for (const Theorem2Split& s : rep.splits) {
    splits.push_back(json{{"s1", dec(s.s1)},
                          {"s2", dec(s.s2)},
                          {"s1_mod8", s.s1_mod8},
                          {"s2_mod8", s.s2_mod8},
                          {"ok", s.ok}});
  }
  return json{{"n", dec(rep.n.value())}, {"splits", splits}, {"satisfied", rep.satisfied}};
}

json to_json(const CaseAuditReport& rep) {
  json rows = json::array();
  for (const CaseRow& row : rep.rows) {
    json r{{"case_id", row.case_id},
           {"refutation", to_string(row.refutation)},
           {"detail", row.detail}};
    if (row.leg_split)
      r["split"] = json::array({dec(row.leg_split->first), dec(row.leg_split->second)});
    if (row.even_split)
      r["delta_split"] = json::array({dec(row.even_split->first), dec(row.even_split->second)});
    rows.push_back(std::move(r));
  }
  json out{{"rows", rows}, {"all_refuted", rep.all_refuted}};
  if (!rep.notes.empty()) out["notes"] = rep.notes;
  return out;
}

json to_json(const DecompositionTrace& trace) {
  return json{{"r", dec(trace.r)},
              {"t", dec(trace.t)},
              {"R1", dec(trace.R1)},
              {"T1", dec(trace.T1)},
              {"descent_case", to_string(trace.descent_case)}};
}

json to_json(const DivisorTriple& row) {
  json out{{"d1", dec(row.d1)},
           {"d2", dec(row.d2)},
           {"d3", dec(row.d3)},
           {"status", to_string(row.status)}};
  if (row.status == DivisorStatus::excluded) out["reason"] = to_string(row.reason);
  return out;
}

}  // namespace sqleg
