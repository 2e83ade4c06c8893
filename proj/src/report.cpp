#include "presmin/report.hpp"

namespace presmin {

namespace {

Json optional_json(const std::optional<Natural>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const UPSet& s) {
  return Json{{"N", s.threshold()},
              {"E", s.exceptional()},
              {"d", s.period()},
              {"R", s.residues()},
              {"literal", s.to_string()}};
}

Json to_json(const Lookup& l) { return l ? Json(l.value) : Json(nullptr); }

Json to_json(const WindowProfile& p) {
  Json entries = Json::object();
  for (const ProfileEntry& e : p.entries) {
    Json row{{"dtilde", to_json(e.dtilde)},
             {"D", to_json(e.big_d)},
             {"A", to_json(e.big_a)},
             {"alpha", to_json(e.alpha)}};
    row["status"] = Json{{"dtilde", to_string(e.dtilde.status)},
                         {"D", to_string(e.big_d.status)},
                         {"A", to_string(e.big_a.status)},
                         {"alpha", to_string(e.alpha.status)}};
    entries[std::to_string(e.n)] = std::move(row);
  }
  return Json{{"n_max", p.n_max},
              {"alpha_period", optional_json(p.alpha_period)},
              {"exact", p.exact},
              {"entries", std::move(entries)}};
}

Json to_json(const Decomposition& d) {
  Json segments = Json::array();
  for (const Segment& s : d.segments) {
    segments.push_back(Json{{"lo", s.lo},
                            {"hi", s.hi ? Json(*s.hi) : Json(d.certified ? "inf" : "horizon")},
                            {"modulus", s.modulus},
                            {"residues", s.residues}});
  }
  return Json{{"points", d.points},
              {"segments", std::move(segments)},
              {"certified", d.certified},
              {"checked_to", optional_json(d.checked_to)}};
}

Json to_json(const WitnessTable& w) {
  Json witnesses = Json::object();
  Json counts = Json::object();
  for (const WitnessRow& row : w.rows) {
    witnesses[std::to_string(row.n)] = row.largest;
    counts[std::to_string(row.n)] = row.count;
  }
  return Json{{"n_max", w.n_max},
              {"B", w.horizon},
              {"counts", std::move(counts)},
              {"witnesses", std::move(witnesses)},
              {"early_gap", w.early_gap},
              {"late_gap", w.late_gap},
              {"evidence", w.evidence}};
}

Json to_json(const AnalysisReport& r) {
  Json out{{"classification", to_string(r.classification)}};
  if (r.decomposition) {
    const Segment& s = r.decomposition->segments.front();
    out["N"] = s.lo;
    out["d"] = s.modulus;
    out["residues"] = s.residues;
    out["points"] = r.decomposition->points;
  } else {
    out["N"] = nullptr;
    out["d"] = nullptr;
    out["residues"] = Json::array();
    out["points"] = Json::array();
  }
  out["u"] = optional_json(r.u);
  out["v"] = optional_json(r.v);
  const Json table = to_json(r.witnesses);
  out["witnesses"] = table["witnesses"];
  out["witness_counts"] = table["counts"];
  out["evidence"] = Json{{"early_gap", r.witnesses.early_gap},
                         {"late_gap", r.witnesses.late_gap},
                         {"fired", r.witnesses.evidence}};
  out["decomposition"] = r.decomposition ? to_json(*r.decomposition) : Json(nullptr);
  out["profile"] = to_json(r.profile);
  return out;
}

}  // namespace presmin
