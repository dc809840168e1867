#include "delsub/serialize.hpp"

#include <cstdio>

#include "delsub/errors.hpp"

namespace delsub {

Json to_json(const Ball& ball) {
  Json out = Json::array();
  for (const auto& m : ball.members) out.push_back(m.str());
  return out;
}

Json to_json(const EditScript& script) {
  Json subs = Json::array();
  for (auto [pos, sym] : script.substitutions) subs.push_back({pos, sym});
  return {{"deletions", script.deletions}, {"substitutions", subs}, {"transpositions", script.transpositions}};
}

EditScript edit_script_from_json(const Json& j) {
  try {
    EditScript s;
    s.deletions = j.value("deletions", std::vector<std::size_t>{});
    for (const auto& pair : j.value("substitutions", Json::array())) {
      s.substitutions.emplace_back(pair.at(0).get<std::size_t>(), pair.at(1).get<Symbol>());
    }
    s.transpositions = j.value("transpositions", std::vector<std::size_t>{});
    return s;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad edit script: ") + e.what());
  }
}

Json to_json(const Partition& p) {
  Json w = Json::array();
  for (const auto& x : p.witnesses) w.push_back({x.length, x.px, x.py});
  return {{"cuts", p.cuts}, {"witnesses", w}};
}

Partition partition_from_json(const Json& j) {
  try {
    Partition p;
    p.cuts = j.at("cuts").get<std::vector<std::size_t>>();
    for (const auto& w : j.value("witnesses", Json::array())) {
      p.witnesses.push_back({w.at(0).get<int>(), w.at(1).get<std::size_t>(), w.at(2).get<std::size_t>()});
    }
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad partition: ") + e.what());
  }
}

Json to_json(const CodeParams& params) {
  return {{"family", to_string(params.family)}, {"q", params.q},         {"n", params.n},
          {"t", params.t},                      {"s", params.s},         {"residues", params.residues}};
}

CodeParams code_params_from_json(const Json& j) {
  try {
    CodeParams p;
    p.family = parse_family(j.at("family").get<std::string>());
    p.q = j.value("q", 2);
    p.n = j.at("n").get<std::size_t>();
    p.t = j.value("t", 1);
    p.s = j.value("s", 0);
    p.residues = j.at("residues").get<std::vector<std::uint64_t>>();
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad code parameters: ") + e.what());
  }
}

Json to_json(const ErrorCertificate& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.steps) {
    if (s.kind == Step::Kind::Substitution) steps.push_back({{"substitution", s.position}, {"symbol", s.symbol}});
    else steps.push_back({{"transposition", s.position}});
  }
  std::vector<int> inserted(cert.inserted.begin(), cert.inserted.end());
  return {{"x", cert.x.str()},       {"y", cert.y.str()},        {"del_x", cert.del_x},
          {"ins_z", cert.ins_z},     {"inserted", inserted},     {"steps", steps}};
}

Json to_json(const Counterexample& c) {
  return {{"q", c.x.q()}, {"x", c.x.str()}, {"y", c.y.str()}, {"z", c.z.str()}};
}

Counterexample counterexample_from_json(const Json& j) {
  try {
    const int q = j.value("q", 2);
    return {Sequence::parse(j.at("x").get<std::string>(), q), Sequence::parse(j.at("y").get<std::string>(), q),
            Sequence::parse(j.at("z").get<std::string>(), q)};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad counterexample: ") + e.what());
  }
}

Json to_json(const VerificationReport& report) {
  Json out{{"mode", to_string(report.mode)}, {"pairs_checked", report.pairs_checked}, {"ok", report.ok()}};
  if (report.counterexample) out["counterexample"] = to_json(*report.counterexample);
  return out;
}

Json to_json(const CellSummary& cell) {
  Json out{{"family", to_string(cell.family)},
           {"q", cell.q},
           {"n", cell.n},
           {"t", cell.t},
           {"s", cell.s},
           {"mode", to_string(cell.mode)},
           {"modulus_rule", to_string(cell.rule)},
           {"codes_checked", cell.codes_checked},
           {"codes_failed", cell.codes_failed},
           {"best_size", cell.best_size},
           {"best_residues", cell.best_residues},
           {"pigeonhole_floor", cell.floor.str()},
           {"redundancy_bits", cell.redundancy_bits},
           {"ok", cell.ok()}};
  if (cell.first_counterexample) {
    out["counterexample"] = to_json(*cell.first_counterexample);
    out["failing_residues"] = cell.failing_residues;
  }
  return out;
}

Json to_json(const SigmaWitness& w) { return {{"sigma", w.sigma}, {"difference", w.difference.entries}}; }

Json to_json(const AuditReport& report) {
  return {{"name", report.name},
          {"cases", report.cases},
          {"violations", report.violations},
          {"first_violation", report.first_violation},
          {"ok", report.ok()}};
}

std::string bucket_csv_header() { return "family,q,n,t,s,best_size,pigeonhole_floor,redundancy_bits"; }

std::string cell_csv_header() { return bucket_csv_header() + ",mode,codes_checked,codes_failed,ok"; }

namespace {

std::string csv_row(Family family, int q, std::size_t n, int t, int s, std::uint64_t best, const BigInt& floor,
                    double redundancy) {
  char red[32];
  std::snprintf(red, sizeof red, "%.4f", redundancy);
  return to_string(family) + "," + std::to_string(q) + "," + std::to_string(n) + "," + std::to_string(t) + "," +
         std::to_string(s) + "," + std::to_string(best) + "," + floor.str() + "," + red;
}

}  // namespace

std::string cell_csv_row(const CellSummary& cell) {
  return csv_row(cell.family, cell.q, cell.n, cell.t, cell.s, cell.best_size, cell.floor, cell.redundancy_bits) +
         "," + to_string(cell.mode) + "," + std::to_string(cell.codes_checked) + "," +
         std::to_string(cell.codes_failed) + "," + (cell.ok() ? "1" : "0");
}

std::string bucket_csv_row(const BucketSummary& summary) {
  const auto& b = summary.best;
  return csv_row(b.family, b.q, b.n, b.t, b.s, summary.best_size, summary.floor, summary.redundancy_bits);
}

}  // namespace delsub
