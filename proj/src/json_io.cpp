#include "reeb/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "reeb/error.hpp"

namespace reeb::io {

namespace {

template <typename F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

std::int64_t parse_degree(const std::string& key) {
  std::int64_t value = 0;
  const char* end = key.data() + key.size();
  const auto [ptr, ec] = std::from_chars(key.data(), end, value);
  if (ec != std::errc() || ptr != end) fail(ErrorCode::ParseError, "degree key '" + key + "' is not an integer");
  return value;
}

std::int64_t int_or(const Json& j, const char* key, std::int64_t fallback) {
  return j.contains(key) ? j.at(key).get<std::int64_t>() : fallback;
}

Json rational_json(const Rational& value) { return to_string(value); }

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  return parse_rational(j.get<std::string>());
}

Json sign_json(Perturbation p) { return std::string(1, to_char(p)); }

Json int_list(const std::vector<std::int64_t>& values) {
  Json out = Json::array();
  for (auto v : values) out.push_back(v);
  return out;
}

Json degree_map(const std::map<std::int64_t, std::int64_t>& entries) {
  Json out = Json::object();
  for (const auto& [degree, count] : entries) out[std::to_string(degree)] = count;
  return out;
}

const Json& unwrap_list(const Json& j, const char* key) {
  if (j.is_object() && j.contains(key)) return j.at(key);
  return j;
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

Json to_json(const OrbitIndexModel& model) {
  Json angles = Json::array();
  for (const auto& a : model.angles()) {
    angles.push_back({{"r", rational_json(a.standard())}, {"sign", sign_json(a.perturbation())}});
  }
  return {{"angles", angles},
          {"h", model.h()},
          {"offset", model.offset()},
          {"order", model.order()},
          {"multiplicity", model.multiplicity()}};
}

OrbitIndexModel model_from_json(const Json& j) {
  return guarded("orbit model", [&] {
    std::vector<PerturbedRational> angles;
    for (const auto& a : j.at("angles")) {
      const Perturbation sign = a.contains("sign") ? parse_perturbation(a.at("sign").get<std::string>())
                                                   : Perturbation::zero;
      angles.emplace_back(rational_from(a.at("r")), sign);
    }
    return OrbitIndexModel(std::move(angles), j.at("h").get<std::int64_t>(), j.at("offset").get<std::int64_t>(),
                           int_or(j, "order", 1), int_or(j, "multiplicity", 1));
  });
}

std::vector<OrbitIndexModel> models_from_json(const Json& j) {
  const Json& list = unwrap_list(j, "models");
  std::vector<OrbitIndexModel> out;
  if (list.is_array()) {
    for (const auto& item : list) out.push_back(model_from_json(item));
  } else {
    out.push_back(model_from_json(list));
  }
  return out;
}

Json to_json(const std::vector<OrbitIndexModel>& models) {
  Json out = Json::array();
  for (const auto& m : models) out.push_back(to_json(m));
  return out;
}

Json to_json(const IndexJumpCertificate& cert) {
  return {{"d", cert.d},
          {"k", int_list(cert.ks)},
          {"ell0", cert.ell0},
          {"divisor", cert.divisor},
          {"direction", std::string(to_string(cert.direction))}};
}

IndexJumpCertificate certificate_from_json(const Json& j) {
  return guarded("index jump certificate", [&] {
    IndexJumpCertificate cert;
    cert.d = j.at("d").get<std::int64_t>();
    cert.ks = j.at("k").get<std::vector<std::int64_t>>();
    cert.ell0 = j.at("ell0").get<std::int64_t>();
    cert.divisor = int_or(j, "divisor", 1);
    if (j.contains("direction")) cert.direction = parse_jump_direction(j.at("direction").get<std::string>());
    return cert;
  });
}

Json to_json(const SearchExhausted& exhausted) {
  return {{"exhausted", true},
          {"bound", exhausted.bound},
          {"step", exhausted.step},
          {"candidates_scanned", exhausted.candidates_scanned}};
}

Json to_json(const JumpVerification& verification) {
  Json out = {{"passed", verification.passed}};
  if (!verification.passed) {
    out["violation"] = verification.violation;
    if (verification.model) out["model"] = *verification.model;
    if (verification.ell) out["ell"] = *verification.ell;
  }
  return out;
}

Json to_json(const FacetWithSigns& facet) {
  Json reeb = Json::array();
  for (const auto& r : facet.facet.reeb) reeb.push_back(rational_json(r));
  Json signs = Json::array();
  for (auto s : facet.signs) signs.push_back(sign_json(s));
  Json out = {{"vertices", facet.facet.vertices}, {"eta", facet.facet.eta}, {"reeb", reeb}};
  if (!facet.signs.empty()) out["signs"] = signs;
  return out;
}

FacetWithSigns facet_from_json(const Json& j) {
  return guarded("facet", [&] {
    FacetWithSigns out;
    out.facet.vertices = j.at("vertices").get<std::vector<std::vector<std::int64_t>>>();
    out.facet.eta = j.at("eta").get<std::vector<std::int64_t>>();
    for (const auto& r : j.at("reeb")) out.facet.reeb.push_back(rational_from(r));
    if (j.contains("signs")) {
      for (const auto& s : j.at("signs")) out.signs.push_back(parse_perturbation(s.get<std::string>()));
    }
    return out;
  });
}

std::vector<FacetWithSigns> facets_from_json(const Json& j) {
  const Json& list = unwrap_list(j, "facets");
  std::vector<FacetWithSigns> out;
  if (list.is_array()) {
    for (const auto& item : list) out.push_back(facet_from_json(item));
  } else {
    out.push_back(facet_from_json(list));
  }
  return out;
}

Json to_json(const ReebDecomposition& decomp) {
  Json b_list = Json::array();
  for (const auto& b : decomp.b_list) b_list.push_back(rational_json(b));
  Json out = {{"b_list", b_list}, {"b", rational_json(decomp.b)}, {"q", decomp.q}, {"N", decomp.N}};
  if (!decomp.signs.empty()) {
    Json signs = Json::array();
    for (auto s : decomp.signs) signs.push_back(sign_json(s));
    out["signs"] = signs;
    out["s"] = decomp.s;
  }
  return out;
}

Json to_json(const Prop81Report& report) {
  Json out = {{"passed", report.passed}, {"L", report.L}, {"s", report.s}, {"q", report.q}, {"N", report.N}};
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    out["counterexample"] = {{"identity", c.identity}, {"k1", c.k1}, {"k2", c.k2},
                             {"expected", c.expected}, {"actual", c.actual}};
  }
  return out;
}

Json to_json(const ToricProfile& profile) {
  Json out = to_json(profile.ranks);
  out["K"] = profile.K;
  out["N"] = int_list(profile.Ns);
  return out;
}

Json to_json(const Theorem82Report& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"s", v.s}, {"d", v.d}, {"base_rank", v.base_rank}, {"shifted_rank", v.shifted_rank}});
  }
  return {{"passed", report.passed},
          {"window", to_string(report.window)},
          {"comparisons", report.comparisons},
          {"skipped_unknown", report.skipped_unknown},
          {"violations", violations}};
}

Json to_json(const BettiTable& table) { return {{"ranks", degree_map(table.entries())}}; }

BettiTable betti_from_json(const Json& j) {
  return guarded("betti table", [&] {
    BettiTable out;
    for (const auto& [key, value] : unwrap_list(j, "ranks").items()) {
      out.add(parse_degree(key), value.get<std::int64_t>());
    }
    return out;
  });
}

Json to_json(const GradedRanks& ranks) {
  Json out = {{"ranks", degree_map(ranks.ranks())}};
  if (!ranks.unknown().empty()) {
    Json unknown = Json::array();
    for (auto d : ranks.unknown()) unknown.push_back(d);
    out["unknown"] = unknown;
  }
  out["window"] = to_string(ranks.window());
  return out;
}

GradedRanks ranks_from_json(const Json& j) {
  return guarded("graded ranks", [&] {
    std::map<std::int64_t, std::int64_t> entries;
    for (const auto& [key, value] : j.at("ranks").items()) entries[parse_degree(key)] = value.get<std::int64_t>();
    std::vector<std::int64_t> unknown;
    if (j.contains("unknown")) unknown = j.at("unknown").get<std::vector<std::int64_t>>();

    Window window;
    if (j.contains("window")) {
      window = parse_window(j.at("window").get<std::string>());
    } else {
      std::vector<std::int64_t> all = unknown;
      for (const auto& [d, c] : entries) all.push_back(d);
      if (all.empty()) fail(ErrorCode::ParseError, "ranks without a window must list at least one degree");
      window = {*std::min_element(all.begin(), all.end()), *std::max_element(all.begin(), all.end())};
    }
    GradedRanks out(window);
    for (const auto& [d, c] : entries) out.set(d, c);
    for (auto d : unknown) out.mark_unknown(d);
    return out;
  });
}

std::vector<MorseBottComponent> components_from_json(const Json& j) {
  return guarded("Morse-Bott components", [&] {
    std::vector<MorseBottComponent> out;
    for (const auto& c : unwrap_list(j, "components")) {
      MorseBottComponent comp;
      comp.action_level = c.at("level").get<std::int64_t>();
      comp.rs_index = c.at("rs_index").get<std::int64_t>();
      comp.equivariant_betti = betti_from_json(c.at("betti"));
      if (comp.action_level < 1) fail(ErrorCode::InvalidArgument, "action level must be >= 1");
      out.push_back(std::move(comp));
    }
    return out;
  });
}

Json to_json(const std::vector<MorseBottComponent>& components) {
  Json list = Json::array();
  for (const auto& c : components) {
    list.push_back({{"level", c.action_level}, {"rs_index", c.rs_index}, {"betti", to_json(c.equivariant_betti)}});
  }
  return {{"components", list}};
}

Json to_json(const E1Page& page) {
  Json entries = Json::array();
  for (const auto& [pq, rank] : page.entries) entries.push_back({{"p", pq.first}, {"q", pq.second}, {"rank", rank}});
  return {{"q_window", to_string(page.q_window)}, {"p_max", page.p_max}, {"entries", entries}};
}

Json to_json(const Prop91Report& report) {
  Json checked = Json::array();
  for (const auto& [degree, rank] : report.checked) checked.push_back({{"degree", degree}, {"rank", rank}});
  Json out = {{"passed", report.passed}, {"base_rank", report.base_rank}, {"checked", checked}};
  if (!report.failure.empty()) out["failure"] = report.failure;
  return out;
}

Json to_json(const MorseReport& report) {
  return {{"passed", report.passed}, {"violations", report.violations}};
}

Json to_json(const BrieskornProfile& profile) {
  Json out = to_json(profile.ranks);
  out["K"] = profile.K;
  return out;
}

Json to_json(const HypothesisCertificate& cert) {
  return {{"n", cert.n},
          {"K", cert.K},
          {"direction", std::string(to_string(cert.direction))},
          {"window", to_string(cert.window)},
          {"verified_js", int_list(cert.verified_js)}};
}

HypothesisCertificate hypothesis_from_json(const Json& j) {
  return guarded("hypothesis certificate", [&] {
    HypothesisCertificate cert;
    cert.n = j.at("n").get<std::int64_t>();
    cert.K = j.at("K").get<std::int64_t>();
    cert.direction = parse_hypothesis_direction(j.at("direction").get<std::string>());
    cert.window = parse_window(j.at("window").get<std::string>());
    cert.verified_js = j.at("verified_js").get<std::vector<std::int64_t>>();
    return cert;
  });
}

Json to_json(const FailureWitness& witness) {
  return {{"failure", true}, {"j", witness.j}, {"base_rank", witness.base_rank}, {"shifted_rank", witness.shifted_rank}};
}

Json to_json(const std::vector<DegreeBounds>& bounds) {
  Json out = Json::array();
  for (const auto& b : bounds) out.push_back({{"degree", b.degree}, {"lower", b.lower}, {"upper", b.upper}});
  return out;
}

Json to_json(const Theorem127Result& result) {
  Json rows = Json::array();
  for (const auto& r : result.rows) {
    rows.push_back({{"j", r.j}, {"degree", r.degree}, {"r1", r.r1}, {"r2", r.r2},
                    {"chain_lower", r.chain_lower}, {"triangle_lower", r.triangle_lower}, {"holds", r.holds}});
  }
  return {{"K", result.K},
          {"passed", result.passed},
          {"rank_at_n", result.rank_at_n},
          {"disk_shift", "lower(D) = max(0, w(D) - disk(D-1))"},
          {"rows", rows},
          {"certificate", to_json(result.certificate)}};
}

Json to_json(const ContradictionTrace& trace) {
  Json out = {{"branch", std::string(to_string(trace.branch))},
              {"direction", std::string(to_string(trace.direction))},
              {"n", trace.n},
              {"K", trace.K}};
  if (trace.ell0) out["ell0"] = *trace.ell0;
  if (trace.certificate) out["certificate"] = to_json(*trace.certificate);
  out["witness_degree"] = trace.witness_degree;
  out["j"] = trace.j;
  out["count_at_witness"] = trace.count_at_witness;
  out["count_at_n"] = trace.count_at_n ? Json(*trace.count_at_n) : Json(nullptr);
  out["witness_iterates"] = int_list(trace.witness_iterates);
  out["base_iterates"] = int_list(trace.base_iterates);
  out["enumeration_bound"] = trace.enumeration_bound;
  out["holds_without_trivial_differential"] = trace.holds_without_trivial_differential;
  out["conclusion"] = trace.conclusion;
  return out;
}

ContradictionTrace trace_from_json(const Json& j) {
  return guarded("contradiction trace", [&] {
    ContradictionTrace trace;
    const auto branch = j.at("branch").get<std::string>();
    if (branch == "index_jump") {
      trace.branch = TraceBranch::index_jump;
    } else if (branch == "nonpositive_mean_index") {
      trace.branch = TraceBranch::nonpositive_mean_index;
    } else {
      fail(ErrorCode::ParseError, "unknown trace branch '" + branch + "'");
    }
    trace.direction = parse_hypothesis_direction(j.at("direction").get<std::string>());
    trace.n = j.at("n").get<std::int64_t>();
    trace.K = j.at("K").get<std::int64_t>();
    if (j.contains("ell0")) trace.ell0 = j.at("ell0").get<std::int64_t>();
    if (j.contains("certificate")) trace.certificate = certificate_from_json(j.at("certificate"));
    trace.witness_degree = j.at("witness_degree").get<std::int64_t>();
    trace.j = j.at("j").get<std::int64_t>();
    trace.count_at_witness = j.at("count_at_witness").get<std::int64_t>();
    if (j.contains("count_at_n") && !j.at("count_at_n").is_null()) trace.count_at_n = j.at("count_at_n").get<std::int64_t>();
    trace.witness_iterates = j.at("witness_iterates").get<std::vector<std::int64_t>>();
    trace.base_iterates = j.at("base_iterates").get<std::vector<std::int64_t>>();
    trace.enumeration_bound = j.at("enumeration_bound").get<std::int64_t>();
    trace.holds_without_trivial_differential = j.at("holds_without_trivial_differential").get<bool>();
    trace.conclusion = j.at("conclusion").get<std::string>();
    return trace;
  });
}

Json to_json(const Inconclusive& inconclusive) {
  Json out = to_json(inconclusive.search);
  out["ell0"] = inconclusive.ell0;
  out["divisor"] = inconclusive.divisor;
  return out;
}

Json to_json(const TraceCheck& check) {
  Json out = {{"passed", check.passed}};
  if (!check.passed) out["failure"] = check.failure;
  return out;
}

Json to_json(const ProfileCheckReport& report) {
  return {{"unpopulated", int_list(report.unpopulated)},
          {"mismatched", int_list(report.mismatched)},
          {"skipped_unknown", int_list(report.skipped_unknown)},
          {"counts", to_json(report.counts)}};
}

}  // namespace reeb::io
