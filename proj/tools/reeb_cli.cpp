// Command-line front end: one subcommand per operation, JSON in and out.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reeb/acceptance.hpp"
#include "reeb/connect_sum.hpp"
#include "reeb/error.hpp"
#include "reeb/index_jump.hpp"
#include "reeb/json_io.hpp"
#include "reeb/profiles.hpp"
#include "reeb/toric.hpp"
#include "reeb/two_orbit.hpp"

namespace {

using reeb::io::Json;

enum class Status { ok, error, inconclusive };

struct CommandResult {
  Status status = Status::ok;
  Json payload = Json::object();
  std::vector<Json> diagnostics;
};

int exit_code(Status status) {
  switch (status) {
    case Status::ok: return 0;
    case Status::inconclusive: return 2;
    case Status::error: break;
  }
  return 1;
}

const char* status_name(Status status) {
  switch (status) {
    case Status::ok: return "ok";
    case Status::inconclusive: return "inconclusive";
    case Status::error: break;
  }
  return "error";
}

Json diagnostic(std::string_view level, std::string_view code, const std::string& message) {
  return {{"level", std::string(level)}, {"code", std::string(code)}, {"message", message}};
}

void print_table(const Json& payload, std::ostream& out) {
  if (payload.is_object() && payload.contains("ranks") && payload.at("ranks").is_object()) {
    if (payload.contains("window")) out << "window " << payload.at("window").get<std::string>() << "\n";
    out << "degree\trank\n";
    for (const auto& [degree, rank] : payload.at("ranks").items()) out << degree << "\t" << rank.dump() << "\n";
    if (payload.contains("unknown")) out << "unknown\t" << payload.at("unknown").dump() << "\n";
    for (const auto& [key, value] : payload.items()) {
      if (key != "ranks" && key != "unknown" && key != "window") out << key << "\t" << value.dump() << "\n";
    }
    return;
  }
  if (payload.is_object()) {
    for (const auto& [key, value] : payload.items()) {
      if (value.is_array() && !value.empty() && value.front().is_object()) {
        out << key << "\n";
        for (const auto& item : value) out << "\t" << item.dump() << "\n";
        continue;
      }
      out << key << "\t" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    return;
  }
  if (payload.is_array()) {
    for (const auto& item : payload) out << item.dump() << "\n";
    return;
  }
  out << payload.dump() << "\n";
}

reeb::Window window_of(const std::string& text) { return reeb::parse_window(text); }

reeb::ClassFilter classes_of(const std::string& text) {
  if (text == "contractible") return reeb::ClassFilter::contractible_only;
  if (text == "all") return reeb::ClassFilter::all;
  reeb::fail(reeb::ErrorCode::InvalidArgument, "classes must be 'contractible' or 'all'");
}

Json list_of(const auto& items) {
  Json out = Json::array();
  for (const auto& item : items) out.push_back(reeb::io::to_json(item));
  return out;
}

struct Options {
  std::string models, certificate, facets, betti, betti_b, components, filling, profile, trace;
  std::string w1, w2, cert1, cert2, disk;
  std::string window = "0:50", q_window = "-20:20", k_range = "1:10";
  std::string classes = "all", direction = "plus", hyp_direction = "positive", rho = "+";
  std::int64_t k = 0, n = 1, p = 1, d = 2, h = 1, max = 40, cb = 1, K = 2, L = 100;
  std::int64_t divisor = 2, ell0 = 1, bound = 1'000'000, kmax = 40, check_j = 0;
  bool positive_part = false;
};

using Handler = std::function<CommandResult(const Options&)>;

CommandResult run_cz_index(const Options& o) {
  const auto models = reeb::io::models_from_json(reeb::io::read_file(o.models));
  const reeb::Window ks = window_of(o.k_range);
  if (ks.lo < 1 || ks.empty()) reeb::fail(reeb::ErrorCode::InvalidArgument, "--k range must be positive");
  Json rows = Json::array();
  for (std::size_t i = 0; i < models.size(); ++i) {
    for (std::int64_t k = ks.lo; k <= ks.hi; ++k) {
      const auto r = reeb::iterate_record(models[i], k);
      rows.push_back({{"model", i}, {"k", r.k}, {"index", r.index}, {"good", r.good}, {"contractible", r.contractible}});
    }
  }
  return {Status::ok, {{"iterates", rows}}, {}};
}

CommandResult run_mean_index(const Options& o) {
  Json rows = Json::array();
  for (const auto& m : reeb::io::models_from_json(reeb::io::read_file(o.models))) {
    const auto qp = reeb::quasi_period(m);
    rows.push_back({{"mean_index", reeb::to_string(m.mean_index())}, {"period", qp.period}, {"jump", qp.jump}});
  }
  return {Status::ok, {{"models", rows}}, {}};
}

CommandResult run_profile(const Options& o) {
  const auto models = reeb::io::models_from_json(reeb::io::read_file(o.models));
  return {Status::ok, reeb::io::to_json(reeb::good_count_profile(models, window_of(o.window), classes_of(o.classes))), {}};
}

CommandResult run_index_jump(const Options& o) {
  const auto models = reeb::io::models_from_json(reeb::io::read_file(o.models));
  const auto search = reeb::find_certificate(models, o.divisor, o.ell0, o.bound, reeb::parse_jump_direction(o.direction));
  if (const auto* cert = std::get_if<reeb::IndexJumpCertificate>(&search)) return {Status::ok, reeb::io::to_json(*cert), {}};
  const auto& exhausted = std::get<reeb::SearchExhausted>(search);
  return {Status::inconclusive, reeb::io::to_json(exhausted),
          {diagnostic("info", "SearchExhausted", "no certificate up to k = " + std::to_string(exhausted.bound))}};
}

CommandResult run_verify_jump(const Options& o) {
  const auto models = reeb::io::models_from_json(reeb::io::read_file(o.models));
  const auto cert = reeb::io::certificate_from_json(reeb::io::read_file(o.certificate));
  return {Status::ok, reeb::io::to_json(reeb::verify_certificate(models, cert)), {}};
}

CommandResult run_toric_decompose(const Options& o) {
  Json rows = Json::array();
  for (const auto& f : reeb::io::facets_from_json(reeb::io::read_file(o.facets))) {
    auto decomp = reeb::decompose_reeb(f.facet);
    if (!f.signs.empty()) {
      // Attaching signs validates them and fills s.
      reeb::orbit_model_from_facet(decomp, f.signs, f.facet.dimension());
      decomp.signs = f.signs;
      decomp.s = std::count(f.signs.begin(), f.signs.end(), reeb::Perturbation::minus);
    }
    rows.push_back(reeb::io::to_json(decomp));
  }
  return {Status::ok, {{"decompositions", rows}}, {}};
}

CommandResult run_toric_ranks(const Options& o) {
  const auto facets = reeb::io::facets_from_json(reeb::io::read_file(o.facets));
  const reeb::Window window = window_of(o.window);
  const auto profile = reeb::toric_rank_profile(facets, o.p, window);
  Json payload = reeb::io::to_json(profile);
  try {
    payload["theorem82"] =
        reeb::io::to_json(reeb::theorem82_check(profile.ranks, facets.front().facet.dimension(), profile.K, window));
  } catch (const reeb::Error& e) {
    if (e.code() != reeb::ErrorCode::EmptyWindow) throw;
    payload["theorem82"] = {{"skipped", e.what()}};
  }
  return {Status::ok, payload, {}};
}

CommandResult run_prop81(const Options& o) {
  Json rows = Json::array();
  for (const auto& f : reeb::io::facets_from_json(reeb::io::read_file(o.facets))) {
    const auto decomp = reeb::decompose_reeb(f.facet);
    rows.push_back(reeb::io::to_json(reeb::prop81_check(decomp, f.signs, f.facet.dimension(), o.L)));
  }
  return {Status::ok, {{"reports", rows}}, {}};
}

CommandResult run_loop_poincare(const Options& o) {
  return {Status::ok, reeb::io::to_json(reeb::poincare_truncated(o.d, o.h, o.max)), {}};
}

CommandResult run_prequant(const Options& o) {
  const auto betti = reeb::io::betti_from_json(reeb::io::read_file(o.betti));
  const auto rho = reeb::parse_rho_sign(o.rho);
  Json payload = reeb::io::to_json(reeb::prequant_ranks(betti, o.cb, o.n, rho, window_of(o.window)));
  if (o.check_j > 0) payload["prop91"] = reeb::io::to_json(reeb::prop91_check(betti, o.cb, o.n, rho, o.check_j));
  return {Status::ok, payload, {}};
}

CommandResult run_displaceable(const Options& o) {
  const auto betti = reeb::io::betti_from_json(reeb::io::read_file(o.betti));
  return {Status::ok, reeb::io::to_json(reeb::displaceable_ranks(betti, o.n, window_of(o.window))), {}};
}

CommandResult run_brieskorn(const Options& o) {
  return {Status::ok, reeb::io::to_json(reeb::brieskorn_profile(o.p, o.n, window_of(o.window))), {}};
}

CommandResult run_e1_page(const Options& o) {
  const auto components = reeb::io::components_from_json(reeb::io::read_file(o.components));
  const reeb::BettiTable filling =
      o.filling.empty() ? reeb::BettiTable{} : reeb::io::betti_from_json(reeb::io::read_file(o.filling));
  return {Status::ok,
          reeb::io::to_json(reeb::e1_page(components, filling, o.n, o.positive_part, window_of(o.q_window))), {}};
}

CommandResult run_morse_deduce(const Options& o) {
  return {Status::ok, reeb::io::to_json(reeb::morse_deduce(reeb::io::betti_from_json(reeb::io::read_file(o.betti)))), {}};
}

CommandResult run_morse_verify(const Options& o) {
  const auto m = reeb::io::betti_from_json(reeb::io::read_file(o.betti));
  const auto b = reeb::io::betti_from_json(reeb::io::read_file(o.betti_b));
  return {Status::ok, reeb::io::to_json(reeb::morse_verify(m, b, o.kmax)), {}};
}

CommandResult run_ball_ranks(const Options& o) {
  return {Status::ok, reeb::io::to_json(reeb::ball_ranks(o.n, window_of(o.window))), {}};
}

CommandResult run_triangle(const Options& o) {
  const auto w = reeb::io::ranks_from_json(reeb::io::read_file(o.w1));
  const auto disk = reeb::io::ranks_from_json(reeb::io::read_file(o.disk));
  return {Status::ok, {{"bounds", reeb::io::to_json(reeb::triangle_bounds(w, disk))}}, {}};
}

CommandResult run_connect_sum(const Options& o) {
  const auto r1 = reeb::io::ranks_from_json(reeb::io::read_file(o.w1));
  const auto r2 = reeb::io::ranks_from_json(reeb::io::read_file(o.w2));
  const auto c1 = reeb::io::hypothesis_from_json(reeb::io::read_file(o.cert1));
  const auto c2 = reeb::io::hypothesis_from_json(reeb::io::read_file(o.cert2));
  return {Status::ok, reeb::io::to_json(reeb::theorem127_check(r1, c1, r2, c2, o.n, window_of(o.window))), {}};
}

CommandResult run_hypothesis(const Options& o) {
  const auto profile = reeb::io::ranks_from_json(reeb::io::read_file(o.profile));
  const auto outcome = reeb::hypothesis_certify(profile, o.n, o.K, reeb::parse_hypothesis_direction(o.hyp_direction),
                                                window_of(o.window));
  return {Status::ok, std::visit([](const auto& v) { return reeb::io::to_json(v); }, outcome), {}};
}

CommandResult run_refute(const Options& o) {
  const auto models = reeb::io::models_from_json(reeb::io::read_file(o.models));
  const auto outcome = reeb::refute_equal_index(models, o.n, o.K, reeb::parse_hypothesis_direction(o.hyp_direction), o.bound);
  if (const auto* trace = std::get_if<reeb::ContradictionTrace>(&outcome)) return {Status::ok, reeb::io::to_json(*trace), {}};
  const auto& inc = std::get<reeb::Inconclusive>(outcome);
  return {Status::inconclusive, reeb::io::to_json(inc),
          {diagnostic("info", "SearchExhausted", "no index jump certificate up to k = " + std::to_string(inc.search.bound))}};
}

CommandResult run_recheck(const Options& o) {
  const auto models = reeb::io::models_from_json(reeb::io::read_file(o.models));
  const auto trace = reeb::io::trace_from_json(reeb::io::read_file(o.trace));
  return {Status::ok, reeb::io::to_json(reeb::recheck_trace(models, trace)), {}};
}

CommandResult run_check_profile(const Options& o) {
  const auto models = reeb::io::models_from_json(reeb::io::read_file(o.models));
  const auto profile = reeb::io::ranks_from_json(reeb::io::read_file(o.profile));
  return {Status::ok, reeb::io::to_json(reeb::check_against_profile(models, profile, classes_of(o.classes))), {}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank and index calculators for Reeb orbit models"};
  app.require_subcommand(1);
  std::string format = "json";
  std::uint64_t seed = 20240611ULL;
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", seed, "seed for randomized selftest inputs");

  Options o;
  std::map<CLI::App*, Handler> handlers;
  auto sub = [&](const char* name, const char* help, Handler handler) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    handlers[s] = std::move(handler);
    return s;
  };
  auto existing = [](CLI::App* s, const char* flag, std::string& target, const char* help, bool required = true) {
    auto* opt = s->add_option(flag, target, help)->check(CLI::ExistingFile);
    if (required) opt->required();
  };

  auto* s = sub("cz-index", "indices of iterates", run_cz_index);
  existing(s, "--models", o.models, "orbit models JSON");
  s->add_option("--k", o.k_range, "iterate range lo:hi");

  s = sub("mean-index", "mean index and quasi-period", run_mean_index);
  existing(s, "--models", o.models, "orbit models JSON");

  s = sub("profile", "good-iterate counts per degree", run_profile);
  existing(s, "--models", o.models, "orbit models JSON");
  s->add_option("--window", o.window, "degree window lo:hi");
  s->add_option("--classes", o.classes, "contractible or all");

  s = sub("index-jump", "search a common index jump certificate", run_index_jump);
  existing(s, "--models", o.models, "orbit models JSON");
  s->add_option("--divisor", o.divisor, "divisor N of d and k");
  s->add_option("--ell0", o.ell0, "identity range");
  s->add_option("--bound", o.bound, "largest k scanned");
  s->add_option("--direction", o.direction, "plus or minus");

  s = sub("verify-jump", "verify an index jump certificate", run_verify_jump);
  existing(s, "--models", o.models, "orbit models JSON");
  existing(s, "--cert", o.certificate, "certificate JSON");

  s = sub("toric-decompose", "decompose the Reeb vector per facet", run_toric_decompose);
  existing(s, "--facets", o.facets, "facets JSON");

  s = sub("toric-ranks", "rank profile of toric facet orbits", run_toric_ranks);
  existing(s, "--facets", o.facets, "facets JSON");
  s->add_option("--p", o.p, "order of the fundamental group");
  s->add_option("--window", o.window, "degree window lo:hi");

  s = sub("prop81", "iteration identities for facet orbits", run_prop81);
  existing(s, "--facets", o.facets, "facets JSON");
  s->add_option("--L", o.L, "range of k1 and k2");

  s = sub("loop-poincare", "free loop space series of a truncated polynomial algebra", run_loop_poincare);
  s->add_option("--d", o.d, "generator degree")->required();
  s->set_help_flag("--help", "Print this help message and exit");
  s->add_option("--h", o.h, "truncation height")->required();
  s->add_option("--max", o.max, "largest degree");

  s = sub("prequant-ranks", "ranks for a prequantization bundle", run_prequant);
  existing(s, "--betti", o.betti, "base Betti JSON");
  s->add_option("--cb", o.cb, "minimal Chern number")->required();
  s->add_option("--n", o.n, "half dimension");
  s->add_option("--rho", o.rho, "+ or -");
  s->add_option("--window", o.window, "degree window lo:hi");
  s->add_option("--check-j", o.check_j, "also check the strict inequality chain for j <= J");

  s = sub("displaceable-ranks", "ranks for a displaceable filling", run_displaceable);
  existing(s, "--betti", o.betti, "relative Betti JSON");
  s->add_option("--n", o.n, "half dimension");
  s->add_option("--window", o.window, "degree window lo:hi");

  s = sub("brieskorn", "partial Brieskorn profile", run_brieskorn);
  s->add_option("--p", o.p, "exponent, 1 mod 8")->required();
  s->add_option("--n", o.n, "even half dimension")->required();
  s->add_option("--window", o.window, "degree window lo:hi");

  s = sub("e1-page", "first page of the action spectral sequence", run_e1_page);
  existing(s, "--components", o.components, "Morse-Bott components JSON");
  existing(s, "--filling", o.filling, "relative Betti JSON of the filling", false);
  s->add_option("--n", o.n, "half dimension");
  s->add_flag("--positive", o.positive_part, "positive part only");
  s->add_option("--q-window", o.q_window, "q range lo:hi");

  s = sub("morse-deduce", "Betti numbers from lacunary Morse numbers", run_morse_deduce);
  existing(s, "--m", o.betti, "Morse numbers JSON");

  s = sub("morse-verify", "check the Morse inequalities", run_morse_verify);
  existing(s, "--m", o.betti, "Morse numbers JSON");
  existing(s, "--b", o.betti_b, "Betti numbers JSON");
  s->add_option("--kmax", o.kmax, "largest degree checked");

  s = sub("ball-ranks", "ranks of the ball", run_ball_ranks);
  s->add_option("--n", o.n, "half dimension");
  s->add_option("--window", o.window, "degree window lo:hi");

  s = sub("triangle-bounds", "rank bounds from the handle exact triangle", run_triangle);
  existing(s, "--w", o.w1, "ranks of W");
  existing(s, "--disk", o.disk, "ranks of the disk term");

  s = sub("connect-sum", "check the connected-sum inequality chain", run_connect_sum);
  existing(s, "--w1", o.w1, "ranks of W1");
  existing(s, "--cert1", o.cert1, "hypothesis certificate of W1");
  existing(s, "--w2", o.w2, "ranks of W2");
  existing(s, "--cert2", o.cert2, "hypothesis certificate of W2");
  s->add_option("--n", o.n, "half dimension");
  s->add_option("--window", o.window, "degree window lo:hi");

  s = sub("hypothesis", "certify rank(n + jK) > rank(n)", run_hypothesis);
  existing(s, "--profile", o.profile, "ranks JSON");
  s->add_option("--n", o.n, "half dimension");
  s->add_option("--K", o.K, "period K");
  s->add_option("--direction", o.hyp_direction, "positive or negative");
  s->add_option("--window", o.window, "degree window lo:hi");

  s = sub("refute", "refute an equal-index family against the hypothesis", run_refute);
  existing(s, "--models", o.models, "orbit models JSON");
  s->add_option("--n", o.n, "half dimension");
  s->add_option("--K", o.K, "period K");
  s->add_option("--direction", o.hyp_direction, "positive or negative");
  s->add_option("--bound", o.bound, "largest k scanned");

  s = sub("recheck-trace", "independently replay a contradiction trace", run_recheck);
  existing(s, "--models", o.models, "orbit models JSON");
  existing(s, "--trace", o.trace, "trace JSON");

  s = sub("check-profile", "compare model generator counts with a profile", run_check_profile);
  existing(s, "--models", o.models, "orbit models JSON");
  existing(s, "--profile", o.profile, "ranks JSON");
  s->add_option("--classes", o.classes, "contractible or all");

  s = sub("selftest", "run the acceptance suite", [&](const Options&) {
    CommandResult result;
    Json lines = Json::array();
    for (const auto& r : reeb::run_acceptance(seed)) {
      lines.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
      if (!r.passed) {
        result.status = Status::error;
        result.diagnostics.push_back(diagnostic("error", "CriterionFailed", reeb::format_line(r)));
      }
    }
    result.payload = {{"seed", seed}, {"criteria", lines}};
    return result;
  });

  if (argc > 1 && argv[1][0] != '-') {
    bool known = false;
    for (const auto* candidate : app.get_subcommands({})) known = known || candidate->get_name() == argv[1];
    if (!known) {
      std::cerr << "unknown subcommand '" << argv[1] << "'\n" << app.help();
      return 1;
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 1;
  }

  CommandResult result;
  for (const auto& [command, handler] : handlers) {
    if (!command->parsed()) continue;
    try {
      result = handler(o);
    } catch (const reeb::Error& e) {
      result = {Status::error, Json::object(), {diagnostic("error", reeb::to_string(e.code()), e.what())}};
    } catch (const std::exception& e) {
      result = {Status::error, Json::object(), {diagnostic("error", "InternalError", e.what())}};
    }
  }

  if (result.status != Status::error || !result.payload.empty()) {
    if (format == "table") {
      print_table(result.payload, std::cout);
    } else {
      std::cout << result.payload.dump() << "\n";
    }
  }
  for (const auto& d : result.diagnostics) {
    Json line = d;
    line["status"] = status_name(result.status);
    std::cerr << line.dump() << "\n";
  }
  return exit_code(result.status);
}
