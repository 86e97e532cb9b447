// Command-line front end: clan and symmetric-group enumeration, parameter
// inspection, and the dual-route twisted character identity as batch
// commands with canonical JSON output.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "twc/json_io.hpp"
#include "twc/suite.hpp"

namespace {

using twc::json;

json read_param_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw twc::input_error("cannot open " + path);
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw twc::input_error(std::string("bad JSON: ") + e.what());
  }
}

void emit(const json& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"twisted character combinatorics for Arthur packets of classical and unitary groups"};
  app.require_subcommand(0, 1);
  bool pretty = false, seed_suite = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.add_flag("--seed-suite", seed_suite, "run the desk-scale verification grid");

  int exit_code = 0;

  // ---- clans ----
  auto* clans = app.add_subcommand("clans", "clan combinatorics for U(p,q)");
  clans->require_subcommand(1);

  int ep = 0, eq = 0;
  auto* cenum = clans->add_subcommand("enum", "enumerate the (p,q) clan family");
  cenum->add_option("p", ep, "signature p")->required();
  cenum->add_option("q", eq, "signature q")->required();
  cenum->callback([&] {
    json arr = json::array();
    for (const auto& c : twc::enumerate_clans(ep, eq)) arr.push_back(twc::clan_record(c));
    emit(arr, pretty);
  });

  std::string clan_text;
  auto* clen = clans->add_subcommand("length", "orbit length of one clan");
  clen->add_option("clan", clan_text, "clan in symbolic notation")->required();
  clen->callback([&] { emit(json(twc::clan_length(twc::Clan::parse(clan_text))), pretty); });

  int hp = 0, hq = 0;
  auto* chasse = clans->add_subcommand("hasse", "graded covering edges of the clan order");
  chasse->add_option("p", hp)->required();
  chasse->add_option("q", hq)->required();
  chasse->callback([&] {
    json arr = json::array();
    for (const auto& [upper, lower] : twc::hasse_edges(hp, hq))
      arr.push_back(json{{"upper", twc::clan_record(upper)}, {"lower", twc::clan_record(lower)}});
    emit(arr, pretty);
  });

  int pp = 0, pq = 0;
  auto* cpack = clans->add_subcommand("packets", "clans grouped by underlying involution");
  cpack->add_option("p", pp)->required();
  cpack->add_option("q", pq)->required();
  cpack->callback([&] {
    json arr = json::array();
    for (const auto& group : twc::clan_packets(pp, pq)) {
      json g = json::array();
      for (const auto& c : group) g.push_back(twc::clan_record(c));
      arr.push_back(std::move(g));
    }
    emit(arr, pretty);
  });

  // ---- sym ----
  auto* sym = app.add_subcommand("sym", "symmetric-group combinatorics");
  sym->require_subcommand(1);

  int in_n = 0;
  auto* sinv = sym->add_subcommand("involutions", "enumerate involutions of S_n");
  sinv->add_option("n", in_n)->required();
  sinv->callback([&] {
    json arr = json::array();
    for (const auto& w : twc::involutions(in_n))
      arr.push_back(json{{"w", w.str()},
                         {"length", w.length()},
                         {"theta_length", twc::theta_length(w)}});
    emit(arr, pretty);
  });

  std::string perm_text;
  auto* stheta = sym->add_subcommand("theta-length", "theta length of an involution");
  stheta->add_option("w", perm_text, "one-line notation, e.g. \"[2,1]\"")->required();
  stheta->callback([&] { emit(json(twc::theta_length(twc::Perm::parse(perm_text))), pretty); });

  int wit_n = 0;
  auto* swit = sym->add_subcommand("verify-lemma65", "descent witnesses for all involutions");
  swit->add_option("n", wit_n)->required();
  swit->callback([&] {
    json arr = json::array();
    for (const auto& w : twc::theta_descent_witnesses(wit_n))
      arr.push_back(twc::witness_record(w));
    emit(arr, pretty);
  });

  // ---- parameter commands ----
  std::string expand_file, lhs_file, verify_file, info_file;

  auto* expand_cmd = app.add_subcommand("expand", "transfer-route expansion of a parameter");
  expand_cmd->add_option("file", expand_file, "parameter JSON file, or - for stdin")->required();
  expand_cmd->callback([&] {
    auto [g, psi] = twc::parameter_from_json(read_param_json(expand_file));
    emit(twc::to_json(twc::composite_expansion(g, psi)), pretty);
  });

  auto* lhs_cmd = app.add_subcommand("lhs", "direct-route expansion of a parameter");
  lhs_cmd->add_option("file", lhs_file, "parameter JSON file, or - for stdin")->required();
  lhs_cmd->callback([&] {
    auto [g, psi] = twc::parameter_from_json(read_param_json(lhs_file));
    emit(twc::to_json(twc::lhs_expansion(g, psi)), pretty);
  });

  auto* verify_cmd = app.add_subcommand("verify", "dual-route identity check");
  verify_cmd->add_option("file", verify_file, "parameter JSON file, or - for stdin")->required();
  verify_cmd->callback([&] {
    auto [g, psi] = twc::parameter_from_json(read_param_json(verify_file));
    twc::VerifyReport rep = twc::verify_main_identity(g, psi);
    emit(twc::to_json(rep), pretty);
    if (!rep.pass()) exit_code = 1;
  });

  auto* info_cmd = app.add_subcommand("info", "parameter summary");
  info_cmd->add_option("file", info_file, "parameter JSON file, or - for stdin")->required();
  info_cmd->callback([&] {
    auto [g, psi] = twc::parameter_from_json(read_param_json(info_file));
    auto errors = twc::validate_aj(g, psi);
    json out;
    out["case"] = twc::family_name(g.family);
    out["N"] = g.N;
    out["valid"] = errors.empty();
    out["errors"] = errors;
    if (errors.empty()) {
      twc::AJParameter norm = twc::normalized_aj(g, psi);
      out["parameter"] = twc::parameter_to_json(g, norm);
      twc::ArthurParam composed = twc::std_compose(g, norm);
      out["gl_parameter"] = twc::to_json(composed);
      twc::LanglandsParam phi = twc::phi_of_psi(composed);
      if (g.family == twc::Family::U) {
        json infc = json::array();
        for (const auto& [a, b] : twc::infinitesimal_character_complex(phi))
          infc.push_back(json::array({twc::to_json(a), twc::to_json(b)}));
        out["infinitesimal_character"] = std::move(infc);
        auto [integral, regular] =
            twc::is_integral_regular(twc::infinitesimal_character_complex(phi));
        out["integral"] = integral;
        out["regular"] = regular;
      } else {
        json infc = json::array();
        for (const auto& v : twc::infinitesimal_character(phi)) infc.push_back(twc::to_json(v));
        out["infinitesimal_character"] = std::move(infc);
        auto [integral, regular] = twc::is_integral_regular(twc::infinitesimal_character(phi));
        out["integral"] = integral;
        out["regular"] = regular;
      }
      twc::LeviData levi = twc::levi_quasisplit(g, norm);
      out["q_star"] = levi.q_star;
      json factors = json::array();
      for (const auto& f : levi.factors)
        factors.push_back(json{{"kind", f.kind}, {"b", f.b}, {"c", f.c}, {"q", f.q}});
      out["levi_factors"] = std::move(factors);
    }
    emit(out, pretty);
    if (!errors.empty()) exit_code = 2;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const twc::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const twc::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }

  if (seed_suite) {
    auto results = twc::run_acceptance();
    std::cout << twc::format_results(results);
    for (const auto& r : results)
      if (!r.pass) exit_code = 1;
  } else if (app.get_subcommands().empty()) {
    std::cerr << app.help();
    return 2;
  }
  return exit_code;
}
