#pragma once

// JSON encodings for every externally visible object.  Rational-valued
// fields serialize as decimal-free strings ("3", "-3/2"); counts, ranks and
// coefficients are plain integers.  Output uses insertion-ordered objects so
// byte-identical reserialization holds.

#include <string>

#include "json.hpp"
#include "twc/packet.hpp"

namespace twc {

using json = nlohmann::ordered_json;

inline json to_json(const Rat& r) { return r.str(); }

inline Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw input_error("expected a rational (integer or \"num/den\" string)");
}

inline json to_json(const WeilIrrep& r) {
  json out;
  if (auto* w = std::get_if<WBlock>(&r)) {
    out["W"] = {{"s", to_json(w->s)}, {"eps", w->eps}};
  } else if (auto* v = std::get_if<VBlock>(&r)) {
    out["V"] = {{"s1", to_json(v->s1)}, {"s2", to_json(v->s2)}};
  } else {
    auto& c = std::get<ChiBlock>(r);
    out["chi"] = {{"s1", to_json(c.s1)}, {"s2", to_json(c.s2)}};
  }
  return out;
}

inline json to_json(const ArthurParam& psi) {
  json arr = json::array();
  for (const auto& b : psi.blocks) {
    json blk = to_json(b.rep);
    blk["a"] = b.a;
    arr.push_back(std::move(blk));
  }
  return arr;
}

inline json to_json(const DiscreteSeries& d) {
  json out;
  if (auto* g = std::get_if<GammaDS>(&d)) {
    out["gamma"] = {{"s", to_json(g->s)}, {"eps", g->eps}};
  } else if (auto* dl = std::get_if<DeltaDS>(&d)) {
    out["delta"] = {{"s1", to_json(dl->s1)}, {"s2", to_json(dl->s2)}};
  } else {
    auto& e = std::get<EtaDS>(d);
    out["eta"] = {{"s1", to_json(e.s1)}, {"s2", to_json(e.s2)}};
  }
  return out;
}

inline json to_json(const TailAtom& t) {
  return json{{"family", std::string(1, static_cast<char>(t.family))},
              {"rank", t.rank},
              {"eps", t.eps}};
}

inline json to_json(const FormalCharacter& f) {
  json arr = json::array();
  for (const auto& [sym, coeff] : f.terms()) {
    json rec;
    rec["coeff"] = coeff;
    json parts = json::array();
    for (const auto& p : sym.standard.parts) parts.push_back(to_json(p));
    rec["constituents"] = std::move(parts);
    rec["tail"] = sym.tail ? to_json(*sym.tail) : json(nullptr);
    arr.push_back(std::move(rec));
  }
  return arr;
}

inline json clan_record(const Clan& c) {
  return json{{"clan", c.str()},
              {"length", clan_length(c)},
              {"involution", c.eta().str()}};
}

inline json witness_record(const ThetaStepWitness& w) {
  json rec;
  rec["w"] = w.w.str();
  rec["case"] = w.which_case;
  json inner;
  inner["w_prime"] = w.w_prime.str();
  inner["s"] = w.s ? json(w.s->str()) : json(nullptr);
  rec["witnesses"] = std::move(inner);
  return rec;
}

inline std::string family_name(Family f) { return std::string(1, static_cast<char>(f)); }

inline Family family_from_name(const std::string& s) {
  if (s.size() == 1) switch (s[0]) {
      case 'A': return Family::A;
      case 'B': return Family::B;
      case 'C': return Family::C;
      case 'D': return Family::D;
      case 'U': return Family::U;
    }
  throw input_error("unknown group case: " + s);
}

// {"case":"A","rank":2,"blocks":[{"p":"3","n":2}],"tail":{"n":0,"eps":0}}
// {"case":"U","N":4,"blocks":[{"p":"2","N":2}]}
inline std::pair<GroupDatum, AJParameter> parameter_from_json(const json& j) {
  if (!j.is_object()) throw input_error("parameter file must be a JSON object");
  if (!j.contains("case")) throw input_error("parameter needs a \"case\"");
  Family fam = family_from_name(j.at("case").get<std::string>());
  GroupDatum g;
  if (fam == Family::U) {
    if (!j.contains("N")) throw input_error("unitary parameter needs \"N\"");
    g = GroupDatum::unitary(j.at("N").get<int>());
  } else {
    if (!j.contains("rank")) throw input_error("classical parameter needs \"rank\"");
    g = GroupDatum::classical(fam, j.at("rank").get<int>());
  }
  AJParameter psi;
  psi.family = fam;
  if (j.contains("blocks")) {
    for (const auto& blk : j.at("blocks")) {
      SpehBlockSpec b;
      Rat p = rat_from_json(blk.at("p"));
      if (!p.is_integer()) throw input_error("block p must be an integer");
      b.p = p.num();
      b.n = blk.contains("n") ? blk.at("n").get<int>() : blk.at("N").get<int>();
      psi.blocks.push_back(b);
    }
  }
  if (j.contains("tail") && !j.at("tail").is_null()) {
    const json& t = j.at("tail");
    TailSpec tail;
    tail.rank = t.at("n").get<int>();
    if (t.contains("eps") && !t.at("eps").is_null()) {
      if (t.at("eps").is_array())
        for (const auto& e : t.at("eps")) tail.eps.push_back(e.get<int>());
      else
        tail.eps.push_back(t.at("eps").get<int>());
    }
    psi.tail = std::move(tail);
  }
  return {g, psi};
}

inline json parameter_to_json(const GroupDatum& g, const AJParameter& psi) {
  json out;
  out["case"] = family_name(g.family);
  if (g.family == Family::U)
    out["N"] = g.N;
  else
    out["rank"] = g.rank;
  json blocks = json::array();
  for (const auto& b : psi.blocks) {
    json blk;
    blk["p"] = std::to_string(b.p);
    blk[g.family == Family::U ? "N" : "n"] = b.n;
    blocks.push_back(std::move(blk));
  }
  out["blocks"] = std::move(blocks);
  if (psi.tail) {
    json t;
    t["n"] = psi.tail->rank;
    if (psi.tail->eps.size() == 1)
      t["eps"] = psi.tail->eps[0];
    else if (!psi.tail->eps.empty())
      t["eps"] = psi.tail->eps;
    out["tail"] = std::move(t);
  }
  return out;
}

inline json to_json(const VerifyReport& rep) {
  json out;
  out["status"] = rep.pass() ? "match" : "mismatch";
  out["lhs"] = to_json(rep.lhs);
  out["rhs"] = to_json(rep.rhs);
  out["diff"] = to_json(rep.diff);
  out["q_star"] = rep.q_star;
  json wt = json::array();
  for (const auto& row : rep.witness_table) {
    wt.push_back(json{{"s", row.s.str()},
                      {"theta_length", row.theta_len},
                      {"vogan_length", row.vogan_len},
                      {"q_star", row.q_star},
                      {"lhs_exponent", row.lhs_exponent},
                      {"rhs_exponent", row.rhs_exponent},
                      {"ok", row.ok}});
  }
  out["witness_table"] = std::move(wt);
  out["symbols_match"] = rep.match;
  out["infinitesimal_character_homogeneous"] = rep.infchar_ok;
  out["symbols_self_dual"] = rep.selfdual_ok;
  out["sign_congruence"] = rep.signs_ok;
  return out;
}

}  // namespace twc
