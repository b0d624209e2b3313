#include "cmkit/serialize.hpp"

#include <json.hpp>

#include "cmkit/errors.hpp"

namespace cmkit {

using ordered_json = nlohmann::ordered_json;

namespace {

mpz_class parse_mpz(const ordered_json& v, const std::string& what) {
  if (!v.is_string()) fail(Errc::BadInput, what + " must be a decimal string");
  try {
    return mpz_class(v.get<std::string>());
  } catch (const std::invalid_argument&) {
    fail(Errc::BadInput, what + " is not a decimal integer");
  }
}

std::string mpq_str(const mpq_class& v) { return v.get_str(); }

ordered_json poly_json(const IntPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  if (p.is_zero()) arr.push_back("0");
  return arr;
}

ordered_json weil_json(const WeilNumber& w) {
  ordered_json j;
  j["x"] = mpq_str(w.value.x);
  j["y"] = mpq_str(w.value.y);
  return j;
}

ordered_json witnesses_json(const std::vector<RankWitness>& ws) {
  ordered_json arr = ordered_json::array();
  for (const auto& w : ws) {
    ordered_json j;
    j["summand"] = w.summand;
    j["eigenvalue"] = w.eigenvalue;
    j["multiplicity"] = std::to_string(w.multiplicity);
    j["pairing"] = std::to_string(w.pairing);
    arr.push_back(j);
  }
  return arr;
}

const char* kind_name(SummandKind k) {
  switch (k) {
    case SummandKind::Lefschetz: return "lefschetz";
    case SummandKind::UnitF: return "unit_f";
    case SummandKind::Tensor: return "tensor";
  }
  return "?";
}

}  // namespace

CurveDescriptor parse_curve_spec(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& ex) {
    fail(Errc::BadInput, std::string("curve spec is not valid JSON: ") + ex.what());
  }
  if (!doc.is_object()) fail(Errc::BadInput, "curve spec must be a JSON object");

  if (doc.contains("model") || doc.contains("p")) {
    for (const auto& [key, value] : doc.items()) {
      (void)value;
      if (key != "p" && key != "e" && key != "model" && key != "A" && key != "B")
        fail(Errc::BadInput, "unknown key '" + key + "' in curve spec");
    }
    for (const char* key : {"p", "e", "model", "A", "B"})
      if (!doc.contains(key))
        fail(Errc::BadInput, std::string("curve spec is missing '") + key + "'");
    if (doc["model"] != "short-weierstrass")
      fail(Errc::BadInput, "model must be \"short-weierstrass\"");
    mpz_class p = parse_mpz(doc["p"], "p");
    mpz_class e = parse_mpz(doc["e"], "e");
    if (!p.fits_uint_p() || !e.fits_uint_p()) fail(Errc::TooLarge, "p or e out of range");
    mpz_class a = parse_mpz(doc["A"], "A");
    mpz_class b = parse_mpz(doc["B"], "B");
    return descriptor_of(validate_weierstrass(static_cast<std::uint32_t>(p.get_ui()),
                                              static_cast<std::uint32_t>(e.get_ui()), a, b));
  }

  if (doc.contains("q") || doc.contains("zeta_numerator")) {
    for (const auto& [key, value] : doc.items()) {
      (void)value;
      if (key != "q" && key != "zeta_numerator")
        fail(Errc::BadInput, "unknown key '" + key + "' in curve spec");
    }
    for (const char* key : {"q", "zeta_numerator"})
      if (!doc.contains(key))
        fail(Errc::BadInput, std::string("curve spec is missing '") + key + "'");
    mpz_class q = parse_mpz(doc["q"], "q");
    if (!doc["zeta_numerator"].is_array())
      fail(Errc::BadInput, "zeta_numerator must be an array");
    std::vector<mpz_class> coeffs;
    for (const auto& c : doc["zeta_numerator"]) coeffs.push_back(parse_mpz(c, "coefficient"));
    return validate_abstract(q, IntPoly(std::move(coeffs)));
  }

  fail(Errc::BadInput, "curve spec must be a Weierstrass or abstract descriptor");
}

std::string classify_report(const EllipticCurveData& e) {
  ordered_json j;
  j["ordinary"] = e.ordinary;
  j["trace"] = mpz_class(e.trace).get_str();
  if (e.cm_disc < 0) {
    j["cm_m"] = e.cm_m.get_str();
    j["alpha"] = weil_json(*e.alpha);
  } else {
    j["cm_m"] = nullptr;
    j["alpha"] = nullptr;
  }
  j["q"] = mpz_class(static_cast<unsigned long>(e.field->q())).get_str();
  j["p"] = std::to_string(e.field->p());
  j["e"] = std::to_string(e.field->e());
  j["cm_disc"] = e.cm_disc.get_str();
  j["conductor"] = (e.cm_disc < 0) ? ordered_json(std::to_string(e.conductor))
                                   : ordered_json(nullptr);
  j["curve_id"] = e.curve_id;
  return j.dump();
}

std::string zeta_report(const ZetaFunction& z, unsigned power, const CurveDescriptor* base) {
  ordered_json j;
  j["q"] = z.q.get_str();
  j["power"] = std::to_string(power);
  j["dim"] = std::to_string(z.dim);
  ordered_json parts = ordered_json::array();
  for (const auto& p : z.parts) parts.push_back(poly_json(p));
  j["parts"] = parts;
  j["base_curve_id"] = base ? ordered_json(base->curve_id) : ordered_json(nullptr);
  return j.dump();
}

std::string decompose_report(unsigned g, Level level) {
  SummandMultiset ms = cm_tensor_decompose(g, level);
  auto rec = cm_recurrence_table(g);
  ordered_json j;
  j["g"] = std::to_string(g);
  j["level"] = (level == Level::F) ? "F" : "Q";
  ordered_json entries = ordered_json::array();
  for (const auto& [s, mult] : ms.entries) {
    ordered_json ej;
    ej["kind"] = kind_name(s.kind);
    ej["i"] = std::to_string(s.i);
    ej["j"] = std::to_string(s.j);
    ej["conj"] = s.conj;
    ej["base_h1"] = s.base_h1;
    ej["mult"] = std::to_string(mult);
    entries.push_back(ej);
  }
  j["entries"] = entries;
  ordered_json recj = ordered_json::array();
  for (const auto& [ij, a] : rec) {
    ordered_json rj;
    rj["i"] = std::to_string(ij.first);
    rj["j"] = std::to_string(ij.second);
    rj["a"] = std::to_string(a);
    recj.push_back(rj);
  }
  j["recurrence"] = recj;
  // flag multiplicity views that disagree instead of silently choosing
  ordered_json notes = ordered_json::array();
  for (const auto& [ij, a] : rec) {
    if (ij.first == 0) continue;
    MotiveSummand key{SummandKind::Tensor, ij.first, ij.second, false, false};
    auto it = ms.entries.find(key);
    std::uint64_t mult = (it == ms.entries.end()) ? 0 : it->second;
    if (mult != a)
      notes.push_back("multiset multiplicity of (i=" + std::to_string(ij.first) +
                      ", j=" + std::to_string(ij.second) + ") is " + std::to_string(mult) +
                      "; the printed recurrence gives " + std::to_string(a) +
                      " (its base row counts plain F-level summands)");
  }
  j["notes"] = notes;
  return j.dump();
}

SummandMultiset parse_summand_multiset(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& ex) {
    fail(Errc::BadInput, std::string("not valid JSON: ") + ex.what());
  }
  SummandMultiset ms;
  std::string level = doc.at("level").get<std::string>();
  if (level != "F" && level != "Q") fail(Errc::BadInput, "level must be F or Q");
  ms.level = (level == "F") ? Level::F : Level::Q;
  for (const auto& ej : doc.at("entries")) {
    MotiveSummand s;
    std::string kind = ej.at("kind").get<std::string>();
    if (kind == "lefschetz") s.kind = SummandKind::Lefschetz;
    else if (kind == "unit_f") s.kind = SummandKind::UnitF;
    else if (kind == "tensor") s.kind = SummandKind::Tensor;
    else fail(Errc::BadInput, "unknown summand kind '" + kind + "'");
    s.i = static_cast<unsigned>(parse_mpz(ej.at("i"), "i").get_ui());
    s.j = static_cast<unsigned>(parse_mpz(ej.at("j"), "j").get_ui());
    s.conj = ej.at("conj").get<bool>();
    s.base_h1 = ej.at("base_h1").get<bool>();
    ms.add(s, parse_mpz(ej.at("mult"), "mult").get_ui());
  }
  return ms;
}

std::string tate_report(unsigned g, unsigned i, std::uint64_t dim,
                        const std::vector<RankWitness>& witnesses,
                        const CurveDescriptor* base) {
  ordered_json j;
  j["power"] = std::to_string(g);
  j["codim"] = std::to_string(i);
  j["tate_dim"] = std::to_string(dim);
  // the prediction *is* the Tate count; keeping both keys makes the
  // conjectural reading explicit
  j["predicted_chow_dim"] = std::to_string(dim);
  j["witnesses"] = witnesses_json(witnesses);
  j["base_curve_id"] = base ? ordered_json(base->curve_id) : ordered_json(nullptr);
  return j.dump();
}

std::string picard_report(unsigned g, std::uint64_t picard, const CurveDescriptor* base) {
  ordered_json j;
  j["power"] = std::to_string(g);
  j["picard"] = std::to_string(picard);
  j["base_curve_id"] = base ? ordered_json(base->curve_id) : ordered_json(nullptr);
  return j.dump();
}

std::string bb_report(unsigned g, unsigned i, std::uint64_t rank,
                      const std::vector<RankWitness>& witnesses) {
  ordered_json j;
  j["power"] = std::to_string(g);
  j["codim"] = std::to_string(i);
  j["bb_rank"] = std::to_string(rank);
  j["prediction_only"] = (g >= 2 && i >= 2);
  j["witnesses"] = witnesses_json(witnesses);
  return j.dump();
}

std::string lcheck_report(unsigned order, const EulerCheckResult& r) {
  ordered_json j;
  j["order"] = std::to_string(order);
  j["pass"] = r.pass;
  if (!r.pass) {
    j["first_mismatch"] = std::to_string(r.first_mismatch);
    j["euler"] = mpq_str(r.euler_side);
    j["cohomological"] = mpq_str(r.cohomological_side);
  }
  return j.dump();
}

std::string weil_verify_report(const EllipticCurveData& e, unsigned max_r, unsigned max_s,
                               const WeilRelationReport& rep) {
  ordered_json j;
  j["pass"] = rep.pass;
  j["max_r"] = std::to_string(max_r);
  j["max_s"] = std::to_string(max_s);
  j["cases_checked"] = std::to_string(rep.cases_checked);
  j["alpha"] = e.alpha ? weil_json(*e.alpha) : ordered_json(nullptr);
  ordered_json ws = ordered_json::array();
  for (const auto& w : rep.witnesses) ws.push_back(w);
  j["witnesses"] = ws;
  return j.dump();
}

std::string match_report(const MatchResult& r) {
  ordered_json j;
  j["match"] = r.permutation.has_value();
  if (r.permutation) {
    ordered_json perm = ordered_json::array();
    for (std::size_t v : *r.permutation) perm.push_back(std::to_string(v));
    j["permutation"] = perm;
  } else {
    j["unmatched"] = r.unmatched;
  }
  return j.dump();
}

std::string error_report(const std::string& code, const std::string& detail) {
  ordered_json j;
  j["error"] = code;
  j["detail"] = detail;
  return j.dump();
}

MatchInput parse_match_input(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const std::exception& ex) {
    fail(Errc::BadInput, std::string("not valid JSON: ") + ex.what());
  }
  MatchInput in;
  in.q = parse_mpz(doc.at("q"), "q");
  // p = least prime factor of q
  for (mpz_class f = 2; f * f <= in.q; ++f)
    if (in.q % f == 0) {
      in.p = f;
      break;
    }
  if (in.p == 0) in.p = in.q;
  auto parse_list = [&](const char* key) {
    std::vector<DecompEntry> out;
    for (const auto& ej : doc.at(key)) {
      DecompEntry e;
      e.m = parse_mpz(ej.at("m"), "m");
      e.r = static_cast<unsigned>(parse_mpz(ej.at("r"), "r").get_ui());
      e.s = static_cast<long>(parse_mpz(ej.at("s"), "s").get_si());
      out.push_back(e);
    }
    return out;
  };
  in.left = parse_list("left");
  in.right = parse_list("right");
  return in;
}

}  // namespace cmkit
