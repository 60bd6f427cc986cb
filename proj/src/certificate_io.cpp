#include "shuffle/certificate_io.hpp"

#include <algorithm>

#include "shuffle/errors.hpp"
#include "shuffle/expr.hpp"

namespace shuffle {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

void check_header(const json& j, const char* kind) {
  const json& schema = field(j, "schema");
  if (!schema.is_number_integer() || schema.get<int>() != kCertificateSchema) {
    throw FormatError("unsupported schema version");
  }
  const json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    throw FormatError(std::string("expected a certificate of kind \"") + kind + "\"");
  }
}

GeneratorWord word_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("a word must be an array of integers");
  std::vector<int> exps;
  for (const auto& d : j) {
    if (!d.is_number_integer()) throw FormatError("a word must be an array of integers");
    exps.push_back(d.get<int>());
  }
  return GeneratorWord(std::move(exps));
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_string()) throw FormatError("polynomials are stored as canonical strings");
  return eval_polynomial(j.get<std::string>());
}

}  // namespace

json to_json(const ModuleCertificate& c) {
  json combination = json::array();
  for (const auto& t : c.combination) {
    combination.push_back({{"cofactor", to_string(t.cofactor)}, {"word", t.word.exponents()}});
  }
  return {{"schema", kCertificateSchema},
          {"kind", "module"},
          {"target", c.target.exponents()},
          {"combination", std::move(combination)}};
}

json to_json(const IdealCertificate& c) {
  json j{{"schema", kCertificateSchema}, {"kind", "ideal"}};
  if (const auto* w = std::get_if<GeneratorWord>(&c.target)) {
    j["target"] = w->exponents();
    j["arity"] = w->arity();
  } else {
    const auto& p = std::get<ShuffleElement>(c.target);
    j["target"] = to_string(p.poly());
    j["arity"] = p.arity();
  }
  j["A"] = to_string(c.a);
  j["B"] = to_string(c.b);
  return j;
}

ModuleCertificate module_certificate_from_json(const json& j) {
  check_header(j, "module");
  ModuleCertificate c{word_from_json(field(j, "target")), {}};
  const json& comb = field(j, "combination");
  if (!comb.is_array()) throw FormatError("\"combination\" must be an array");
  for (const auto& t : comb) {
    c.combination.push_back({poly_from_json(field(t, "cofactor")), word_from_json(field(t, "word"))});
  }
  std::sort(c.combination.begin(), c.combination.end(),
            [](const CertificateTerm& a, const CertificateTerm& b) { return a.word < b.word; });
  return c;
}

IdealCertificate ideal_certificate_from_json(const json& j) {
  check_header(j, "ideal");
  IdealCertificate c;
  const json& target = field(j, "target");
  if (target.is_array()) {
    c.target = word_from_json(target);
  } else {
    const json& arity = field(j, "arity");
    if (!arity.is_number_integer()) throw FormatError("\"arity\" must be an integer");
    c.target = ShuffleElement::make(arity.get<int>(), poly_from_json(target));
  }
  c.a = poly_from_json(field(j, "A"));
  c.b = poly_from_json(field(j, "B"));
  return c;
}

std::string to_text(const ModuleCertificate& c) {
  std::string s = "sh" + to_string(c.target) + " =";
  if (c.combination.empty()) return s + " 0";
  bool first = true;
  for (const auto& t : c.combination) {
    s += first ? " " : " + ";
    first = false;
    s += "(" + to_string(t.cofactor) + ") sh" + to_string(t.word);
  }
  return s;
}

std::string to_text(const IdealCertificate& c) {
  std::string target;
  if (const auto* w = std::get_if<GeneratorWord>(&c.target)) {
    target = "sh" + to_string(*w);
  } else {
    target = to_string(std::get<ShuffleElement>(c.target).poly());
  }
  return "target " + target + "\nA = " + to_string(c.a) + "\nB = " + to_string(c.b);
}

}  // namespace shuffle
