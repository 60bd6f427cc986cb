#include "shuffle/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "shuffle/certificate_io.hpp"
#include "shuffle/conditions.hpp"
#include "shuffle/errors.hpp"
#include "shuffle/expr.hpp"
#include "shuffle/generators.hpp"

namespace shuffle {

namespace {

using nlohmann::json;

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::string expr;
  std::string word;
  std::string relation;
  int n = 0;
  bool verify = false;
  std::vector<int> letters;
  std::string file;
  int samples = 20;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int expand() {
    const ShuffleElement e = eval(o_.expr);
    if (o_.json) {
      emit({{"schema", kCertificateSchema}, {"arity", e.arity()}, {"poly", to_string(e.poly())}});
    } else {
      out_ << to_string(e.poly()) << '\n';
    }
    return kExitTrue;
  }

  int wheel() { return report("wheel", wheel_check(eval(o_.expr))); }

  int ideal_wheel() { return report("ideal-wheel", ideal_wheel_check(eval(o_.expr))); }

  int corollary() {
    const CorollaryResult r = corollary_check(eval(o_.expr));
    if (o_.json) {
      json j{{"schema", kCertificateSchema}, {"check", "corollary"}, {"result", r.divisible}};
      if (r.divisible) j["cofactor"] = to_string(r.cofactor);
      emit(j);
    } else {
      out_ << (r.divisible ? "true" : "false") << '\n';
      if (r.divisible) out_ << to_string(r.cofactor) << '\n';
    }
    return r.divisible ? kExitTrue : kExitFalse;
  }

  int lemma() {
    LemmaRelation which;
    if (o_.relation == "a") {
      which = LemmaRelation::ProductPower;
    } else if (o_.relation == "b") {
      which = LemmaRelation::PowerSum;
    } else {
      throw CLI::ValidationError("relation", "must be 'a' or 'b'");
    }
    return report("lemma-" + o_.relation, verify_lemma(parse_word(o_.word), o_.n, which));
  }

  int reduce(int arity) {
    const GeneratorWord w = parse_word(o_.word);
    const ModuleCertificate c = arity == 2 ? reduce2(w) : reduce3(w);
    return emit_certificate(to_json(c), to_text(c), [&] { return verify_certificate(c); });
  }

  int ideal_cert() {
    const IdealCertificate c = ideal_certificate(parse_word(o_.word));
    return emit_certificate(to_json(c), to_text(c), [&] { return verify_ideal_certificate(c); });
  }

  int assoc() {
    const auto a = ShuffleElement::letter(o_.letters[0]);
    const auto b = ShuffleElement::letter(o_.letters[1]);
    const auto c = ShuffleElement::letter(o_.letters[2]);
    const bool ok = shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c));
    return report("assoc", ok);
  }

  int verify_file() {
    json j;
    if (o_.file == "-") {
      j = json::parse(std::cin);
    } else {
      std::ifstream in(o_.file);
      if (!in) throw FormatError("cannot open " + o_.file);
      j = json::parse(in);
    }
    const std::string kind = j.is_object() && j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
    bool ok = false;
    if (kind == "module") {
      ok = verify_certificate(module_certificate_from_json(j));
    } else if (kind == "ideal") {
      ok = verify_ideal_certificate(ideal_certificate_from_json(j));
    } else {
      throw FormatError("\"kind\" must be \"module\" or \"ideal\"");
    }
    return report("verify-" + kind, ok);
  }

  int props() {
    std::mt19937_64 rng(o_.seed);
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    WordExpander ex;
    int checks = 0;
    int failures = 0;
    auto record = [&](bool ok, const std::string& what) {
      ++checks;
      if (!ok) {
        ++failures;
        out_ << "FAIL " << what << '\n';
      }
    };
    for (int s = 0; s < o_.samples; ++s) {
      const int a = pick(-3, 3), b = pick(-3, 3), c = pick(-3, 3);
      const auto za = ShuffleElement::letter(a), zb = ShuffleElement::letter(b), zc = ShuffleElement::letter(c);
      record(shuffle(shuffle(za, zb), zc) == shuffle(za, shuffle(zb, zc)),
             "assoc " + to_string(GeneratorWord{a, b, c}));

      const GeneratorWord w{pick(0, 2), pick(0, 2), pick(0, 2)};
      record(wheel_check(ex.expand(w)), "wheel sh" + to_string(w));

      const GeneratorWord v{pick(-2, 2), pick(-2, 2)};
      const int n = pick(-2, 2);
      record(verify_lemma(v, n, LemmaRelation::ProductPower, &ex) && verify_lemma(v, n, LemmaRelation::PowerSum, &ex),
             "lemma sh" + to_string(v) + " n=" + std::to_string(n));
    }
    if (o_.json) {
      emit({{"schema", kCertificateSchema}, {"check", "props"}, {"seed", o_.seed}, {"checks", checks},
            {"failures", failures}});
    } else {
      out_ << "props: " << checks << " checks, " << failures << " failures (seed " << o_.seed << ")\n";
    }
    return failures == 0 ? kExitTrue : kExitFalse;
  }

 private:
  void emit(const json& j) { out_ << j.dump(2) << '\n'; }

  int report(const std::string& check, bool result) {
    if (o_.json) {
      emit({{"schema", kCertificateSchema}, {"check", check}, {"result", result}});
    } else {
      out_ << (result ? "true" : "false") << '\n';
    }
    return result ? kExitTrue : kExitFalse;
  }

  template <class Verify>
  int emit_certificate(json j, const std::string& text, Verify verify) {
    bool ok = true;
    if (o_.verify) {
      ok = verify();
      j["verified"] = ok;
    }
    if (o_.json) {
      emit(j);
    } else {
      out_ << text << '\n';
      if (o_.verify) out_ << "verified: " << (ok ? "true" : "false") << '\n';
    }
    return ok ? kExitTrue : kExitFalse;
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations in the integral shuffle algebra", "shufalg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--seed", o.seed, "Seed for randomized commands");

  auto* expand = app.add_subcommand("expand", "Expand an expression to its canonical polynomial");
  auto* wheel = app.add_subcommand("wheel", "Check the wheel conditions");
  auto* ideal_wheel = app.add_subcommand("ideal-wheel", "Check the ideal form of the wheel conditions");
  auto* corollary = app.add_subcommand("corollary", "Test divisibility after z2 = -z1");
  for (auto* sub : {expand, wheel, ideal_wheel, corollary}) {
    sub->add_option("EXPR", o.expr, "Expression, e.g. \"sh[0,0]\"")->required();
  }

  auto* lemma = app.add_subcommand("lemma", "Verify a module relation on a word by full expansion");
  lemma->add_option("RELATION", o.relation, "a: (z1...zk)^n, b: z1^n + ... + zk^n")->required();
  lemma->add_option("WORD", o.word, "Generator word, e.g. [0,1]")->required();
  lemma->add_option("N", o.n, "Exponent")->required();

  auto* red2 = app.add_subcommand("reduce2", "Express an arity-2 word over sh[0,0], sh[1,0]");
  auto* red3 = app.add_subcommand("reduce3", "Express an arity-3 word over the six V_3 generators");
  auto* icert = app.add_subcommand("ideal-cert", "Cofactors placing a word in the ideal (g1, g2)");
  for (auto* sub : {red2, red3, icert}) {
    sub->add_option("WORD", o.word, "Generator word, e.g. [3,1,0]")->required();
    sub->add_flag("--verify", o.verify, "Check the certificate by expansion");
  }

  auto* assoc = app.add_subcommand("assoc", "Check (z^a * z^b) * z^c = z^a * (z^b * z^c)");
  assoc->add_option("LETTERS", o.letters, "Exponents a b c")->required()->expected(3);

  auto* verify = app.add_subcommand("verify", "Verify a JSON certificate ('-' reads stdin)");
  verify->add_option("FILE", o.file, "Certificate file")->required();

  auto* props = app.add_subcommand("props", "Randomized property checks driven by --seed");
  props->add_option("--samples", o.samples, "Number of samples per property");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitUsage;
  }

  Runner run(o, out);
  try {
    if (*expand) return run.expand();
    if (*wheel) return run.wheel();
    if (*ideal_wheel) return run.ideal_wheel();
    if (*corollary) return run.corollary();
    if (*lemma) return run.lemma();
    if (*red2) return run.reduce(2);
    if (*red3) return run.reduce(3);
    if (*icert) return run.ideal_cert();
    if (*assoc) return run.assoc();
    if (*verify) return run.verify_file();
    if (*props) return run.props();
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace shuffle
