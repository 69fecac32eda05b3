#include "extbar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "extbar/bar.hpp"
#include "extbar/extract.hpp"
#include "extbar/verify.hpp"
#include "extbar/words.hpp"

namespace extbar {

namespace {

using Json = nlohmann::ordered_json;
constexpr int kSchemaVersion = 1;

enum class Format { Text, Json, Csv };

struct Output {
  bool json = false;
  bool csv = false;
  Format format() const { return json ? Format::Json : (csv ? Format::Csv : Format::Text); }
};

void add_format_flags(CLI::App* cmd, Output& o) {
  auto* j = cmd->add_flag("--json", o.json, "Emit JSON");
  auto* c = cmd->add_flag("--csv", o.csv, "Emit CSV");
  j->excludes(c);
}

Json bigint_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

std::string group_text(const AbelianGroup& g, const Ring& ring) {
  if (ring.is_field()) return "dim " + std::to_string(g.free_rank);
  return g.to_string();
}

std::string torsion_csv(const AbelianGroup& g) {
  std::string s;
  for (std::size_t i = 0; i < g.torsion.size(); ++i) s += (i ? ";" : "") + g.torsion[i].get_str();
  return s;
}

Json group_json(const AbelianGroup& g) {
  Json t = Json::array();
  for (const auto& d : g.torsion) t.push_back(bigint_json(d));
  return Json{{"free_rank", g.free_rank}, {"torsion", t}};
}

long checked_prime(long p) {
  if (!is_prime(p)) throw CLI::ValidationError("--p", std::to_string(p) + " is not prime");
  return p;
}

// ---------------------------------------------------------------------------

struct WordsArgs {
  long p = 2;
  int height = 3;
  long max_degree = 20;
  bool pairs = false;
  std::string kind = "cartan";
  Output out;
};

int cmd_words(const WordsArgs& a, std::ostream& os) {
  checked_prime(a.p);
  const WordKind kind = a.kind == "pairing" ? WordKind::Pairing : WordKind::Cartan;
  Json rows = Json::array();
  std::ostringstream text, csv;
  if (a.pairs) {
    csv << "gamma_word,phi_word,degree,twisting,weight\n";
    for (const auto& pr : enumerate_p_pairs(a.p, a.height, a.max_degree)) {
      const std::string g = to_string(pr.gamma_word, a.p), f = to_string(pr.phi_word, a.p);
      rows.push_back({{"gamma_word", g}, {"phi_word", f}, {"degree", pr.degree}, {"twisting", pr.twisting},
                      {"weight", pr.weight}});
      text << "(" << g << ", " << f << ")  degree " << pr.degree << "  twisting " << pr.twisting << "  weight "
           << pr.weight << "\n";
      csv << g << "," << f << "," << pr.degree << "," << pr.twisting << "," << pr.weight << "\n";
    }
  } else {
    csv << "word,degree,twisting,weight\n";
    for (const auto& w : enumerate_words(a.p, a.height, a.max_degree, kind)) {
      const std::string s = to_string(w, a.p);
      const long d = word_degree(w, a.p);
      const int t = word_twisting(w);
      rows.push_back({{"word", s}, {"degree", d}, {"twisting", t}, {"weight", ipow(a.p, t)}});
      text << s << "  degree " << d << "  twisting " << t << "  weight " << ipow(a.p, t) << "\n";
      csv << s << "," << d << "," << t << "," << ipow(a.p, t) << "\n";
    }
  }
  switch (a.out.format()) {
    case Format::Json:
      os << Json{{"schema_version", kSchemaVersion}, {"command", "words"}, {"p", a.p}, {"height", a.height},
                 {"max_degree", a.max_degree}, {"pairs", a.pairs}, {a.pairs ? "pairs" : "words", rows}}
                .dump(2)
         << "\n";
      break;
    case Format::Csv: os << csv.str(); break;
    case Format::Text: os << text.str(); break;
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct BarArgs {
  std::string ring = "Z";
  int n = 1;
  int weight = 4;
  int m = 1;
  Output out;
};

int cmd_bar_homology(const BarArgs& a, std::ostream& os) {
  const Ring ring = Ring::parse(a.ring);
  AlgebraPtr g = make_free_algebra(Flavor::Gamma, {{2, 1, a.m}}, ring);
  const std::map<int, AbelianGroup> slice = homology(*iterate_bar(g, a.n), a.weight).weight_slice(a.weight);
  switch (a.out.format()) {
    case Format::Json: {
      Json groups = Json::array();
      for (const auto& [deg, grp] : slice) {
        Json e{{"degree", deg}};
        e.update(group_json(grp));
        groups.push_back(e);
      }
      os << Json{{"schema_version", kSchemaVersion}, {"ring", ring.name()}, {"n", a.n}, {"weight", a.weight},
                 {"m", a.m}, {"groups", groups}}
                .dump(2)
         << "\n";
      break;
    }
    case Format::Csv:
      os << "ring,n,weight,m,degree,free_rank,torsion\n";
      for (const auto& [deg, grp] : slice)
        os << ring.name() << "," << a.n << "," << a.weight << "," << a.m << "," << deg << "," << grp.free_rank << ","
           << torsion_csv(grp) << "\n";
      break;
    case Format::Text:
      os << "H(B^" << a.n << " Gamma(" << ring.name() << "^" << a.m << "[2])) in weight " << a.weight << "\n";
      if (slice.empty()) os << "  zero\n";
      for (const auto& [deg, grp] : slice) os << "  degree " << deg << ": " << group_text(grp, ring) << "\n";
      break;
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct ExtArgs {
  std::string source = "S";
  std::string target = "Lambda";
  std::string ring = "Z";
  int s = 0;
  int t = 0;
  int max_weight = 4;
  std::optional<int> max_codegree;
  int m = 1;
  std::string method = "bar";
  bool generators = false;
  Output out;
};

int cmd_ext_table(const ExtArgs& a, std::ostream& os) {
  const Ring ring = Ring::parse(a.ring);
  const Functor x = parse_functor(a.source), y = parse_functor(a.target);
  const ExtMethod method = a.method == "predict" ? ExtMethod::Predict : ExtMethod::Bar;
  const ExtTable table = ext_table(x, y, ring, a.s, a.t, a.max_weight, a.m, method);
  std::vector<std::pair<Bidegree, AbelianGroup>> rows;
  for (const auto& [b, g] : table.groups.groups)
    if (!a.max_codegree || b.degree <= *a.max_codegree) rows.emplace_back(b, g);
  std::string gens;
  if (a.generators) {
    if (!ring.is_field()) throw UnsupportedRequest("--generators needs a prime field");
    gens = describe(ext_twisted_predict(x, y, ring.characteristic(), a.s, a.t, a.max_weight, a.m));
  }
  switch (a.out.format()) {
    case Format::Json: {
      Json groups = Json::array();
      for (const auto& [b, g] : rows) {
        Json e{{"weight", b.weight}, {"degree", b.degree}};
        e.update(group_json(g));
        groups.push_back(e);
      }
      Json doc{{"schema_version", kSchemaVersion}, {"command", "ext-table"}, {"source", to_string(x)},
               {"target", to_string(y)},           {"ring", ring.name()},     {"s", a.s},
               {"t", a.t},                          {"m", a.m},                {"max_weight", a.max_weight},
               {"method", a.method},                {"groups", groups}};
      if (a.generators) doc["generators"] = gens;
      os << doc.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << "source,target,ring,s,t,m,weight,degree,free_rank,torsion\n";
      for (const auto& [b, g] : rows)
        os << to_string(x) << "," << to_string(y) << "," << ring.name() << "," << a.s << "," << a.t << "," << a.m
           << "," << b.weight << "," << b.degree << "," << g.free_rank << "," << torsion_csv(g) << "\n";
      break;
    case Format::Text: {
      os << "Ext(" << to_string(x) << "^(" << a.t + a.s << "), " << to_string(y) << "^(" << a.s << ")) over "
         << ring.name() << " on rank " << a.m << ", weights <= " << a.max_weight << "\n";
      if (a.generators) os << "generators: " << gens << "\n";
      int current = -1;
      for (const auto& [b, g] : rows) {
        if (b.weight != current) os << "weight " << (current = b.weight) << "\n";
        os << "  Ext^" << b.degree << ": " << group_text(g, ring) << "\n";
      }
      break;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "tables";
  VerifyOptions options;
  Output out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& os) {
  checked_prime(a.options.p);
  const SuiteResult r = run_suite(a.suite, a.options);
  if (a.out.format() == Format::Json) {
    os << Json{{"schema_version", kSchemaVersion}, {"command", "verify"}, {"suite", r.suite},
               {"passed", r.passed},               {"checks", r.checks},  {"first_failure", r.first_failure}}
              .dump(2)
       << "\n";
  } else {
    os << (r.passed ? "PASS " : "FAIL ") << r.suite << " (" << r.checks << " checks)";
    if (!r.passed) os << ": " << r.first_failure;
    os << "\n";
  }
  return r.passed ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ext-algebras between exponential functors via bar constructions", "extbar"};
  app.require_subcommand(1);

  WordsArgs wa;
  auto* words = app.add_subcommand("words", "List admissible words or p-pairs");
  words->add_option("--p", wa.p, "Prime")->required();
  words->add_option("--height", wa.height, "Height")->check(CLI::Range(1, 64));
  words->add_option("--max-degree", wa.max_degree, "Degree bound")->check(CLI::Range(0L, 1L << 40));
  words->add_flag("--pairs", wa.pairs, "List p-pairs instead of words");
  words->add_option("--kind", wa.kind, "Admissibility rule")->check(CLI::IsMember({"cartan", "pairing"}));
  add_format_flags(words, wa.out);

  BarArgs ba;
  auto* barh = app.add_subcommand("bar-homology", "Homology of the iterated bar construction of Gamma[2]");
  barh->add_option("--ring", ba.ring, "Z or Fp:p");
  barh->add_option("--n", ba.n, "Number of bar iterations")->check(CLI::Range(0, 8));
  barh->add_option("--weight", ba.weight, "Weight")->check(CLI::Range(0, 64));
  barh->add_option("--m", ba.m, "Rank")->check(CLI::Range(1, 16));
  add_format_flags(barh, ba.out);

  ExtArgs ea;
  auto* ext = app.add_subcommand("ext-table", "Ext table between S, Lambda, Gamma and their twists");
  const auto functors = CLI::IsMember({"S", "Lambda", "Gamma"});
  ext->add_option("--source", ea.source, "Source functor")->check(functors);
  ext->add_option("--target", ea.target, "Target functor")->check(functors);
  ext->add_option("--ring", ea.ring, "Z or Fp:p");
  ext->add_option("--s", ea.s, "Twist of the target")->check(CLI::Range(0, 16));
  ext->add_option("--t", ea.t, "Extra twist of the source")->check(CLI::Range(0, 16));
  ext->add_option("--max-weight", ea.max_weight, "Weight cap")->check(CLI::Range(0, 4096));
  ext->add_option("--max-codegree", ea.max_codegree, "Largest cohomological degree shown");
  ext->add_option("--m", ea.m, "Rank")->check(CLI::Range(1, 16));
  ext->add_option("--method", ea.method, "bar or predict")->check(CLI::IsMember({"bar", "predict"}));
  ext->add_flag("--generators", ea.generators, "Also print the generator description (fields only)");
  add_format_flags(ext, ea.out);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a cross-check suite");
  verify->add_option("--suite", va.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  verify->add_option("--p", va.options.p, "Prime");
  verify->add_option("--n", va.options.n, "Bar iterations")->check(CLI::Range(0, 4));
  verify->add_option("--m", va.options.m, "Rank")->check(CLI::Range(1, 4));
  verify->add_option("--max-weight", va.options.max_weight, "Weight cap")->check(CLI::Range(0, 64));
  verify->add_option("--max-s", va.options.max_s, "Largest s")->check(CLI::Range(0, 6));
  verify->add_option("--max-t", va.options.max_t, "Largest t")->check(CLI::Range(0, 6));
  verify->add_flag("--json", va.out.json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*words) return cmd_words(wa, out);
    if (*barh) return cmd_bar_homology(ba, out);
    if (*ext) return cmd_ext_table(ea, out);
    if (*verify) return cmd_verify(va, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalAssertion& e) {
    err << "internal assertion: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace extbar
