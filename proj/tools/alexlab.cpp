#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "alexlab/abelian.hpp"
#include "alexlab/chen.hpp"
#include "alexlab/errors.hpp"
#include "alexlab/extensions.hpp"
#include "alexlab/jumploci.hpp"
#include "alexlab/lie.hpp"
#include "alexlab/parallel.hpp"
#include "alexlab/report.hpp"

using namespace alexlab;

namespace {

struct Options {
  std::string input;
  std::string file;
  std::string format = "json";
  int threads = 1;
  int depth = 1;
  int max_n = 6;
  std::uint64_t p = 0;
  std::string flavor;
  std::string point;
  std::string primes;
  std::string method = "auto";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string input_text(const Options& o) {
  require(o.input.empty() != o.file.empty(), "give exactly one input: a DSL string, builtin:NAME or -f FILE");
  return o.file.empty() ? o.input : read_file(o.file);
}

GroupPresentation load_group(const Options& o) {
  std::string text = input_text(o);
  const std::string prefix = "builtin:";
  if (text.rfind(prefix, 0) == 0) return builtin_group(text.substr(prefix.size()));
  return parse_presentation(text);
}

std::string strip_builtin(std::string s) {
  const std::string prefix = "builtin:";
  if (s.rfind(prefix, 0) == 0) s = s.substr(prefix.size());
  return s;
}

std::string replace_unicode_minus(std::string s) {
  const std::string minus = "\xE2\x88\x92";
  for (std::size_t at; (at = s.find(minus)) != std::string::npos;) s.replace(at, minus.size(), "-");
  return s;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\n");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

[[noreturn]] void bad_point(const std::string& what) { throw ParseError("point: " + what, 1, 1); }

std::int64_t to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) bad_point("bad integer '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    bad_point("bad integer '" + s + "'");
  }
}

// A value is a rational or [-]zeta(n)[^k]: returns sign, n, k with n = 0 for rationals.
struct PointValue {
  Rational q;
  int sign = 1;
  std::int64_t n = 0;
  std::int64_t k = 0;
};

PointValue parse_value(std::string s) {
  PointValue v;
  if (s.empty()) bad_point("empty value");
  std::string body = s;
  if (body[0] == '-' && body.find("zeta") != std::string::npos) {
    v.sign = -1;
    body = trim(body.substr(1));
  }
  if (body.rfind("zeta(", 0) == 0) {
    std::size_t close = body.find(')');
    if (close == std::string::npos) bad_point("unclosed zeta( in '" + s + "'");
    v.n = to_int(trim(body.substr(5, close - 5)));
    if (v.n < 1) bad_point("zeta order must be positive");
    std::string rest = trim(body.substr(close + 1));
    v.k = 1;
    if (!rest.empty()) {
      if (rest[0] != '^') bad_point("expected ^ after zeta(n) in '" + s + "'");
      v.k = to_int(trim(rest.substr(1)));
    }
    return v;
  }
  try {
    v.q = parse_rational(body);
  } catch (const std::exception&) {
    bad_point("bad value '" + s + "'");
  }
  return v;
}

std::vector<PointValue> parse_list(const std::string& s) {
  std::string t = trim(s);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') bad_point("expected [..] in '" + s + "'");
  std::vector<PointValue> out;
  std::string inner = trim(t.substr(1, t.size() - 2));
  if (inner.empty()) return out;
  for (const auto& item : split(inner, ',')) out.push_back(parse_value(item));
  return out;
}

// "free=[..];torsion=[..]". Torsion entries are values (1, -1, zeta(n)^k) and
// must lie in the cyclic group of the matching divisor.
CharacterPoint parse_point(const std::string& text, const AbelianizationData& ab, bool drop_torsion) {
  std::vector<PointValue> free, torsion;
  for (const auto& part : split(replace_unicode_minus(text), ';')) {
    if (part.empty()) continue;
    std::size_t eq = part.find('=');
    if (eq == std::string::npos) bad_point("expected key=[..] in '" + part + "'");
    std::string key = trim(part.substr(0, eq));
    if (key == "free")
      free = parse_list(part.substr(eq + 1));
    else if (key == "torsion")
      torsion = parse_list(part.substr(eq + 1));
    else
      bad_point("unknown key '" + key + "'");
  }
  const int r = ab.free_rank;
  const int s = static_cast<int>(ab.torsion_divisors.size());
  require(static_cast<int>(free.size()) == r,
          "point needs " + std::to_string(r) + " free coordinates, got " + std::to_string(free.size()));
  std::vector<std::int64_t> divisors;
  for (const auto& d : ab.torsion_divisors) divisors.push_back(to_int64(d));
  if (drop_torsion) {
    torsion.clear();
    divisors.clear();
  } else {
    require(static_cast<int>(torsion.size()) == s,
            "point needs " + std::to_string(s) + " torsion coordinates, got " + std::to_string(torsion.size()));
  }

  CharacterPoint chi;
  chi.conductor = minimal_conductor(divisors);
  for (const auto& v : free)
    if (v.n) chi.conductor = std::lcm(chi.conductor, static_cast<int>(v.n * (v.sign < 0 ? 2 : 1)));
  require(chi.conductor <= 100000, "conductor of the point exceeds 100000");
  CyclotomicField field(chi.conductor);
  for (const auto& v : free) {
    if (v.n == 0) {
      chi.free.push_back(field.from(v.q));
      continue;
    }
    std::int64_t e = v.k * (chi.conductor / v.n);
    if (v.sign < 0) e += chi.conductor / 2;
    chi.free.push_back(field.zeta_power(e));
  }
  for (std::size_t j = 0; j < torsion.size(); ++j) {
    const std::int64_t d = divisors[j];
    const PointValue& v = torsion[j];
    std::int64_t n = v.n, k = v.k;
    if (n == 0) {
      require(v.q == 1 || v.q == -1, "torsion values must be roots of unity: 1, -1 or zeta(n)^k");
      n = v.q == 1 ? 1 : 2;
      k = v.q == 1 ? 0 : 1;
    }
    if (v.sign < 0) {
      k = 2 * k + n;
      n *= 2;
    }
    // zeta_n^k is a d-th root of unity iff n | k*d; its exponent relative to zeta_d is k*d/n.
    require((k * d) % n == 0, "order incompatibility: torsion coordinate " + std::to_string(j + 1) +
                                  " has order " + std::to_string(d) + " but the value is not a " +
                                  std::to_string(d) + "-th root of unity");
    std::int64_t e = ((k * d / n) % d + d) % d;
    chi.torsion.push_back(e);
  }
  return chi;
}

std::vector<Rational> parse_vector(const std::string& text) {
  std::string t = trim(replace_unicode_minus(text));
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') bad_point("unclosed [");
    t = t.substr(1, t.size() - 2);
  }
  std::vector<Rational> out;
  for (const auto& item : split(t, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception&) {
      bad_point("bad rational '" + item + "'");
    }
  }
  return out;
}

std::vector<std::uint64_t> parse_primes(const std::string& text) {
  std::vector<std::uint64_t> out;
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) {
    std::int64_t v = to_int(item);
    require(v >= 2, "primes must be at least 2");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

JumpFlavor jump_flavor(const std::string& s, JumpFlavor fallback) {
  if (s.empty()) return fallback;
  if (s == "V" || s == "v") return JumpFlavor::V;
  if (s == "W" || s == "w") return JumpFlavor::W;
  if (s == "Y" || s == "y") return JumpFlavor::Y;
  throw PreconditionError("flavor must be V, W or Y");
}

Json run(const std::string& verb, const Options& o, std::string& canonical, bool& ok) {
  if (verb == "builtin") {
    std::string name = strip_builtin(input_text(o));
    GroupPresentation g = builtin_group(name);
    canonical = g.to_string();
    FormalityFlags f = builtin_formality(name);
    return Json{{"name", name},
                {"generators", g.num_generators()},
                {"relators", g.relators().size()},
                {"one_formal", f.one_formal},
                {"graded_formal", f.graded_formal}};
  }
  if (verb == "check-extension") {
    SplitExtensionData ext = builtin_extension(strip_builtin(input_text(o)));
    canonical = semidirect_presentation(ext).to_string();
    require(o.max_n >= 2 && o.max_n <= kMaxChenN, "--max-n must lie in 2.." + std::to_string(kMaxChenN));
    ExtensionReport r = verify_transfer(ext, o.max_n, parse_primes(o.primes));
    ok = r.consistent;
    Json out{{"kernel", ext.kernel.to_string()}, {"quotient", ext.quotient.to_string()}};
    Json body = to_json(r);
    for (auto& [k, v] : body.items()) out[k] = v;
    return out;
  }

  GroupPresentation g = load_group(o);
  canonical = g.to_string();

  if (verb == "abelianize") return to_json(abelianization(g));

  if (verb == "alexander") {
    const std::string flavor = o.flavor.empty() ? "ab" : o.flavor;
    if (flavor == "p") {
      require(o.p >= 2, "--p is required for the p flavor");
      FiniteModule bp = b_mod_p(g, o.p);
      return Json{{"flavor", "p"},
                  {"p", o.p},
                  {"fox_matrix", to_json(fox_matrix(g, FoxFlavor::mod_p(o.p)))},
                  {"b_p_dimension", bp.dimension},
                  {"augmentation_filtration", augmentation_filtration(bp)}};
    }
    require(flavor == "ab" || flavor == "abf", "alexander flavor must be ab, abf or p");
    FoxFlavor f = flavor == "ab" ? FoxFlavor::ab() : FoxFlavor::abf();
    Json out{{"flavor", flavor}, {"alexander_module", to_json(alexander_module(g, f))}};
    try {
      out["alexander_invariant"] = to_json(alexander_invariant(g));
    } catch (const PreconditionError& e) {
      out["alexander_invariant"] = nullptr;
      out["alexander_invariant_note"] = e.what();
    }
    return out;
  }

  if (verb == "chen") {
    ChenMethod m = ChenMethod::Auto;
    if (o.method == "koszul")
      m = ChenMethod::Koszul;
    else if (o.method == "crowell")
      m = ChenMethod::Crowell;
    else
      require(o.method == "auto", "--method must be auto, koszul or crowell");
    return Json{{"theta", chen_ranks(g, o.max_n, m).values}};
  }

  if (verb == "chen-p") {
    require(o.p >= 2, "--p is required");
    return Json{{"p", o.p}, {"theta", modp_chen_ranks(g, o.p, o.max_n).values}};
  }

  if (verb == "holonomy-chen") return Json{{"theta_bar", holonomy_chen_ranks(cup_data(g), o.max_n).values}};

  if (verb == "cv-ideal") {
    JumpFlavor f = jump_flavor(o.flavor, JumpFlavor::V);
    return Json{{"depth", o.depth}, {"flavor", to_string(f)}, {"ideal", to_json(jump_ideal(g, o.depth, f))}};
  }

  if (verb == "cv-member") {
    JumpFlavor f = jump_flavor(o.flavor, JumpFlavor::V);
    require(!o.point.empty(), "--point is required");
    CharacterPoint chi = parse_point(o.point, abelianization(g), f == JumpFlavor::W);
    Json out{{"depth", o.depth}, {"flavor", to_string(f)}, {"point", to_json(chi)}};
    out["member"] = cv_membership(g, chi, o.depth, f);
    if (f == JumpFlavor::V) out["twisted_betti"] = twisted_betti(g, chi);
    return out;
  }

  if (verb == "resonance") {
    CupData cd = cup_data(g);
    Json out{{"depth", o.depth}, {"cup", to_json(cd)}};
    if (!o.point.empty()) {
      std::vector<Rational> a = parse_vector(o.point);
      Json pt = Json::array();
      for (const auto& q : a) pt.push_back(to_json(q));
      out["point"] = pt;
      out["member"] = resonance_membership(cd, a, o.depth);
    } else {
      out["ideal"] = to_json(resonance_ideal(cd, o.depth));
    }
    return out;
  }

  if (verb == "finiteness") return Json{{"depth", o.depth}, {"finite", finiteness_test(g, o.depth)}};

  throw PreconditionError("unknown verb '" + verb + "'");
}

void emit(const Json& report, const std::string& format) {
  if (format == "table")
    std::cout << to_table(report);
  else
    std::cout << report.dump() << '\n';
}

int fail(int code, const std::string& kind, const std::string& msg, const std::string& verb, const std::string& format) {
  std::cerr << "alexlab: " << kind << ": " << msg << '\n';
  Json err{{"schema", kSchema}, {"version", version()}, {"verb", verb},
           {"error", Json{{"kind", kind}, {"message", msg}, {"exit_code", code}}}};
  emit(err, format);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander invariants, Chen ranks and jump loci of finitely presented groups"};
  app.require_subcommand(1);
  Options o;

  struct Verb {
    const char* name;
    const char* help;
  };
  const std::vector<Verb> verbs = {
      {"abelianize", "rank and torsion of G_ab"},
      {"alexander", "Alexander module and invariant (--flavor ab|abf|p)"},
      {"chen", "Chen ranks theta_1..theta_N"},
      {"chen-p", "mod-p Chen ranks"},
      {"cv-ideal", "defining ideal of a jump locus (--flavor V|W|Y)"},
      {"cv-member", "membership of a character in V_k or W_k"},
      {"resonance", "resonance ideal, or membership of --point"},
      {"holonomy-chen", "holonomy Chen ranks"},
      {"check-extension", "verify transfer of Chen ranks on a builtin extension"},
      {"builtin", "print a builtin presentation"},
      {"finiteness", "whether the k-th exterior power of B(G) (x) Q is finite dimensional"},
  };
  for (const auto& v : verbs) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("input", o.input, "presentation DSL, builtin:NAME, or a builtin extension spec");
    sub->add_option("-f,--file", o.file, "read the input from a file");
    sub->add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--threads", o.threads, "worker threads for minors and graded pieces")->check(CLI::Range(1, 256));
    sub->add_option("--depth,-k", o.depth, "depth k");
    sub->add_option("--max-n,-N", o.max_n, "largest n");
    sub->add_option("--p", o.p, "prime");
    sub->add_option("--flavor", o.flavor, "ab|abf|p for alexander, V|W|Y for cv-*");
    sub->add_option("--point", o.point, "character free=[..];torsion=[..], or a rational vector for resonance");
    sub->add_option("--primes", o.primes, "comma separated primes for check-extension");
    sub->add_option("--method", o.method, "auto, koszul or crowell");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(2, "parse", e.what(), "", o.format == "table" ? "table" : "json");
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    set_threads(o.threads);
    std::string canonical;
    bool ok = true;
    Json result = run(verb, o, canonical, ok);
    emit(envelope(verb, canonical, result), o.format);
    if (!ok) {
      std::cerr << "alexlab: internal: transfer verdicts disagree with computed ranks\n";
      return 4;
    }
    return 0;
  } catch (const ParseError& e) {
    return fail(2, "parse", e.what(), verb, o.format);
  } catch (const PreconditionError& e) {
    return fail(3, "precondition", e.what(), verb, o.format);
  } catch (const InternalError& e) {
    return fail(4, "internal", e.what(), verb, o.format);
  } catch (const std::exception& e) {
    return fail(4, "internal", e.what(), verb, o.format);
  }
}
