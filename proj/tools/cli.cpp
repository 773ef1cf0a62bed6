#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "biord/braid.hpp"
#include "biord/certify.hpp"
#include "biord/complete.hpp"
#include "biord/magnus.hpp"
#include "biord/order.hpp"
#include "serialize.hpp"
#include "verify.hpp"

namespace biord::cli {

namespace {

struct Globals {
  int cap = kDefaultDegreeCap;
  std::uint64_t seed = 42;
  bool json = false;
  bool trust = false;
};

// Thrown for semantic misuse detected after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kMagicBraid = "s1^2 s2^-1";

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::BiOrderPreserving: return kExitOk;
    case Verdict::LeftOrderPreserving: return kExitLeft;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string cycle_text(const std::vector<int>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c[i]);
  }
  return s + ")";
}

void print_certificate(std::ostream& out, const Certificate& c) {
  out << "i0       " << c.i0 << '\n';
  if (c.reports.empty()) {
    out << "orbits   none besides {" << c.i0 << "}\n";
  } else {
    out << std::left << std::setw(14) << "orbit" << std::setw(14) << "h_values"
        << std::setw(6) << "h_O" << std::setw(6) << "gcd" << std::setw(6) << "bi"
        << "left\n";
    for (const auto& r : c.reports)
      out << std::setw(14) << cycle_text(r.orbit) << std::setw(14) << join(r.h_values)
          << std::setw(6) << r.h_sum << std::setw(6) << r.gcd << std::setw(6)
          << (r.passes_gcd ? "pass" : "fail")
          << (r.passes_nonvanishing ? "pass" : "fail") << '\n';
    out << std::right;
  }
  out << "verdict  " << to_string(c.verdict) << '\n';
}

void print_images(std::ostream& out, const Endomorphism& phi) {
  out << format_endomorphism(phi);
}

Json images_json(const Endomorphism& phi) {
  Json a = Json::array();
  for (const auto& w : phi.images) a.push_back(format_word(w));
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::Equal: return "=";
    case Relation::Greater: return ">";
    case Relation::Undecided: return "?";
  }
  return "?";
}

std::string index_tuple(const std::vector<KIndex>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_kindex(v[i]);
  }
  return s + ")";
}

int cmd_artin(const Globals& g, int n, const std::string& text, std::ostream& out) {
  const BraidWord beta = parse_braid(n, text);
  const Endomorphism phi = artin_action(beta);
  if (g.json) {
    out << Json{{"strands", n}, {"braid", format_braid(beta)}, {"images", images_json(phi)}}
               .dump(2)
        << '\n';
  } else {
    print_images(out, phi);
  }
  return kExitOk;
}

int cmd_certify(const Globals& g, int n, const std::optional<std::string>& braid,
                const std::optional<std::string>& endo, std::optional<int> i0,
                std::ostream& out, std::ostream& err) {
  if (braid.has_value() == endo.has_value())
    throw UsageError("give exactly one of a braid or --endo FILE");
  Endomorphism phi;
  std::string source;
  if (endo) {
    if (!g.trust)
      throw UsageError("endomorphism input requires --trust-automorphism");
    phi = parse_endomorphism(read_file(*endo), n);
    source = *endo;
  } else {
    const BraidWord beta = parse_braid(n, *braid);
    phi = artin_action(beta);
    source = format_braid(beta);
  }
  const ConjugacyForm form = extract_conjugacy_form(phi);
  Certificate cert;
  try {
    cert = i0 ? certify(form, *i0) : certify_all(form);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoFixedPoint) throw;
    if (g.json)
      out << Json{{"error", "NO_FIXED_POINT"}, {"message", e.what()}}.dump(2) << '\n';
    else
      out << "NO_FIXED_POINT: permutation " << format_permutation(form.sigma)
          << " has no fixed point\n";
    err << "the gcd criterion needs a fixed generator\n";
    return kExitNoFixedPoint;
  }
  if (g.json) {
    out << to_json(cert).dump(2) << '\n';
  } else {
    out << "input    " << (source.empty() ? "(identity)" : source) << " on F_" << n
        << '\n';
    out << "sigma    " << format_permutation(form.sigma) << '\n';
    print_certificate(out, cert);
  }
  return verdict_exit(cert.verdict);
}

int cmd_complete(const Globals& g, int n, const std::string& text,
                 const std::string& strategy, std::ostream& out) {
  const BraidWord beta = parse_braid(n, text);
  CompletionResult r;
  std::optional<int> k;
  if (strategy == "axis") {
    r = complete_with_axis_conjugates(beta);
  } else if (strategy == "lower") {
    r = stabilize_in_lower_braid(beta);
  } else {
    B3Stabilization s = b3_stabilize(beta);
    k = s.k;
    r = std::move(s.result);
  }
  if (g.json) {
    Json j{{"strategy", strategy}, {"beta", format_braid(beta)}};
    if (k) j["k"] = *k;
    const Json body = to_json(r);
    for (const auto& [key, value] : body.items()) j[key] = value;
    out << j.dump(2) << '\n';
  } else {
    out << "strategy " << strategy << '\n';
    out << "beta     " << format_braid(beta) << '\n';
    for (const auto& s : r.steps) out << "step     " << s << '\n';
    if (k) out << "k        " << *k << '\n';
    out << "alpha    " << format_braid(r.alpha) << '\n';
    out << "product  " << format_braid(r.product) << '\n';
    print_certificate(out, r.certificate);
  }
  return kExitOk;
}

int cmd_compare(const Globals& g, int n, const std::string& text, const std::string& sa,
                const std::string& sb, bool dump, std::ostream& out, std::ostream& err) {
  const BraidWord beta = parse_braid(n, text);
  const FreeGroup F(n);
  const Word a = F.parse(sa);
  const Word b = F.parse(sb);
  const OrderContext ctx = OrderContext::for_braid(beta, g.cap);
  if (!ctx.invariance_certified())
    err << "warning: certificate is " << to_string(ctx.certificate().verdict)
        << "; this is a bi-ordering of F_" << n
        << " but phi-invariance is not guaranteed\n";
  const Decision d = compare_in_F(a, b, ctx);
  const Word w = a.inverse() * b;
  std::optional<KWord> kw;
  if (d.h_difference == 0) kw = schreier_rewrite(w, ctx.i0());

  if (g.json) {
    Json j{{"a", format_word(a)}, {"b", format_word(b)}};
    const Json body = to_json(d);
    for (const auto& [key, value] : body.items()) j[key] = value;
    if (kw) j["k_word"] = format_kword(*kw);
    if (dump) {
      std::istringstream lines(format_expansion(magnus_expansion(w, g.cap)));
      Json m = Json::array();
      for (std::string line; std::getline(lines, line);) m.push_back(line);
      j["magnus"] = m;
    }
    j["certificate"] = to_json(ctx.certificate());
    j["context"] = to_json(ctx);
    out << j.dump(2) << '\n';
  } else {
    if (d.relation == Relation::Undecided) {
      out << "UNDECIDED_AT_CAP (cap " << d.cap_used << ")\n";
    } else {
      out << format_word(a) << ' ' << relation_symbol(d.relation) << ' '
          << format_word(b) << "   " << to_string(d.relation) << '\n';
    }
    out << "i0       " << ctx.i0() << '\n';
    out << "h(a^-1 b) " << d.h_difference << '\n';
    if (d.h_difference != 0) {
      out << "decided by h\n";
    } else if (kw) {
      out << "in K     " << format_kword(*kw) << '\n';
      if (d.depth > 0) {
        out << "depth    " << d.depth << '\n';
        out << "minimal  " << index_tuple(d.minimal_index) << '\n';
        out << "coef     " << d.coefficient << '\n';
      }
    }
    if (dump) {
      out << "magnus expansion of a^-1 b (cap " << g.cap << ")\n";
      out << format_expansion(magnus_expansion(w, g.cap));
    }
  }
  return d.relation == Relation::Undecided ? kExitInconclusive : kExitOk;
}

int cmd_verify(const Globals& g, int n, const std::string& text, int samples, int maxlen,
               std::ostream& out, std::ostream& err) {
  const BraidWord beta = parse_braid(n, text);
  const OrderContext ctx = OrderContext::for_braid(beta, g.cap);
  if (!ctx.invariance_certified())
    err << "warning: certificate is " << to_string(ctx.certificate().verdict)
        << "; phi-invariance is not checked\n";
  VerifyConfig cfg;
  cfg.samples = samples;
  cfg.maxlen = maxlen;
  cfg.seed = g.seed;
  const VerifyReport r = run_verify(ctx, cfg);
  const double rate =
      r.comparisons ? 100.0 * static_cast<double>(r.abstentions) / r.comparisons : 0.0;
  std::ostringstream rate_text;
  rate_text << std::fixed << std::setprecision(3) << rate;

  if (g.json) {
    Json j{{"braid", format_braid(beta)},
           {"strands", n},
           {"samples", samples},
           {"seed", g.seed},
           {"maxlen", maxlen},
           {"cap", g.cap},
           {"retry_cap", cfg.retry_cap},
           {"certificate", to_json(ctx.certificate())},
           {"comparisons", r.comparisons},
           {"abstentions", r.abstentions},
           {"resolved", r.resolved},
           {"unresolved", r.unresolved},
           {"violations",
            {{"totality", r.totality},
             {"antisymmetry", r.antisymmetry},
             {"transitivity", r.transitivity},
             {"left_invariance", r.left_invariance},
             {"right_invariance", r.right_invariance},
             {"phi_invariance", r.phi_checked ? Json(r.phi_invariance) : Json(nullptr)}}},
           {"examples", r.examples},
           {"passed", r.passed()}};
    out << j.dump(2) << '\n';
  } else {
    out << "braid            " << format_braid(beta) << " in B_" << n << '\n';
    out << "certificate      i0=" << ctx.i0() << ' '
        << to_string(ctx.certificate().verdict) << '\n';
    out << "samples          " << samples << " (seed " << g.seed << ", maxlen " << maxlen
        << ")\n";
    out << "comparisons      " << r.comparisons << '\n';
    out << "abstentions      " << r.abstentions << " at cap " << g.cap << " ("
        << rate_text.str() << "%), resolved at cap " << cfg.retry_cap << ": "
        << r.resolved << ", unresolved: " << r.unresolved << '\n';
    out << "totality         " << r.totality << '\n';
    out << "antisymmetry     " << r.antisymmetry << '\n';
    out << "transitivity     " << r.transitivity << '\n';
    out << "left invariance  " << r.left_invariance << '\n';
    out << "right invariance " << r.right_invariance << '\n';
    out << "phi invariance   "
        << (r.phi_checked ? std::to_string(r.phi_invariance) : std::string("skipped"))
        << '\n';
    for (const auto& e : r.examples) out << "  " << e << '\n';
    out << "result           " << (r.passed() ? "PASS" : "FAIL") << '\n';
  }
  return r.passed() ? kExitOk : kExitViolation;
}

int cmd_demo(const Globals& g, std::ostream& out) {
  const BraidWord beta = parse_braid(3, kMagicBraid);
  const Endomorphism phi = artin_action(beta);
  const ConjugacyForm form = extract_conjugacy_form(phi);
  const Certificate cert = certify_all(form);
  if (g.json) {
    out << Json{{"braid", format_braid(beta)},
                {"strands", 3},
                {"images", images_json(phi)},
                {"sigma", format_permutation(form.sigma)},
                {"certificate", to_json(cert)}}
               .dump(2)
        << '\n';
    return verdict_exit(cert.verdict);
  }
  out << "braid " << format_braid(beta) << " in B_3 (closure plus axis: the magic "
      << "manifold)\n\n";
  out << "Artin action, leftmost generator first:\n";
  for (int i = 1; i <= 3; ++i)
    out << "  x" << i << " -> " << format_word(phi.image(i)) << '\n';
  out << "\nconjugacy form phi(x_i) = w_i x_sigma(i) w_i^-1:\n";
  out << "  sigma = " << format_permutation(form.sigma) << '\n';
  for (int i = 1; i <= 3; ++i)
    out << "  w" << i << " = " << format_word(form.conjugator(i)) << '\n';
  out << "\nfixed generator i0 = " << cert.i0 << ", h = exponent sum of x" << cert.i0
      << '\n';
  for (const auto& r : cert.reports) {
    out << "orbit " << cycle_text(r.orbit) << ":";
    for (std::size_t m = 0; m < r.orbit.size(); ++m)
      out << " h(w" << r.orbit[m] << ") = " << r.h_values[m] << ';';
    out << " h_O = " << r.h_sum << ", gcd(" << r.orbit.size() << ", " << r.h_sum
        << ") = " << r.gcd << '\n';
  }
  out << "\nverdict " << to_string(cert.verdict) << '\n';
  if (cert.verdict == Verdict::BiOrderPreserving)
    out << "phi preserves a bi-ordering of F_3, so the link group is bi-orderable\n";
  return verdict_exit(cert.verdict);
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Parse:
    case ErrorCode::NotConjugacyForm:
    case ErrorCode::SigmaNotBijective:
    case ErrorCode::RankMismatch:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::MissingImage:
      return kExitParse;
    case ErrorCode::NoFixedPoint:
      return kExitNoFixedPoint;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bi-ordering certificates for braid and free-group automorphisms", "biord"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--cap", g.cap, "Magnus degree cap")->check(CLI::Range(1, 32));
  app.add_option("--seed", g.seed, "RNG seed for verify");
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--trust-automorphism", g.trust,
               "accept endomorphism files without an automorphism proof");

  int n = 0;
  std::string braid;
  auto add_strands = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("n", n, "number of strands")->required()->check(CLI::Range(1, 64));
  };

  auto* artin = app.add_subcommand("artin", "print the Artin action of a braid");
  add_strands(artin);
  artin->add_option("braid", braid, "braid word, e.g. \"s1^2 s2^-1\"")->required();

  auto* cert = app.add_subcommand("certify", "run the gcd certificate");
  add_strands(cert);
  std::optional<std::string> cert_braid, endo;
  std::optional<int> i0;
  cert->add_option("braid", cert_braid, "braid word");
  cert->add_option("--endo", endo, "endomorphism file with lines x<k> = <word>");
  cert->add_option("--i0", i0, "use this fixed generator instead of the best one");

  auto* comp = app.add_subcommand("complete", "complete a braid to a certified one");
  add_strands(comp);
  std::string strategy;
  comp->add_option("braid", braid)->required();
  comp->add_option("strategy", strategy)
      ->required()
      ->check(CLI::IsMember({"axis", "lower", "b3"}));

  auto* cmp = app.add_subcommand("compare", "compare two words in the invariant order");
  add_strands(cmp);
  std::string wa, wb;
  bool dump = false;
  cmp->add_option("braid", braid)->required();
  cmp->add_option("a", wa)->required();
  cmp->add_option("b", wb)->required();
  cmp->add_flag("--dump-magnus", dump, "print the Magnus expansion of a^-1 b");

  auto* ver = app.add_subcommand("verify", "property-test the invariant order");
  add_strands(ver);
  int samples = 500, maxlen = 12;
  ver->add_option("braid", braid)->required();
  ver->add_option("--samples", samples)->check(CLI::Range(1, 1000000));
  ver->add_option("--maxlen", maxlen)->check(CLI::Range(0, 1000));

  auto* demo = app.add_subcommand("demo", "walk through the magic manifold example");
  demo->fallthrough();

  std::vector<std::string> storage{"biord"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (artin->parsed()) return cmd_artin(g, n, braid, out);
    if (cert->parsed()) return cmd_certify(g, n, cert_braid, endo, i0, out, err);
    if (comp->parsed()) return cmd_complete(g, n, braid, strategy, out);
    if (cmp->parsed()) return cmd_compare(g, n, braid, wa, wb, dump, out, err);
    if (ver->parsed()) return cmd_verify(g, n, braid, samples, maxlen, out, err);
    if (demo->parsed()) return cmd_demo(g, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 70;
  }
  return kExitUsage;
}

}  // namespace biord::cli
