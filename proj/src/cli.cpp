#include "bmsa/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "bmsa/golden.hpp"
#include "bmsa/io.hpp"
#include "bmsa/oracle.hpp"

namespace bmsa {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ConfigError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ConfigError, "cannot write " + path);
  out << text;
}

Point parse_pair(const std::string& text, const char* what) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw Error(Errc::ConfigError, std::string(what) + " must be of the form i,j");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(Errc::ConfigError, std::string(what) + " must be of the form i,j");
  }
}

OrderKind parse_order(const std::string& text) {
  if (text == "lex") return OrderKind::Lex;
  if (text == "graded") return OrderKind::Graded;
  throw Error(Errc::ConfigError, "order must be lex or graded");
}

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("BMS_SEED")) return std::strtoull(s, nullptr, 0);
  return 0x5eedULL;
}

bool is_decode_failure(Errc code) {
  switch (code) {
    case Errc::CapabilityExceeded:
    case Errc::InconsistentSystem:
    case Errc::NotInBaseField:
    case Errc::NotCodewordAfterCorrection:
    case Errc::NoTau:
      return true;
    default:
      return false;
  }
}

struct CommonOpts {
  std::string field_file;
  std::string period = "0,0";
  std::string order = "lex";
  int t = 0;
  std::string tau;
  std::string in_file;
  std::string out_file;
  bool trace = false;
  std::string format = "table";
};

int cmd_syndrome(const CommonOpts& o, std::ostream& out) {
  Field F = field_from_json(read_file(o.field_file));
  Point period = parse_pair(o.period, "--period");
  Point tau = parse_pair(o.tau, "--tau");
  BivariatePoly e = parse_poly(F, read_file(o.in_file));
  AlphaPair alpha{F.root_of_unity(period.x), F.root_of_unity(period.y)};
  std::vector<Point> st = s_of_t(o.t);
  SyndromeFile file{tau, syndromes(F, e, tau, alpha, st)};
  std::string text = syndromes_to_json(F, file);
  if (!o.out_file.empty())
    write_file(o.out_file, text);
  else
    out << text << "\n";
  return 0;
}

int cmd_bms(const CommonOpts& o, std::ostream& out, std::ostream& err) {
  Field F = field_from_json(read_file(o.field_file));
  Point period = parse_pair(o.period, "--period");
  OrderKind order = parse_order(o.order);
  SyndromeFile file = syndromes_from_json(F, read_file(o.in_file));
  RunResult res = run(F, file.entries, order, o.t, period);
  if (!res.condition_ok)
    err << "warning: the " << (order == OrderKind::Lex ? "l" : "g")
        << "-condition does not hold; the basis may be unreliable\n";
  if (o.trace)
    out << emit_trace(F, res.trace,
                      o.format == "structured" ? TraceFormat::Structured : TraceFormat::Table);
  std::string text = basis_to_json(F, res);
  if (!o.out_file.empty())
    write_file(o.out_file, text);
  else
    out << text << "\n";
  return 0;
}

int cmd_decode(const CommonOpts& o, const std::string& code_file, std::ostream& out,
               std::ostream& err) {
  CodeFile cf = code_from_json(read_file(code_file));
  OrderKind order = parse_order(o.order);
  Word received = word_from_json(cf.field, read_file(o.in_file));
  std::optional<Point> tau;
  if (!o.tau.empty()) tau = parse_pair(o.tau, "--tau");
  DecodeResult res = decode(cf.field, cf.code, received, o.t, order, tau);
  if (!res.condition_ok) err << "warning: the order condition does not hold for these values\n";
  if (o.trace)
    out << emit_trace(cf.field, res.trace,
                      o.format == "structured" ? TraceFormat::Structured : TraceFormat::Table);
  std::ostringstream body;
  body << "{\n  \"tau\": [" << res.tau.x << ", " << res.tau.y << "],\n";
  body << "  \"error\": \"" << format_poly(cf.field, res.error) << "\",\n";
  body << "  \"corrected\": " << word_to_json(cf.field, res.corrected) << "\n}";
  if (!o.out_file.empty())
    write_file(o.out_file, body.str());
  else
    out << body.str() << "\n";
  return 0;
}

int cmd_oracle(const CommonOpts& o, bool uniqueness, std::int64_t q, int trials,
               std::ostream& out) {
  Field F = field_from_json(read_file(o.field_file));
  Point period = parse_pair(o.period, "--period");

  if (uniqueness) {
    UniquenessReport rep = exhaustive_uniqueness(F, period.x, period.y, q, o.t);
    out << "{\n  \"checked\": " << rep.checked << ",\n  \"failures\": [";
    for (std::size_t i = 0; i < rep.failures.size(); ++i)
      out << (i ? ", " : "") << "\"" << rep.failures[i] << "\"";
    out << "]\n}\n";
    return rep.ok() ? 0 : 2;
  }

  // Randomized cross-check of the iterative path against the brute-force
  // footprint, on syndrome tables of random errors.
  AbelianCode dummy{period.x, period.y, q, {}};
  std::mt19937_64 rng(seed_from_env());
  AlphaPair alpha{F.root_of_unity(period.x), F.root_of_unity(period.y)};
  long long failures = 0;
  for (int i = 0; i < trials; ++i) {
    int w = static_cast<int>(rng() % static_cast<std::uint64_t>(o.t)) + 1;
    BivariatePoly e = random_error(F, dummy, w, rng);
    Point tau{static_cast<int>(rng() % static_cast<std::uint64_t>(period.x)),
              static_cast<int>(rng() % static_cast<std::uint64_t>(period.y))};
    PeriodicArray table = syndrome_table(F, e, tau, alpha, period);
    for (OrderKind order : {OrderKind::Lex, OrderKind::Graded}) {
      ValueMap values = syndromes(F, e, tau, alpha, s_of_t(o.t));
      RunResult res = run(F, values, order, o.t, period);
      FootprintResult fp = footprint_bruteforce(F, table, order);
      bool ok = res.delta == fp.delta;
      for (const BivariatePoly& f : res.basis) ok = ok && membership_full(F, f, table);
      if (!ok) ++failures;
    }
  }
  out << "{\n  \"checked\": " << 2 * trials << ",\n  \"failures\": " << failures << "\n}\n";
  return failures == 0 ? 0 : 2;
}

int cmd_selftest(std::ostream& out) {
  int passed = 0;
  std::vector<std::string> notes;
  std::vector<const golden::Example*> examples = golden::all_examples();
  for (const golden::Example* ex : examples) {
    golden::VerifyResult res = golden::verify(*ex);
    out << (res.ok ? "ok   " : "FAIL ") << ex->name << "\n";
    for (const std::string& m : res.mismatches) out << "  " << m << "\n";
    notes.insert(notes.end(), res.notes.begin(), res.notes.end());
    if (res.ok) ++passed;
  }
  for (const std::string& n : notes) out << "note: " << n << "\n";
  out << passed << "/" << examples.size() << " examples reproduced\n";
  return passed == static_cast<int>(examples.size()) ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner bases of linear recurring arrays and locator decoding of "
               "bivariate abelian codes"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string code_file;
  bool uniqueness = false;
  std::int64_t q = 2;
  int trials = 50;

  auto add_common = [&](CLI::App* cmd, bool need_field) {
    if (need_field) cmd->add_option("--field", o.field_file, "field config JSON")->required();
    cmd->add_option("--period", o.period, "period r1,r2");
    cmd->add_option("--order", o.order, "lex|graded");
    cmd->add_option("--t", o.t, "capability");
    cmd->add_option("--tau", o.tau, "translation point i,j");
    cmd->add_option("--in", o.in_file, "input file");
    cmd->add_option("--out", o.out_file, "output file");
    cmd->add_flag("--trace", o.trace, "emit the iteration trace");
    cmd->add_option("--format", o.format, "table|structured");
  };

  CLI::App* c_syn = app.add_subcommand("syndrome", "emit the S(t) syndrome file of an error polynomial");
  add_common(c_syn, true);
  CLI::App* c_bms = app.add_subcommand("bms", "run the iteration on a syndrome file");
  add_common(c_bms, true);
  CLI::App* c_dec = app.add_subcommand("decode", "full locator decode of a received word");
  add_common(c_dec, false);
  c_dec->add_option("--code", code_file, "code config JSON")->required();
  CLI::App* c_orc = app.add_subcommand("oracle", "brute-force cross checks");
  add_common(c_orc, true);
  c_orc->add_flag("--uniqueness", uniqueness, "exhaustive uniqueness sweep");
  c_orc->add_option("--q", q, "base field size");
  c_orc->add_option("--trials", trials, "random cross-check trials");
  CLI::App* c_self = app.add_subcommand("selftest", "replay the reference examples");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& ex) {
    if (ex.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << ex.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(c_syn)) return cmd_syndrome(o, out);
    if (app.got_subcommand(c_bms)) return cmd_bms(o, out, err);
    if (app.got_subcommand(c_dec)) return cmd_decode(o, code_file, out, err);
    if (app.got_subcommand(c_orc)) return cmd_oracle(o, uniqueness, q, trials, out);
    if (app.got_subcommand(c_self)) return cmd_selftest(out);
  } catch (const Error& ex) {
    err << "error (" << errc_name(ex.code()) << "): " << ex.what() << "\n";
    return is_decode_failure(ex.code()) ? 2 : 1;
  }
  return 1;
}

}  // namespace bmsa
