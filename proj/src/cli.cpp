#include "leavitt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "leavitt/error.hpp"
#include "leavitt/expr.hpp"
#include "leavitt/io.hpp"
#include "leavitt/simplicity.hpp"

namespace leavitt {

namespace {

/// Usage mistakes that CLI11 cannot catch on its own.
class UsageError : public Error {
public:
  using Error::Error;
};

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::uint64_t parse_unsigned(const std::string &text, const std::string &what) {
  std::string t = trim(text);
  if (t.empty() || !std::all_of(t.begin(), t.end(), ::isdigit) || t.size() > 18)
    throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
  return std::stoull(t);
}

struct RawSettings {
  std::optional<std::string> n, d, characteristic, mode;
};

void apply(SessionConfig &cfg, const RawSettings &raw) {
  if (raw.n) {
    auto n = parse_unsigned(*raw.n, "n");
    if (n < 2 || n > 1'000'000)
      throw DomainError("n must lie in [2, 1000000], got " + *raw.n);
    cfg.n = static_cast<std::uint32_t>(n);
  }
  if (raw.d) {
    auto d = parse_unsigned(*raw.d, "d");
    if (d < 1 || d > 10'000)
      throw DomainError("d must lie in [1, 10000], got " + *raw.d);
    cfg.d = d;
  }
  if (raw.characteristic)
    cfg.field = FieldSpec(parse_unsigned(*raw.characteristic, "char"));
  if (raw.mode)
    cfg.mode = parse_mode(trim(*raw.mode));
}

// key=value lines; '#' starts a comment.
RawSettings read_config_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw DomainError("cannot open config file '" + path + "'");
  RawSettings raw;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (trim(line).empty())
      continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError(path + ":" + std::to_string(lineno) +
                       ": expected key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "n")
      raw.n = value;
    else if (key == "d")
      raw.d = value;
    else if (key == "char" || key == "characteristic")
      raw.characteristic = value;
    else if (key == "mode")
      raw.mode = value;
    else
      throw UsageError(path + ":" + std::to_string(lineno) +
                       ": unknown key '" + key + "'");
  }
  return raw;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string &text,
                                                    const std::string &what) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    auto v = parse_unsigned(text, what);
    return {v, v};
  }
  auto lo = parse_unsigned(text.substr(0, colon), what);
  auto hi = parse_unsigned(text.substr(colon + 1), what);
  if (lo > hi)
    throw UsageError(what + " range '" + text + "' is empty");
  return {lo, hi};
}

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json value_to_json(const Value &v) {
  if (auto *m = std::get_if<LeavittMatrix>(&v))
    return matrix_to_json(*m);
  if (auto *l = std::get_if<LeavittElement>(&v))
    return l->to_string();
  return std::get<CohnElement>(v).to_string();
}

Json verdict_to_json(const SimplicityVerdict &v) {
  Json j;
  j["simple"] = v.simple;
  j["reason"] = std::string(reason_name(v.reason));
  return j;
}

Scalar trace_of(const Value &v) {
  if (auto *m = std::get_if<LeavittMatrix>(&v))
    return tau_d(*m);
  if (auto *l = std::get_if<LeavittElement>(&v))
    return tau(*l);
  return trace_T(std::get<CohnElement>(v));
}

Value bracket_of(const Value &a, const Value &b) {
  if (auto *m = std::get_if<LeavittMatrix>(&a))
    return mat_bracket(*m, std::get<LeavittMatrix>(b));
  if (auto *l = std::get_if<LeavittElement>(&a))
    return leavitt_bracket(*l, std::get<LeavittElement>(b));
  return bracket(std::get<CohnElement>(a), std::get<CohnElement>(b));
}

Json witness_result(const SessionConfig &cfg, bool verify) {
  BracketWitness w = build_witness(cfg.field, cfg.n, cfg.d);
  Json j = witness_to_json(w);
  if (verify) {
    // Checked from the serialised form so the emitted document is what
    // gets verified.
    BracketWitness reread = witness_from_json(j);
    if (witness_to_json(reread) != j)
      throw DomainError("witness serialisation does not round-trip");
    j["verified"] = verify_witness(reread);
  }
  return j;
}

std::string render_pretty(const Json &result) {
  if (result.is_string())
    return result.get<std::string>();
  return result.dump(2);
}

std::string envelope_ok(const Json &result, bool pretty) {
  if (pretty)
    return render_pretty(result) + "\n";
  Json j;
  j["ok"] = true;
  j["result"] = result;
  return j.dump() + "\n";
}

std::string envelope_error(const std::string &reason, bool pretty) {
  if (pretty)
    return "error: " + reason + "\n";
  Json j;
  j["ok"] = false;
  j["result"] = nullptr;
  j["reason"] = reason;
  return j.dump() + "\n";
}

} // namespace

CliOutcome run_cli(const std::vector<std::string> &args,
                   const CliEnvironment &env) {
  CLI::App app{"Exact arithmetic in Cohn and Leavitt algebras, their matrix "
               "rings, and simplicity of the associated Lie algebras",
               "leavitt"};
  app.require_subcommand(1);

  RawSettings flags;
  std::string config_path;
  bool pretty = false;
  auto *opt_n = app.add_option("--n", flags.n, "Alphabet size n (>= 2)");
  auto *opt_d = app.add_option("--d", flags.d, "Matrix size d (>= 1)");
  auto *opt_char =
      app.add_option("--char", flags.characteristic, "0 for Q, or a prime p");
  auto *opt_mode =
      app.add_option("--mode", flags.mode, "cohn, leavitt or matrix");
  app.add_option("--config", config_path, "key=value file of defaults");
  app.add_flag("--pretty", pretty, "Human-readable output");

  std::string expr_a, expr_b, matrix_path;
  bool verify = false;
  std::vector<std::string> chars;
  std::string n_range = "2:8", d_range = "1:6";

  auto *nf = app.add_subcommand("nf", "Normal form of an expression");
  nf->add_option("expr", expr_a)->required();
  auto *trace = app.add_subcommand(
      "trace", "T in cohn mode, tau in leavitt mode, tau_d in matrix mode");
  trace->add_option("expr", expr_a)->required();
  auto *taud = app.add_subcommand("taud", "tau_d of a matrix file");
  taud->add_option("matrix-file", matrix_path)->required();
  auto *br = app.add_subcommand("bracket", "Lie bracket [e1, e2]");
  br->add_option("e1", expr_a)->required();
  br->add_option("e2", expr_b)->required();
  auto *simple = app.add_subcommand("simple", "Simplicity verdict");
  auto *witness = app.add_subcommand("witness", "Identity bracket witness");
  witness->add_flag("--verify", verify, "Re-evaluate the witness exactly");
  auto *grid = app.add_subcommand("grid", "Verdicts over a parameter grid");
  grid->add_option("--chars", chars, "Characteristics")->delimiter(',');
  grid->add_option("--n-range", n_range, "lo:hi");
  grid->add_option("--d-range", d_range, "lo:hi");
  grid->add_flag("--verify", verify, "Build and verify witnesses");
  for (auto *sub : app.get_subcommands({}))
    sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    std::string help = app.help();
    for (auto *sub : app.get_subcommands())
      help = sub->help();
    return {0, help};
  } catch (const CLI::ParseError &e) {
    return {2, envelope_error(e.what(), pretty)};
  }

  try {
    SessionConfig cfg;
    if (env.default_char)
      cfg.field = FieldSpec(parse_unsigned(*env.default_char, "LEAVITT_CHAR"));
    if (!config_path.empty())
      apply(cfg, read_config_file(config_path));
    RawSettings given;
    if (opt_n->count())
      given.n = flags.n;
    if (opt_d->count())
      given.d = flags.d;
    if (opt_char->count())
      given.characteristic = flags.characteristic;
    if (opt_mode->count())
      given.mode = flags.mode;
    apply(cfg, given);

    Json result;
    if (nf->parsed()) {
      result = value_to_json(evaluate(parse(expr_a), cfg));
    } else if (trace->parsed()) {
      result = trace_of(evaluate(parse(expr_a), cfg)).to_string();
    } else if (taud->parsed()) {
      Json m = Json::parse(read_file(matrix_path));
      result = tau_d(matrix_from_json(m, cfg.field, cfg.n)).to_string();
    } else if (br->parsed()) {
      Value a = evaluate(parse(expr_a), cfg);
      Value b = evaluate(parse(expr_b), cfg);
      result = value_to_json(bracket_of(a, b));
    } else if (simple->parsed()) {
      result = verdict_to_json(is_simple(cfg.field, cfg.n, cfg.d));
    } else if (witness->parsed()) {
      result = witness_result(cfg, verify);
    } else if (grid->parsed()) {
      if (chars.empty())
        chars = {"0", "2", "3", "5", "7", "11"};
      auto [n_lo, n_hi] = parse_range(n_range, "n");
      auto [d_lo, d_hi] = parse_range(d_range, "d");
      result = Json::array();
      for (const auto &c : chars) {
        FieldSpec spec(parse_unsigned(c, "char"));
        for (auto n = n_lo; n <= n_hi; ++n) {
          for (auto d = d_lo; d <= d_hi; ++d) {
            SessionConfig point{static_cast<std::uint32_t>(n), d, spec,
                                cfg.mode};
            SimplicityVerdict v = is_simple(spec, point.n, point.d);
            Json row;
            row["char"] = spec.characteristic();
            row["n"] = n;
            row["d"] = d;
            row["simple"] = v.simple;
            row["reason"] = std::string(reason_name(v.reason));
            if (verify && !v.simple)
              row["verified"] = verify_witness(build_witness(spec, point.n, d));
            result.push_back(std::move(row));
          }
        }
      }
    }
    return {0, envelope_ok(result, pretty)};
  } catch (const ParseError &e) {
    return {2, envelope_error(e.what(), pretty)};
  } catch (const UsageError &e) {
    return {2, envelope_error(e.what(), pretty)};
  } catch (const Json::parse_error &e) {
    return {2, envelope_error(e.what(), pretty)};
  } catch (const Error &e) {
    return {1, envelope_error(e.what(), pretty)};
  } catch (const std::bad_variant_access &) {
    return {1, envelope_error("operands evaluated in different algebras", pretty)};
  }
}

} // namespace leavitt
