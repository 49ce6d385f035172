#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "hyperorder/closedform.hpp"
#include "hyperorder/errors.hpp"
#include "hyperorder/families.hpp"
#include "hyperorder/gosper.hpp"
#include "hyperorder/graphs.hpp"

using namespace hyperorder;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
};

Range parse_range(const std::string& text, const std::string& flag) {
  static const std::regex form(R"(\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?)");
  std::smatch match;
  if (!std::regex_match(text, match, form)) throw UsageError(flag + ": expected N or A..B, got '" + text + "'");
  Range r;
  try {
    r.lo = std::stoll(match[1].str());
    r.hi = match[2].matched ? std::stoll(match[2].str()) : r.lo;
  } catch (const std::out_of_range&) {
    throw UsageError(flag + ": value out of range");
  }
  if (r.hi < r.lo) throw UsageError(flag + ": empty range " + text);
  return r;
}

unsigned resolve_jobs(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HYPERORDER_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError("HYPERORDER_JOBS must be a positive integer");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// Results land in input order regardless of scheduling.
template <class In, class Out, class Fn>
std::vector<Out> parallel_map(const std::vector<In>& inputs, unsigned jobs, Fn fn) {
  std::vector<Out> out(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) out[i] = fn(inputs[i]);
  };
  const unsigned count = std::min<std::size_t>(jobs, std::max<std::size_t>(inputs.size(), 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::string decimal(const Rational& r) {
  std::ostringstream os;
  os << std::setprecision(12) << r.to_double();
  return os.str();
}

struct Output {
  std::string path;
  std::ostringstream buffer;

  void flush() {
    if (path.empty()) {
      std::cout << buffer.str();
      return;
    }
    std::ofstream file(path);
    if (!file) throw UsageError("cannot open " + path + " for writing");
    file << buffer.str();
  }
};

struct Common {
  std::string format = "plain";
  std::string out;
  unsigned jobs = 0;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
  cmd->add_option("--out", common.out, "Write the report to FILE instead of stdout");
  cmd->add_option("--jobs", common.jobs, "Worker threads (default: HYPERORDER_JOBS or all cores)");
}

// ---- verify ----

struct VerifyArgs {
  int theorem = 1;
  std::string n_range;
  std::string m_range;
};

int cmd_verify(const VerifyArgs& args, const Common& common) {
  const Range n = parse_range(args.n_range, "--n");
  std::vector<std::pair<std::int64_t, std::int64_t>> instances;
  if (args.theorem == 1) {
    if (!args.m_range.empty()) throw UsageError("--m applies to theorem 2 only");
    if (n.lo < 3) throw UsageError("theorem 1 needs n >= 3");
    for (auto v = n.lo; v <= n.hi; ++v) instances.emplace_back(0, v);
  } else {
    if (args.m_range.empty()) throw UsageError("theorem 2 needs --m");
    const Range m = parse_range(args.m_range, "--m");
    if (m.lo < 1 || n.lo < 2) throw UsageError("theorem 2 needs m >= 1 and n >= 2");
    for (auto mv = m.lo; mv <= m.hi; ++mv)
      for (auto nv = n.lo; nv <= n.hi; ++nv) instances.emplace_back(mv, nv);
  }

  const int theorem = args.theorem;
  const auto reports = parallel_map<std::pair<std::int64_t, std::int64_t>, VerifyReport>(
      instances, resolve_jobs(common.jobs), [theorem](const auto& p) {
        return theorem == 1 ? pipeline_theorem1(p.second) : pipeline_theorem2(p.first, p.second);
      });

  Output out{common.out};
  bool all = true;
  json array = json::array();
  if (common.format == "csv") out.buffer << csv_header() << '\n';
  for (const auto& r : reports) {
    all = all && r.passed();
    if (common.format == "json") {
      array.push_back(to_json(r));
    } else if (common.format == "csv") {
      out.buffer << to_csv_row(r) << '\n';
    } else if (r.passed()) {
      out.buffer << "PASS " << r.instance() << " lhs=" << r.lhs << " rhs=" << r.rhs << " (approx "
                 << decimal(r.rhs) << ")\n";
    } else {
      const Stage* s = r.first_failure();
      out.buffer << "FAIL " << r.instance() << " stage=" << s->name << ": " << s->detail << '\n';
    }
  }
  if (common.format == "json") {
    out.buffer << json{{"schema", 1}, {"command", "verify"}, {"theorem", theorem}, {"pass", all}, {"reports", array}}
                      .dump(2)
               << '\n';
  }
  out.flush();
  if (!all) {
    for (const auto& r : reports) {
      if (!r.passed()) {
        std::cerr << "verification failed: " << r.instance() << " at stage '" << r.first_failure()->name << "'\n";
        break;
      }
    }
    return kExitFailed;
  }
  return kExitOk;
}

// ---- count ----

struct CountArgs {
  std::string family;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string method = "both";
};

int cmd_count(const CountArgs& args, const Common& common) {
  const bool k3 = args.family == "k3";
  if (k3 && args.m != 0) throw UsageError("--m applies to family k12 only");
  if (!k3 && args.m < 1) throw UsageError("family k12 needs --m >= 1");
  const Hypergraph h = k3 ? complete_3uniform(args.n) : complete_bipartite_12(args.m, args.n);
  const std::size_t vertices = h.edges.size();
  const bool want_formula = args.method != "brute";
  const bool want_brute = args.method != "formula";
  if (want_brute && vertices > kMaxDpVertices) {
    throw CapacityError("line graph has " + std::to_string(vertices) + " vertices; brute force is capped at " +
                        std::to_string(kMaxDpVertices) + " (use --method formula)");
  }
  const BigInt orderings = factorial(static_cast<unsigned>(vertices));

  struct Row {
    std::string method;
    Rational probability;
    BigInt count;
  };
  std::vector<Row> rows;
  if (want_formula) {
    const Rational p = k3 ? rhs_theorem1(args.n) : rhs_theorem2(args.m, args.n);
    const Rational scaled = p * Rational(orderings);
    if (!scaled.is_integer()) throw ArithmeticError("formula probability times |V|! is not an integer");
    rows.push_back({"formula", p, scaled.numerator()});
  }
  if (want_brute) {
    const BigInt c = count_successive_orderings(line_graph(h));
    rows.push_back({"brute", Rational(c, orderings), c});
  }
  const bool match = rows.size() < 2 || rows[0].count == rows[1].count;

  Output out{common.out};
  const std::string instance =
      k3 ? "n=" + std::to_string(args.n) : "m=" + std::to_string(args.m) + ",n=" + std::to_string(args.n);
  if (common.format == "json") {
    json j{{"schema", 1}, {"command", "count"}, {"family", args.family}, {"instance", instance},
           {"vertices", vertices}};
    for (const auto& r : rows) {
      j["results"][r.method] = {{"probability", r.probability.to_string()}, {"count", r.count.get_str()}};
    }
    if (rows.size() == 2) j["match"] = match;
    out.buffer << j.dump(2) << '\n';
  } else if (common.format == "csv") {
    out.buffer << "instance,method,probability,count\n";
    for (const auto& r : rows) {
      out.buffer << '"' << args.family << ' ' << instance << "\"," << r.method << ',' << r.probability << ','
                 << r.count.get_str() << '\n';
    }
  } else {
    out.buffer << args.family << ' ' << instance << " (" << vertices << " vertices)\n";
    for (const auto& r : rows) {
      out.buffer << r.method << ": probability " << r.probability << " (approx " << decimal(r.probability)
                 << "), count " << r.count.get_str() << '\n';
    }
    if (rows.size() == 2) out.buffer << (match ? "match" : "MISMATCH") << '\n';
  }
  out.flush();
  if (!match) {
    std::cerr << "formula and brute-force counts differ\n";
    return kExitFailed;
  }
  return kExitOk;
}

// ---- gosper ----

struct GosperArgs {
  std::string ratio;
  std::string family;
  std::int64_t n = 0;
  std::int64_t m = 0;
};

int cmd_gosper(const GosperArgs& args, const Common& common) {
  Output out{common.out};
  if (!args.ratio.empty()) {
    if (!args.family.empty()) throw UsageError("give either --ratio or --family, not both");
    const RatFunc ratio = RatFunc::parse(args.ratio);
    const auto r = gosper_find(ratio);
    if (common.format == "json") {
      json j{{"schema", 1}, {"command", "gosper"}, {"ratio", ratio.to_string()}, {"summable", r.has_value()}};
      if (r) j["R"] = r->to_string();
      out.buffer << j.dump(2) << '\n';
    } else if (common.format == "csv") {
      out.buffer << "ratio,summable,R\n\"" << ratio.to_string() << "\"," << (r ? "true" : "false") << ",\""
                 << (r ? r->to_string() : "") << "\"\n";
    } else {
      out.buffer << (r ? "R(k) = " + r->to_pretty_string() : std::string("not summable")) << '\n';
    }
    out.flush();
    return kExitOk;
  }
  if (args.family.empty()) throw UsageError("gosper needs --ratio or --family");
  const Family family = parse_family(args.family);
  if (family != Family::t2 && args.m != 0) throw UsageError("--m applies to family t2 only");
  const FamilyInstance inst{family, args.m, args.n};
  const HTerm term = family_term(inst);
  const auto found = gosper_find(term_ratio(term));
  const Certificate printed = family_certificate(inst, printed_certificate(inst));
  const CertificateCheck printed_ok = verify_certificate(printed);
  std::optional<CertificateCheck> found_ok;
  if (found) found_ok = verify_certificate(family_certificate(inst, *found));
  std::optional<Rational> closed;
  if (printed_ok.ok) {
    closed = as_rational(telescoped_sum(printed, 0, static_cast<std::int64_t>(printed.last)));
  } else if (found_ok && found_ok->ok) {
    const Certificate cert = family_certificate(inst, *found);
    closed = as_rational(telescoped_sum(cert, 0, static_cast<std::int64_t>(cert.last)));
  }
  const bool agree = found && *found == printed.r;
  const bool ok = found && found_ok->ok && printed_ok.ok && closed && *closed == family_closed_form(inst);

  if (common.format == "json") {
    json j{{"schema", 1}, {"command", "gosper"}, {"family", args.family}};
    j["found"] = found ? certificate_to_json(*found, inst) : json(nullptr);
    j["found_verified"] = found_ok ? found_ok->ok : false;
    j["printed"] = certificate_to_json(printed.r, inst);
    j["printed_verified"] = printed_ok.ok;
    j["found_equals_printed"] = agree;
    j["closed_form"] = closed ? json(closed->to_string()) : json(nullptr);
    out.buffer << j.dump(2) << '\n';
  } else if (common.format == "csv") {
    out.buffer << "family,R,printed_verified,closed_form\n"
               << args.family << ",\"" << (found ? found->to_string() : "") << "\"," << (printed_ok.ok ? "true" : "false")
               << ',' << (closed ? closed->to_string() : "") << '\n';
  } else {
    out.buffer << "R(k) = " << (found ? found->to_pretty_string() : std::string("not summable")) << '\n';
    if (found) out.buffer << "found certificate: " << (found_ok->ok ? "verified" : "REJECTED " + found_ok->detail) << '\n';
    out.buffer << "printed certificate: " << (printed_ok.ok ? "verified" : "REJECTED " + printed_ok.detail)
               << (agree ? " (identical)" : "") << '\n';
    if (closed) out.buffer << "closed form = " << *closed << " (approx " << decimal(*closed) << ")\n";
  }
  out.flush();
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of successive-ordering product formulas"};
  app.require_subcommand(1);
  Common common;

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Replay the proof pipeline over a parameter range");
  v->add_option("--theorem", verify.theorem, "1: L(K_n^(3)), 2: L(K_{m,n}^(1,2))")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  v->add_option("--n", verify.n_range, "n or A..B")->required();
  v->add_option("--m", verify.m_range, "m or A..B (theorem 2)");
  add_common(v, common);

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count successive orderings of a line graph");
  c->add_option("--family", count.family, "k3: L(K_n^(3)), k12: L(K_{m,n}^(1,2))")
      ->required()
      ->check(CLI::IsMember({"k3", "k12"}));
  c->add_option("--n", count.n, "n")->required();
  c->add_option("--m", count.m, "m (k12)");
  c->add_option("--method", count.method, "formula, brute or both")->check(CLI::IsMember({"formula", "brute", "both"}));
  add_common(c, common);

  GosperArgs gosper;
  auto* g = app.add_subcommand("gosper", "Run Gosper's algorithm on a term ratio or a tabulated family");
  g->add_option("--ratio", gosper.ratio, "t_{k+1}/t_k as a rational function of k");
  g->add_option("--family", gosper.family, "t1, t1mod2 or t2")->check(CLI::IsMember({"t1", "t1mod2", "t2"}));
  g->add_option("--n", gosper.n, "n");
  g->add_option("--m", gosper.m, "m (t2)");
  add_common(g, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (v->parsed()) return cmd_verify(verify, common);
    if (c->parsed()) return cmd_count(count, common);
    return cmd_gosper(gosper, common);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
  } catch (const ArithmeticError& e) {
    std::cerr << "arithmetic error: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
