#pragma once

#include "gammaseq/cli/json_io.hpp"
#include "gammaseq/constructions/builders.hpp"
#include "gammaseq/gamma/end_gamma.hpp"
#include "gammaseq/gamma/omega_brute.hpp"
#include "gammaseq/rings/sequence_pullback.hpp"
#include "gammaseq/rings/units.hpp"
#include "gammaseq/search/survey.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace gammaseq::cli {

/// Bad arguments or unreadable input; exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

enum ExitCode : int { Ok = 0, VerificationFailed = 1, BadInput = 2 };

/// Tables and element lists are only printed up to this order.
inline constexpr std::size_t max_listed_order = 64;

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

inline std::string compact(const Homomorphism& f) { return matrix_json(f.matrix()).dump(); }

inline std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : sep) + std::to_string(x);
  return out;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline void print_invariants(std::ostream& out, const RingInvariants& inv, const FgAbGroup& additive) {
  out << "order: " << inv.order << "\n"
      << "additive group: " << additive.to_string() << "\n"
      << "characteristic: " << inv.characteristic << "\n"
      << "commutative: " << yes_no(inv.is_commutative) << "\n"
      << "units: " << inv.unit_count << "\n"
      << "idempotents: " << inv.idempotent_count << "\n";
}

inline Json table_json(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& op) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < n; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < n; ++b) row.push_back(op(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline void print_table(std::ostream& out, const char* name, std::size_t n,
                        const std::function<std::size_t(std::size_t, std::size_t)>& op) {
  out << name << ":\n";
  for (std::size_t a = 0; a < n; ++a) {
    out << " ";
    for (std::size_t b = 0; b < n; ++b) out << " " << op(a, b);
    out << "\n";
  }
}

/// k with p^k = n, or 0 when n is not a positive power of p.
inline std::uint64_t log_exact(std::uint64_t n, std::uint64_t p) {
  if (n < p) return 0;
  std::uint64_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? k : 0;
}

/// F_p^k has characteristic p, is commutative, and has (p-1)^k units and
/// 2^k idempotents.
inline bool fingerprint_allows_fpk(const RingInvariants& inv, std::uint64_t p, std::uint64_t k) {
  std::uint64_t units = 1, idem = 1;
  for (std::uint64_t e = 0; e < k; ++e) {
    units *= p - 1;
    idem *= 2;
  }
  return inv.characteristic == p && inv.is_commutative && inv.unit_count == units && inv.idempotent_count == idem;
}

struct Options {
  std::string file = "-";
  bool json = false;
  bool tables = false;
  std::vector<std::uint64_t> primes{2, 3, 5, 7};
  // construct
  std::string builder;
  std::vector<std::string> groups;
  std::size_t rank = 0;
  std::string ext;
  // pullback-check
  std::uint64_t seed = 20240601;
  std::uint64_t samples = 1000;
  int entry_bound = 3;
  // search / fp2-scan
  std::uint64_t max_bot = 1, max_mid = 1, max_order = 32;
  bool dedupe = false;
  unsigned jobs = 1;
  std::string csv;
};

inline int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  const GammaSequence s = sequence_from_text(read_input(o.file, in));
  const ValidationReport r = validate_sequence(s);
  if (o.json) {
    out << to_text(validation_json(r));
  } else if (r.valid()) {
    out << "valid\n";
    if (r.degenerate) out << "degenerate: all four groups are trivial\n";
  } else {
    out << "invalid\n";
    for (const auto& e : r.signature_errors) out << "  - " << e << "\n";
    for (auto i : r.issues) out << "  - " << to_string(i) << "\n";
  }
  return r.valid() ? Ok : VerificationFailed;
}

inline int cmd_construct(const Options& o, std::ostream& out) {
  std::vector<FgAbGroup> g;
  for (const auto& text : o.groups) g.push_back(parse_group(text));
  auto need = [&](std::size_t n) {
    if (g.size() != n)
      throw UsageError("builder " + o.builder + " takes " + std::to_string(n) + " group argument" + (n == 1 ? "" : "s"));
  };
  auto build = [&]() -> GammaSequence {
    if (o.builder == "moore") {
      need(1);
      return moore(g[0]);
    }
    if (o.builder == "split") {
      need(2);
      return split_seq(g[0], g[1]);
    }
    if (o.builder == "free-top") {
      need(1);
      return free_top(o.rank, g[0]);
    }
    if (o.builder == "triple") {
      need(2);
      return triple_seq(o.rank, g[0], g[1]);
    }
    if (o.builder == "z4") {
      need(0);
      return z4_seq();
    }
    if (o.builder == "extension") {
      need(2);
      std::vector<int> ext;
      for (char c : o.ext) {
        if (c != '0' && c != '1') throw UsageError("--ext takes a string of 0 and 1");
        ext.push_back(c - '0');
      }
      return extension_sequence(g[0], g[1], ext);
    }
    throw UsageError("unknown builder '" + o.builder + "' (moore, split, free-top, triple, z4, extension)");
  };
  out << to_text(sequence_json(build()));
  return Ok;
}

inline int cmd_end(const Options& o, std::istream& in, std::ostream& out) {
  const GammaSequence s = sequence_from_text(read_input(o.file, in));
  const EndGammaAlgebra alg(s);
  const RingInvariants inv = alg.invariants();
  const bool listed = alg.order() <= max_listed_order;
  std::vector<GammaMorphism> elems;
  if (listed) elems = alg.elements();
  auto add = [&](std::size_t a, std::size_t b) { return alg.add(a, b); };
  auto mul = [&](std::size_t a, std::size_t b) { return alg.mul(a, b); };
  if (o.json) {
    Json j;
    j["invariants"] = invariants_json(inv);
    j["additive_group"] = alg.additive_group().to_string();
    if (listed) {
      Json e = Json::array();
      for (const auto& m : elems) {
        Json x;
        x["f_mid"] = matrix_json(m.f_mid.matrix());
        x["f_bot"] = matrix_json(m.f_bot.matrix());
        x["omega"] = matrix_json(m.omega->matrix());
        e.push_back(std::move(x));
      }
      j["elements"] = e;
      if (o.tables) {
        j["add"] = table_json(alg.order(), add);
        j["mul"] = table_json(alg.order(), mul);
      }
    }
    out << to_text(j);
    return Ok;
  }
  print_invariants(out, inv, alg.additive_group());
  if (!listed) {
    out << "elements: not listed above order " << max_listed_order << "\n";
    return Ok;
  }
  out << "elements (f_mid, f_bot; omega):\n";
  for (std::size_t k = 0; k < elems.size(); ++k)
    out << "  " << k << ": " << compact(elems[k].f_mid) << " " << compact(elems[k].f_bot) << "; "
        << compact(*elems[k].omega) << "\n";
  if (o.tables) {
    print_table(out, "addition", alg.order(), add);
    print_table(out, "multiplication", alg.order(), mul);
  }
  return Ok;
}

inline int cmd_aut(const Options& o, std::istream& in, std::ostream& out) {
  const GammaSequence s = sequence_from_text(read_input(o.file, in));
  const EndGammaAlgebra alg(s);
  const std::uint64_t units = alg.unit_count();
  const bool listed = units <= max_listed_order && alg.order() <= FiniteRing::max_order;
  UnitGroup u;
  if (listed) u = unit_group(alg.ring());
  auto mul = [&](std::size_t a, std::size_t b) { return u.mul(a, b); };
  if (o.json) {
    Json j;
    j["order"] = units;
    j["trivial"] = units == 1;
    if (listed) {
      Json e = Json::array();
      for (auto k : u.elements) {
        Json x;
        x["f_mid"] = matrix_json(alg.f_mid(k).matrix());
        x["f_bot"] = matrix_json(alg.f_bot(k).matrix());
        e.push_back(std::move(x));
      }
      j["elements"] = e;
      if (o.tables) j["mul"] = table_json(u.order(), mul);
    }
    out << to_text(j);
    return Ok;
  }
  out << "order: " << units << "\n"
      << "trivial: " << yes_no(units == 1) << "\n";
  if (!listed) {
    out << "elements: not listed above order " << max_listed_order << "\n";
    return Ok;
  }
  out << "elements (f_mid, f_bot):\n";
  for (std::size_t k = 0; k < u.order(); ++k)
    out << "  " << k << ": " << compact(alg.f_mid(u.elements[k])) << " " << compact(alg.f_bot(u.elements[k])) << "\n";
  if (o.tables) print_table(out, "multiplication", u.order(), mul);
  return Ok;
}

inline int cmd_analyze(const Options& o, std::istream& in, std::ostream& out) {
  const GammaSequence s = sequence_from_text(read_input(o.file, in));
  const EndGammaAlgebra alg(s);
  const RingInvariants inv = alg.invariants();
  Json verdicts = Json::array();
  std::vector<std::string> lines;
  for (auto p : o.primes) {
    if (!is_prime(Integer(p))) throw UsageError("not a prime: " + std::to_string(p));
    const std::uint64_t k = log_exact(inv.order, p);
    Json v;
    v["p"] = p;
    if (k == 0) {
      v["k"] = nullptr;
      v["verdict"] = "no";
      lines.push_back("F_" + std::to_string(p) + "^k: no (order is not a power of " + std::to_string(p) + ")");
    } else {
      std::string verdict;
      if (!fingerprint_allows_fpk(inv, p, k))
        verdict = "no";
      else if (alg.order() > FiniteRing::max_order)
        verdict = "unknown (above the table cap)";
      else
        verdict = yes_no(is_product_of_prime_fields(alg.ring(), p, k));
      v["k"] = k;
      v["verdict"] = verdict;
      lines.push_back("F_" + std::to_string(p) + "^" + std::to_string(k) + ": " + verdict);
    }
    verdicts.push_back(std::move(v));
  }
  if (o.json) {
    Json j;
    j["invariants"] = invariants_json(inv);
    j["additive_group"] = alg.additive_group().to_string();
    j["product_of_prime_fields"] = verdicts;
    out << to_text(j);
  } else {
    print_invariants(out, inv, alg.additive_group());
    for (const auto& l : lines) out << l << "\n";
  }
  return Ok;
}

inline int cmd_pullback_check(const Options& o, std::istream& in, std::ostream& out) {
  const GammaSequence s = sequence_from_text(read_input(o.file, in));
  const SequencePullbackData d = sequence_pullback_data(s);
  if (!s.h_bot.is_finite()) throw UsageError("pullback-check needs a finite h_bot");
  if (o.entry_bound < 0) throw UsageError("--entry-bound must be >= 0");
  const auto gs = enumerate_homs(s.h_bot, s.h_bot);
  const Homomorphism mid = Homomorphism::zero(s.h_mid, s.h_mid);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> entry(-o.entry_bound, o.entry_bound);
  std::uniform_int_distribution<std::size_t> pick(0, gs.size() - 1);
  const std::size_t r = s.h_top.num_factors();
  std::uint64_t members = 0, discrepancies = 0;
  Json bad = Json::array();
  for (std::uint64_t n = 0; n < o.samples; ++n) {
    IntMatrix m(r, r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) m(a, b) = entry(rng);
    const Homomorphism f(s.h_top, s.h_top, std::move(m));
    const Homomorphism& g = gs[pick(rng)];
    const bool member = membership_predicate(s, f, mid, g);
    const bool law = d.in_r1(f) && d.in_r2(g) && d.f1(f) == d.f2(g);
    members += member;
    if (member != law) {
      ++discrepancies;
      Json x;
      x["f"] = matrix_json(f.matrix());
      x["g"] = matrix_json(g.matrix());
      x["member"] = member;
      bad.push_back(std::move(x));
    }
  }
  if (o.json) {
    Json j;
    j["seed"] = o.seed;
    j["pairs"] = o.samples;
    j["members"] = members;
    j["discrepancies"] = bad;
    out << to_text(j);
  } else {
    out << "seed: " << o.seed << "\n"
        << "pairs: " << o.samples << "\n"
        << "members: " << members << "\n"
        << "discrepancies: " << discrepancies << "\n";
  }
  return discrepancies == 0 ? Ok : VerificationFailed;
}

inline int cmd_search(const Options& o, std::ostream& out) {
  SearchBounds b;
  b.max_bot_order = o.max_bot;
  b.max_mid_order = o.max_mid;
  b.primes = o.primes;
  b.dedupe = o.dedupe;
  b.jobs = o.jobs;
  const SurveyReport r = survey(b);
  if (!o.csv.empty()) {
    std::ofstream f(o.csv);
    if (!f) throw UsageError("cannot write " + o.csv);
    f << histogram_csv(r);
  }
  if (o.json) {
    out << to_text(survey_json(r));
  } else {
    out << "bounds: max_bot=" << b.max_bot_order << " max_mid=" << b.max_mid_order << " primes=" << join(b.primes, ",")
        << "\n"
        << "mode: " << (b.dedupe ? "one sequence per isomorphism class" : "all extension classes") << "\n"
        << "sequences examined: " << r.sequences_examined << "\n";
    if (r.iso_classes) out << "isomorphism classes: " << *r.iso_classes << "\n";
    out << "distinct End(gamma) fingerprints: " << r.ring_fingerprint_histogram.size() << "\n";
    if (r.fp3_hits.empty()) {
      out << "fp3 hits: none\n";
    } else {
      out << "fp3 hits:\n";
      for (const auto& h : r.fp3_hits) out << "  p=" << h.p << " " << h.record.descriptor() << "\n";
    }
    out << "trivial-Aut sequences:\n";
    for (const auto& t : r.trivial_aut_sequences)
      out << "  " << t.record.descriptor() << (t.degenerate ? " (degenerate)" : "") << "\n";
  }
  return r.fp3_hits.empty() ? Ok : VerificationFailed;
}

inline int cmd_fp2(const Options& o, std::ostream& out) {
  const Fp2Report r = fp2_not_end(o.max_order, o.primes);
  if (o.json) {
    out << to_text(fp2_json(r));
  } else {
    out << "max order: " << r.max_order << "\n"
        << "primes: " << join(r.primes, ",") << "\n"
        << "groups checked: " << r.groups_checked << "\n"
        << "rings of order p^2 built: " << r.rings_materialized << "\n";
    if (r.hits.empty()) {
      out << "hits: none\n";
    } else {
      out << "hits:\n";
      for (const auto& h : r.hits) out << "  End(" << h.group.to_string() << ") = F_" << h.p << "^2\n";
    }
  }
  return r.hits.empty() ? Ok : VerificationFailed;
}

inline int cmd_oracle_compare(const Options& o, std::istream& in, std::ostream& out) {
  const GammaSequence s = sequence_from_text(read_input(o.file, in));
  const OracleComparison c = compare_with_brute_force(s);
  if (o.json) {
    Json j;
    j["candidates"] = c.candidates;
    j["members"] = c.members;
    Json bad = Json::array();
    for (const auto& [fm, fb] : c.disagreements) {
      Json x;
      x["f_mid"] = matrix_json(fm.matrix());
      x["f_bot"] = matrix_json(fb.matrix());
      bad.push_back(std::move(x));
    }
    j["disagreements"] = bad;
    out << to_text(j);
  } else {
    out << "candidates: " << c.candidates << "\n"
        << "members: " << c.members << "\n"
        << "disagreements: " << c.disagreements.size() << "\n";
    for (const auto& [fm, fb] : c.disagreements) out << "  " << compact(fm) << " " << compact(fb) << "\n";
  }
  return c.disagreements.empty() ? Ok : VerificationFailed;
}

}  // namespace detail

/// Runs one command line (without the program name). Exit codes: 0 on
/// success, 1 when a verification fails, 2 on usage or input errors.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Gamma-sequences, their endomorphism rings, and bounded searches", "gammaseq"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  auto file_arg = [&](CLI::App* c) { c->add_option("file", o.file, "Sequence JSON file, - for stdin")->capture_default_str(); };
  auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.json, "Machine-readable output"); };
  auto primes_opt = [&](CLI::App* c) {
    c->add_option("--primes", o.primes, "Comma-separated primes")->delimiter(',')->capture_default_str();
  };

  CLI::App* validate = app.add_subcommand("validate", "Check exactness of a sequence");
  file_arg(validate);
  json_flag(validate);

  CLI::App* construct = app.add_subcommand("construct", "Emit a built-in sequence as JSON");
  construct->add_option("builder", o.builder, "moore, split, free-top, triple, z4 or extension")->required();
  construct->add_option("groups", o.groups, "Group expressions such as \"Z/2 + Z/4\"");
  construct->add_option("--rank", o.rank, "Rank of h_top for free-top and triple")->capture_default_str();
  construct->add_option("--ext", o.ext, "Extension class bits for extension");

  CLI::App* end = app.add_subcommand("end", "End(gamma): invariants, elements, tables");
  file_arg(end);
  json_flag(end);
  end->add_flag("--tables", o.tables, "Also print the addition and multiplication tables");

  CLI::App* aut = app.add_subcommand("aut", "Aut(gamma), the unit group of End(gamma)");
  file_arg(aut);
  json_flag(aut);
  aut->add_flag("--tables", o.tables, "Also print the multiplication table");

  CLI::App* analyze = app.add_subcommand("analyze", "Invariants of End(gamma) and F_p^k verdicts");
  file_arg(analyze);
  json_flag(analyze);
  primes_opt(analyze);

  CLI::App* pullback = app.add_subcommand("pullback-check", "Sample the pullback law on a sequence with h_mid = 0");
  file_arg(pullback);
  json_flag(pullback);
  pullback->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  pullback->add_option("--samples", o.samples, "Number of sampled (f, g) pairs")->capture_default_str();
  pullback->add_option("--entry-bound", o.entry_bound, "Entries of f are drawn from [-B, B]")->capture_default_str();

  CLI::App* search = app.add_subcommand("search", "Survey End(gamma) over all sequences within bounds");
  search->add_option("--max-bot", o.max_bot, "Largest order of h_bot")->capture_default_str();
  search->add_option("--max-mid", o.max_mid, "Largest order of h_mid")->capture_default_str();
  primes_opt(search);
  search->add_flag("--dedupe", o.dedupe, "One sequence per isomorphism class");
  search->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  search->add_option("--csv", o.csv, "Write the fingerprint histogram as CSV");
  json_flag(search);

  CLI::App* fp2 = app.add_subcommand("fp2-scan", "Look for End(G) = F_p^2");
  fp2->add_option("--max-order", o.max_order, "Largest order of G")->capture_default_str();
  primes_opt(fp2);
  json_flag(fp2);

  CLI::App* oracle = app.add_subcommand("oracle-compare", "Omega solver against brute force on End(H_mid) x End(H_bot)");
  file_arg(oracle);
  json_flag(oracle);

  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    bool known = false;
    for (const auto* c : app.get_subcommands({}))
      if (c->get_name() == args[0]) known = true;
    if (!known) {
      err << "error: unknown subcommand '" << args[0] << "'\n";
      return BadInput;
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return BadInput;
  }

  try {
    if (validate->parsed()) return detail::cmd_validate(o, in, out);
    if (construct->parsed()) return detail::cmd_construct(o, out);
    if (end->parsed()) return detail::cmd_end(o, in, out);
    if (aut->parsed()) return detail::cmd_aut(o, in, out);
    if (analyze->parsed()) return detail::cmd_analyze(o, in, out);
    if (pullback->parsed()) return detail::cmd_pullback_check(o, in, out);
    if (search->parsed()) return detail::cmd_search(o, out);
    if (fp2->parsed()) return detail::cmd_fp2(o, out);
    if (oracle->parsed()) return detail::cmd_oracle_compare(o, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return BadInput;
  }
  err << "error: no subcommand\n";
  return BadInput;
}

}  // namespace gammaseq::cli
