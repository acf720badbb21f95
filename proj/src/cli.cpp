#include "hertz/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "hertz/bfile.hpp"
#include "hertz/cluster.hpp"
#include "hertz/conjecture.hpp"
#include "hertz/distribution.hpp"
#include "hertz/rewrite.hpp"

namespace hertz::cli {

namespace {

using json = nlohmann::ordered_json;

/// Raised when a computed result disagrees with a reference.
struct Mismatch : Error {
  using Error::Error;
};

/// Raised for bad flag combinations found after parsing.
struct Usage : Error {
  using Error::Error;
};

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json coefficient_json(const MultiPoly& c) {
  if (auto k = c.as_constant(); k && k->get_den() == 1) return integer_json(k->get_num());
  return c.str();
}

json series_json(const TruncatedSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(coefficient_json(c));
  return {{"variable", "x"}, {"order", s.order()}, {"coefficients", coeffs}};
}

json perms_json(const std::vector<Permutation>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.str());
  return a;
}

std::string join(const std::vector<Permutation>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : " ") + p.str();
  return out;
}

std::vector<Permutation> parse_perms(const std::vector<std::string>& texts) {
  std::vector<Permutation> out;
  for (const auto& t : texts) out.push_back(Permutation::parse(t));
  return out;
}

std::vector<Integer> integer_coefficients(const TruncatedSeries& s) {
  auto ints = s.integers();
  if (!ints) throw Error("series has non-integer coefficients");
  return *ints;
}

struct Globals {
  bool json = false;
  int max_brute = kDistributionBruteCeiling;
  int max_classes = kClassesCeiling;
  int default_n = kDefaultOrder;
};

int default_order_from_env() {
  const char* env = std::getenv("HERTZ_DEFAULT_N");
  if (!env || !*env) return kDefaultOrder;
  try {
    std::size_t used = 0;
    int n = std::stoi(env, &used);
    if (used != std::string(env).size() || n < 0) throw std::invalid_argument(env);
    return n;
  } catch (const std::exception&) {
    throw Usage("HERTZ_DEFAULT_N must be a nonnegative integer, got \"" +
                std::string(env) + "\"");
  }
}

void emit(std::ostream& out, const Globals& g, const json& j,
          const std::string& text) {
  if (g.json)
    out << j.dump(2) << "\n";
  else
    out << text;
}

std::string series_text(const TruncatedSeries& s) { return s.str() + "\n"; }

// ---------------------------------------------------------------- omega/olap

int cmd_omega(const Globals& g, std::ostream& out, const std::string& a,
              const std::string& b) {
  const Permutation sigma = Permutation::parse(a);
  const Permutation tau = Permutation::parse(b);
  const MultiPoly omega = correlation_poly(sigma, tau);
  emit(out, g, {{"sigma", sigma.str()}, {"tau", tau.str()}, {"omega", omega.str()}},
       omega.str() + "\n");
  return kExitOk;
}

int cmd_olap(const Globals& g, std::ostream& out, const std::string& a,
             const std::string& b) {
  const Permutation sigma = Permutation::parse(a);
  const Permutation tau = Permutation::parse(b);
  const auto o = overlap_set(sigma, tau);
  emit(out, g, {{"sigma", sigma.str()}, {"tau", tau.str()}, {"olap", perms_json(o)}},
       join(o) + "\n");
  return kExitOk;
}

// ------------------------------------------------------------ cluster method

int cmd_cluster_gf(const Globals& g, std::ostream& out,
                   const std::vector<std::string>& pats, bool digraph) {
  const PatternSet t(parse_perms(pats));
  const RationalFunction c = cluster_gf(t);
  const TransferDigraph d = build_transfer_digraph(t);
  json j = {{"patterns", perms_json(t.patterns())},
            {"numerator", c.num().str()},
            {"denominator", c.den().str()},
            {"cluster_gf", c.str()}};
  std::string text;
  if (digraph) {
    json rows = json::array();
    for (std::size_t r = 0; r < d.weights.dim(); ++r) {
      json row = json::array();
      for (std::size_t col = 0; col < d.weights.dim(); ++col)
        row.push_back(d.weights(r, col).str());
      rows.push_back(row);
    }
    j["adjacency"] = rows;
    text += d.str();
  }
  text += c.str() + "\n";
  emit(out, g, j, text);
  return kExitOk;
}

void check_distribution(const PatternSet& t, const TruncatedSeries& s, int m,
                        int ceiling, std::ostream& out, bool quiet) {
  if (m > s.order()) throw Usage("--check exceeds -N");
  for (int n = 0; n <= m; ++n) {
    const MultiPoly brute = brute_force_distribution(t, n, ceiling);
    if (brute != s[n])
      throw Mismatch("brute force disagrees at n=" + std::to_string(n) + ": " +
                     brute.str() + " vs " + s[n].str());
  }
  if (!quiet) out << "check: brute force agrees for n <= " << m << "\n";
}

int cmd_dist(const Globals& g, std::ostream& out,
             const std::vector<std::string>& pats, int order,
             std::optional<int> check) {
  const PatternSet t(parse_perms(pats));
  const TruncatedSeries s = joint_distribution_series(t, order);
  if (check) check_distribution(t, s, *check, g.max_brute, out, g.json);
  json j = {{"patterns", perms_json(t.patterns())}, {"series", series_json(s)}};
  if (check) j["checked_up_to"] = *check;
  std::ostringstream text;
  for (int n = 0; n <= order; ++n) text << n << ": " << s[n].str() << "\n";
  emit(out, g, j, text.str());
  return kExitOk;
}

int cmd_avoid(const Globals& g, std::ostream& out,
              const std::vector<std::string>& pats, int order,
              std::optional<int> check) {
  const auto perms = parse_perms(pats);
  const AntichainCheck ac = check_antichain(perms, AntichainMode::Reduce);
  const TruncatedSeries s = avoider_series(*ac.set, order);
  if (check) {
    if (*check > order) throw Usage("--check exceeds -N");
    if (*check > g.max_brute) throw CeilingExceeded("avoid --check", *check, g.max_brute);
    const auto coeffs = integer_coefficients(s);
    for (int n = 0; n <= *check; ++n) {
      std::uint64_t count = 0;
      for_each_permutation(n, [&](std::span<const int> pi) {
        bool clean = true;
        for (const auto& p : perms)
          if (count_occurrences(p.values(), pi)) {
            clean = false;
            break;
          }
        if (clean) ++count;
      });
      if (Integer(static_cast<unsigned long>(count)) != coeffs[n])
        throw Mismatch("brute force disagrees at n=" + std::to_string(n) + ": " +
                       std::to_string(count) + " vs " + coeffs[n].get_str());
    }
  }
  json j = {{"patterns", perms_json(perms)}, {"series", series_json(s)}};
  if (!ac.dropped.empty()) j["redundant"] = perms_json(ac.dropped);
  if (check) j["checked_up_to"] = *check;
  emit(out, g, j, series_text(s));
  return kExitOk;
}

int cmd_end_in(const Globals& g, std::ostream& out,
               const std::vector<std::string>& pats, const std::string& alpha_text,
               int order) {
  const PatternSet t(parse_perms(pats));
  const Permutation alpha = Permutation::parse(alpha_text);
  const TruncatedSeries s = end_pattern_series(t, alpha, order);
  emit(out, g,
       {{"patterns", perms_json(t.patterns())},
        {"alpha", alpha.str()},
        {"series", series_json(s)}},
       series_text(s));
  return kExitOk;
}

// ------------------------------------------------------------------ rewrite

struct SystemChoice {
  std::string rules_file;
  std::string eq;
  std::string statistic;
  int nmax = 8;
};

struct LoadedSystem {
  RewriteSystem system;
  std::optional<Statistic> statistic;
};

LoadedSystem load_system(const SystemChoice& c) {
  if (c.rules_file.empty() == c.eq.empty())
    throw Usage("give exactly one of --rules FILE or --eq EQk");
  std::optional<Statistic> stat;
  if (!c.statistic.empty()) stat = Statistic::parse(c.statistic);
  if (!c.eq.empty()) {
    if (!stat) stat = builtin_statistic(c.eq);
    return {builtin_system(c.eq), stat};
  }
  std::ifstream in(c.rules_file);
  if (!in) throw Usage("cannot open rule file " + c.rules_file);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return {RewriteSystem::parse(text.str(), c.rules_file), stat};
  } catch (const ParseError& e) {
    throw Error(c.rules_file + ": " + e.what());
  }
}

std::string termination_line(const TerminationReport& t) {
  if (!t.terminating)
    return "not-terminating: " + t.witness_from->str() + " -> " + t.witness_to->str() +
           (t.statistic ? " violates " + *t.statistic : " closes a cycle");
  std::string line = "terminating-up-to-" + std::to_string(t.verified_up_to);
  line += t.statistic ? " (statistic " + *t.statistic + ")" : " (acyclicity scan)";
  return line;
}

std::string caveat(const TerminationReport& t) {
  return "caveat: termination was checked exhaustively on permutations of length <= " +
         std::to_string(t.verified_up_to) + " only; it is not proved for longer ones";
}

json termination_json(const TerminationReport& t) {
  json j = {{"method", t.method == TerminationReport::Method::AcyclicityScan
                           ? "acyclicity-scan"
                           : "statistic-certificate"},
            {"terminating", t.terminating},
            {"verified_up_to", t.verified_up_to}};
  if (t.statistic) j["statistic"] = *t.statistic;
  if (t.witness_from) j["witness"] = {t.witness_from->str(), t.witness_to->str()};
  return j;
}

json join_json(const JoinTrace& t) {
  json j = {{"left", t.left.str()}, {"right", t.right.str()}, {"joinable", t.joinable}};
  if (t.meet) j["meet"] = t.meet->str();
  return j;
}

json confluence_json(const ConfluenceReport& c) {
  json peaks = json::array();
  for (const auto& p : c.peaks) {
    json pairs = json::array();
    for (const auto& t : p.pairs) pairs.push_back(join_json(t));
    peaks.push_back({{"peak", p.peak.str()},
                     {"successors", perms_json(p.successors)},
                     {"pairs", pairs}});
  }
  json j = {{"verdict", verdict_name(c.verdict)}, {"peaks", peaks}};
  if (c.counterexample) {
    j["counterexample"] = c.counterexample->str();
    j["counterexample_pair"] = join_json(*c.counterexample_pair);
  }
  return j;
}

int cmd_rewrite_check(const Globals& g, std::ostream& out, const SystemChoice& c,
                      bool expect_confluent) {
  const LoadedSystem ls = load_system(c);
  const SystemAnalysis a = analyze_system(ls.system, c.nmax, ls.statistic);
  std::ostringstream text;
  text << verdict_name(a.confluence.verdict) << "\n"
       << termination_line(a.termination) << "\n"
       << caveat(a.termination) << "\n"
       << "olap: " << join(olap_of_system(ls.system)) << "\n";
  for (const auto& p : a.confluence.peaks)
    for (const auto& t : p.pairs) {
      text << "  " << p.peak.str() << ": " << t.left.str() << " , " << t.right.str();
      text << (t.joinable ? " joinable at " + t.meet->str() : std::string(" NOT joinable"))
           << "\n";
    }
  if (a.confluence.counterexample) {
    const auto& t = *a.confluence.counterexample_pair;
    text << "counterexample: " << t.left.str() << " <- "
         << a.confluence.counterexample->str() << " -> " << t.right.str() << "\n";
  }
  json j = {{"system", ls.system.name()},
            {"rules", [&] {
               json r = json::array();
               for (const auto& rule : ls.system.rules()) r.push_back(rule.str());
               return r;
             }()},
            {"olap", perms_json(olap_of_system(ls.system))},
            {"termination", termination_json(a.termination)},
            {"confluence", confluence_json(a.confluence)},
            {"caveat", caveat(a.termination)}};
  emit(out, g, j, text.str());
  if (expect_confluent && a.confluence.verdict != ConfluenceReport::Verdict::Confluent)
    return kExitMismatch;
  return kExitOk;
}

int cmd_rewrite_nf(const Globals& g, std::ostream& out, const SystemChoice& c,
                   const std::vector<std::string>& texts) {
  const LoadedSystem ls = load_system(c);
  const auto perms = parse_perms(texts);
  int longest = c.nmax;
  for (const auto& p : perms) longest = std::max(longest, p.size());
  const SystemAnalysis a = analyze_system(ls.system, longest, ls.statistic);
  json rows = json::array();
  std::ostringstream text;
  for (const auto& p : perms) {
    const NormalForm nf = normal_form(p, ls.system, a.termination, &a.confluence);
    rows.push_back({{"input", p.str()},
                    {"normal_form", nf.form.str()},
                    {"unique", nf.unique},
                    {"steps", nf.steps}});
    text << p.str() << " -> " << nf.form.str()
         << (nf.unique ? " (unique)" : " (strategy-dependent)") << "\n";
  }
  text << termination_line(a.termination) << "\n" << caveat(a.termination) << "\n";
  emit(out, g,
       {{"system", ls.system.name()},
        {"results", rows},
        {"termination", termination_json(a.termination)},
        {"caveat", caveat(a.termination)}},
       text.str());
  return kExitOk;
}

int cmd_rewrite_classes(const Globals& g, std::ostream& out, const SystemChoice& c,
                        int order, std::optional<int> check) {
  const LoadedSystem ls = load_system(c);
  int nmax = c.nmax;
  if (check) nmax = std::max(nmax, *check);
  const SystemAnalysis a = analyze_system(ls.system, nmax, ls.statistic);
  const TruncatedSeries s =
      class_count_series(ls.system, order, a.confluence, a.termination);
  json j = {{"system", ls.system.name()},
            {"series", series_json(s)},
            {"termination", termination_json(a.termination)},
            {"caveat", caveat(a.termination)}};
  std::ostringstream text;
  text << series_text(s);
  if (check) {
    if (*check > order) throw Usage("--check exceeds -N");
    const auto coeffs = integer_coefficients(s);
    json rows = json::array();
    for (int n = 1; n <= *check; ++n) {
      const auto uf = equivalence_classes_bruteforce(ls.system, n, false, g.max_classes);
      const auto nf = count_normal_forms(ls.system, n, a.termination, g.max_classes);
      const Integer ufi(static_cast<unsigned long>(uf.count));
      const Integer nfi(static_cast<unsigned long>(nf));
      if (ufi != coeffs[n] || nfi != coeffs[n])
        throw Mismatch("class counts disagree at n=" + std::to_string(n) +
                       ": union-find " + ufi.get_str() + ", normal forms " +
                       nfi.get_str() + ", series " + coeffs[n].get_str());
      rows.push_back({{"n", n}, {"count", integer_json(coeffs[n])}});
    }
    j["checked"] = rows;
    text << "check: union-find, normal forms and series agree for n <= " << *check
         << "\n";
  }
  text << caveat(a.termination) << "\n";
  emit(out, g, j, text.str());
  return kExitOk;
}

// ------------------------------------------------------------------- table2

int cmd_table2(const Globals& g, std::ostream& out, int order) {
  const std::vector<std::string> names = {"EQ2", "EQ3", "EQ4", "EQ5", "EQ6", "EQ7"};
  std::vector<std::vector<Integer>> columns;
  int nmax = 8;
  for (const auto& name : names) {
    const RewriteSystem r = builtin_system(name);
    const SystemAnalysis a = analyze_system(r, nmax, builtin_statistic(name));
    columns.push_back(
        integer_coefficients(class_count_series(r, order, a.confluence, a.termination)));
  }
  std::vector<std::size_t> width(names.size());
  for (std::size_t c = 0; c < names.size(); ++c) {
    width[c] = names[c].size();
    for (int n = 1; n <= order; ++n)
      width[c] = std::max(width[c], columns[c][n].get_str().size());
  }
  const std::size_t nwidth = std::max<std::size_t>(1, std::to_string(order).size());
  std::ostringstream text;
  text << std::setw(static_cast<int>(nwidth)) << "n";
  for (std::size_t c = 0; c < names.size(); ++c)
    text << "  " << std::setw(static_cast<int>(width[c])) << names[c];
  text << "\n";
  for (int n = 1; n <= order; ++n) {
    text << std::setw(static_cast<int>(nwidth)) << n;
    for (std::size_t c = 0; c < names.size(); ++c)
      text << "  " << std::setw(static_cast<int>(width[c])) << columns[c][n].get_str();
    text << "\n";
  }
  json cols = json::object();
  for (std::size_t c = 0; c < names.size(); ++c) {
    json a = json::array();
    for (int n = 1; n <= order; ++n) a.push_back(integer_json(columns[c][n]));
    cols[names[c]] = a;
  }
  emit(out, g, {{"first_index", 1}, {"order", order}, {"columns", cols}}, text.str());
  return kExitOk;
}

// -------------------------------------------------------------- conjectures

int cmd_conj_wilf(const Globals& g, std::ostream& out, std::ostream& err, int kmax,
                  int ceiling, bool show_polys) {
  if (ceiling > kWilfCeiling)
    err << "warning: raising the Wilf ceiling to " << ceiling
        << " enumerates " << ceiling << "! permutations\n";
  json rows = json::array();
  std::ostringstream text;
  bool ok = true;
  for (int k = 1; k <= kmax; ++k) {
    const WilfClasses w = wilf_autocorrelation_classes(k, ceiling);
    json row = {{"k", k}, {"a", w.count()}};
    text << "k=" << k << " a=" << w.count();
    if (k >= 3) {
      const std::uint64_t b = palindrome_prefix_count(k + 1);
      row["b_next"] = b;
      row["equal"] = b == w.count();
      ok = ok && b == w.count();
      text << " b(k+1)=" << b << (b == w.count() ? " equal" : " DIFFER");
    }
    text << "\n";
    if (show_polys) {
      json polys = json::array();
      for (const auto& p : w.polynomials) {
        polys.push_back(p.str());
        text << "  " << p.str() << "\n";
      }
      row["polynomials"] = polys;
    }
    rows.push_back(row);
  }
  emit(out, g, {{"rows", rows}, {"conjecture_holds", ok}}, text.str());
  return ok ? kExitOk : kExitMismatch;
}

int cmd_conj_palindrome(const Globals& g, std::ostream& out, int kmax) {
  json rows = json::array();
  std::ostringstream text;
  for (int k = 1; k <= kmax; ++k) {
    const std::uint64_t b = palindrome_prefix_count(k);
    rows.push_back({{"k", k}, {"b", b}});
    text << "k=" << k << " b=" << b << "\n";
  }
  emit(out, g, {{"rows", rows}}, text.str());
  return kExitOk;
}

int cmd_conj_bona(const Globals& g, std::ostream& out, int k, int nmax) {
  const BonaReport r = check_bona(k, nmax);
  json viol = json::array();
  std::ostringstream text;
  text << "k=" << k << " nmax=" << nmax << " patterns=" << r.patterns_checked << " "
       << (r.holds() ? "no violations" : "VIOLATED") << "\n";
  for (const auto& v : r.violations) {
    viol.push_back({{"tau", v.tau.str()},
                    {"n", v.n},
                    {"tau_count", integer_json(v.tau_count)},
                    {"id_count", integer_json(v.id_count)}});
    text << "  " << v.tau.str() << " n=" << v.n << ": " << v.tau_count.get_str()
         << " > " << v.id_count.get_str() << "\n";
  }
  json ids = json::array();
  for (const auto& c : r.id_counts) ids.push_back(integer_json(c));
  emit(out, g,
       {{"k", k},
        {"nmax", nmax},
        {"patterns_checked", r.patterns_checked},
        {"id_counts", ids},
        {"violations", viol},
        {"holds", r.holds()}},
       text.str());
  return r.holds() ? kExitOk : kExitMismatch;
}

int cmd_conj_mesh(const Globals& g, std::ostream& out, int nmax) {
  const auto rows = mesh_p_series_check(nmax);
  json jr = json::array();
  std::ostringstream text;
  bool ok = true;
  for (const auto& r : rows) {
    ok = ok && r.equal();
    jr.push_back({{"n", r.n},
                  {"count", integer_json(r.count)},
                  {"predicted", integer_json(r.predicted)},
                  {"equal", r.equal()}});
    text << "n=" << r.n << " count=" << r.count.get_str()
         << " predicted=" << r.predicted.get_str() << (r.equal() ? " ok" : " DIFFER")
         << "\n";
  }
  emit(out, g, {{"rows", jr}, {"conjecture_holds", ok}}, text.str());
  return ok ? kExitOk : kExitMismatch;
}

// ------------------------------------------------------------- oeis-compare

int cmd_oeis(const Globals& g, std::ostream& out, const std::string& path,
             const std::vector<std::string>& pats, const std::string& eq,
             std::optional<int> order) {
  if (pats.empty() == eq.empty()) throw Usage("give either -p patterns or --eq EQk");
  const BFile bfile = BFile::load(path);
  long last = 0;
  for (const auto& e : bfile.entries()) last = std::max(last, e.index);
  const int n = order ? *order : static_cast<int>(std::min<long>(last, 40));
  TruncatedSeries s = [&] {
    if (!pats.empty()) {
      const auto perms = parse_perms(pats);
      return avoider_series(*check_antichain(perms, AntichainMode::Reduce).set, n);
    }
    const RewriteSystem r = builtin_system(eq);
    const SystemAnalysis a = analyze_system(r, 8, builtin_statistic(eq));
    return class_count_series(r, n, a.confluence, a.termination);
  }();
  const CompareReport rep = oeis_compare(s, bfile);
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"n", r.index},
                    {"expected", integer_json(r.expected)},
                    {"actual", integer_json(r.actual)},
                    {"equal", r.equal()}});
  std::ostringstream text;
  if (rep.matches()) {
    text << "match: " << rep.rows.size() << " terms, n=" << rep.rows.front().index
         << ".." << rep.rows.back().index << "\n";
  } else {
    const CompareRow* m = rep.first_mismatch();
    text << "MISMATCH at n=" << m->index << ": b-file " << m->expected.get_str()
         << ", computed " << m->actual.get_str() << "\n";
  }
  emit(out, g, {{"bfile", path}, {"matches", rep.matches()}, {"rows", rows}},
       text.str());
  return rep.matches() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Hertzsprung pattern enumeration and pattern-rewriting toolkit", "hertz"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "Emit JSON instead of text");
  app.add_option("--max-brute", g.max_brute, "Ceiling for brute-force oracles")
      ->check(CLI::Range(0, kEnumerationCeiling));
  app.add_option("--max-classes", g.max_classes, "Ceiling for class enumeration")
      ->check(CLI::Range(0, kEnumerationCeiling));

  try {
    g.default_n = default_order_from_env();
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string a_text, b_text, alpha_text, bfile_path, eq_for_oeis;
  std::vector<std::string> patterns, perm_args;
  int order = g.default_n;
  std::optional<int> check;
  std::optional<int> oeis_order;
  bool digraph = false;
  bool expect_confluent = false;
  SystemChoice sys;
  int kmax = kWilfCeiling;
  int wilf_ceiling = kWilfCeiling;
  bool show_polys = false;
  int bona_k = 3;
  int bona_n = 12;
  int mesh_n = 10;
  int pal_k = 10;

  auto add_order = [&](CLI::App* sub) {
    sub->add_option("-N,--order", order, "Truncation order")->check(CLI::NonNegativeNumber);
  };

  auto* omega = app.add_subcommand("omega", "Correlation polynomial of two patterns");
  omega->add_option("sigma", a_text)->required();
  omega->add_option("tau", b_text)->required();

  auto* olap = app.add_subcommand("olap", "Overlap set of two patterns");
  olap->add_option("sigma", a_text)->required();
  olap->add_option("tau", b_text)->required();

  auto* cgf = app.add_subcommand("cluster-gf", "Cluster generating function");
  cgf->add_option("-p,--pattern", patterns, "Pattern (repeatable)")->required();
  cgf->add_flag("--digraph", digraph, "Also print the transfer digraph");

  auto* dist = app.add_subcommand("dist", "Joint distribution of occurrence counts");
  dist->add_option("-p,--pattern", patterns, "Pattern (repeatable)")->required();
  add_order(dist);
  dist->add_option("--check", check, "Compare with brute force up to this length");

  auto* avoid = app.add_subcommand("avoid", "Number of avoiders per length");
  avoid->add_option("-p,--pattern", patterns, "Pattern (repeatable)")->required();
  add_order(avoid);
  avoid->add_option("--check", check, "Compare with brute force up to this length");

  auto* endin = app.add_subcommand("end-in", "Avoiders except for a final occurrence");
  endin->add_option("-p,--pattern", patterns, "Pattern (repeatable)")->required();
  endin->add_option("--alpha", alpha_text, "Final pattern")->required();
  add_order(endin);

  auto* rewrite = app.add_subcommand("rewrite", "Pattern-rewriting systems");
  rewrite->require_subcommand(1);
  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--rules", sys.rules_file, "Rule file");
    sub->add_option("--eq", sys.eq, "Builtin system EQ1..EQ7");
    sub->add_option("--statistic", sys.statistic,
                    "Termination certificate, sigma:PAT or count:PAT");
    sub->add_option("--nmax", sys.nmax, "Termination scan length")
        ->check(CLI::Range(1, kTerminationCeiling));
  };
  auto* nf = rewrite->add_subcommand("nf", "Normal forms");
  add_system(nf);
  nf->add_option("perms", perm_args, "Permutations")->required();
  auto* rcheck = rewrite->add_subcommand("check", "Termination and confluence");
  add_system(rcheck);
  rcheck->add_flag("--expect-confluent", expect_confluent,
                   "Exit nonzero unless confluent");
  auto* classes = rewrite->add_subcommand("classes", "Equivalence-class counts");
  add_system(classes);
  add_order(classes);
  classes->add_option("--check", check, "Cross-check by enumeration up to this length");

  auto* table2 = app.add_subcommand("table2", "Class counts of EQ2..EQ7");
  add_order(table2);

  auto* conj = app.add_subcommand("conj", "Conjecture checks");
  conj->require_subcommand(1);
  auto* wilf = conj->add_subcommand("wilf", "Wilf classes against palindrome sets");
  wilf->add_option("--kmax", kmax, "Largest pattern length")->check(CLI::Range(1, 12));
  wilf->add_option("--ceiling", wilf_ceiling, "Enumeration ceiling")
      ->check(CLI::Range(1, 11));
  wilf->add_flag("--polys", show_polys, "List the autocorrelation polynomials");
  auto* pal = conj->add_subcommand("palindrome", "Palindrome prefix-set counts");
  pal->add_option("--kmax", pal_k, "Largest word length")->check(CLI::Range(1, 40));
  auto* bona = conj->add_subcommand("bona", "Avoider counts bounded by id_k");
  bona->add_option("-k", bona_k, "Pattern length")->check(CLI::Range(2, 10));
  bona->add_option("--nmax", bona_n, "Largest n")->check(CLI::Range(0, 40));
  auto* mesh = conj->add_subcommand("mesh-p", "Mesh pattern counts against x/(1+x^2)");
  mesh->add_option("--nmax", mesh_n, "Largest n")->check(CLI::Range(0, 20));

  auto* oeis = app.add_subcommand("oeis-compare", "Compare a series with a b-file");
  oeis->add_option("--bfile", bfile_path, "b-file path")->required();
  oeis->add_option("-p,--pattern", patterns, "Avoided pattern (repeatable)");
  oeis->add_option("--eq", eq_for_oeis, "Builtin system EQ1..EQ7");
  oeis->add_option("-N,--order", oeis_order, "Truncation order");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*omega) return cmd_omega(g, out, a_text, b_text);
    if (*olap) return cmd_olap(g, out, a_text, b_text);
    if (*cgf) return cmd_cluster_gf(g, out, patterns, digraph);
    if (*dist) return cmd_dist(g, out, patterns, order, check);
    if (*avoid) return cmd_avoid(g, out, patterns, order, check);
    if (*endin) return cmd_end_in(g, out, patterns, alpha_text, order);
    if (*nf) return cmd_rewrite_nf(g, out, sys, perm_args);
    if (*rcheck) return cmd_rewrite_check(g, out, sys, expect_confluent);
    if (*classes) return cmd_rewrite_classes(g, out, sys, order, check);
    if (*table2) return cmd_table2(g, out, order);
    if (*wilf) return cmd_conj_wilf(g, out, err, kmax, wilf_ceiling, show_polys);
    if (*pal) return cmd_conj_palindrome(g, out, pal_k);
    if (*bona) return cmd_conj_bona(g, out, bona_k, bona_n);
    if (*mesh) return cmd_conj_mesh(g, out, mesh_n);
    if (*oeis) return cmd_oeis(g, out, bfile_path, patterns, eq_for_oeis, oeis_order);
  } catch (const Mismatch& e) {
    err << "mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hertz::cli
