#include "jetdet_cli/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "jetdet/error.hpp"
#include "jetdet/groebner.hpp"
#include "jetdet/hilbert.hpp"
#include "jetdet/jet_ideals.hpp"
#include "jetdet/shelling.hpp"
#include "jetdet/sr_complex.hpp"
#include "jetdet_cli/report.hpp"

namespace jetdet::cli {

namespace {

struct Settings {
  std::string format = "text";
  std::string out_path;
  unsigned jobs = 1;
  bool allow_slow = false;
  std::size_t max_basis = 5000;
  unsigned max_degree = 40;
  std::size_t max_pairs = 5'000'000;
  std::size_t max_universe = 64;
  std::size_t max_nodes = 20'000'000;

  int m = 2;
  int n = 2;
  int r = 2;
  int k = 0;
  int maxdeg = 10;
  bool gamma = false;
  bool check_gamma = false;
  bool print_basis = false;
  std::string mode = "families";
  std::string source;
};

/// Result of one subcommand: the report plus an optional mismatch line.
struct Outcome {
  Report report;
  int code = kOk;
  std::string failure;  // printed to err when code != kOk
};

CompletionOptions completion_options(const Settings& s) {
  CompletionOptions o;
  o.max_basis_size = s.max_basis;
  o.max_degree = s.max_degree;
  o.max_pairs = s.max_pairs;
  return o;
}

void require_slow(const Settings& s, bool slow, const std::string& what) {
  if (slow && !s.allow_slow) throw UsageError(what + " is long-running; pass --allow-slow");
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string index_label(const std::vector<int>& index, int split) {
  std::string out;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (i) out += (static_cast<int>(i) == split) ? "|" : ",";
    out += std::to_string(index[i]);
  }
  return out;
}

void add_spec(Report& rep, const JetIdealSpec& spec) {
  rep.add("m", std::to_string(spec.m));
  rep.add("n", std::to_string(spec.n));
  rep.add("r", std::to_string(spec.r));
  rep.add("k", std::to_string(spec.k));
}

void add_series(Report& rep, const std::string& prefix, const HilbertSeries& s) {
  rep.add(prefix + "series", s.to_string());
  rep.add_list(prefix + "numerator", s.numerator().coeffs());
  rep.add(prefix + "denom_pow", std::to_string(s.denom_pow()));
  rep.add(prefix + "shift", std::to_string(s.shift()));
}

void add_hf(Report& rep, const std::vector<Integer>& values) {
  for (std::size_t d = 0; d < values.size(); ++d) rep.add("hf." + std::to_string(d), values[d].get_str());
}

JetIdealSpec spec_of(const Settings& s) {
  JetIdealSpec spec{s.m, s.n, s.r, s.k};
  spec.validate();
  return spec;
}

bool is_first_jets_3x3(const JetIdealSpec& s) { return s.m == 3 && s.r == 3 && s.k == 1; }

// ---------------------------------------------------------------- gen

Outcome cmd_gen(const Settings& s) {
  JetIdealSpec spec = spec_of(s);
  Outcome o;
  o.report.add("command", "gen");
  add_spec(o.report, spec);
  if (s.gamma) {
    if (spec.m != 2 || spec.r != 2 || spec.k != 2) throw UsageError("--gamma needs m=2, r=2, k=2");
    GammaBasis g = gamma_basis(spec.n);
    o.report.add("variables", std::to_string(g.table->size()));
    o.report.add("gamma_size", std::to_string(g.members.size()));
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      const auto& t = g.members[i];
      o.report.add("gamma." + std::to_string(i + 1), t.family + " " + join_ints(t.index) + " " + t.poly.to_string());
    }
    return o;
  }
  auto gens = jet_generators_tagged(spec);
  o.report.add("variables", std::to_string(spec.table()->size()));
  o.report.add("generators", std::to_string(gens.size()));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& t = gens[i];
    o.report.add("gen." + std::to_string(i + 1), t.family + " " + index_label(t.index, spec.r) + " " + t.poly.to_string());
  }
  return o;
}

// ---------------------------------------------------------------- groebner

Outcome cmd_groebner(const Settings& s) {
  JetIdealSpec spec = spec_of(s);
  if (s.check_gamma) {
    if (spec.m != 2 || spec.r != 2 || spec.k != 2) throw UsageError("--check-gamma needs m=2, r=2, k=2");
    require_slow(s, spec.n >= 6, "--check-gamma at n >= 6");
  }
  Outcome o;
  o.report.add("command", "groebner");
  add_spec(o.report, spec);

  CompletionStats stats;
  GeneratorSet gb = buchberger_completion(jet_generators(spec), completion_options(s), &stats);
  MonomialIdeal lead = leading_ideal(gb);
  const VariableTable& table = *gb.table();
  o.report.add("basis_size", std::to_string(gb.size()));
  o.report.add("pairs_created", std::to_string(stats.pairs_created));
  o.report.add("pairs_reduced", std::to_string(stats.pairs_reduced));
  o.report.add("zero_reductions", std::to_string(stats.zero_reductions));
  o.report.add("skipped_coprime", std::to_string(stats.skipped_coprime));
  o.report.add("skipped_chain", std::to_string(stats.skipped_chain));
  o.report.add("leading_ideal_size", std::to_string(lead.size()));
  for (std::size_t i = 0; i < lead.size(); ++i) o.report.add("lm." + std::to_string(i + 1), to_string(lead.gens()[i], table));
  if (s.print_basis) {
    for (std::size_t i = 0; i < gb.size(); ++i) o.report.add("basis." + std::to_string(i + 1), gb[i].to_string());
  }

  if (s.check_gamma) {
    GammaBasis gamma = gamma_basis(spec.n);
    GroebnerCheck check = is_groebner_basis(gamma.generator_set(), true, s.jobs);
    MonomialIdeal gamma_lead = leading_ideal(gamma.generator_set());
    bool same = gamma_lead == lead;
    o.report.add("gamma_size", std::to_string(gamma.members.size()));
    o.report.add("gamma_pairs_checked", std::to_string(check.pairs_checked));
    o.report.add("gamma_pairs_skipped", std::to_string(check.pairs_skipped));
    o.report.add("gamma_is_basis", check.is_basis ? "true" : "false");
    o.report.add("gamma_leading_ideal_matches", same ? "true" : "false");
    if (!check.is_basis) {
      const auto& w = *check.witness;
      o.code = kDisagreement;
      o.failure = "mismatch: S(" + std::to_string(w.i + 1) + "," + std::to_string(w.j + 1) +
                  ") has nonzero remainder " + w.remainder.to_string();
    } else if (!same) {
      o.code = kDisagreement;
      o.failure = "mismatch: leading ideal of the candidate basis differs from the completed basis";
    }
  }
  return o;
}

// ---------------------------------------------------------------- facets

std::string facet_line(const SimplicialComplex& c, const Facet& f) {
  std::string line;
  if (f.tag) {
    line = std::string(family_name(f.tag->family)) + "(" + std::to_string(f.tag->params[0]) + "," +
           std::to_string(f.tag->params[1]) + "," + std::to_string(f.tag->params[2]) + ")";
  }
  for (const auto& name : c.vertex_names(f.vertices)) {
    if (!line.empty()) line += ' ';
    line += name;
  }
  return line;
}

Outcome cmd_facets(const Settings& s) {
  if (s.n < 2) throw UsageError("facets needs n >= 2");
  bool brute = s.mode != "families";
  require_slow(s, brute && s.n >= 6, "brute-force facet enumeration at n >= 6");
  SimplicialComplex c = delta0(s.n);
  if (c.universe_size() > s.max_universe) {
    throw CapExceeded("vertex universe " + std::to_string(c.universe_size()) + " exceeds --max-universe",
                      "n=" + std::to_string(s.n));
  }
  Outcome o;
  o.report.add("command", "facets");
  o.report.add("n", std::to_string(s.n));
  o.report.add("mode", s.mode);
  o.report.add("vertices", std::to_string(c.universe_size()));

  std::vector<Facet> listed;
  if (s.mode == "families" || s.mode == "cross-check") listed = enumerate_facets_families(s.n);
  std::vector<VertexSet> bf;
  if (brute) {
    EnumerationOptions eo;
    eo.max_universe = s.max_universe;
    bf = enumerate_facets_bruteforce(c, eo);
  }
  if (s.mode == "brute") {
    for (auto v : bf) listed.push_back(Facet{v, std::nullopt});
  }

  std::size_t lo = SIZE_MAX, hi = 0;
  for (const auto& f : listed) {
    lo = std::min(lo, f.vertices.size());
    hi = std::max(hi, f.vertices.size());
  }
  o.report.add("facets", std::to_string(listed.size()));
  o.report.add("facet_size", listed.empty() ? "0" : lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi));

  if (s.mode == "cross-check") {
    std::vector<VertexSet> fam;
    for (const auto& f : listed) fam.push_back(f.vertices);
    std::sort(fam.begin(), fam.end(), [](VertexSet a, VertexSet b) { return lex_compare(a, b) < 0; });
    bool distinct = std::adjacent_find(fam.begin(), fam.end()) == fam.end();
    bool equal = fam == bf;
    o.report.add("bruteforce_facets", std::to_string(bf.size()));
    o.report.add("families_disjoint", distinct ? "true" : "false");
    o.report.add("families_equal_bruteforce", equal ? "true" : "false");
    if (!equal || !distinct) {
      o.code = kDisagreement;
      o.failure = "mismatch: family facets (" + std::to_string(fam.size()) + ") differ from brute force (" +
                  std::to_string(bf.size()) + ")";
    }
  }
  for (std::size_t i = 0; i < listed.size(); ++i) o.report.add("facet." + std::to_string(i + 1), facet_line(c, listed[i]));
  return o;
}

// ---------------------------------------------------------------- shelling

Outcome cmd_shelling(const Settings& s) {
  if (s.n < 2) throw UsageError("shelling needs n >= 2");
  ShellingOrder order = ShellingOrder::star(enumerate_facets_families(s.n));
  ShellingVerdict verdict = verify_shelling(order);
  Outcome o;
  o.report.add("command", "shelling");
  o.report.add("n", std::to_string(s.n));
  o.report.add("facets", std::to_string(order.facets.size()));
  o.report.add("verdict", verdict.valid ? "valid" : "invalid");
  if (!verdict.valid) {
    o.report.add("reason", verdict.reason);
    o.code = kDisagreement;
    o.failure = "mismatch: *-order is not a shelling: " + verdict.reason;
    return o;
  }
  HVector h = h_vector(order);
  o.report.add_list("h", h.h);
  FamilyHTable table = h_by_family(order);
  for (FacetFamily f : {FacetFamily::kF, FacetFamily::kE, FacetFamily::kD, FacetFamily::kC, FacetFamily::kA}) {
    o.report.add_list(std::string("h.") + family_name(f), table.at(f));
  }
  add_series(o.report, "", series_from_shelling(h, 3 * s.n + 3));
  return o;
}

// ---------------------------------------------------------------- hilbert

Outcome cmd_hilbert(const Settings& s) {
  Outcome o;
  o.report.add("command", "hilbert");
  o.report.add("source", s.source);
  if (s.maxdeg < 0) throw UsageError("--maxdeg must be non-negative");

  std::optional<HilbertSeries> series;
  if (s.source == "shelling") {
    if (s.n < 2) throw UsageError("--source shelling needs n >= 2");
    o.report.add("n", std::to_string(s.n));
    series = series_from_shelling(h_vector(ShellingOrder::star(enumerate_facets_families(s.n))), 3 * s.n + 3);
  } else if (s.source == "eq1") {
    // r is the minor size, as everywhere else on the command line
    if (s.r < 1) throw UsageError("--source eq1 needs r >= 1");
    o.report.add("m", std::to_string(s.m));
    o.report.add("n", std::to_string(s.n));
    o.report.add("r", std::to_string(s.r));
    series = closed_form_conca_herzog(s.m, s.n, s.r - 1);
  } else if (s.source == "eq2") {
    o.report.add("m", std::to_string(s.m));
    o.report.add("n", std::to_string(s.n));
    series = closed_form_first_jets_2minors(s.m, s.n);
  } else if (s.source == "eq3") {
    o.report.add("n", std::to_string(s.n));
    series = closed_form_first_jets_3minors(s.n);
  } else if (s.source == "thm61") {
    o.report.add("n", std::to_string(s.n));
    series = closed_form_second_jets_2x_n(s.n);
  } else {
    JetIdealSpec spec = spec_of(s);
    require_slow(s, is_first_jets_3x3(spec), "the 3x3 first-jet pipeline");
    add_spec(o.report, spec);
    CompletionOptions co = completion_options(s);
    co.degree_bound = static_cast<unsigned>(s.maxdeg);
    GeneratorSet gb = buchberger_completion(jet_generators(spec), co);
    MonomialIdeal lead = leading_ideal(gb);
    OracleOptions oo;
    oo.max_nodes = s.max_nodes;
    HilbertFunction hf = hilbert_function_oracle(lead, s.maxdeg, oo);
    o.report.add("maxdeg", std::to_string(s.maxdeg));
    o.report.add("basis_size", std::to_string(gb.size()));
    o.report.add("leading_ideal_size", std::to_string(lead.size()));
    add_hf(o.report, hf.values);
    return o;
  }
  add_series(o.report, "", *series);
  o.report.add("maxdeg", std::to_string(s.maxdeg));
  add_hf(o.report, series->expand(s.maxdeg));
  return o;
}

// ---------------------------------------------------------------- conjecture

Outcome cmd_conjecture(const Settings& s) {
  JetIdealSpec spec = spec_of(s);
  if (s.maxdeg < 0) throw UsageError("--maxdeg must be non-negative");
  require_slow(s, is_first_jets_3x3(spec), "the 3x3 first-jet pipeline");
  ConjectureOptions co;
  co.completion = completion_options(s);
  co.oracle.max_nodes = s.max_nodes;
  ConjectureReport rep = check_conjecture(spec, s.maxdeg, co);

  Outcome o;
  o.report.add("command", "conjecture");
  add_spec(o.report, spec);
  o.report.add("maxdeg", std::to_string(s.maxdeg));
  o.report.add("case", rep.proven_case ? "proven" : "exploratory");
  add_series(o.report, "predicted_", rep.predicted);
  if (rep.status == ConjectureStatus::kCapped) {
    o.report.add("status", "capped");
    o.code = kCapped;
    o.failure = "error[cap]: " + rep.cap_message;
    return o;
  }
  o.report.add("basis_size", std::to_string(rep.basis_size));
  o.report.add("basis_truncated_at", rep.basis_truncated_at ? std::to_string(*rep.basis_truncated_at) : "none");
  o.report.add("leading_ideal_size", std::to_string(rep.leading_ideal_size));
  for (std::size_t d = 0; d < rep.computed.values.size(); ++d) {
    const Integer& c = rep.computed.values[d];
    const Integer& p = rep.predicted_values[d];
    o.report.add("degree." + std::to_string(d),
                 "computed:" + c.get_str() + " predicted:" + p.get_str() + (c == p ? " ok" : " differ"));
  }
  if (rep.status == ConjectureStatus::kAgrees) {
    o.report.add("status", "agrees");
  } else {
    o.report.add("status", "disagrees");
    o.code = kDisagreement;
    o.failure = "mismatch: first divergence at degree " + std::to_string(*rep.comparison.first_divergence) +
                ": predicted " + rep.comparison.expected.get_str() + ", computed " + rep.comparison.actual.get_str();
  }
  return o;
}

void add_shape(CLI::App* sub, Settings& s, bool m, bool r, bool k) {
  if (m) sub->add_option("--m", s.m, "Rows of the generic matrix")->capture_default_str();
  sub->add_option("--n", s.n, "Columns of the generic matrix")->capture_default_str();
  if (r) sub->add_option("--r", s.r, "Minor size")->capture_default_str();
  if (k) sub->add_option("--k", s.k, "Jet order")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Jet schemes of determinantal varieties: Groebner bases, facets, shellings, Hilbert series", "jetdet"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
  app.add_option("--out", s.out_path, "Write the report to this file");
  app.add_option("--jobs", s.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--allow-slow", s.allow_slow, "Permit long-running cases");
  app.add_option("--max-basis", s.max_basis, "Cap on Groebner basis size")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-degree", s.max_degree, "Cap on basis element degree")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-pairs", s.max_pairs, "Cap on S-pairs processed")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-universe", s.max_universe, "Cap on vertex count")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-nodes", s.max_nodes, "Cap on Hilbert oracle recursion nodes")->check(CLI::PositiveNumber)->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Generators of the jet ideal");
  add_shape(gen, s, true, true, true);
  gen->add_flag("--gamma", s.gamma, "Print the explicit basis for m=2, r=2, k=2 instead");

  auto* gb = app.add_subcommand("groebner", "Complete the generators to a Groebner basis");
  add_shape(gb, s, true, true, true);
  gb->add_flag("--check-gamma", s.check_gamma, "Also verify the explicit basis for m=2, r=2, k=2");
  gb->add_flag("--print-basis", s.print_basis, "Print basis polynomials");

  auto* fac = app.add_subcommand("facets", "Facets of the Stanley-Reisner complex of the second-jet 2x2 leading ideal");
  add_shape(fac, s, false, false, false);
  fac->add_option("--mode", s.mode, "families, brute or cross-check")
      ->check(CLI::IsMember({"families", "brute", "cross-check"}))
      ->capture_default_str();

  auto* sh = app.add_subcommand("shelling", "Verify the *-order shelling and report h-vectors");
  add_shape(sh, s, false, false, false);

  auto* hil = app.add_subcommand("hilbert", "Hilbert series from a closed form, a shelling, or the oracle");
  add_shape(hil, s, true, true, true);
  hil->add_option("--source", s.source, "shelling, eq1, eq2, eq3, thm61 or oracle")
      ->required()
      ->check(CLI::IsMember({"shelling", "eq1", "eq2", "eq3", "thm61", "oracle"}));
  hil->add_option("--maxdeg", s.maxdeg, "Last degree of the Hilbert function table")->capture_default_str();

  auto* conj = app.add_subcommand("conjecture", "Compare a jet ideal against the power of the classical series");
  add_shape(conj, s, true, true, true);
  conj->add_option("--maxdeg", s.maxdeg, "Last degree compared")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error[usage]: " << msg << '\n';
    return kUsage;
  }

  Format format = s.format == "structured" ? Format::kStructured : Format::kText;
  Outcome o;
  try {
    if (gen->parsed()) {
      o = cmd_gen(s);
    } else if (gb->parsed()) {
      o = cmd_groebner(s);
    } else if (fac->parsed()) {
      o = cmd_facets(s);
    } else if (sh->parsed()) {
      o = cmd_shelling(s);
    } else if (hil->parsed()) {
      o = cmd_hilbert(s);
    } else {
      o = cmd_conjecture(s);
    }
  } catch (const UsageError& e) {
    err << "error[usage]: " << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error[cap]: " << e.what() << "; " << e.partial_state() << '\n';
    return kCapped;
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << '\n';
    return kDisagreement;
  }

  if (!s.out_path.empty()) {
    std::ofstream file(s.out_path);
    if (!file) {
      err << "error[usage]: cannot open " << s.out_path << " for writing\n";
      return kUsage;
    }
    o.report.write(file, format);
  } else {
    o.report.write(out, format);
  }
  if (o.code != kOk) err << o.failure << '\n';
  return o.code;
}

}  // namespace jetdet::cli
