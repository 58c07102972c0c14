#include "cli.hpp"

#include "gramcalc/bijection.hpp"
#include "gramcalc/grammar.hpp"
#include "gramcalc/identities.hpp"
#include "gramcalc/json_io.hpp"
#include "gramcalc/labeling.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace gramcalc::cli {

namespace {

struct Options {
  std::string stat, method = "brute", format, grammar, seed, formula, scheme, kind, map, perm, tree;
  std::string suite = "all";
  int n = 0;
  int order = 12;
  int n_max = 8;
  bool chain = false;
  bool trace = false;
};

Grammar grammar_arg(const std::string& text) {
  if (text.starts_with("inline:")) return Grammar::parse(std::string_view(text).substr(7));
  return Grammar::preset(text);
}

IncreasingTree tree_arg(std::string text) {
  if (text.starts_with("{")) return tree_from_json(Json::parse(text));
  std::erase_if(text, [](char c) { return c == '[' || c == ']' || c == ' '; });
  return IncreasingTree::parse(text);
}

void dump(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---- triangle

int cmd_triangle(const Options& o, std::ostream& out) {
  const StatKind kind = stat_from_name(o.stat);
  const TriangleMethod method = o.method == "recurrence" ? TriangleMethod::recurrence : TriangleMethod::brute;
  std::vector<StatTriangle> rows;
  for (int m = 1; m <= o.n; ++m) rows.push_back(triangle(kind, m, method));

  if (o.format == "json") {
    Json rs = Json::array();
    for (const auto& r : rows) rs.push_back(to_json(r));
    dump(out, {{"stat", std::string(stat_name(kind))}, {"method", o.method}, {"triangles", rs}});
  } else if (o.format == "csv") {
    out << "n,k,count\n";
    for (const auto& r : rows) {
      const auto [lo, hi] = valid_range(kind, r.n);
      for (int k = lo; k <= hi; ++k) out << r.n << ',' << k << ',' << r.count(k) << '\n';
    }
  } else {
    int kmax = 0;
    std::size_t width = 1;
    for (const auto& r : rows) {
      kmax = std::max(kmax, valid_range(kind, r.n).second);
      for (const auto& c : r.counts) width = std::max(width, c.get_str().size());
    }
    out << stat_name(kind) << " (" << o.method << ")\n";
    out << std::setw(3) << "n\\k";
    for (int k = 0; k <= kmax; ++k) out << ' ' << std::setw(static_cast<int>(width)) << k;
    out << '\n';
    for (const auto& r : rows) {
      const auto [lo, hi] = valid_range(kind, r.n);
      out << std::setw(3) << r.n;
      for (int k = 0; k <= kmax; ++k)
        out << ' ' << std::setw(static_cast<int>(width)) << (k >= lo && k <= hi ? r.count(k).get_str() : "");
      out << '\n';
    }
  }
  return kExitOk;
}

// ---- derive / series

int cmd_derive(const Options& o, std::ostream& out) {
  const Grammar g = grammar_arg(o.grammar);
  const LaurentPoly seed = parse_poly(o.seed);
  const std::vector<LaurentPoly> chain = derivative_chain(g, seed, o.n);
  if (o.format == "json") {
    Json j = {{"grammar", g.to_string()}, {"seed", to_json(seed)}, {"n", o.n}, {"result", to_json(chain.back())}};
    if (o.chain) {
      j["chain"] = Json::array();
      for (const auto& p : chain) j["chain"].push_back(to_json(p));
    }
    dump(out, j);
  } else if (o.chain) {
    for (std::size_t k = 0; k < chain.size(); ++k) out << k << ": " << to_string(chain[k]) << '\n';
  } else {
    out << to_string(chain.back()) << '\n';
  }
  return kExitOk;
}

int cmd_series(const Options& o, std::ostream& out) {
  Series s;
  if (o.formula == "gen") {
    if (o.grammar.empty() || o.seed.empty()) throw std::invalid_argument("--formula gen needs --grammar and --seed");
    s = gen_series(grammar_arg(o.grammar), parse_poly(o.seed), o.order);
  } else {
    s = closed_form(o.formula, o.order);
  }
  if (o.format == "json")
    dump(out, {{"formula", o.formula}, {"series", to_json(s)}});
  else
    out << to_string(s);
  return kExitOk;
}

// ---- labelings

int cmd_label(const Options& o, std::ostream& out) {
  const Permutation sigma = Permutation::parse(o.perm);
  const LabelSeq ls = o.scheme == "a" ? a_labeling(sigma) : o.scheme == "l" ? l_labeling(sigma) : w_labeling(sigma);
  if (o.format == "json") {
    Json labels = Json::array();
    for (Label l : ls.labels) labels.push_back(std::string(1, label_symbol(l)));
    dump(out, {{"perm", to_json(sigma)}, {"scheme", o.scheme}, {"labels", labels}, {"weight", to_json(label_weight(ls))}});
  } else {
    out << render_labeled(sigma, ls) << '\n' << "weight: " << to_string(label_weight(ls)) << '\n';
  }
  return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const Permutation sigma = Permutation::parse(o.perm);
  const bool lw = o.kind == "lw";
  const Decomposition d = decompose(lw ? DecompositionKind::LW : DecompositionKind::AL, sigma);
  if (o.format == "json") {
    Json j = {{"perm", to_json(sigma)}, {"kind", o.kind}, {"blocks", d.blocks}};
    if (lw)
      j["block_peak_sum"] = lw_block_peak_sum(sigma);
    else
      j["block_weight"] = to_json(al_block_weight(sigma));
    dump(out, j);
  } else {
    out << to_string(d) << '\n';
    if (lw)
      out << "block peak sum: " << lw_block_peak_sum(sigma) << '\n';
    else
      out << "block weight: " << to_string(al_block_weight(sigma)) << '\n';
  }
  return kExitOk;
}

// ---- bijections

struct Transport {
  StatKind perm_stat;
  std::string tree_stat;
  int perm_value;
  int tree_value;
  int transported;
};

Transport transport(BijectionKind kind, const Permutation& sigma, const IncreasingTree& t) {
  switch (kind) {
    case BijectionKind::updown: {
      const int j = even_nonroot_count(t);
      return {StatKind::updownrun, "even_nonroot", stat(StatKind::updownrun, sigma), j, j};
    }
    case BijectionKind::leftpeak: {
      const int j = even_vertex_count(t);
      return {StatKind::leftpeak, "even_vertices", stat(StatKind::leftpeak, sigma), j, (j - 1) / 2};
    }
    case BijectionKind::exterior:
    case BijectionKind::unified: {
      const int j = even_nonroot_count(t);
      return {StatKind::exteriorpeak, "even_nonroot", stat(StatKind::exteriorpeak, sigma), j, (j + 1) / 2};
    }
  }
  throw std::logic_error("unknown bijection kind");
}

int cmd_biject(const Options& o, std::ostream& out) {
  const BijectionKind kind = bijection_from_name(o.map);
  const bool forward = !o.perm.empty();
  const Permutation sigma = forward ? Permutation::parse(o.perm) : phi_inverse(kind, tree_arg(o.tree));
  const InsertionTrace tr = phi_trace(kind, sigma);
  const Transport st = transport(kind, sigma, tr.tree);
  const LaurentPoly perm_weight = label_weight(driving_labeling(kind, sigma));
  const LaurentPoly tree_weight = transported_tree_weight(kind, tr.tree);

  if (o.format == "json") {
    Json j = {{"map", std::string(bijection_name(kind))},
              {"input", forward ? "perm" : "tree"},
              {"perm", to_json(sigma)},
              {"tree", to_json(tr.tree)},
              {"statistics",
               {{"perm", {{"name", std::string(stat_name(st.perm_stat))}, {"value", st.perm_value}}},
                {"tree", {{"name", st.tree_stat}, {"value", st.tree_value}, {"transported", st.transported}}}}},
              {"weight", {{"perm", to_json(perm_weight)}, {"tree", to_json(tree_weight)}}}};
    if (o.trace) {
      Json steps = Json::array();
      for (const auto& s : tr.steps)
        steps.push_back({{"element", s.element},
                         {"position", s.position},
                         {"label", std::string(1, label_symbol(s.label))},
                         {"parent", s.parent}});
      j["trace"] = steps;
    }
    dump(out, j);
    return kExitOk;
  }

  out << (forward ? tr.tree.to_string() : sigma.to_string()) << '\n';
  out << stat_name(st.perm_stat) << "(sigma) = " << st.perm_value << ", " << st.tree_stat << "(T) = " << st.tree_value
      << '\n';
  out << "weight: " << to_string(perm_weight) << '\n';
  if (o.trace) out << render_trace(tr);
  return kExitOk;
}

// ---- verify

int cmd_verify(const Options& o, std::ostream& out) {
  const VerifyParams params{o.n_max, o.order};
  std::vector<IdentityCheck> checks;
  if (o.suite == "all") {
    checks = verify_all(params);
  } else {
    std::stringstream ss(o.suite);
    std::vector<std::string> ids;
    for (std::string id; std::getline(ss, id, ',');)
      if (!id.empty()) ids.push_back(id);
    for (const auto& id : ids) identity_description(id);  // reject unknown ids before running anything
    for (const auto& id : ids) checks.push_back(verify(id, params));
  }
  const auto passed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });

  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& c : checks) j.push_back(to_json(c));
    dump(out, j);
  } else {
    std::size_t width = 2;
    for (const auto& c : checks) width = std::max(width, c.id.size());
    for (const auto& c : checks) {
      out << std::left << std::setw(static_cast<int>(width)) << c.id << "  " << (c.pass ? "PASS" : "FAIL") << "  "
          << c.detail << '\n';
      if (!c.pass) out << std::string(width + 8, ' ') << "witness: " << c.witness << '\n';
    }
    out << passed << '/' << checks.size() << " passed\n";
  }
  return passed == static_cast<std::ptrdiff_t>(checks.size()) ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grammatical calculus for permutation statistics", "gramcalc"};
  app.require_subcommand(1);
  Options o;
  const auto formats = [](std::initializer_list<std::string> fs) { return CLI::IsMember(std::vector<std::string>(fs)); };

  auto* tri = app.add_subcommand("triangle", "Statistic distribution over S_1..S_n");
  tri->add_option("--stat", o.stat, "leftpeak|interiorpeak|exteriorpeak|updownrun|altrun")
      ->required()
      ->check(CLI::IsMember({"leftpeak", "interiorpeak", "exteriorpeak", "updownrun", "altrun", "updown", "alt"}));
  tri->add_option("--n", o.n)->required()->check(CLI::Range(1, 13));
  tri->add_option("--method", o.method)->check(CLI::IsMember({"brute", "recurrence"}));
  tri->add_option("--format", o.format)->check(formats({"table", "json", "csv"}));

  auto* der = app.add_subcommand("derive", "Iterated formal derivative D^n(seed)");
  der->add_option("--grammar", o.grammar, "peak|run|h|uv|euler|andre|inline:<rules>")->required();
  der->add_option("--seed", o.seed)->required();
  der->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  der->add_flag("--chain", o.chain, "Print D^0..D^n");
  der->add_option("--format", o.format)->check(formats({"text", "json"}));

  auto* ser = app.add_subcommand("series", "Truncated generating function");
  ser->add_option("--formula", o.formula, "closed-form id, or gen with --grammar and --seed")->required();
  ser->add_option("--order", o.order)->check(CLI::NonNegativeNumber);
  ser->add_option("--grammar", o.grammar);
  ser->add_option("--seed", o.seed);
  ser->add_option("--format", o.format)->check(formats({"text", "json"}));

  auto* lab = app.add_subcommand("label", "Grammatical labeling of a permutation");
  lab->add_option("--scheme", o.scheme)->required()->check(CLI::IsMember({"a", "l", "w"}));
  lab->add_option("--perm", o.perm)->required();
  lab->add_option("--format", o.format)->check(formats({"text", "json"}));

  auto* dec = app.add_subcommand("decompose", "LW or AL block decomposition");
  dec->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"lw", "al"}));
  dec->add_option("--perm", o.perm)->required();
  dec->add_option("--format", o.format)->check(formats({"text", "json"}));

  auto* bij = app.add_subcommand("biject", "Permutation to increasing tree and back");
  bij->add_option("--map", o.map)->required()->check(CLI::IsMember({"updown", "leftpeak", "exterior", "unified"}));
  auto* perm_opt = bij->add_option("--perm", o.perm);
  auto* tree_opt = bij->add_option("--tree", o.tree, "parent array 0,1,0,... or {\"n\":..,\"parent\":[..]}");
  perm_opt->excludes(tree_opt);
  bij->add_flag("--trace", o.trace);
  bij->add_option("--format", o.format)->check(formats({"text", "json"}));

  auto* ver = app.add_subcommand("verify", "Run identity checks");
  ver->add_option("--suite", o.suite, "all or comma-separated ids");
  ver->add_option("--nmax", o.n_max)->check(CLI::PositiveNumber);
  ver->add_option("--order", o.order)->check(CLI::PositiveNumber);
  ver->add_option("--format", o.format)->check(formats({"table", "json"}));

  try {
    app.parse(argc, argv);
    if (bij->parsed() && o.perm.empty() && o.tree.empty()) throw CLI::RequiredError("--perm or --tree");
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (tri->parsed()) return cmd_triangle(o, out);
    if (der->parsed()) return cmd_derive(o, out);
    if (ser->parsed()) return cmd_series(o, out);
    if (lab->parsed()) return cmd_label(o, out);
    if (dec->parsed()) return cmd_decompose(o, out);
    if (bij->parsed()) return cmd_biject(o, out);
    return cmd_verify(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gramcalc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gramcalc::cli
