#include "growth_cli/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "growth/affineweyl.hpp"
#include "growth/conecount.hpp"
#include "growth/errors.hpp"
#include "growth/finiteweyl.hpp"
#include "growth/pipeline.hpp"
#include "growth/serialize.hpp"
#include "growth_cli/fixtures.hpp"

namespace growth::cli {

std::vector<int> parse_ids(std::string_view text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("bad subset id '" + token + "'");
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t')
      flush();
    else if (c != '{' && c != '}' && c != '[' && c != ']')
      token += c;
  }
  flush();
  return out;
}

Subset to_subset(const std::vector<int>& ids, int rank) {
  Subset s = 0;
  for (int id : ids) {
    if (id < 1 || id > rank)
      throw std::invalid_argument("subset id " + std::to_string(id) + " outside 1.." + std::to_string(rank));
    s |= singleton(id - 1);
  }
  return s;
}

namespace {

using nlohmann::json;

json ids_json(Subset s) { return to_ids(s); }

std::string render(const RatFun& r, const std::string& format) {
  if (format == "latex") return to_latex(r);
  return to_text(r);
}

std::string render(const IntPoly& p, const std::string& format) {
  if (format == "latex") return to_latex(p);
  return to_text(p);
}

json series_json(const RatFun& r) {
  json j = to_json(r);
  return j;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(1) << '\n'; }

Subset subset_arg(const std::optional<std::vector<int>>& ids, int rank, Subset fallback) {
  return ids ? to_subset(*ids, rank) : fallback;
}

PipelineOptions pipeline_options(const Command& cmd) {
  PipelineOptions opts;
  opts.cross_check = cmd.cross_check;
  opts.cache_dir = cmd.cache_dir;
  return opts;
}

int report_exit(const Report& rep, const Command& cmd, std::ostream& out) {
  if (cmd.format == "json")
    print_json(out, rep.to_json());
  else
    out << rep.to_text();
  return rep.all_passed() ? kOk : kMismatch;
}

int run_cartan(const Command& cmd, std::ostream& out) {
  const auto rs = RootSystem::from_label(cmd.type_label);
  const int n = rs.rank();
  if (cmd.format == "json") {
    json c = json::array();
    for (int i = 0; i < n; ++i) c.push_back(rs.cartan().row(i));
    print_json(out, {{"type", rs.label()},
                     {"cartan", c},
                     {"det", rs.det()},
                     {"positive_roots", rs.positive_roots().size()},
                     {"two_rho", rs.two_rho()},
                     {"cone_generators", rs.cone_generators()}});
    return kOk;
  }
  out << rs.label() << '\n' << "cartan:\n";
  for (int i = 0; i < n; ++i) {
    out << ' ';
    for (int j = 0; j < n; ++j) out << std::setw(3) << rs.cartan()(i, j);
    out << '\n';
  }
  out << "det: " << rs.det() << '\n'
      << "positive roots: " << rs.positive_roots().size() << '\n'
      << "2rho: " << to_string(rs.two_rho()) << '\n';
  for (int i = 0; i < n; ++i) out << "w_" << i + 1 << ": " << to_string(rs.cone_generators()[std::size_t(i)]) << '\n';
  return kOk;
}

template <class T>
void print_matrix(const SubsetMatrix<T>& m, const std::string& title, const Command& cmd, std::ostream& out) {
  if (cmd.format == "json") {
    json rows = json::array();
    for (Subset r : m.row_labels()) {
      json row = json::array();
      for (Subset c : m.col_labels()) {
        if constexpr (std::is_same_v<T, RatFun>)
          row.push_back(series_json(m.at(r, c)));
        else
          row.push_back(to_json(m.at(r, c)));
      }
      rows.push_back(row);
    }
    json rl = json::array(), cl = json::array();
    for (Subset r : m.row_labels()) rl.push_back(ids_json(r));
    for (Subset c : m.col_labels()) cl.push_back(ids_json(c));
    print_json(out, {{"type", cmd.type_label}, {"matrix", title}, {"rows", rl}, {"cols", cl}, {"entries", rows}});
    return;
  }
  out << title << '\n';
  for (Subset r : m.row_labels())
    for (Subset c : m.col_labels())
      out << "[" << to_string(r) << "][" << to_string(c) << "] " << render(m.at(r, c), cmd.format) << '\n';
}

int run_finite(const Command& cmd, std::ostream& out) {
  FiniteWeyl fw(RootSystem::from_label(cmd.type_label));
  const int n = fw.rank();
  const Subset s = subset_arg(cmd.subset, n, fw.all());
  if (cmd.what == "poincare") {
    const IntPoly p = fw.poincare(s);
    if (cmd.format == "json")
      print_json(out, {{"type", cmd.type_label}, {"subset", ids_json(s)}, {"poincare", to_json(p)}});
    else
      out << render(p, cmd.format) << '\n';
    return kOk;
  }
  if (cmd.what == "pmatrix") {
    const Subset k = subset_arg(cmd.k, n, 0);
    if (!is_subset(k, s)) throw std::invalid_argument("--K must lie inside --subset");
    print_matrix(fw.matrix_M(k, s), "M_{K,S'} K=" + to_string(k) + " S'=" + to_string(s), cmd, out);
    return kOk;
  }
  if (cmd.what == "hmatrix") {
    const Subset j = subset_arg(cmd.j, n, 0);
    if (!is_subset(j, s)) throw std::invalid_argument("--J must lie inside --subset");
    print_matrix(fw.matrix_N(j, s), "N_{J,S'} J=" + to_string(j) + " S'=" + to_string(s), cmd, out);
    return kOk;
  }
  if (cmd.what == "check") return report_exit(fw.identity_checks(s), cmd, out);
  throw std::invalid_argument("--what must be poincare, pmatrix, hmatrix or check");
}

int run_fq(const Command& cmd, std::ostream& out) {
  const auto rs = RootSystem::from_label(cmd.type_label);
  ConeCounter cones(rs);
  const int n = rs.rank();
  std::vector<Subset> qs;
  if (cmd.q) {
    qs.push_back(to_subset(*cmd.q, n));
    if (qs.front() == full_subset(n)) throw std::invalid_argument("Q must be a proper subset");
  } else {
    for_each_subset(full_subset(n), [&](Subset q) {
      if (q != full_subset(n)) qs.push_back(q);
    });
    std::sort(qs.begin(), qs.end(), [](Subset a, Subset b) {
      return cardinality(a) != cardinality(b) ? cardinality(a) > cardinality(b) : a < b;
    });
  }
  if (cmd.format == "json") {
    json arr = json::array();
    for (Subset q : qs) {
      const RatFun f = cones.f_Q(q);
      arr.push_back({{"Q", ids_json(q)},
                     {"points", cones.points(cone_indices(rs, q)).points},
                     {"series", series_json(f)},
                     {"display", to_text(f)}});
    }
    print_json(out, {{"type", rs.label()}, {"f", arr}});
    return kOk;
  }
  if (cmd.q) {
    out << render(cones.f_Q(qs.front()), cmd.format) << '\n';
    return kOk;
  }
  for (Subset q : qs) {
    out << "Q=" << to_string(q) << "  f_Q = " << render(cones.f_Q(q), cmd.format) << '\n';
    out << "  points:";
    for (const auto& p : cones.points(cone_indices(rs, q)).points) out << ' ' << to_string(p);
    out << '\n';
  }
  return kOk;
}

int run_series(const Command& cmd, std::ostream& out) {
  AffineSeries series(RootSystem::from_label(cmd.type_label), pipeline_options(cmd));
  const int n = series.roots().rank();
  const Subset j = subset_arg(cmd.j, n, 0);
  const Subset k = subset_arg(cmd.k, n, 0);
  RatFun r;
  std::optional<Subset> q;
  if (cmd.normalizer) {
    if (cmd.q) throw std::invalid_argument("--normalizer does not take --Q");
    r = series.normalizer_series(j);
  } else if (cmd.q) {
    q = to_subset(*cmd.q, n);
    if (!is_subset(*q, k)) throw std::invalid_argument("--Q must lie inside --K");
    r = series.p_full(*q, j, k);
  } else {
    r = series.double_coset_series(j, k);
  }
  std::optional<std::vector<BigInt>> coeffs;
  if (cmd.expand_degree) coeffs = expand(r, *cmd.expand_degree);

  if (cmd.format == "json") {
    json doc = {{"type", series.roots().label()}, {"J", ids_json(j)}, {"K", ids_json(k)}};
    if (q) doc["Q"] = ids_json(*q);
    if (cmd.normalizer) doc["normalizer"] = true;
    doc["series"] = series_json(r);
    doc["display"] = to_text(r);
    if (coeffs) doc["expansion"] = coefficients_to_json(*coeffs);
    print_json(out, doc);
    return kOk;
  }
  out << render(r, cmd.format) << '\n';
  if (coeffs) {
    for (std::size_t i = 0; i < coeffs->size(); ++i) out << (i ? " " : "") << (*coeffs)[i].get_str();
    out << '\n';
  }
  return kOk;
}

int run_matrix(const Command& cmd, std::ostream& out) {
  AffineSeries series(RootSystem::from_label(cmd.type_label), pipeline_options(cmd));
  const int n = series.roots().rank();
  if (cmd.k) {
    const Subset k = to_subset(*cmd.k, n);
    print_matrix(series.matrix_M_affine(k), "M_K K=" + to_string(k), cmd, out);
  } else {
    print_matrix(series.matrix_M_affine(), "M_S", cmd, out);
  }
  return kOk;
}

int run_oracle(const Command& cmd, std::ostream& out) {
  auto fw = std::make_shared<const FiniteWeyl>(RootSystem::from_label(cmd.type_label));
  AffineWeyl aw(fw);
  const int n = aw.rank();
  const Subset j = subset_arg(cmd.j, n, 0);
  const Subset k = subset_arg(cmd.k, n, 0);
  if (cmd.max_length < 0) throw std::invalid_argument("--max-length must be nonnegative");
  AffineTable table(aw, cmd.max_length);
  const auto o = oracle_series(aw, table, j, k);
  if (cmd.format == "json") {
    json bins = json::array();
    for (const auto& [q, counts] : o.by_q) bins.push_back({{"Q", ids_json(q)}, {"counts", counts}});
    print_json(out, {{"type", aw.roots().label()},
                     {"J", ids_json(j)},
                     {"K", ids_json(k)},
                     {"max_length", o.max_length},
                     {"by_Q", bins},
                     {"total", o.total}});
    return kOk;
  }
  auto row = [&](const std::vector<long long>& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
    return s;
  };
  for (const auto& [q, counts] : o.by_q) out << "Q=" << to_string(q) << "  " << row(counts) << '\n';
  out << "total  " << row(o.total) << '\n';
  return kOk;
}

int run_verify(const Command& cmd, std::ostream& out) {
  AffineSeries series(RootSystem::from_label(cmd.type_label), pipeline_options(cmd));
  if (cmd.max_length < 0) throw std::invalid_argument("--max-length must be nonnegative");
  return report_exit(verify_against_oracle(series, cmd.max_length), cmd, out);
}

int run_check(const Command& cmd, std::ostream& out) {
  AffineSeries series(RootSystem::from_label(cmd.type_label), pipeline_options(cmd));
  Report rep;
  rep.merge(series.finite().identity_checks(series.generators()), "finite: ");
  rep.merge(series.affine_identity_checks(cmd.degree), "affine: ");
  rep.merge(series.dual_path_checks(), "dual path: ");
  return report_exit(rep, cmd, out);
}

int run_selftest_cmd(const Command& cmd, std::ostream& out) {
  const auto dir = cmd.fixtures_dir.empty() ? default_fixture_dir() : std::filesystem::path(cmd.fixtures_dir);
  return report_exit(run_selftest(dir), cmd, out);
}

}  // namespace

std::optional<int> parse(const std::vector<std::string>& args, Command& cmd, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth series of affine Weyl groups", "growth"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  app.fallthrough();

  std::string format = "text";
  bool cross_check = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_flag("--cross-check", cross_check, "Compute p-series by both paths and compare");

  std::string j, k, q, subset;
  auto type_opt = [&](CLI::App* sub) {
    sub->add_option("--type,-t", cmd.type_label, "Root system label, e.g. A2, B3, G2")->required();
  };
  auto ids_opt = [&](CLI::App* sub, const std::string& flag, std::string& target, const std::string& help) {
    return sub->add_option(flag, target, help + " (ids 1..rank, comma or space separated; \"\" for empty)");
  };

  auto* cartan = app.add_subcommand("cartan", "Cartan matrix and cone generators");
  cartan->add_option("label", cmd.type_label, "Root system label")->required();

  auto* finite = app.add_subcommand("finite", "Finite Weyl group data");
  type_opt(finite);
  ids_opt(finite, "--subset", subset, "Generating subset S'");
  finite->add_option("--what", cmd.what, "poincare, pmatrix, hmatrix or check")
      ->check(CLI::IsMember({"poincare", "pmatrix", "hmatrix", "check"}));
  ids_opt(finite, "--K", k, "K for pmatrix");
  ids_opt(finite, "--J", j, "J for hmatrix");

  auto* fq = app.add_subcommand("fq", "Open-cone series f_Q and parallelepiped points");
  type_opt(fq);
  ids_opt(fq, "--Q", q, "Subset Q");

  auto* series = app.add_subcommand("series", "Double coset, partition or normalizer series");
  type_opt(series);
  ids_opt(series, "--J", j, "J");
  ids_opt(series, "--K", k, "K");
  ids_opt(series, "--Q", q, "Q inside K; gives p_{Q,J,K}");
  series->add_option("--expand", cmd.expand_degree, "Also print coefficients through this degree");
  series->add_flag("--normalizer", cmd.normalizer, "Series of the normalizer of W_J instead");

  auto* matrix = app.add_subcommand("matrix", "The matrix M_S (or M_K with --K)");
  type_opt(matrix);
  ids_opt(matrix, "--K", k, "K");

  auto* oracle = app.add_subcommand("oracle", "Brute-force counts by Q from a length-bounded enumeration");
  type_opt(oracle);
  ids_opt(oracle, "--J", j, "J");
  ids_opt(oracle, "--K", k, "K");
  oracle->add_option("--max-length", cmd.max_length, "Enumerate elements up to this length")->required();

  auto* verify = app.add_subcommand("verify", "Compare all series with the enumeration oracle");
  type_opt(verify);
  verify->add_option("--max-length", cmd.max_length, "Enumerate elements up to this length")->required();

  auto* check = app.add_subcommand("check", "Finite and affine identity suites and the dual-path check");
  type_opt(check);
  check->add_option("--degree", cmd.degree, "Truncation degree for the affine identities");

  auto* selftest = app.add_subcommand("selftest", "Recompute the bundled golden fixtures");
  selftest->add_option("--fixtures", cmd.fixtures_dir, "Fixture directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  cmd.subcommand = app.get_subcommands().front()->get_name();
  cmd.format = format;
  cmd.cross_check = cross_check;
  if (const char* dir = std::getenv("GROWTH_CACHE_DIR"); dir && *dir) cmd.cache_dir = dir;

  try {
    if (!cmd.type_label.empty()) {
      const auto rs = RootSystem::from_label(cmd.type_label);
      cmd.type_label = rs.label();
      cmd.rank = rs.rank();
    }
    auto* sub = app.get_subcommands().front();
    auto take = [&](const char* flag, const std::string& text, std::optional<std::vector<int>>& dst) {
      if (sub->get_option_no_throw(flag) && sub->count(flag) > 0) {
        dst = parse_ids(text);
        to_subset(*dst, cmd.rank);
      }
    };
    take("--J", j, cmd.j);
    take("--K", k, cmd.k);
    take("--Q", q, cmd.q);
    take("--subset", subset, cmd.subset);
  } catch (const std::exception& e) {
    err << "growth: " << e.what() << '\n';
    return kUsage;
  }
  return std::nullopt;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    const std::string& s = cmd.subcommand;
    if (s == "cartan") return run_cartan(cmd, out);
    if (s == "finite") return run_finite(cmd, out);
    if (s == "fq") return run_fq(cmd, out);
    if (s == "series") return run_series(cmd, out);
    if (s == "matrix") return run_matrix(cmd, out);
    if (s == "oracle") return run_oracle(cmd, out);
    if (s == "verify") return run_verify(cmd, out);
    if (s == "check") return run_check(cmd, out);
    if (s == "selftest") return run_selftest_cmd(cmd, out);
    err << "growth: unknown subcommand '" << s << "'\n";
    return kUsage;
  } catch (const InternalMismatch& e) {
    err << "growth: internal mismatch: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::domain_error& e) {
    err << "growth: " << e.what() << '\n';
    return kMismatch;
  } catch (const BoundExceeded& e) {
    err << "growth: bound exceeded: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "growth: " << e.what() << '\n';
    return kUsage;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  if (auto stop = parse(args, cmd, out, err)) return *stop;
  return run(cmd, out, err);
}

}  // namespace growth::cli
