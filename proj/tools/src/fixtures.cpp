#include "growth_cli/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "growth/conecount.hpp"
#include "growth/finiteweyl.hpp"
#include "growth/pipeline.hpp"
#include "growth/serialize.hpp"

#ifndef GROWTH_FIXTURE_DIR
#define GROWTH_FIXTURE_DIR "fixtures"
#endif

namespace growth::cli {

namespace {

Subset subset_from_ids(const nlohmann::json& ids, int rank) {
  Subset s = 0;
  for (const auto& id : ids) {
    const int i = id.get<int>();
    if (i < 1 || i > rank) throw std::invalid_argument("subset id " + std::to_string(i) + " out of range");
    s |= singleton(i - 1);
  }
  return s;
}

std::vector<IntVec> sorted_points(const nlohmann::json& pts) {
  std::vector<IntVec> out;
  for (const auto& p : pts) out.push_back(p.get<IntVec>());
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe(const std::vector<IntVec>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + to_string(pts[i]);
  return s + "}";
}

}  // namespace

std::filesystem::path default_fixture_dir() {
  if (const char* env = std::getenv("GROWTH_FIXTURE_DIR"); env && *env) return env;
  return GROWTH_FIXTURE_DIR;
}

Report check_fixture(const nlohmann::json& doc, const std::string& name) {
  Report rep;
  const auto rs = RootSystem::from_label(doc.at("type").get<std::string>());
  const int n = rs.rank();
  ConeCounter cones(rs);
  auto label = [&](const std::string& what) { return name + "/" + what; };

  if (doc.contains("cone_generators")) {
    const auto want = doc.at("cone_generators").get<std::vector<IntVec>>();
    const bool ok = want == rs.cone_generators();
    rep.add(label("cone_generators"), ok, ok ? "" : "computed " + describe(rs.cone_generators()));
  }

  if (doc.contains("two_rho_weights")) {
    const auto want = doc.at("two_rho_weights").get<std::vector<long>>();
    std::vector<long> got;
    for (int i = 0; i < n; ++i) got.push_back(cones.generator_weight(i));
    rep.add(label("two_rho_weights"), want == got);
  }

  if (doc.contains("group_order")) {
    FiniteWeyl fw(rs);
    const auto want = doc.at("group_order").get<std::size_t>();
    const auto got = fw.table(fw.all())->size();
    rep.add(label("group_order"), want == got, std::to_string(got));
  }

  if (doc.contains("parallelepipeds")) {
    for (const auto& entry : doc.at("parallelepipeds")) {
      const Subset q = subset_from_ids(entry.at("Q"), n);
      const auto want = sorted_points(entry.at("points"));
      auto got = cones.points(cone_indices(rs, q)).points;
      std::sort(got.begin(), got.end());
      rep.add(label("points Q=" + to_string(q)), want == got, want == got ? "" : "computed " + describe(got));
    }
  }

  if (doc.value("trivial_parallelepipeds", false)) {
    CheckTally origin(label("parallelepipeds are the origin"));
    CheckTally closed(label("f_Q equals the product form"));
    for_each_subset(full_subset(n), [&](Subset q) {
      if (q == full_subset(n)) return;
      const auto& pts = cones.points(cone_indices(rs, q)).points;
      origin.record(pts.size() == 1, "Q=" + to_string(q));
      closed.record(cones.f_Q(q) == cones.f_Q_product_form(q), "Q=" + to_string(q));
    });
    origin.flush_into(rep);
    closed.flush_into(rep);
  }

  if (doc.contains("f")) {
    for (const auto& entry : doc.at("f")) {
      const Subset q = subset_from_ids(entry.at("Q"), n);
      const RatFun want = ratfun_from_json(entry.at("series"));
      const RatFun got = cones.f_Q(q);
      rep.add(label("f Q=" + to_string(q) + " " + entry.value("expr", "")), want == got,
              want == got ? "" : "computed " + to_text(got));
    }
  }

  if (doc.contains("matrix_M_affine") || doc.contains("finite_M")) {
    PipelineOptions opts;
    opts.cross_check = true;
    AffineSeries series(rs, opts);
    const Subset all = full_subset(n);
    if (doc.contains("matrix_M_affine")) {
      const auto& rows = doc.at("matrix_M_affine");
      const auto& ms = series.matrix_M_affine();
      const auto labels = ms.row_labels();
      const bool shape = rows.size() == labels.size();
      rep.add(label("M_S shape"), shape);
      if (shape)
        for (std::size_t r = 0; r < labels.size(); ++r)
          for (std::size_t c = 0; c < labels.size(); ++c) {
            const RatFun want = ratfun_from_json(rows[r].at(c).at("series"));
            const RatFun& got = ms.at(labels[r], labels[c]);
            rep.add(label("M_S[" + to_string(labels[r]) + "][" + to_string(labels[c]) + "]"), want == got,
                    want == got ? "" : "computed " + to_text(got));
          }
    }
    if (doc.contains("finite_M")) {
      for (const auto& block : doc.at("finite_M")) {
        const Subset k = subset_from_ids(block.at("K"), n);
        const auto m = series.finite().matrix_M(k, all);
        const auto rows = m.row_labels();
        const auto cols = m.col_labels();
        const auto& want = block.at("entries");
        const bool shape = want.size() == rows.size();
        rep.add(label("M_{K,S} K=" + to_string(k) + " shape"), shape);
        if (!shape) continue;
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (std::size_t c = 0; c < cols.size(); ++c) {
            const IntPoly w = poly_from_json(want[r].at(c));
            const IntPoly& g = m.at(rows[r], cols[c]);
            rep.add(label("M_{K,S} K=" + to_string(k) + " [" + to_string(rows[r]) + "][" + to_string(cols[c]) + "]"),
                    w == g, w == g ? "" : "computed " + to_text(g));
          }
      }
    }
  }
  return rep;
}

Report run_selftest(const std::filesystem::path& dir) {
  Report rep;
  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec))
    if (e.path().extension() == ".json") files.push_back(e.path());
  if (ec || files.empty()) {
    rep.add("fixtures", false, "no fixture files in " + dir.string());
    return rep;
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    const std::string name = f.stem().string();
    try {
      std::ifstream in(f);
      const auto doc = nlohmann::json::parse(in);
      rep.merge(check_fixture(doc, name));
      FiniteWeyl fw(RootSystem::from_label(doc.at("type").get<std::string>()));
      rep.merge(fw.identity_checks(fw.all()), name + "/identities: ");
    } catch (const std::exception& e) {
      rep.add(name, false, std::string("unreadable fixture: ") + e.what());
    }
  }
  return rep;
}

}  // namespace growth::cli
