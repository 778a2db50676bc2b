// Copyright 2026 The Stairnet Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stairnet/box_union.h"
#include "stairnet/chains.h"
#include "stairnet/errors.h"
#include "stairnet/exact.h"
#include "stairnet/limits.h"
#include "stairnet/parallel.h"
#include "stairnet/selection.h"
#include "stairnet/serialize.h"
#include "stairnet/stair.h"
#include "stairnet/stair_nets.h"
#include "stairnet/stretched_grid.h"
#include "svg.h"

namespace stairnet {
namespace {

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) parts.push_back(part);
  if (parts.empty()) throw PreconditionError("empty list '" + text + "'");
  return parts;
}

Point ParsePoint(const std::string& text) {
  std::vector<Rational> coords;
  for (const std::string& part : SplitCommas(text)) {
    coords.push_back(ParseRational(part));
  }
  return Point(std::move(coords));
}

std::vector<int64_t> ParseIntList(const std::string& text) {
  std::vector<int64_t> out;
  for (const std::string& part : SplitCommas(text)) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw PreconditionError("not an integer: '" + part + "'");
    }
  }
  return out;
}

std::string Decimal(const Rational& v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v.get_d());
  return buf;
}

// Builds a stretched grid from "d,m", reusing an on-disk copy when present.
GridSpec LoadGrid(const std::string& flag, bool spacious,
                  const std::string& cache_dir, const Limits& limits) {
  std::vector<int64_t> dm = ParseIntList(flag);
  if (dm.size() != 2) throw PreconditionError("--grid expects d,m");
  const int d = static_cast<int>(dm[0]), m = static_cast<int>(dm[1]);
  namespace fs = std::filesystem;
  fs::path path;
  if (!cache_dir.empty()) {
    path = fs::path(cache_dir) /
           ("grid-d" + std::to_string(d) + "-m" + std::to_string(m) +
            (spacious ? "-spacious" : "") + ".json");
    if (fs::exists(path)) {
      GridSpec spec = GridSpecFromJson(ReadJsonFile(path.string()));
      if (spec.d == d && spec.m == m) return spec;
    }
  }
  GridSpec spec = spacious ? SpaciousGrid(d, m, limits) : BuildGrid(d, m, limits);
  if (!cache_dir.empty()) {
    fs::create_directories(cache_dir);
    WriteJsonFile(path.string(), ToJson(spec));
  }
  return spec;
}

void Emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    WriteJsonFile(path, j);
  }
}

void EmitText(const std::string& text, const std::string& path,
              std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteTextFile(path, text);
  }
}

std::string FamilyText(const StabFamily& f) {
  std::string s = "{";
  for (size_t i = 0; i < f.tuples.size(); ++i) {
    if (i > 0) s += ",";
    s += "(";
    for (size_t k = 0; k < f.tuples[i].size(); ++k) {
      if (k > 0) s += ",";
      s += std::to_string(f.tuples[i][k]);
    }
    s += ")";
  }
  return s + "}";
}

AxisBox UnitSquare() {
  return AxisBox(Point::FromInts({0, 0}), Point::FromInts({1, 1}));
}

void CheckPlane(int dim) {
  if (dim != 2) throw DimensionMismatch("pictures are two-dimensional");
}

// Flag storage shared by all subcommands; each leaf reads what it declared.
struct Flags {
  std::string in, out, points, fam, witness, eps, r, rho, t, c, x, a, b;
  std::string grid, anchor, sizes, direction = "to", report = "csv";
  std::string cache_dir = ".stairnet-cache";
  bool spacious = false;
  int trials = 200, jobs = 1, d = 2, m = 0, j = 0, k = 0, res = 128;
  int64_t n = 0, s = 0, count = 0;
  uint64_t seed = 0;
};

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact stair-convexity and weak epsilon-net toolkit",
               "stairnet"};
  app.require_subcommand(1);
  Flags f;
  std::function<void()> action;
  const Limits limits = Limits::FromEnvironment();

  auto leaf = [&](CLI::App* parent, const std::string& name,
                  const std::string& help, std::function<void()> fn) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    cmd->callback([&action, fn] { action = fn; });
    return cmd;
  };
  auto seed_flag = [&](CLI::App* cmd) {
    cmd->add_option("--seed", f.seed, "Random seed (required)")->required();
  };
  auto jobs_flag = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", f.jobs, "Worker threads")
        ->check(CLI::PositiveNumber);
  };
  auto out_flag = [&](CLI::App* cmd) {
    cmd->add_option("--out", f.out, "Output path (stdout if omitted)");
  };
  auto grid_flags = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--grid", f.grid, "Stretched grid as d,m");
    if (required) opt->required();
    cmd->add_flag("--spacious", f.spacious,
                  "Use the spacious grid x_ij = K_i^(2(j-1))");
    cmd->add_option("--cache-dir", f.cache_dir,
                    "Grid cache directory (empty disables caching)");
  };

  // grid
  CLI::App* grid = leaf(&app, "grid", "Build (or load) a stretched grid", [&] {
    GridSpec spec = LoadGrid(f.grid, f.spacious, f.cache_dir, limits);
    out << "d=" << spec.d << " m=" << spec.m << " max_bits="
        << BitLength(Floor(spec.X[spec.d - 1][spec.m - 1])) << "\n";
    if (!f.out.empty()) WriteJsonFile(f.out, ToJson(spec));
  });
  grid_flags(grid, true);
  out_flag(grid);

  // net
  CLI::App* net = app.add_subcommand("net", "Stair-convex nets in the cube");
  net->require_subcommand(1);

  CLI::App* refute = leaf(net, "refute", "Search for a large empty fan", [&] {
    PointSet pts = PointSetFromJson(ReadJsonFile(f.in));
    Refutation r = RefuteNet(pts, {f.trials, f.seed, f.jobs});
    out << "success=" << (r.success ? "true" : "false") << " k=" << r.k
        << " T=" << r.types << " best_count=" << r.best_count
        << " vol_lb=" << ShortRational(r.vol_lb) << "\n";
    if (!f.out.empty()) WriteJsonFile(f.out, ToJson(r));
  });
  refute->add_option("--in", f.in, "Point set JSON")->required();
  refute->add_option("--trials", f.trials, "Anchor samples")
      ->check(CLI::PositiveNumber);
  seed_flag(refute);
  jobs_flag(refute);
  out_flag(refute);

  CLI::App* certify = leaf(net, "certify", "Certify a 1/r stair net", [&] {
    PointSet pts = PointSetFromJson(ReadJsonFile(f.in));
    CertifyOutcome c = CertifyStairNet(pts, ParseRational(f.eps), limits);
    out << "v=" << ShortRational(c.v);
    if (c.bound) out << " bound=" << ShortRational(*c.bound);
    if (c.certificate) {
      out << " certified\n";
      if (!f.out.empty()) WriteJsonFile(f.out, ToJson(*c.certificate));
    } else {
      out << " not certified: " << c.failure << "\n";
    }
  });
  certify->add_option("--in", f.in, "Point set JSON")->required();
  certify->add_option("--eps", f.eps, "Target epsilon p/q")->required();
  out_flag(certify);

  CLI::App* build = leaf(net, "build", "Grow a certified Hammersley net", [&] {
    BuildOutcome b = BuildStairNet(ParseRational(f.r), f.d, limits);
    out << "size=" << b.certificate.net.size() << " tried=";
    for (size_t i = 0; i < b.sizes_tried.size(); ++i) {
      out << (i ? "," : "") << b.sizes_tried[i];
    }
    out << " v=" << ShortRational(b.certificate.v)
        << " bound=" << ShortRational(b.certificate.bound) << "\n";
    if (!f.out.empty()) WriteJsonFile(f.out, ToJson(b.certificate));
  });
  build->add_option("--r", f.r, "Net parameter r (epsilon = 1/r)")->required();
  build->add_option("--d", f.d, "Dimension")->check(CLI::PositiveNumber);
  out_flag(build);

  CLI::App* ham = leaf(net, "hammersley", "Hammersley point set", [&] {
    Emit(ToJson(Hammersley(f.s, f.d)), f.out, out);
  });
  ham->add_option("--s", f.s, "Number of points")->required();
  ham->add_option("--d", f.d, "Dimension")->check(CLI::PositiveNumber);
  out_flag(ham);

  CLI::App* empty = leaf(net, "empty-box", "Largest empty box", [&] {
    EmptyBox e = LargestEmptyBox(PointSetFromJson(ReadJsonFile(f.in)), limits);
    Emit({{"volume", ToJson(e.volume)}, {"box", ToJson(e.box)}}, f.out, out);
  });
  empty->add_option("--in", f.in, "Point set JSON")->required();
  out_flag(empty);

  CLI::App* transfer = leaf(net, "transfer", "Move a net across the grid map",
                            [&] {
    GridSpec spec = LoadGrid(f.grid, f.spacious, f.cache_dir, limits);
    PointSet pts = PointSetFromJson(ReadJsonFile(f.in));
    Rational eps = ParseRational(f.eps);
    Transfer t = f.direction == "to" ? TransferToWeakNet(pts, eps, spec)
                                     : TransferFromWeakNet(pts, eps, spec);
    Emit({{"epsilon", ToJson(t.epsilon)}, {"net", ToJson(t.net)}}, f.out, out);
  });
  transfer->add_option("--in", f.in, "Net JSON")->required();
  transfer->add_option("--eps", f.eps, "Epsilon of the input net")->required();
  transfer->add_option("--direction", f.direction, "to (weak net) or from")
      ->check(CLI::IsMember({"to", "from"}));
  grid_flags(transfer, true);
  out_flag(transfer);

  CLI::App* check = leaf(net, "check", "Exhaustive weak-net check", [&] {
    PointSet x = PointSetFromJson(ReadJsonFile(f.points));
    PointSet n = PointSetFromJson(ReadJsonFile(f.in));
    WeakNetCheck w = CheckWeakNet(x, n, ParseRational(f.r), limits);
    out << (w.is_net ? "net" : "not a net") << " threshold=" << w.threshold;
    if (!w.is_net) {
      out << " missed=";
      for (size_t i = 0; i < w.missed.size(); ++i) {
        out << (i ? "," : "") << w.missed[i];
      }
    }
    out << "\n";
  });
  check->add_option("--in", f.in, "Candidate net JSON")->required();
  check->add_option("--points", f.points, "Ground set JSON")->required();
  check->add_option("--r", f.r, "Net parameter r")->required();

  // chains
  CLI::App* chains = app.add_subcommand("chains", "Ackermann and stabbing");
  chains->require_subcommand(1);

  CLI::App* z = leaf(chains, "z", "Minimum stabbing family", [&] {
    std::optional<StabFamily> fam = MinStabbing(f.j, f.k, f.n, limits);
    if (!fam) {
      out << "undefined (no " << f.j << "-tuple fits " << f.k
          << " intervals)\n";
      return;
    }
    out << fam->tuples.size() << "\n" << FamilyText(*fam) << "\n";
    if (!f.out.empty()) WriteJsonFile(f.out, ToJson(*fam));
  });
  z->add_option("--j", f.j, "Tuple length")->required();
  z->add_option("--k", f.k, "Chain length")->required();
  z->add_option("--n", f.n, "Ground interval [1, n]")->required();
  out_flag(z);

  CLI::App* ack = leaf(chains, "ackermann", "A(n) = A_n(3)", [&] {
    out << Ackermann(static_cast<int>(f.n), limits).get_str() << "\n";
  });
  ack->add_option("--n", f.n, "Level")->required();

  CLI::App* alpha = leaf(chains, "alpha", "Inverse Ackermann", [&] {
    Rational x = ParseRational(f.x);
    if (f.k > 0) {
      out << AlphaK(f.k, x) << "\n";
    } else {
      out << Alpha(x) << "\n";
    }
  });
  alpha->add_option("--x", f.x, "Argument")->required();
  alpha->add_option("--k", f.k, "Level k of alpha_k (omit for alpha)");

  CLI::App* lemma = leaf(chains, "lemma10",
                         "alpha_(alpha(x)-3)(x) > A(alpha(x)-2)", [&] {
    out << (CheckLemma10(ParseRational(f.x), limits) ? "true" : "false")
        << "\n";
  });
  lemma->add_option("--x", f.x, "Argument")->required();

  CLI::App* beta = leaf(chains, "beta", "Net-size exponent term", [&] {
    BetaValue v = BetaD(f.d, ParseRational(f.r));
    out << "alpha=" << v.alpha << " t=" << v.t
        << " coefficient=" << ShortRational(v.coefficient)
        << " log=" << (v.has_log ? "true" : "false") << " value=["
        << ShortRational(v.value.lo) << ", " << ShortRational(v.value.hi)
        << "]\n";
  });
  beta->add_option("--d", f.d, "Dimension")->required();
  beta->add_option("--r", f.r, "Net parameter r")->required();

  CLI::App* thr = leaf(chains, "thresholds", "Interval-chain thresholds", [&] {
    if (f.j == 3) {
      out << "Q3=" << Q3(f.m) << " P3=" << P3(f.m) << "\n";
    } else {
      out << IntervalChainThresholdForm(f.j) << "\n";
    }
  });
  thr->add_option("--j", f.j, "Tuple length")->required();
  thr->add_option("--m", f.m, "Chain count (j = 3)");

  // triangles
  CLI::App* tri = app.add_subcommand("triangles", "Thin triangle families");
  tri->require_subcommand(1);

  CLI::App* gen = leaf(tri, "gen", "Generate the thin triangle family", [&] {
    f.grid = "2," + std::to_string(f.m);
    GridSpec spec = LoadGrid(f.grid, f.spacious, f.cache_dir, limits);
    Rational rho;
    if (!f.rho.empty()) {
      rho = ParseRational(f.rho);
    } else if (!f.t.empty()) {
      int64_t n = static_cast<int64_t>(f.m) * f.m;
      rho = RhoFor(n, ParseRational(f.t),
                   f.c.empty() ? Rational(1) : ParseRational(f.c))
                .rho;
    } else {
      throw PreconditionError("give --rho or --t");
    }
    TriangleFamily fam = GenThinTriangles(spec, rho);
    out << "triangles=" << fam.triangles.size() << "\n";
    if (!f.out.empty()) WriteJsonFile(f.out, ToJson(fam));
  });
  gen->add_option("--m", f.m, "Grid side")->required()->check(
      CLI::Range(3, 1 << 20));
  gen->add_option("--rho", f.rho, "Density rho as p/q");
  gen->add_option("--t", f.t, "Target count t (derives rho)");
  gen->add_option("--c", f.c, "Constant C for --t (default 1)");
  gen->add_flag("--spacious", f.spacious, "Use the spacious grid");
  gen->add_option("--cache-dir", f.cache_dir, "Grid cache directory");
  out_flag(gen);

  CLI::App* probes = leaf(tri, "probes", "Sample probe points", [&] {
    TriangleFamily fam = TriangleFamilyFromJson(ReadJsonFile(f.fam));
    std::vector<Point> pts =
        SampleProbes(fam.spec, static_cast<int>(f.count), f.seed);
    Emit(ToJson(PointSet(2, pts)), f.out, out);
  });
  probes->add_option("--fam", f.fam, "Family JSON")->required();
  probes->add_option("--count", f.count, "Number of probes")->required();
  seed_flag(probes);
  out_flag(probes);

  CLI::App* probe = leaf(tri, "probe", "Count triangles containing probes",
                         [&] {
    TriangleFamily fam = TriangleFamilyFromJson(ReadJsonFile(f.fam));
    PointSet pts = PointSetFromJson(ReadJsonFile(f.points));
    const Rational rho_t = fam.rho * static_cast<int64_t>(fam.triangles.size());
    std::vector<std::string> rows(pts.size());
    Json rows_json = Json::array();
    std::vector<Json> row_objs(pts.size());
    ParallelFor(static_cast<int64_t>(pts.size()), f.jobs, [&](int64_t i) {
      auto by_class = CountContainingByClass(pts[i], fam);
      int64_t total = 0, max_class = 0, violations = 0;
      for (const auto& [dims, cnt] : by_class) {
        total += cnt;
        max_class = std::max(max_class, cnt);
        if (cnt > ClassBound(dims, fam.spec.m)) ++violations;
      }
      Rational ratio = sgn(rho_t) > 0 ? Rational(total) / rho_t : Rational(0);
      rows[i] = std::to_string(i) + "," + std::to_string(total) + "," +
                Decimal(ratio) + "," + std::to_string(max_class) + "," +
                std::to_string(violations) + "\n";
      row_objs[i] = {{"probe", i},          {"count", total},
                     {"ratio", Decimal(ratio)}, {"max_class_count", max_class},
                     {"class_violations", violations}};
    });
    if (f.report == "csv") {
      std::string csv = "probe,count,ratio,max_class_count,class_violations\n";
      for (const std::string& row : rows) csv += row;
      EmitText(csv, f.out, out);
    } else {
      for (Json& row : row_objs) rows_json.push_back(std::move(row));
      Emit({{"rho_T", ToJson(rho_t)}, {"probes", rows_json}}, f.out, out);
    }
  });
  probe->add_option("--fam", f.fam, "Family JSON")->required();
  probe->add_option("--points", f.points, "Probe points JSON")->required();
  probe->add_option("--report", f.report, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  jobs_flag(probe);
  out_flag(probe);

  CLI::App* rho = leaf(tri, "rho", "Density parameter for n and t", [&] {
    RhoValue v = RhoFor(f.n, ParseRational(f.t),
                        f.c.empty() ? Rational(1) : ParseRational(f.c));
    out << "rho=" << FormatRational(v.rho) << " (~" << Decimal(v.rho, 9)
        << ") in_theorem_range=" << (v.in_theorem_range ? "true" : "false")
        << "\n";
  });
  rho->add_option("--n", f.n, "Point count n = m^2")->required();
  rho->add_option("--t", f.t, "Target count t")->required();
  rho->add_option("--c", f.c, "Constant C (default 1)");

  // viz
  CLI::App* viz = app.add_subcommand("viz", "SVG pictures");
  viz->require_subcommand(1);

  CLI::App* vpath = leaf(viz, "stairpath", "Stair-path between two points",
                         [&] {
    Point a = ParsePoint(f.a), b = ParsePoint(f.b);
    CheckPlane(a.dim());
    StairPath path = MakeStairPath(a, b);
    SvgCanvas canvas(PaddedWindow({a, b}));
    canvas.Frame();
    for (const Segment& s : path.segments) {
      canvas.Segment(s.from, s.to, "#1f5fa8");
    }
    canvas.Dot(a, "#b22222", 4);
    canvas.Dot(b, "#b22222", 4);
    EmitText(canvas.Render(), f.out, out);
  });
  vpath->add_option("--a", f.a, "Start point x,y")->required();
  vpath->add_option("--b", f.b, "End point x,y")->required();
  out_flag(vpath);

  CLI::App* vhull = leaf(viz, "hull", "Rasterized stair-hull", [&] {
    PointSet pts = PointSetFromJson(ReadJsonFile(f.in));
    CheckPlane(pts.dim());
    if (!f.grid.empty()) {
      pts = PiMap(pts, LoadGrid(f.grid, f.spacious, f.cache_dir, limits));
    }
    BoxUnion hull = StairHull(pts, limits);
    SvgCanvas canvas(f.grid.empty() ? PaddedWindow(pts.points())
                                    : UnitSquare());
    canvas.Frame();
    canvas.Raster(hull, f.res, "#7fa7d9");
    for (const Point& p : pts) canvas.Dot(p, "#b22222");
    EmitText(canvas.Render(), f.out, out);
  });
  vhull->add_option("--in", f.in, "Point set JSON")->required();
  vhull->add_option("--res", f.res, "Raster resolution")
      ->check(CLI::Range(1, 4096));
  grid_flags(vhull, false);
  out_flag(vhull);

  CLI::App* vfan = leaf(viz, "fan", "Normal boxes of a fan", [&] {
    Point anchor = ParsePoint(f.anchor);
    CheckPlane(anchor.dim());
    SvgCanvas canvas(UnitSquare());
    canvas.Frame();
    std::vector<BoxType> types = BoxTypes(f.k, 2);
    std::vector<bool> empty_box(types.size(), false);
    std::optional<PointSet> pts;
    if (!f.in.empty()) {
      pts = PointSetFromJson(ReadJsonFile(f.in));
      empty_box = EmptyFanBoxes(*pts, anchor, f.k);
    }
    for (size_t i = 0; i < types.size(); ++i) {
      canvas.Box(NormalBox(types[i], anchor),
                 empty_box[i] ? "#3c9d5d" : "#7fa7d9", 0.25);
    }
    if (pts) {
      for (const Point& p : *pts) canvas.Dot(p, "#222", 2);
    }
    canvas.Dot(anchor, "#b22222", 4);
    EmitText(canvas.Render(), f.out, out);
  });
  vfan->add_option("--anchor", f.anchor, "Anchor x,y in [1/2,1)^2")
      ->required();
  vfan->add_option("--k", f.k, "Fan level")->required();
  vfan->add_option("--in", f.in, "Optional point set; empty boxes in green");
  out_flag(vfan);

  CLI::App* vwit = leaf(viz, "witness", "Refuter witness over its net", [&] {
    PointSet pts = PointSetFromJson(ReadJsonFile(f.in));
    CheckPlane(pts.dim());
    Json w = ReadJsonFile(f.witness);
    BoxUnion s = BoxUnionFromJson(w.at("S"));
    SvgCanvas canvas(UnitSquare());
    canvas.Frame();
    for (const AxisBox& b : s.boxes()) canvas.Box(b, "#3c9d5d", 0.4);
    for (const Point& p : pts) canvas.Dot(p, "#222", 2);
    canvas.Dot(PointFromJson(w.at("anchor")), "#b22222", 4);
    EmitText(canvas.Render(), f.out, out);
  });
  vwit->add_option("--in", f.in, "Net JSON")->required();
  vwit->add_option("--witness", f.witness, "Witness JSON from net refute")
      ->required();
  out_flag(vwit);

  // bench
  CLI::App* bench = app.add_subcommand("bench", "Experiment tables");
  bench->require_subcommand(1);
  CLI::App* bref = leaf(bench, "refuter", "Refuter on Hammersley nets", [&] {
    std::string csv = "n,k,T,best_count,vol_lb\n";
    for (int64_t n : ParseIntList(f.sizes)) {
      Refutation r = RefuteNet(Hammersley(n, f.d), {f.trials, f.seed, f.jobs});
      csv += std::to_string(n) + "," + std::to_string(r.k) + "," +
             std::to_string(r.types) + "," + std::to_string(r.best_count) +
             "," + FormatRational(r.vol_lb) + "\n";
    }
    EmitText(csv, f.out, out);
  });
  bref->add_option("--d", f.d, "Dimension")->check(CLI::PositiveNumber);
  bref->add_option("--sizes", f.sizes, "Comma-separated net sizes")
      ->required();
  bref->add_option("--trials", f.trials, "Anchor samples")
      ->check(CLI::PositiveNumber);
  seed_flag(bref);
  jobs_flag(bref);
  out_flag(bref);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  if (!action) {
    err << "usage error: no command\n";
    return kExitUsage;
  }
  try {
    action();
  } catch (const GuardError& e) {
    err << "guard tripped: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace stairnet
