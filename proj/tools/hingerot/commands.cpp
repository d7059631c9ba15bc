#include "commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <vector>

#include <hingerot/image_rotation.hpp>
#include <hingerot/rotation_map.hpp>
#include <hingerot/surd.hpp>

#include "pgm.hpp"

namespace hingerot::cli {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Shared table-source flags. Priority: an explicit file, then an explicit m
// (cached under $HINGEROT_TABLE_DIR when set, rebuilt otherwise), then any
// per-command fallback radius.
struct TableOptions {
  std::string table_path;
  std::optional<std::int64_t> m;
};

std::optional<fs::path> cache_dir() {
  const char* dir = std::getenv("HINGEROT_TABLE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return fs::path(dir);
}

fs::path cached_table_path(const fs::path& dir, std::int64_t m) {
  return dir / ("m" + std::to_string(m) + ".hinge");
}

HingeTable load_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open table file " + path);
  return HingeTable::load(in);  // TableError reports the defect
}

void save_table_file(const HingeTable& t, const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write table file " + path.string());
  t.save(out);
  if (!out.flush()) throw UsageError("write failed for " + path.string());
}

HingeTable table_for_radius(std::int64_t m) {
  if (const auto dir = cache_dir()) {
    const fs::path path = cached_table_path(*dir, m);
    if (fs::exists(path)) {
      HingeTable t = load_table_file(path.string());
      if (t.m() == m) return t;
      throw UsageError("cached table " + path.string() +
                       " has mismatched radius; remove it");
    }
    HingeTable t = HingeTable::build(m);
    fs::create_directories(*dir);
    save_table_file(t, path);
    return t;
  }
  return HingeTable::build(m);
}

HingeTable resolve_table(const TableOptions& opt, std::int64_t fallback_m) {
  if (!opt.table_path.empty()) return load_table_file(opt.table_path);
  if (opt.m) {
    if (*opt.m < 1) throw UsageError("m must be ≥ 1");
    return table_for_radius(*opt.m);
  }
  if (fallback_m >= 1) return table_for_radius(fallback_m);
  throw UsageError("need --table or --m");
}

// ---------------------------------------------------------------- images --

using PixelRotation = ImageRotation<std::uint8_t>;

std::vector<PixelRotation::SourcePixel> embed_pixels(const PgmImage& img,
                                                     const Embedding& emb) {
  std::vector<PixelRotation::SourcePixel> px;
  px.reserve(img.pixels.size());
  for (std::int64_t y = 0; y < img.height; ++y) {
    for (std::int64_t x = 0; x < img.width; ++x) {
      px.push_back({Gaussian{x - emb.cx, emb.cy - y}, img.at(x, y)});
    }
  }
  return px;
}

PgmImage render_to_rectangle(const PixelRotation& rot, const PgmImage& src,
                             const Embedding& emb, std::int64_t pad,
                             int background) {
  PgmImage out;
  out.width = src.width + 2 * pad;
  out.height = src.height + 2 * pad;
  out.maxval = std::max(src.maxval, background);
  out.pixels.assign(static_cast<std::size_t>(out.width * out.height),
                    static_cast<std::uint8_t>(background));
  const auto& layer = rot.render();
  for (std::int64_t y = 0; y < out.height; ++y) {
    for (std::int64_t x = 0; x < out.width; ++x) {
      const Gaussian z{x - pad - emb.cx, emb.cy - (y - pad)};
      if (layer.contains(z)) out.at(x, y) = layer[z];
    }
  }
  return out;
}

struct LoadedImage {
  PgmImage pgm;
  Embedding emb;
};

LoadedImage read_input(const std::string& path) {
  LoadedImage li{read_pgm_file(path), {}};
  li.emb = embedding_for(li.pgm.width, li.pgm.height);
  return li;
}

void require_fit(const HingeTable& t, const Embedding& emb) {
  if (t.m() < emb.required_m) {
    throw UsageError("table radius m=" + std::to_string(t.m()) +
                     " too small for this image (needs m>=" +
                     std::to_string(emb.required_m) + ")");
  }
}

// -------------------------------------------------------------- commands --

struct RotateOptions {
  TableOptions table;
  std::string in_path, out_path;
  std::optional<std::uint64_t> hinge_index;
  std::optional<double> degrees;
  std::string triple_text;
  std::int64_t pad = 1;
  int background = 0;
};

Triple parse_triple_flag(const std::string& text) {
  Triple t;
  char extra;
  if (std::sscanf(text.c_str(), "%ld,%ld,%ld%c", &t.p, &t.q, &t.k, &extra) != 3) {
    throw UsageError("--triple expects p,q,k (got '" + text + "')");
  }
  return t;
}

std::size_t resolve_target_phases(const HingeTable& t, const RotateOptions& opt) {
  const int given = int(opt.hinge_index.has_value()) +
                    int(opt.degrees.has_value()) + int(!opt.triple_text.empty());
  if (given != 1) {
    throw UsageError("give exactly one of --hinge-index, --degrees, --triple");
  }
  if (opt.hinge_index) return phases_for_hinge_index(t, *opt.hinge_index);
  if (opt.degrees) return phases_for_degrees(t, *opt.degrees);
  return phases_for_triple(t, parse_triple_flag(opt.triple_text));
}

int run_gen_table(std::int64_t m, std::string out_path) {
  if (m < 1) throw UsageError("m must be ≥ 1");
  if (out_path.empty()) {
    const auto dir = cache_dir();
    const fs::path base = dir ? *dir : fs::path(".");
    if (dir) fs::create_directories(*dir);
    out_path = cached_table_path(base, m).string();
  }
  const auto start = Clock::now();
  const HingeTable t = HingeTable::build(m);
  const double build_ms = ms_since(start);
  save_table_file(t, out_path);
  std::cout << "m=" << m << " n=" << t.size() << " path=" << out_path
            << " build_ms=" << build_ms << '\n';
  return 0;
}

int run_list(const TableOptions& topt) {
  const HingeTable t = resolve_table(topt, -1);
  for (std::size_t j = 0; j < t.size(); ++j) {
    const double deg = angle_radians(t[j]) * 180 / std::numbers::pi;
    std::printf("%zu %s %.9f\n", j, to_string(t[j].triple()).c_str(), deg);
  }
  return 0;
}

int run_rotate(const RotateOptions& opt) {
  LoadedImage li = read_input(opt.in_path);
  const HingeTable t = resolve_table(opt.table, li.emb.required_m);
  require_fit(t, li.emb);
  const std::size_t phases = resolve_target_phases(t, opt);

  PixelRotation rot(t, embed_pixels(li.pgm, li.emb),
                    static_cast<std::uint8_t>(opt.background));
  for (std::size_t i = 0; i < phases; ++i) rot.step();
  write_pgm_file(opt.out_path,
                 render_to_rectangle(rot, li.pgm, li.emb, opt.pad, opt.background),
                 li.pgm.binary);
  return 0;
}

struct SweepOptions {
  TableOptions table;
  std::string in_path, out_dir;
  std::size_t frame_stride = 1;
  std::int64_t pad = 1;
  int background = 0;
};

int run_sweep(const SweepOptions& opt) {
  if (opt.frame_stride < 1) throw UsageError("--frame-stride must be ≥ 1");
  LoadedImage li = read_input(opt.in_path);
  const HingeTable t = resolve_table(opt.table, li.emb.required_m);
  require_fit(t, li.emb);
  fs::create_directories(opt.out_dir);

  PixelRotation rot(t, embed_pixels(li.pgm, li.emb),
                    static_cast<std::uint8_t>(opt.background));
  std::size_t frame = 0;
  const auto emit = [&]() {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%06zu.pgm", frame++);
    write_pgm_file((fs::path(opt.out_dir) / name).string(),
                   render_to_rectangle(rot, li.pgm, li.emb, opt.pad,
                                       opt.background),
                   li.pgm.binary);
  };
  emit();  // the initial configuration, before any phase
  const std::size_t total = 2 * t.size();
  for (std::size_t ph = 1; ph <= total; ++ph) {
    rot.step();
    if (ph % opt.frame_stride == 0 || ph == total) emit();
  }
  std::cout << "frames=" << frame << " phases=" << total << '\n';
  return 0;
}

int run_verify(const TableOptions& topt) {
  const HingeTable t = resolve_table(topt, -1);
  const std::int64_t m = t.m();
  if (m < 1) throw UsageError("m must be ≥ 1");
  bool all_ok = true;
  const auto report = [&](const char* suite, bool ok) {
    all_ok = all_ok && ok;
    std::cout << (ok ? "PASS" : "FAIL") << ' ' << suite << '\n';
  };

  // Sweep once, checking the map against the pointwise-exact reference at
  // every phase, counting updates and preimages as we go.
  bool oracle_ok = true, preimage_ok = true;
  std::uint64_t updates = 0;
  RotationMap r(t);
  const std::size_t total = 2 * t.size();
  for (std::size_t ph = 0; ph < total; ++ph) {
    const RayUpdate u = r.step(t);
    updates += u.touched.size();
    const AnglePosition pos = r.position();
    const bool at = pos.kind == AnglePosition::Kind::AtHinge;
    const DiskGrid<Gaussian> ref =
        full_map_exact(m, t[pos.index], at ? Side::At : Side::JustAfter);
    if (!(r.targets() == ref)) oracle_ok = false;
    std::map<std::pair<std::int64_t, std::int64_t>, int> count;
    bool over = false;
    r.targets().for_each_point([&](Gaussian z) {
      const Gaussian w = r.targets()[z];
      if (++count[{w.re, w.im}] > 2) over = true;
    });
    if (over) preimage_ok = false;
  }
  report("oracle-equivalence", oracle_ok);
  report("preimage-bound", preimage_ok);

  bool closure_ok = r.position() == initial_position(t);
  r.targets().for_each_point(
      [&](Gaussian z) { closure_ok = closure_ok && r.targets()[z] == z; });

  // Random image, full turn: nothing may be lost.
  std::mt19937_64 rng(0xC0FFEE ^ static_cast<std::uint64_t>(m));
  std::vector<PixelRotation::SourcePixel> px;
  DiskGrid<char>(m).for_each_point([&](Gaussian z) {
    px.push_back({z, static_cast<std::uint8_t>(rng() % 256)});
  });
  PixelRotation img(t, px, 0);
  bool lossless_ok = true;
  for (std::size_t ph = 0; ph < total; ++ph) {
    img.step();
    if (m <= 4) img.validate_invariants();
  }
  for (const auto& sp : px) {
    lossless_ok = lossless_ok && img.value_of(sp.source) == sp.value &&
                  img.target_of(sp.source) == sp.source;
  }
  closure_ok = closure_ok && img.position() == initial_position(t);
  report("full-turn-closure", closure_ok);
  report("losslessness", lossless_ok);

  std::cout << "updates=" << updates << " updates_per_m3="
            << double(updates) / (double(m) * m * m) << '\n';
  return all_ok ? 0 : 1;
}

int run_stats(const TableOptions& topt) {
  const auto build_start = Clock::now();
  const HingeTable t = resolve_table(topt, -1);
  const double build_ms = ms_since(build_start);
  const std::int64_t m = t.m();
  const double bound = 8.0 * m * m * m;

  std::uint64_t updates = 0;
  const auto sweep_start = Clock::now();
  if (!t.empty()) {
    RotationMap r(t);
    for (std::size_t ph = 0; ph < 2 * t.size(); ++ph) {
      updates += r.step(t).touched.size();
    }
  }
  const double sweep_ms = ms_since(sweep_start);

  std::cout << "m=" << m << '\n'
            << "hinges=" << t.size() << '\n'
            << "bound_8m3=" << bound << '\n'
            << "hinge_ratio=" << (bound > 0 ? t.size() / bound : 0) << '\n'
            << "configs=" << 2 * t.size() << '\n'
            << "updates=" << updates << '\n'
            << "updates_per_m3=" << (m > 0 ? updates / (double(m) * m * m) : 0)
            << '\n'
            << "build_ms=" << build_ms << '\n'
            << "sweep_ms=" << sweep_ms << '\n';
  return 0;
}

}  // namespace

Embedding embedding_for(std::int64_t width, std::int64_t height) {
  Embedding e;
  e.cx = (width - 1) / 2;
  e.cy = (height - 1) / 2;
  // Disk radius ceil(sqrt(w^2+h^2)/2): half the diagonal rounded up, which
  // covers every pixel as seen from the floored center.
  const std::int64_t s = width * width + height * height;
  std::int64_t m = isqrt64(s) / 2;
  while (4 * m * m < s) ++m;
  e.required_m = m;
  return e;
}

std::size_t phases_for(const HingeTable& t, AnglePosition pos) {
  if (pos.index >= t.size()) throw UsageError("position index out of range");
  if (pos.kind == AnglePosition::Kind::AtHinge) return 2 * pos.index + 1;
  return pos.index + 1 == t.size() ? 0 : 2 * pos.index + 2;
}

std::size_t phases_for_hinge_index(const HingeTable& t, std::uint64_t n) {
  if (t.empty()) throw UsageError("table is empty");
  const std::uint64_t N = t.size();
  if (n > 0 && n % N == 0) return 2 * N;  // whole turns: back to the input
  return phases_for(t, {AnglePosition::Kind::AtHinge,
                        static_cast<std::size_t>(n % N)});
}

std::size_t phases_for_degrees(const HingeTable& t, double degrees) {
  if (t.empty()) throw UsageError("table is empty");
  const double two_pi = 2 * std::numbers::pi;
  double a = std::fmod(degrees * std::numbers::pi / 180.0, two_pi);
  if (a < 0) a += two_pi;

  // An angle below the first hinge falls in the wrap-around interval after
  // the last one, which is the start configuration.
  constexpr double kGuard = 1e-9;
  std::size_t last_below = t.size() - 1;
  for (std::size_t j = 0; j < t.size(); ++j) {
    const double hinge = angle_radians(t[j]);
    const double diff = std::abs(a - hinge);
    if (std::min(diff, two_pi - diff) < kGuard) {
      throw UsageError(
          "angle is within 1e-9 rad of hinge angle " + std::to_string(j) +
          "; use --hinge-index " + std::to_string(j) + " for an exact target");
    }
    if (hinge < a) last_below = j;
  }
  return phases_for(t, {AnglePosition::Kind::InInterval, last_below});
}

std::size_t phases_for_triple(const HingeTable& t, const Triple& triple) {
  if (t.empty()) throw UsageError("table is empty");
  if (!validate(triple)) {
    throw UsageError("not a generating triple: " + to_string(triple));
  }
  return phases_for(t, t.locate(HingeAngle::canonical(triple)));
}

int run(int argc, const char* const* argv) {
  CLI::App app{"Exact incremental discretized rotation of disks and images"};
  app.require_subcommand(1);

  std::int64_t gen_m = -1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-table",
                                 "Build the hinge-angle table for radius m "
                                 "and write it to a file");
  gen->add_option("--m", gen_m, "disk radius")->required();
  gen->add_option("--out", gen_out,
                  "output path (default: m<m>.hinge in $HINGEROT_TABLE_DIR "
                  "or the current directory)");

  TableOptions list_t;
  auto* list = app.add_subcommand(
      "list", "Print every hinge angle: index, triple, degrees");
  list->add_option("--m", list_t.m, "disk radius");
  list->add_option("--table", list_t.table_path, "table file to read");

  RotateOptions rot;
  auto* rotate = app.add_subcommand(
      "rotate",
      "Rotate a PGM image to one exact stop of the hinge sweep. Exactly one "
      "of --hinge-index (stop ON hinge n, 0-based; a positive multiple of "
      "the table size runs whole turns and restores the input), --degrees "
      "(the interval containing that angle), or --triple (exact angle "
      "lookup) selects the target.");
  rotate->add_option("--in", rot.in_path, "input PGM (P2 or P5)")->required();
  rotate->add_option("--out", rot.out_path, "output PGM")->required();
  rotate->add_option("--m", rot.table.m, "disk radius (default: smallest fit)");
  rotate->add_option("--table", rot.table.table_path, "table file to read");
  rotate->add_option("--hinge-index", rot.hinge_index, "stop on this hinge");
  rotate->add_option("--degrees", rot.degrees, "stop inside this angle");
  rotate->add_option("--triple", rot.triple_text, "stop at the angle of p,q,k");
  rotate->add_option("--pad", rot.pad, "output border rings (default 1)")
      ->check(CLI::NonNegativeNumber);
  rotate->add_option("--background", rot.background,
                     "fill value for empty cells (default 0)")
      ->check(CLI::Range(0, 255));

  SweepOptions sw;
  auto* sweep = app.add_subcommand(
      "sweep",
      "Emit the full turn as numbered PGM frames: frame_000000.pgm is the "
      "input configuration, then one frame per --frame-stride phases (the "
      "final phase is always emitted; it equals the input).");
  sweep->add_option("--in", sw.in_path, "input PGM (P2 or P5)")->required();
  sweep->add_option("--out-dir", sw.out_dir, "frame output directory")
      ->required();
  sweep->add_option("--m", sw.table.m, "disk radius (default: smallest fit)");
  sweep->add_option("--table", sw.table.table_path, "table file to read");
  sweep->add_option("--frame-stride", sw.frame_stride,
                    "emit every k-th phase (default 1)");
  sweep->add_option("--pad", sw.pad, "output border rings (default 1)")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--background", sw.background,
                    "fill value for empty cells (default 0)")
      ->check(CLI::Range(0, 255));

  TableOptions ver_t;
  auto* verify = app.add_subcommand(
      "verify",
      "Run the exactness suites at radius m: per-phase agreement with the "
      "pointwise-exact map, preimage bound, full-turn closure, lossless "
      "image round trip. Exit 0 iff every suite passes.");
  verify->add_option("--m", ver_t.m, "disk radius");
  verify->add_option("--table", ver_t.table_path, "table file to read");

  TableOptions stat_t;
  auto* stats = app.add_subcommand(
      "stats", "Print table and sweep statistics as key=value lines");
  stats->add_option("--m", stat_t.m, "disk radius");
  stats->add_option("--table", stat_t.table_path, "table file to read");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return run_gen_table(gen_m, gen_out);
    if (list->parsed()) return run_list(list_t);
    if (rotate->parsed()) return run_rotate(rot);
    if (sweep->parsed()) return run_sweep(sw);
    if (verify->parsed()) return run_verify(ver_t);
    if (stats->parsed()) return run_stats(stat_t);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0; every parse error is usage
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const TableError& e) {
    std::cerr << "error: invalid table: " << e.what() << '\n';
    return 2;
  } catch (const PgmError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace hingerot::cli
