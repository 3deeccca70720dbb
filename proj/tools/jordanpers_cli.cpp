// jordanpers: batch front-end for Jordan-type invariants of persistence
// modules. Reads module and certificate files in the JSON schema described
// in the README, runs the requested computation, writes text or JSON.
//
// Exit codes: 0 success, 1 validation failure, 2 schema/usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "jordanpers/distances.hpp"
#include "jordanpers/io.hpp"
#include "jordanpers/jordan.hpp"
#include "jordanpers/module.hpp"
#include "jordanpers/multirank.hpp"

using namespace jordanpers;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitSchema = 2;

struct Options {
  std::uint64_t prime = 0;  // 0: fall back to env, then the file, then default
  std::string output;
  std::string format = "text";
  std::string slices;
  bool strict_slices = false;
  std::uint64_t seed = 1;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw SchemaError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty() || opt.output == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.output);
  if (!out.good()) throw SchemaError("cannot write file: " + opt.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::optional<std::uint64_t> prime_override(const Options& opt) {
  if (opt.prime != 0) return opt.prime;
  if (const char* env = std::getenv("JORDANPERS_PRIME")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw SchemaError("JORDANPERS_PRIME is not a number");
    }
  }
  return std::nullopt;
}

ParsedInput load_module(const std::string& path, const Options& opt) {
  return parse_module_text(slurp(path), prime_override(opt));
}

// Slice resolution order: --slices (inline JSON, a file path, or the word
// "norm"), then the file's own slices, then the canonical default (norm
// slices for grids, singletons for zigzags).
SliceSequence resolve_slices(const ParsedInput& parsed, const Options& opt) {
  const Poset& poset = parsed.module.poset();
  if (!opt.slices.empty()) {
    if (opt.slices == "norm") return norm_slices(poset);
    if (opt.slices.front() == '[' || opt.slices.front() == '{')
      return parse_slices_text(opt.slices, poset);
    return parse_slices_text(slurp(opt.slices), poset);
  }
  if (parsed.slices) return *parsed.slices;
  if (poset.is_grid()) return norm_slices(poset);
  if (poset.is_zigzag()) {
    std::vector<std::vector<Point>> singles;
    for (int i = 1; i <= poset.zigzag_n(); ++i) singles.push_back({Point{i}});
    return SliceSequence(std::move(singles));
  }
  throw SchemaError("general-poset modules need an explicit slice sequence "
                    "(file field \"slices\" or --slices)");
}

int require_valid(const PersModule& m, const char* what) {
  const auto rep = validate(m);
  if (!rep.ok) {
    std::cerr << what << ": " << rep.describe() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

std::vector<int> parse_shape(const std::string& s) {
  std::vector<int> shape;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      shape.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw SchemaError("--shape: not an integer: '" + tok + "'");
    }
  }
  if (shape.empty()) throw SchemaError("--shape: empty");
  return shape;
}

int cmd_validate(const std::string& file, const Options& opt) {
  const auto parsed = load_module(file, opt);
  const auto rep = validate(parsed.module);
  std::vector<std::string> warnings;
  if (parsed.slices)
    warnings = validate_slices(parsed.module.poset(), parsed.slices->all(),
                               opt.strict_slices);
  if (opt.format == "json") {
    emit(opt, validation_report_to_json(rep, warnings));
  } else {
    std::ostringstream os;
    os << (rep.ok ? "ok" : rep.describe()) << '\n';
    for (const auto& w : warnings) os << "warning: " << w << '\n';
    emit(opt, os.str());
  }
  return rep.ok ? kExitOk : kExitValidation;
}

int cmd_jordan_type(const std::string& file, const Options& opt) {
  const auto parsed = load_module(file, opt);
  if (int rc = require_valid(parsed.module, "module")) return rc;
  const auto s = resolve_slices(parsed, opt);
  const auto jt = jordan_type(parsed.module, s);
  if (opt.format == "json") {
    emit(opt, jordan_type_to_json(jt));
  } else {
    std::ostringstream os;
    os << "Jt = (";
    for (std::size_t i = 0; i < jt.counts.size(); ++i)
      os << (i ? ", " : "") << jt.counts[i];
    os << ")";
    emit(opt, os.str());
  }
  return kExitOk;
}

int cmd_multirank(const std::string& file, const Options& opt) {
  const auto parsed = load_module(file, opt);
  if (int rc = require_valid(parsed.module, "module")) return rc;
  const auto r = R_vector(parsed.module);
  if (opt.format == "json") {
    emit(opt, multirank_to_json(r));
  } else {
    std::ostringstream os;
    os << "R(M), n = " << r.n << "\n" << r.render_triangle() << "flat:";
    for (auto v : r.flatten()) os << ' ' << v;
    emit(opt, os.str());
  }
  return kExitOk;
}

int cmd_barcode(const std::string& file, const Options& opt) {
  const auto parsed = load_module(file, opt);
  if (int rc = require_valid(parsed.module, "module")) return rc;
  const auto bc = barcode_from_R(parsed.module);
  if (opt.format == "json") {
    emit(opt, barcode_to_json(bc));
  } else {
    std::ostringstream os;
    if (bc.multiplicities.empty()) os << "(empty barcode)\n";
    for (const auto& [ij, mult] : bc.multiplicities)
      os << '[' << ij.first << ", " << ij.second << "] x " << mult << '\n';
    emit(opt, os.str());
  }
  return kExitOk;
}

int cmd_filtered_rank(const std::string& file, const Options& opt) {
  const auto parsed = load_module(file, opt);
  if (int rc = require_valid(parsed.module, "module")) return rc;
  const auto s = resolve_slices(parsed, opt);
  const auto tables = filtered_rank(parsed.module, s);
  if (opt.format == "json") {
    emit(opt, filtered_rank_to_json(tables, parsed.module.poset()));
  } else {
    std::ostringstream os;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      os << "degree " << i << ":\n";
      for (const auto& [pq, v] : tables[i].entries())
        os << "  (" << point_to_string(pq.first) << ") -> ("
           << point_to_string(pq.second) << "): " << v << '\n';
    }
    emit(opt, os.str());
  }
  return kExitOk;
}

int cmd_erosion(const std::string& file_a, const std::string& file_b,
                const Options& opt) {
  const auto pa = load_module(file_a, opt);
  const auto pb = load_module(file_b, opt);
  if (int rc = require_valid(pa.module, "first module")) return rc;
  if (int rc = require_valid(pb.module, "second module")) return rc;
  const auto s = resolve_slices(pa, opt);
  const auto profile = erosion_profile_at_S(pa.module, pb.module, s);
  ExtNat total = ExtNat::of(0);
  for (const auto& de : profile) total = std::max(total, de.result.value);
  if (opt.format == "json") {
    emit(opt, erosion_report_to_json(profile, total));
  } else {
    std::ostringstream os;
    os << "d_E = " << to_string(total) << '\n';
    for (const auto& de : profile)
      os << "  degree " << de.degree << ": " << to_string(de.result.value) << '\n';
    emit(opt, os.str());
  }
  return kExitOk;
}

int cmd_stability(const std::string& file_a, const std::string& file_b,
                  const std::string& cert_file, const Options& opt) {
  const auto pa = load_module(file_a, opt);
  const auto pb = load_module(file_b, opt);
  if (int rc = require_valid(pa.module, "first module")) return rc;
  if (int rc = require_valid(pb.module, "second module")) return rc;
  const auto s = resolve_slices(pa, opt);
  const auto cert = parse_certificate_text(slurp(cert_file), pa.module, pb.module);
  const auto rep = check_stability(pa.module, pb.module, s, cert);
  if (opt.format == "json") {
    emit(opt, stability_report_to_json(rep));
  } else {
    std::ostringstream os;
    os << "d_L = " << rep.d_l << " <= d_E = " << to_string(rep.d_e)
       << " <= epsilon = " << rep.epsilon << ": "
       << (rep.chain_ok ? "OK" : "FAIL");
    emit(opt, os.str());
  }
  return rep.chain_ok ? kExitOk : kExitValidation;
}

int cmd_landscape(const std::string& file, int degree, int k_max,
                  const Options& opt) {
  const auto parsed = load_module(file, opt);
  if (int rc = require_valid(parsed.module, "module")) return rc;
  const auto s = resolve_slices(parsed, opt);
  const JordanModuleFamily fam(parsed.module, s);
  if (degree < 0 || degree >= static_cast<int>(s.count()))
    throw SchemaError("--degree must be in 0..n-1");
  if (k_max <= 0) {
    std::size_t dmax = 1;
    for (const auto& x : fam.eval_window()) dmax = std::max(dmax, fam.ambient_dim(x));
    k_max = static_cast<int>(dmax);
  }
  const auto l = landscape(fam.rank_table(degree), k_max);
  std::ostringstream os;
  l.to_csv(os);
  emit(opt, os.str());
  return kExitOk;
}

int cmd_generate(const std::string& kind, const std::string& shape_str, int n,
                 std::string orientation, int max_dim, int bars, int from,
                 int to, const Options& opt) {
  const std::uint64_t prime = prime_override(opt).value_or(kDefaultPrime);
  check_prime(prime);
  std::mt19937_64 gen(opt.seed);

  auto random_orientation = [&](int len) {
    std::string o;
    for (int i = 0; i + 1 < len; ++i) o += (gen() & 1) ? 'B' : 'F';
    return o;
  };

  if (kind == "grid") {
    if (shape_str.empty()) throw SchemaError("generate grid: --shape is required");
    const auto g = Poset::make_grid(parse_shape(shape_str));
    const auto m = random_module(g, max_dim, opt.seed, prime);
    const auto s = norm_slices(g);
    emit(opt, module_to_json_text(m, &s));
    return kExitOk;
  }
  if (kind == "zigzag" || kind == "planted" || kind == "interval") {
    if (n < 1) throw SchemaError("generate: --n is required and must be >= 1");
    if (orientation.empty()) orientation = random_orientation(n);
    const auto z = Poset::make_zigzag(n, orientation);
    if (kind == "zigzag") {
      emit(opt, module_to_json_text(random_module(z, max_dim, opt.seed, prime)));
      return kExitOk;
    }
    if (kind == "interval") {
      if (from < 1 || to < from || to > n)
        throw SchemaError("generate interval: need 1 <= --from <= --to <= n");
      emit(opt, module_to_json_text(interval_module(z, from, to, prime)));
      return kExitOk;
    }
    const auto planted = random_bars(n, bars, gen());
    const auto m = random_conjugation(interval_sum_module(z, planted, prime), gen());
    emit(opt, module_to_json_text(m));
    return kExitOk;
  }
  throw SchemaError("generate: unknown kind '" + kind +
                    "' (expected grid, zigzag, interval or planted)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan-type invariants of persistence modules"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--prime", opt.prime,
                 "prime modulus override (also env JORDANPERS_PRIME)");
  app.add_option("--output,-o", opt.output, "output file (default: stdout)");
  app.add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--slices", opt.slices,
                 "slice sequence: inline JSON, a file, or 'norm'");
  app.add_flag("--strict-slices", opt.strict_slices,
               "also report the advisory slice conditions");
  app.add_option("--seed", opt.seed, "random seed for generate");

  std::string file_a, file_b, cert_file, kind, shape, orientation;
  int n = 0, max_dim = 3, bars = 4, from = 0, to = 0, degree = 0, k_max = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check the functor laws");
  validate_cmd->add_option("file", file_a)->required();

  auto* jt_cmd = app.add_subcommand("jordan-type", "Jordan type at the slices");
  jt_cmd->add_option("file", file_a)->required();

  auto* mr_cmd = app.add_subcommand("multirank", "R-vector of a zigzag module");
  mr_cmd->add_option("file", file_a)->required();

  auto* bc_cmd = app.add_subcommand("barcode", "barcode of a zigzag module");
  bc_cmd->add_option("file", file_a)->required();

  auto* fr_cmd = app.add_subcommand("filtered-rank", "Jordan filtered rank tables");
  fr_cmd->add_option("file", file_a)->required();

  auto* er_cmd = app.add_subcommand("erosion", "erosion distance at the slices");
  er_cmd->add_option("fileA", file_a)->required();
  er_cmd->add_option("fileB", file_b)->required();

  auto* st_cmd = app.add_subcommand("stability", "certified stability chain");
  st_cmd->add_option("fileA", file_a)->required();
  st_cmd->add_option("fileB", file_b)->required();
  st_cmd->add_option("cert", cert_file)->required();

  auto* ls_cmd = app.add_subcommand("landscape", "landscape CSV of one degree");
  ls_cmd->add_option("file", file_a)->required();
  ls_cmd->add_option("--degree", degree, "Jordan module degree (default 0)");
  ls_cmd->add_option("--k-max", k_max, "largest landscape level");

  auto* gen_cmd = app.add_subcommand("generate", "write a module file");
  gen_cmd->add_option("kind", kind, "grid | zigzag | interval | planted")->required();
  gen_cmd->add_option("--shape", shape, "grid shape, e.g. 2,1");
  gen_cmd->add_option("--n", n, "zigzag length");
  gen_cmd->add_option("--orientation", orientation, "F/B string (default: random)");
  gen_cmd->add_option("--max-dim", max_dim, "largest pointwise dimension");
  gen_cmd->add_option("--bars", bars, "bar count for planted modules");
  gen_cmd->add_option("--from", from, "interval start");
  gen_cmd->add_option("--to", to, "interval end");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) return cmd_validate(file_a, opt);
    if (jt_cmd->parsed()) return cmd_jordan_type(file_a, opt);
    if (mr_cmd->parsed()) return cmd_multirank(file_a, opt);
    if (bc_cmd->parsed()) return cmd_barcode(file_a, opt);
    if (fr_cmd->parsed()) return cmd_filtered_rank(file_a, opt);
    if (er_cmd->parsed()) return cmd_erosion(file_a, file_b, opt);
    if (st_cmd->parsed()) return cmd_stability(file_a, file_b, cert_file, opt);
    if (ls_cmd->parsed()) return cmd_landscape(file_a, degree, k_max, opt);
    if (gen_cmd->parsed())
      return cmd_generate(kind, shape, n, orientation, max_dim, bars, from, to, opt);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const OverlappingSlices& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InvalidCertificate& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  }
  return kExitSchema;
}
