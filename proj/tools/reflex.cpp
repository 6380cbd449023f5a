#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reflex/reflex.hpp"

namespace {

using namespace reflex;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

std::string nu_text(const IntVector& nu) {
  if (is_zero(nu)) return "0";
  return "(" + to_string(nu, ",") + ")";
}

int cmd_analyze(const std::string& path) {
  const LatticePolytope p = read_polytope(path);
  const bool reflexive = is_reflexive(p), simplicial = is_simplicial(p);
  std::cout << "dimension " << p.dim() << "\n";
  std::cout << "vertices " << p.num_vertices() << "\n";
  std::cout << "facets " << p.facets().size() << "\n";
  std::string summary = reflexive ? "reflexive" : "not reflexive";
  if (!simplicial) {
    std::cout << summary << "; not simplicial\n";
    return kOk;
  }
  summary += " simplicial";
  if (is_smooth_fano(p)) summary += " smooth";
  const IntVector nu = vertex_sum(p);
  const NuKind kind = nu_kind(p);
  summary += "; nu=" + nu_text(nu);
  if (kind != NuKind::zero) summary += std::string(" ") + to_string(kind);
  if (reflexive) summary += "; picard=" + std::to_string(picard_number(p));
  std::cout << summary << "\n";
  if (!reflexive) return kOk;

  const auto special = special_facet_indices(p);
  std::cout << "special-facets " << special.size() << "\n";
  const bool extremal = p.num_vertices() + 1 == 3 * p.dim();
  for (std::size_t k : special) {
    const SliceDistribution s = hyperplane_distribution(p, k);
    std::cout << "FACET " << k << " SLICES";
    for (auto it = s.counts.rbegin(); it != s.counts.rend(); ++it) std::cout << " " << it->first << ":" << it->second;
    std::cout << " NU " << s.nu_level;
    if (extremal) std::cout << " CASE " << to_string(classify_case(p, k));
    std::cout << "\n";
  }
  return kOk;
}

int cmd_construct(const std::string& name, std::optional<std::size_t> dim) {
  LatticePolytope p = construct(name);
  if (dim) {
    if (*dim < p.dim() || (*dim - p.dim()) % 2 != 0)
      throw DomainError("construct: --dim must exceed the base dimension " + std::to_string(p.dim()) +
                        " by an even number");
    const LatticePolytope v2 = construct(Named::v2);
    while (p.dim() < *dim) p = free_sum(p, v2);
  }
  std::cout << format_poly(p);
  return kOk;
}

int cmd_enumerate(const std::string& outdir) {
  std::filesystem::create_directories(outdir);
  const auto classes = enumerate_reflexive_polygons();
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const auto file = std::filesystem::path(outdir) / ("polygon-" + std::to_string(k + 1) + ".poly");
    write_text(file.string(), format_poly(classes[k].representative));
  }
  std::cout << classes.size() << " classes written to " << outdir << "\n";
  return kOk;
}

int cmd_verify(std::optional<std::size_t> dim, std::optional<std::size_t> casagrande, bool polygons) {
  const int chosen = (dim ? 1 : 0) + (casagrande ? 1 : 0) + (polygons ? 1 : 0);
  if (chosen != 1) throw DomainError("verify: give exactly one of --dim, --casagrande, --polygons");
  VerificationReport r;
  if (dim)
    r = verify_theorem(*dim);
  else if (casagrande)
    r = verify_casagrande(*casagrande);
  else
    r = verify_polygon_landscape();
  std::cout << r.text();
  return r.passed() ? kOk : kFail;
}

int cmd_normal_form(const std::string& path) {
  std::cout << format_normal_form(normal_form(read_polytope(path)));
  return kOk;
}

int cmd_dual(const std::string& path) {
  const RationalPolytope q = dual(read_polytope(path));
  std::cout << format_poly(q.dim(), q.vertices());
  return kOk;
}

int cmd_iso(const std::string& a, const std::string& b) {
  const bool same = is_isomorphic(read_polytope(a), read_polytope(b));
  std::cout << (same ? "YES" : "NO") << "\n";
  return same ? kOk : kFail;
}

int cmd_section(const std::string& path, std::size_t i, std::size_t j, std::size_t k) {
  const LatticePolytope p = read_polytope(path);
  for (std::size_t x : {i, j, k})
    if (x >= p.num_vertices()) throw DomainError("section: vertex index " + std::to_string(x) + " out of range");
  std::cout << format_poly(section_2d(p, p.vertex(i), p.vertex(j), p.vertex(k)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice polytope analysis for simplicial reflexive polytopes"};
  app.require_subcommand(1);

  std::string path, path_b, name, outdir;
  std::optional<std::size_t> dim, casagrande;
  bool polygons = false;
  std::size_t vi = 0, vj = 0, vk = 0;

  auto* analyze = app.add_subcommand("analyze", "Predicates, vertex sum and special facets of a polytope file");
  analyze->add_option("path", path)->required();
  auto* construct_cmd = app.add_subcommand("construct", "Print a named polytope: seg v2 tv2 e1 e2 q3 q3p");
  construct_cmd->add_option("name", name)->required();
  construct_cmd->add_option("--dim", dim, "Free-sum copies of v2 up to this dimension");
  auto* enumerate = app.add_subcommand("enumerate-polygons", "Write the 16 reflexive polygons to a directory");
  enumerate->add_option("outdir", outdir)->required();
  auto* verify = app.add_subcommand("verify", "Run a verification report");
  verify->add_option("--dim", dim, "Classification list in dimension 3..7");
  verify->add_option("--casagrande", casagrande, "Extremal case in even dimension 2..8");
  verify->add_flag("--polygons", polygons, "Polygon enumeration and naming");
  auto* nf = app.add_subcommand("normal-form", "Print the normal form as a polytope file");
  nf->add_option("path", path)->required();
  auto* dual_cmd = app.add_subcommand("dual", "Print the dual polytope");
  dual_cmd->add_option("path", path)->required();
  auto* iso = app.add_subcommand("iso", "Test unimodular equivalence; prints YES or NO");
  iso->add_option("a", path)->required();
  iso->add_option("b", path_b)->required();
  auto* section = app.add_subcommand("section", "Section by the plane through three vertices (0-based indices)");
  section->add_option("path", path)->required();
  section->add_option("i", vi)->required();
  section->add_option("j", vj)->required();
  section->add_option("k", vk)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(path);
    if (*construct_cmd) return cmd_construct(name, dim);
    if (*enumerate) return cmd_enumerate(outdir);
    if (*verify) return cmd_verify(dim, casagrande, polygons);
    if (*nf) return cmd_normal_form(path);
    if (*dual_cmd) return cmd_dual(path);
    if (*iso) return cmd_iso(path, path_b);
    if (*section) return cmd_section(path, vi, vj, vk);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
