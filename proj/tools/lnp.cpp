// Command line front end: build algebra descriptors, emit invariant and
// distinguishability tables, run the verification suite.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "lnp/report.hpp"
#include "lnp/structure.hpp"

namespace {

int write_out(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return 0;
  }
  std::ofstream os(out_file);
  if (!os) {
    std::cerr << "cannot open " << out_file << "\n";
    return 1;
  }
  os << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for deformed preprojective algebras of type L"};
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "emit an algebra descriptor");
  int32_t b_n = 2, b_j = 0, b_char = 2;
  std::vector<int32_t> b_pcoeffs;
  std::string b_out;
  build->add_option("--n", b_n, "number of vertices")->required();
  build->add_option("--j", b_j, "deformation X^{2j}")->required();
  build->add_option("--char", b_char, "field characteristic (prime)");
  build->add_option("--p-coeffs", b_pcoeffs,
                    "explicit deformation coefficients (overrides --j)");
  build->add_option("--out", b_out, "output file (default stdout)");

  // invariants
  auto* inv = app.add_subcommand("invariants", "emit the invariant table");
  int32_t i_n = 2, i_imax = -1, i_famax = 6;
  std::string i_format = "csv";
  inv->add_option("--n", i_n, "number of vertices")->required();
  inv->add_option("--i-max", i_imax,
                  "largest i (default: stabilization index)");
  inv->add_option("--format", i_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  inv->add_option("--full-algebra-max", i_famax,
                  "confirm against the full algebra up to this n");

  // distinguish
  auto* dst = app.add_subcommand("distinguish",
                                 "pairwise distinguishability report");
  int32_t d_n = 2;
  std::string d_format = "csv";
  dst->add_option("--n", d_n, "number of vertices")->required();
  dst->add_option("--format", d_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  // verify
  auto* ver = app.add_subcommand("verify", "run the verification suite");
  int32_t v_nmax = 3, v_famax = 6;
  ver->add_option("--n-max", v_nmax, "largest n")->required();
  ver->add_option("--full-algebra-max", v_famax,
                  "full-algebra confirmation bound");

  // structure
  auto* str = app.add_subcommand("structure", "emit a structure report");
  int32_t s_n = 2, s_j = 0;
  str->add_option("--n", s_n, "number of vertices")->required();
  str->add_option("--j", s_j, "deformation X^{2j}")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      lnp::DeformationPoly p;
      if (!b_pcoeffs.empty())
        p.coeffs = b_pcoeffs;
      else
        p = lnp::DeformationPoly::monomial(2 * b_j);
      const lnp::Algebra a =
          lnp::build_algebra(b_n, p, lnp::Field(b_char));
      return write_out(a.descriptor_json(), b_out);
    }
    if (inv->parsed()) {
      const int32_t imax =
          i_imax >= 1 ? i_imax : lnp::stabilization_index(i_n);
      const auto table = lnp::invariant_table(i_n, imax, i_famax);
      return write_out(i_format == "json" ? lnp::invariant_json(table)
                                          : lnp::invariant_csv(table),
                       "");
    }
    if (dst->parsed()) {
      const auto rep = lnp::distinguish(d_n);
      return write_out(d_format == "json" ? lnp::distinguish_json(rep)
                                          : lnp::distinguish_csv(rep),
                       "");
    }
    if (ver->parsed()) {
      const auto results = lnp::verify_suite(v_nmax, v_famax);
      bool all = true;
      for (const auto& r : results) {
        all = all && r.pass;
        std::printf("%s %-26s %8.2fs  %s\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.seconds, r.detail.c_str());
      }
      std::printf("%s: %zu checks\n", all ? "OK" : "FAILED", results.size());
      return all ? 0 : 1;
    }
    if (str->parsed()) {
      const lnp::Algebra a = lnp::build_algebra(
          s_n, lnp::DeformationPoly::monomial(2 * s_j), lnp::Field(2));
      return write_out(lnp::to_json_string(lnp::structure_report(a)), "");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
