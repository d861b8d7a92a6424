// burau-lab: exact computations with the integral Burau representation and
// machine checks of the structure of braid-group congruence quotients.
//
// All reports go to stdout as JSON; logs go to stderr.
// Exit codes: 0 verified/true, 1 refuted/false, 2 skipped/error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include "burau/braid.hpp"
#include "burau/errors.hpp"
#include "burau/json_io.hpp"
#include "burau/lifting.hpp"
#include "burau/modmatrix.hpp"
#include "burau/verify.hpp"

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitSkipped = 2;

burau::VerifyOptions make_options(const std::string& cache_dir_flag) {
  burau::VerifyOptions opts;
  if (!cache_dir_flag.empty()) {
    opts.cache_dir = cache_dir_flag;
  } else if (const char* env = std::getenv("BURAU_CACHE")) {
    if (*env) opts.cache_dir = env;
  }
  return opts;
}

int check_envelope(int n, std::uint64_t level, bool allow_big) {
  if (allow_big || burau::within_default_envelope(n, level)) return kExitVerified;
  std::cerr << "request (n=" << n << ", level=" << level
            << ") is outside the default desk-scale envelope; pass --allow-big to proceed\n";
  return kExitSkipped;
}

int report_exit(const burau::VerificationReport& report) {
  std::cout << report.to_json().dump(2) << "\n";
  if (report.verified()) return kExitVerified;
  if (report.refuted()) return kExitRefuted;
  return kExitSkipped;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Burau representation toolkit and congruence-quotient verifier"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_version_flag("--version", burau::kToolVersion);

  std::string cache_dir;
  bool allow_big = false;
  app.add_option("--cache-dir", cache_dir, "directory for enumerated group caches")
      ->envname("BURAU_CACHE");
  app.add_flag("--allow-big", allow_big, "allow requests outside the default envelope");

  // mat: evaluate a braid word
  auto* mat = app.add_subcommand("mat", "print the (reduced) Burau matrix of a braid word");
  int mat_n = 0;
  bool mat_reduced = false;
  std::string mat_word;
  mat->add_option("--n", mat_n, "number of strands")->required();
  mat->add_flag("--reduced", mat_reduced, "use the reduced representation");
  mat->add_option("word", mat_word, "whitespace-separated signed generator indices");

  // quotient
  auto* quot = app.add_subcommand("quotient", "enumerate the image of B_n mod l");
  int quot_n = 0;
  std::uint64_t quot_level = 0;
  bool quot_reduced = false;
  quot->add_option("--n", quot_n)->required();
  quot->add_option("--level", quot_level)->required();
  quot->add_flag("--reduced", quot_reduced);

  // verify with nested subcommands
  auto* verify = app.add_subcommand("verify", "run a named theorem check");
  verify->require_subcommand(1);

  auto* thm_a = verify->add_subcommand("thm-a", "quotient order and direct-product structure");
  int a_n = 0;
  std::uint64_t a_level = 0;
  bool a_reduced = false;
  thm_a->add_option("--n", a_n)->required();
  thm_a->add_option("--level", a_level)->required();
  thm_a->add_flag("--reduced", a_reduced);

  auto* thm_b = verify->add_subcommand("thm-b", "image of the congruence subgroup");
  int b_n = 0;
  std::uint64_t b_level = 0;
  thm_b->add_option("--n", b_n)->required();
  thm_b->add_option("--level", b_level)->required();

  auto* mult = verify->add_subcommand("mult", "kernel multiplicativity");
  int m_n = 0;
  std::uint64_t m_l = 0, m_m = 0;
  mult->add_option("--n", m_n)->required();
  mult->add_option("--l", m_l)->required();
  mult->add_option("--m", m_m)->required();

  auto* nonsplit = verify->add_subcommand("nonsplit", "section search over the mod-2^k extension");
  int ns_n = 0, ns_k = 0;
  bool ns_reduced = false;
  nonsplit->add_option("--n", ns_n)->required();
  nonsplit->add_option("--k", ns_k)->required();
  nonsplit->add_flag("--reduced", ns_reduced);

  // member
  auto* memb = app.add_subcommand("member", "test membership in the image of B_n[l]");
  int memb_n = 0;
  std::uint64_t memb_level = 0;
  std::string memb_file;
  memb->add_option("--n", memb_n)->required();
  memb->add_option("--level", memb_level)->required();
  memb->add_option("--matrix", memb_file, "matrix JSON file")->required();

  // lift
  auto* lift = app.add_subcommand("lift", "lift a residue matrix to the integral group");
  std::string lift_family;
  int lift_g = 0;
  std::uint64_t lift_modulus = 0;
  std::string lift_file;
  lift->add_option("--family", lift_family, "sp | stab | gamma")
      ->required()
      ->check(CLI::IsMember({"sp", "stab", "gamma"}));
  lift->add_option("--g", lift_g, "genus for sp/stab (ignored for gamma)");
  lift->add_option("--modulus", lift_modulus)->required();
  lift->add_option("--matrix", lift_file, "matrix JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const burau::VerifyOptions opts = make_options(cache_dir);

    if (mat->parsed()) {
      const burau::BraidWord w = burau::parse_word(mat_word, mat_n);
      const burau::IntMatrix m = mat_reduced ? burau::reduced_burau_matrix(w) : burau::burau_matrix(w);
      std::cout << burau::matrix_to_json(m).dump(2) << "\n";
      return kExitVerified;
    }

    if (quot->parsed()) {
      if (int rc = check_envelope(quot_n, quot_level, allow_big)) return rc;
      return report_exit(burau::quotient_report(quot_n, quot_level, quot_reduced, opts));
    }

    if (thm_a->parsed()) {
      if (int rc = check_envelope(a_n, a_level, allow_big)) return rc;
      return report_exit(burau::verify_theorem_a(a_n, a_level, a_reduced, opts));
    }
    if (thm_b->parsed()) {
      if (int rc = check_envelope(b_n, 2 * b_level, allow_big)) return rc;
      return report_exit(burau::verify_theorem_b(b_n, b_level, opts));
    }
    if (mult->parsed()) {
      const std::uint64_t lcm = m_l / std::gcd(m_l, m_m) * m_m;
      if (int rc = check_envelope(m_n, lcm, allow_big)) return rc;
      return report_exit(burau::verify_multiplicativity(m_n, m_l, m_m, opts));
    }
    if (nonsplit->parsed()) {
      if (int rc = check_envelope(ns_n, std::uint64_t(1) << ns_k, allow_big)) return rc;
      return report_exit(burau::verify_nonsplit(ns_n, ns_k, ns_reduced, opts));
    }

    if (memb->parsed()) {
      const burau::IntMatrix m = burau::read_matrix_file(memb_file);
      const burau::MemberResult res = burau::member(m, memb_n, memb_level);
      nlohmann::json out{{"tool_version", burau::kToolVersion},
                         {"claim", "member"},
                         {"params", {{"n", memb_n}, {"level", memb_level}}},
                         {"member", res.member},
                         {"explanation", res.explanation}};
      std::cout << out.dump(2) << "\n";
      return res.member ? kExitVerified : kExitRefuted;
    }

    if (lift->parsed()) {
      const burau::IntMatrix input = burau::read_matrix_file(lift_file);
      const burau::ModMatrix residue = burau::reduce(input, lift_modulus);
      burau::IntMatrix lifted;
      if (lift_family == "sp") {
        const int g = lift_g > 0 ? lift_g : input.dim() / 2;
        lifted = burau::sp_lift(residue, g);
      } else if (lift_family == "stab") {
        const int g = lift_g > 0 ? lift_g : input.dim() / 2;
        lifted = burau::stab_lift(residue, g);
      } else {
        lifted = burau::gamma_lift(residue, input.dim());
      }
      std::cout << burau::matrix_to_json(lifted).dump(2) << "\n";
      return kExitVerified;
    }
  } catch (const burau::capacity_error& e) {
    std::cerr << "skipped: " << e.what() << "\n";
    return kExitSkipped;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSkipped;
  }
  return kExitSkipped;
}
