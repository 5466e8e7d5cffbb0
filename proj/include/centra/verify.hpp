#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "centra/canonical_forms.hpp"
#include "centra/centralizer.hpp"
#include "centra/commutant_oracle.hpp"

namespace centra {

enum class CheckStatus { Pass, Fail, Skip };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 8;
  std::size_t oracle_max_n = kDefaultOracleMaxN;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
  const Check* first_failure() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return &c;
    return nullptr;
  }
};

namespace detail {

inline Check make_check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

}  // namespace detail

/// Runs every structural identity for one spec and records one check each.
template <ExactField F>
VerifyReport verify_spec(const CanonicalSpec<F>& spec, const VerifyOptions& opts = {}) {
  using detail::make_check;
  VerifyReport report;
  report.seed = opts.seed;
  auto& out = report.checks;
  const auto& segre = spec.segre;
  const std::size_t s = spec.s();

  const auto g = gj_form(spec);
  const auto w = weyr_form(spec);
  const auto perm = weyr_permutation(spec);

  out.push_back(make_check("weyr_conjugation", conjugate_by_permutation(g, perm) == w, "P^-1 G P == W"));

  const auto tau = weyr_characteristic(w, spec.p);
  out.push_back(make_check("weyr_characteristic", tau == segre.tau,
                           "kernel tau=" + format_partition(tau) + " conjugate=" + format_partition(segre.tau)));

  {
    const auto dn = dn_split(spec);
    const bool sums = dn.d + dn.n == g;
    const bool commute = (dn.d * dn.n) == (dn.n * dn.d);
    if (spec.kind == FormKind::FirstKind)
      out.push_back(make_check("dn_split", sums && commute, commute ? "D+N=G, DN=ND" : "DN != ND"));
    else
      out.push_back(make_check("dn_split", sums, std::string("D+N=G, DN") + (commute ? "=" : "!=") + "ND"));
  }

  {
    const auto pg = eval_poly_at_matrix(spec.p, g);
    const std::size_t top = segre.alpha.front();
    const bool below = matrix_power(pg, top - 1).is_zero();
    const bool at = matrix_power(pg, top).is_zero();
    out.push_back(make_check("minimal_polynomial", at && !below,
                             "p^" + std::to_string(top) + "(G)" + (at ? "=0" : "!=0") + ", p^" +
                                 std::to_string(top - 1) + "(G)" + (below ? "=0" : "!=0")));
  }

  const auto formulas = centralizer_dim_formulas(segre.alpha, s);
  out.push_back(make_check("dimension_formulas", formulas.segre == formulas.weyr,
                           "segre=" + std::to_string(formulas.segre) + " weyr=" + std::to_string(formulas.weyr)));

  const auto zg = zg_basis(spec);
  {
    std::size_t bad = 0;
    for (const auto& x : zg.basis)
      if (!commutator(g, x).is_zero()) ++bad;
    out.push_back(make_check("zg_commutes", bad == 0, std::to_string(bad) + " of " + std::to_string(zg.dim()) +
                                                          " basis elements fail"));
    const std::size_t rk = basis_rank(zg.basis);
    out.push_back(make_check("zg_basis", zg.dim() == formulas.segre && rk == zg.dim(),
                             "size=" + std::to_string(zg.dim()) + " rank=" + std::to_string(rk)));
  }

  if (spec.n() <= opts.oracle_max_n) {
    const std::size_t dim = commutant_dim(g, {opts.oracle_max_n, Execution::Parallel});
    out.push_back(make_check("oracle_dimension", dim == zg.dim(), "oracle nullity=" + std::to_string(dim)));
  } else {
    out.push_back({"oracle_dimension", CheckStatus::Skip, "n=" + std::to_string(spec.n()) + " exceeds cap"});
  }

  const auto zw = zw_basis(spec);
  {
    std::size_t bad = 0;
    for (const auto& k : zw.basis)
      if (!commutator(w, k).is_zero()) ++bad;
    out.push_back(make_check("zw_commutes", bad == 0, std::to_string(bad) + " of " + std::to_string(zw.dim()) +
                                                          " basis elements fail"));
    const auto rec = zw_basis_recursive(spec);
    out.push_back(make_check("zw_recursive_span", same_span(zw.basis, rec.basis),
                             "conjugated vs recursive construction"));
  }

  {
    Rng rng(opts.seed);
    std::size_t bad = 0;
    for (std::size_t t = 0; t < opts.samples; ++t) {
      const auto k = sample_element(zw, random_coefficients(spec.field(), zw.dim(), rng));
      const auto direct = determinant(k);
      if (zw_determinant(k, spec) != direct || zw_grouped_determinant(k, spec) != direct) ++bad;
    }
    out.push_back(make_check("determinant_product", bad == 0,
                             std::to_string(opts.samples - bad) + "/" + std::to_string(opts.samples) +
                                 " samples agree (seed " + std::to_string(opts.seed) + ")"));
  }
  return report;
}

inline nlohmann::json report_to_json(const VerifyReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return {{"seed", report.seed}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

}  // namespace centra
